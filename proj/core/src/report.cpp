#include "pnslab/report.hpp"

namespace pnslab {

const char* to_string(ReportStatus status) {
    switch (status) {
    case ReportStatus::Verified: return "verified";
    case ReportStatus::Violated: return "violated";
    case ReportStatus::Vacuous: return "vacuous";
    }
    return "unknown";
}

const std::string* Witness::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

void TheoremReport::violation(Witness w) {
    ++violations;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(w));
}

void TheoremReport::finalize() {
    if (violations > 0)
        status = ReportStatus::Violated;
    else if (hypothesis_met == 0 || universe == 0)
        status = ReportStatus::Vacuous;
    else
        status = ReportStatus::Verified;
}

void TheoremReport::merge(const TheoremReport& other) {
    universe += other.universe;
    hypothesis_met += other.hypothesis_met;
    violations += other.violations;
    for (const auto& w : other.counterexamples)
        if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(w);
    for (const auto& w : other.evidence) evidence.push_back(w);
    for (const auto& n : other.notes) notes.push_back(n);
    discrepancy = discrepancy || other.discrepancy;
}

} // namespace pnslab
