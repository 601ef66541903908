#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pnslab {

enum class ReportStatus { Verified, Violated, Vacuous };
const char* to_string(ReportStatus status);

// Named intermediate values of one swept tuple, in insertion order.
struct Witness {
    std::vector<std::pair<std::string, std::string>> fields;

    Witness& add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Witness& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
    Witness& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
    Witness& add(std::string key, std::uint64_t value) { return add(std::move(key), std::to_string(value)); }
    Witness& add(std::string key, std::uint32_t value) { return add(std::move(key), std::to_string(value)); }

    const std::string* find(const std::string& key) const;
};

struct TheoremReport {
    static constexpr std::size_t kMaxCounterexamples = 25;

    std::string theorem_id;
    std::string ring;
    std::map<std::string, std::string> parameters;
    std::uint64_t universe = 0;       // tuples swept
    std::uint64_t hypothesis_met = 0; // tuples meeting the statement's hypotheses
    std::uint64_t violations = 0;
    ReportStatus status = ReportStatus::Vacuous;
    std::vector<Witness> counterexamples; // first kMaxCounterexamples violations
    std::vector<Witness> evidence;        // certificates and audited claims
    // Set when a result contradicts a whitelisted textual claim (audit only).
    bool discrepancy = false;
    bool whitelisted = false;
    std::vector<std::string> notes;

    void violation(Witness w);
    // violated if any violation, else vacuous if no tuple met the hypotheses.
    void finalize();
    // Folds the counts and counterexamples of another sweep over the same statement.
    void merge(const TheoremReport& other);
};

} // namespace pnslab
