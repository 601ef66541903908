#include "pnslab/cli/serialize.hpp"

#include <sstream>

namespace pnslab::cli {

namespace {

Json optional_element(const FiniteRing& R, const std::optional<Element>& e) {
    return e ? Json(R.format(*e)) : Json(nullptr);
}

} // namespace

Json to_json(const Witness& w) {
    Json j = Json::object();
    for (const auto& [k, v] : w.fields) j[k] = v;
    return j;
}

Json to_json(const TheoremReport& r) {
    Json j;
    j["theorem"] = r.theorem_id;
    j["ring"] = r.ring;
    j["parameters"] = r.parameters;
    j["universe"] = r.universe;
    j["hypothesis_met"] = r.hypothesis_met;
    j["violations"] = r.violations;
    j["status"] = to_string(r.status);
    j["counterexamples"] = Json::array();
    for (const auto& w : r.counterexamples) j["counterexamples"].push_back(to_json(w));
    j["evidence"] = Json::array();
    for (const auto& w : r.evidence) j["evidence"].push_back(to_json(w));
    j["discrepancy"] = r.discrepancy;
    j["whitelisted"] = r.whitelisted;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const FiniteRing& R, const PnsCertificate& c) {
    return {{"a", R.format(c.a)},
            {"n", c.n},
            {"x", R.format(c.x)},
            {"e", R.format(c.e)},
            {"k", c.k},
            {"path", to_string(c.path)},
            {"matches", c.matches},
            {"unit", optional_element(R, c.unit)},
            {"valid", c.valid}};
}

Json to_json(const FiniteRing& R, const DrazinCertificate& c) {
    return {{"a", R.format(c.a)},
            {"x", R.format(c.x)},
            {"flavor", to_string(c.flavor)},
            {"defect", R.format(c.defect)},
            {"k", c.k},
            {"pseudo_polar_idempotent", optional_element(R, c.pseudo_polar_idempotent)},
            {"matches", c.matches},
            {"valid", c.valid}};
}

Json to_json(const FiniteRing& R, const StarPnsCertificate& c) {
    return {{"pns", to_json(R, c.pns)},
            {"involution", c.involution},
            {"spectral_adjoint", R.format(c.spectral_adjoint)},
            {"projection", optional_element(R, c.projection)},
            {"routes_agree", c.routes_agree}};
}

Json to_json(const FiniteRing& R, const RingClassification& c) {
    Json j;
    for (const auto& [name, flag] : flag_list(c))
        j[name] = {{"value", flag->value}, {"witness", optional_element(R, flag->witness)}, {"detail", flag->detail}};
    j["uniform_n"] = c.uniform_n;
    return j;
}

Json to_json(const FiniteRing& R, const ElementSet& s) {
    Json j = Json::array();
    for (Element e : s) j.push_back(R.format(e));
    return j;
}

Json command_report(const std::string& command, const Json& arguments, const std::string& ring, Json payload) {
    return {{"schema", kSchemaVersion},
            {"command", command},
            {"arguments", arguments},
            {"ring", ring},
            {"payload", std::move(payload)}};
}

std::string to_text(const TheoremReport& r) {
    std::ostringstream out;
    out << r.theorem_id << " on " << r.ring << ": " << to_string(r.status) << "\n";
    for (const auto& [k, v] : r.parameters) out << "  " << k << " = " << v << "\n";
    out << "  universe " << r.universe << ", hypothesis met " << r.hypothesis_met << ", violations " << r.violations
        << "\n";
    if (r.whitelisted) out << "  whitelisted, discrepancy " << (r.discrepancy ? "true" : "false") << "\n";
    auto dump = [&](const char* label, const std::vector<Witness>& ws) {
        for (const auto& w : ws) {
            out << "  " << label << ":";
            for (const auto& [k, v] : w.fields) out << " " << k << "=" << v;
            out << "\n";
        }
    };
    dump("counterexample", r.counterexamples);
    dump("evidence", r.evidence);
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    return out.str();
}

std::string to_text(const FiniteRing& R, const PnsCertificate& c) {
    std::ostringstream out;
    out << "pns inverse of " << R.format(c.a) << " at n = " << c.n << ": x = " << R.format(c.x)
        << ", e = ax = " << R.format(c.e) << ", k = " << c.k << " (" << to_string(c.path)
        << ", valid " << (c.valid ? "yes" : "no") << ")\n";
    return out.str();
}

std::string to_text(const FiniteRing& R, const DrazinCertificate& c) {
    std::ostringstream out;
    out << to_string(c.flavor) << " inverse of " << R.format(c.a) << ": x = " << R.format(c.x) << ", defect "
        << R.format(c.defect) << ", k = " << c.k;
    if (c.pseudo_polar_idempotent) out << ", pseudo-polar idempotent " << R.format(*c.pseudo_polar_idempotent);
    out << " (valid " << (c.valid ? "yes" : "no") << ")\n";
    return out.str();
}

std::string to_text(const FiniteRing& R, const StarPnsCertificate& c) {
    std::ostringstream out;
    out << to_text(R, c.pns) << "involution " << c.involution << ": (ax)* = " << R.format(c.spectral_adjoint)
        << ", projection route " << (c.routes_agree ? "agrees" : "disagrees") << "\n";
    return out.str();
}

} // namespace pnslab::cli
