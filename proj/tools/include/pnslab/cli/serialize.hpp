#pragma once

// JSON and text forms of certificates, reports and classifications. JSON
// objects are key-sorted, so identical inputs give byte-identical output.

#include "pnslab/classify.hpp"

#include "json.hpp"

#include <string>

namespace pnslab::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "pns-lab/1";

Json to_json(const Witness& w);
Json to_json(const TheoremReport& r);
Json to_json(const FiniteRing& R, const PnsCertificate& c);
Json to_json(const FiniteRing& R, const DrazinCertificate& c);
Json to_json(const FiniteRing& R, const StarPnsCertificate& c);
Json to_json(const FiniteRing& R, const RingClassification& c);
Json to_json(const FiniteRing& R, const ElementSet& s);

// {"schema", "command", "arguments", "ring", "payload"}.
Json command_report(const std::string& command, const Json& arguments, const std::string& ring, Json payload);

std::string to_text(const TheoremReport& r);
std::string to_text(const FiniteRing& R, const PnsCertificate& c);
std::string to_text(const FiniteRing& R, const DrazinCertificate& c);
std::string to_text(const FiniteRing& R, const StarPnsCertificate& c);

} // namespace pnslab::cli
