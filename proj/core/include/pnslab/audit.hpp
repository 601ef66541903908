#pragma once

// Reconstruction of the worked examples on M(2, S) with transpose and on Z(6)
// with the identity involution. The oracle is the ground truth; textual
// claims that the oracle contradicts are flagged, never overridden.

#include "pnslab/report.hpp"

#include <vector>

namespace pnslab {

// Three reports: "Ex-6-20", "Rem-1", "Rem-2". Only "Rem-2" is whitelisted:
// its disputed claims set `discrepancy` instead of counting as violations.
std::vector<TheoremReport> audit_paper_examples();

} // namespace pnslab
