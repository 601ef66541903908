#pragma once

#include "pnslab/ring.hpp"

#include <vector>

namespace pnslab {

// Z(6), Z(8), Z(12), Z(4)xZ(9), M(2,Z(2)), M(2,Z(3)), T(2,Z(2)), T(2,Z(4)),
// T(3,Z(2)), corner(Z(6),3), corner(M(2,Z(2)),[[1,0],[0,0]]).
std::vector<RingDescriptor> default_corpus();

} // namespace pnslab
