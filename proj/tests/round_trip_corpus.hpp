#pragma once

#include <string>
#include <vector>

namespace testing {

inline const std::vector<std::string> kRoundTripCorpus = {
    "Z(2)",
    "Z(6)",
    "Z( 12 )",
    "M(2,Z(2))",
    "M(2, Z(3))",
    "T(2,Z(4))",
    "T(3,Z(2))",
    "M(2,Z(2)) x Z(9)",
    "Z(4)xZ(9)",
    "Z(2) x Z(3) x Z(5)",
    "Z(2) x (Z(3) x Z(5))",
    "(Z(2) x Z(3)) x Z(5)",
    "corner(Z(6),3)",
    "corner(M(2,Z(2)),[[1,0],[0,0]])",
    "corner(Z(4) x Z(9),(1,0))",
    "M(2,Z(2) x Z(3))",
    "T(2,M(2,Z(2)))",
    "M(2,M(2,Z(2)))",
    "corner(T(2,Z(2)),[[1,0],[0,0]])",
    "M(3,Z(2)) x T(2,Z(3))",
    "  Z(7)  x  corner( Z(6) , 4 ) ",
    "corner(corner(Z(12),9),9)",
};

} // namespace testing
