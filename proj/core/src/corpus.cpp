#include "pnslab/corpus.hpp"

namespace pnslab {

std::vector<RingDescriptor> default_corpus() {
    using D = RingDescriptor;
    using L = Literal;
    auto z = [](std::uint64_t n) { return D::zn(n); };
    auto diag10 = L::matrix({{L::integer(1), L::integer(0)}, {L::integer(0), L::integer(0)}});
    return {
        z(6),
        z(8),
        z(12),
        D::product(z(4), z(9)),
        D::matrix(2, z(2)),
        D::matrix(2, z(3)),
        D::upper_triangular(2, z(2)),
        D::upper_triangular(2, z(4)),
        D::upper_triangular(3, z(2)),
        D::corner(z(6), L::integer(3)),
        D::corner(D::matrix(2, z(2)), diag10),
    };
}

} // namespace pnslab
