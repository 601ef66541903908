#pragma once

#include "pnslab/cli/dsl.hpp"
#include "pnslab/pnslab.hpp"

#include <string>
#include <vector>

namespace testing {

inline pnslab::FiniteRing ring(const std::string& expr) {
    return pnslab::build_ring(pnslab::cli::to_descriptor(pnslab::cli::parse_ring_expr(expr)));
}

inline pnslab::Element el(const pnslab::FiniteRing& R, const std::string& literal) {
    return pnslab::cli::parse_element(literal, R);
}

inline std::vector<std::string> formatted(const pnslab::FiniteRing& R, const pnslab::ElementSet& s) {
    std::vector<std::string> out;
    for (auto e : s) out.push_back(R.format(e));
    return out;
}

inline std::vector<pnslab::FiniteRing> corpus_rings() {
    std::vector<pnslab::FiniteRing> out;
    for (const auto& d : pnslab::default_corpus()) out.push_back(pnslab::build_ring(d));
    return out;
}

using Strings = std::vector<std::string>;

} // namespace testing
