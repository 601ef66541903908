#pragma once

#include "pnslab/lab.hpp"

#include <functional>
#include <random>
#include <string>

namespace pnslab::detail {

inline TheoremReport make_report(std::string id, const RingLab& lab, const SweepOptions& opt) {
    TheoremReport r;
    r.theorem_id = std::move(id);
    r.ring = lab.ring().descriptor().to_string();
    r.parameters["n_range"] = std::to_string(opt.n_min) + ".." + std::to_string(opt.n_max);
    return r;
}

inline std::string fmt(const FiniteRing& R, Element x) { return R.format(x); }
inline std::string fmt(const FiniteRing& R, const std::optional<Element>& x) { return x ? R.format(*x) : "none"; }

// All pairs when order <= full_pair_cap, otherwise sample_target pairs drawn
// with a fixed seed. Returns the number of pairs visited.
inline std::uint64_t for_each_pair(const RingLab& lab, const SweepOptions& opt,
                                   const std::function<void(Element, Element)>& visit) {
    const auto& R = lab.ring();
    std::uint64_t visited = 0;
    if (R.order() <= opt.full_pair_cap) {
        for (Element a : R.elements())
            for (Element b : R.elements()) {
                ++visited;
                visit(a, b);
            }
        return visited;
    }
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t i = 0; i < opt.sample_target; ++i) {
        Element a{static_cast<std::uint32_t>(rng() % R.order())};
        Element b{static_cast<std::uint32_t>(rng() % R.order())};
        ++visited;
        visit(a, b);
    }
    return visited;
}

inline Witness tuple_witness(const FiniteRing& R, std::initializer_list<std::pair<const char*, Element>> xs,
                             std::uint32_t n) {
    Witness w;
    for (auto [name, x] : xs) w.add(name, R.format(x));
    w.add("n", n);
    return w;
}

} // namespace pnslab::detail
