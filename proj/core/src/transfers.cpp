// Transfer of pns and pns-* inverses between ac and ba (Cline) and between
// 1 - ac and 1 - ba (Jacobson), plus the projection characterization of
// pns-* invertibility.

#include "sweep_util.hpp"

namespace pnslab {

using detail::fmt;

namespace {

// Inverse lookup shared by the plain and the starred statements.
using InverseFn = std::function<std::optional<Element>(Element)>;

bool meets_cline(const FiniteRing& R, Element a, Element b, Element c) {
    return R.mul(R.mul(a, b), a) == R.mul(R.mul(a, c), a);
}

bool meets_star(const FiniteRing& R, Element a, Element b, Element c) {
    auto aba = R.mul(R.mul(a, b), a);
    return aba == R.mul(b, R.mul(a, a)) && aba == R.mul(R.mul(a, a), c) && aba == R.mul(R.mul(a, c), a);
}

// ac in S <=> ba in S, (ac)' = a((ba)')^2 c and (ba)' = b((ac)')^2 a.
void check_cline(const RingLab& lab, const InverseFn& inv, Element a, Element b, Element c, std::uint32_t n,
                 TheoremReport& out) {
    const auto& R = lab.ring();
    auto ac = R.mul(a, c);
    auto ba = R.mul(b, a);
    auto x_ac = inv(ac);
    auto x_ba = inv(ba);
    auto w = [&] {
        return Witness()
            .add("a", fmt(R, a))
            .add("b", fmt(R, b))
            .add("c", fmt(R, c))
            .add("n", n)
            .add("ac", fmt(R, ac))
            .add("ba", fmt(R, ba))
            .add("(ac)^inv", fmt(R, x_ac))
            .add("(ba)^inv", fmt(R, x_ba));
    };
    if (x_ac.has_value() != x_ba.has_value()) {
        out.violation(w().add("issue", "existence differs"));
        return;
    }
    if (!x_ac) return;
    auto from_ba = R.mul(R.mul(a, R.mul(*x_ba, *x_ba)), c);
    auto from_ac = R.mul(R.mul(b, R.mul(*x_ac, *x_ac)), a);
    if (from_ba != *x_ac || from_ac != *x_ba)
        out.violation(w().add("a((ba)^inv)^2c", fmt(R, from_ba)).add("b((ac)^inv)^2a", fmt(R, from_ac)));
}

// One direction of the Jacobson transfer: from the inverse of
// alpha = 1 - ba produce the inverse of beta = 1 - ac as
//   1 - a alpha^pi u (ba)^2 c + a alpha alpha' c + a alpha' cac,
// with alpha^pi = 1 - alpha alpha' and u = (1 - alpha alpha^pi (1 + ba + (ba)^2))^-1.
struct JacobsonStep {
    std::optional<Element> t;
    bool t_unit = false;
    std::optional<Element> predicted;
};

JacobsonStep jacobson_step(const RingLab& lab, Element a, Element ba, Element c, Element alpha_inv, Element tail) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto one = R.one();
    auto alpha = R.sub(one, ba);
    auto spectral = R.mul(alpha, alpha_inv);
    auto alpha_pi = R.sub(one, spectral);
    auto sum = R.add(R.add(one, ba), R.mul(ba, ba));
    JacobsonStep s;
    s.t = R.sub(one, R.mul(R.mul(alpha, alpha_pi), sum));
    s.t_unit = A.is_unit(*s.t);
    if (!s.t_unit) return s;
    auto u = A.inverse(*s.t);
    auto term1 = R.mul(R.mul(R.mul(a, alpha_pi), R.mul(u, R.mul(ba, ba))), c);
    auto term2 = R.mul(R.mul(a, spectral), c);
    auto term3 = R.mul(R.mul(a, alpha_inv), tail);
    s.predicted = R.add(R.add(R.sub(one, term1), term2), term3);
    return s;
}

void check_jacobson(const RingLab& lab, const InverseFn& inv, Element a, Element b, Element c, std::uint32_t n,
                    TheoremReport& out) {
    const auto& R = lab.ring();
    auto one = R.one();
    auto ac = R.mul(a, c);
    auto ba = R.mul(b, a);
    auto alpha = R.sub(one, ba);
    auto beta = R.sub(one, ac);
    auto x_alpha = inv(alpha);
    auto x_beta = inv(beta);
    auto w = [&] {
        return Witness()
            .add("a", fmt(R, a))
            .add("b", fmt(R, b))
            .add("c", fmt(R, c))
            .add("n", n)
            .add("alpha", fmt(R, alpha))
            .add("beta", fmt(R, beta))
            .add("alpha^inv", fmt(R, x_alpha))
            .add("beta^inv", fmt(R, x_beta));
    };
    if (x_alpha.has_value() != x_beta.has_value()) {
        out.violation(w().add("issue", "existence differs"));
        return;
    }
    if (!x_alpha) return;
    // beta' from alpha': trailing factor cac. alpha' from beta': the same
    // shape with (a, ba, c) replaced by (b, ac, a) and trailing factor aba.
    auto to_beta = jacobson_step(lab, a, ba, c, *x_alpha, R.mul(R.mul(c, a), c));
    auto to_alpha = jacobson_step(lab, b, ac, a, *x_beta, R.mul(R.mul(a, b), a));
    if (!to_beta.t_unit)
        out.violation(w().add("direction", "beta").add("t", fmt(R, to_beta.t)).add("issue", "UnitFailure"));
    else if (*to_beta.predicted != *x_beta)
        out.violation(w().add("direction", "beta").add("t", fmt(R, to_beta.t)).add("formula",
                                                                                    fmt(R, to_beta.predicted)));
    if (!to_alpha.t_unit)
        out.violation(w().add("direction", "alpha").add("t", fmt(R, to_alpha.t)).add("issue", "UnitFailure"));
    else if (*to_alpha.predicted != *x_alpha)
        out.violation(w().add("direction", "alpha").add("t", fmt(R, to_alpha.t)).add("formula",
                                                                                      fmt(R, to_alpha.predicted)));
}

InverseFn pns_fn(const RingLab& lab, std::uint32_t n) {
    return [&lab, n](Element x) { return lab.pns().inverse(x, n); };
}

InverseFn star_fn(const RingLab& lab, const Involution& inv, std::uint32_t n) {
    return [&lab, &inv, n](Element x) { return lab.star_inverse(inv, x, n); };
}

void check_idempotent_projection(const RingLab& lab, const Involution& inv, std::uint32_t n, TheoremReport& out) {
    const auto& R = lab.ring();
    for (Element e : lab.analysis().subset(SubsetKind::Idempotents)) {
        ++out.universe;
        ++out.hypothesis_met;
        bool pns = lab.pns().invertible(e, n);
        bool star = lab.star_inverse(inv, e, n).has_value();
        bool projection = inv(e) == e;
        if (!pns || star != projection)
            out.violation(Witness()
                              .add("e", fmt(R, e))
                              .add("n", n)
                              .add("pns", pns)
                              .add("pns-*", star)
                              .add("projection", projection));
    }
}

std::optional<Involution> sweep_involution(const RingLab& lab, const SweepOptions& opt) {
    if (opt.involution) return build_involution(lab.ring(), *opt.involution);
    return default_involution(lab.ring());
}

TheoremReport no_involution(std::string id, const RingLab& lab, const SweepOptions& opt) {
    auto r = detail::make_report(std::move(id), lab, opt);
    r.notes.push_back("no involution available for this ring");
    r.finalize();
    return r;
}

// Exhaustive sweeps range over all order^3 triples; sampled sweeps over the
// sampled hypothesis-satisfying triples.
std::uint64_t swept_triples(const RingLab& lab, const TripleStats& stats) {
    std::uint64_t order = lab.ring().order();
    return stats.sampled ? stats.visited : order * order * order;
}

} // namespace

TheoremReport cline_transfer(const RingLab& lab, Element a, Element b, Element c, std::uint32_t n) {
    SweepOptions opt;
    opt.n_min = opt.n_max = n;
    auto r = detail::make_report("Lem-3-1", lab, opt);
    ++r.universe;
    if (meets_cline(lab.ring(), a, b, c)) {
        ++r.hypothesis_met;
        check_cline(lab, pns_fn(lab, n), a, b, c, n, r);
    }
    r.finalize();
    return r;
}

TheoremReport jacobson_transfer(const RingLab& lab, Element a, Element b, Element c, std::uint32_t n) {
    SweepOptions opt;
    opt.n_min = opt.n_max = n;
    auto r = detail::make_report("Lem-3-2", lab, opt);
    ++r.universe;
    if (meets_cline(lab.ring(), a, b, c)) {
        ++r.hypothesis_met;
        check_jacobson(lab, pns_fn(lab, n), a, b, c, n, r);
    }
    r.finalize();
    return r;
}

TheoremReport star_transfers(const RingLab& lab, const Involution& inv, Element a, Element b, Element c,
                             std::uint32_t n) {
    SweepOptions opt;
    opt.n_min = opt.n_max = n;
    auto r = detail::make_report("Thm-525-1", lab, opt);
    r.parameters["involution"] = inv.label();
    ++r.universe;
    if (meets_star(lab.ring(), a, b, c)) {
        ++r.hypothesis_met;
        auto f = star_fn(lab, inv, n);
        check_cline(lab, f, a, b, c, n, r);
        check_jacobson(lab, f, a, b, c, n, r);
    }
    TheoremReport idempotents;
    check_idempotent_projection(lab, inv, n, idempotents);
    r.violations += idempotents.violations;
    for (auto& w : idempotents.counterexamples)
        if (r.counterexamples.size() < TheoremReport::kMaxCounterexamples) r.counterexamples.push_back(std::move(w));
    r.notes.push_back("idempotent <=> projection check over " + std::to_string(idempotents.universe) +
                      " idempotents");
    r.finalize();
    return r;
}

std::array<TheoremReport, 2> sweep_transfers(const RingLab& lab, const SweepOptions& opt) {
    std::array<TheoremReport, 2> out{detail::make_report("Lem-3-1", lab, opt), detail::make_report("Lem-3-2", lab, opt)};
    auto& [cline, jacobson] = out;
    TripleStats stats;
    for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
        auto f = pns_fn(lab, n);
        stats = for_each_triple(lab, TripleHypothesis::Cline, opt, [&](Element a, Element b, Element c) {
            ++cline.hypothesis_met;
            check_cline(lab, f, a, b, c, n, cline);
            ++jacobson.hypothesis_met;
            check_jacobson(lab, f, a, b, c, n, jacobson);
        });
    }
    for (auto& r : out) {
        r.universe = swept_triples(lab, stats) * (opt.n_max - opt.n_min + 1);
        r.parameters["triples"] = stats.sampled ? "sampled" : "exhaustive";
        r.parameters["seed"] = std::to_string(opt.seed);
        r.notes.push_back("hypothesis-satisfying triples: " + std::to_string(stats.population) + ", visited per n: " +
                          std::to_string(stats.visited));
        r.finalize();
    }
    return out;
}

std::array<TheoremReport, 2> sweep_star_transfers(const RingLab& lab, const SweepOptions& opt) {
    auto inv = sweep_involution(lab, opt);
    if (!inv) return {no_involution("Thm-525-1", lab, opt), no_involution("Thm-525-2", lab, opt)};
    std::array<TheoremReport, 2> out{detail::make_report("Thm-525-1", lab, opt),
                                     detail::make_report("Thm-525-2", lab, opt)};
    auto& [cline, jacobson] = out;
    TripleStats stats;
    for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
        auto f = star_fn(lab, *inv, n);
        stats = for_each_triple(lab, TripleHypothesis::Star, opt, [&](Element a, Element b, Element c) {
            ++cline.hypothesis_met;
            check_cline(lab, f, a, b, c, n, cline);
            ++jacobson.hypothesis_met;
            check_jacobson(lab, f, a, b, c, n, jacobson);
        });
    }
    for (auto& r : out) {
        r.parameters["involution"] = inv->label();
        r.universe = swept_triples(lab, stats) * (opt.n_max - opt.n_min + 1);
        r.parameters["triples"] = stats.sampled ? "sampled" : "exhaustive";
        r.parameters["seed"] = std::to_string(opt.seed);
        r.notes.push_back("hypothesis-satisfying triples: " + std::to_string(stats.population) + ", visited per n: " +
                          std::to_string(stats.visited));
        r.finalize();
    }
    return out;
}

TheoremReport sweep_star_routes(const RingLab& lab, const SweepOptions& opt) {
    auto inv = sweep_involution(lab, opt);
    if (!inv) return no_involution("Prop-1-10", lab, opt);
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto r = detail::make_report("Prop-1-10", lab, opt);
    r.parameters["involution"] = inv->label();
    for (Element a : R.elements())
        for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
            ++r.universe;
            ++r.hypothesis_met;
            auto routes = star_routes(A, *inv, a, n);
            auto cert = pns_star(A, *inv, a, n);
            bool memo = lab.star_inverse(*inv, a, n).has_value();
            if (routes.by_definition != routes.by_projection || cert.has_value() != routes.by_definition ||
                memo != routes.by_definition || (cert && !cert->routes_agree))
                r.violation(Witness()
                                .add("a", fmt(R, a))
                                .add("n", n)
                                .add("by_definition", routes.by_definition)
                                .add("by_projection", routes.by_projection)
                                .add("certificate", cert.has_value()));
        }
    r.finalize();
    return r;
}

TheoremReport sweep_star_examples(const RingLab& lab, const SweepOptions& opt) {
    auto inv = sweep_involution(lab, opt);
    if (!inv) return no_involution("Ex-3-3", lab, opt);
    const auto& R = lab.ring();
    auto r = detail::make_report("Ex-3-3", lab, opt);
    r.parameters["involution"] = inv->label();
    for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
        for (Element a : lab.analysis().subset(SubsetKind::SqrtJacobson)) {
            ++r.universe;
            ++r.hypothesis_met;
            auto x = lab.star_inverse(*inv, a, n);
            if (!x || *x != R.zero())
                r.violation(Witness().add("a", fmt(R, a)).add("n", n).add("pns-*", fmt(R, x)).add(
                    "issue", "sqrt(J) element without pns-* inverse 0"));
        }
        check_idempotent_projection(lab, *inv, n, r);
    }
    r.finalize();
    return r;
}

} // namespace pnslab
