// Statements about a single element or a pair: oracle/formula agreement,
// the sqrt(J) closure rules, the seven conditions for a^Pi = b^Pi and the
// idempotent characterizations of a^Pi.

#include "sweep_util.hpp"

namespace pnslab {

using detail::fmt;

namespace {

void check_idempotent_characterization(const RingLab& lab, Element a, std::uint32_t n, TheoremReport& out) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto pi = lab.pns().spectral_idempotent(a, n);
    auto an = R.pow(a, n);
    for (Element e : A.subset(SubsetKind::Idempotents)) {
        ++out.universe;
        ++out.hypothesis_met;
        bool lhs = pi && *pi == e;
        bool rhs = A.in_double_commutant(e, a) && A.in_sqrt_jacobson(R.mul(a, R.sub(R.one(), e))) &&
                   A.in_sqrt_jacobson(R.mul(R.sub(R.one(), an), e));
        if (lhs != rhs)
            out.violation(Witness()
                              .add("a", fmt(R, a))
                              .add("e", fmt(R, e))
                              .add("n", n)
                              .add("a^Pi", fmt(R, pi))
                              .add("pns_with_a^Pi=e", lhs)
                              .add("e_characterization", rhs));
    }
}

void check_trivial_spectra(const RingLab& lab, Element a, std::uint32_t n, TheoremReport& out) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto pi = lab.pns().spectral_idempotent(a, n);
    ++out.universe;
    ++out.hypothesis_met;
    bool one_lhs = pi && *pi == R.one();
    bool one_rhs = A.in_sqrt_jacobson(R.sub(R.pow(a, n), R.one()));
    bool zero_lhs = pi && *pi == R.zero();
    bool zero_rhs = A.in_sqrt_jacobson(a);
    if (one_lhs != one_rhs || zero_lhs != zero_rhs)
        out.violation(Witness()
                          .add("a", fmt(R, a))
                          .add("n", n)
                          .add("a^Pi", fmt(R, pi))
                          .add("a^Pi=1", one_lhs)
                          .add("a^n-1_in_sqrtJ", one_rhs)
                          .add("a^Pi=0", zero_lhs)
                          .add("a_in_sqrtJ", zero_rhs));
}

void check_spectral_pair(const RingLab& lab, Element a, Element b, std::uint32_t n, TheoremReport& out) {
    const auto& R = lab.ring();
    ++out.universe;
    if (!lab.pns().invertible(a, n)) return;
    ++out.hypothesis_met;
    auto c = evaluate_spectral_conditions(lab, a, b, n);
    if (c.all_equal()) return;
    Witness w;
    w.add("a", fmt(R, a)).add("b", fmt(R, b)).add("n", n);
    w.add("a^pns", fmt(R, lab.pns().inverse(a, n))).add("a^Pi", fmt(R, lab.pns().spectral_idempotent(a, n)));
    w.add("b^pns", fmt(R, lab.pns().inverse(b, n))).add("b^Pi", fmt(R, lab.pns().spectral_idempotent(b, n)));
    for (std::size_t i = 0; i < c.holds.size(); ++i) w.add("(" + std::to_string(i + 1) + ")", c.holds[i]);
    out.violation(std::move(w));
}

} // namespace

SpectralConditions evaluate_spectral_conditions(const RingLab& lab, Element a, Element b, std::uint32_t n) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto xa_opt = lab.pns().inverse(a, n);
    if (!xa_opt) throw RingError(ErrorCode::InvalidArgument, "a = " + R.format(a) + " is not pns-invertible");
    auto one = R.one();
    auto xa = *xa_opt;
    auto pa = R.mul(a, xa);
    auto xb = lab.pns().inverse(b, n);
    auto bn = R.pow(b, n);
    bool pa_in_dc = A.in_double_commutant(pa, b);

    SpectralConditions c;
    auto& h = c.holds;
    h[1] = pa_in_dc && A.in_sqrt_jacobson(R.sub(bn, pa));
    h[2] = pa_in_dc && A.in_sqrt_jacobson(R.mul(b, R.sub(one, pa))) &&
           A.in_sqrt_jacobson(R.mul(R.sub(one, bn), pa));
    if (xb) {
        auto pb = R.mul(b, *xb);
        h[0] = pa == pb;
        auto w = R.sub(one, R.mul(pa, R.sub(one, R.mul(xa, b))));
        h[3] = A.is_unit(w) && *xb == R.mul(A.inverse(w), xa);
        h[4] = R.sub(*xb, xa) == R.mul(R.mul(xa, R.sub(a, b)), *xb);
        auto d = R.sub(pa, pb);
        h[5] = R.mul(pa, pb) == R.mul(pb, pa) && A.is_unit(R.sub(one, R.mul(d, d)));
        h[6] = lab.right_ideal(*xb).subset_of(lab.right_ideal(xa)) &&
               lab.right_annihilator(*xb).subset_of(lab.right_annihilator(xa));
    }
    return c;
}

TheoremReport check_spectral_equality(const RingLab& lab, Element a, Element b, std::uint32_t n) {
    SweepOptions opt;
    opt.n_min = opt.n_max = n;
    auto r = detail::make_report("Thm-1234", lab, opt);
    check_spectral_pair(lab, a, b, n, r);
    // The corollaries for the same (a, n) ride along.
    TheoremReport cor;
    check_idempotent_characterization(lab, a, n, cor);
    check_trivial_spectra(lab, a, n, cor);
    r.violations += cor.violations;
    for (auto& w : cor.counterexamples) r.counterexamples.push_back(std::move(w));
    r.notes.push_back("spectral idempotent checks for (a, n): " + std::to_string(cor.universe) + " tuples, " +
                      std::to_string(cor.violations) + " violations");
    r.finalize();
    return r;
}

TheoremReport sweep_spectral_equality(const RingLab& lab, const SweepOptions& opt) {
    auto r = detail::make_report("Thm-1234", lab, opt);
    for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n)
        detail::for_each_pair(lab, opt, [&](Element a, Element b) { check_spectral_pair(lab, a, b, n, r); });
    r.finalize();
    return r;
}

TheoremReport sweep_idempotent_characterization(const RingLab& lab, const SweepOptions& opt) {
    auto r = detail::make_report("Cor-1111", lab, opt);
    for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n)
        for (Element a : lab.ring().elements()) check_idempotent_characterization(lab, a, n, r);
    r.finalize();
    return r;
}

TheoremReport sweep_trivial_spectra(const RingLab& lab, const SweepOptions& opt) {
    auto r = detail::make_report("Cor-Pi01", lab, opt);
    for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n)
        for (Element a : lab.ring().elements()) check_trivial_spectra(lab, a, n, r);
    r.finalize();
    return r;
}

TheoremReport sweep_path_agreement(const RingLab& lab, const SweepOptions& opt) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto r = detail::make_report("Lem-1-1", lab, opt);
    auto inv = opt.involution ? std::optional<Involution>(build_involution(R, *opt.involution)) : default_involution(R);
    std::uint64_t comm_divergence = 0;

    for (Element a : R.elements()) {
        auto pd = p_drazin_inverse(A, a);
        auto dz = drazin_inverse(A, a);
        auto base = Witness().add("a", fmt(R, a));
        if (pd && (!pd->valid || pd->matches != 1))
            r.violation(Witness(base).add("issue", "p-Drazin certificate invalid or not unique"));
        if (dz && (!dz->valid || dz->matches != 1))
            r.violation(Witness(base).add("issue", "Drazin certificate invalid or not unique"));
        if (dz && !pd) r.violation(Witness(base).add("issue", "Drazin invertible but not p-Drazin invertible"));
        if (pd && !pd->pseudo_polar_idempotent)
            r.violation(Witness(base).add("issue", "p-Drazin invertible but no pseudo-polar idempotent"));

        for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
            ++r.universe;
            ++r.hypothesis_met;
            auto w = Witness(base).add("n", n);
            auto o = pns_oracle(A, a, n);
            std::optional<PnsCertificate> f;
            try {
                f = pns_formula(A, a, n);
            } catch (const RingError& err) {
                r.violation(Witness(w).add("issue", "formula path raised").add("error", err.what()));
                continue;
            }
            if (o.has_value() != f.has_value()) {
                r.violation(Witness(w).add("oracle", o.has_value()).add("formula", f.has_value()).add("issue",
                                                                                                       "existence differs"));
                continue;
            }
            if (o) {
                if (o->x != f->x || o->e != f->e || o->k != f->k || !o->valid || !f->valid)
                    r.violation(Witness(w)
                                    .add("oracle_x", fmt(R, o->x))
                                    .add("formula_x", fmt(R, f->x))
                                    .add("oracle_e", fmt(R, o->e))
                                    .add("formula_e", fmt(R, f->e))
                                    .add("oracle_valid", o->valid)
                                    .add("formula_valid", f->valid)
                                    .add("issue", "certificates differ"));
                if (o->matches != 1)
                    r.violation(Witness(w).add("matches", o->matches).add("issue", "inverse not unique"));
                if (!pd || pd->x != o->x)
                    r.violation(Witness(w).add("x", fmt(R, o->x)).add("p-Drazin", pd ? fmt(R, pd->x) : "none").add(
                        "issue", "pns inverse is not the p-Drazin inverse"));
                if (A.is_idempotent(a) && (o->x != a || o->e != a))
                    r.violation(Witness(w).add("x", fmt(R, o->x)).add("issue", "idempotent is not its own inverse"));
            } else if (A.is_idempotent(a)) {
                r.violation(Witness(w).add("issue", "idempotent without pns inverse"));
            }
            if (inv) {
                auto s = pns_star(A, *inv, a, n);
                if (s && !o) r.violation(Witness(w).add("issue", "pns-* inverse without pns inverse"));
            }

            // Same scan over comm(a) instead of comm^2(a); the count of
            // idempotents e in comm(a) with a^n - e in sqrt(J) must be 1 exactly
            // when a is invertible.
            auto an = R.pow(a, n);
            std::uint32_t comm_solutions = 0, comm_idempotents = 0;
            std::optional<Element> comm_x;
            for (Element y : A.commutant(a)) {
                if (A.is_idempotent(y) && A.in_sqrt_jacobson(R.sub(an, y))) ++comm_idempotents;
                if (R.mul(R.mul(y, a), y) == y && A.in_sqrt_jacobson(R.sub(an, R.mul(a, y)))) {
                    ++comm_solutions;
                    comm_x = y;
                }
            }
            bool comm_version = comm_solutions == 1;
            if (comm_version != o.has_value() || (o && comm_x != o->x)) {
                ++comm_divergence;
                r.violation(Witness(w)
                                .add("comm_solutions", comm_solutions)
                                .add("comm2_solution", o ? fmt(R, o->x) : "none")
                                .add("issue", "comm(a) and comm^2(a) scans diverge"));
            }
            if ((comm_idempotents == 1) != o.has_value())
                r.violation(Witness(w).add("comm_idempotents", comm_idempotents).add("issue",
                                                                                     "spectral idempotent in comm(a) not unique"));
        }
    }
    r.notes.push_back("comm(a) vs comm^2(a) divergences: " + std::to_string(comm_divergence));
    if (inv) r.parameters["involution"] = inv->label();
    r.finalize();
    return r;
}

TheoremReport sweep_radical_rules(const RingLab& lab, const SweepOptions& opt) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto r = detail::make_report("Lem-1-2", lab, opt);
    r.parameters.erase("n_range");
    const auto& units = A.subset(SubsetKind::Units);
    const auto& J = A.subset(SubsetKind::JacobsonRadical);
    const auto& sqrtJ = A.subset(SubsetKind::SqrtJacobson);

    if (!A.subset(SubsetKind::Nilpotents).subset_of(sqrtJ)) r.violation(Witness().add("issue", "nil not in sqrt(J)"));
    if (!J.subset_of(sqrtJ)) r.violation(Witness().add("issue", "J not in sqrt(J)"));
    if (!sqrtJ.subset_of(A.subset(SubsetKind::Quasinilpotents)))
        r.violation(Witness().add("issue", "sqrt(J) not in qnil"));

    for (Element a : R.elements()) {
        // (4): a in sqrt(J) <=> au in sqrt(J) for every commuting unit <=> a^k in sqrt(J) for every k > 1.
        bool in = sqrtJ.contains(a);
        bool by_units = true;
        for (Element u : A.commutant(a))
            if (units.contains(u) && !sqrtJ.contains(R.mul(a, u))) by_units = false;
        bool by_powers = true;
        const auto& t = A.trajectory(a);
        for (std::uint32_t k = 2; k <= t.tail + t.period; ++k)
            if (!sqrtJ.contains(t.power(k))) by_powers = false;
        if (in != by_units || in != by_powers)
            r.violation(Witness()
                            .add("a", fmt(R, a))
                            .add("rule", "(4)")
                            .add("a_in_sqrtJ", in)
                            .add("au_in_sqrtJ", by_units)
                            .add("a^k_in_sqrtJ", by_powers));
    }

    detail::for_each_pair(lab, opt, [&](Element a, Element b) {
        ++r.universe;
        // J(R) is a two-sided ideal.
        if (J.contains(a)) {
            if (J.contains(b) && !J.contains(R.add(a, b)))
                r.violation(Witness().add("a", fmt(R, a)).add("b", fmt(R, b)).add("rule", "J closed under +"));
            if (!J.contains(R.mul(a, b)) || !J.contains(R.mul(b, a)))
                r.violation(Witness().add("a", fmt(R, a)).add("b", fmt(R, b)).add("rule", "J absorbs products"));
        }
        if (!R.commutes(a, b)) return;
        ++r.hypothesis_met;
        auto w = [&](const char* rule) { return Witness().add("a", fmt(R, a)).add("b", fmt(R, b)).add("rule", rule); };
        if (sqrtJ.contains(a) && !sqrtJ.contains(R.mul(a, b))) r.violation(w("(1) ab in sqrt(J)"));
        if (sqrtJ.contains(a) && sqrtJ.contains(b) && !sqrtJ.contains(R.add(a, b))) r.violation(w("(2) a+b in sqrt(J)"));
        if (sqrtJ.contains(a) && units.contains(b) && !units.contains(R.add(a, b))) r.violation(w("(3) a+b in U(R)"));
    });
    r.finalize();
    return r;
}

TheoremReport sweep_matrix_field(const RingLab& lab, const SweepOptions& opt) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto r = detail::make_report("Matrix-field", lab, opt);
    const auto& d = R.descriptor();
    bool over_field = d.kind() == RingDescriptor::Kind::Matrix && d.base().kind() == RingDescriptor::Kind::Zn;
    if (over_field) {
        auto p = d.base().modulus();
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) over_field = false;
    }
    if (!over_field) {
        r.notes.push_back("hypothesis: ring is M(k, Z(p)) with p prime");
        r.finalize();
        return r;
    }
    if (!(A.subset(SubsetKind::SqrtJacobson) == A.subset(SubsetKind::Nilpotents)))
        r.violation(Witness().add("issue", "sqrt(J) != nilpotents"));
    for (Element a : R.elements()) {
        if (!p_drazin_inverse(A, a)) r.violation(Witness().add("a", fmt(R, a)).add("issue", "not p-Drazin invertible"));
        for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
            ++r.universe;
            ++r.hypothesis_met;
            bool defect_nil = A.is_nilpotent(R.sub(a, R.pow(a, n + 1)));
            if (defect_nil != lab.pns().invertible(a, n))
                r.violation(Witness()
                                .add("a", fmt(R, a))
                                .add("n", n)
                                .add("a-a^(n+1)_nilpotent", defect_nil)
                                .add("pns", lab.pns().invertible(a, n)));
        }
    }
    r.finalize();
    return r;
}

} // namespace pnslab
