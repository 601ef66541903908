// Equivalent characterizations of pns-invertibility for a fixed (a, n).

#include "sweep_util.hpp"

namespace pnslab {

using detail::fmt;

namespace {

struct Characterizations {
    TheoremReport four_way; // four-way equivalence
    TheoremReport per_y;    // four conditions on (a, y, e = ay)
    TheoremReport pseudo;   // idempotent p with ap, 1 - (a + p)^n in sqrt(J)
};

void characterize(const RingLab& lab, Element a, std::uint32_t n, Characterizations& out) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    auto one = R.one();
    auto an = R.pow(a, n);
    auto defect_ok = A.in_sqrt_jacobson(R.sub(a, R.pow(a, n + 1)));
    const auto& dc = A.double_commutant(a);

    // (1) oracle
    auto oracle = lab.pns().inverse(a, n);
    bool c1 = oracle.has_value();
    // (4) p-Drazin and a - a^(n+1) in sqrt(J)
    auto pd = p_drazin_inverse(A, a);
    bool c4 = pd.has_value() && defect_ok;
    // (2) unique idempotent in comm(a); (3) unique y in comm(a)
    std::uint32_t idempotents = 0, ys = 0;
    for (Element y : A.commutant(a)) {
        if (A.is_idempotent(y) && A.in_sqrt_jacobson(R.sub(an, y))) ++idempotents;
        if (R.mul(R.mul(y, a), y) == y && A.in_sqrt_jacobson(R.sub(an, R.mul(a, y)))) ++ys;
    }
    bool c2 = idempotents == 1;
    bool c3 = ys == 1;

    auto base = Witness().add("a", fmt(R, a)).add("n", n);

    ++out.four_way.universe;
    ++out.four_way.hypothesis_met;
    if (!(c1 == c2 && c1 == c3 && c1 == c4))
        out.four_way.violation(Witness(base)
                                  .add("(1)_pns", c1)
                                  .add("(2)_unique_idempotent", c2)
                                  .add("(3)_unique_y", c3)
                                  .add("(4)_pdrazin_and_defect", c4)
                                  .add("idempotent_count", idempotents)
                                  .add("y_count", ys));
    if (c1) {
        // The closed form must certify every element the oracle declares invertible.
        std::optional<PnsCertificate> f;
        std::string error;
        try {
            f = pns_formula(A, a, n);
        } catch (const RingError& err) {
            error = err.what();
        }
        if (!f || !f->valid || f->x != *oracle)
            out.four_way.violation(Witness(base).add("oracle_x", fmt(R, oracle)).add("formula_x",
                                                                                    f ? fmt(R, f->x) : "none").add(
                "error", error.empty() ? "none" : error));
    }

    // Per y, (1) <=> (3) and (2) <=> (4), and (1) => (2); the four
    // conditions are equivalent after quantifying over y.
    ++out.per_y.universe;
    ++out.per_y.hypothesis_met;
    bool any[4] = {false, false, false, false};
    for (Element y : R.elements()) {
        auto e = R.mul(a, y);
        auto p = R.sub(one, e);
        bool y_in_dc = dc.contains(y);
        bool yay = R.mul(R.mul(y, a), y) == y;
        bool e_idem = A.is_idempotent(e);
        bool e_in_dc = dc.contains(e);
        bool k1 = y_in_dc && yay && A.in_sqrt_jacobson(R.sub(an, e));
        bool k2 = e_idem && e_in_dc && A.in_sqrt_jacobson(R.sub(an, e));
        bool k3 = y_in_dc && yay && A.in_sqrt_jacobson(R.sub(a, R.mul(R.mul(a, a), y))) && defect_ok;
        bool k4 = e_idem && e_in_dc && A.is_unit(R.add(a, p)) && A.in_sqrt_jacobson(R.mul(a, p)) && defect_ok;
        any[0] |= k1;
        any[1] |= k2;
        any[2] |= k3;
        any[3] |= k4;
        if (k1 != k3 || k2 != k4 || (k1 && !k2) || (k1 && oracle != y))
            out.per_y.violation(Witness(base)
                                        .add("y", fmt(R, y))
                                        .add("e", fmt(R, e))
                                        .add("(1)", k1)
                                        .add("(2)", k2)
                                        .add("(3)", k3)
                                        .add("(4)", k4)
                                        .add("a^pns", fmt(R, oracle)));
    }
    if (!(any[0] == any[1] && any[0] == any[2] && any[0] == any[3] && any[0] == c1))
        out.per_y.violation(Witness(base)
                                    .add("exists_(1)", any[0])
                                    .add("exists_(2)", any[1])
                                    .add("exists_(3)", any[2])
                                    .add("exists_(4)", any[3])
                                    .add("pns", c1));

    ++out.pseudo.universe;
    ++out.pseudo.hypothesis_met;
    std::optional<Element> witness_p;
    for (Element p : A.subset(SubsetKind::Idempotents))
        if (dc.contains(p) && A.in_sqrt_jacobson(R.mul(a, p)) &&
            A.in_sqrt_jacobson(R.sub(one, R.pow(R.add(a, p), n)))) {
            witness_p = p;
            break;
        }
    if (witness_p.has_value() != c1)
        out.pseudo.violation(Witness(base).add("pns", c1).add("p", fmt(R, witness_p)));
}

} // namespace

TheoremReport check_pns_characterizations(const RingLab& lab, Element a, std::uint32_t n) {
    SweepOptions opt;
    opt.n_min = opt.n_max = n;
    Characterizations c{detail::make_report("Thm-1-3", lab, opt), detail::make_report("Cor-1-4", lab, opt),
                        detail::make_report("Cor-1-5", lab, opt)};
    characterize(lab, a, n, c);
    auto r = std::move(c.four_way);
    r.merge(c.per_y);
    r.merge(c.pseudo);
    r.universe = 1;
    r.hypothesis_met = 1;
    auto x = lab.pns().inverse(a, n);
    r.evidence.push_back(Witness()
                             .add("a", fmt(lab.ring(), a))
                             .add("n", n)
                             .add("pns", x.has_value())
                             .add("x", fmt(lab.ring(), x)));
    r.finalize();
    return r;
}

std::array<TheoremReport, 3> sweep_characterizations(const RingLab& lab, const SweepOptions& opt) {
    Characterizations c{detail::make_report("Thm-1-3", lab, opt), detail::make_report("Cor-1-4", lab, opt),
                        detail::make_report("Cor-1-5", lab, opt)};
    for (Element a : lab.ring().elements())
        for (std::uint32_t n = opt.n_min; n <= opt.n_max; ++n) characterize(lab, a, n, c);
    c.per_y.notes.push_back(
        "per y: (1) <=> (3), (2) <=> (4), (1) => (2); all four equivalent after quantifying over y");
    std::array<TheoremReport, 3> out{std::move(c.four_way), std::move(c.per_y), std::move(c.pseudo)};
    for (auto& r : out) r.finalize();
    return out;
}

} // namespace pnslab
