#include "pnslab/classify.hpp"

#include "sweep_util.hpp"

#include <numeric>

namespace pnslab {

using detail::fmt;

namespace {

ClassificationFlag holds(std::string detail = {}) { return {true, std::nullopt, std::move(detail)}; }
ClassificationFlag fails(Element witness, std::string detail) { return {false, witness, std::move(detail)}; }

// The exponents n at which a^n can differ: 1 .. tail + period - 1. Beyond
// that a^n repeats, so pns-invertibility for some n <= order is decided here.
std::uint32_t exponent_horizon(const PowerTrajectory& t) { return t.tail + t.period - 1; }

ClassificationFlag periodic_flag(const RingLab& lab) {
    const auto& R = lab.ring();
    for (Element a : R.elements()) {
        const auto& t = lab.analysis().trajectory(a);
        auto m = t.tail + t.period;
        if (R.pow(a, m) != R.pow(a, t.tail)) return fails(a, "no m > n with a^m = a^n");
    }
    return holds("a^(tail+period) = a^tail for every a");
}

ClassificationFlag strongly_pi_regular_flag(const RingLab& lab) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    for (Element a : R.elements()) {
        bool found = false;
        for (std::uint32_t n = 1; n <= exponent_horizon(A.trajectory(a)) && !found; ++n) {
            auto an = R.pow(a, n);
            auto next = R.pow(a, n + 1);
            found = A.principal_right_ideal(next).contains(an) && A.principal_left_ideal(next).contains(an);
        }
        if (!found) return fails(a, "a^n not in a^(n+1)R and Ra^(n+1) for any n");
    }
    return holds();
}

ClassificationFlag pseudo_pi_polar_flag(const RingLab& lab) {
    const auto& A = lab.analysis();
    for (Element a : lab.ring().elements()) {
        auto spectrum = pns_spectrum(A, a, exponent_horizon(A.trajectory(a)));
        if (spectrum.exponents.empty()) return fails(a, "no n with a pns inverse");
    }
    return holds();
}

ClassificationFlag uniform_flag(const RingLab& lab, std::uint32_t& uniform_n) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    std::uint64_t lcm = 1, max_tail = 1;
    for (Element a : R.elements()) {
        const auto& t = A.trajectory(a);
        lcm = std::lcm(lcm, std::uint64_t{t.period});
        max_tail = std::max<std::uint64_t>(max_tail, t.tail);
        if (lcm > (1u << 20)) break;
    }
    auto n = lcm * ((max_tail + lcm - 1) / lcm);
    uniform_n = static_cast<std::uint32_t>(n);
    for (Element a : R.elements())
        if (!lab.pns().invertible(a, uniform_n)) return fails(a, "not pns-invertible at n = " + std::to_string(n));
    return holds("every element pns-invertible at n = " + std::to_string(n));
}

ClassificationFlag pi_uu_flag(const RingLab& lab) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    for (Element u : A.subset(SubsetKind::Units)) {
        bool found = false;
        for (std::uint32_t n = 1; n <= exponent_horizon(A.trajectory(u)) && !found; ++n)
            found = A.is_nilpotent(R.sub(R.pow(u, n), R.one()));
        if (!found) return fails(u, "u^n - 1 not nilpotent for any n");
    }
    return holds();
}

ClassificationFlag jacobson_nil_flag(const RingLab& lab) {
    const auto& A = lab.analysis();
    for (Element a : A.subset(SubsetKind::JacobsonRadical))
        if (!A.is_nilpotent(a)) return fails(a, "element of J(R) not nilpotent");
    return holds();
}

ClassificationFlag pseudo_polar_flag(const RingLab& lab) {
    for (Element a : lab.ring().elements())
        if (!pseudo_polar_idempotent(lab.analysis(), a)) return fails(a, "no pseudo-polar idempotent");
    return holds();
}

ClassificationFlag local_flag(const RingLab& lab) {
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    if (R.order() == 1) return fails(R.zero(), "zero ring");
    std::vector<Element> non_units;
    for (Element a : R.elements())
        if (!A.is_unit(a)) non_units.push_back(a);
    for (Element a : non_units)
        for (Element b : non_units)
            if (A.is_unit(R.add(a, b))) return fails(a, "non-units " + fmt(R, a) + " + " + fmt(R, b) + " is a unit");
    return holds();
}

ClassificationFlag special_local_flag(const RingLab& lab, const ClassificationFlag& local) {
    if (!local.value) return {false, local.witness, "not local"};
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    for (Element u : A.subset(SubsetKind::Units)) {
        bool found = false;
        for (std::uint32_t n = 1; n <= exponent_horizon(A.trajectory(u)) && !found; ++n)
            found = A.in_jacobson(R.sub(R.pow(u, n), R.one()));
        if (!found) return fails(u, "no power of u in 1 + J(R)");
    }
    return holds();
}

Witness flags_witness(const FiniteRing& R, const RingClassification& c) {
    Witness w;
    for (const auto& [name, flag] : flag_list(c)) {
        w.add(name, flag->value);
        if (flag->witness) w.add(name + "_witness", fmt(R, *flag->witness));
    }
    return w;
}

struct DerivedRing {
    std::unique_ptr<RingLab> lab;
    std::string error;
};

DerivedRing build_derived(const RingDescriptor& d, const SweepOptions& opt) {
    BuildOptions b;
    b.order_cap = opt.order_cap;
    try {
        return {std::make_unique<RingLab>(build_ring(d, b)), {}};
    } catch (const RingError& e) {
        return {nullptr, std::string(to_string(e.code())) + ": " + e.what()};
    }
}

TheoremReport structural_report(std::string id, const RingLab& lab) {
    TheoremReport r;
    r.theorem_id = std::move(id);
    r.ring = lab.ring().descriptor().to_string();
    return r;
}

} // namespace

std::vector<std::pair<std::string, const ClassificationFlag*>> flag_list(const RingClassification& c) {
    return {{"periodic", &c.periodic},
            {"stronglyPiRegular", &c.strongly_pi_regular},
            {"pseudoPiPolar", &c.pseudo_pi_polar},
            {"pseudoPiPolarUniform", &c.pseudo_pi_polar_uniform},
            {"piUU", &c.pi_uu},
            {"jacobsonNil", &c.jacobson_nil},
            {"pseudoPolar", &c.pseudo_polar},
            {"local", &c.local},
            {"specialLocal", &c.special_local}};
}

RingClassification classify(const RingLab& lab) {
    RingClassification c;
    c.periodic = periodic_flag(lab);
    c.strongly_pi_regular = strongly_pi_regular_flag(lab);
    c.pseudo_pi_polar = pseudo_pi_polar_flag(lab);
    c.pseudo_pi_polar_uniform = uniform_flag(lab, c.uniform_n);
    c.pi_uu = pi_uu_flag(lab);
    c.jacobson_nil = jacobson_nil_flag(lab);
    c.pseudo_polar = pseudo_polar_flag(lab);
    c.local = local_flag(lab);
    c.special_local = special_local_flag(lab, c.local);
    return c;
}

TheoremReport check_periodic_characterization(const RingLab& lab, const SweepOptions&) {
    auto r = structural_report("Thm-2-2", lab);
    auto c = classify(lab);
    r.universe = r.hypothesis_met = 1;
    bool p = c.periodic.value;
    bool spr = c.strongly_pi_regular.value;
    bool ppp = c.pseudo_pi_polar.value;
    auto w = flags_witness(lab.ring(), c);
    r.evidence.push_back(w);
    if (p != (ppp && c.jacobson_nil.value)) r.violation(Witness(w).add("relation", "periodic = pseudoPiPolar and jacobsonNil"));
    if (p != (spr && ppp)) r.violation(Witness(w).add("relation", "periodic = stronglyPiRegular and pseudoPiPolar"));
    if (p != (spr && c.pi_uu.value)) r.violation(Witness(w).add("relation", "periodic = stronglyPiRegular and piUU"));
    if (!p) r.violation(Witness(w).add("relation", "finite rings are periodic"));
    r.notes.push_back("on finite rings every flag in these relations is true; the check tests consistency of "
                      "independent computations");
    r.finalize();
    return r;
}

TheoremReport check_qnil_equality(const RingLab& lab, const SweepOptions&) {
    auto r = structural_report("Prop-qnil", lab);
    const auto& A = lab.analysis();
    r.universe = 1;
    if (pseudo_pi_polar_flag(lab).value) {
        r.hypothesis_met = 1;
        const auto& sqrt_j = A.subset(SubsetKind::SqrtJacobson);
        const auto& qnil = A.subset(SubsetKind::Quasinilpotents);
        r.evidence.push_back(Witness().add("sqrtJ_size", std::uint64_t{sqrt_j.size()}).add("qnil_size",
                                                                                          std::uint64_t{qnil.size()}));
        if (!(sqrt_j == qnil)) {
            std::optional<Element> diff;
            for (Element q : qnil)
                if (!sqrt_j.contains(q)) diff = q;
            r.violation(Witness().add("issue", "sqrt(J) != qnil").add("qnil_not_in_sqrtJ", fmt(lab.ring(), diff)));
        }
    }
    r.finalize();
    return r;
}

TheoremReport check_corner_closure(const RingLab& lab, const SweepOptions& opt) {
    auto r = structural_report("Prop-corner", lab);
    const auto& R = lab.ring();
    if (!pseudo_pi_polar_flag(lab).value) {
        r.universe = 1;
        r.notes.push_back("ring is not pseudo pi-polar");
        r.finalize();
        return r;
    }
    for (Element e : lab.analysis().subset(SubsetKind::Idempotents)) {
        ++r.universe;
        auto d = RingDescriptor::corner(R.descriptor(), R.decode(e));
        auto derived = build_derived(d, opt);
        if (!derived.lab) {
            r.notes.push_back(d.to_string() + " skipped: " + derived.error);
            continue;
        }
        ++r.hypothesis_met;
        auto flag = pseudo_pi_polar_flag(*derived.lab);
        r.evidence.push_back(Witness()
                                 .add("e", fmt(R, e))
                                 .add("corner", d.to_string())
                                 .add("order", derived.lab->ring().order())
                                 .add("pseudoPiPolar", flag.value));
        if (!flag.value)
            r.violation(Witness().add("e", fmt(R, e)).add("corner", d.to_string()).add(
                "counterexample", fmt(derived.lab->ring(), flag.witness)));
    }
    r.finalize();
    return r;
}

TheoremReport check_triangular_rings(const RingLab& lab, const SweepOptions& opt) {
    auto r = structural_report("Prop-Tn", lab);
    r.parameters["k_max"] = std::to_string(opt.triangular_k);
    const auto& R = lab.ring();
    auto local = local_flag(lab);
    if (!R.is_commutative() || !local.value) {
        r.universe = 1;
        r.notes.push_back("hypothesis: commutative local base ring");
        r.finalize();
        return r;
    }
    bool special = special_local_flag(lab, local).value;
    for (std::uint32_t k = 1; k <= opt.triangular_k; ++k) {
        ++r.universe;
        auto d = RingDescriptor::upper_triangular(k, R.descriptor());
        auto derived = build_derived(d, opt);
        if (!derived.lab) {
            r.notes.push_back(d.to_string() + " skipped: " + derived.error);
            continue;
        }
        ++r.hypothesis_met;
        auto flag = pseudo_pi_polar_flag(*derived.lab);
        auto w = Witness().add("k", k).add("ring", d.to_string()).add("specialLocal(base)", special).add(
            "pseudoPiPolar(T_k)", flag.value);
        r.evidence.push_back(w);
        if (special != flag.value) r.violation(Witness(w).add("counterexample", fmt(derived.lab->ring(), flag.witness)));
    }
    r.finalize();
    return r;
}

TheoremReport check_matrix_rings(const RingLab& lab, const SweepOptions& opt) {
    auto r = structural_report("Prop-Mn", lab);
    r.parameters["k"] = std::to_string(opt.matrix_k);
    r.parameters["m"] = std::to_string(opt.power_m);
    const auto& R = lab.ring();
    const auto& A = lab.analysis();
    r.universe = 1;
    std::optional<Element> blocker;
    for (Element a : R.elements())
        if (!A.is_nilpotent(R.sub(a, R.pow(a, opt.power_m)))) {
            blocker = a;
            break;
        }
    if (!R.is_commutative() || blocker || opt.power_m < 2) {
        r.notes.push_back(blocker ? "a - a^m not nilpotent for a = " + fmt(R, *blocker)
                                  : "hypothesis: commutative ring with m >= 2");
        r.finalize();
        return r;
    }
    auto d = RingDescriptor::matrix(opt.matrix_k, R.descriptor());
    auto derived = build_derived(d, opt);
    if (!derived.lab) {
        r.notes.push_back(d.to_string() + " skipped: " + derived.error);
        r.finalize();
        return r;
    }
    r.hypothesis_met = 1;
    auto flag = pseudo_pi_polar_flag(*derived.lab);
    r.evidence.push_back(Witness().add("ring", d.to_string()).add("pseudoPiPolar", flag.value));
    if (!flag.value)
        r.violation(Witness().add("ring", d.to_string()).add("counterexample", fmt(derived.lab->ring(), flag.witness)));
    r.finalize();
    return r;
}

std::vector<TheoremReport> structural_props(const RingLab& lab, const SweepOptions& opt) {
    return {check_periodic_characterization(lab, opt), check_qnil_equality(lab, opt), check_corner_closure(lab, opt),
            check_triangular_rings(lab, opt), check_matrix_rings(lab, opt)};
}

TheoremReport conjecture_search(const std::vector<RingDescriptor>& corpus, const SweepOptions& opt) {
    TheoremReport r;
    r.theorem_id = "Conjecture";
    r.ring = "corpus";
    for (const auto& d : corpus) {
        ++r.universe;
        auto derived = build_derived(d, opt);
        if (!derived.lab) {
            r.notes.push_back(d.to_string() + " skipped: " + derived.error);
            continue;
        }
        auto c = classify(*derived.lab);
        bool hyp = c.pseudo_pi_polar.value && c.pi_uu.value;
        r.evidence.push_back(Witness()
                                 .add("ring", d.to_string())
                                 .add("pseudoPiPolar", c.pseudo_pi_polar.value)
                                 .add("piUU", c.pi_uu.value)
                                 .add("stronglyPiRegular", c.strongly_pi_regular.value));
        if (!hyp) continue;
        ++r.hypothesis_met;
        if (!c.strongly_pi_regular.value)
            r.violation(Witness().add("ring", d.to_string()).add("counterexample",
                                                                 fmt(derived.lab->ring(), c.strongly_pi_regular.witness)));
    }
    r.notes.push_back("finite rings are strongly pi-regular; a finite search documents consistency only");
    r.finalize();
    return r;
}

} // namespace pnslab
