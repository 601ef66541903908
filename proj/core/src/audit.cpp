#include "pnslab/audit.hpp"

#include "pnslab/lab.hpp"

namespace pnslab {

namespace {

Literal mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    using L = Literal;
    return L::matrix({{L::integer(a), L::integer(b)}, {L::integer(c), L::integer(d)}});
}

Witness certificate_witness(const FiniteRing& R, const std::string& label, Element a, std::uint32_t n,
                            const std::optional<StarPnsCertificate>& cert) {
    Witness w;
    w.add("claim", label).add("a", R.format(a)).add("n", n).add("pns-*", cert.has_value());
    if (cert) {
        w.add("x", R.format(cert->pns.x)).add("e", R.format(cert->pns.e)).add("k", cert->pns.k);
        w.add("(ax)*", R.format(cert->spectral_adjoint)).add("involution", cert->involution);
    }
    return w;
}

// Checks that `a` is (or is not) pns-* invertible for every n in 1..4.
void expect_star(const RingLab& lab, const Involution& inv, const std::string& label, Element a, bool expected,
                 TheoremReport& r) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        ++r.universe;
        ++r.hypothesis_met;
        auto cert = pns_star(lab.analysis(), inv, a, n);
        auto w = certificate_witness(lab.ring(), label, a, n, cert);
        w.add("expected", expected);
        if (cert.has_value() != expected)
            r.violation(w);
        else
            r.evidence.push_back(std::move(w));
    }
}

struct ExampleRing {
    std::unique_ptr<RingLab> lab;
    Involution inv;
    Element A, B, AB, BA;
};

ExampleRing example_ring(std::uint64_t p) {
    auto lab = std::make_unique<RingLab>(build_ring(RingDescriptor::matrix(2, RingDescriptor::zn(p))));
    const auto& R = lab->ring();
    auto A = R.encode(mat2(0, 0, 1, 1));
    auto B = R.encode(mat2(0, 1, 0, 0));
    auto inv = build_involution(R, InvolutionKind::Transpose);
    return {std::move(lab), std::move(inv), A, B, R.mul(A, B), R.mul(B, A)};
}

TheoremReport audit_cline_counterexample() {
    TheoremReport r;
    r.theorem_id = "Ex-6-20";
    r.ring = "M(2,Z(2)); M(2,Z(3))";
    r.parameters["involution"] = "transpose";
    r.parameters["n_range"] = "1..4";
    for (std::uint64_t p : {2u, 3u}) {
        auto ex = example_ring(p);
        const auto& R = ex.lab->ring();
        expect_star(*ex.lab, ex.inv, "AB in R^star", ex.AB, true, r);
        expect_star(*ex.lab, ex.inv, "BA not in R^star", ex.BA, false, r);
        // Plain pns inverses do transfer (b = c = B meets aba = aca).
        bool pns_agree = true;
        for (std::uint32_t n = 1; n <= 4; ++n)
            pns_agree = pns_agree && ex.lab->pns().invertible(ex.AB, n) == ex.lab->pns().invertible(ex.BA, n);
        auto a = ex.A, b = ex.B;
        auto aba = R.mul(R.mul(a, b), a);
        bool star_hyp = aba == R.mul(b, R.mul(a, a)) && aba == R.mul(R.mul(a, a), b);
        r.evidence.push_back(Witness()
                                 .add("ring", R.descriptor().to_string())
                                 .add("A", R.format(ex.A))
                                 .add("B", R.format(ex.B))
                                 .add("AB", R.format(ex.AB))
                                 .add("BA", R.format(ex.BA))
                                 .add("pns(AB) = pns(BA) for n in 1..4", pns_agree)
                                 .add("aba = ba^2 = a^2c = aca for (A,B,B)", star_hyp));
        if (!pns_agree) r.violation(Witness().add("ring", R.descriptor().to_string()).add("issue", "pns transfer fails"));
        if (star_hyp)
            r.violation(Witness().add("ring", R.descriptor().to_string()).add(
                "issue", "star transfer hypothesis holds for (A,B,B), so the example would contradict it"));
    }
    r.notes.push_back("the star transfer hypothesis fails for (A,B,B), so this is not a counterexample to it");
    r.finalize();
    return r;
}

TheoremReport audit_complement_projection() {
    TheoremReport r;
    r.theorem_id = "Rem-1";
    r.ring = "M(2,Z(2)); M(2,Z(3))";
    r.parameters["involution"] = "transpose";
    r.parameters["n_range"] = "1..4";
    for (std::uint64_t p : {2u, 3u}) {
        auto ex = example_ring(p);
        const auto& R = ex.lab->ring();
        expect_star(*ex.lab, ex.inv, "1-AB in R^star", R.sub(R.one(), ex.AB), true, r);
        expect_star(*ex.lab, ex.inv, "1-BA not in R^star", R.sub(R.one(), ex.BA), false, r);
    }
    r.finalize();
    return r;
}

TheoremReport audit_identity_involution() {
    TheoremReport r;
    r.theorem_id = "Rem-2";
    r.ring = "Z(6)";
    r.parameters["involution"] = "identity";
    r.parameters["n"] = "2";
    r.whitelisted = true;
    RingLab lab(build_ring(RingDescriptor::zn(6)));
    const auto& R = lab.ring();
    auto inv = build_involution(R, InvolutionKind::Identity);
    const std::uint32_t n = 2;

    // Undisputed claim: a = -1 is pns-* invertible.
    auto a = R.from_int(-1);
    ++r.universe;
    ++r.hypothesis_met;
    auto cert_a = pns_star(lab.analysis(), inv, a, n);
    auto wa = certificate_witness(R, "a = -1 in R^star", a, n, cert_a);
    if (cert_a)
        r.evidence.push_back(std::move(wa));
    else
        r.violation(std::move(wa));

    // Disputed claim: 1 - a = 2 is not pns-* invertible.
    auto b = R.sub(R.one(), a);
    ++r.universe;
    ++r.hypothesis_met;
    auto cert_b = pns_star(lab.analysis(), inv, b, n);
    auto wb = certificate_witness(R, "1 - a not in R^star", b, n, cert_b);
    wb.add("agrees_with_text", !cert_b.has_value());
    r.discrepancy = r.discrepancy || cert_b.has_value();
    r.evidence.push_back(std::move(wb));

    // Disputed claim: 0 and 1 are the only projections.
    ++r.universe;
    ++r.hypothesis_met;
    auto proj = projections(lab.analysis(), inv);
    std::string listed;
    for (Element p : proj) listed += (listed.empty() ? "" : ",") + R.format(p);
    bool only_trivial = proj.size() == 2 && proj.contains(R.zero()) && proj.contains(R.one());
    r.evidence.push_back(Witness()
                             .add("claim", "0 and 1 are the only projections")
                             .add("projections", "{" + listed + "}")
                             .add("agrees_with_text", only_trivial));
    r.discrepancy = r.discrepancy || !only_trivial;

    r.notes.push_back("disputed claims are adjudicated by the oracle; disagreement sets discrepancy");
    r.finalize();
    return r;
}

} // namespace

std::vector<TheoremReport> audit_paper_examples() {
    return {audit_cline_counterexample(), audit_complement_projection(), audit_identity_involution()};
}

} // namespace pnslab
