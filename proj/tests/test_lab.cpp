#include "doctest.h"
#include "support.hpp"

using namespace pnslab;
using namespace testing;

namespace {

SweepOptions n_range(std::uint32_t lo, std::uint32_t hi) {
    SweepOptions opt;
    opt.n_min = lo;
    opt.n_max = hi;
    return opt;
}

void require_clean(const TheoremReport& r) {
    INFO(r.theorem_id << " on " << r.ring);
    CHECK(r.violations == 0);
    CHECK(r.counterexamples.empty());
    CHECK(r.status != ReportStatus::Violated);
}

} // namespace

TEST_CASE("report status rules") {
    TheoremReport r;
    r.finalize();
    CHECK(r.status == ReportStatus::Vacuous);
    r.universe = 3;
    r.hypothesis_met = 2;
    r.finalize();
    CHECK(r.status == ReportStatus::Verified);
    r.violation(Witness().add("a", "1"));
    r.finalize();
    CHECK(r.status == ReportStatus::Violated);
    CHECK(r.violations == 1);
    for (int i = 0; i < 40; ++i) r.violation(Witness());
    CHECK(r.counterexamples.size() == TheoremReport::kMaxCounterexamples);
    CHECK(r.violations == 41);
    CHECK(Witness().add("k", std::uint32_t{7}).find("k") != nullptr);
}

TEST_CASE("seven spectral conditions") {
    RingLab Z4(ring("Z(4)"));
    auto s = evaluate_spectral_conditions(Z4, el(Z4.ring(), "1"), el(Z4.ring(), "3"), 2);
    for (bool b : s.holds) CHECK(b);
    CHECK(check_spectral_equality(Z4, el(Z4.ring(), "1"), el(Z4.ring(), "3"), 2).status == ReportStatus::Verified);

    RingLab M(ring("M(2,Z(2))"));
    auto f = evaluate_spectral_conditions(M, el(M.ring(), "[[1,0],[0,0]]"), el(M.ring(), "[[0,1],[0,0]]"), 1);
    for (bool b : f.holds) CHECK_FALSE(b);
    CHECK(f.all_equal());

    for (Element a : M.ring().elements())
        if (M.pns().invertible(a, 1)) CHECK(evaluate_spectral_conditions(M, a, a, 1).holds[0]);
    auto M3 = RingLab(ring("M(2,Z(3))"));
    CHECK_THROWS_AS(evaluate_spectral_conditions(M3, el(M3.ring(), "[[2,0],[0,1]]"), M3.ring().one(), 1), RingError);
}

TEST_CASE("characterizations") {
    RingLab M3(ring("M(2,Z(3))"));
    auto neg = check_pns_characterizations(M3, el(M3.ring(), "[[2,0],[0,1]]"), 1);
    require_clean(neg);
    REQUIRE_FALSE(neg.evidence.empty());
    CHECK(*neg.evidence.back().find("pns") == "false");

    RingLab Z6(ring("Z(6)"));
    auto idem = check_pns_characterizations(Z6, el(Z6.ring(), "4"), 3);
    require_clean(idem);
    CHECK(*idem.evidence.back().find("x") == "4");

    RingLab Z8(ring("Z(8)"));
    auto rad = check_pns_characterizations(Z8, el(Z8.ring(), "2"), 1);
    require_clean(rad);
    CHECK(*rad.evidence.back().find("x") == "0");
    CHECK(Z8.pns().spectral_idempotent(el(Z8.ring(), "2"), 1) == Z8.ring().zero());
}

TEST_CASE("Cline transfer examples") {
    RingLab Z6(ring("Z(6)"));
    const auto& R = Z6.ring();
    auto r = cline_transfer(Z6, el(R, "2"), el(R, "3"), el(R, "3"), 1);
    CHECK(r.hypothesis_met == 1);
    CHECK(r.status == ReportStatus::Verified);

    RingLab M(ring("M(2,Z(2))"));
    const auto& S = M.ring();
    auto A = el(S, "[[0,0],[1,1]]"), B = el(S, "[[0,1],[0,0]]");
    CHECK(S.mul(S.mul(A, B), A) == A);
    auto c = cline_transfer(M, A, B, B, 1);
    CHECK(c.hypothesis_met == 1);
    CHECK(c.status == ReportStatus::Verified);
    for (Element a : S.elements()) CHECK(cline_transfer(M, a, a, a, 2).status == ReportStatus::Verified);
    auto miss = cline_transfer(M, A, B, S.zero(), 1);
    CHECK(miss.hypothesis_met == 0);
    CHECK(miss.status == ReportStatus::Vacuous);
}

TEST_CASE("Jacobson transfer examples") {
    RingLab M(ring("M(2,Z(2))"));
    const auto& S = M.ring();
    auto A = el(S, "[[0,0],[1,1]]"), B = el(S, "[[0,1],[0,0]]");
    auto alpha = S.sub(S.one(), S.mul(B, A));
    auto beta = S.sub(S.one(), S.mul(A, B));
    CHECK(S.mul(alpha, alpha) == alpha);
    CHECK(S.mul(beta, beta) == beta);
    CHECK(jacobson_transfer(M, A, B, B, 1).status == ReportStatus::Verified);

    RingLab Z12(ring("Z(12)"));
    const auto& R = Z12.ring();
    auto r = jacobson_transfer(Z12, el(R, "2"), el(R, "5"), el(R, "5"), 2);
    CHECK(r.status == ReportStatus::Verified);
    CHECK(Z12.pns().inverse(el(R, "3"), 2) == el(R, "3"));
}

TEST_CASE("star transfer examples") {
    RingLab M(ring("M(2,Z(2))"));
    const auto& S = M.ring();
    auto inv = build_involution(S, InvolutionKind::Transpose);
    auto A = el(S, "[[0,0],[1,1]]"), B = el(S, "[[0,1],[0,0]]");
    auto hyp_fails = star_transfers(M, inv, A, B, B, 1);
    CHECK(hyp_fails.hypothesis_met == 0);
    CHECK(hyp_fails.violations == 0);
    for (Element a : S.elements()) CHECK(star_transfers(M, inv, a, a, a, 1).status == ReportStatus::Verified);
}

TEST_CASE("triple enumeration") {
    RingLab M(ring("M(2,Z(2))"));
    std::uint64_t seen = 0;
    auto stats = for_each_triple(M, TripleHypothesis::Cline, SweepOptions{}, [&](Element, Element, Element) { ++seen; });
    CHECK_FALSE(stats.sampled);
    CHECK(stats.visited == seen);
    CHECK(stats.population == seen);
    CHECK(seen == 1504);

    RingLab M3(ring("M(2,Z(3))"));
    std::vector<std::array<std::uint32_t, 3>> first, second;
    auto s1 = for_each_triple(M3, TripleHypothesis::Cline, SweepOptions{},
                              [&](Element a, Element b, Element c) { first.push_back({a.index, b.index, c.index}); });
    for_each_triple(M3, TripleHypothesis::Cline, SweepOptions{},
                    [&](Element a, Element b, Element c) { second.push_back({a.index, b.index, c.index}); });
    CHECK(s1.sampled);
    CHECK(s1.visited >= 10000);
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
    for (auto [a, b, c] : first) {
        const auto& R = M3.ring();
        auto x = R.at(a), y = R.at(b), z = R.at(c);
        REQUIRE(R.mul(R.mul(x, y), x) == R.mul(R.mul(x, z), x));
    }
}

TEST_CASE("sweeps on small rings") {
    RingLab M(ring("M(2,Z(2))"));
    auto spectral = sweep_spectral_equality(M, n_range(1, 3));
    require_clean(spectral);
    CHECK(spectral.universe == 256 * 3);
    CHECK(spectral.status == ReportStatus::Verified);

    auto transfers = sweep_transfers(M, n_range(1, 2));
    for (const auto& r : transfers) {
        require_clean(r);
        CHECK(r.universe == 4096 * 2);
        CHECK(r.hypothesis_met == 1504 * 2);
    }
    for (const auto& id : kTheoremIds) {
        auto r = run_theorem(id, M, n_range(1, 2));
        CHECK(r.theorem_id == id);
        require_clean(r);
    }
    CHECK_THROWS_AS(run_theorem("Thm-9999", M, {}), RingError);
    CHECK(is_theorem_id("Lem-3-2"));
    CHECK_FALSE(is_theorem_id("lem-3-2"));
}

TEST_CASE("matrix rings over fields") {
    RingLab M3(ring("M(2,Z(3))"));
    auto r = sweep_matrix_field(M3, {});
    require_clean(r);
    CHECK(r.status == ReportStatus::Verified);
    RingLab Z8(ring("Z(8)"));
    CHECK(sweep_matrix_field(Z8, {}).status == ReportStatus::Vacuous);
}
