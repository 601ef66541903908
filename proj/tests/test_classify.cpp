#include "doctest.h"
#include "support.hpp"

using namespace pnslab;
using namespace testing;

TEST_CASE("classification flags") {
    RingLab Z6(ring("Z(6)"));
    auto c = classify(Z6);
    CHECK(c.periodic.value);
    CHECK(c.pseudo_pi_polar.value);
    CHECK(c.jacobson_nil.value);
    CHECK_FALSE(c.local.value);
    CHECK(c.local.witness.has_value());

    RingLab Z4(ring("Z(4)"));
    auto l = classify(Z4);
    CHECK(l.local.value);
    CHECK(l.special_local.value);

    auto names = flag_list(c);
    std::vector<std::string> keys;
    for (const auto& [k, f] : names) keys.push_back(k);
    CHECK(keys == Strings{"periodic", "stronglyPiRegular", "pseudoPiPolar", "pseudoPiPolarUniform", "piUU",
                          "jacobsonNil", "pseudoPolar", "local", "specialLocal"});
}

TEST_CASE("corpus rings satisfy the periodic identity") {
    for (auto R : corpus_rings()) {
        RingLab lab(std::move(R));
        auto c = classify(lab);
        INFO(lab.ring().descriptor().to_string());
        CHECK(c.periodic.value);
        CHECK(c.strongly_pi_regular.value);
        CHECK(c.periodic.value == (c.pseudo_pi_polar.value && c.jacobson_nil.value));
    }
}

TEST_CASE("structural statements") {
    RingLab Z6(ring("Z(6)"));
    for (const auto& r : structural_props(Z6, {})) CHECK(r.violations == 0);
    CHECK(Z6.analysis().subset(SubsetKind::SqrtJacobson) == Z6.analysis().subset(SubsetKind::Quasinilpotents));
    auto corner = check_corner_closure(Z6, {});
    CHECK(corner.status == ReportStatus::Verified);
    CHECK(corner.hypothesis_met == 4);

    RingLab Z4(ring("Z(4)"));
    auto tn = check_triangular_rings(Z4, {});
    CHECK(tn.status == ReportStatus::Verified);

    RingLab Z2(ring("Z(2)"));
    auto mn = check_matrix_rings(Z2, {});
    CHECK(mn.status == ReportStatus::Verified);
    CHECK(mn.hypothesis_met >= 1);

    RingLab M(ring("M(2,Z(2))"));
    auto mcorner = check_corner_closure(M, {});
    CHECK(mcorner.status == ReportStatus::Verified);
    CHECK(mcorner.hypothesis_met == M.analysis().subset(SubsetKind::Idempotents).size());
}

TEST_CASE("conjecture search") {
    auto r = conjecture_search(default_corpus());
    CHECK(r.violations == 0);
    CHECK(r.universe == 11);
    auto m3 = conjecture_search({ring("M(2,Z(3))").descriptor()});
    CHECK(m3.violations == 0);
}

TEST_CASE("paper example audit") {
    auto reports = audit_paper_examples();
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].theorem_id == "Ex-6-20");
    CHECK(reports[0].status == ReportStatus::Verified);
    CHECK(reports[1].theorem_id == "Rem-1");
    CHECK(reports[1].status == ReportStatus::Verified);
    const auto& rem = reports[2];
    CHECK(rem.theorem_id == "Rem-2");
    CHECK(rem.whitelisted);
    CHECK(rem.violations == 0);

    // The discrepancy flag must follow the oracle, recomputed here.
    RingAnalysis Z6(ring("Z(6)"));
    auto inv = build_involution(Z6.ring(), InvolutionKind::Identity);
    bool two_invertible = pns_star(Z6, inv, el(Z6.ring(), "2"), 2).has_value();
    bool only_trivial = projections(Z6, inv).size() == 2;
    CHECK(rem.discrepancy == (two_invertible || !only_trivial));
    CHECK(pns_star(Z6, inv, el(Z6.ring(), "5"), 2).has_value());
}
