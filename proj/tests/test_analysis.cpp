#include "doctest.h"
#include "support.hpp"

using namespace pnslab;
using namespace testing;

TEST_CASE("structural subsets") {
    RingAnalysis Z4(ring("Z(4)"));
    CHECK(formatted(Z4.ring(), Z4.subset(SubsetKind::JacobsonRadical)) == Strings{"0", "2"});
    RingAnalysis Z6(ring("Z(6)"));
    CHECK(formatted(Z6.ring(), Z6.subset(SubsetKind::Idempotents)) == Strings{"0", "1", "3", "4"});
    CHECK(formatted(Z6.ring(), Z6.subset(SubsetKind::Units)) == Strings{"1", "5"});
    CHECK(formatted(Z6.ring(), Z6.subset(SubsetKind::SqrtJacobson)) == Strings{"0"});
    RingAnalysis Z8(ring("Z(8)"));
    CHECK(formatted(Z8.ring(), Z8.subset(SubsetKind::SqrtJacobson)) == Strings{"0", "2", "4", "6"});
    CHECK(formatted(Z8.ring(), Z8.subset(SubsetKind::Nilpotents)) == Strings{"0", "2", "4", "6"});
}

TEST_CASE("sqrt(J) equals the nilpotents over matrix rings over fields") {
    for (const auto& expr : {"M(2,Z(2))", "M(2,Z(3))"}) {
        RingAnalysis A(ring(expr));
        CHECK(A.subset(SubsetKind::SqrtJacobson) == A.subset(SubsetKind::Nilpotents));
        CHECK(A.subset(SubsetKind::JacobsonRadical).size() == 1);
    }
}

TEST_CASE("subset containments on the corpus") {
    for (auto R : corpus_rings()) {
        RingAnalysis A(std::move(R));
        const auto& sqrtJ = A.subset(SubsetKind::SqrtJacobson);
        CHECK(A.subset(SubsetKind::Nilpotents).subset_of(sqrtJ));
        CHECK(A.subset(SubsetKind::JacobsonRadical).subset_of(sqrtJ));
        CHECK(sqrtJ.subset_of(A.subset(SubsetKind::Quasinilpotents)));
    }
}

TEST_CASE("commutants") {
    RingAnalysis M(ring("M(2,Z(2))"));
    const auto& R = M.ring();
    auto N = el(R, "[[0,1],[0,0]]");
    CHECK(M.commutant(R.zero()).size() == 16);
    CHECK(formatted(R, M.commutant(N)) ==
          Strings{"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[1,0],[0,1]]", "[[1,1],[0,1]]"});
    CHECK(M.double_commutant(N) == M.commutant(N));
    CHECK(formatted(R, M.center()) == Strings{"[[0,0],[0,0]]", "[[1,0],[0,1]]"});

    RingAnalysis Z12(ring("Z(12)"));
    for (Element a : Z12.ring().elements()) {
        CHECK(Z12.commutant(a).size() == 12);
        CHECK(Z12.double_commutant(a).size() == 12);
    }
    for (auto Rc : corpus_rings()) {
        RingAnalysis A(std::move(Rc));
        for (Element a : A.ring().elements()) {
            const auto& dc = A.double_commutant(a);
            for (Element p : A.trajectory(a).powers) REQUIRE(dc.contains(p));
        }
    }
}

TEST_CASE("annihilators and principal ideals") {
    RingAnalysis Z6(ring("Z(6)"));
    const auto& R = Z6.ring();
    CHECK(formatted(R, Z6.right_annihilator(el(R, "2"))) == Strings{"0", "3"});
    CHECK(Z6.right_annihilator(R.zero()).size() == 6);
    CHECK(formatted(R, Z6.right_annihilator(R.one())) == Strings{"0"});
    CHECK(formatted(R, Z6.principal_right_ideal(el(R, "2"))) == Strings{"0", "2", "4"});
    CHECK(formatted(R, Z6.principal_right_ideal(el(R, "3"))) == Strings{"0", "3"});
    CHECK(Z6.principal_right_ideal(R.one()).size() == 6);
}

TEST_CASE("unit inverses") {
    RingAnalysis Z6(ring("Z(6)"));
    CHECK(Z6.inverse(el(Z6.ring(), "5")) == el(Z6.ring(), "5"));
    RingAnalysis M(ring("M(2,Z(2))"));
    auto u = el(M.ring(), "[[1,1],[0,1]]");
    CHECK(M.inverse(u) == u);
    CHECK(M.inverse(M.ring().one()) == M.ring().one());
    CHECK_THROWS_AS(Z6.inverse(el(Z6.ring(), "2")), RingError);
}

TEST_CASE("involutions") {
    auto Z6 = ring("Z(6)");
    CHECK_NOTHROW(build_involution(Z6, InvolutionKind::Identity));
    auto M = ring("M(2,Z(2))");
    auto t = build_involution(M, InvolutionKind::Transpose);
    CHECK(t(el(M, "[[0,1],[0,0]]")) == el(M, "[[0,0],[1,0]]"));

    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const RingError& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([&] { build_involution(M, InvolutionKind::Identity); }) == ErrorCode::NotCommutative);
    auto MM = ring("M(2,M(2,Z(2)))");
    CHECK(code_of([&] { build_involution(MM, InvolutionKind::Transpose); }) == ErrorCode::NotCommutative);

    auto T = ring("T(2,Z(4))");
    auto tt = build_involution(T, InvolutionKind::Transpose);
    CHECK(T.format(tt(el(T, "[[1,2],[0,3]]"))) == "[[3,2],[0,1]]");

    for (const auto& R : corpus_rings()) {
        auto inv = default_involution(R);
        REQUIRE(inv.has_value());
        for (Element x : R.elements()) REQUIRE((*inv)((*inv)(x)) == x);
    }
    CHECK(default_involution_kind(ring("Z(4) x Z(9)").descriptor()) == InvolutionKind::Identity);
    CHECK(default_involution_kind(ring("M(2,Z(2)) x Z(3)").descriptor()) == InvolutionKind::Componentwise);
    CHECK(default_involution_kind(M.descriptor()) == InvolutionKind::Transpose);
    CHECK(default_involution_kind(Z6.descriptor()) == InvolutionKind::Identity);
}

TEST_CASE("projections") {
    RingAnalysis M(ring("M(2,Z(2))"));
    const auto& R = M.ring();
    auto P = projections(M, build_involution(R, InvolutionKind::Transpose));
    CHECK(P.contains(el(R, "[[0,0],[0,1]]")));
    CHECK(P.contains(el(R, "[[1,0],[0,0]]")));
    CHECK_FALSE(P.contains(el(R, "[[1,1],[0,0]]")));
    CHECK(P.contains(R.zero()));
    CHECK(P.contains(R.one()));

    RingAnalysis Z6(ring("Z(6)"));
    CHECK(projections(Z6, build_involution(Z6.ring(), InvolutionKind::Identity)) ==
          Z6.subset(SubsetKind::Idempotents));
}
