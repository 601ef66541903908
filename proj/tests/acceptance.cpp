// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "round_trip_corpus.hpp"
#include "support.hpp"

#include "pnslab/cli/app.hpp"
#include "pnslab/cli/serialize.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pnslab;
using namespace testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

SweepOptions n_range(std::uint32_t lo, std::uint32_t hi) {
    SweepOptions opt;
    opt.n_min = lo;
    opt.n_max = hi;
    return opt;
}

void require_clean(Outcome& o, const TheoremReport& r) {
    o.require(r.violations == 0 && r.status != ReportStatus::Violated,
              r.theorem_id + " on " + r.ring + " has " + std::to_string(r.violations) + " violations");
}

std::uint64_t cube(std::uint64_t x) { return x * x * x; }

Outcome oracle_formula_agreement() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    std::uint64_t tuples = 0, present = 0;
    for (auto R : corpus_rings()) {
        RingAnalysis A(std::move(R));
        for (Element a : A.ring().elements())
            for (std::uint32_t n = 1; n <= 4; ++n) {
                ++tuples;
                auto oracle = pns_oracle(A, a, n);
                auto formula = pns_formula(A, a, n);
                bool agree = oracle.has_value() == formula.has_value();
                if (agree && oracle) {
                    ++present;
                    agree = oracle->x == formula->x && oracle->e == formula->e && oracle->matches <= 1 &&
                            oracle->valid && formula->valid;
                }
                o.require(agree, A.ring().descriptor().to_string() + " a=" + A.ring().format(a) +
                                     " n=" + std::to_string(n));
            }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < 120.0, "time budget");
    o.detail << tuples << " (a,n) tuples, " << present << " invertible, " << seconds << " s";
    return o;
}

struct ExampleMatrices {
    std::unique_ptr<RingAnalysis> analysis;
    Involution inv;
    Element AB, BA;
};

ExampleMatrices example(std::uint64_t p) {
    auto A = std::make_unique<RingAnalysis>(build_ring(RingDescriptor::matrix(2, RingDescriptor::zn(p))));
    const auto& R = A->ring();
    auto a = el(R, "[[0,0],[1,1]]"), b = el(R, "[[0,1],[0,0]]");
    auto inv = build_involution(R, InvolutionKind::Transpose);
    return {std::move(A), std::move(inv), R.mul(a, b), R.mul(b, a)};
}

Outcome example_reproduction(bool complement) {
    Outcome o;
    for (std::uint64_t p : {2u, 3u}) {
        auto ex = example(p);
        const auto& R = ex.analysis->ring();
        auto in = complement ? R.sub(R.one(), ex.AB) : ex.AB;
        auto out = complement ? R.sub(R.one(), ex.BA) : ex.BA;
        for (std::uint32_t n = 1; n <= 4; ++n) {
            auto tag = "S=Z(" + std::to_string(p) + ") n=" + std::to_string(n);
            o.require(pns_star(*ex.analysis, ex.inv, in, n).has_value(), tag + " present");
            o.require(!pns_star(*ex.analysis, ex.inv, out, n).has_value(), tag + " absent");
        }
    }
    auto audit = audit_paper_examples();
    const auto& r = audit[complement ? 1 : 0];
    require_clean(o, r);
    o.require(r.status == ReportStatus::Verified, "audit report verified");
    o.detail << (complement ? "1-AB in R^star, 1-BA not" : "AB in R^star, BA not")
             << " over M(2,Z(2)), M(2,Z(3)), n=1..4";
    return o;
}

Outcome spectral_equality() {
    Outcome o;
    const char* sep = "";
    for (const auto& expr : {"M(2,Z(2))", "Z(12)"}) {
        RingLab lab(ring(expr));
        auto r = sweep_spectral_equality(lab, n_range(1, 3));
        require_clean(o, r);
        std::uint64_t order = lab.ring().order();
        o.require(r.universe == order * order * 3, std::string(expr) + " universe");
        o.detail << sep << expr << ": " << r.universe << " pairs x n, " << r.hypothesis_met << " with a invertible";
        sep = "; ";
    }
    return o;
}

Outcome characterizations() {
    Outcome o;
    std::uint64_t tuples = 0;
    for (auto R : corpus_rings()) {
        RingLab lab(std::move(R));
        for (const auto& r : sweep_characterizations(lab, n_range(1, 4))) {
            require_clean(o, r);
            o.require(r.status == ReportStatus::Verified, r.theorem_id + " verified");
        }
        tuples += lab.ring().order() * 4;
    }
    RingLab M3(ring("M(2,Z(3))"));
    auto neg = check_pns_characterizations(M3, el(M3.ring(), "[[2,0],[0,1]]"), 1);
    require_clean(o, neg);
    o.require(!neg.evidence.empty() && *neg.evidence.back().find("pns") == "false",
              "diag(2,1) in M(2,Z(3)) at n=1 must be non-invertible");
    o.detail << tuples << " (a,n) tuples; diag(2,1) at n=1 non-invertible";
    return o;
}

Outcome transfers() {
    Outcome o;
    for (const auto& expr : {"Z(6)", "T(2,Z(2))", "M(2,Z(2))"}) {
        RingLab lab(ring(expr));
        for (const auto& r : sweep_transfers(lab, n_range(1, 4))) {
            require_clean(o, r);
            o.require(r.parameters.at("triples") == "exhaustive", std::string(expr) + " exhaustive");
            o.require(r.universe == cube(lab.ring().order()) * 4, std::string(expr) + " universe");
        }
        o.detail << expr << " " << cube(lab.ring().order()) << " triples; ";
    }
    RingLab M3(ring("M(2,Z(3))"));
    std::uint64_t visited = 0;
    auto stats = for_each_triple(M3, TripleHypothesis::Cline, SweepOptions{}, [&](Element, Element, Element) {});
    visited = stats.visited;
    o.require(stats.sampled && visited >= 10000, "M(2,Z(3)) sample size");
    for (const auto& r : sweep_transfers(M3, n_range(1, 4))) {
        require_clean(o, r);
        o.require(r.parameters.at("triples") == "sampled", "M(2,Z(3)) sampled");
    }
    o.detail << "M(2,Z(3)) sampled " << visited << " of " << stats.population << " triples";
    return o;
}

Outcome star_transfer_sweeps() {
    Outcome o;
    RingLab M(ring("M(2,Z(2))"));
    SweepOptions opt = n_range(1, 2);
    opt.involution = InvolutionKind::Transpose;
    for (const auto& r : sweep_star_transfers(M, opt)) {
        require_clean(o, r);
        o.require(r.parameters.at("triples") == "exhaustive", "M(2,Z(2)) exhaustive");
        o.require(r.universe == 4096 * 2, "M(2,Z(2)) universe");
        o.require(r.hypothesis_met > 0, "hypothesis met");
    }
    std::uint64_t idempotents = 0;
    for (auto R : corpus_rings()) {
        RingLab lab(std::move(R));
        auto r = sweep_star_examples(lab, n_range(1, 4));
        require_clean(o, r);
        o.require(r.status == ReportStatus::Verified, r.ring + " Ex-3-3 verified");
        idempotents += lab.analysis().subset(SubsetKind::Idempotents).size();
    }
    o.detail << "M(2,Z(2)) transpose n=1..2; idempotent/projection over " << idempotents << " corpus idempotents";
    return o;
}

Outcome classification() {
    Outcome o;
    for (auto R : corpus_rings()) {
        RingLab lab(std::move(R));
        auto c = classify(lab);
        auto name = lab.ring().descriptor().to_string();
        o.require(c.periodic.value, name + " periodic");
        o.require(c.periodic.value == (c.pseudo_pi_polar.value && c.jacobson_nil.value), name + " periodic identity");
        require_clean(o, check_periodic_characterization(lab, {}));
        auto q = check_qnil_equality(lab, {});
        require_clean(o, q);
        if (c.pseudo_pi_polar.value)
            o.require(lab.analysis().subset(SubsetKind::SqrtJacobson) ==
                          lab.analysis().subset(SubsetKind::Quasinilpotents),
                      name + " sqrt(J) = qnil");
    }
    for (const auto& expr : {"Z(6)", "M(2,Z(2))"}) {
        RingLab lab(ring(expr));
        auto r = check_corner_closure(lab, {});
        require_clean(o, r);
        o.require(r.status == ReportStatus::Verified &&
                      r.hypothesis_met == lab.analysis().subset(SubsetKind::Idempotents).size(),
                  std::string(expr) + " every idempotent corner");
    }
    RingLab Z4(ring("Z(4)"));
    auto tn = check_triangular_rings(Z4, {});
    require_clean(o, tn);
    o.require(tn.status == ReportStatus::Verified, "Prop-Tn on Z(4)");
    RingLab Z2(ring("Z(2)"));
    auto mn = check_matrix_rings(Z2, {});
    require_clean(o, mn);
    o.require(mn.status == ReportStatus::Verified, "Prop-Mn on Z(2)");
    o.detail << "11 corpus rings periodic; corners of Z(6), M(2,Z(2)); T(2,Z(4)); M(2,Z(2))";
    return o;
}

Outcome identity_involution_audit() {
    Outcome o;
    auto audit = audit_paper_examples();
    const auto& r = audit.at(2);
    o.require(r.theorem_id == "Rem-2" && r.whitelisted, "Rem-2 report whitelisted");
    require_clean(o, r);
    auto claim = [&](const std::string& label) -> const Witness* {
        for (const auto& w : r.evidence)
            if (auto c = w.find("claim"); c && *c == label) return &w;
        return nullptr;
    };
    auto five = claim("a = -1 in R^star");
    o.require(five && *five->find("a") == "5" && *five->find("pns-*") == "true" && five->find("x"),
              "a=5 certificate");
    auto two = claim("1 - a not in R^star");
    o.require(two && *two->find("a") == "2" && two->find("pns-*") != nullptr, "a=2 verdict");

    RingAnalysis Z6(ring("Z(6)"));
    auto inv = build_involution(Z6.ring(), InvolutionKind::Identity);
    auto cert = pns_star(Z6, inv, el(Z6.ring(), "2"), 2);
    auto proj = projections(Z6, inv);
    bool disagrees = cert.has_value() || proj.size() != 2;
    o.require(two && *two->find("pns-*") == (cert ? "true" : "false"), "a=2 verdict matches oracle");
    o.require(r.discrepancy == disagrees, "discrepancy flag follows the oracle");
    if (cert) o.require(two && *two->find("x") == Z6.ring().format(cert->pns.x), "a=2 certificate");

    std::ostringstream out, err;
    o.require(cli::run({"audit"}, out, err) == cli::kExitSuccess, "audit exits 0");
    o.detail << "a=5 in R^star; a=2 " << (cert ? "in R^star (x=" + Z6.ring().format(cert->pns.x) + ")" : "absent")
             << "; discrepancy=" << (r.discrepancy ? "true" : "false");
    return o;
}

Outcome cli_contract() {
    Outcome o;
    for (const auto& text : kRoundTripCorpus) {
        auto once = cli::parse_ring_expr(text);
        auto twice = cli::parse_ring_expr(cli::print(once));
        o.require(once == twice, "round trip " + text);
    }
    auto capture = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return std::make_pair(code, out.str());
    };
    for (const auto& args : {std::vector<std::string>{"audit", "--json"},
                             {"invert", "Z(6)", "5", "--kind", "pns", "--n", "2", "--json"},
                             {"verify", "M(2,Z(2))", "--theorem", "Thm-1234", "--n-range", "1..3", "--json"}}) {
        auto a = capture(args), b = capture(args);
        o.require(a.first == 0 && a == b, "byte-identical JSON for " + args.front());
    }
    const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
        {{"invert", "Z(6)", "5", "--kind", "pns", "--n", "2", "--json"}, cli::kExitSuccess},
        {{"verify", "M(2,Z(2))", "--theorem", "Thm-1234", "--n-range", "1..3"}, cli::kExitSuccess},
        {{"invert", "Z(6)", "5", "--kind", "pns", "--n", "1", "--expect-present"}, cli::kExitViolated},
        {{"invert", "T(2,Z(4))", "[[1,2],[3,0]]", "--kind", "pns"}, cli::kExitUsage},
        {{"verify", "Z(6)", "--theorem", "Nope"}, cli::kExitUsage},
        {{"analyze", "Z(6"}, cli::kExitUsage},
        {{}, cli::kExitUsage},
    };
    for (const auto& [args, code] : matrix) {
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        o.require(capture(args).first == code, "exit code for " + joined);
    }
    o.detail << kRoundTripCorpus.size() << " expressions round-trip; JSON stable; " << matrix.size()
             << " exit-code cases";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"oracle-formula agreement", oracle_formula_agreement},
        {"AB/BA example", [] { return example_reproduction(false); }},
        {"1-AB/1-BA remark", [] { return example_reproduction(true); }},
        {"seven-way spectral equality", spectral_equality},
        {"characterizations", characterizations},
        {"Cline and Jacobson transfers", transfers},
        {"star transfers", star_transfer_sweeps},
        {"classification consistency", classification},
        {"identity involution audit", identity_involution_audit},
        {"CLI contract", cli_contract},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
                  << "): " << o.detail.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
