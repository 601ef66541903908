#include "pnslab/cli/app.hpp"

#include "pnslab/cli/dsl.hpp"
#include "pnslab/cli/serialize.hpp"
#include "pnslab/pnslab.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pnslab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    bool json = false;
    std::uint64_t order_cap = 65536;
    bool allow_over_cap = false;

    std::string ring;
    std::string element;
    std::string kind;
    std::uint32_t n = 1;
    std::string involution;
    bool expect_present = false;
    std::uint32_t max_n = 4;
    std::string theorem;
    std::string n_range = "1..4";
    std::optional<std::uint64_t> sample_seed;
    std::string corpus_file;
};

FiniteRing build(const Settings& s) {
    BuildOptions b;
    b.order_cap = s.order_cap;
    b.allow_over_cap = s.allow_over_cap;
    return build_ring(to_descriptor(parse_ring_expr(s.ring)), b);
}

InvolutionKind involution_kind(const std::string& name) {
    auto k = parse_involution_kind(name);
    if (!k) throw UsageError("unknown involution '" + name + "' (identity, transpose, componentwise)");
    return *k;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--n-range must look like A..B");
    try {
        std::size_t used_a = 0, used_b = 0;
        auto lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
        auto lo = std::stoul(lo_text, &used_a);
        auto hi = std::stoul(hi_text, &used_b);
        if (used_a != lo_text.size() || used_b != hi_text.size() || lo < 1 || hi < lo || hi > 64)
            throw UsageError("");
        return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
    } catch (const std::exception&) {
        throw UsageError("--n-range must be A..B with 1 <= A <= B <= 64");
    }
}

struct Outcome {
    Json payload;
    std::string text;
    int code = kExitSuccess;
};

Outcome analyze(const Settings& s) {
    auto R = build(s);
    RingLab lab(R);
    const auto& A = lab.analysis();
    Outcome o;
    std::ostringstream text;
    o.payload["order"] = R.order();
    o.payload["commutative"] = R.is_commutative();
    text << R.descriptor().to_string() << ": order " << R.order() << (R.is_commutative() ? ", commutative" : "")
         << "\n";
    for (auto kind : kAllSubsetKinds) {
        const auto& set = A.subset(kind);
        o.payload["subsets"][to_string(kind)] = to_json(R, set);
        text << "  " << to_string(kind) << " (" << set.size() << "):";
        for (Element e : set) text << " " << R.format(e);
        text << "\n";
    }
    auto c = classify(lab);
    o.payload["classification"] = to_json(R, c);
    for (const auto& [name, flag] : flag_list(c)) {
        text << "  " << name << ": " << (flag->value ? "yes" : "no");
        if (flag->witness) text << " (" << R.format(*flag->witness) << ")";
        if (!flag->detail.empty()) text << " " << flag->detail;
        text << "\n";
    }
    if (auto inv = default_involution(R)) {
        auto proj = projections(A, *inv);
        o.payload["involution"] = {{"label", inv->label()}, {"projections", to_json(R, proj)}};
        text << "  projections under " << inv->label() << ":";
        for (Element p : proj) text << " " << R.format(p);
        text << "\n";
    } else {
        o.payload["involution"] = nullptr;
    }
    o.text = text.str();
    return o;
}

Outcome invert(const Settings& s) {
    auto R = build(s);
    RingAnalysis A(R);
    auto a = parse_element(s.element, R);
    if (s.n < 1) throw UsageError("--n must be >= 1");
    Outcome o;
    bool present = false;
    o.payload["kind"] = s.kind;
    o.payload["a"] = R.format(a);
    if (s.kind == "drazin" || s.kind == "pdrazin") {
        auto c = s.kind == "drazin" ? drazin_inverse(A, a) : p_drazin_inverse(A, a);
        present = c.has_value();
        o.payload["certificate"] = c ? to_json(R, *c) : Json(nullptr);
        o.text = c ? to_text(R, *c) : s.kind + " inverse of " + R.format(a) + ": absent\n";
    } else if (s.kind == "pns") {
        o.payload["n"] = s.n;
        auto oracle = pns_oracle(A, a, s.n);
        present = oracle.has_value();
        o.payload["certificate"] = oracle ? to_json(R, *oracle) : Json(nullptr);
        std::optional<PnsCertificate> formula;
        try {
            formula = pns_formula(A, a, s.n);
            o.payload["formula"] = formula ? to_json(R, *formula) : Json(nullptr);
        } catch (const RingError& e) {
            o.payload["formula"] = {{"error", to_string(e.code())}, {"message", e.what()}};
        }
        bool agree = oracle.has_value() == formula.has_value() && (!oracle || oracle->x == formula->x);
        o.payload["paths_agree"] = agree;
        o.text = oracle ? to_text(R, *oracle)
                        : "pns inverse of " + R.format(a) + " at n = " + std::to_string(s.n) + ": absent\n";
        o.text += std::string("oracle and formula paths ") + (agree ? "agree" : "DISAGREE") + "\n";
    } else if (s.kind == "pns-star") {
        o.payload["n"] = s.n;
        auto inv = s.involution.empty() ? default_involution(R)
                                        : std::optional<Involution>(build_involution(R, involution_kind(s.involution)));
        if (!inv) throw UsageError("no default involution for " + R.descriptor().to_string() + "; pass --involution");
        auto c = pns_star(A, *inv, a, s.n);
        auto routes = star_routes(A, *inv, a, s.n);
        present = c.has_value();
        o.payload["involution"] = inv->label();
        o.payload["certificate"] = c ? to_json(R, *c) : Json(nullptr);
        o.payload["routes"] = {{"by_definition", routes.by_definition}, {"by_projection", routes.by_projection}};
        o.text = c ? to_text(R, *c)
                   : "pns-* inverse of " + R.format(a) + " at n = " + std::to_string(s.n) + " under " + inv->label() +
                         ": absent\n";
    } else {
        throw UsageError("--kind must be one of drazin, pdrazin, pns, pns-star");
    }
    o.payload["present"] = present;
    if (!present && s.expect_present) o.code = kExitViolated;
    return o;
}

Outcome spectrum(const Settings& s) {
    auto R = build(s);
    RingAnalysis A(R);
    auto a = parse_element(s.element, R);
    if (s.max_n < 1) throw UsageError("--max-n must be >= 1");
    auto sp = pns_spectrum(A, a, s.max_n);
    Outcome o;
    o.payload = {{"a", R.format(a)},
                 {"max_n", sp.max_n},
                 {"exponents", sp.exponents},
                 {"minimal", sp.minimal() ? Json(*sp.minimal()) : Json(nullptr)},
                 {"universe", sp.max_n}};
    std::ostringstream text;
    text << "pns spectrum of " << R.format(a) << " over n = 1.." << sp.max_n << ": {";
    for (std::size_t i = 0; i < sp.exponents.size(); ++i) text << (i ? "," : "") << sp.exponents[i];
    text << "}";
    if (sp.minimal()) text << ", minimal n = " << *sp.minimal();
    text << "\n";
    o.text = text.str();
    return o;
}

Outcome reports_outcome(const std::vector<TheoremReport>& reports) {
    Outcome o;
    o.payload["reports"] = Json::array();
    for (const auto& r : reports) {
        o.payload["reports"].push_back(to_json(r));
        o.text += to_text(r);
        if (r.status == ReportStatus::Violated && !r.whitelisted) o.code = kExitViolated;
    }
    return o;
}

Outcome verify(const Settings& s) {
    SweepOptions opt;
    std::tie(opt.n_min, opt.n_max) = parse_range(s.n_range);
    opt.order_cap = s.order_cap;
    if (!s.involution.empty()) opt.involution = involution_kind(s.involution);
    if (s.sample_seed) opt.seed = *s.sample_seed;
    std::vector<std::string_view> ids;
    if (s.theorem == "all")
        ids.assign(kTheoremIds.begin(), kTheoremIds.end());
    else if (is_theorem_id(s.theorem))
        ids.push_back(s.theorem);
    else
        throw UsageError("unknown theorem id '" + s.theorem + "'");
    RingLab lab(build(s));
    std::vector<TheoremReport> reports;
    for (auto id : ids) reports.push_back(run_theorem(id, lab, opt));
    return reports_outcome(reports);
}

Outcome audit(const Settings&) { return reports_outcome(audit_paper_examples()); }

Outcome conjecture(const Settings& s) {
    std::vector<RingDescriptor> corpus;
    if (s.corpus_file.empty()) {
        corpus = default_corpus();
    } else {
        std::ifstream in(s.corpus_file);
        if (!in) throw UsageError("cannot read corpus file '" + s.corpus_file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        corpus = parse_corpus(buffer.str());
    }
    SweepOptions opt;
    opt.order_cap = s.order_cap;
    return reports_outcome({conjecture_search(corpus, opt)});
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Finite-ring laboratory for pseudo n-strong Drazin inverses", "pnslab"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.add_flag("--json", s.json, "Emit a key-sorted JSON report on standard output");
    app.add_option("--order-cap", s.order_cap, "Largest ring order that may be built")->capture_default_str();
    app.add_flag("--allow-over-cap", s.allow_over_cap, "Build rings above the order cap");

    auto* analyze_cmd = app.add_subcommand("analyze", "Structural subsets and classification of a ring");
    analyze_cmd->add_option("ring", s.ring, "Ring expression, e.g. \"M(2,Z(2))\"")->required();

    auto* invert_cmd = app.add_subcommand("invert", "Generalized inverse of an element with its certificate");
    invert_cmd->add_option("ring", s.ring, "Ring expression")->required();
    invert_cmd->add_option("element", s.element, "Element literal, e.g. 5, [[0,1],[0,0]] or (2,3)")->required();
    invert_cmd->add_option("--kind", s.kind, "drazin, pdrazin, pns or pns-star")
        ->required()
        ->check(CLI::IsMember({"drazin", "pdrazin", "pns", "pns-star"}));
    invert_cmd->add_option("--n", s.n, "Exponent n >= 1")->capture_default_str();
    invert_cmd->add_option("--involution", s.involution, "identity, transpose or componentwise");
    invert_cmd->add_flag("--expect-present", s.expect_present, "Exit 1 when the inverse does not exist");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Exponents n admitting a pns inverse");
    spectrum_cmd->add_option("ring", s.ring, "Ring expression")->required();
    spectrum_cmd->add_option("element", s.element, "Element literal")->required();
    spectrum_cmd->add_option("--max-n", s.max_n, "Largest exponent tried")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Sweep a statement over a ring");
    verify_cmd->add_option("ring", s.ring, "Ring expression")->required();
    verify_cmd->add_option("--theorem", s.theorem, "Statement identifier, or 'all'")->required();
    verify_cmd->add_option("--n-range", s.n_range, "Exponent range A..B")->capture_default_str();
    verify_cmd->add_option("--involution", s.involution, "identity, transpose or componentwise");
    verify_cmd->add_option("--sample", s.sample_seed, "Seed for sampled triple sweeps");

    auto* audit_cmd = app.add_subcommand("audit", "Rebuild the worked examples and adjudicate them");
    auto* conjecture_cmd = app.add_subcommand("conjecture", "Search a corpus for a counterexample");
    conjecture_cmd->add_option("--corpus", s.corpus_file, "Newline-separated ring expressions ('#' comments)");

    std::vector<std::string> argv_storage{"pnslab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string command;
    Json arguments = Json::object();
    try {
        Outcome o;
        if (analyze_cmd->parsed()) {
            command = "analyze";
            o = analyze(s);
        } else if (invert_cmd->parsed()) {
            command = "invert";
            arguments = {{"element", s.element}, {"kind", s.kind}, {"n", s.n}, {"expect_present", s.expect_present}};
            if (!s.involution.empty()) arguments["involution"] = s.involution;
            o = invert(s);
        } else if (spectrum_cmd->parsed()) {
            command = "spectrum";
            arguments = {{"element", s.element}, {"max_n", s.max_n}};
            o = spectrum(s);
        } else if (verify_cmd->parsed()) {
            command = "verify";
            arguments = {{"theorem", s.theorem}, {"n_range", s.n_range}};
            if (!s.involution.empty()) arguments["involution"] = s.involution;
            if (s.sample_seed) arguments["sample"] = *s.sample_seed;
            o = verify(s);
        } else if (audit_cmd->parsed()) {
            command = "audit";
            o = audit(s);
        } else {
            command = "conjecture";
            arguments = {{"corpus", s.corpus_file.empty() ? Json(nullptr) : Json(s.corpus_file)}};
            o = conjecture(s);
        }
        std::string ring;
        if (!s.ring.empty()) ring = to_descriptor(parse_ring_expr(s.ring)).to_string();
        if (s.json)
            out << command_report(command, arguments, ring, std::move(o.payload)).dump(2) << "\n";
        else
            out << o.text;
        return o.code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RingError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace pnslab::cli
