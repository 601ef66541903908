#include "doctest.h"
#include "round_trip_corpus.hpp"
#include "support.hpp"

#include "pnslab/cli/app.hpp"
#include "pnslab/cli/serialize.hpp"

#include <sstream>

using namespace pnslab;
using namespace pnslab::cli;
using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace


TEST_CASE("DSL parses the spec examples") {
    CHECK(to_descriptor(parse_ring_expr("Z(6)")) == RingDescriptor::zn(6));
    CHECK(to_descriptor(parse_ring_expr("M(2,Z(2)) x Z(9)")) ==
          RingDescriptor::product(RingDescriptor::matrix(2, RingDescriptor::zn(2)), RingDescriptor::zn(9)));
    CHECK(to_descriptor(parse_ring_expr("corner(Z(6),3)")) ==
          RingDescriptor::corner(RingDescriptor::zn(6), Literal::integer(3)));
    auto left = parse_ring_expr("Z(2) x Z(3) x Z(5)");
    CHECK(left == parse_ring_expr("(Z(2) x Z(3)) x Z(5)"));
    CHECK_FALSE(left == parse_ring_expr("Z(2) x (Z(3) x Z(5))"));
}

TEST_CASE("DSL round trip") {
    CHECK(kRoundTripCorpus.size() >= 20);
    for (const auto& text : kRoundTripCorpus) {
        INFO(text);
        auto once = parse_ring_expr(text);
        auto printed = print(once);
        auto twice = parse_ring_expr(printed);
        CHECK(once == twice);
        CHECK(print(twice) == printed);
        CHECK(from_descriptor(to_descriptor(once)) == once);
    }
}

TEST_CASE("DSL syntax errors carry positions") {
    auto position_of = [](std::string_view text) -> std::size_t {
        try {
            parse_ring_expr(text);
        } catch (const SyntaxError& e) {
            CHECK(e.code() == ErrorCode::SyntaxError);
            return e.position();
        }
        FAIL("parsed: " << text);
        return 0;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("Q(3)") == 0);
    CHECK(position_of("Z(6") == 3);
    CHECK(position_of("M(2 Z(2))") == 4);
    CHECK(position_of("Z(6) x") == 6);
    CHECK(position_of("Z(6) Z(3)") == 5);
    CHECK_THROWS_AS(parse_literal("[[1,2],"), SyntaxError);
    CHECK(parse_element("-1", ring("Z(6)")).index == 5);
}

TEST_CASE("corpus files") {
    auto corpus = parse_corpus("# rings\nZ(6)\n\n  M(2,Z(2))  # inline\n");
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[1] == RingDescriptor::matrix(2, RingDescriptor::zn(2)));
    CHECK_THROWS_AS(parse_corpus("Z(6)\nZ(\n"), SyntaxError);
}

TEST_CASE("invert command") {
    auto r = invoke({"invert", "Z(6)", "5", "--kind", "pns", "--n", "2", "--json"});
    CHECK(r.code == kExitSuccess);
    auto j = Json::parse(r.out);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["command"] == "invert");
    CHECK(j["ring"] == "Z(6)");
    CHECK(j["payload"]["certificate"]["x"] == "5");
    CHECK(j["payload"]["certificate"]["e"] == "1");
    CHECK(j["payload"]["certificate"]["k"] == 1);
    CHECK(j["payload"]["paths_agree"] == true);
}

TEST_CASE("verify command reports the universe") {
    auto r = invoke({"verify", "M(2,Z(2))", "--theorem", "Thm-1234", "--n-range", "1..3", "--json"});
    CHECK(r.code == kExitSuccess);
    auto rep = Json::parse(r.out)["payload"]["reports"][0];
    CHECK(rep["status"] == "verified");
    CHECK(rep["universe"] == 768);
    auto text = invoke({"verify", "Z(6)", "--theorem", "Lem-1-1"});
    CHECK(text.code == kExitSuccess);
    CHECK(text.out.find("universe") != std::string::npos);
}

TEST_CASE("exit code matrix") {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases = {
        {{"analyze", "Z(6)"}, kExitSuccess},
        {{"analyze", "Z(6)", "--json"}, kExitSuccess},
        {{"invert", "Z(6)", "5", "--kind", "pns", "--n", "2", "--expect-present"}, kExitSuccess},
        {{"invert", "Z(6)", "5", "--kind", "pns", "--n", "1"}, kExitSuccess},
        {{"invert", "Z(6)", "5", "--kind", "pns", "--n", "1", "--expect-present"}, kExitViolated},
        {{"invert", "M(2,Z(2))", "[[1,1],[0,0]]", "--kind", "pns-star", "--expect-present"}, kExitViolated},
        {{"invert", "M(2,Z(2))", "[[0,0],[0,1]]", "--kind", "pns-star", "--expect-present"}, kExitSuccess},
        {{"invert", "Z(6)", "2", "--kind", "drazin"}, kExitSuccess},
        {{"invert", "Z(4)", "2", "--kind", "pdrazin", "--json"}, kExitSuccess},
        {{"spectrum", "Z(6)", "5", "--max-n", "4"}, kExitSuccess},
        {{"verify", "Z(6)", "--theorem", "all"}, kExitSuccess},
        {{"verify", "M(2,Z(3))", "--theorem", "Lem-3-1", "--n-range", "1..1", "--sample", "7"}, kExitSuccess},
        {{"audit"}, kExitSuccess},
        {{"conjecture"}, kExitSuccess},
        {{}, kExitUsage},
        {{"--help"}, kExitSuccess},
        {{"frobnicate"}, kExitUsage},
        {{"analyze", "Z(6"}, kExitUsage},
        {{"analyze", "M(4,Z(4))"}, kExitUsage},
        {{"analyze", "corner(Z(6),2)"}, kExitUsage},
        {{"invert", "T(2,Z(4))", "[[1,2],[3,0]]", "--kind", "pns"}, kExitUsage},
        {{"invert", "Z(6)", "5", "--kind", "moore-penrose"}, kExitUsage},
        {{"invert", "M(2,Z(2))", "1", "--kind", "pns"}, kExitUsage},
        {{"invert", "M(2,Z(2))", "[[1,0],[0,1]]", "--kind", "pns-star", "--involution", "identity"}, kExitUsage},
        {{"verify", "Z(6)", "--theorem", "Thm-0"}, kExitUsage},
        {{"verify", "Z(6)", "--theorem", "Lem-1-1", "--n-range", "3..1"}, kExitUsage},
        {{"conjecture", "--corpus", "/nonexistent/corpus.txt"}, kExitUsage},
    };
    for (const auto& c : cases) {
        std::string joined;
        for (const auto& a : c.args) joined += a + " ";
        INFO(joined);
        auto r = invoke(c.args);
        CHECK(r.code == c.code);
        if (c.code == kExitUsage && c.args.size() > 1) CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("JSON output is deterministic and key-sorted") {
    for (std::vector<std::string> args : {std::vector<std::string>{"audit", "--json"},
                                          {"analyze", "T(2,Z(4))", "--json"},
                                          {"verify", "Z(12)", "--theorem", "all", "--json"}}) {
        auto a = invoke(args), b = invoke(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        auto j = Json::parse(a.out);
        CHECK(j.dump(2) + "\n" == a.out);
        CHECK_FALSE(j.contains("timestamp"));
    }
}

TEST_CASE("audit JSON carries the discrepancy flag") {
    auto r = invoke({"audit", "--json"});
    CHECK(r.code == kExitSuccess);
    auto reports = Json::parse(r.out)["payload"]["reports"];
    REQUIRE(reports.size() == 3);
    CHECK(reports[2]["theorem"] == "Rem-2");
    CHECK(reports[2].contains("discrepancy"));
    CHECK(reports[2]["whitelisted"] == true);
}
