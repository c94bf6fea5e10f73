#include <wid/wid.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "support.hpp"
#include "wid_cli.hpp"

using namespace wid;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "wid");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    const Run r = run(args);
    return json::parse(r.out);
}

}  // namespace

TEST(Parser, Examples)
{
    const NcPoly x1 = NcPoly::gen(Naming::x(1)), x2 = NcPoly::gen(Naming::x(2)), y1 = NcPoly::gen(Naming::y(1));
    EXPECT_EQ(parse_poly("[x1^2,x2]"), commutator(x1 * x1, x2));
    EXPECT_EQ(parse_poly("S(3)").size(), 6u);
    EXPECT_EQ(parse_poly("x1*y1*x2 - x2*y1*x1"), x1 * y1 * x2 - x2 * y1 * x1);
    EXPECT_EQ(parse_poly("jord(x1, x2)"), jordan(x1, x2));
    EXPECT_EQ(parse_poly(" 3/6 * ( x1 + y1 ) "), (x1 + y1) * Rational(Integer(1), Integer(2)));
    EXPECT_EQ(parse_poly("-x1 + x1"), NcPoly{});
}

TEST(Parser, Errors)
{
    EXPECT_THROW(parse_poly("x1^0"), ParseError);
    EXPECT_THROW(parse_poly("x0"), ParseError);
    EXPECT_THROW(parse_poly("[x1,x2"), ParseError);
    EXPECT_THROW(parse_poly("1/0"), ParseError);
    EXPECT_THROW(parse_poly("x1 x2"), ParseError);
    EXPECT_THROW(parse_poly("z1"), ParseError);
    try {
        parse_poly("x1 + )");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(Formatter, Examples)
{
    EXPECT_EQ(format_expr(NcPoly{}), "0");
    EXPECT_EQ(format_expr(parse_poly("[x1,x2]")), "x1*x2 - x2*x1");
    EXPECT_EQ(format_expr(parse_poly("-1/2*x1 + 3")), "3 - 1/2*x1");
}

TEST(Formatter, RoundTripProperty)
{
    std::mt19937 rng(61);
    for (int i = 0; i < 250; ++i) {
        const NcPoly f = testing_support::random_poly(rng, 6, 5, 4);
        const std::string text = format_expr(f);
        ASSERT_EQ(parse_poly(text), f) << text;
        ASSERT_EQ(format_expr(parse_poly(text)), text);
    }
}

TEST(Report, JsonRoundTrip)
{
    std::mt19937 rng(62);
    for (int i = 0; i < 50; ++i) {
        Report r;
        r.command = "check";
        r.inputs = {{"expr", format_expr(testing_support::random_poly(rng))}};
        r.status = i % 2 ? "holds" : "fails";
        r.outcome = {{"rank", i}, {"list", {1, 2, 3}}};
        r.elapsed_ms = 0.25 * i;
        r.seeds = {0, static_cast<unsigned>(i)};
        const Report back = json::parse(json(r).dump()).get<Report>();
        EXPECT_EQ(back, r);
    }
}

TEST(Cli, CheckHoldsAndFails)
{
    auto r = run({"check", "--pair", "clifford:3", "[x1^2,x2]"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("check: holds"), std::string::npos);
    r = run({"check", "--pair", "clifford:2", "x1*x2 - x2*x1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("x1→e1, x2→e2"), std::string::npos);
    EXPECT_NE(r.out.find("2*e{1,2}"), std::string::npos);
    EXPECT_EQ(run({"check", "--pair", "m2", "S(4)"}).code, 0);
    EXPECT_EQ(run({"check", "--pair", "clifford:2:1,-1", "S(3)"}).code, 0);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"check", "--pair", "clifford:2", "x1 +"}).code, 2);
    EXPECT_EQ(run({"check", "--pair", "sp:2", "x1"}).code, 2);
    EXPECT_EQ(run({"check", "--pair", "clifford:2:1", "x1"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"dim", "--n", "7", "--pair", "m2"}).code, 2);
    EXPECT_EQ(run({"lemma2", "--n", "3", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"factor", "--n", "2", "--ys", "x1*y1"}).code, 2);
    EXPECT_EQ(run({"--max-degree", "3", "check", "--pair", "m2", "S(4)"}).code, 2);
}

TEST(Cli, MachineOutputHasReportFields)
{
    const json j = run_json({"dim", "--n", "4", "--pair", "clifford:2"});
    for (const char* key : {"command", "inputs", "status", "outcome", "elapsed_ms", "seeds"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["outcome"]["quotient_dim"], 6);
    EXPECT_EQ(j.get<Report>().command, "dim");
}

TEST(Cli, StructureCommands)
{
    EXPECT_EQ(run_json({"span", "--n", "3", "--gens", "[x1^2,x2]"})["outcome"]["rank"], 2);
    EXPECT_EQ(run_json({"theorem1", "--n", "4"})["status"], "holds");
    EXPECT_EQ(run_json({"corollary1", "--n", "4", "--k", "2"})["outcome"]["kernel"]["kernel_dim"], 18);
    const json l2 = run_json({"lemma2", "--n", "3", "--k", "1"});
    EXPECT_EQ(l2["outcome"]["recursion"]["alpha"], "-2/3");
    EXPECT_EQ(l2["outcome"]["solved"]["beta"], "1/3");
    EXPECT_TRUE(l2["outcome"]["agree"].get<bool>());
    const json l1 = run_json({"lemma1", "--n", "2"});
    EXPECT_EQ(l1["outcome"]["terms"].size(), 3u);
    EXPECT_EQ(l1["outcome"]["lhs"], "x1*y1*y2*x2 - x2*y1*y2*x1");
    const json fac = run_json({"factor", "--n", "2", "--ys", "y1"});
    EXPECT_EQ(fac["outcome"]["pairs"].size(), 2u);
    EXPECT_TRUE(fac["outcome"]["verified"].get<bool>());
    EXPECT_EQ(run_json({"standard", "--n", "4"})["outcome"]["value_at_basis"], "24*e{1,2,3,4}");
    const json d = run_json({"diagrams", "min", "3,1;2,1;2,2"});
    EXPECT_EQ(d["outcome"]["minimal"], json::array({"(2,1)"}));
}

TEST(Cli, MaxDegreeFromEnvironment)
{
    ::setenv("WID_MAX_DEGREE", "3", 1);
    EXPECT_EQ(run({"check", "--pair", "m2", "S(4)"}).code, 2);
    EXPECT_EQ(run({"--max-degree", "5", "check", "--pair", "m2", "S(4)"}).code, 0);
    ::unsetenv("WID_MAX_DEGREE");
}

#ifdef WID_BINARY
TEST(Cli, BinaryExitCodes)
{
    auto status = [](const std::string& args) {
        const int s = std::system((std::string(WID_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    EXPECT_EQ(status("check --pair clifford:4 '[x1^2,x2]'"), 0);
    EXPECT_EQ(status("check --pair clifford:2 'x1*x2 - x2*x1'"), 1);
    EXPECT_EQ(status("check --pair clifford:2 'x1 +'"), 2);
}
#endif
