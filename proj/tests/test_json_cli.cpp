#include <gtest/gtest.h>

#include <sstream>

#include "sl2voa/cli.hpp"

using namespace sl2voa;
using sl2voa::json::Json;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--format");
    args.push_back("json");
    CliRun r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

}  // namespace

TEST(JsonRoundTrip, Rational) {
    for (const auto& r : {R(0), R(-7), R(3, 4), R(-22, 7)}) {
        EXPECT_EQ(json::rational_from_json(json::to_json(r)), r);
    }
    EXPECT_EQ(json::to_json(R(3, 4)).get<std::string>(), "3/4");
}

TEST(JsonRoundTrip, PolyWeightLevel) {
    const UniPoly f = poly_from_linear_factors({R(0), R(1), R(-3, 2), R(-1, 2)});
    const Json pj = json::to_json(f);
    EXPECT_EQ(pj.dump(), R"([[1,"-3/4"],[2,"-5/4"],[3,"1"],[4,"1"]])");
    EXPECT_EQ(json::unipoly_from_json(pj), f);

    const Level L = Level::from_pq(3, 2);
    EXPECT_EQ(json::to_json(L).dump(), R"({"p":3,"q":2,"ell":"-1/2","t":"3/2"})");
    EXPECT_EQ(json::level_from_json(json::to_json(L)), L);
    for (const auto& w : enumerate_admissible(L)) {
        EXPECT_EQ(json::weight_from_json(L, json::to_json(w)), w);
    }
    EXPECT_EQ(json::to_json(make_weight(L, 1, 1)).dump(), R"({"n":1,"k":1,"j":"-1/2"})");
}

TEST(JsonRoundTrip, Series) {
    const CharacterSpec s = make_character_spec(Level::from_pq(3, 2), make_weight(Level::from_pq(3, 2), 1, 1), R(1, 3));
    for (auto kind : {CharacterKind::Chi, CharacterKind::ChiBar}) {
        const QSeries ch = character_qseries(s, R(6), kind);
        const Json j = json::to_json(ch);
        EXPECT_EQ(j.at("D").get<long>(), ch.exponent_denominator());
        EXPECT_EQ(json::qseries_from_json(j), ch);
    }
    const QSeries zero(R(5, 2));
    EXPECT_EQ(json::qseries_from_json(json::to_json(zero)), zero);
}

TEST(JsonRoundTrip, PBWSerialization) {
    const PBWElement x = sl2_e() * sl2_f();
    EXPECT_EQ(json::to_json(x).dump(), R"({"algebra":"SL2","terms":[[[0,1,0],"1"],[[1,0,1],"1"]]})");
}

TEST(Cli, WeightsFixture) {
    const Json doc = run_json({"weights", "--p", "3", "--q", "2"});
    EXPECT_EQ(doc.at("schema_version"), "1");
    EXPECT_EQ(doc.at("results").at("count"), 4);
    EXPECT_EQ(doc.at("results").at("weights").size(), 4u);
    EXPECT_EQ(doc.at("command").at("subcommand"), "weights");
}

TEST(Cli, FusionFixture) {
    const Json doc = run_json({"fusion", "--p", "3", "--q", "2", "--j1", "1,0", "--j2", "1,1", "--oracle", "all"});
    const Json& rec = doc.at("results").at("fusion");
    EXPECT_TRUE(rec.at("oracles_agree").get<bool>());
    ASSERT_EQ(rec.at("outputs").size(), 1u);
    EXPECT_EQ(rec.at("outputs")[0].at("weight").at("j"), "-3/2");
    EXPECT_EQ(rec.at("outputs")[0].at("mult"), 1);
    // weights may also be given as rationals
    const Json by_j = run_json({"fusion", "--p", "3", "--q", "2", "--j1", "1", "--j2", "-1/2"});
    EXPECT_EQ(by_j.at("results").at("fusion"), rec);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"weights", "--p", "4", "--q", "2"}).code, 2);
    EXPECT_EQ(run({"weights", "--p", "x", "--q", "2"}).code, 2);
    EXPECT_EQ(run({"weights"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nosuch"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "all", "--pmax", "9"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"fusion", "--p", "3", "--q", "2", "--j1", "1/2", "--j2", "0"}).code, 2);
    EXPECT_EQ(run({"character", "--p", "3", "--q", "2", "--z", "1"}).code, 2);
    EXPECT_EQ(run({"character", "--p", "3", "--q", "2", "--tau", "0.5,0"}).code, 2);
    EXPECT_EQ(run({"stransform", "--p", "3", "--q", "2", "--tau", "1"}).code, 2);
    const CliRun r = run({"weights", "--p", "4", "--q", "2"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("NotCoprime"), std::string::npos);
}

TEST(Cli, EverySubcommandRuns) {
    EXPECT_EQ(run_json({"zhu", "--p", "3", "--q", "2"}).at("results").at("dimension"), 4);
    const Json b = run_json({"bimodule", "--p", "3", "--q", "2", "--j", "1"});
    EXPECT_EQ(b.at("results").at("projected").at("dims"), Json::array({2, 2}));
    const Json t = run_json({"fusion-table", "--p", "3", "--q", "2"});
    EXPECT_EQ(t.at("results").at("table").size(), 16u);
    const Json m = run_json({"mff-verify", "--trunc", "3", "--p", "3", "--q", "2", "--n", "1", "--k", "0"});
    EXPECT_TRUE(m.at("results").contains("projections"));
    const Json c = run_json({"character", "--p", "3", "--q", "2", "--n", "1", "--z", "1/2", "--trunc", "4",
                             "--tau", "0,2"});
    EXPECT_EQ(c.at("results").at("chi").at("terms")[0][1], "1");
    const Json s = run_json({"stransform", "--p", "3", "--q", "2", "--z", "1/2", "--tau", "0,1.5"});
    EXPECT_EQ(s.at("results").at("variants").size(), 3u);
    EXPECT_EQ(s.at("results").at("variants")[1].at("s_matrix").size(), 4u);
    const Json v = run_json({"verify", "--suite", "mff", "--pmax", "4", "--qmax", "3"});
    EXPECT_EQ(v.at("results").at("summary").at("failed"), 0);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"stransform", "--p", "3", "--q", "2", "--tau", "0,1.5", "--format", "json"};
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const std::vector<std::string> v{"verify", "--suite", "fusion", "--pmax", "4", "--qmax", "3", "--format", "json"};
    EXPECT_EQ(run(v).out, run(v).out);
}

TEST(Cli, TextIsRenderingOfJson) {
    const Json doc = run_json({"weights", "--p", "3", "--q", "2"});
    std::ostringstream expect;
    json::render_text(doc, expect);
    const CliRun text = run({"weights", "--p", "3", "--q", "2"});
    EXPECT_EQ(text.code, 0);
    EXPECT_EQ(text.out, expect.str());
}
