#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include <flagdeck/cli.hpp>

#include "oracles.hpp"

using namespace flagdeck;

namespace {

const std::string data_dir = FLAGDECK_DATA_DIR;

std::string data(const std::string& name)
{
    return data_dir + "/" + name;
}

/// Writes text to a fresh file under the temp directory and returns its path.
std::string scratch(const std::string& name, const std::string& text)
{
    const auto dir = std::filesystem::temp_directory_path() / "flagdeck_io_cli";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

CommandResult run(const std::string& command, const std::string& input, PipelineConfig cfg = {})
{
    cfg.command = command;
    cfg.input_path = input;
    return run_command(cfg);
}

json body(const CommandResult& r)
{
    return json::parse(r.report);
}

} // namespace

TEST(Parse, Examples)
{
    EXPECT_EQ(parse_complex("0 1\n1 2\n2 3\n0 3\n"), cycle(4));
    EXPECT_EQ(parse_complex("# comment\n\n0 1\r\n1 2\n0 2\n"),
              SimplicialComplex::from_facets({Face{0, 1}, Face{1, 2}, Face{0, 2}}));
    EXPECT_EQ(parse_complex(""), SimplicialComplex{});
    EXPECT_EQ(parse_complex("63\n"), SimplicialComplex::from_facets({Face{63}}));
}

TEST(Parse, ErrorsNameTheLine)
{
    const std::vector<std::pair<std::string, std::string>> bad{
        {"0 1\n1  2\n", "expected a vertex id"},
        {"0 1\n\n1 x\n", "malformed vertex id 'x'"},
        {"0 64\n", "exceeds 63"},
        {"# c\n0 1 0\n", "duplicate vertex 0"},
        {"0 1 \n", "expected a vertex id"},
        {"-1\n", "malformed vertex id"},
    };
    const std::vector<std::size_t> lines{2, 3, 1, 2, 1, 1};
    for (std::size_t i = 0; i < bad.size(); ++i) {
        try {
            parse_complex(bad[i].first);
            ADD_FAILURE() << "accepted: " << bad[i].first;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), lines[i]) << e.what();
            EXPECT_NE(std::string(e.what()).find(bad[i].second), std::string::npos) << e.what();
        }
    }
}

TEST(Parse, GroundModes)
{
    // a facet contained in another is absorbed; the point 3 stays a facet
    const auto k = parse_complex("1 2\n3\n1\n");
    EXPECT_EQ(k.facets().size(), 2u);
    EXPECT_NO_THROW(parse_complex("1 2\n3\n", GroundMode::permissive));
}

TEST(Json, RoundTrips)
{
    const auto w = random_flag_walk(4, cross_polytope_boundary(3), 6);
    EXPECT_EQ(log_from_json(json::parse(log_json(w.log).dump())), w.log);
    EXPECT_EQ(complex_from_json(facets_json(w.complex)), w.complex);
    EXPECT_EQ(face_from_json(face_json(Face{3, 9, 40})), (Face{3, 9, 40}));
    for (const auto& m : {Move{MoveKind::subdivide, Face{0, 1}, VertexId{7}},
                          Move{MoveKind::contract, Face{2, 5}, VertexId{2}},
                          Move{MoveKind::subdivide, Face{0, 1}, std::nullopt}})
        EXPECT_EQ(move_from_json(move_json(m)), m);
    const std::vector<MoveBlock> plan{{Move{MoveKind::subdivide, Face{0, 4}, std::nullopt}}};
    EXPECT_EQ(plan_from_json(plan_json(plan)), plan);

    const auto g = build_gamma_along_walk(3, w.log);
    const auto back = witness_from_json(json::parse(witness_json(g).dump()));
    EXPECT_EQ(back.gamma, g.gamma);
    EXPECT_EQ(back.labels, g.labels);
    EXPECT_EQ(back.steps.size(), g.steps.size());
    EXPECT_THROW(move_from_json(json{{"kind", "flip"}, {"edge", {0, 1}}}), std::exception);
}

TEST(Property, SerializeParseRoundTrip)
{
    std::mt19937_64 rng(701);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = trial % 2 ? oracle::random_flag_complex(rng, 2 + static_cast<int>(rng() % 20), 0.4)
                                 : oracle::random_complex(rng, 2 + static_cast<int>(rng() % 60),
                                                          1 + static_cast<int>(rng() % 8));
        ASSERT_EQ(parse_complex(serialize_complex(k), GroundMode::permissive), k);
    }
}

TEST(Cli, Info)
{
    const auto r = run("info", data("octahedron.txt"));
    EXPECT_EQ(r.exit_code, 0);
    const auto j = body(r);
    EXPECT_EQ(j["f"], json({1, 6, 12, 8}));
    EXPECT_EQ(j["h"], json({1, 3, 3, 1}));
    EXPECT_EQ(j["d"], 3);
    EXPECT_TRUE(j["flag"].get<bool>());
    EXPECT_TRUE(j["pm"].get<bool>());
    EXPECT_TRUE(j["cm"].get<bool>());
}

TEST(Cli, Check)
{
    const auto r = run("check", data("c5.txt"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(body(r)["reduced_betti"], json({0, 0, 1}));
    const auto bowtie = run("check", scratch("bowtie.txt", "0 1 2\n0 3 4\n"));
    EXPECT_EQ(bowtie.exit_code, 1);
    EXPECT_FALSE(body(bowtie)["cm"].get<bool>());
}

TEST(Cli, SubdivideAndContract)
{
    PipelineConfig cfg;
    cfg.edge = "0,1";
    const auto up = run("subdivide", data("c5.txt"), cfg);
    EXPECT_EQ(up.exit_code, 0);
    EXPECT_EQ(body(up)["h"], json({1, 4, 1}));

    cfg.edge = "1,2";
    const auto refused = run("contract", data("c4.txt"), cfg);
    EXPECT_EQ(refused.exit_code, 1);
    const auto j = body(refused);
    EXPECT_TRUE(j["refused"].get<bool>());
    EXPECT_EQ(j["four_cycle"].size(), 4u);

    EXPECT_EQ(run("contract", data("c5.txt"), cfg).exit_code, 0);
    cfg.edge = "0,2";
    EXPECT_EQ(run("contract", data("c5.txt"), cfg).exit_code, 2);
    cfg.edge = "0";
    EXPECT_EQ(run("subdivide", data("c5.txt"), cfg).exit_code, 2);
    EXPECT_EQ(run("subdivide", data("c5.txt")).exit_code, 2);
}

TEST(Cli, Booldec)
{
    PipelineConfig cfg;
    cfg.d = 2;
    const auto found = run("booldec", data("gamma_131.txt"), cfg);
    EXPECT_EQ(found.exit_code, 0);
    EXPECT_EQ(body(found)["S"], json::array({json::array(), json::array({3})}));

    cfg.labels = "1,3";
    const auto refused = run("booldec", data("gamma_131.txt"), cfg);
    EXPECT_EQ(refused.exit_code, 1);
    EXPECT_EQ(body(refused)["refusal"]["face"], json({1, 2}));

    cfg.labels = "1,2,3";
    EXPECT_EQ(run("booldec", data("gamma_131.txt"), cfg).exit_code, 2);
    EXPECT_EQ(run("booldec", data("gamma_131.txt")).exit_code, 2);
    cfg.d = 2;
    cfg.labels.reset();
    EXPECT_EQ(run("booldec", scratch("two_edges.txt", "1 2\n3 4\n"), cfg).exit_code, 1);
}

TEST(Cli, WalkGammaVerify)
{
    PipelineConfig cfg;
    cfg.seed = 11;
    cfg.moves = 6;
    const auto walk = run("walk", data("octahedron.txt"), cfg);
    ASSERT_EQ(walk.exit_code, 0);
    const std::string log_path = scratch("walk.json", walk.report);
    EXPECT_EQ(run("verify", log_path).exit_code, 0);

    const auto gamma = run("gamma", log_path);
    EXPECT_EQ(gamma.exit_code, 0);
    EXPECT_EQ(body(gamma)["gamma_f"], body(walk)["h"]);

    auto log = body(walk)["log"];
    log[2]["f_after"][1] = log[2]["f_after"][1].get<Int>() + 1;
    const auto bad = run("verify", scratch("bad_walk.json", json{{"log", log}}.dump()));
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_EQ(body(bad)["first_bad"], 2);
    EXPECT_EQ(run("gamma", scratch("bad_walk2.json", json{{"log", log}}.dump())).exit_code, 2);

    EXPECT_EQ(run("gamma", data("c5.txt"), cfg).exit_code, 0);
}

TEST(Cli, Tower)
{
    PipelineConfig cfg;
    cfg.d = 4;
    cfg.plan_path = data("plan_c4_d4.json");
    const auto r = run("tower", data("c4.txt"), cfg);
    EXPECT_EQ(r.exit_code, 0);
    const auto j = body(r);
    EXPECT_EQ(j["dims"], json({4, 20}));
    EXPECT_TRUE(j["verdict"].get<bool>());
    cfg.plan_path = data("plan_c4_d4_block3.json");
    EXPECT_EQ(run("tower", data("c4.txt"), cfg).exit_code, 0);
    cfg.d = 6;
    EXPECT_EQ(run("tower", data("c4.txt"), cfg).exit_code, 2);
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(run("info", data("does_not_exist.txt")).exit_code, 2);
    const auto bad = run("info", scratch("bad.txt", "0 1\n1 q\n"));
    EXPECT_EQ(bad.exit_code, 2);
    EXPECT_NE(body(bad)["error"].get<std::string>().find("line 2"), std::string::npos);
    EXPECT_EQ(run("frobnicate", data("c4.txt")).exit_code, 2);
    EXPECT_EQ(run("verify", data("c4.txt")).exit_code, 2);
    // strict mode rejects a label outside the complex
    PipelineConfig cfg;
    cfg.d = 2;
    cfg.labels = "1,9";
    EXPECT_EQ(run("booldec", data("gamma_131.txt"), cfg).exit_code, 2);
    cfg.permissive = true;
    EXPECT_EQ(run("booldec", data("gamma_131.txt"), cfg).exit_code, 1);
}

TEST(Cli, ReportsAreDeterministic)
{
    PipelineConfig cfg;
    cfg.seed = 3;
    cfg.moves = 10;
    for (const auto& input : {"c5.txt", "octahedron.txt"}) {
        const auto a = run("walk", data(input), cfg);
        const auto b = run("walk", data(input), cfg);
        EXPECT_EQ(a.report, b.report);
        const auto ga = run("gamma", data(input), cfg);
        const auto gb = run("gamma", data(input), cfg);
        EXPECT_EQ(ga.report, gb.report);
    }
    PipelineConfig other = cfg;
    other.seed = 5;
    EXPECT_NE(run("walk", data("octahedron.txt"), cfg).report,
              run("walk", data("octahedron.txt"), other).report);
}
