#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <flagdeck/cli.hpp>

int main(int argc, char** argv)
{
    flagdeck::PipelineConfig cfg;
    CLI::App app{"flagdeck: flag complexes, PL moves, Boolean decompositions and Lefschetz towers"};
    app.add_option("command", cfg.command,
                   "info | check | subdivide | contract | walk | gamma | booldec | tower | verify")
        ->required();
    app.add_option("input", cfg.input_path, "facet file (MoveLog JSON for verify and gamma)")->required();
    app.add_option("--d", cfg.d, "dimension parameter d");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--plan", cfg.plan_path, "tower block plan (JSON list of move lists)");
    app.add_option("--out", cfg.out_path, "write the JSON report here instead of stdout");
    app.add_flag("--permissive", cfg.permissive, "allow ghost vertices and labels outside the ground set");
    app.add_option("--edge", cfg.edge, "edge a,b for subdivide and contract");
    app.add_option("--labels", cfg.labels, "label sequence l1,...,ld for booldec");
    app.add_option("--moves", cfg.moves, "walk length")->check(CLI::NonNegativeNumber);
    app.add_option("--bias", cfg.bias, "contraction probability during a walk")->check(CLI::Range(0.0, 1.0));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const flagdeck::CommandResult res = flagdeck::run_command(cfg);
    if (cfg.out_path) {
        std::ofstream out(*cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "flagdeck: cannot write '" << *cfg.out_path << "'\n";
            return 2;
        }
        out << res.report;
    } else {
        std::cout << res.report;
    }
    return res.exit_code;
}
