#ifndef FLAGDECK_CLI_HPP
#define FLAGDECK_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace flagdeck {

struct PipelineConfig {
    std::string command;
    std::string input_path;
    std::uint64_t seed = 0;
    std::optional<int> d;
    bool permissive = false;
    std::optional<std::string> plan_path;
    std::optional<std::string> out_path;
    std::optional<std::string> edge;   // "a,b" for subdivide / contract
    std::optional<std::string> labels; // "l1,l2,..." for booldec
    int moves = 10;                    // walk length
    double bias = 0.5;                 // contraction probability in walk
};

struct CommandResult {
    int exit_code = 0;
    std::string report; // JSON, newline terminated
};

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<VertexId> parse_id_list(const std::string& text, const char* what)
{
    std::vector<VertexId> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, end - pos);
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v >= kMaxVertices)
            throw Error(std::string("malformed ") + what + " '" + text + "'");
        out.push_back(static_cast<VertexId>(v));
        pos = end + 1;
    }
    return out;
}

inline Face parse_edge(const std::optional<std::string>& text)
{
    if (!text)
        throw Error("--edge a,b is required");
    const auto vs = parse_id_list(*text, "edge");
    if (vs.size() != 2)
        throw Error("--edge needs exactly two vertices");
    return Face::from_vertices(vs);
}

inline bool looks_like_json(const std::string& text)
{
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (text[p] == '[' || text[p] == '{');
}

inline GroundMode mode_of(const PipelineConfig& cfg)
{
    return cfg.permissive ? GroundMode::permissive : GroundMode::strict;
}

inline json complex_summary(const SimplicialComplex& k)
{
    const FHVector fh = fh_vector(k);
    return json{{"facets", facets_json(k)}, {"d", fh.d}, {"f", fh.f}, {"h", fh.h}};
}

inline CommandResult finish(int code, const json& j)
{
    return {code, j.dump(2) + "\n"};
}

inline CommandResult cmd_info(const PipelineConfig& cfg, const SimplicialComplex& k)
{
    (void)cfg;
    json j = complex_summary(k);
    j["flag"] = is_flag(k);
    j["pm"] = is_pseudomanifold(k).value;
    j["cm"] = is_cohen_macaulay(k).value;
    return finish(0, j);
}

inline CommandResult cmd_check(const SimplicialComplex& k)
{
    const BettiProfile b = betti(k);
    const Verdict cm = is_cohen_macaulay(k);
    json j = complex_summary(k);
    j["reduced_betti"] = b.reduced;
    j["cm"] = cm.value;
    if (!cm)
        j["reason"] = cm.reason;
    return finish(cm ? 0 : 1, j);
}

inline CommandResult cmd_subdivide(const PipelineConfig& cfg, const SimplicialComplex& k)
{
    Move m{MoveKind::subdivide, parse_edge(cfg.edge), std::nullopt};
    auto [next, entry] = apply_move(k, m);
    json j = complex_summary(next);
    j["log"] = log_json({entry});
    return finish(0, j);
}

inline CommandResult cmd_contract(const PipelineConfig& cfg, const SimplicialComplex& k)
{
    const Face e = parse_edge(cfg.edge);
    require_edge(k, e);
    try {
        auto [next, entry] = apply_move(k, Move{MoveKind::contract, e, std::nullopt});
        json j = complex_summary(next);
        j["log"] = log_json({entry});
        return finish(0, j);
    } catch (const InadmissibleEdge& err) {
        return finish(1, json{{"refused", true},
                              {"edge", face_json(e)},
                              {"four_cycle", err.cycle()},
                              {"reason", err.what()}});
    } catch (const Error& err) {
        if (link_condition(k, e))
            throw;
        return finish(1, json{{"refused", true}, {"edge", face_json(e)}, {"reason", err.what()}});
    }
}

inline CommandResult cmd_walk(const PipelineConfig& cfg, const SimplicialComplex& k)
{
    const WalkResult w = random_flag_walk(cfg.seed, k, cfg.moves, cfg.bias);
    json j = complex_summary(w.complex);
    j["seed"] = cfg.seed;
    j["log"] = log_json(w.log);
    return finish(0, j);
}

inline CommandResult cmd_gamma(const PipelineConfig& cfg, const std::string& text)
{
    MoveLog log;
    int base_d = 0;
    if (looks_like_json(text)) {
        const json j = json::parse(text);
        log = log_from_json(j.is_object() ? j.at("log") : j);
        base_d = cfg.d.value_or(log.empty() ? 0 : log.front().d());
    } else {
        const SimplicialComplex k = parse_complex(text, mode_of(cfg));
        log = random_flag_walk(cfg.seed, k, cfg.moves, cfg.bias).log;
        base_d = k.d();
    }
    if (auto check = verify_move_log(log); !check)
        throw Error("move log entry " + std::to_string(check.first_bad.value_or(0)) +
                    " is inconsistent: " + check.reason);
    const GammaWitness w = build_gamma_along_walk(base_d, log);
    json j = witness_json(w);
    j["all_links_certified"] = w.all_links_certified();
    return finish(w.matches_target() ? 0 : 1, j);
}

inline CommandResult cmd_booldec(const PipelineConfig& cfg, const SimplicialComplex& k)
{
    if (!cfg.d)
        throw Error("booldec needs --d N");
    const int d = *cfg.d;
    if (cfg.labels) {
        LabeledComplex lc{k, parse_id_list(*cfg.labels, "label list")};
        if (static_cast<int>(lc.labels.size()) != d)
            throw Error("--labels must list exactly d vertices");
        validate_labels(lc, mode_of(cfg));
        const BooleanOutcome out = verify_boolean(lc, mode_of(cfg));
        if (const auto* c = std::get_if<BooleanCertificate>(&out))
            return finish(0, certificate_json(*c));
        return finish(1, json{{"refusal", refusal_json(std::get<Refusal>(out))}});
    }
    if (auto c = search_boolean(k, d))
        return finish(0, certificate_json(*c));
    return finish(1, json{{"refusal", json{{"face", nullptr},
                                           {"reason", "no label sequence of length " +
                                                          std::to_string(d) +
                                                          " gives a Boolean decomposition"}}}});
}

inline CommandResult cmd_tower(const PipelineConfig& cfg, const SimplicialComplex& base)
{
    if (!cfg.d)
        throw Error("tower needs --d N");
    std::vector<MoveBlock> plan;
    if (cfg.plan_path)
        plan = plan_from_json(json::parse(read_file(*cfg.plan_path)));
    const auto levels = build_tower(base, *cfg.d, plan);
    const auto ls = assemble_L(levels);
    const TowerReport rep = lefschetz_verdict(levels, ls, *cfg.d);
    return finish(rep.verdict ? 0 : 1, report_json(rep));
}

inline CommandResult cmd_verify(const std::string& text)
{
    const json j = json::parse(text);
    const MoveLog log = log_from_json(j.is_object() ? j.at("log") : j);
    const MoveLogCheck check = verify_move_log(log);
    json out{{"ok", check.ok}, {"entries", log.size()}};
    if (!check) {
        out["first_bad"] = check.first_bad.value_or(0);
        out["reason"] = check.reason;
    }
    return finish(check ? 0 : 1, out);
}

} // namespace detail

/// Runs one command. Input errors (unreadable or malformed files, bad
/// options, violated preconditions) give exit code 2 and an error report.
inline CommandResult run_command(const PipelineConfig& cfg)
{
    using namespace detail;
    try {
        const std::string text = read_file(cfg.input_path);
        const std::string& c = cfg.command;
        if (c == "verify")
            return cmd_verify(text);
        if (c == "gamma")
            return cmd_gamma(cfg, text);
        const SimplicialComplex k = parse_complex(text, mode_of(cfg));
        if (c == "info")
            return cmd_info(cfg, k);
        if (c == "check")
            return cmd_check(k);
        if (c == "subdivide")
            return cmd_subdivide(cfg, k);
        if (c == "contract")
            return cmd_contract(cfg, k);
        if (c == "walk")
            return cmd_walk(cfg, k);
        if (c == "booldec")
            return cmd_booldec(cfg, k);
        if (c == "tower")
            return cmd_tower(cfg, k);
        throw Error("unknown command '" + c + "'");
    } catch (const std::exception& err) {
        return finish(2, json{{"error", err.what()}});
    }
}

} // namespace flagdeck

#endif
