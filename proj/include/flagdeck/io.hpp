#ifndef FLAGDECK_IO_HPP
#define FLAGDECK_IO_HPP

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolean.hpp"
#include "gamma.hpp"
#include "tower.hpp"
#include "transforms.hpp"

namespace flagdeck {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Facet-list text format
// ---------------------------------------------------------------------------

/**
 * One facet per line, vertex ids in base 10 separated by single spaces.
 * Lines starting with '#' and blank lines are skipped; a file without
 * facets is the empty complex {∅}.
 */
inline SimplicialComplex parse_complex(const std::string& text, GroundMode mode = GroundMode::strict)
{
    std::vector<Face> facets;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        Face f;
        std::size_t pos = 0;
        while (true) {
            const std::size_t end = std::min(line.find(' ', pos), line.size());
            if (end == pos)
                throw ParseError(lineno, "malformed facet: expected a vertex id");
            unsigned long v = 0;
            const char* first = line.data() + pos;
            const char* last = line.data() + end;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last)
                throw ParseError(lineno, "malformed vertex id '" + std::string(first, last) + "'");
            if (v >= kMaxVertices)
                throw ParseError(lineno, "vertex id " + std::to_string(v) + " exceeds 63");
            if (f.contains(static_cast<VertexId>(v)))
                throw ParseError(lineno, "duplicate vertex " + std::to_string(v) + " in facet");
            f = f.with(static_cast<VertexId>(v));
            if (end == line.size())
                break;
            pos = end + 1;
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets), mode);
}

inline std::string serialize_complex(const SimplicialComplex& k)
{
    std::string out;
    for (Face f : k.facets()) {
        if (f.empty())
            continue;
        const auto vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(vs[i]);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json face_json(Face f)
{
    return json(f.vertices());
}

inline Face face_from_json(const json& j)
{
    return Face::from_vertices(j.get<std::vector<VertexId>>());
}

inline json faces_json(const std::vector<Face>& faces)
{
    json out = json::array();
    for (Face f : faces)
        out.push_back(face_json(f));
    return out;
}

inline json facets_json(const SimplicialComplex& k)
{
    return faces_json(k.facets());
}

inline SimplicialComplex complex_from_json(const json& j)
{
    std::vector<Face> facets;
    for (const auto& f : j)
        facets.push_back(face_from_json(f));
    return SimplicialComplex::from_facets(std::move(facets));
}

inline json move_json(const Move& m)
{
    json j{{"kind", to_string(m.kind)}, {"edge", face_json(m.edge)}};
    if (m.vertex)
        j[m.kind == MoveKind::subdivide ? "new_vertex" : "survivor"] = *m.vertex;
    return j;
}

inline Move move_from_json(const json& j)
{
    Move m;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "subdivide")
        m.kind = MoveKind::subdivide;
    else if (kind == "contract")
        m.kind = MoveKind::contract;
    else
        throw Error("unknown move kind '" + kind + "'");
    m.edge = face_from_json(j.at("edge"));
    if (m.edge.size() != 2)
        throw Error("move edge must have two vertices");
    if (m.kind == MoveKind::subdivide && j.contains("new_vertex"))
        m.vertex = j.at("new_vertex").get<VertexId>();
    if (m.kind == MoveKind::contract && j.contains("survivor"))
        m.vertex = j.at("survivor").get<VertexId>();
    return m;
}

inline json log_json(const MoveLog& log)
{
    json out = json::array();
    for (const auto& e : log) {
        json j = move_json(e.move);
        j["f_before"] = e.f_before;
        j["f_after"] = e.f_after;
        j["h_before"] = e.h_before;
        j["h_after"] = e.h_after;
        j["h_link"] = e.h_link;
        out.push_back(std::move(j));
    }
    return out;
}

inline MoveLog log_from_json(const json& j)
{
    MoveLog log;
    for (const auto& item : j) {
        MoveLogEntry e;
        e.move = move_from_json(item);
        e.f_before = item.at("f_before").get<std::vector<Int>>();
        e.f_after = item.at("f_after").get<std::vector<Int>>();
        e.h_before = item.at("h_before").get<std::vector<Int>>();
        e.h_after = item.at("h_after").get<std::vector<Int>>();
        e.h_link = item.at("h_link").get<std::vector<Int>>();
        log.push_back(std::move(e));
    }
    return log;
}

inline std::vector<MoveBlock> plan_from_json(const json& j)
{
    std::vector<MoveBlock> plan;
    for (const auto& block : j) {
        MoveBlock b;
        for (const auto& m : block)
            b.push_back(move_from_json(m));
        plan.push_back(std::move(b));
    }
    return plan;
}

inline json plan_json(const std::vector<MoveBlock>& plan)
{
    json out = json::array();
    for (const auto& block : plan) {
        json b = json::array();
        for (const auto& m : block)
            b.push_back(move_json(m));
        out.push_back(std::move(b));
    }
    return out;
}

inline json witness_json(const GammaWitness& w)
{
    json steps = json::array();
    for (const auto& s : w.steps) {
        json j{{"op", s.op}, {"certified", s.gamma_e_certified}, {"fallback", s.fallback}};
        j["u"] = s.u ? json(*s.u) : json(nullptr);
        j["gamma_e_facets"] = s.op == "cone" ? json::array() : facets_json(s.gamma_e);
        if (s.replaces)
            j["replaces"] = *s.replaces;
        steps.push_back(std::move(j));
    }
    return json{{"gamma_facets", facets_json(w.gamma)},
                {"gamma_f", f_vector(w.gamma)},
                {"target_h", w.target.h},
                {"target_f", w.target.f},
                {"d", w.target.d},
                {"labels", w.labels},
                {"continuous", w.continuous()},
                {"matches_target", w.matches_target()},
                {"steps", std::move(steps)}};
}

inline GammaWitness witness_from_json(const json& j)
{
    GammaWitness w;
    w.gamma = complex_from_json(j.at("gamma_facets"));
    w.target.d = j.at("d").get<int>();
    w.target.h = j.at("target_h").get<std::vector<Int>>();
    w.target.f = j.at("target_f").get<std::vector<Int>>();
    w.labels = j.at("labels").get<std::vector<VertexId>>();
    for (const auto& s : j.at("steps")) {
        GammaStep step;
        step.op = s.at("op").get<std::string>();
        if (!s.at("u").is_null())
            step.u = s.at("u").get<VertexId>();
        step.gamma_e = complex_from_json(s.at("gamma_e_facets"));
        step.gamma_e_certified = s.at("certified").get<bool>();
        step.fallback = s.at("fallback").get<bool>();
        if (s.contains("replaces"))
            step.replaces = s.at("replaces").get<VertexId>();
        w.steps.push_back(std::move(step));
    }
    return w;
}

inline json certificate_json(const BooleanCertificate& c)
{
    return json{{"facets", facets_json(c.labeled.complex)},
                {"labels", c.labeled.labels},
                {"S", faces_json(c.initial)},
                {"d", c.labeled.d()}};
}

inline json refusal_json(const Refusal& r)
{
    return json{{"face", face_json(r.face)}, {"reason", r.reason}};
}

inline json report_json(const TowerReport& r)
{
    json j{{"grades", r.grades},
           {"dims", r.dims},
           {"ranks_per_step", r.ranks_per_step},
           {"composite_ranks", r.composite_ranks},
           {"cokernel_dims", r.cokernel_dims},
           {"top_kernel_dim", r.top_kernel_dim},
           {"primitive_dims", r.primitive_dims},
           {"primitive_multiplicities", r.primitive_multiplicities},
           {"level_certified", r.level_certified},
           {"labels", r.labels},
           {"injective", r.injective},
           {"certified", r.certified},
           {"search_certified", r.search_certified},
           {"verdict", r.verdict},
           {"note", r.note}};
    if (r.witness)
        j["witness"] = refusal_json(*r.witness);
    return j;
}

} // namespace flagdeck

#endif
