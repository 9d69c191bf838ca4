#ifndef FLAGDECK_TRANSFORMS_HPP
#define FLAGDECK_TRANSFORMS_HPP

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "complex.hpp"

namespace flagdeck {

enum class MoveKind { subdivide, contract };

inline const char* to_string(MoveKind k)
{
    return k == MoveKind::subdivide ? "subdivide" : "contract";
}

/// One PL move. For a subdivision `vertex` is the new vertex placed on the
/// edge; for a contraction it is the surviving endpoint.
struct Move {
    MoveKind kind = MoveKind::subdivide;
    Face edge;
    std::optional<VertexId> vertex;

    friend bool operator==(const Move&, const Move&) = default;
};

/// A move together with the face numbers it was applied to. All vectors use
/// the d of the complex before the move; h_link is the h-vector of lk(e)
/// taken with parameter d - 2.
struct MoveLogEntry {
    Move move;
    std::vector<Int> f_before;
    std::vector<Int> f_after;
    std::vector<Int> h_before;
    std::vector<Int> h_after;
    std::vector<Int> h_link;

    int d() const { return static_cast<int>(f_before.size()) - 1; }

    friend bool operator==(const MoveLogEntry&, const MoveLogEntry&) = default;
};

using MoveLog = std::vector<MoveLogEntry>;

/// Thrown when contracting an edge that lies in an induced 4-cycle.
class InadmissibleEdge : public Error {
public:
    InadmissibleEdge(Face edge, std::array<VertexId, 4> cycle)
        : Error("edge " + edge.to_string() + " lies in the induced 4-cycle " +
                std::to_string(cycle[0]) + "-" + std::to_string(cycle[1]) + "-" +
                std::to_string(cycle[2]) + "-" + std::to_string(cycle[3])),
          edge_(edge), cycle_(cycle)
    {
    }

    Face edge() const noexcept { return edge_; }
    const std::array<VertexId, 4>& cycle() const noexcept { return cycle_; }

private:
    Face edge_;
    std::array<VertexId, 4> cycle_;
};

/// Stellar subdivision of the edge e = {a, b} with a new vertex v: every
/// facet G ⊇ e is replaced by (G - a) ∪ v and (G - b) ∪ v.
inline SimplicialComplex edge_subdivide(const SimplicialComplex& k, Face e,
                                        std::optional<VertexId> v = std::nullopt)
{
    require_edge(k, e);
    const VertexId nv = v.value_or(k.fresh_vertex());
    check_vertex(nv);
    if (k.ground().contains(nv))
        throw Error("subdivision vertex " + std::to_string(nv) + " is not fresh");
    const VertexId a = e.min_vertex();
    const VertexId b = e.max_vertex();
    std::vector<Face> out;
    for (Face g : k.facets()) {
        if (e.subset_of(g)) {
            out.push_back(g.without(a).with(nv));
            out.push_back(g.without(b).with(nv));
        } else {
            out.push_back(g);
        }
    }
    return SimplicialComplex::from_facets(std::move(out));
}

/// Contraction of an admissible edge e = {a, b}, identifying max(a, b) with
/// the surviving vertex min(a, b). Admissibility and the link condition are
/// re-checked here.
inline SimplicialComplex edge_contract(const SimplicialComplex& k, Face e)
{
    if (auto cyc = find_induced_four_cycle(k, e))
        throw InadmissibleEdge(e, *cyc);
    if (!link_condition(k, e))
        throw Error("edge " + e.to_string() + " violates the link condition lk(a) ∩ lk(b) = lk(e)");
    const VertexId keep = e.min_vertex();
    const VertexId drop = e.max_vertex();
    std::vector<Face> out;
    for (Face g : k.facets())
        out.push_back(g.contains(drop) ? g.without(drop).with(keep) : g);
    return SimplicialComplex::from_facets(std::move(out));
}

/// h-vector of lk(e) measured with parameter d - 2, where d = dim K + 1.
inline std::vector<Int> link_h_vector(const SimplicialComplex& k, Face e)
{
    require_edge(k, e);
    return fh_vector(link(k, e), k.d() - 2).h;
}

/// Applies a move and records the face numbers around it.
inline std::pair<SimplicialComplex, MoveLogEntry> apply_move(const SimplicialComplex& k, Move m)
{
    const int d = k.d();
    MoveLogEntry entry;
    entry.h_link = link_h_vector(k, m.edge);
    SimplicialComplex next = m.kind == MoveKind::subdivide ? edge_subdivide(k, m.edge, m.vertex)
                                                           : edge_contract(k, m.edge);
    if (m.kind == MoveKind::subdivide)
        m.vertex = m.vertex.value_or(k.fresh_vertex());
    else
        m.vertex = m.edge.min_vertex();
    entry.move = m;
    const FHVector before = fh_vector(k, d);
    const FHVector after = fh_vector(next, d);
    entry.f_before = before.f;
    entry.h_before = before.h;
    entry.f_after = after.f;
    entry.h_after = after.h;
    return {std::move(next), std::move(entry)};
}

struct MoveLogCheck {
    bool ok = true;
    std::optional<std::size_t> first_bad;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Checks every entry of a move log as exact integer identities:
 *   subdivision  h' = h + t·h_lk,   f'(t) = f(t) + t(1+t)·f_lk(t)
 *   contraction  h' = h - t·h_lk,   f'(t) = f(t) - t(1+t)·f_lk(t)
 * where f_lk is recovered from h_lk with parameter d - 2. Also checks that
 * each h is the transform of the matching f and that consecutive entries
 * chain.
 */
inline MoveLogCheck verify_move_log(const MoveLog& log)
{
    auto fail = [](std::size_t i, std::string why) {
        return MoveLogCheck{false, i, std::move(why)};
    };
    for (std::size_t i = 0; i < log.size(); ++i) {
        const MoveLogEntry& e = log[i];
        const int d = e.d();
        if (d < 2)
            return fail(i, "complex too small to contain an edge");
        const std::size_t n = static_cast<std::size_t>(d) + 1;
        if (e.f_after.size() != n || e.h_before.size() != n || e.h_after.size() != n ||
            e.h_link.size() != n - 2)
            return fail(i, "vector lengths inconsistent with d = " + std::to_string(d));
        if (h_from_f(e.f_before, d) != e.h_before)
            return fail(i, "h_before is not the h-vector of f_before");
        if (h_from_f(e.f_after, d) != e.h_after)
            return fail(i, "h_after is not the h-vector of f_after");
        const Int sign = e.move.kind == MoveKind::subdivide ? 1 : -1;
        const Polynomial h_lk(e.h_link);
        const Polynomial dh = Polynomial(e.h_after) - Polynomial(e.h_before);
        if (!(dh == Polynomial({0, sign}) * h_lk))
            return fail(i, "h recursion violated");
        const Polynomial f_lk(f_from_h(e.h_link, d - 2));
        const Polynomial df = Polynomial(e.f_after) - Polynomial(e.f_before);
        if (!(df == Polynomial({0, sign, sign}) * f_lk))
            return fail(i, "f recursion violated");
        if (i + 1 < log.size() && log[i + 1].f_before != e.f_after)
            return fail(i, "entry does not chain into the next one");
    }
    return {};
}

struct WalkResult {
    SimplicialComplex complex;
    MoveLog log;
};

/**
 * Random walk on flag complexes by edge subdivisions and admissible edge
 * contractions. At every step a contraction is chosen with probability
 * `contract_bias` when an admissible edge exists, otherwise an edge is
 * subdivided with vertex max(ground) + 1. Edges are picked uniformly.
 * Uses mt19937_64 and integer draws only, so output is reproducible.
 */
inline WalkResult random_flag_walk(std::uint64_t seed, const SimplicialComplex& start,
                                   int n_moves, double contract_bias = 0.5)
{
    if (!is_flag(start))
        throw Error("random_flag_walk: start complex is not flag");
    std::mt19937_64 rng(seed);
    WalkResult out{start, {}};
    for (int step = 0; step < n_moves; ++step) {
        const auto es = edges(out.complex);
        if (es.empty())
            throw Error("random_flag_walk: complex has no edges");
        std::vector<Face> admissible;
        for (Face e : es)
            if (is_admissible_edge(out.complex, e) && link_condition(out.complex, e))
                admissible.push_back(e);
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        Move m;
        if (!admissible.empty() && u < contract_bias) {
            m.kind = MoveKind::contract;
            m.edge = admissible[rng() % admissible.size()];
        } else {
            m.kind = MoveKind::subdivide;
            m.edge = es[rng() % es.size()];
        }
        auto [next, entry] = apply_move(out.complex, m);
        out.complex = std::move(next);
        out.log.push_back(std::move(entry));
    }
    return out;
}

/// Replays the moves of a log starting from `start`.
inline SimplicialComplex replay_moves(const SimplicialComplex& start, const MoveLog& log)
{
    SimplicialComplex k = start;
    for (const auto& e : log)
        k = apply_move(k, e.move).first;
    return k;
}

} // namespace flagdeck

#endif
