#ifndef FLAGDECK_COMPLEX_HPP
#define FLAGDECK_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "face.hpp"
#include "polynomial.hpp"

namespace flagdeck {

/// Strict complexes require every ground vertex to lie in some facet.
/// Permissive complexes may carry "ghost" ground vertices.
enum class GroundMode { strict, permissive };

/**
 * Finite abstract simplicial complex represented by its facets.
 *
 * The facet list is normalized on construction: duplicates and faces
 * contained in another facet are dropped and the remaining antichain is
 * sorted lexicographically. Two complexes compare equal iff they have the
 * same ground set and the same faces. An empty facet list denotes the
 * complex {∅}, which has d = 0.
 */
class SimplicialComplex {
public:
    SimplicialComplex() : facets_{Face{}} {}

    static SimplicialComplex from_facets(std::vector<Face> faces,
                                         GroundMode mode = GroundMode::strict,
                                         std::optional<Face> ground = std::nullopt)
    {
        SimplicialComplex k;
        k.facets_ = normalize_antichain(std::move(faces));
        Face used;
        for (Face f : k.facets_)
            used = used | f;
        if (ground) {
            if (!used.subset_of(*ground))
                throw Error("facet vertex outside the declared ground set");
            if (mode == GroundMode::strict && !(*ground == used))
                throw Error("ground vertex " + (*ground - used).to_string() +
                            " lies in no facet (strict mode)");
            k.ground_ = *ground;
        } else {
            k.ground_ = used;
        }
        return k;
    }

    const std::vector<Face>& facets() const noexcept { return facets_; }
    Face ground() const noexcept { return ground_; }
    std::vector<VertexId> vertices() const { return ground_.vertices(); }
    int num_vertices() const noexcept { return ground_.size(); }

    /// d = dim + 1, the size of the largest facet.
    int d() const noexcept
    {
        int best = 0;
        for (Face f : facets_)
            best = std::max(best, f.size());
        return best;
    }
    int dim() const noexcept { return d() - 1; }

    bool is_pure() const noexcept
    {
        const int top = d();
        return std::all_of(facets_.begin(), facets_.end(),
                           [top](Face f) { return f.size() == top; });
    }

    bool contains(Face f) const noexcept
    {
        return std::any_of(facets_.begin(), facets_.end(),
                           [f](Face g) { return f.subset_of(g); });
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const noexcept
    {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&other](Face f) { return other.contains(f); });
    }

    /// Smallest id above every ground vertex (0 for an empty ground set).
    VertexId fresh_vertex() const
    {
        const VertexId v = ground_.empty() ? 0 : ground_.max_vertex() + 1;
        check_vertex(v);
        return v;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (i)
                s += " ";
            s += facets_[i].to_string();
        }
        return s + "]";
    }

    static std::vector<Face> normalize_antichain(std::vector<Face> faces)
    {
        std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
            if (a.size() != b.size())
                return a.size() > b.size();
            return a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Face> kept;
        for (Face f : faces) {
            bool dominated = false;
            for (Face g : kept)
                if (f.subset_of(g)) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                kept.push_back(f);
        }
        std::sort(kept.begin(), kept.end());
        if (kept.empty())
            kept.push_back(Face{});
        return kept;
    }

private:
    std::vector<Face> facets_;
    Face ground_;
};

/// Verdict with a human readable reason, used where a check may fail for
/// several distinct causes.
struct Verdict {
    bool value = false;
    std::string reason;

    explicit operator bool() const noexcept { return value; }
};

// ---------------------------------------------------------------------------
// Face enumeration and face numbers
// ---------------------------------------------------------------------------

/// All faces of K grouped by size (index = dim + 1), each group sorted
/// lexicographically. Index 0 holds the empty face.
inline std::vector<std::vector<Face>> all_faces(const SimplicialComplex& k)
{
    std::unordered_set<Face> seen;
    for (Face facet : k.facets())
        facet.for_each_subset([&seen](Face f) { seen.insert(f); });
    std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(k.d()) + 1);
    for (Face f : seen)
        by_size[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& group : by_size)
        std::sort(group.begin(), group.end());
    return by_size;
}

/// Flat face list ordered by size, then lexicographically.
inline std::vector<Face> face_list(const SimplicialComplex& k)
{
    std::vector<Face> out;
    for (auto& group : all_faces(k))
        out.insert(out.end(), group.begin(), group.end());
    return out;
}

inline std::unordered_set<Face> face_set(const SimplicialComplex& k)
{
    std::unordered_set<Face> seen;
    for (Face facet : k.facets())
        facet.for_each_subset([&seen](Face f) { seen.insert(f); });
    return seen;
}

/// f_{-1}, f_0, ..., f_{d-1}, stored with f[0] = f_{-1}.
inline std::vector<Int> f_vector(const SimplicialComplex& k)
{
    std::vector<Int> f(static_cast<std::size_t>(k.d()) + 1, 0);
    for (Face face : face_set(k))
        ++f[static_cast<std::size_t>(face.size())];
    return f;
}

/// f-polynomial sum_i f_{i-1} t^i of an arbitrary collection of faces.
inline Polynomial f_polynomial(const std::vector<Face>& faces)
{
    std::vector<Int> c;
    for (Face f : faces) {
        const auto i = static_cast<std::size_t>(f.size());
        if (c.size() <= i)
            c.resize(i + 1, 0);
        ++c[i];
    }
    return Polynomial(std::move(c));
}

inline Polynomial f_polynomial(const SimplicialComplex& k)
{
    return Polynomial(f_vector(k));
}

/// Transforms f = (f_{-1}, ..., f_{d-1}) into h = (h_0, ..., h_d) through
///   sum_i f_{i-1} (t-1)^{d-i} = sum_k h_k t^{d-k}.
inline std::vector<Int> h_from_f(const std::vector<Int>& f, int d)
{
    if (d < 0 || f.size() != static_cast<std::size_t>(d) + 1)
        throw Error("f-vector of length " + std::to_string(f.size()) +
                    " is inconsistent with d = " + std::to_string(d));
    std::vector<Int> h(f.size(), 0);
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            const Int term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

/// Inverse of h_from_f: f_{i-1} = sum_{k<=i} C(d-k, i-k) h_k.
inline std::vector<Int> f_from_h(const std::vector<Int>& h, int d)
{
    if (d < 0 || h.size() != static_cast<std::size_t>(d) + 1)
        throw Error("h-vector of length " + std::to_string(h.size()) +
                    " is inconsistent with d = " + std::to_string(d));
    std::vector<Int> f(h.size(), 0);
    for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= i; ++k)
            f[static_cast<std::size_t>(i)] += binomial(d - k, i - k) * h[static_cast<std::size_t>(k)];
    return f;
}

/// Exact f- and h-vectors with the dimension convention carried explicitly.
struct FHVector {
    int d = 0;
    std::vector<Int> f{1};
    std::vector<Int> h{1};

    friend bool operator==(const FHVector&, const FHVector&) = default;
};

/// f- and h-vector of K computed with parameter d (defaults to dim K + 1).
/// A larger d pads f with zeros, which is how links are measured inside a
/// recursion of fixed codimension.
inline FHVector fh_vector(const SimplicialComplex& k, std::optional<int> d = std::nullopt)
{
    FHVector out;
    out.d = d.value_or(k.d());
    if (out.d < k.d())
        throw Error("d = " + std::to_string(out.d) + " is below dim + 1 = " +
                    std::to_string(k.d()));
    out.f = f_vector(k);
    out.f.resize(static_cast<std::size_t>(out.d) + 1, 0);
    out.h = h_from_f(out.f, out.d);
    return out;
}

inline Polynomial h_polynomial(const SimplicialComplex& k)
{
    return Polynomial(fh_vector(k).h);
}

// ---------------------------------------------------------------------------
// Links, stars, antistars, joins
// ---------------------------------------------------------------------------

inline SimplicialComplex link(const SimplicialComplex& k, Face f)
{
    if (!k.contains(f))
        throw Error("face not in complex: " + f.to_string());
    std::vector<Face> out;
    for (Face g : k.facets())
        if (f.subset_of(g))
            out.push_back(g - f);
    return SimplicialComplex::from_facets(std::move(out));
}

/// Closed star: all faces whose union with F is a face.
inline SimplicialComplex star(const SimplicialComplex& k, Face f)
{
    if (!k.contains(f))
        throw Error("face not in complex: " + f.to_string());
    std::vector<Face> out;
    for (Face g : k.facets())
        if (f.subset_of(g))
            out.push_back(g);
    return SimplicialComplex::from_facets(std::move(out));
}

/// All faces not containing v.
inline SimplicialComplex antistar(const SimplicialComplex& k, VertexId v)
{
    if (!k.ground().contains(v))
        throw Error("vertex " + std::to_string(v) + " not in ground set");
    std::vector<Face> out;
    out.reserve(k.facets().size());
    for (Face g : k.facets())
        out.push_back(g.without(v));
    return SimplicialComplex::from_facets(std::move(out));
}

inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (!a.ground().disjoint(b.ground()))
        throw Error("join: vertex collision on " + (a.ground() & b.ground()).to_string());
    std::vector<Face> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (Face f : a.facets())
        for (Face g : b.facets())
            out.push_back(f | g);
    return SimplicialComplex::from_facets(std::move(out));
}

inline SimplicialComplex cone(const SimplicialComplex& k, VertexId apex)
{
    check_vertex(apex);
    if (k.ground().contains(apex))
        throw Error("cone: apex " + std::to_string(apex) + " is not fresh");
    return join(k, SimplicialComplex::from_facets({Face::single(apex)}));
}

inline SimplicialComplex suspension(const SimplicialComplex& k, VertexId north, VertexId south)
{
    check_vertex(north);
    check_vertex(south);
    if (north == south)
        throw Error("suspension: the two new vertices must differ");
    if (k.ground().contains(north) || k.ground().contains(south))
        throw Error("suspension: new vertices must be fresh");
    return join(k, SimplicialComplex::from_facets({Face::single(north), Face::single(south)}));
}

// ---------------------------------------------------------------------------
// 1-skeleton, flagness, admissibility
// ---------------------------------------------------------------------------

/// Adjacency masks of the 1-skeleton, indexed by vertex id.
inline std::array<std::uint64_t, kMaxVertices> adjacency(const SimplicialComplex& k)
{
    std::array<std::uint64_t, kMaxVertices> adj{};
    for (Face f : k.facets()) {
        for (VertexId v : f.vertices())
            adj[v] |= f.without(v).bits();
    }
    return adj;
}

inline std::vector<Face> edges(const SimplicialComplex& k)
{
    const auto adj = adjacency(k);
    std::vector<Face> out;
    for (VertexId a : k.vertices())
        for (VertexId b : Face(adj[a]).vertices())
            if (a < b)
                out.push_back(Face{a, b});
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

template <typename Fn>
void maximal_cliques(const std::array<std::uint64_t, kMaxVertices>& adj,
                     std::uint64_t r, std::uint64_t p, std::uint64_t x, Fn& fn)
{
    if (p == 0 && x == 0) {
        fn(Face(r));
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
    std::uint64_t best_nbrs = 0;
    int best = -1;
    for (std::uint64_t px = p | x; px != 0; px &= px - 1) {
        const int u = std::countr_zero(px);
        const std::uint64_t n = p & adj[static_cast<std::size_t>(u)];
        if (best < 0 || std::popcount(n) > std::popcount(best_nbrs)) {
            best = u;
            best_nbrs = n;
        }
    }
    for (std::uint64_t cand = p & ~best_nbrs; cand != 0; cand &= cand - 1) {
        const int v = std::countr_zero(cand);
        const std::uint64_t vb = std::uint64_t{1} << v;
        const std::uint64_t nv = adj[static_cast<std::size_t>(v)];
        maximal_cliques(adj, r | vb, p & nv, x & nv, fn);
        p &= ~vb;
        x |= vb;
    }
}

} // namespace detail

/// Calls fn(clique) for every maximal clique of the 1-skeleton of K.
template <typename Fn>
void for_each_maximal_clique(const SimplicialComplex& k, Fn&& fn)
{
    const auto adj = adjacency(k);
    detail::maximal_cliques(adj, 0, k.ground().bits(), 0, fn);
}

/// K is flag iff it is the clique complex of its 1-skeleton, i.e. every
/// maximal clique is a face.
inline bool is_flag(const SimplicialComplex& k)
{
    bool flag = true;
    for_each_maximal_clique(k, [&](Face clique) {
        if (flag && !k.contains(clique))
            flag = false;
    });
    return flag;
}

inline void require_edge(const SimplicialComplex& k, Face e)
{
    if (e.size() != 2 || !k.contains(e))
        throw Error("not an edge of the complex: " + e.to_string());
}

/// Returns an induced 4-cycle (a, b, c, d) of the 1-skeleton through the
/// edge e = {a, b}, if one exists.
inline std::optional<std::array<VertexId, 4>> find_induced_four_cycle(const SimplicialComplex& k,
                                                                     Face e)
{
    require_edge(k, e);
    const auto adj = adjacency(k);
    const VertexId a = e.min_vertex();
    const VertexId b = e.max_vertex();
    const std::uint64_t ab = e.bits();
    // c ~ b, c !~ a, d ~ a, d !~ b, c ~ d.
    const std::uint64_t cands_c = adj[b] & ~adj[a] & ~ab;
    const std::uint64_t cands_d = adj[a] & ~adj[b] & ~ab;
    for (std::uint64_t cs = cands_c; cs != 0; cs &= cs - 1) {
        const auto c = static_cast<VertexId>(std::countr_zero(cs));
        const std::uint64_t ds = adj[c] & cands_d;
        if (ds != 0)
            return std::array<VertexId, 4>{a, b, c, static_cast<VertexId>(std::countr_zero(ds))};
    }
    return std::nullopt;
}

inline bool is_admissible_edge(const SimplicialComplex& k, Face e)
{
    return !find_induced_four_cycle(k, e).has_value();
}

/// lk(a) ∩ lk(b) = lk(e) for e = {a, b}.
inline bool link_condition(const SimplicialComplex& k, Face e)
{
    require_edge(k, e);
    const VertexId a = e.min_vertex();
    const VertexId b = e.max_vertex();
    const auto la = face_set(link(k, Face::single(a)));
    const auto lb = face_set(link(k, Face::single(b)));
    const auto le = face_set(link(k, e));
    for (Face f : la)
        if (lb.count(f) && !le.count(f))
            return false;
    return true;
}

/// Pure, every ridge in exactly two facets, connected facet-ridge graph.
inline Verdict is_pseudomanifold(const SimplicialComplex& k)
{
    if (!k.is_pure())
        return {false, "not pure"};
    const auto& facets = k.facets();
    if (k.d() == 0)
        return {true, "empty complex {∅}; no ridges"};
    std::map<std::uint64_t, std::vector<std::size_t>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (VertexId v : facets[i].vertices())
            ridges[facets[i].without(v).bits()].push_back(i);
    std::vector<std::size_t> parent(facets.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [bits, owners] : ridges) {
        if (owners.size() != 2)
            return {false, "ridge " + Face(bits).to_string() + " lies in " +
                               std::to_string(owners.size()) + " facet(s)"};
        parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t i = 1; i < facets.size(); ++i)
        if (find(i) != find(0))
            return {false, "facet-ridge graph is disconnected"};
    return {true, "pseudomanifold without boundary"};
}

// ---------------------------------------------------------------------------
// Standard complexes and isomorphism
// ---------------------------------------------------------------------------

inline SimplicialComplex simplex(Face vertices)
{
    return SimplicialComplex::from_facets({vertices});
}

/// The cycle C_n on vertices first, ..., first + n - 1.
inline SimplicialComplex cycle(int n, VertexId first = 0)
{
    if (n < 3)
        throw Error("a cycle needs at least 3 vertices");
    std::vector<Face> out;
    for (int i = 0; i < n; ++i) {
        const auto u = static_cast<VertexId>(first + i);
        const auto v = static_cast<VertexId>(first + (i + 1) % n);
        out.push_back(Face{u, v});
    }
    return SimplicialComplex::from_facets(std::move(out));
}

/// Boundary of the d-dimensional cross-polytope on vertices 0..2d-1, with
/// antipodal pairs {2i, 2i+1}. Its h-vector is (C(d,0), ..., C(d,d)).
inline SimplicialComplex cross_polytope_boundary(int d)
{
    if (d < 0 || 2 * d > static_cast<int>(kMaxVertices))
        throw Error("cross-polytope dimension out of range");
    std::vector<Face> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << d); ++choice) {
        Face f;
        for (int i = 0; i < d; ++i)
            f = f.with(static_cast<VertexId>(2 * i + ((choice >> i) & 1)));
        out.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(out));
}

/// Applies an injective vertex map given as a lookup table.
inline SimplicialComplex relabel(const SimplicialComplex& k,
                                 const std::array<VertexId, kMaxVertices>& map)
{
    std::vector<Face> out;
    for (Face f : k.facets()) {
        Face g;
        for (VertexId v : f.vertices())
            g = g.with(map[v]);
        out.push_back(g);
    }
    Face ground;
    for (VertexId v : k.vertices())
        ground = ground.with(map[v]);
    return SimplicialComplex::from_facets(std::move(out), GroundMode::permissive, ground);
}

/// Backtracking isomorphism test; intended for the small complexes used in
/// tests and move verification.
inline bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size() ||
        f_vector(a) != f_vector(b))
        return false;
    const auto adj_a = adjacency(a);
    const auto adj_b = adjacency(b);
    const auto va = a.vertices();
    const auto vb = b.vertices();
    auto facet_degree = [](const SimplicialComplex& k, VertexId v) {
        int n = 0;
        for (Face f : k.facets())
            n += f.contains(v);
        return n;
    };
    std::array<VertexId, kMaxVertices> map{};
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == va.size())
            return relabel(a, map).facets() == b.facets();
        const VertexId u = va[i];
        for (VertexId w : vb) {
            if (used & (std::uint64_t{1} << w))
                continue;
            if (std::popcount(adj_a[u]) != std::popcount(adj_b[w]) ||
                facet_degree(a, u) != facet_degree(b, w))
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const bool ea = (adj_a[u] >> va[j]) & 1;
                const bool eb = (adj_b[w] >> map[va[j]]) & 1;
                ok = ea == eb;
            }
            if (!ok)
                continue;
            map[u] = w;
            used |= std::uint64_t{1} << w;
            if (self(self, i + 1))
                return true;
            used &= ~(std::uint64_t{1} << w);
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace flagdeck

#endif
