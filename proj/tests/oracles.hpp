// Brute-force reference implementations for the test suite. They work on
// plain sets of sorted integer vectors and share no code with the library,
// so agreement between the two is meaningful.
#ifndef FLAGDECK_TESTS_ORACLES_HPP
#define FLAGDECK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <flagdeck/complex.hpp>

namespace oracle {

using Simplex = std::vector<int>;
using FaceSet = std::set<Simplex>;

inline FaceSet closure(const std::vector<Simplex>& facets)
{
    FaceSet out;
    out.insert(Simplex{});
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        const int n = static_cast<int>(f.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
            Simplex s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i))
                    s.push_back(f[static_cast<std::size_t>(i)]);
            out.insert(s);
        }
    }
    return out;
}

inline std::vector<Simplex> facets_of(const flagdeck::SimplicialComplex& k)
{
    std::vector<Simplex> out;
    for (flagdeck::Face f : k.facets()) {
        Simplex s;
        for (auto v : f.vertices())
            s.push_back(static_cast<int>(v));
        out.push_back(s);
    }
    return out;
}

inline FaceSet faces_of(const flagdeck::SimplicialComplex& k)
{
    return closure(facets_of(k));
}

inline flagdeck::SimplicialComplex to_complex(const FaceSet& faces)
{
    std::vector<flagdeck::Face> fs;
    for (const auto& s : faces) {
        std::vector<flagdeck::VertexId> vs(s.begin(), s.end());
        fs.push_back(flagdeck::Face::from_vertices(vs));
    }
    return flagdeck::SimplicialComplex::from_facets(fs);
}

inline std::vector<std::int64_t> f_counts(const FaceSet& faces)
{
    std::vector<std::int64_t> f;
    for (const auto& s : faces) {
        if (f.size() <= s.size())
            f.resize(s.size() + 1, 0);
        ++f[s.size()];
    }
    return f;
}

/// h from the polynomial identity Σ f_{i-1}(t-1)^{d-i} = Σ h_k t^{d-k},
/// expanded term by term.
inline std::vector<std::int64_t> h_by_expansion(const std::vector<std::int64_t>& f, int d)
{
    std::vector<std::int64_t> poly(static_cast<std::size_t>(d) + 1, 0); // by degree in t
    for (int i = 0; i <= d && i < static_cast<int>(f.size()); ++i) {
        std::vector<std::int64_t> term{f[static_cast<std::size_t>(i)]};
        for (int r = 0; r < d - i; ++r) { // multiply by (t - 1)
            std::vector<std::int64_t> next(term.size() + 1, 0);
            for (std::size_t j = 0; j < term.size(); ++j) {
                next[j + 1] += term[j];
                next[j] -= term[j];
            }
            term = next;
        }
        for (std::size_t j = 0; j < term.size(); ++j)
            poly[j] += term[j];
    }
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        h[static_cast<std::size_t>(k)] = poly[static_cast<std::size_t>(d - k)];
    return h;
}

inline std::set<int> vertex_set(const FaceSet& faces)
{
    std::set<int> out;
    for (const auto& s : faces)
        out.insert(s.begin(), s.end());
    return out;
}

inline bool has_edge(const FaceSet& faces, int a, int b)
{
    return faces.count(a < b ? Simplex{a, b} : Simplex{b, a}) > 0;
}

/// All vertex subsets that are cliques of the 1-skeleton.
inline FaceSet clique_complex(const FaceSet& faces)
{
    const auto vs = vertex_set(faces);
    const std::vector<int> v(vs.begin(), vs.end());
    const int n = static_cast<int>(v.size());
    FaceSet out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Simplex s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                s.push_back(v[static_cast<std::size_t>(i)]);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size() && clique; ++j)
                clique = has_edge(faces, s[i], s[j]);
        if (clique)
            out.insert(s);
    }
    return out;
}

inline bool is_flag(const FaceSet& faces)
{
    return clique_complex(faces) == faces;
}

/// True if the edge {a, b} lies in an induced 4-cycle a-b-c-x-a.
inline bool in_induced_four_cycle(const FaceSet& faces, int a, int b)
{
    const auto vs = vertex_set(faces);
    for (int c : vs)
        for (int x : vs) {
            if (c == a || c == b || x == a || x == b || c == x)
                continue;
            if (has_edge(faces, b, c) && has_edge(faces, c, x) && has_edge(faces, x, a) &&
                !has_edge(faces, a, c) && !has_edge(faces, b, x))
                return true;
        }
    return false;
}

inline FaceSet link(const FaceSet& faces, const Simplex& f)
{
    FaceSet out;
    for (const auto& s : faces) {
        Simplex u;
        std::set_union(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(u));
        Simplex common;
        std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(common));
        if (common.empty() && faces.count(u))
            out.insert(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homology over GF(p), p large prime; agrees with rational ranks on the
// small, torsion-free instances used in the tests.
// ---------------------------------------------------------------------------

inline constexpr std::int64_t kPrime = 1000000007;

inline std::int64_t power_mod(std::int64_t b, std::int64_t e)
{
    std::int64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1)
            r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] % kPrime == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t inv = power_mod((m[rank][c] % kPrime + kPrime) % kPrime, kPrime - 2);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const std::int64_t factor = ((m[r][c] % kPrime + kPrime) % kPrime) * inv % kPrime;
            if (factor == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] = ((m[r][j] - factor * ((m[rank][j] % kPrime + kPrime) % kPrime)) % kPrime +
                           kPrime) % kPrime;
        }
        ++rank;
    }
    return rank;
}

/// ∂ from faces of size s to faces of size s - 1, rows = (s-1)-faces.
inline std::vector<std::vector<std::int64_t>> boundary(const FaceSet& faces, std::size_t s)
{
    std::vector<Simplex> lo, hi;
    for (const auto& f : faces) {
        if (f.size() + 1 == s)
            lo.push_back(f);
        if (f.size() == s)
            hi.push_back(f);
    }
    std::map<Simplex, std::size_t> row;
    for (std::size_t i = 0; i < lo.size(); ++i)
        row[lo[i]] = i;
    std::vector<std::vector<std::int64_t>> m(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c)
        for (std::size_t j = 0; j < hi[c].size(); ++j) {
            Simplex g = hi[c];
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
            m[row.at(g)][c] = (j % 2 == 0) ? 1 : -1;
        }
    return m;
}

/// β̃_{-1}, β̃_0, ..., β̃_{top}: index i holds β̃_{i-1}.
inline std::vector<std::int64_t> reduced_betti(const FaceSet& faces)
{
    std::size_t top = 0;
    for (const auto& f : faces)
        top = std::max(top, f.size());
    const auto counts = f_counts(faces);
    std::vector<std::size_t> rk(top + 2, 0); // rk[s] = rank of ∂ out of size s
    for (std::size_t s = 1; s <= top; ++s)
        rk[s] = rank_mod_p(boundary(faces, s));
    std::vector<std::int64_t> out;
    for (std::size_t s = 0; s <= top; ++s)
        out.push_back(counts[s] - static_cast<std::int64_t>(rk[s]) -
                      static_cast<std::int64_t>(rk[s + 1]));
    return out;
}

/// Reisner: every link has vanishing reduced homology below its dimension.
inline bool is_cohen_macaulay(const FaceSet& faces)
{
    for (const auto& f : faces) {
        const FaceSet lk = link(faces, f);
        const auto b = reduced_betti(lk);
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] != 0)
                return false;
    }
    std::size_t top = 0;
    for (const auto& f : faces)
        top = std::max(top, f.size());
    for (const auto& f : faces) {
        bool maximal = true;
        for (const auto& g : faces)
            if (g.size() == f.size() + 1 && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        if (maximal && f.size() != top)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// Every simplicial complex (containing ∅) whose vertices lie in {0..n-1}.
/// Complexes are produced as downsets of the Boolean lattice; ghost
/// singletons are allowed here since the caller only looks at faces.
inline std::vector<FaceSet> all_complexes(int n, std::size_t max_faces = SIZE_MAX)
{
    std::vector<std::uint32_t> order;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        order.push_back(m);
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    std::vector<FaceSet> out;
    std::vector<char> in(1u << n, 0);
    in[0] = 1;
    std::size_t count = 1;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            FaceSet fs;
            for (std::uint32_t m = 0; m < (1u << n); ++m)
                if (in[m]) {
                    Simplex s;
                    for (int v = 0; v < n; ++v)
                        if (m & (1u << v))
                            s.push_back(v);
                    fs.insert(s);
                }
            out.push_back(std::move(fs));
            return;
        }
        const std::uint32_t m = order[i];
        rec(i + 1); // exclude
        bool allowed = count < max_faces;
        for (int v = 0; v < n && allowed; ++v)
            if ((m & (1u << v)) && !in[m & ~(1u << v)])
                allowed = false;
        if (allowed) {
            in[m] = 1;
            ++count;
            rec(i + 1);
            in[m] = 0;
            --count;
        }
    };
    rec(0);
    return out;
}

/// Γ decomposes over the ordered labels iff
/// Γ = { F ∪ G : F ∈ Γ, F ∩ labels = ∅, G ⊆ first d - 2|F| labels }.
inline bool is_boolean(const FaceSet& faces, const std::vector<int>& labels)
{
    const int d = static_cast<int>(labels.size());
    const std::set<int> lab(labels.begin(), labels.end());
    FaceSet rebuilt;
    for (const auto& f : faces) {
        if (std::any_of(f.begin(), f.end(), [&](int v) { return lab.count(v) > 0; }))
            continue;
        const int room = d - 2 * static_cast<int>(f.size());
        if (room < 0)
            return false; // F ∈ S has no allowed G at all, so F itself is unreachable
        for (int mask = 0; mask < (1 << room); ++mask) {
            Simplex s = f;
            for (int i = 0; i < room; ++i)
                if (mask & (1 << i))
                    s.push_back(labels[static_cast<std::size_t>(i)]);
            std::sort(s.begin(), s.end());
            rebuilt.insert(s);
        }
    }
    return rebuilt == faces;
}

/// Some ordered tuple of d distinct vertices decomposes Γ.
inline bool has_boolean_labeling(const FaceSet& faces, int d)
{
    const auto vs = vertex_set(faces);
    const std::vector<int> v(vs.begin(), vs.end());
    if (d > static_cast<int>(v.size()))
        return false;
    std::vector<int> pick;
    std::vector<char> used(v.size(), 0);
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(pick.size()) == d)
            return is_boolean(faces, pick);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (used[i])
                continue;
            used[i] = 1;
            pick.push_back(v[i]);
            const bool ok = rec();
            pick.pop_back();
            used[i] = 0;
            if (ok)
                return true;
        }
        return false;
    };
    return rec();
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Clique complex of a random graph on n vertices with edge probability p,
/// restricted to vertices that carry at least one edge.
inline flagdeck::SimplicialComplex random_flag_complex(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    FaceSet graph;
    graph.insert(Simplex{});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) {
                graph.insert({a});
                graph.insert({b});
                graph.insert({a, b});
            }
    if (graph.size() == 1) {
        graph.insert({0});
        graph.insert({1});
        graph.insert({0, 1});
    }
    return to_complex(clique_complex(graph));
}

/// A random complex from a handful of random facets on n vertices.
inline flagdeck::SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets)
{
    std::vector<flagdeck::Face> fs;
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
    for (int i = 0; i < facets; ++i)
        fs.push_back(flagdeck::Face(pick(rng)));
    return flagdeck::SimplicialComplex::from_facets(fs);
}

} // namespace oracle

#endif
