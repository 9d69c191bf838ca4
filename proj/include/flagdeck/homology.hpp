#ifndef FLAGDECK_HOMOLOGY_HPP
#define FLAGDECK_HOMOLOGY_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "exact_rank.hpp"
#include "parallel.hpp"
#include "transforms.hpp"

namespace flagdeck {

/// Boundary map from faces of size `size` to faces of size `size - 1`,
/// with the sign of dropping the j-th vertex (in sorted order) equal to
/// (-1)^j. size = 1 is the augmentation onto the empty face.
inline IntMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, std::size_t size)
{
    if (size == 0 || size >= faces.size())
        throw Error("boundary_matrix: face size out of range");
    const auto& lower = faces[size - 1];
    const auto& upper = faces[size];
    std::unordered_map<Face, std::size_t> row;
    for (std::size_t i = 0; i < lower.size(); ++i)
        row[lower[i]] = i;
    IntMatrix m(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
        const auto vs = upper[c].vertices();
        for (std::size_t j = 0; j < vs.size(); ++j)
            m(row.at(upper[c].without(vs[j])), c) = (j % 2 == 0) ? 1 : -1;
    }
    return m;
}

/// Reduced Betti numbers over Q, indexed by dimension + 1, so that
/// betti[0] is the reduced Betti number in dimension -1.
struct BettiProfile {
    std::vector<Int> reduced;

    Int operator()(int dim) const
    {
        const int i = dim + 1;
        return (i >= 0 && i < static_cast<int>(reduced.size())) ? reduced[static_cast<std::size_t>(i)] : 0;
    }
    /// Σ (-1)^i β̃_i
    Int euler_characteristic() const
    {
        Int acc = 0;
        for (std::size_t i = 0; i < reduced.size(); ++i)
            acc += (i % 2 == 1) ? reduced[i] : -reduced[i];
        return acc;
    }
    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

inline BettiProfile betti(const SimplicialComplex& k)
{
    const auto faces = all_faces(k);
    const std::size_t top = faces.size(); // sizes 0..top-1
    // rank of ∂ out of faces of each size; ∂ out of size 0 is zero.
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t s = 1; s < top; ++s)
        ranks[s] = exact_rank(boundary_matrix(faces, s));
    BettiProfile out;
    out.reduced.resize(top, 0);
    for (std::size_t s = 0; s < top; ++s)
        out.reduced[s] = static_cast<Int>(faces[s].size()) - static_cast<Int>(ranks[s]) -
                         static_cast<Int>(ranks[s + 1]);
    return out;
}

/// Reduced Euler characteristic Σ (-1)^i f_i over faces of dimension i >= -1.
inline Int reduced_euler_characteristic(const SimplicialComplex& k)
{
    const auto f = f_vector(k);
    Int acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += (i % 2 == 1) ? f[i] : -f[i];
    return acc;
}

/**
 * Reisner's criterion over Q: K is Cohen–Macaulay iff K is pure and for
 * every face F (including ∅) the link lk F has β̃_i = 0 for i < dim lk F.
 *
 * Links are deduplicated before their homology is computed, and the
 * distinct links are processed in parallel.
 */
inline Verdict is_cohen_macaulay(const SimplicialComplex& k)
{
    if (!k.is_pure())
        return {false, "not pure"};
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    std::vector<SimplicialComplex> links;
    std::vector<Face> sources;
    for (const auto& group : all_faces(k))
        for (Face f : group) {
            SimplicialComplex lk = link(k, f);
            std::vector<std::uint64_t> key;
            for (Face g : lk.facets())
                key.push_back(g.bits());
            if (seen.emplace(std::move(key), links.size()).second) {
                links.push_back(std::move(lk));
                sources.push_back(f);
            }
        }
    std::vector<int> bad_dim(links.size(), -2);
    parallel_for(links.size(), [&](std::size_t i) {
        const BettiProfile b = betti(links[i]);
        for (int dim = -1; dim < links[i].dim(); ++dim)
            if (b(dim) != 0) {
                bad_dim[i] = dim;
                return;
            }
    });
    for (std::size_t i = 0; i < links.size(); ++i)
        if (bad_dim[i] != -2)
            return {false, "link of " + sources[i].to_string() +
                               " has nonzero reduced homology in dimension " +
                               std::to_string(bad_dim[i])};
    return {true, "Reisner criterion holds"};
}

/// h_i(lk e) <= h_i(K / e) for all i, lk e measured at d - 2 and the
/// contraction at d. Throws InadmissibleEdge like edge_contract.
inline bool h_monotonicity_check(const SimplicialComplex& k, Face e)
{
    const std::vector<Int> lk = link_h_vector(k, e);
    const std::vector<Int> contracted = fh_vector(edge_contract(k, e), k.d()).h;
    for (std::size_t i = 0; i < lk.size(); ++i)
        if (lk[i] > (i < contracted.size() ? contracted[i] : 0))
            return false;
    return true;
}

} // namespace flagdeck

#endif
