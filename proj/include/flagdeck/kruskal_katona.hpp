#ifndef FLAGDECK_KRUSKAL_KATONA_HPP
#define FLAGDECK_KRUSKAL_KATONA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace flagdeck {

/// The i-th Macaulay representation n = C(a_i, i) + C(a_{i-1}, i-1) + ...
/// + C(a_j, j) with a_i > a_{i-1} > ... > a_j >= j >= 1. `terms` holds the
/// pairs (a_k, k) from k = i downwards; n = 0 has no terms.
struct MacaulayExpansion {
    Int n = 0;
    int i = 1;
    std::vector<std::pair<Int, int>> terms;

    Int value() const
    {
        Int acc = 0;
        for (auto [a, k] : terms)
            acc += binomial(a, k);
        return acc;
    }

    /// n^{<i>} = Σ C(a_k, k + 1): the largest number of (i+1)-sets whose
    /// shadow fits inside n i-sets.
    Int upper_shadow_bound() const
    {
        Int acc = 0;
        for (auto [a, k] : terms)
            acc += binomial(a, k + 1);
        return acc;
    }
};

inline MacaulayExpansion macaulay_expansion(Int n, int i)
{
    if (n < 0 || i < 1)
        throw Error("macaulay_expansion requires n >= 0 and i >= 1");
    MacaulayExpansion out{n, i, {}};
    Int rest = n;
    for (int k = i; k >= 1 && rest > 0; --k) {
        Int a = k;
        while (binomial(a + 1, k) <= rest)
            ++a;
        out.terms.emplace_back(a, k);
        rest -= binomial(a, k);
    }
    return out;
}

/// Index (into f, with f[0] = f_{-1}) of the first entry that violates the
/// Kruskal–Katona bounds, or nullopt if f is the f-vector of a complex.
inline std::optional<std::size_t> kk_first_violation(const std::vector<Int>& f)
{
    if (f.empty() || f[0] != 1)
        return 0;
    for (std::size_t k = 1; k < f.size(); ++k) {
        if (f[k] < 0)
            return k;
        if (k >= 2) {
            const Int bound =
                macaulay_expansion(f[k - 1], static_cast<int>(k - 1)).upper_shadow_bound();
            if (f[k] > bound)
                return k;
        }
    }
    return std::nullopt;
}

inline bool kk_valid(const std::vector<Int>& f)
{
    return !kk_first_violation(f).has_value();
}

/**
 * The compressed complex with f-vector f: for each k it takes the first
 * f_{k-1} k-subsets of {1, 2, 3, ...} in reverse-lexicographic (colex)
 * order. Colex order on subsets of {1..63} coincides with the integer
 * order of their bitmasks, so each level is an initial run of Gosper's
 * enumeration.
 */
inline SimplicialComplex compressed_complex(const std::vector<Int>& f)
{
    if (auto bad = kk_first_violation(f)) {
        const std::size_t k = *bad;
        std::string why = "f is not the f-vector of a simplicial complex: entry f_" +
                          std::to_string(static_cast<long>(k) - 1) + " = " +
                          (k < f.size() ? std::to_string(f[k]) : std::string("?"));
        if (k >= 2 && k < f.size())
            why += " exceeds the Kruskal–Katona bound " +
                   std::to_string(macaulay_expansion(f[k - 1], static_cast<int>(k - 1))
                                      .upper_shadow_bound());
        throw Error(why);
    }
    if (f.size() >= 2 && f[1] > static_cast<Int>(kMaxVertices) - 1)
        throw Error("compressed_complex: more than 63 vertices requested");
    std::vector<Face> faces;
    for (std::size_t k = 1; k < f.size(); ++k) {
        // Enumerate on ids 0..62 and shift by one on output.
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        for (Int taken = 0; taken < f[k]; ++taken) {
            faces.push_back(Face(mask << 1));
            // Gosper: next larger integer with the same popcount.
            const std::uint64_t c = mask & -mask;
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return SimplicialComplex::from_facets(std::move(faces));
}

} // namespace flagdeck

#endif
