#ifndef FLAGDECK_BOOLEAN_HPP
#define FLAGDECK_BOOLEAN_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "attach.hpp"
#include "complex.hpp"

namespace flagdeck {

/**
 * A complex Γ together with an ordered tuple of d distinct "Boolean" labels.
 * A face F ∪ G with F disjoint from the labels may only use G inside the
 * first d - 2|F| labels, so the order of the tuple matters.
 */
struct LabeledComplex {
    SimplicialComplex complex;
    std::vector<VertexId> labels;

    int d() const noexcept { return static_cast<int>(labels.size()); }

    Face label_mask() const { return Face::from_vertices(labels); }

    /// The first m labels; empty for m <= 0.
    Face prefix(int m) const
    {
        Face out;
        for (int i = 0; i < m && i < d(); ++i)
            out = out.with(labels[static_cast<std::size_t>(i)]);
        return out;
    }

    friend bool operator==(const LabeledComplex&, const LabeledComplex&) = default;
};

/// Throws on duplicate labels, or (strict mode) labels outside the ground set.
inline void validate_labels(const LabeledComplex& lc, GroundMode mode = GroundMode::strict)
{
    const Face mask = lc.label_mask(); // throws on duplicates
    if (mode == GroundMode::strict && !mask.subset_of(lc.complex.ground()))
        throw Error("Boolean label " + (mask - lc.complex.ground()).to_string() +
                    " is not a vertex of the complex (strict mode)");
}

/// Faces of Γ disjoint from the label set, ordered by size then lexicographically.
inline std::vector<Face> initial_part(const LabeledComplex& lc)
{
    const Face mask = lc.label_mask();
    std::vector<Face> out;
    for (Face f : face_list(lc.complex))
        if (f.disjoint(mask))
            out.push_back(f);
    return out;
}

/// A face witnessing why a decomposition fails, and the reason.
struct Refusal {
    Face face;
    std::string reason;

    friend bool operator==(const Refusal&, const Refusal&) = default;
};

struct BooleanCertificate {
    LabeledComplex labeled;
    std::vector<Face> initial; // S, ordered by size then lexicographically

    /// s_k = #{F ∈ S : |F| = k}
    std::vector<Int> s_counts() const
    {
        std::vector<Int> s;
        for (Face f : initial) {
            const auto k = static_cast<std::size_t>(f.size());
            if (s.size() <= k)
                s.resize(k + 1, 0);
            ++s[k];
        }
        return s;
    }

    friend bool operator==(const BooleanCertificate&, const BooleanCertificate&) = default;
};

using BooleanOutcome = std::variant<BooleanCertificate, Refusal>;

inline bool is_certificate(const BooleanOutcome& o)
{
    return std::holds_alternative<BooleanCertificate>(o);
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

/// Face numbers implied by a Boolean decomposition with s_k initial faces of
/// size k and d labels: f_{j-1} = Σ_k s_k C(d - 2k, j - k), where faces with
/// d - 2k < 0 contribute nothing.
inline std::vector<Int> boolean_f_vector(const std::vector<Int>& s_counts, int d)
{
    std::vector<Int> f;
    for (std::size_t k = 0; k < s_counts.size(); ++k) {
        const Int m = d - 2 * static_cast<Int>(k);
        if (m < 0 || s_counts[k] == 0)
            continue;
        for (Int g = 0; g <= m; ++g) {
            const auto j = k + static_cast<std::size_t>(g);
            if (f.size() <= j)
                f.resize(j + 1, 0);
            f[j] += s_counts[k] * binomial(m, g);
        }
    }
    return f;
}

inline std::vector<Int> trim_zeros(std::vector<Int> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

/// True iff the proposed initial-part counts reproduce f exactly.
inline bool shadow_check(const std::vector<Int>& f, const std::vector<Int>& s_counts, int d)
{
    return trim_zeros(boolean_f_vector(s_counts, d)) == trim_zeros(f);
}

/// Solves f = boolean_f_vector(s, d) for nonnegative s by forward
/// substitution; nullopt if no solution exists.
inline std::optional<std::vector<Int>> initial_counts_for(const std::vector<Int>& f, int d)
{
    std::vector<Int> s;
    const std::vector<Int> target = trim_zeros(f);
    for (std::size_t j = 0; j < target.size(); ++j) {
        Int rest = target[j];
        for (std::size_t k = 0; k < j && k < s.size(); ++k)
            rest -= s[k] * binomial(d - 2 * static_cast<Int>(k), static_cast<Int>(j - k));
        if (d - 2 * static_cast<Int>(j) >= 0) {
            if (rest < 0)
                return std::nullopt;
            s.push_back(rest);
        } else {
            if (rest != 0)
                return std::nullopt;
            s.push_back(0);
        }
    }
    s = trim_zeros(std::move(s));
    if (!shadow_check(f, s, d))
        return std::nullopt;
    return s;
}

// ---------------------------------------------------------------------------
// Verification and search
// ---------------------------------------------------------------------------

namespace detail {

/// Core check against a precomputed face list and face set.
inline std::optional<Refusal> boolean_refusal(const std::vector<Face>& faces,
                                              const std::unordered_set<Face>& face_set,
                                              const LabeledComplex& lc)
{
    const Face mask = lc.label_mask();
    const int d = lc.d();
    // Every face H = F ∪ G must have its Boolean part G inside [d - 2|F|].
    for (Face h : faces) {
        const Face f = h - mask;
        const Face g = h & mask;
        const int room = d - 2 * f.size();
        if (room < 0 || !g.subset_of(lc.prefix(room)))
            return Refusal{h, "no preimage: Boolean part " + g.to_string() +
                                  " does not fit in the first " + std::to_string(std::max(room, 0)) +
                                  " labels"};
    }
    // Every reconstructed F ∪ G must be a face.
    for (Face f : faces) {
        if (!f.disjoint(mask))
            continue;
        const int room = d - 2 * f.size();
        if (room < 0)
            continue;
        bool missing = false;
        Face witness;
        lc.prefix(room).for_each_subset([&](Face g) {
            if (!missing && !face_set.count(f | g)) {
                missing = true;
                witness = f | g;
            }
        });
        if (missing)
            return Refusal{witness, "reconstructed face is not in the complex"};
    }
    return std::nullopt;
}

} // namespace detail

/**
 * Checks Γ = { F ∪ G : F ∈ S, G ⊆ first d - 2|F| labels } with S the faces
 * disjoint from the labels. Since F = H \ labels and G = H ∩ labels are
 * forced, each face has at most one preimage; the refusal names the first
 * face of Γ without a preimage, or else the first reconstructed set that is
 * not a face.
 */
inline BooleanOutcome verify_boolean(const LabeledComplex& lc, GroundMode mode = GroundMode::strict)
{
    validate_labels(lc, mode);
    const auto faces = face_list(lc.complex);
    const std::unordered_set<Face> set(faces.begin(), faces.end());
    if (auto r = detail::boolean_refusal(faces, set, lc))
        return *r;
    return BooleanCertificate{lc, initial_part(lc)};
}

/**
 * Looks for an ordered label tuple of length d certifying a Boolean
 * decomposition. Candidate label sets are taken in lexicographic order over
 * the vertices sorted by descending degree (ties by id) and pruned by
 * shadow_check before their orderings are tried. Returns the first
 * certificate found.
 */
inline std::optional<BooleanCertificate> search_boolean(const SimplicialComplex& gamma, int d)
{
    if (d < 0)
        throw Error("search_boolean: d must be nonnegative");
    std::vector<VertexId> verts = gamma.vertices();
    if (static_cast<int>(verts.size()) < d)
        return std::nullopt;
    const auto adj = adjacency(gamma);
    std::stable_sort(verts.begin(), verts.end(), [&adj](VertexId a, VertexId b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });
    const auto faces = face_list(gamma);
    const std::unordered_set<Face> set(faces.begin(), faces.end());
    const auto f = f_vector(gamma);

    std::vector<std::size_t> pick(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < pick.size(); ++i)
        pick[i] = i;
    const std::size_t n = verts.size();
    while (true) {
        Face mask;
        for (std::size_t i : pick)
            mask = mask.with(verts[i]);
        std::vector<Int> s;
        for (Face face : faces)
            if (face.disjoint(mask)) {
                const auto k = static_cast<std::size_t>(face.size());
                if (s.size() <= k)
                    s.resize(k + 1, 0);
                ++s[k];
            }
        if (shadow_check(f, s, d)) {
            std::vector<std::size_t> order = pick;
            do {
                LabeledComplex lc{gamma, {}};
                for (std::size_t i : order)
                    lc.labels.push_back(verts[i]);
                if (!detail::boolean_refusal(faces, set, lc))
                    return BooleanCertificate{lc, initial_part(lc)};
            } while (std::next_permutation(order.begin(), order.end()));
        }
        // next combination in lexicographic order
        std::size_t i = pick.size();
        while (i > 0 && pick[i - 1] == n - pick.size() + (i - 1))
            --i;
        if (i == 0)
            return std::nullopt;
        ++pick[i - 1];
        for (std::size_t j = i; j < pick.size(); ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

/// Tries every ordering of a fixed label set, given order first.
inline std::optional<BooleanCertificate> certify_label_set(const SimplicialComplex& gamma,
                                                           std::vector<VertexId> labels,
                                                           GroundMode mode = GroundMode::strict)
{
    LabeledComplex lc{gamma, labels};
    validate_labels(lc, mode);
    const auto faces = face_list(gamma);
    const std::unordered_set<Face> set(faces.begin(), faces.end());
    if (!detail::boolean_refusal(faces, set, lc))
        return BooleanCertificate{lc, initial_part(lc)};
    std::sort(labels.begin(), labels.end());
    do {
        lc.labels = labels;
        if (!detail::boolean_refusal(faces, set, lc))
            return BooleanCertificate{lc, initial_part(lc)};
    } while (std::next_permutation(labels.begin(), labels.end()));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Compatibility with the PL moves
// ---------------------------------------------------------------------------

/**
 * Certificate for Γ' = Γ ∪ (Γ_e * u) built from certificates of Γ (labels
 * [d]) and Γ_e (labels = first d - 2 labels of Γ): the new initial part is
 * S ∪ { F_e ∪ u : F_e ∈ S_e }.
 */
inline BooleanOutcome check_subdivision_compat(const BooleanCertificate& cert,
                                               const BooleanCertificate& cert_e, VertexId u)
{
    const auto& labels = cert.labeled.labels;
    const auto& gamma = cert.labeled.complex;
    const auto& gamma_e = cert_e.labeled.complex;
    if (gamma.ground().contains(u) || std::find(labels.begin(), labels.end(), u) != labels.end())
        throw Error("check_subdivision_compat: vertex " + std::to_string(u) + " is not fresh");
    const int d = cert.labeled.d();
    if (d < 2 || cert_e.labeled.labels !=
                     std::vector<VertexId>(labels.begin(), labels.begin() + (d - 2)))
        return Refusal{Face{}, "labels of Γ_e are not the first d - 2 labels of Γ"};
    for (Face f : gamma_e.facets())
        if (!gamma.contains(f))
            return Refusal{f, "Γ_e is not a subcomplex of Γ"};

    const SimplicialComplex next = attach_cone(gamma, gamma_e, u);
    BooleanOutcome out = verify_boolean(LabeledComplex{next, labels}, GroundMode::permissive);
    if (!is_certificate(out))
        return out;
    std::vector<Face> expected = cert.initial;
    for (Face f : cert_e.initial)
        expected.push_back(f.with(u));
    std::sort(expected.begin(), expected.end(), BySizeThenLex{});
    if (std::get<BooleanCertificate>(out).initial != expected)
        return Refusal{Face::single(u), "initial part of Γ' is not S ∪ (S_e * u)"};
    return out;
}

/**
 * Certificate for Ast_Γ(u) with unchanged labels. Refused when u is a
 * Boolean label (the dimension does not drop, so a coordinate cannot go) or
 * when the restricted reconstruction is not exact.
 */
inline BooleanOutcome check_contraction_compat(const BooleanCertificate& cert, VertexId u)
{
    const auto& lc = cert.labeled;
    if (!lc.complex.ground().contains(u))
        throw Error("check_contraction_compat: vertex " + std::to_string(u) + " not in ground set");
    if (lc.label_mask().contains(u))
        return Refusal{Face::single(u), "cannot remove Boolean coordinate; dimension unchanged"};
    return verify_boolean(LabeledComplex{antistar(lc.complex, u), lc.labels}, GroundMode::permissive);
}

} // namespace flagdeck

#endif
