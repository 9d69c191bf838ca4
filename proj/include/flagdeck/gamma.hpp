#ifndef FLAGDECK_GAMMA_HPP
#define FLAGDECK_GAMMA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "attach.hpp"
#include "boolean.hpp"
#include "complex.hpp"
#include "kruskal_katona.hpp"
#include "transforms.hpp"

namespace flagdeck {

/// One recorded operation on Γ. Replaying the steps in order rebuilds Γ.
///   base    Γ := gamma_e
///   cone    Γ := Γ * u
///   attach  Γ := Γ ∪ (gamma_e * u)
///   detach  Γ := Ast_Γ(u), gamma_e records lk_Γ(u)
///   reset   Γ := gamma_e (compressed complex; a discontinuity)
struct GammaStep {
    std::string op;
    std::optional<VertexId> u;
    SimplicialComplex gamma_e;
    bool gamma_e_certified = false;
    bool fallback = false;
    std::optional<VertexId> replaces; // old vertex whose cone this attachment re-creates

    friend bool operator==(const GammaStep&, const GammaStep&) = default;
};

/// A complex Γ with f(Γ) = h(Δ) and the history that produced it.
struct GammaWitness {
    SimplicialComplex gamma;
    FHVector target;
    std::vector<VertexId> labels;
    std::vector<GammaStep> steps;

    /// No compressed-complex fallback was needed anywhere.
    bool continuous() const
    {
        return std::none_of(steps.begin(), steps.end(),
                            [](const GammaStep& s) { return s.fallback || s.op == "reset"; });
    }

    /// Every attached or detached link carried a Boolean certificate.
    bool all_links_certified() const
    {
        return std::all_of(steps.begin(), steps.end(), [](const GammaStep& s) {
            return (s.op != "attach" && s.op != "detach") || s.gamma_e_certified;
        });
    }

    /// f(Γ) = target h entrywise (Γ may be lower dimensional when h_d = 0).
    bool matches_target() const
    {
        return trim_zeros(f_vector(gamma)) == trim_zeros(target.h);
    }
};

inline std::vector<Int> binomial_row(int d)
{
    std::vector<Int> out;
    for (int i = 0; i <= d; ++i)
        out.push_back(binomial(d, i));
    return out;
}

/// { F ∪ G : F ∈ S, G ⊆ first d - 2|F| labels }.
inline SimplicialComplex boolean_complex(const std::vector<Face>& initial,
                                         const std::vector<VertexId>& labels)
{
    const int d = static_cast<int>(labels.size());
    std::vector<Face> out;
    for (Face f : initial) {
        const int room = d - 2 * f.size();
        if (room < 0)
            continue;
        Face g;
        for (int i = 0; i < room; ++i)
            g = g.with(labels[static_cast<std::size_t>(i)]);
        out.push_back(f | g);
    }
    return SimplicialComplex::from_facets(std::move(out));
}

/// A Γ with Boolean decomposition and f(Γ) = h on labels first..first+d-1;
/// the initial part is the compressed complex with the required counts,
/// placed on the following ids. nullopt if h admits no such Γ.
inline std::optional<std::pair<SimplicialComplex, std::vector<VertexId>>>
boolean_gamma(const std::vector<Int>& h, int d, VertexId first = 1)
{
    auto s = initial_counts_for(h, d);
    if (!s || !kk_valid(*s))
        return std::nullopt;
    std::vector<VertexId> labels;
    for (int i = 0; i < d; ++i)
        labels.push_back(first + static_cast<VertexId>(i));
    if (s->size() >= 2 && (*s)[1] + d + first > static_cast<Int>(kMaxVertices))
        return std::nullopt;
    // compressed_complex uses ids 1..n; shift them past the labels.
    std::array<VertexId, kMaxVertices> shift{};
    for (VertexId v = 1; v < kMaxVertices; ++v)
        shift[v] = std::min<VertexId>(v + first + static_cast<VertexId>(d) - 1, kMaxVertices - 1);
    const SimplicialComplex s_complex = relabel(compressed_complex(*s), shift);
    return std::make_pair(boolean_complex(face_list(s_complex), labels), labels);
}

/**
 * Follows a sequence of PL moves on Δ with the corresponding operations on
 * Γ: a subdivision attaches a cone u * Γ_e over a subcomplex with
 * f(Γ_e) = h(lk e), a contraction removes a vertex u with f(lk_Γ u) = h(lk e).
 *
 * Γ_e is chosen, in order of preference, as
 *   1. the link of a vertex removed earlier in the same block with the
 *      matching face numbers (the subdivision cancels that contraction),
 *   2. a Boolean-compatible subcomplex: initial part S_e chosen greedily
 *      inside the current initial part, Boolean part on the first d - 2
 *      labels,
 *   3. the compressed complex, if it happens to sit inside Γ (flagged).
 * If all fail, Γ is reset to the compressed complex of the new h-vector.
 */
class GammaTracker {
public:
    GammaTracker(const std::vector<Int>& h, int d)
    {
        if (auto built = boolean_gamma(h, d)) {
            gamma_ = built->first;
            labels_ = built->second;
            steps_.push_back({"base", std::nullopt, gamma_, true, false, std::nullopt});
        } else {
            gamma_ = compressed_complex(h);
            for (int i = 0; i < d; ++i)
                labels_.push_back(static_cast<VertexId>(i + 1));
            steps_.push_back({"base", std::nullopt, gamma_, false, true, std::nullopt});
        }
    }

    const SimplicialComplex& gamma() const noexcept { return gamma_; }
    const std::vector<VertexId>& labels() const noexcept { return labels_; }
    const std::vector<GammaStep>& steps() const noexcept { return steps_; }
    int d() const noexcept { return static_cast<int>(labels_.size()); }

    /// Starts a new cancellation scope (one block of a tower).
    void begin_block()
    {
        block_attached_.clear();
        pending_.clear();
    }

    /// Double cone: two fresh Boolean coordinates placed in front of the labels.
    void double_cone()
    {
        const VertexId c1 = fresh();
        gamma_ = cone(gamma_, c1);
        steps_.push_back({"cone", c1, {}, true, false, std::nullopt});
        const VertexId c2 = fresh();
        gamma_ = cone(gamma_, c2);
        steps_.push_back({"cone", c2, {}, true, false, std::nullopt});
        labels_.insert(labels_.begin(), {c1, c2});
    }

    void apply(const MoveLogEntry& entry)
    {
        if (entry.d() != d())
            throw Error("GammaTracker: move at d = " + std::to_string(entry.d()) +
                        " applied to a tracker at d = " + std::to_string(d()));
        if (entry.move.kind == MoveKind::subdivide)
            subdivide(entry);
        else
            contract(entry);
    }

    GammaWitness witness(const FHVector& target) const
    {
        return GammaWitness{gamma_, target, labels_, steps_};
    }

private:
    VertexId fresh() const
    {
        VertexId top = 0;
        if (!gamma_.ground().empty())
            top = gamma_.ground().max_vertex();
        for (VertexId l : labels_)
            top = std::max(top, l);
        const VertexId v = top + 1;
        check_vertex(v);
        return v;
    }

    std::vector<VertexId> link_labels() const
    {
        return {labels_.begin(), labels_.begin() + std::max(0, d() - 2)};
    }

    bool certified(const SimplicialComplex& gamma_e) const
    {
        return is_certificate(
            verify_boolean(LabeledComplex{gamma_e, link_labels()}, GroundMode::permissive));
    }

    /// Greedy Boolean-compatible Γ_e with f(Γ_e) = target.
    std::optional<SimplicialComplex> boolean_link(const std::vector<Int>& target) const
    {
        const int de = d() - 2;
        auto s_e = initial_counts_for(target, de);
        if (!s_e)
            return std::nullopt;
        const Face mask = Face::from_vertices(labels_);
        std::vector<std::vector<Face>> s_by_size;
        for (Face f : face_list(gamma_))
            if (f.disjoint(mask)) {
                const auto k = static_cast<std::size_t>(f.size());
                if (s_by_size.size() <= k)
                    s_by_size.resize(k + 1);
                s_by_size[k].push_back(f);
            }
        std::vector<Face> chosen;
        std::unordered_set<Face> chosen_set;
        for (std::size_t k = 0; k < s_e->size(); ++k) {
            Int need = (*s_e)[k];
            if (need == 0)
                continue;
            if (k >= s_by_size.size())
                return std::nullopt;
            for (Face f : s_by_size[k]) {
                if (need == 0)
                    break;
                bool closed = true;
                for (VertexId v : f.vertices())
                    if (!chosen_set.count(f.without(v))) {
                        closed = false;
                        break;
                    }
                if (!closed)
                    continue;
                chosen.push_back(f);
                chosen_set.insert(f);
                --need;
            }
            if (need != 0)
                return std::nullopt;
        }
        SimplicialComplex out = boolean_complex(chosen, link_labels());
        if (trim_zeros(f_vector(out)) != trim_zeros(target) || !out.is_subcomplex_of(gamma_))
            return std::nullopt;
        return out;
    }

    void reset(const MoveLogEntry& entry)
    {
        gamma_ = compressed_complex(entry.h_after);
        steps_.push_back({"reset", std::nullopt, gamma_, false, true, std::nullopt});
        block_attached_.clear();
        pending_.clear();
    }

    void subdivide(const MoveLogEntry& entry)
    {
        const std::vector<Int> target = trim_zeros(entry.h_link);
        std::optional<SimplicialComplex> gamma_e;
        std::optional<VertexId> replaces;
        bool fallback = false;

        for (auto it = pending_.begin(); it != pending_.end(); ++it)
            if (trim_zeros(f_vector(it->second)) == target && it->second.is_subcomplex_of(gamma_)) {
                gamma_e = it->second;
                replaces = it->first;
                pending_.erase(it);
                break;
            }
        if (!gamma_e)
            gamma_e = boolean_link(target);
        if (!gamma_e && kk_valid(target)) {
            SimplicialComplex c = compressed_complex(target);
            if (c.is_subcomplex_of(gamma_)) {
                gamma_e = std::move(c);
                fallback = true;
            }
        }
        if (!gamma_e) {
            reset(entry);
            return;
        }
        const VertexId u = fresh();
        gamma_ = attach_cone(gamma_, *gamma_e, u);
        steps_.push_back({"attach", u, *gamma_e, certified(*gamma_e), fallback, replaces});
        block_attached_.push_back(u);
    }

    void contract(const MoveLogEntry& entry)
    {
        const std::vector<Int> target = trim_zeros(entry.h_link);
        const Face mask = Face::from_vertices(labels_);
        std::vector<VertexId> candidates(block_attached_.rbegin(), block_attached_.rend());
        auto older = gamma_.vertices();
        std::reverse(older.begin(), older.end());
        for (VertexId v : older)
            if (!mask.contains(v) &&
                std::find(candidates.begin(), candidates.end(), v) == candidates.end())
                candidates.push_back(v);
        for (VertexId u : candidates) {
            if (!gamma_.ground().contains(u))
                continue;
            SimplicialComplex lk = link(gamma_, Face::single(u));
            if (trim_zeros(f_vector(lk)) != target)
                continue;
            gamma_ = antistar(gamma_, u);
            const bool ok = certified(lk);
            auto local = std::find(block_attached_.begin(), block_attached_.end(), u);
            if (local != block_attached_.end())
                block_attached_.erase(local);
            else
                pending_.emplace_back(u, lk);
            steps_.push_back({"detach", u, std::move(lk), ok, false, std::nullopt});
            return;
        }
        reset(entry);
    }

    SimplicialComplex gamma_;
    std::vector<VertexId> labels_;
    std::vector<GammaStep> steps_;
    std::vector<VertexId> block_attached_;
    std::vector<std::pair<VertexId, SimplicialComplex>> pending_;
};

/**
 * Builds Γ with f(Γ) = h(Δ_final) along a verified move log. The starting Γ
 * is Boolean with base labels 1..d; for the d-cross-polytope boundary this
 * is the full simplex 2^[d]. An empty log yields 2^[d].
 */
inline GammaWitness build_gamma_along_walk(int base_d, const MoveLog& log)
{
    if (log.empty()) {
        GammaTracker t(binomial_row(base_d), base_d);
        return t.witness(FHVector{base_d, binomial_row(base_d), binomial_row(base_d)});
    }
    if (log.front().d() != base_d)
        throw Error("build_gamma_along_walk: log starts at d = " + std::to_string(log.front().d()) +
                    ", expected " + std::to_string(base_d));
    GammaTracker t(log.front().h_before, base_d);
    t.begin_block();
    for (const auto& entry : log)
        t.apply(entry);
    return t.witness(FHVector{base_d, log.back().f_after, log.back().h_after});
}

/// Re-executes recorded steps; reproduces the witness' Γ exactly.
inline SimplicialComplex replay_gamma_steps(const std::vector<GammaStep>& steps)
{
    SimplicialComplex g;
    for (const auto& s : steps) {
        if (s.op == "base" || s.op == "reset")
            g = s.gamma_e;
        else if (s.op == "cone")
            g = cone(g, s.u.value());
        else if (s.op == "attach")
            g = attach_cone(g, s.gamma_e, s.u.value());
        else if (s.op == "detach")
            g = antistar(g, s.u.value());
        else
            throw Error("unknown gamma step '" + s.op + "'");
    }
    return g;
}

} // namespace flagdeck

#endif
