#ifndef FLAGDECK_TOWER_HPP
#define FLAGDECK_TOWER_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolean.hpp"
#include "exact_rank.hpp"
#include "gamma.hpp"
#include "homology.hpp"
#include "transforms.hpp"

namespace flagdeck {

using MoveBlock = std::vector<Move>;

/// One grade of the tower: Δ_k of dimension k - 1 and its companion Γ_k.
struct TowerLevel {
    int grade = 0;
    SimplicialComplex delta;
    GammaWitness gamma;
    std::vector<Face> basis; // faces of Γ_k, by size then lexicographic
    MoveLog block_log;       // moves applied after the double suspension
    std::size_t steps_begin = 0; // first Γ step belonging to this level
};

/// Σ²K with new vertices m, m+1 (first suspension) and m+2, m+3, where m is
/// one above the largest vertex of K.
inline SimplicialComplex double_suspension(const SimplicialComplex& k)
{
    const VertexId m = k.fresh_vertex();
    return suspension(suspension(k, m, m + 1), m + 2, m + 3);
}

struct TowerOptions {
    bool validate_cohen_macaulay = true;
};

/**
 * Builds the graded tower Δ_{k+2} = net-subdivide(Σ²Δ_k) for grades
 * k = dim(base) + 1, ..., d, one block of moves per step. Each block must
 * net exactly one subdivision, keep every intermediate complex flag, and
 * change h exactly as its first subdivision alone would.
 */
inline std::vector<TowerLevel> build_tower(const SimplicialComplex& base, int d,
                                           const std::vector<MoveBlock>& plan,
                                           TowerOptions options = {})
{
    const int k0 = base.d();
    if (d % 2 != 0 || k0 % 2 != 0 || d < k0)
        throw Error("build_tower: grades must be even with dim(base) + 1 <= d; got base grade " +
                    std::to_string(k0) + " and d = " + std::to_string(d));
    if (static_cast<int>(plan.size()) != (d - k0) / 2)
        throw Error("build_tower: expected " + std::to_string((d - k0) / 2) +
                    " move blocks, got " + std::to_string(plan.size()));
    if (!is_flag(base))
        throw Error("build_tower: base complex is not flag");
    if (options.validate_cohen_macaulay) {
        if (auto cm = is_cohen_macaulay(base); !cm)
            throw Error("build_tower: base complex is not Cohen-Macaulay (" + cm.reason + ")");
    }

    std::vector<TowerLevel> levels;
    GammaTracker tracker(fh_vector(base).h, k0);
    levels.push_back({k0, base, tracker.witness(fh_vector(base)), face_list(tracker.gamma()), {}, 0});

    SimplicialComplex delta = base;
    for (std::size_t b = 0; b < plan.size(); ++b) {
        const MoveBlock& block = plan[b];
        int net = 0;
        for (const Move& m : block)
            net += m.kind == MoveKind::subdivide ? 1 : -1;
        if (net != 1)
            throw Error("build_tower: block " + std::to_string(b) + " nets " + std::to_string(net) +
                        " subdivisions; each block must net exactly 1");

        delta = double_suspension(delta);
        tracker.begin_block();
        const std::size_t begin = tracker.steps().size();
        tracker.double_cone();

        MoveLog log;
        for (const Move& m : block) {
            auto [next, entry] = apply_move(delta, m);
            if (!is_flag(next))
                throw Error("build_tower: block " + std::to_string(b) +
                            " produces a non-flag intermediate complex");
            delta = std::move(next);
            tracker.apply(entry);
            log.push_back(std::move(entry));
        }
        if (auto check = verify_move_log(log); !check)
            throw Error("build_tower: block " + std::to_string(b) + " log fails: " + check.reason);
        const auto rep = std::find_if(log.begin(), log.end(), [](const MoveLogEntry& e) {
            return e.move.kind == MoveKind::subdivide;
        });
        const Polynomial dh = Polynomial(log.back().h_after) - Polynomial(log.front().h_before);
        if (!(dh == Polynomial(rep->h_link).shifted(1)))
            throw Error("build_tower: block " + std::to_string(b) +
                        " does not add up to a single subdivision of " + rep->move.edge.to_string());

        const FHVector target = fh_vector(delta);
        levels.push_back({levels.back().grade + 2, delta, tracker.witness(target),
                          face_list(tracker.gamma()), std::move(log), begin});
    }
    return levels;
}

/// The map L between consecutive face bases. image[c] is the row hit by
/// column c, or nullopt when the source face has no image.
struct LMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::optional<std::size_t>> image;

    IntMatrix dense() const
    {
        IntMatrix m(rows, cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (image[c])
                m(*image[c], c) = 1;
        return m;
    }
};

/**
 * L: A^k → A^{k+2} sends each face of Γ_k to the same vertex set in
 * Γ_{k+2} (the double-cone inclusion), except that a vertex removed inside
 * the block and re-created by a cancelling attachment is renamed to its
 * replacement.
 */
inline std::vector<LMatrix> assemble_L(const std::vector<TowerLevel>& levels)
{
    std::vector<LMatrix> out;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const TowerLevel& src = levels[i];
        const TowerLevel& dst = levels[i + 1];
        if (dst.grade != src.grade + 2)
            throw Error("assemble_L: levels are not consecutive grades");
        const auto& steps = dst.gamma.steps;
        const std::size_t b = dst.steps_begin;
        const bool history_matches =
            b == src.gamma.steps.size() &&
            std::equal(src.gamma.steps.begin(), src.gamma.steps.end(), steps.begin());
        if (!history_matches || b + 2 > steps.size() || steps[b].op != "cone" ||
            steps[b + 1].op != "cone")
            throw Error("assemble_L: provenance missing between grades " +
                        std::to_string(src.grade) + " and " + std::to_string(dst.grade));

        std::array<VertexId, kMaxVertices> rename{};
        for (VertexId v = 0; v < kMaxVertices; ++v)
            rename[v] = v;
        for (std::size_t s = b; s < steps.size(); ++s)
            if (steps[s].op == "attach" && steps[s].replaces)
                rename[*steps[s].replaces] = *steps[s].u;

        std::unordered_map<Face, std::size_t> row;
        for (std::size_t r = 0; r < dst.basis.size(); ++r)
            row[dst.basis[r]] = r;
        LMatrix l{dst.basis.size(), src.basis.size(), {}};
        for (Face f : src.basis) {
            Face g;
            for (VertexId v : f.vertices())
                g = g.with(rename[v]);
            auto it = row.find(g);
            l.image.push_back(it == row.end() ? std::nullopt : std::optional(it->second));
        }
        out.push_back(std::move(l));
    }
    return out;
}

struct TowerReport {
    std::vector<int> grades;
    std::vector<std::size_t> dims;            // dim A^k = #faces of Γ_k
    std::vector<std::size_t> ranks_per_step;  // rank L : A^k → A^{k+2}
    std::vector<std::size_t> composite_ranks; // rank L^{(d-k)/2} : A^k → A^d
    std::vector<std::size_t> cokernel_dims;   // dim A^{k+2} - rank L
    std::size_t top_kernel_dim = 0;           // ker(L : A^d → A^{d+2} = 0)
    std::vector<Int> primitive_dims;          // dim of P^{d-2k} = 2^{d-2k}
    std::vector<Int> primitive_multiplicities; // copies of P^{d-2k}: s_k
    std::vector<bool> level_certified;
    std::vector<VertexId> labels;
    bool injective = false;
    bool certified = false;
    bool search_certified = false;
    bool verdict = false;
    std::optional<Refusal> witness;
    std::string note;
};

/**
 * Decides the formal Lefschetz property of the tower:
 *   (i)   every L (hence every power L^r into A^d) is injective;
 *   (ii)  A^{d+2} is truncated to 0, so L kills all of A^d;
 *   (iii) Γ_d has a Boolean decomposition whose labels are the tower's
 *         label set (the cone vertices plus base labels) in some order,
 *         splitting A^d into s_k copies of P^{d-2k} = 2^{[d-2k]}.
 * The verdict is (i) and (iii). search_boolean on Γ_d is reported alongside
 * as an independent cross-check.
 */
inline TowerReport lefschetz_verdict(const std::vector<TowerLevel>& levels,
                                     const std::vector<LMatrix>& ls, int d)
{
    if (levels.empty() || levels.back().grade != d)
        throw Error("lefschetz_verdict: tower does not reach grade " + std::to_string(d));
    if (ls.size() + 1 != levels.size())
        throw Error("lefschetz_verdict: expected one L per pair of consecutive levels");
    TowerReport rep;
    rep.note = "A^{d+2} is truncated to 0, so ker(L on A^d) = A^d; the Boolean content of "
               "P^d is checked through the certificate of the top complex";
    for (const auto& lvl : levels) {
        rep.grades.push_back(lvl.grade);
        rep.dims.push_back(lvl.basis.size());
        rep.level_certified.push_back(
            certify_label_set(lvl.gamma.gamma, lvl.gamma.labels, GroundMode::permissive).has_value());
    }
    rep.injective = true;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const std::size_t r = exact_rank(ls[i].dense());
        rep.ranks_per_step.push_back(r);
        rep.cokernel_dims.push_back(ls[i].rows - r);
        if (r != ls[i].cols) {
            rep.injective = false;
            if (!rep.witness)
                for (std::size_t c = 0; c < ls[i].cols; ++c)
                    if (!ls[i].image[c]) {
                        rep.witness = Refusal{levels[i].basis[c],
                                              "face of grade " + std::to_string(levels[i].grade) +
                                                  " has no image under L"};
                        break;
                    }
        }
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        IntMatrix acc;
        acc.rows = acc.cols = levels[i].basis.size();
        acc.data.assign(acc.rows * acc.cols, 0);
        for (std::size_t j = 0; j < acc.rows; ++j)
            acc(j, j) = 1;
        for (std::size_t j = i; j < ls.size(); ++j)
            acc = multiply(ls[j].dense(), acc);
        rep.composite_ranks.push_back(exact_rank(acc));
    }
    rep.top_kernel_dim = levels.back().basis.size();

    const TowerLevel& top = levels.back();
    rep.labels = top.gamma.labels;
    for (int k = 0; 2 * k <= d; ++k)
        rep.primitive_dims.push_back(Int{1} << (d - 2 * k));
    if (auto cert = certify_label_set(top.gamma.gamma, top.gamma.labels, GroundMode::permissive)) {
        rep.certified = true;
        rep.labels = cert->labeled.labels;
        rep.primitive_multiplicities = cert->s_counts();
    } else {
        auto refused = verify_boolean(LabeledComplex{top.gamma.gamma, top.gamma.labels},
                                      GroundMode::permissive);
        if (!rep.witness)
            rep.witness = std::get<Refusal>(refused);
    }
    rep.search_certified = search_boolean(top.gamma.gamma, d).has_value();
    rep.verdict = rep.injective && rep.certified;
    return rep;
}

} // namespace flagdeck

#endif
