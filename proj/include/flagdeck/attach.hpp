#ifndef FLAGDECK_ATTACH_HPP
#define FLAGDECK_ATTACH_HPP

#include <utility>

#include "complex.hpp"

namespace flagdeck {

/// Γ ∪ (Γ_e * u) for a subcomplex Γ_e ≤ Γ and a fresh vertex u. Its face
/// numbers are f_{i-1}(Γ) + f_{i-2}(Γ_e).
inline SimplicialComplex attach_cone(const SimplicialComplex& gamma,
                                     const SimplicialComplex& gamma_e, VertexId u)
{
    check_vertex(u);
    if (gamma.ground().contains(u))
        throw Error("attach_cone: vertex " + std::to_string(u) + " is not fresh");
    if (!gamma_e.is_subcomplex_of(gamma))
        throw Error("attach_cone: Γ_e is not a subcomplex of Γ");
    std::vector<Face> out = gamma.facets();
    for (Face f : gamma_e.facets())
        out.push_back(f.with(u));
    return SimplicialComplex::from_facets(std::move(out));
}

/// Splits Γ at u into (Ast_Γ(u), lk_Γ(u)); the inverse of attach_cone.
inline std::pair<SimplicialComplex, SimplicialComplex> detach_cone(const SimplicialComplex& gamma,
                                                                   VertexId u)
{
    if (!gamma.ground().contains(u))
        throw Error("detach_cone: vertex " + std::to_string(u) + " not in ground set");
    return {antistar(gamma, u), link(gamma, Face::single(u))};
}

} // namespace flagdeck

#endif
