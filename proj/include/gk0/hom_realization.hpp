#pragma once

#include <vector>

#include "gk0/gamma_map.hpp"
#include "gk0/limits.hpp"
#include "gk0/matricial.hpp"
#include "gk0/sdp.hpp"

namespace gk0 {

/// Diagonal slot `source_slot` of copy `copy` of source component `source_component`
/// lands on diagonal position `target_slot` of target component `target_component`.
struct SlotAssignment {
    std::size_t source_component;
    std::size_t copy;
    std::size_t source_slot;
    std::size_t target_component;
    std::size_t target_slot;

    bool operator==(const SlotAssignment&) const = default;
};

/// A graded homomorphism R -> S up to graded conjugacy: its K0 matrix plus a block layout.
struct HomSpec {
    MatricialRingDesc source;
    MatricialRingDesc target;
    GammaLinearMap matrix;
    bool unital = false;
    std::vector<SlotAssignment> certificate;
};

struct Realization {
    MatricialRingDesc ring;
    /// K0(ring) -> G, sending basis class i to x_i.
    GammaLinearMap iso;
};

/// a_i in Z^+[Γ] with π(a_i) = u_i. Throws NotInCone, NotOrderUnit, ClassMismatch.
Realization realize_simplicial(const SimplicialGroup& g, const GammaVector& u, const std::vector<GroupRingElt>& a);
/// Uses the canonical lifts of the coordinates of u.
Realization realize_simplicial(const SimplicialGroup& g, const GammaVector& u);

/// Throws NotPositiveMap, ShapeMismatch, NotRealizable, UnitMismatch.
HomSpec hom_realizable(const MatricialRingDesc& r, const MatricialRingDesc& s, const GammaLinearMap& b, bool unital);

/// Injectivity, per-slot coset matching against the matrix, and surjectivity when unital.
Verdict verify_hom_spec(const HomSpec& h);

inline const GammaLinearMap& k0_of_hom(const HomSpec& h) { return h.matrix; }
HomSpec identity_spec(const MatricialRingDesc& r);
/// h2 ∘ h1.
HomSpec hom_compose(const HomSpec& h2, const HomSpec& h1);

struct RingTower {
    std::vector<MatricialRingDesc> rings;
    std::vector<HomSpec> maps;
    std::vector<GammaLinearMap> isos; // K0(rings[n]) -> G_n
};

/// Explicit levels only. Requires unit or interval mode.
RingTower realize_tower(const Tower& t);

} // namespace gk0
