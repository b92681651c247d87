#pragma once

#include <vector>

#include "gk0/limits.hpp"
#include "gk0/sdp.hpp"
#include "gk0/shen.hpp"

namespace gk0 {

struct ExtElement {
    GammaVector x;
    CosetVector t;

    bool operator==(const ExtElement& o) const { return x == o.x && t == o.t; }
    std::string str() const { return "(" + x.str() + " | " + t.str() + ")"; }
};

/// H = G ⊕ Z[Γ/Δ] ordered by (x, t) >= 0 iff t >= 0 and x + t·u >= 0, with order-unit (0, Δ).
/// Its underlying group is the simplicial-shaped carrier of rank rank(G) + 1, t being the last coordinate.
class ExtendedGroup : public SdpTarget {
public:
    /// Throws DeltaNotNormal or NotOrderUnit.
    ExtendedGroup(SimplicialGroup base, GammaVector unit);

    const SimplicialGroup& base() const { return base_; }
    const GammaVector& unit() const { return unit_; }

    ExtElement make(GammaVector x, CosetVector t) const;
    ExtElement zero() const;
    ExtElement order_unit() const;
    ExtElement iota(const GammaVector& x) const;
    CosetVector proj(const ExtElement& e) const { return e.t; }

    GammaVector to_carrier(const ExtElement& e) const;
    ExtElement from_carrier(const GammaVector& v) const;

    const SimplicialGroup& carrier() const override { return carrier_; }
    bool contains(const GammaVector& v) const override { return contains(from_carrier(v)); }
    bool contains(const ExtElement& e) const;
    SdpWitness witness(const std::vector<GroupRingElt>& a, const std::vector<GammaVector>& x) const override;

private:
    SimplicialGroup base_;
    GammaVector unit_;
    SimplicialGroup carrier_;
};

ExtElement operator+(const ExtElement& a, const ExtElement& b);
ExtElement operator-(const ExtElement& a, const ExtElement& b);
ExtElement act(const GroupRingElt& a, const ExtElement& e);

inline bool ext_cone_contains(const ExtendedGroup& h, const ExtElement& e) { return h.contains(e); }

/// c in Z^+[Γ] with e <= (0, cΔ).
GroupRingElt ext_dominating_multiplier(const ExtendedGroup& h, const ExtElement& e);

struct ProbeReport {
    std::size_t probes = 0;
    std::size_t dominated = 0;
    bool ok() const { return probes == dominated; }
};
/// Checks that (0, Δ) dominates every probe, via the multiplier above.
ProbeReport ext_order_unit_check(const ExtendedGroup& h, const std::vector<ExtElement>& probes);

struct IntervalReport {
    std::size_t box_size = 0;       // elements of the box [-1, u+1] examined
    std::size_t interval_size = 0;  // elements of [0, u]
    std::size_t preimage_size = 0;  // elements x with 0 <= ι(x) <= (0, Δ)
    std::size_t mismatches = 0;
    bool ok() const { return mismatches == 0 && interval_size == preimage_size; }
};
/// Compares ι^{-1}([0, (0,Δ)]) with [0, u] over the box [-1, u+1].
IntervalReport ext_interval_preimage(const ExtendedGroup& h);

/// Throws RelationNotZero or NotInCone.
SdpWitness ext_sdp_witness(const ExtendedGroup& h, const std::vector<GroupRingElt>& a, const std::vector<ExtElement>& xs);
Verdict verify_ext_sdp_witness(const ExtendedGroup& h, const std::vector<GroupRingElt>& a,
                               const std::vector<ExtElement>& xs, const SdpWitness& w);

struct ExtendedTower {
    std::vector<ExtendedGroup> levels;
    std::vector<GammaLinearMap> maps; // g ⊕ id on the carriers
};

/// Needs unit or interval mode and normal Δ. Explicit levels only.
ExtendedTower extend_tower(const Tower& t);

} // namespace gk0
