#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gk0/gamma_map.hpp"
#include "gk0/sdp.hpp"

namespace gk0 {

/// An ordered Γ-group whose underlying group is simplicial-shaped and which can
/// produce decomposition witnesses for zero relations among its positive elements.
class SdpTarget {
public:
    virtual ~SdpTarget() = default;
    virtual const SimplicialGroup& carrier() const = 0;
    virtual bool contains(const GammaVector& v) const = 0;
    virtual SdpWitness witness(const std::vector<GroupRingElt>& a, const std::vector<GammaVector>& x) const = 0;
};

class SimplicialTarget : public SdpTarget {
public:
    explicit SimplicialTarget(SimplicialGroup g) : g_(std::move(g)) {}
    const SimplicialGroup& carrier() const override { return g_; }
    bool contains(const GammaVector& v) const override { return cone_contains(g_, v); }
    SdpWitness witness(const std::vector<GroupRingElt>& a, const std::vector<GammaVector>& x) const override {
        return sdp_witness(g_, a, x);
    }

private:
    SimplicialGroup g_;
};

struct ShenFactorization {
    SimplicialGroup g2;
    GammaLinearMap g12; // G1 -> G2
    GammaLinearMap g2_map; // G2 -> target
};

/// Factors g1 = g2 ∘ g12 through a fresh simplicial group with ker g12 = ker g1.
/// Throws DeltaNotNormal, TargetLacksSdp, NotPositiveMap, or InternalVerificationFailed.
ShenFactorization shen_step(const GammaLinearMap& g1);
ShenFactorization shen_step(const GammaLinearMap& g1, const SdpTarget& target);

/// Sequential telescope G_0 -> G_1 -> ... with maps g_n into the target, built so that
/// `positives[n]` = g_n(preimage[n]) with preimage[n] positive and ker link_n = ker g_n.
struct Telescope {
    std::vector<SimplicialGroup> groups;
    std::vector<GammaLinearMap> links;     // G_n -> G_{n+1}
    std::vector<GammaLinearMap> to_target; // g_n
    std::vector<GammaVector> preimages;    // in G_n
};

Telescope build_telescope(const SdpTarget& target, const std::vector<GammaVector>& positives);

} // namespace gk0
