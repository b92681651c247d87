#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk0/simplicial.hpp"

namespace gk0 {

/// x_i = Σ_j b[i][j]·y[j] with b[i][j] >= 0, y[j] positive, and Σ_i π(a_i b[i][j]) = 0.
struct SdpWitness {
    std::size_t m = 0;
    std::vector<std::vector<GroupRingElt>> b;
    std::vector<GammaVector> y;
};

/// x = Σ_j b[j]·y[j] with y[j] positive and π(a b[j]) >= 0.
struct UnperfWitness {
    std::size_t m = 0;
    std::vector<GroupRingElt> b;
    std::vector<GammaVector> y;
};

struct Verdict {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict reject(std::string why) { return {false, std::move(why)}; }
};

/// Σ a_i x_i in G.
GammaVector combine(const SimplicialGroup& g, const std::vector<GroupRingElt>& a, const std::vector<GammaVector>& x);

/// Throws RelationNotZero, NotInCone, or ShapeMismatch.
SdpWitness sdp_witness(const SimplicialGroup& g, const std::vector<GroupRingElt>& a,
                       const std::vector<GammaVector>& x);

/// Checks both witness equations. The cone test for y is delegated so the same
/// check serves ordered groups whose cone is not the simplicial one.
Verdict verify_sdp_witness(const SimplicialGroup& g, const std::vector<GroupRingElt>& a,
                           const std::vector<GammaVector>& x, const SdpWitness& w);
Verdict verify_sdp_witness(const SimplicialGroup& g, const std::vector<GroupRingElt>& a,
                           const std::vector<GammaVector>& x, const SdpWitness& w,
                           const std::function<bool(const GammaVector&)>& in_cone);

/// Throws NotPositive or ProductNotInCone.
UnperfWitness unperforation_witness(const SimplicialGroup& g, const GroupRingElt& a, const GammaVector& x);
Verdict verify_unperf_witness(const SimplicialGroup& g, const GroupRingElt& a, const GammaVector& x,
                              const UnperfWitness& w);

/// Exhaustive search for a witness with m = 1, all coefficients of b and y bounded by
/// `bound` in absolute value. Default bound: largest |coefficient| of a and x, plus 2.
std::optional<UnperfWitness> search_single_term_witness(const SimplicialGroup& g, const GroupRingElt& a,
                                                        const GammaVector& x, std::optional<Integer> bound = {});

} // namespace gk0
