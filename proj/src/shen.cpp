#include "gk0/shen.hpp"

#include "gk0/error.hpp"

namespace gk0 {

ShenFactorization shen_step(const GammaLinearMap& g1) { return shen_step(g1, SimplicialTarget(g1.target())); }

ShenFactorization shen_step(const GammaLinearMap& g1, const SdpTarget& target) {
    const SimplicialGroup& src = g1.source();
    const SpacePtr& space = src.space();
    if (!space->is_normal()) fail(Errc::DeltaNotNormal, "the source subgroup is not normal");
    if (!(target.carrier() == g1.target())) fail(Errc::ShapeMismatch, "map does not land in the target");
    if (!same_space(target.carrier().space(), space))
        fail(Errc::TargetLacksSdp, "target basis is not stabilized by the source subgroup");
    for (const auto& col : g1.columns())
        if (!target.contains(col)) fail(Errc::NotPositiveMap, "column " + col.str() + " is not positive");

    auto in_target = [&](const GammaVector& v) { return target.contains(v); };
    SimplicialGroup h_group = src;
    GammaLinearMap to_h = GammaLinearMap::identity(src);
    GammaLinearMap from_h = g1;

    for (const auto& z : map_kernel(g1)) {
        GammaVector w = map_apply(to_h, z);
        std::vector<GroupRingElt> a;
        for (const auto& c : w.coords()) a.push_back(c.lift());
        const auto& x = from_h.columns();
        SdpWitness sw = target.witness(a, x);
        if (auto v = verify_sdp_witness(target.carrier(), a, x, sw, in_target); !v)
            fail(Errc::InternalVerificationFailed, "witness rejected: " + v.reason);

        SimplicialGroup next(space, sw.m);
        std::vector<GammaVector> cols;
        for (const auto& row : sw.b) {
            GammaVector col(next);
            for (std::size_t j = 0; j < sw.m; ++j) col[j] = project_pi(row[j], space);
            cols.push_back(std::move(col));
        }
        GammaLinearMap step(h_group, next, std::move(cols));
        to_h = map_compose(step, to_h);
        from_h = GammaLinearMap(next, target.carrier(), sw.y);
        h_group = next;
    }

    if (!(map_compose(from_h, to_h) == g1)) fail(Errc::InternalVerificationFailed, "g2 ∘ g12 differs from g1");
    if (kernel_lattice(to_h) != kernel_lattice(g1)) fail(Errc::InternalVerificationFailed, "ker g12 differs from ker g1");
    if (!is_positive_map(to_h)) fail(Errc::InternalVerificationFailed, "g12 is not positive");
    for (const auto& col : from_h.columns())
        if (!target.contains(col)) fail(Errc::InternalVerificationFailed, "g2 is not positive");
    return {h_group, to_h, from_h};
}

Telescope build_telescope(const SdpTarget& target, const std::vector<GammaVector>& positives) {
    Telescope t;
    if (positives.empty()) return t;
    const SimplicialGroup& carrier = target.carrier();
    SimplicialGroup g0(carrier.space(), 1);
    t.groups.push_back(g0);
    t.to_target.emplace_back(g0, carrier, std::vector<GammaVector>{positives.front()});
    t.preimages.push_back(GammaVector::basis(g0, 0));
    for (std::size_t n = 1; n < positives.size(); ++n) {
        const GammaLinearMap h = append_columns(t.to_target.back(), {positives[n]});
        ShenFactorization f = shen_step(h, target);
        const SimplicialGroup& prev = t.groups.back();
        t.links.push_back(map_compose(f.g12, first_summand_inclusion(prev, 1)));
        t.preimages.push_back(map_apply(f.g12, GammaVector::basis(h.source(), prev.rank())));
        t.groups.push_back(f.g2);
        t.to_target.push_back(f.g2_map);
    }
    return t;
}

} // namespace gk0
