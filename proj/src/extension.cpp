#include "gk0/extension.hpp"

#include "gk0/error.hpp"

namespace gk0 {

ExtendedGroup::ExtendedGroup(SimplicialGroup base, GammaVector unit)
    : base_(std::move(base)), unit_(std::move(unit)), carrier_(base_.space(), base_.rank() + 1) {
    if (!base_.space()->is_normal()) fail(Errc::DeltaNotNormal, "extensions need a normal subgroup");
    require_member(base_, unit_);
    if (!is_order_unit(base_, unit_)) fail(Errc::NotOrderUnit, unit_.str());
}

ExtElement ExtendedGroup::make(GammaVector x, CosetVector t) const {
    require_member(base_, x);
    require_same_space(t.space(), base_.space());
    return {std::move(x), std::move(t)};
}

ExtElement ExtendedGroup::zero() const { return {GammaVector(base_), CosetVector(base_.space())}; }

ExtElement ExtendedGroup::order_unit() const {
    return {GammaVector(base_), CosetVector::indicator(base_.space(), 0)};
}

ExtElement ExtendedGroup::iota(const GammaVector& x) const { return make(x, CosetVector(base_.space())); }

GammaVector ExtendedGroup::to_carrier(const ExtElement& e) const {
    std::vector<CosetVector> coords = e.x.coords();
    coords.push_back(e.t);
    return GammaVector(carrier_, std::move(coords));
}

ExtElement ExtendedGroup::from_carrier(const GammaVector& v) const {
    require_member(carrier_, v);
    std::vector<CosetVector> coords(v.coords().begin(), v.coords().end() - 1);
    return {GammaVector(base_, std::move(coords)), v.coords().back()};
}

bool ExtendedGroup::contains(const ExtElement& e) const {
    require_member(base_, e.x);
    if (!e.t.is_positive()) return false;
    return cone_contains(base_, e.x + act(e.t.lift(), unit_));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) { return {a.x + b.x, a.t + b.t}; }
ExtElement operator-(const ExtElement& a, const ExtElement& b) { return {a.x - b.x, a.t - b.t}; }
ExtElement act(const GroupRingElt& a, const ExtElement& e) { return {act(a, e.x), act(a, e.t)}; }

GroupRingElt ext_dominating_multiplier(const ExtendedGroup& h, const ExtElement& e) {
    GroupRingElt a = e.t.lift();
    GroupRingElt sum = a + dominating_multiplier(h.base(), h.unit(), e.x);
    GroupRingElt c(a.group());
    for (const auto& [g, k] : sum.coeffs())
        if (k > 0) c.add_term(g, k);
    return c;
}

ProbeReport ext_order_unit_check(const ExtendedGroup& h, const std::vector<ExtElement>& probes) {
    ProbeReport r;
    for (const auto& e : probes) {
        ++r.probes;
        GroupRingElt c = ext_dominating_multiplier(h, e);
        if (c.is_positive() && h.contains(act(c, h.order_unit()) - e)) ++r.dominated;
    }
    return r;
}

IntervalReport ext_interval_preimage(const ExtendedGroup& h) {
    const auto& g = h.base();
    GammaVector lo(g), hi = h.unit();
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t c = 0; c < g.index(); ++c) {
            lo[i][c] = -1;
            hi[i][c] += 1;
        }
    IntervalReport r;
    const ExtElement top = h.order_unit();
    r.box_size = for_each_in_box(lo, hi, [&](const GammaVector& x) {
        const bool in_interval = cone_contains(g, x) && leq(x, h.unit());
        const ExtElement e = h.iota(x);
        const bool in_preimage = h.contains(e) && h.contains(top - e);
        r.interval_size += in_interval;
        r.preimage_size += in_preimage;
        r.mismatches += in_interval != in_preimage;
    });
    return r;
}

SdpWitness ext_sdp_witness(const ExtendedGroup& h, const std::vector<GroupRingElt>& a, const std::vector<ExtElement>& xs) {
    if (a.size() != xs.size()) fail(Errc::ShapeMismatch, "relation shape");
    const auto& g = h.base();
    ExtElement total = h.zero();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!h.contains(xs[i])) fail(Errc::NotInCone, xs[i].str());
        total = total + act(a[i], xs[i]);
    }
    if (!(total == h.zero())) fail(Errc::RelationNotZero, "Σ a_i X_i = " + total.str());

    // With d = u shared by every X_i, the columns (-d, Δ) coincide and are merged into one.
    const std::size_t m = g.rank();
    SdpWitness w;
    w.m = m + 1;
    for (std::size_t j = 0; j < m; ++j) w.y.push_back(h.to_carrier(h.iota(GammaVector::basis(g, j))));
    w.y.push_back(h.to_carrier(h.make(-h.unit(), CosetVector::indicator(g.space(), 0))));
    for (const auto& xi : xs) {
        GroupRingElt bi = xi.t.lift();
        GammaVector shifted = xi.x + act(bi, h.unit());
        std::vector<GroupRingElt> row;
        for (std::size_t j = 0; j < m; ++j) row.push_back(shifted[j].lift());
        row.push_back(bi);
        w.b.push_back(std::move(row));
    }
    return w;
}

Verdict verify_ext_sdp_witness(const ExtendedGroup& h, const std::vector<GroupRingElt>& a,
                               const std::vector<ExtElement>& xs, const SdpWitness& w) {
    std::vector<GammaVector> flat;
    for (const auto& x : xs) flat.push_back(h.to_carrier(x));
    return verify_sdp_witness(h.carrier(), a, flat, w, [&](const GammaVector& v) { return h.contains(v); });
}

SdpWitness ExtendedGroup::witness(const std::vector<GroupRingElt>& a, const std::vector<GammaVector>& x) const {
    std::vector<ExtElement> xs;
    for (const auto& v : x) xs.push_back(from_carrier(v));
    return ext_sdp_witness(*this, a, xs);
}

ExtendedTower extend_tower(const Tower& t) {
    if (!t.space()->is_normal()) fail(Errc::DeltaNotNormal, "extensions need a normal subgroup");
    if (!t.has_units()) fail(Errc::NotOrderUnit, "tower extension needs unit or interval mode");
    ExtendedTower out;
    for (std::size_t k = 0; k < t.explicit_levels(); ++k) out.levels.emplace_back(t.group(k), t.unit(k));
    for (std::size_t k = 0; k + 1 < t.explicit_levels(); ++k) {
        const auto& from = out.levels[k];
        const auto& to = out.levels[k + 1];
        const auto& g = t.map(k);
        std::vector<GammaVector> cols;
        for (std::size_t i = 0; i < g.source().rank(); ++i) cols.push_back(to.to_carrier(to.iota(g.column(i))));
        cols.push_back(to.to_carrier(to.order_unit()));
        GammaLinearMap h(from.carrier(), to.carrier(), std::move(cols));

        const std::string where = " at level " + std::to_string(k);
        for (std::size_t i = 0; i < g.source().rank(); ++i) {
            const auto e = GammaVector::basis(g.source(), i);
            const ExtElement img = to.from_carrier(map_apply(h, from.to_carrier(from.iota(e))));
            if (!(img == to.iota(map_apply(g, e)))) fail(Errc::InternalVerificationFailed, "h∘ι differs from ι∘g" + where);
            if (!img.t.is_zero()) fail(Errc::InternalVerificationFailed, "p∘h differs from p" + where);
        }
        const ExtElement top = to.from_carrier(map_apply(h, from.to_carrier(from.order_unit())));
        if (!(top == to.order_unit())) fail(Errc::InternalVerificationFailed, "order-unit not preserved" + where);
        // H^+ is generated by (e_i, 0) and (-u, Δ) under Γ; their images must stay positive.
        const ExtElement corner = from.make(-from.unit(), CosetVector::indicator(from.base().space(), 0));
        if (!to.contains(map_apply(h, from.to_carrier(corner))))
            fail(Errc::UnitNotPreserved, "g(u) exceeds the next unit" + where);
        out.maps.push_back(std::move(h));
    }
    return out;
}

} // namespace gk0
