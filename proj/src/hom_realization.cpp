#include "gk0/hom_realization.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "gk0/error.hpp"

namespace gk0 {

Realization realize_simplicial(const SimplicialGroup& g, const GammaVector& u, const std::vector<GroupRingElt>& a) {
    require_member(g, u);
    if (!cone_contains(g, u)) fail(Errc::NotInCone, "unit " + u.str());
    if (a.size() != g.rank()) fail(Errc::ShapeMismatch, "one coefficient per basis element is required");
    const auto& cs = *g.space();
    const auto& grp = *g.group();
    std::vector<MatrixComponent> comps;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        require_same_group(a[i].group(), g.group());
        if (!a[i].is_positive()) fail(Errc::NotPositive, "coefficient " + a[i].str());
        if (!(project_pi(a[i], g.space()) == u[i]))
            fail(Errc::ClassMismatch, "coefficient " + a[i].str() + " does not represent " + u[i].str());
        // Support grouped by left coset, in order of first appearance.
        std::vector<std::pair<Elt, Integer>> groups;
        std::map<std::size_t, std::size_t> slot_of_coset;
        for (const auto& [e, k] : a[i].coeffs()) {
            auto [it, fresh] = slot_of_coset.try_emplace(cs.coset_of(e), groups.size());
            if (fresh) groups.emplace_back(e, 0);
            groups[it->second].second += k;
        }
        MatrixComponent comp;
        for (const auto& [e, r] : groups)
            for (Integer m = 0; m < r; ++m) comp.shifts.push_back(grp.inv(e));
        if (comp.shifts.empty()) fail(Errc::NotOrderUnit, "coordinate " + std::to_string(i) + " of the unit is zero");
        comps.push_back(std::move(comp));
    }
    MatricialRingDesc ring(g.space(), std::move(comps));
    K0Data k0 = k0_of_matricial(ring);
    GammaLinearMap iso(k0.group, g, k0.basis_classes);
    if (!(map_apply(iso, k0.unit_class) == u))
        fail(Errc::InternalVerificationFailed, "realized unit class " + k0.unit_class.str() + " differs from " + u.str());
    return {std::move(ring), std::move(iso)};
}

Realization realize_simplicial(const SimplicialGroup& g, const GammaVector& u) {
    require_member(g, u);
    std::vector<GroupRingElt> a;
    for (const auto& c : u.coords()) a.push_back(c.lift());
    return realize_simplicial(g, u, a);
}

namespace {

void require_k0_shapes(const MatricialRingDesc& r, const MatricialRingDesc& s, const GammaLinearMap& b) {
    if (!(b.source() == SimplicialGroup(r.space(), r.count())) || !(b.target() == SimplicialGroup(s.space(), s.count())))
        fail(Errc::ShapeMismatch, "matrix does not map K0 of the source ring to K0 of the target ring");
}

Elt shift_inverse(const MatricialRingDesc& r, std::size_t comp, std::size_t slot) {
    return r.group()->inv(r.components()[comp].shifts[slot]);
}

std::size_t slot_coset(const MatricialRingDesc& r, std::size_t comp, std::size_t slot) {
    return r.space()->coset_of(shift_inverse(r, comp, slot));
}

} // namespace

HomSpec hom_realizable(const MatricialRingDesc& r, const MatricialRingDesc& s, const GammaLinearMap& b, bool unital) {
    require_same_group(r.group(), s.group());
    if (!same_space(r.space(), s.space())) fail(Errc::DeltaMismatch, "rings over different F[Δ]");
    require_k0_shapes(r, s, b);
    if (!is_positive_map(b)) fail(Errc::NotPositiveMap, "K0 matrix is not positive");
    const K0Data kr = k0_of_matricial(r), ks = k0_of_matricial(s);
    const GammaVector img = map_apply(b, kr.unit_class);
    if (!leq(img, ks.unit_class))
        fail(Errc::NotRealizable, "image of the unit class " + img.str() + " exceeds " + ks.unit_class.str());
    if (unital && !(img == ks.unit_class))
        fail(Errc::UnitMismatch, "image of the unit class " + img.str() + " differs from " + ks.unit_class.str());

    const auto& cs = *r.space();
    // Free target positions per (component, coset), lowest slot first.
    std::vector<std::vector<std::deque<std::size_t>>> free(s.count(), std::vector<std::deque<std::size_t>>(cs.size()));
    for (std::size_t j = 0; j < s.count(); ++j)
        for (std::size_t k = 0; k < s.components()[j].size(); ++k) free[j][slot_coset(s, j, k)].push_back(k);

    HomSpec h{r, s, b, unital, {}};
    for (std::size_t i = 0; i < r.count(); ++i) {
        for (std::size_t j = 0; j < s.count(); ++j) {
            const CosetVector& copies = b.column(i)[j];
            std::size_t copy = 0;
            for (std::size_t c = 0; c < cs.size(); ++c)
                for (Integer m = 0; m < copies[c]; ++m, ++copy)
                    for (std::size_t k = 0; k < r.components()[i].size(); ++k) {
                        auto& q = free[j][cs.act(shift_inverse(r, i, k), c)];
                        if (q.empty()) fail(Errc::NotRealizable, "no free diagonal position");
                        h.certificate.push_back({i, copy, k, j, q.front()});
                        q.pop_front();
                    }
        }
    }
    return h;
}

Verdict verify_hom_spec(const HomSpec& h) {
    const auto& r = h.source;
    const auto& s = h.target;
    try {
        require_k0_shapes(r, s, h.matrix);
    } catch (const Error& e) {
        return Verdict::reject(e.what());
    }
    if (!is_positive_map(h.matrix)) return Verdict::reject("matrix not positive");
    std::map<std::pair<std::size_t, std::size_t>, bool> used;
    // landed[(i, k, j)] = coset multiset reached from source slot (i, k) inside target component j.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, CosetVector> landed;
    for (const auto& e : h.certificate) {
        if (e.source_component >= r.count() || e.source_slot >= r.components()[e.source_component].size() ||
            e.target_component >= s.count() || e.target_slot >= s.components()[e.target_component].size())
            return Verdict::reject("certificate index out of range");
        if (!used.emplace(std::make_pair(e.target_component, e.target_slot), true).second)
            return Verdict::reject("target position used twice");
        auto key = std::make_tuple(e.source_component, e.source_slot, e.target_component);
        auto it = landed.try_emplace(key, CosetVector(r.space())).first;
        it->second[slot_coset(s, e.target_component, e.target_slot)] += 1;
    }
    for (std::size_t i = 0; i < r.count(); ++i)
        for (std::size_t k = 0; k < r.components()[i].size(); ++k)
            for (std::size_t j = 0; j < s.count(); ++j) {
                CosetVector want = act(shift_inverse(r, i, k), h.matrix.column(i)[j]);
                auto it = landed.find(std::make_tuple(i, k, j));
                CosetVector got = it == landed.end() ? CosetVector(r.space()) : it->second;
                if (!(got == want))
                    return Verdict::reject("slot " + std::to_string(k) + " of component " + std::to_string(i) +
                                           " lands on " + got.str() + " in component " + std::to_string(j) +
                                           ", expected " + want.str());
            }
    if (h.unital) {
        std::size_t total = 0;
        for (const auto& c : s.components()) total += c.size();
        if (used.size() != total) return Verdict::reject("unital spec leaves target positions uncovered");
    }
    return Verdict::pass();
}

HomSpec identity_spec(const MatricialRingDesc& r) {
    HomSpec h{r, r, GammaLinearMap::identity(SimplicialGroup(r.space(), r.count())), true, {}};
    for (std::size_t i = 0; i < r.count(); ++i)
        for (std::size_t k = 0; k < r.components()[i].size(); ++k) h.certificate.push_back({i, 0, k, i, k});
    return h;
}

HomSpec hom_compose(const HomSpec& h2, const HomSpec& h1) {
    if (!(h1.target == h2.source)) fail(Errc::ShapeMismatch, "specs do not compose");
    HomSpec out{h1.source, h2.target, map_compose(h2.matrix, h1.matrix), h1.unital && h2.unital, {}};

    std::map<std::pair<std::size_t, std::size_t>, std::vector<const SlotAssignment*>> from_slot;
    for (const auto& e : h2.certificate) from_slot[{e.source_component, e.source_slot}].push_back(&e);

    // Composite copies are the triples (middle component, copy in h1, copy in h2), numbered per (i, l).
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> copy_id;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> next_copy;
    for (const auto& e1 : h1.certificate) {
        auto it = from_slot.find({e1.target_component, e1.target_slot});
        if (it == from_slot.end()) continue;
        for (const SlotAssignment* e2 : it->second) {
            const std::size_t i = e1.source_component, l = e2->target_component;
            auto key = std::make_tuple(i, l, e1.target_component, e1.copy, e2->copy);
            auto [cid, fresh] = copy_id.try_emplace(key, next_copy[{i, l}]);
            if (fresh) ++next_copy[{i, l}];
            out.certificate.push_back({i, cid->second, e1.source_slot, l, e2->target_slot});
        }
    }
    return out;
}

RingTower realize_tower(const Tower& t) {
    if (!t.has_units()) fail(Errc::NotOrderUnit, "tower realization needs unit or interval mode");
    RingTower out;
    for (std::size_t n = 0; n < t.explicit_levels(); ++n) {
        Realization real = realize_simplicial(t.group(n), t.unit(n));
        out.rings.push_back(std::move(real.ring));
        out.isos.push_back(std::move(real.iso));
    }
    for (std::size_t n = 0; n + 1 < t.explicit_levels(); ++n) {
        const auto& g = t.map(n);
        const auto k0s = SimplicialGroup(out.rings[n].space(), out.rings[n].count());
        const auto k0t = SimplicialGroup(out.rings[n + 1].space(), out.rings[n + 1].count());
        // The realization isomorphisms are identities on coordinates, so f_{n+1}^{-1} g f_n has g's columns.
        GammaLinearMap b(k0s, k0t, g.columns());
        HomSpec h = hom_realizable(out.rings[n], out.rings[n + 1], b, t.mode() == UnitMode::Unit);
        if (!(map_compose(out.isos[n + 1], h.matrix) == map_compose(g, out.isos[n])))
            fail(Errc::InternalVerificationFailed, "K0 square fails to commute at level " + std::to_string(n));
        out.maps.push_back(std::move(h));
    }
    return out;
}

} // namespace gk0
