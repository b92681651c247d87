#include "gk0/sdp.hpp"

#include "gk0/error.hpp"

namespace gk0 {

GammaVector combine(const SimplicialGroup& g, const std::vector<GroupRingElt>& a, const std::vector<GammaVector>& x) {
    if (a.size() != x.size()) fail(Errc::ShapeMismatch, "relation has " + std::to_string(a.size()) +
                                                            " coefficients and " + std::to_string(x.size()) + " elements");
    GammaVector s(g);
    for (std::size_t i = 0; i < a.size(); ++i) {
        require_member(g, x[i]);
        require_same_group(a[i].group(), g.group());
        s += act(a[i], x[i]);
    }
    return s;
}

SdpWitness sdp_witness(const SimplicialGroup& g, const std::vector<GroupRingElt>& a,
                       const std::vector<GammaVector>& x) {
    GammaVector total = combine(g, a, x);
    for (const auto& xi : x)
        if (!cone_contains(g, xi)) fail(Errc::NotInCone, xi.str());
    if (!total.is_zero()) fail(Errc::RelationNotZero, "Σ a_i x_i = " + total.str());

    SdpWitness w;
    if (g.rank() == 0) {
        w.m = 1;
        w.y.emplace_back(g);
        w.b.assign(x.size(), {GroupRingElt(g.group())});
        return w;
    }
    w.m = g.rank();
    for (std::size_t j = 0; j < g.rank(); ++j) w.y.push_back(GammaVector::basis(g, j));
    for (const auto& xi : x) {
        std::vector<GroupRingElt> row;
        for (std::size_t j = 0; j < g.rank(); ++j) row.push_back(xi[j].lift());
        w.b.push_back(std::move(row));
    }
    return w;
}

Verdict verify_sdp_witness(const SimplicialGroup& g, const std::vector<GroupRingElt>& a,
                           const std::vector<GammaVector>& x, const SdpWitness& w,
                           const std::function<bool(const GammaVector&)>& in_cone) {
    const std::size_t n = x.size();
    if (a.size() != n) return Verdict::reject("relation shape");
    if (w.m == 0 || w.y.size() != w.m || w.b.size() != n) return Verdict::reject("witness shape");
    for (const auto& y : w.y) {
        if (!(y.group() == g)) return Verdict::reject("y outside the group");
        if (!in_cone(y)) return Verdict::reject("y " + y.str() + " not in cone");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (w.b[i].size() != w.m) return Verdict::reject("witness row shape");
        GammaVector s(g);
        for (std::size_t j = 0; j < w.m; ++j) {
            if (!w.b[i][j].is_positive()) return Verdict::reject("b coefficient " + w.b[i][j].str() + " not positive");
            s += act(w.b[i][j], w.y[j]);
        }
        if (!(s == x[i])) return Verdict::reject("x_" + std::to_string(i) + " differs from Σ_j b_ij y_j");
    }
    for (std::size_t j = 0; j < w.m; ++j) {
        CosetVector s(g.space());
        for (std::size_t i = 0; i < n; ++i) s += project_pi(a[i] * w.b[i][j], g.space());
        if (!s.is_zero()) return Verdict::reject("Σ_i π(a_i b_i" + std::to_string(j) + ") = " + s.str());
    }
    return Verdict::pass();
}

Verdict verify_sdp_witness(const SimplicialGroup& g, const std::vector<GroupRingElt>& a,
                           const std::vector<GammaVector>& x, const SdpWitness& w) {
    return verify_sdp_witness(g, a, x, w, [&](const GammaVector& v) { return cone_contains(g, v); });
}

UnperfWitness unperforation_witness(const SimplicialGroup& g, const GroupRingElt& a, const GammaVector& x) {
    require_member(g, x);
    if (!a.is_positive()) fail(Errc::NotPositive, "multiplier " + a.str());
    GammaVector ax = act(a, x);
    if (!cone_contains(g, ax)) fail(Errc::ProductNotInCone, "a·x = " + ax.str());

    UnperfWitness u;
    if (cone_contains(g, x)) {
        u.m = 1;
        u.b.push_back(GroupRingElt::unit(g.group(), g.group()->identity()));
        u.y.push_back(x);
        return u;
    }
    GammaVector xp = positive_part(x), xm = negative_part(x);
    SdpWitness w = sdp_witness(g, {a, -a, -GroupRingElt::unit(g.group(), g.group()->identity())}, {xp, xm, ax});
    u.m = w.m;
    u.y = w.y;
    for (std::size_t j = 0; j < w.m; ++j) u.b.push_back(w.b[0][j] - w.b[1][j]);
    return u;
}

Verdict verify_unperf_witness(const SimplicialGroup& g, const GroupRingElt& a, const GammaVector& x,
                              const UnperfWitness& w) {
    if (w.m == 0 || w.b.size() != w.m || w.y.size() != w.m) return Verdict::reject("witness shape");
    GammaVector s(g);
    for (std::size_t j = 0; j < w.m; ++j) {
        if (!(w.y[j].group() == g) || !cone_contains(g, w.y[j])) return Verdict::reject("y not in cone");
        CosetVector p = project_pi(a * w.b[j], g.space());
        if (!p.is_positive()) return Verdict::reject("π(a b_" + std::to_string(j) + ") = " + p.str());
        s += act(w.b[j], w.y[j]);
    }
    if (!(s == x)) return Verdict::reject("x differs from Σ b_j y_j");
    return Verdict::pass();
}

namespace {

// Odometer over integer vectors in [lo, hi]^n; returns false after the last one.
bool advance(std::vector<Integer>& v, const Integer& lo, const Integer& hi) {
    for (auto& e : v) {
        if (e < hi) {
            ++e;
            return true;
        }
        e = lo;
    }
    return false;
}

} // namespace

std::optional<UnperfWitness> search_single_term_witness(const SimplicialGroup& g, const GroupRingElt& a,
                                                        const GammaVector& x, std::optional<Integer> bound) {
    require_member(g, x);
    const Integer lim = bound ? *bound : std::max(a.max_abs(), x.max_abs()) + 2;
    const std::size_t order = g.group()->order(), k = g.index();
    std::vector<Integer> bc(order, Integer(-lim));
    do {
        GroupRingElt b(g.group());
        for (Elt e = 0; e < order; ++e) b.add_term(e, bc[e]);
        if (!project_pi(a * b, g.space()).is_positive()) continue;
        GammaVector y(g);
        bool found = true;
        for (std::size_t i = 0; i < g.rank() && found; ++i) {
            std::vector<Integer> yc(k, Integer(0));
            found = false;
            do {
                CosetVector cand(g.space(), yc);
                if (act(b, cand) == x[i]) {
                    y[i] = cand;
                    found = true;
                    break;
                }
            } while (advance(yc, 0, lim));
        }
        if (found) return UnperfWitness{1, {b}, {y}};
    } while (advance(bc, -lim, lim));
    return std::nullopt;
}

} // namespace gk0
