#include "gk0/simplicial.hpp"

#include "gk0/error.hpp"

namespace gk0 {

GammaVector::GammaVector(SimplicialGroup g) : group_(std::move(g)) {
    coords_.assign(group_.rank(), CosetVector(group_.space()));
}

GammaVector::GammaVector(SimplicialGroup g, std::vector<CosetVector> coords)
    : group_(std::move(g)), coords_(std::move(coords)) {
    if (coords_.size() != group_.rank())
        fail(Errc::ShapeMismatch, "vector has " + std::to_string(coords_.size()) + " coordinates, group rank is " +
                                      std::to_string(group_.rank()));
    for (const auto& c : coords_) require_same_space(c.space(), group_.space());
}

GammaVector GammaVector::basis(const SimplicialGroup& g, std::size_t i) {
    if (i >= g.rank()) fail(Errc::IndexOutOfRange, "basis index " + std::to_string(i));
    GammaVector v(g);
    v.coords_[i] = CosetVector::indicator(g.space(), 0);
    return v;
}

bool GammaVector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Integer GammaVector::max_abs() const {
    Integer m = 0;
    for (const auto& c : coords_) m = std::max(m, c.max_abs());
    return m;
}

GammaVector GammaVector::operator-() const {
    GammaVector out(group_);
    for (std::size_t i = 0; i < rank(); ++i) out.coords_[i] = -coords_[i];
    return out;
}

GammaVector& GammaVector::operator+=(const GammaVector& o) {
    if (!(group_ == o.group_)) fail(Errc::ShapeMismatch, "adding vectors of different groups");
    for (std::size_t i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

GammaVector& GammaVector::operator-=(const GammaVector& o) {
    if (!(group_ == o.group_)) fail(Errc::ShapeMismatch, "subtracting vectors of different groups");
    for (std::size_t i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

bool GammaVector::operator==(const GammaVector& o) const { return group_ == o.group_ && coords_ == o.coords_; }

IntRow GammaVector::flatten() const {
    IntRow out;
    out.reserve(group_.flat_dim());
    for (const auto& c : coords_) out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    return out;
}

GammaVector GammaVector::unflatten(const SimplicialGroup& g, const IntRow& flat) {
    if (flat.size() != g.flat_dim()) fail(Errc::ShapeMismatch, "flat vector length");
    GammaVector v(g);
    const std::size_t k = g.index();
    for (std::size_t i = 0; i < g.rank(); ++i)
        v.coords_[i] = CosetVector(g.space(), IntRow(flat.begin() + i * k, flat.begin() + (i + 1) * k));
    return v;
}

std::string GammaVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < rank(); ++i) out += (i ? ", " : "") + coords_[i].str();
    return out + ")";
}

GammaVector operator+(GammaVector a, const GammaVector& b) { return a += b; }
GammaVector operator-(GammaVector a, const GammaVector& b) { return a -= b; }

GammaVector operator*(const Integer& k, GammaVector v) {
    for (std::size_t i = 0; i < v.rank(); ++i) v[i] = k * v[i];
    return v;
}

GammaVector act(const GroupRingElt& a, const GammaVector& v) {
    GammaVector out(v.group());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = act(a, v[i]);
    return out;
}

GammaVector act(Elt g, const GammaVector& v) {
    GammaVector out(v.group());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = act(g, v[i]);
    return out;
}

void require_member(const SimplicialGroup& g, const GammaVector& v) {
    if (!(v.group() == g)) {
        require_same_group(g.group(), v.group().group());
        fail(Errc::ShapeMismatch, "vector does not belong to this simplicial group");
    }
}

bool cone_contains(const SimplicialGroup& g, const GammaVector& v) {
    require_member(g, v);
    for (const auto& c : v.coords())
        if (!c.is_positive()) return false;
    return true;
}

bool leq(const GammaVector& a, const GammaVector& b) { return cone_contains(b.group(), b - a); }

GammaVector positive_part(const GammaVector& v) {
    GammaVector out(v.group());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = positive_part(v[i]);
    return out;
}

GammaVector negative_part(const GammaVector& v) {
    GammaVector out(v.group());
    for (std::size_t i = 0; i < v.rank(); ++i) out[i] = negative_part(v[i]);
    return out;
}

bool is_order_unit(const SimplicialGroup& g, const GammaVector& u) {
    if (!cone_contains(g, u)) fail(Errc::NotInCone, "order-unit candidate " + u.str() + " is not positive");
    for (const auto& c : u.coords())
        if (c.is_zero()) return false;
    return true;
}

GroupRingElt dominating_multiplier(const SimplicialGroup& g, const GammaVector& u, const GammaVector& v) {
    if (!is_order_unit(g, u)) fail(Errc::NotOrderUnit, u.str());
    require_member(g, v);
    const auto& cs = *g.space();
    const auto& grp = *g.group();
    GroupRingElt a(g.group());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::size_t anchor = 0;
        while (u[i][anchor] == 0) ++anchor;
        const Elt back = grp.inv(cs.rep(anchor));
        for (std::size_t c = 0; c < cs.size(); ++c)
            if (v[i][c] > 0) a.add_term(grp.mul(cs.rep(c), back), v[i][c]);
    }
    return a;
}

GammaVector interpolate(const SimplicialGroup& g, const std::vector<GammaVector>& xs,
                        const std::vector<GammaVector>& ys) {
    for (const auto& x : xs) require_member(g, x);
    for (const auto& y : ys) require_member(g, y);
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (!leq(x, y)) fail(Errc::PreorderViolated, x.str() + " is not below " + y.str());
    GammaVector z(g);
    if (xs.empty() && ys.empty()) return z;
    const auto& seed = xs.empty() ? ys : xs;
    z = seed.front();
    for (const auto& w : seed)
        for (std::size_t i = 0; i < g.rank(); ++i) z[i] = xs.empty() ? cmin(z[i], w[i]) : cmax(z[i], w[i]);
    return z;
}

Refinement riesz_refine(const SimplicialGroup& g, const GammaVector& x1, const GammaVector& x2,
                        const GammaVector& y1, const GammaVector& y2) {
    for (const auto* v : {&x1, &x2, &y1, &y2})
        if (!cone_contains(g, *v)) fail(Errc::NotInCone, v->str());
    if (!(x1 + x2 == y1 + y2)) fail(Errc::SumMismatch, "x1 + x2 differs from y1 + y2");
    GammaVector z11(g);
    for (std::size_t i = 0; i < g.rank(); ++i) z11[i] = cmin(x1[i], y1[i]);
    GammaVector z12 = x1 - z11;
    GammaVector z21 = y1 - z11;
    GammaVector z22 = x2 - z21;
    return {{{z11, z12}, {z21, z22}}};
}

GammaVector IdealSplit::embed(const GammaVector& v, const SimplicialGroup& ambient) const {
    require_member(ideal, v);
    GammaVector out(ambient);
    for (std::size_t k = 0; k < ideal_coords.size(); ++k) out[ideal_coords[k]] = v[k];
    return out;
}

GammaVector IdealSplit::project(const GammaVector& v) const {
    GammaVector out(quotient);
    for (std::size_t k = 0; k < quotient_coords.size(); ++k) out[k] = v[quotient_coords[k]];
    return out;
}

IdealSplit ideal_from_subset(const SimplicialGroup& g, const std::vector<std::size_t>& subset) {
    std::vector<bool> in(g.rank(), false);
    for (std::size_t i : subset) {
        if (i >= g.rank()) fail(Errc::IndexOutOfRange, "basis index " + std::to_string(i));
        in[i] = true;
    }
    std::vector<std::size_t> ideal_coords, quotient_coords;
    for (std::size_t i = 0; i < g.rank(); ++i) (in[i] ? ideal_coords : quotient_coords).push_back(i);
    return IdealSplit{SimplicialGroup(g.space(), ideal_coords.size()), ideal_coords,
                      SimplicialGroup(g.space(), quotient_coords.size()), quotient_coords};
}

IntMatrix submodule_lattice(const SimplicialGroup& g, const std::vector<GammaVector>& gens) {
    IntMatrix rows;
    for (const auto& v : gens) {
        require_member(g, v);
        for (Elt x = 0; x < g.group()->order(); ++x) rows.push_back(act(x, v).flatten());
    }
    return hermite_normal_form(std::move(rows), g.flat_dim());
}

bool is_gamma_ideal(const SimplicialGroup& g, const std::vector<GammaVector>& gens) {
    IntMatrix lattice = submodule_lattice(g, gens);
    std::vector<GammaVector> inside;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        GammaVector e = GammaVector::basis(g, i);
        if (lattice_contains(lattice, e.flatten())) inside.push_back(e);
    }
    return submodule_lattice(g, inside) == lattice;
}

Subgroup group_stabilizer(const SimplicialGroup& g) {
    if (g.rank() == 0) return whole_group(g.group());
    const auto& cs = *g.space();
    std::vector<Elt> fix;
    for (Elt x = 0; x < g.group()->order(); ++x) {
        bool ok = true;
        for (std::size_t c = 0; c < cs.size() && ok; ++c) ok = cs.act(x, c) == c;
        if (ok) fix.push_back(x);
    }
    return Subgroup(g.group(), std::move(fix));
}

std::size_t for_each_in_box(const GammaVector& lo, const GammaVector& hi,
                            const std::function<void(const GammaVector&)>& f) {
    if (!leq(lo, hi)) return 0;
    const SimplicialGroup& g = lo.group();
    IntRow low = lo.flatten(), high = hi.flatten(), cur = low;
    std::size_t count = 0;
    for (;;) {
        f(GammaVector::unflatten(g, cur));
        ++count;
        std::size_t k = 0;
        while (k < cur.size() && cur[k] == high[k]) {
            cur[k] = low[k];
            ++k;
        }
        if (k == cur.size()) return count;
        ++cur[k];
    }
}

} // namespace gk0
