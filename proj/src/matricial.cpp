#include "gk0/matricial.hpp"

#include <algorithm>

#include "gk0/error.hpp"

namespace gk0 {

MatricialRingDesc::MatricialRingDesc(SpacePtr space, std::vector<MatrixComponent> components)
    : space_(std::move(space)), components_(std::move(components)) {
    for (const auto& c : components_) {
        if (c.shifts.empty()) fail(Errc::ShapeMismatch, "matrix component of size 0");
        for (Elt g : c.shifts)
            if (g >= group()->order()) fail(Errc::IndexOutOfRange, "shift " + std::to_string(g));
    }
}

std::string MatricialRingDesc::str() const {
    if (components_.empty()) return "0";
    const std::string field = space_->sub().size() == 1 ? "F" : "F[Δ]";
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += " ⊕ ";
        out += "M_" + std::to_string(components_[i].size()) + "(" + field + ")(";
        for (std::size_t k = 0; k < components_[i].size(); ++k)
            out += (k ? "," : "") + group()->name(components_[i].shifts[k]);
        out += ")";
    }
    return out;
}

std::size_t homog_dim(const MatricialRingDesc& r, Elt delta) {
    const auto& g = *r.group();
    const auto& sub = r.space()->sub();
    std::size_t n = 0;
    for (const auto& c : r.components())
        for (Elt gk : c.shifts)
            for (Elt gl : c.shifts)
                if (sub.contains(g.mul(g.mul(gk, delta), g.inv(gl)))) ++n;
    return n;
}

GammaVector diagonal_class(const MatricialRingDesc& r, std::size_t component, std::size_t slot) {
    SimplicialGroup grp(r.space(), r.count());
    if (component >= r.count() || slot >= r.components()[component].size())
        fail(Errc::IndexOutOfRange, "diagonal position");
    GammaVector v(grp);
    Elt shift = r.components()[component].shifts[slot];
    v[component] = CosetVector::indicator(r.space(), r.space()->coset_of(r.group()->inv(shift)));
    return v;
}

K0Data k0_of_matricial(const MatricialRingDesc& r) {
    SimplicialGroup grp(r.space(), r.count());
    GammaVector unit(grp);
    std::vector<GammaVector> basis;
    for (std::size_t i = 0; i < r.count(); ++i) {
        for (std::size_t k = 0; k < r.components()[i].size(); ++k) unit += diagonal_class(r, i, k);
        basis.push_back(GammaVector::basis(grp, i));
    }
    return {grp, unit, basis};
}

namespace {

// Sorted left cosets (n γ_k)^{-1}Δ, the inverses of the right cosets Δ n γ_k.
std::vector<std::size_t> twisted_key(const CosetSpace& cs, const MatrixComponent& c, Elt n) {
    const auto& g = *cs.group();
    std::vector<std::size_t> key;
    for (Elt s : c.shifts) key.push_back(cs.coset_of(g.inv(g.mul(n, s))));
    std::sort(key.begin(), key.end());
    return key;
}

std::vector<std::vector<std::size_t>> ring_key(const MatricialRingDesc& r, const std::vector<Elt>& twists) {
    std::vector<std::vector<std::size_t>> keys;
    for (const auto& c : r.components()) {
        std::vector<std::size_t> best;
        for (Elt n : twists) {
            auto k = twisted_key(*r.space(), c, n);
            if (best.empty() || k < best) best = std::move(k);
        }
        keys.push_back(std::move(best));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

void require_comparable(const MatricialRingDesc& r, const MatricialRingDesc& s) {
    require_same_group(r.group(), s.group());
    if (!same_space(r.space(), s.space())) fail(Errc::DeltaMismatch, "rings over different F[Δ]");
}

} // namespace

bool graded_iso(const MatricialRingDesc& r, const MatricialRingDesc& s) {
    require_comparable(r, s);
    const auto twists = normalizer(r.space()->sub()).members();
    return ring_key(r, twists) == ring_key(s, twists);
}

bool same_unit_class(const MatricialRingDesc& r, const MatricialRingDesc& s) {
    require_comparable(r, s);
    const std::vector<Elt> one{r.group()->identity()};
    return ring_key(r, one) == ring_key(s, one);
}

MatricialRingDesc corner_ring(const MatricialRingDesc& r, const GammaVector& cls) {
    SimplicialGroup grp(r.space(), r.count());
    if (!cone_contains(grp, cls)) fail(Errc::NotInCone, "projective class " + cls.str());
    const auto& cs = *r.space();
    std::vector<MatrixComponent> comps;
    for (std::size_t i = 0; i < cls.rank(); ++i) {
        MatrixComponent c;
        for (std::size_t k = 0; k < cs.size(); ++k)
            for (Integer m = 0; m < cls[i][k]; ++m) c.shifts.push_back(r.group()->inv(cs.rep(k)));
        if (!c.shifts.empty()) comps.push_back(std::move(c));
    }
    return MatricialRingDesc(r.space(), std::move(comps));
}

} // namespace gk0
