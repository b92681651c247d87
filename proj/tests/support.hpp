#pragma once

// Hand-rolled generators shared by the unit tests and the acceptance harness.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gk0/error.hpp"
#include "gk0/extension.hpp"
#include "gk0/hom_realization.hpp"
#include "gk0/limits.hpp"
#include "gk0/matricial.hpp"

namespace gk0::testing {

/// The code of the Error thrown by f, or nullopt when it returns normally.
template <class F> std::optional<Errc> error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
    template <class T> const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

struct NamedGroup {
    std::string name;
    GroupPtr group;
};

/// Every group of order at most 8, up to isomorphism.
inline std::vector<NamedGroup> small_groups() {
    return {
        {"1", cyclic_group(1)},
        {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},
        {"Z4", cyclic_group(4)},
        {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
        {"Z5", cyclic_group(5)},
        {"Z6", cyclic_group(6)},
        {"D3", dihedral_group(3)},
        {"Z7", cyclic_group(7)},
        {"Z8", cyclic_group(8)},
        {"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))},
        {"Z2xZ2xZ2", direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))},
        {"D4", dihedral_group(4)},
        {"Q8", quaternion_group()},
    };
}

inline const std::vector<NamedGroup>& group_catalog() {
    static const std::vector<NamedGroup> groups = small_groups();
    return groups;
}

inline GroupPtr random_group(Rng& rng) { return group_catalog()[rng.below(group_catalog().size())].group; }

inline SpacePtr random_space(Rng& rng, const GroupPtr& g) { return coset_space(rng.pick(all_subgroups(g))); }

inline SpacePtr random_normal_space(Rng& rng, const GroupPtr& g) {
    std::vector<Subgroup> normal;
    for (const auto& s : all_subgroups(g))
        if (is_normal(s)) normal.push_back(s);
    return coset_space(rng.pick(normal));
}

inline GroupRingElt random_element(Rng& rng, const GroupPtr& g, long lo, long hi, double density = 0.5) {
    GroupRingElt a(g);
    for (Elt e = 0; e < g->order(); ++e)
        if (rng.coin(density)) a.add_term(e, rng.uniform(lo, hi));
    return a;
}

inline CosetVector random_coset_vector(Rng& rng, const SpacePtr& s, long lo, long hi) {
    CosetVector v(s);
    for (std::size_t c = 0; c < s->size(); ++c) v[c] = rng.uniform(lo, hi);
    return v;
}

inline GammaVector random_vector(Rng& rng, const SimplicialGroup& g, long lo, long hi) {
    GammaVector v(g);
    for (std::size_t i = 0; i < g.rank(); ++i) v[i] = random_coset_vector(rng, g.space(), lo, hi);
    return v;
}

/// A positive vector whose every coordinate is nonzero.
inline GammaVector random_order_unit(Rng& rng, const SimplicialGroup& g, long hi) {
    GammaVector u = random_vector(rng, g, 0, hi);
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (u[i].is_zero()) u[i][rng.below(g.index())] = rng.uniform(1, std::max(1L, hi));
    return u;
}

/// Orbit sum of a random vector under the source Δ, hence fixed by it.
inline GammaVector random_fixed_column(Rng& rng, const SimplicialGroup& src, const SimplicialGroup& tgt, long lo, long hi) {
    GammaVector seed = random_vector(rng, tgt, lo, hi);
    GammaVector out(tgt);
    for (Elt d : src.space()->sub().members()) out += act(d, seed);
    return out;
}

inline GammaLinearMap random_map(Rng& rng, const SimplicialGroup& src, const SimplicialGroup& tgt, long lo, long hi) {
    std::vector<GammaVector> cols;
    for (std::size_t i = 0; i < src.rank(); ++i) cols.push_back(random_fixed_column(rng, src, tgt, lo, hi));
    return GammaLinearMap(src, tgt, std::move(cols));
}

inline MatricialRingDesc random_ring(Rng& rng, const SpacePtr& s, std::size_t max_components, std::size_t max_size) {
    const GroupPtr& g = s->group();
    std::vector<MatrixComponent> comps(1 + rng.below(max_components));
    for (auto& c : comps) {
        const std::size_t p = 1 + rng.below(max_size);
        for (std::size_t k = 0; k < p; ++k) c.shifts.push_back(rng.below(g->order()));
    }
    return MatricialRingDesc(s, std::move(comps));
}

/// Positive map in which target coordinate j receives e_j from some column, so order-units go to order-units.
inline GammaLinearMap random_covering_map(Rng& rng, const SimplicialGroup& src, const SimplicialGroup& tgt, long hi) {
    std::vector<GammaVector> cols;
    for (std::size_t i = 0; i < src.rank(); ++i) cols.push_back(random_fixed_column(rng, src, tgt, 0, hi));
    for (std::size_t j = 0; j < tgt.rank(); ++j) cols[j % src.rank()] += GammaVector::basis(tgt, j);
    return GammaLinearMap(src, tgt, std::move(cols));
}

/// Finite tower over a normal Δ with levels of rank <= max_rank.
inline Tower random_tower(Rng& rng, UnitMode mode, std::size_t max_levels, std::size_t max_rank, bool repeat = false) {
    auto grp = random_group(rng);
    auto s = random_normal_space(rng, grp);
    const std::size_t levels = 1 + rng.below(max_levels);
    std::vector<SimplicialGroup> groups;
    for (std::size_t k = 0; k < levels; ++k) groups.emplace_back(s, 1 + rng.below(max_rank));
    std::vector<GammaLinearMap> maps;
    for (std::size_t k = 0; k + 1 < levels; ++k) maps.push_back(random_covering_map(rng, groups[k], groups[k + 1], 1));
    if (repeat) maps.push_back(random_covering_map(rng, groups.back(), groups.back(), 1));
    std::vector<GammaVector> units;
    if (mode != UnitMode::None) {
        units.push_back(random_order_unit(rng, groups[0], 2));
        for (std::size_t k = 0; k + 1 < levels; ++k) {
            GammaVector next = map_apply(maps[k], units[k]);
            if (mode == UnitMode::Interval) next += random_vector(rng, groups[k + 1], 0, 1);
            units.push_back(next);
        }
    }
    return Tower(std::move(groups), std::move(maps), std::move(units), mode, repeat);
}

/// A ring whose unit class is exactly `cls`; every coordinate must be positive and nonzero.
inline MatricialRingDesc ring_with_unit_class(const GammaVector& cls) {
    const auto& cs = *cls.group().space();
    std::vector<MatrixComponent> comps;
    for (std::size_t i = 0; i < cls.rank(); ++i) {
        MatrixComponent c;
        for (std::size_t k = 0; k < cs.size(); ++k)
            for (Integer m = 0; m < cls[i][k]; ++m) c.shifts.push_back(cs.group()->inv(cs.rep(k)));
        comps.push_back(std::move(c));
    }
    return MatricialRingDesc(cls.group().space(), std::move(comps));
}

/// A realizable spec out of `r` into a freshly built ring of the given rank.
inline HomSpec random_spec(Rng& rng, const MatricialRingDesc& r, std::size_t target_rank, bool unital) {
    SimplicialGroup src(r.space(), r.count()), tgt(r.space(), target_rank);
    GammaLinearMap b = random_covering_map(rng, src, tgt, 1);
    GammaVector cls = map_apply(b, k0_of_matricial(r).unit_class);
    if (!unital) cls += random_vector(rng, tgt, 0, 1);
    return hom_realizable(r, ring_with_unit_class(cls), b, unital);
}

} // namespace gk0::testing
