#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gk0/group_ring.hpp"
#include "gk0/normal_form.hpp"

namespace gk0 {

/// The simplicial Γ-group ⊕^rank Z[Γ/Δ] with the coordinatewise cone.
class SimplicialGroup {
public:
    SimplicialGroup(SpacePtr space, std::size_t rank) : space_(std::move(space)), rank_(rank) {}

    const SpacePtr& space() const { return space_; }
    const GroupPtr& group() const { return space_->group(); }
    std::size_t rank() const { return rank_; }
    std::size_t index() const { return space_->size(); }
    /// Rank over Z.
    std::size_t flat_dim() const { return rank_ * space_->size(); }

    bool operator==(const SimplicialGroup& o) const { return rank_ == o.rank_ && same_space(space_, o.space_); }

private:
    SpacePtr space_;
    std::size_t rank_;
};

/// An element of a simplicial group, stored by the π-classes of its coordinates.
class GammaVector {
public:
    explicit GammaVector(SimplicialGroup g);
    GammaVector(SimplicialGroup g, std::vector<CosetVector> coords);

    static GammaVector basis(const SimplicialGroup& g, std::size_t i);

    const SimplicialGroup& group() const { return group_; }
    std::size_t rank() const { return coords_.size(); }
    const CosetVector& operator[](std::size_t i) const { return coords_[i]; }
    CosetVector& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<CosetVector>& coords() const { return coords_; }

    bool is_zero() const;
    Integer max_abs() const;

    GammaVector operator-() const;
    GammaVector& operator+=(const GammaVector& o);
    GammaVector& operator-=(const GammaVector& o);
    bool operator==(const GammaVector& o) const;

    IntRow flatten() const;
    static GammaVector unflatten(const SimplicialGroup& g, const IntRow& flat);

    std::string str() const;

private:
    SimplicialGroup group_;
    std::vector<CosetVector> coords_;
};

GammaVector operator+(GammaVector a, const GammaVector& b);
GammaVector operator-(GammaVector a, const GammaVector& b);
GammaVector operator*(const Integer& k, GammaVector v);
GammaVector act(const GroupRingElt& a, const GammaVector& v);
GammaVector act(Elt g, const GammaVector& v);

void require_member(const SimplicialGroup& g, const GammaVector& v);

bool cone_contains(const SimplicialGroup& g, const GammaVector& v);
/// a <= b in the simplicial order.
bool leq(const GammaVector& a, const GammaVector& b);
GammaVector positive_part(const GammaVector& v);
GammaVector negative_part(const GammaVector& v);

/// Throws NotInCone when u is not positive.
bool is_order_unit(const SimplicialGroup& g, const GammaVector& u);

/// Some a in Z^+[Γ] with v <= a·u; u must be an order-unit (NotOrderUnit otherwise).
GroupRingElt dominating_multiplier(const SimplicialGroup& g, const GammaVector& u, const GammaVector& v);

/// Least interpolant: componentwise maximum of X (componentwise minimum of Y when X is empty).
GammaVector interpolate(const SimplicialGroup& g, const std::vector<GammaVector>& xs,
                        const std::vector<GammaVector>& ys);

using Refinement = std::array<std::array<GammaVector, 2>, 2>;

/// z[i][j] with row sums x_i and column sums y_j, all positive.
Refinement riesz_refine(const SimplicialGroup& g, const GammaVector& x1, const GammaVector& x2,
                        const GammaVector& y1, const GammaVector& y2);

struct IdealSplit {
    SimplicialGroup ideal;
    std::vector<std::size_t> ideal_coords;
    SimplicialGroup quotient;
    std::vector<std::size_t> quotient_coords;

    GammaVector embed(const GammaVector& v, const SimplicialGroup& ambient) const;
    GammaVector project(const GammaVector& v) const;
};

/// Zero-based basis indices; IndexOutOfRange otherwise.
IdealSplit ideal_from_subset(const SimplicialGroup& g, const std::vector<std::size_t>& subset);

/// Whether the Γ-subgroup generated by `gens` is spanned by a subset of the basis.
bool is_gamma_ideal(const SimplicialGroup& g, const std::vector<GammaVector>& gens);

/// HNF of the Z-span of all Γ-translates of `gens`.
IntMatrix submodule_lattice(const SimplicialGroup& g, const std::vector<GammaVector>& gens);

/// Elements fixing every coset; all of Γ for the zero group.
Subgroup group_stabilizer(const SimplicialGroup& g);

/// Calls f on every v with lo <= v <= hi; returns the number visited.
std::size_t for_each_in_box(const GammaVector& lo, const GammaVector& hi, const std::function<void(const GammaVector&)>& f);

} // namespace gk0
