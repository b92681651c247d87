#pragma once

#include <string>
#include <vector>

#include "gk0/simplicial.hpp"

namespace gk0 {

/// M_p(F[Δ])(γ_1, ..., γ_p); `shifts.size()` is p.
struct MatrixComponent {
    std::vector<Elt> shifts;
    std::size_t size() const { return shifts.size(); }
    bool operator==(const MatrixComponent& o) const { return shifts == o.shifts; }
};

/// ⊕_i M_{p(i)}(F[Δ])(γ_i1, ..., γ_ip(i)), graded by Γ. The field F is only a tag.
class MatricialRingDesc {
public:
    /// Throws ShapeMismatch for an empty component and IndexOutOfRange for a bad shift.
    MatricialRingDesc(SpacePtr space, std::vector<MatrixComponent> components);

    const SpacePtr& space() const { return space_; }
    const GroupPtr& group() const { return space_->group(); }
    const std::vector<MatrixComponent>& components() const { return components_; }
    std::size_t count() const { return components_.size(); }

    bool operator==(const MatricialRingDesc& o) const {
        return same_space(space_, o.space_) && components_ == o.components_;
    }

    std::string str() const;

private:
    SpacePtr space_;
    std::vector<MatrixComponent> components_;
};

struct K0Data {
    SimplicialGroup group;
    GammaVector unit_class;
    std::vector<GammaVector> basis_classes;
};

/// F-dimension of the homogeneous component of degree δ.
std::size_t homog_dim(const MatricialRingDesc& r, Elt delta);

K0Data k0_of_matricial(const MatricialRingDesc& r);

/// The class of the diagonal idempotent e^i_kk, i.e. γ_ik^{-1}·(basis class i).
GammaVector diagonal_class(const MatricialRingDesc& r, std::size_t component, std::size_t slot);

/// Graded isomorphism of the rings: components can be paired with equal sizes so that, for
/// some n normalizing Δ, the right-coset multisets {Δ n γ_ik} and {Δ δ_jk} agree.
bool graded_iso(const MatricialRingDesc& r, const MatricialRingDesc& s);

/// The stricter test with n = 1: the unit classes agree up to a permutation of the basis.
bool same_unit_class(const MatricialRingDesc& r, const MatricialRingDesc& s);

/// End(P) for a finitely generated graded projective P with the given class in K0(r):
/// one component per nonzero coordinate, shifts read off the coset multiplicities.
MatricialRingDesc corner_ring(const MatricialRingDesc& r, const GammaVector& cls);

} // namespace gk0
