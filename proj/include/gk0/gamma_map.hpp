#pragma once

#include <vector>

#include "gk0/simplicial.hpp"

namespace gk0 {

/// Γ-equivariant homomorphism given by the images of the basis elements.
class GammaLinearMap {
public:
    /// Throws ShapeMismatch or NotEquivariant (a column not fixed by the source Δ).
    GammaLinearMap(SimplicialGroup source, SimplicialGroup target, std::vector<GammaVector> columns);

    static GammaLinearMap identity(const SimplicialGroup& g);
    static GammaLinearMap zero(const SimplicialGroup& source, const SimplicialGroup& target);

    const SimplicialGroup& source() const { return source_; }
    const SimplicialGroup& target() const { return target_; }
    const std::vector<GammaVector>& columns() const { return columns_; }
    const GammaVector& column(std::size_t i) const { return columns_[i]; }

    bool operator==(const GammaLinearMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && columns_ == o.columns_;
    }

private:
    SimplicialGroup source_;
    SimplicialGroup target_;
    std::vector<GammaVector> columns_;
};

inline GammaLinearMap map_new(SimplicialGroup src, SimplicialGroup tgt, std::vector<GammaVector> columns) {
    return GammaLinearMap(std::move(src), std::move(tgt), std::move(columns));
}

bool is_positive_map(const GammaLinearMap& f);
GammaVector map_apply(const GammaLinearMap& f, const GammaVector& v);
/// g ∘ f.
GammaLinearMap map_compose(const GammaLinearMap& g, const GammaLinearMap& f);

/// The Z-matrix (target flat_dim x source flat_dim) of f.
IntMatrix flatten(const GammaLinearMap& f);

/// Z-basis of ker f, in Hermite normal form order.
std::vector<GammaVector> map_kernel(const GammaLinearMap& f);
/// HNF of the flattened kernel.
IntMatrix kernel_lattice(const GammaLinearMap& f);

/// [f | columns]: the map from source ⊕ Z[Γ/Δ]^k sending the new basis elements to `extra`.
GammaLinearMap append_columns(const GammaLinearMap& f, const std::vector<GammaVector>& extra);

/// Inclusion of the first summand G -> G ⊕ Z[Γ/Δ]^k.
GammaLinearMap first_summand_inclusion(const SimplicialGroup& g, std::size_t extra_rank);

} // namespace gk0
