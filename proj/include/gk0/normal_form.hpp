#pragma once

#include <cstddef>
#include <vector>

#include "gk0/integer.hpp"

namespace gk0 {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie in [0, pivot).
/// Two generating sets span the same lattice iff their HNFs are equal.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols);

std::size_t lattice_rank(IntMatrix rows, std::size_t ncols);

/// A Z-basis of {v : A v = 0} for the rows x cols matrix A, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Membership test against a basis already in Hermite normal form.
bool lattice_contains(const IntMatrix& hnf, IntRow v);

IntRow mat_vec(const IntMatrix& a, const IntRow& v);

} // namespace gk0
