#pragma once

#include <gmpxx.h>

#include <string>

namespace gk0 {

// Exact integers everywhere; cone tests never tolerate overflow.
using Integer = mpz_class;

inline int sign(const Integer& v) { return sgn(v); }

inline std::string to_string(const Integer& v) { return v.get_str(); }

} // namespace gk0
