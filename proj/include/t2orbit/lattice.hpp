#pragma once

#include <compare>
#include <cstdint>

#include "t2orbit/errors.hpp"

namespace t2orbit {

using Int = std::int64_t;

// Checked 64-bit arithmetic. Enumeration bounds keep values tiny, but a
// silent wraparound would corrupt classification, so violations throw.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

/// Isotropy weight of a boundary edge: a primitive integer vector (m, n).
/// Primitivity is gcd(|m|, |n|) = 1; (0,0) is never valid. Sign ambiguity
/// is resolved one level up, in orbit-space canonicalization.
struct WeightVector {
  Int m = 0;
  Int n = 0;

  auto operator<=>(const WeightVector&) const = default;
};

bool is_primitive(const WeightVector& w);

WeightVector negate(const WeightVector& w);

/// Flips the sign, if needed, so the first nonzero coordinate is positive.
WeightVector sign_normalized(const WeightVector& w);

/// det [u.m v.m; u.n v.n] = u.m*v.n - u.n*v.m. Antisymmetric.
Int det2(const WeightVector& u, const WeightVector& v);

/// Element of GL(2,Z): integer 2x2 matrix [[a, b], [c, d]] with det = +-1.
struct LatticeTransform {
  Int a = 1;
  Int b = 0;
  Int c = 0;
  Int d = 1;

  static LatticeTransform identity() { return LatticeTransform{}; }
  Int det() const;

  auto operator<=>(const LatticeTransform&) const = default;
};

/// Matrix-vector product. Primitivity is preserved since |det T| = 1.
WeightVector apply_transform(const LatticeTransform& t, const WeightVector& w);

/// The unique T with T*u = (1,0) and T*v = (0,1).
/// Throws NotUnimodular unless |det2(u,v)| = 1.
LatticeTransform pair_basis_transform(const WeightVector& u,
                                      const WeightVector& v);

}  // namespace t2orbit
