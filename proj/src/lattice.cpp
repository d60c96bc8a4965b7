#include "t2orbit/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace t2orbit {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::TooShort: return "TooShort";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::IllegalDeterminant: return "IllegalDeterminant";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::WrongSize: return "WrongSize";
    case Errc::UnclassifiedT4: return "UnclassifiedT4";
    case Errc::InvalidSplit: return "InvalidSplit";
    case Errc::NoSplitAvailable: return "NoSplitAvailable";
    case Errc::OddDimension: return "OddDimension";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::NonPositiveChi: return "NonPositiveChi";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError(Errc::Overflow, "integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw DomainError(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

bool is_primitive(const WeightVector& w) {
  if (w.m == 0 && w.n == 0) return false;
  return std::gcd(std::llabs(w.m), std::llabs(w.n)) == 1;
}

WeightVector negate(const WeightVector& w) {
  return {checked_neg(w.m), checked_neg(w.n)};
}

WeightVector sign_normalized(const WeightVector& w) {
  if (w.m < 0 || (w.m == 0 && w.n < 0)) return negate(w);
  return w;
}

Int det2(const WeightVector& u, const WeightVector& v) {
  return checked_sub(checked_mul(u.m, v.n), checked_mul(u.n, v.m));
}

Int LatticeTransform::det() const {
  return checked_sub(checked_mul(a, d), checked_mul(b, c));
}

WeightVector apply_transform(const LatticeTransform& t, const WeightVector& w) {
  return {checked_add(checked_mul(t.a, w.m), checked_mul(t.b, w.n)),
          checked_add(checked_mul(t.c, w.m), checked_mul(t.d, w.n))};
}

LatticeTransform pair_basis_transform(const WeightVector& u,
                                      const WeightVector& v) {
  const Int det = det2(u, v);
  if (det != 1 && det != -1)
    throw DomainError(Errc::NotUnimodular,
                      "pair determinant is " + std::to_string(det) +
                          ", expected +-1");
  // Inverse of the column matrix [u v], which has determinant +-1.
  return {checked_mul(det, v.n), checked_mul(det, checked_neg(v.m)),
          checked_mul(det, checked_neg(u.n)), checked_mul(det, u.m)};
}

}  // namespace t2orbit
