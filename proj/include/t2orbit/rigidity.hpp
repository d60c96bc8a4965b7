#pragma once

#include <vector>

#include "t2orbit/errors.hpp"

namespace t2orbit::rigidity {

/// Dimension n and intermediate-Ricci index k, 1 <= k <= n-1.
struct CurvatureSymmetry {
  int n = 2;
  int k = 1;
};

/// Upper bound on the rank of the isometry group:
/// floor((n+1)/2) for k <= 2, floor((n+k)/2) - 1 for k >= 3.
int symmetry_rank_bound(const CurvatureSymmetry& cs);

/// Connectedness degree of the inclusion of a totally geodesic
/// codimension-d submanifold: n - 2d + 2 - k + delta, where delta is the
/// dimension of the principal orbits of the group fixing it (0 if none).
int connectedness_degree(int n, int d, int k, int delta);

/// Connectedness degree of the inclusion N1 cap N2 -> N2 for totally
/// geodesic submanifolds of codimensions d1 <= d2: n - d1 - d2 + 1 - k.
/// Throws OrderViolation if d1 > d2.
int intersection_connectedness(int n, int d1, int d2, int k);

/// Cup product with e in H^d is surjective for l <= i < n-d-l and
/// injective for l < i <= n-d-l. Bounds stored inclusive; both ranges are
/// empty exactly when l >= n-d-l.
struct PeriodicityRanges {
  int surjective_min = 0;
  int surjective_max = -1;  // inclusive
  int injective_min = 0;
  int injective_max = -1;   // inclusive
  bool empty = true;
};

PeriodicityRanges periodicity_ranges(int n, int d, int l);

/// Graded Betti numbers b[0..n] of a closed orientable manifold.
struct BettiVector {
  std::vector<long long> b;

  long long euler_characteristic() const;
  long long odd_sum() const;
  long long even_sum() const;
  bool poincare_dual() const;

  bool operator==(const BettiVector&) const = default;
};

/// Componentwise sum (disjoint union of fixed components); shorter vector
/// is padded with zeros.
BettiVector betti_sum(const BettiVector& a, const BettiVector& b);

/// Betti vector of a space with degree-2 cohomological periodicity:
/// b[0] = b[n] = 1, interior even degrees equal b2, odd degrees zero.
/// b2 = 0 gives a sphere, 1 a complex projective space, >= 2 a connected
/// sum of complex projective spaces. Throws OddDimension if n is odd.
BettiVector periodic_cohomology_trichotomy(int n, long long b2);

/// Betti Number Lemma check for a smooth torus action: chi(M) = chi(fixed),
/// and the fixed set's odd and even Betti sums are bounded by the ambient
/// ones.
bool conner_check(const BettiVector& ambient, const BettiVector& fixed);

/// Inclusion-exclusion bound for three 4-dimensional fixed components in a
/// 6-manifold: with chi(M) = 2+2b, chi(N_i) = 2+b, chi(N_i cap N_j) = 2,
/// the chain chi(M) >= chi(N1 u N2 u N3) holds iff b <= 2 - chi_triple.
bool dim6_b2_bound(long long b, long long chi_triple);

/// gcd of the Euler characteristics: an upper bound on the order of a
/// finite group acting freely on every listed space. Throws NonPositiveChi
/// unless every chi is positive.
long long free_action_order_bound(const std::vector<long long>& chis);

}  // namespace t2orbit::rigidity
