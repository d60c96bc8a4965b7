#include "t2orbit/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace t2orbit::rigidity {

int symmetry_rank_bound(const CurvatureSymmetry& cs) {
  if (cs.n < 2 || cs.k < 1 || cs.k > cs.n - 1)
    throw DomainError(Errc::InvalidArgument,
                      "require n >= 2 and 1 <= k <= n-1");
  if (cs.k <= 2) return (cs.n + 1) / 2;
  return (cs.n + cs.k) / 2 - 1;
}

int connectedness_degree(int n, int d, int k, int delta) {
  if (d < 1 || delta < 0)
    throw DomainError(Errc::InvalidArgument, "require d >= 1 and delta >= 0");
  return n - 2 * d + 2 - k + delta;
}

int intersection_connectedness(int n, int d1, int d2, int k) {
  if (d1 > d2)
    throw DomainError(Errc::OrderViolation,
                      "require d1 <= d2, got d1 = " + std::to_string(d1) +
                          ", d2 = " + std::to_string(d2));
  return n - d1 - d2 + 1 - k;
}

PeriodicityRanges periodicity_ranges(int n, int d, int l) {
  PeriodicityRanges out;
  out.surjective_min = l;
  out.surjective_max = n - d - l - 1;
  out.injective_min = l + 1;
  out.injective_max = n - d - l;
  out.empty = l >= n - d - l;
  return out;
}

long long BettiVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    chi += (i % 2 == 0) ? b[i] : -b[i];
  return chi;
}

long long BettiVector::odd_sum() const {
  long long sum = 0;
  for (std::size_t i = 1; i < b.size(); i += 2) sum += b[i];
  return sum;
}

long long BettiVector::even_sum() const {
  long long sum = 0;
  for (std::size_t i = 0; i < b.size(); i += 2) sum += b[i];
  return sum;
}

bool BettiVector::poincare_dual() const {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != b[b.size() - 1 - i]) return false;
  return true;
}

BettiVector betti_sum(const BettiVector& a, const BettiVector& b) {
  BettiVector out;
  out.b.resize(std::max(a.b.size(), b.b.size()), 0);
  for (std::size_t i = 0; i < a.b.size(); ++i) out.b[i] += a.b[i];
  for (std::size_t i = 0; i < b.b.size(); ++i) out.b[i] += b.b[i];
  return out;
}

BettiVector periodic_cohomology_trichotomy(int n, long long b2) {
  if (n % 2 != 0)
    throw DomainError(Errc::OddDimension,
                      "dimension must be even, got " + std::to_string(n));
  if (n < 2 || b2 < 0)
    throw DomainError(Errc::InvalidArgument, "require n >= 2 and b2 >= 0");
  BettiVector out;
  out.b.assign(static_cast<std::size_t>(n) + 1, 0);
  out.b.front() = 1;
  out.b.back() = 1;
  for (int i = 2; i < n; i += 2) out.b[static_cast<std::size_t>(i)] = b2;
  return out;
}

bool conner_check(const BettiVector& ambient, const BettiVector& fixed) {
  return fixed.euler_characteristic() == ambient.euler_characteristic() &&
         fixed.odd_sum() <= ambient.odd_sum() &&
         fixed.even_sum() <= ambient.even_sum();
}

bool dim6_b2_bound(long long b, long long chi_triple) {
  if (chi_triple < 1)
    throw DomainError(Errc::InvalidArgument,
                      "chi of the triple intersection must be >= 1");
  return 2 + 2 * b >= 3 * (2 + b) - 3 * 2 + chi_triple;
}

long long free_action_order_bound(const std::vector<long long>& chis) {
  if (chis.empty())
    throw DomainError(Errc::InvalidArgument,
                      "need at least one Euler characteristic");
  long long g = 0;
  for (long long chi : chis) {
    if (chi <= 0)
      throw DomainError(Errc::NonPositiveChi,
                        "Euler characteristic must be positive, got " +
                            std::to_string(chi));
    g = std::gcd(g, chi);
  }
  return g;
}

}  // namespace t2orbit::rigidity
