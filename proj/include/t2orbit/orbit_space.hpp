#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "t2orbit/lattice.hpp"

namespace t2orbit {

/// The weighted orbit space of an effective T^2-action on a closed simply
/// connected 4-manifold: a cyclic sequence of t >= 2 primitive edge weights
/// in which every pair of consecutive weights has determinant +-1. The
/// sequence order encodes the boundary orientation; vertex count equals the
/// Euler characteristic of the manifold upstairs.
class WeightedOrbitSpace {
 public:
  /// Accepts exactly the legal weight cycles. Throws TooShort,
  /// NotPrimitive, or IllegalDeterminant otherwise.
  static WeightedOrbitSpace validate(std::vector<WeightVector> edges);

  int size() const { return static_cast<int>(edges_.size()); }
  int euler_characteristic() const { return size(); }

  /// Edge i, indices taken mod t.
  const WeightVector& edge(int i) const;
  const std::vector<WeightVector>& edges() const { return edges_; }

  /// Vertex determinant at f_i: det of the weights of edges i-1 and i.
  Int epsilon(int i) const;

  /// Determinant of the weights of edges i and j. r(i-1, i) = epsilon(i).
  Int r_pair(int i, int j) const;

  auto operator<=>(const WeightedOrbitSpace&) const = default;

 private:
  explicit WeightedOrbitSpace(std::vector<WeightVector> edges)
      : edges_(std::move(edges)) {}

  std::vector<WeightVector> edges_;
};

/// Edges i and j share a vertex iff j = i +- 1 (mod t). For t <= 3 every
/// pair of distinct edges is adjacent.
bool edges_adjacent(int i, int j, int t);

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<std::pair<int, int>> witnesses;  // non-adjacent pairs with r = 0
};

/// Obstruction test: an invariant Ric_2 > 0 metric forces r(i,j) != 0 for
/// every non-adjacent pair of edges. Vacuously admissible for t <= 3.
AdmissibilityReport ric2_admissible(const WeightedOrbitSpace& x);

/// Distinguished representative of the orbit of x under simultaneous
/// GL(2,Z) reparametrization, per-edge sign flips, rotation, and reversal.
/// For each start edge, direction, and sign choice on the first two edges,
/// the first two edges are mapped to (1,0),(0,1), every edge is
/// sign-normalized, and the lexicographically smallest sequence wins.
WeightedOrbitSpace canonical_form(const WeightedOrbitSpace& x);

/// Reverses the edge sequence; every epsilon of the result is the negative
/// of a corresponding epsilon of the input.
WeightedOrbitSpace orientation_reverse(const WeightedOrbitSpace& x);

// Text format: optional '#' comment lines, then one "m n" pair per line,
// edges in cyclic order.
WeightedOrbitSpace parse_orbit_space(std::istream& in);
WeightedOrbitSpace parse_orbit_space_file(const std::string& path);
std::string format_orbit_space(const WeightedOrbitSpace& x);

}  // namespace t2orbit
