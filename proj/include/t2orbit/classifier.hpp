#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "t2orbit/orbit_space.hpp"

namespace t2orbit {

/// Irreducible classification output. S4 occurs only as the class of a
/// t = 2 space, never as a proper summand. S2xS2 and CP2#CP2bar do not
/// split further and stay atomic.
enum class Atom { S4, CP2, CP2bar, S2xS2, CP2ConnSumCP2bar };

const char* atom_name(Atom a);
int atom_chi(Atom a);
Atom mirror_atom(Atom a);  // swaps CP2 <-> CP2bar, fixes the rest

/// Equivariant diffeomorphism class: a non-empty multiset of atoms read as
/// a connected sum.
struct ManifoldClass {
  std::map<Atom, int> summands;

  int chi() const;
  int summand_count() const;
  std::string to_string() const;

  auto operator<=>(const ManifoldClass&) const = default;
};

void to_json(nlohmann::json& j, const ManifoldClass& c);

int chi_of_class(const ManifoldClass& c);

/// A legal place to cut the orbit space. In case1 the cut joins edges i and
/// j with r(i,j) = +-1 and j not adjacent to i; in case2 it joins edges i-1
/// and j with r(i-1,j) = +-1 and j not adjacent to i-1.
struct SplitChoice {
  enum class Variant { Case1, Case2 };

  int i = 0;
  int j = 0;
  Variant variant = Variant::Case1;

  auto operator<=>(const SplitChoice&) const = default;
};

std::string to_string(const SplitChoice& c);

/// Table lookup for t <= 4:
///   t = 2: S4.
///   t = 3: CP2 if -e0*e1*e2 = +1, else CP2bar.
///   t = 4, -e0*e1*e2*e3 = +1: CP2 # CP2 if r13 in {e2*e3, 2*e2*e3},
///          CP2bar # CP2bar if r13 in {-e2*e3, -2*e2*e3}.
///   t = 4, -e0*e1*e2*e3 = -1: S2xS2 if r02, r13 both even (one zero),
///          CP2 # CP2bar if exactly one is odd (the other zero).
/// Throws WrongSize for t > 4 and UnclassifiedT4 if no row matches.
ManifoldClass classify_small(const WeightedOrbitSpace& x);

/// All valid split choices, ordered lexicographically by (i, j, variant).
std::vector<SplitChoice> find_splits(const WeightedOrbitSpace& x);

/// Cuts x at the chosen pair of edges (a, b). Piece 1 runs from a to b
/// inclusive, piece 2 from b to a inclusive, each closed into a cycle at a
/// new vertex. Weights are inherited verbatim; the new-vertex determinants
/// of the two pieces are negatives of each other.
std::pair<WeightedOrbitSpace, WeightedOrbitSpace> split(
    const WeightedOrbitSpace& x, const SplitChoice& c);

/// Full classification: Table lookup below t = 5, recursive connected-sum
/// splitting above (and for the splittable t = 4 classes). The optional
/// root split overrides the default lexicographically-first choice at the
/// top level only; results must not depend on it.
ManifoldClass decompose(const WeightedOrbitSpace& x,
                        const std::optional<SplitChoice>& root_split = {});

}  // namespace t2orbit
