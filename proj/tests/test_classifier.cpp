#include <doctest.h>

#include <set>
#include <vector>

#include "t2orbit/classifier.hpp"
#include "t2orbit/enumerator.hpp"

using namespace t2orbit;

namespace {

WeightedOrbitSpace make(std::vector<WeightVector> edges) {
  return WeightedOrbitSpace::validate(std::move(edges));
}

ManifoldClass mirror_class(const ManifoldClass& c) {
  ManifoldClass out;
  for (const auto& [atom, count] : c.summands)
    out.summands[mirror_atom(atom)] += count;
  return out;
}

}  // namespace

TEST_CASE("classify_small: t = 2 is the sphere") {
  CHECK(classify_small(make({{1, 0}, {0, 1}})) ==
        ManifoldClass{{{Atom::S4, 1}}});
}

TEST_CASE("classify_small: t = 3 orientation split") {
  // e0 = -1, e1 = e2 = +1, so -e0*e1*e2 = +1
  CHECK(classify_small(make({{1, 0}, {0, 1}, {-1, 1}})) ==
        ManifoldClass{{{Atom::CP2, 1}}});
  CHECK(classify_small(orientation_reverse(make({{1, 0}, {0, 1}, {-1, 1}}))) ==
        ManifoldClass{{{Atom::CP2bar, 1}}});
}

TEST_CASE("classify_small: t = 4 rows") {
  // epsilons (-1, 1, -1, 1), r02 = r13 = 0
  CHECK(classify_small(make({{1, 0}, {0, 1}, {1, 0}, {0, 1}})) ==
        ManifoldClass{{{Atom::S2xS2, 1}}});
  // epsilons (-1, 1, -1, 1), r02 = 0, r13 = -2: even with one zero
  CHECK(classify_small(make({{1, 0}, {0, 1}, {1, 0}, {2, 1}})) ==
        ManifoldClass{{{Atom::S2xS2, 1}}});
  // epsilons (-1, 1, -1, 1), r02 = 0, r13 = -1 odd
  CHECK(classify_small(make({{1, 0}, {0, 1}, {1, 0}, {1, 1}})) ==
        ManifoldClass{{{Atom::CP2ConnSumCP2bar, 1}}});
  // epsilons (-1, 1, 1, 1), r13 = 2 = 2*e2*e3
  CHECK(classify_small(make({{1, 0}, {0, 1}, {-1, 1}, {-2, 1}})) ==
        ManifoldClass{{{Atom::CP2, 2}}});
  // its mirror
  CHECK(classify_small(
            orientation_reverse(make({{1, 0}, {0, 1}, {-1, 1}, {-2, 1}}))) ==
        ManifoldClass{{{Atom::CP2bar, 2}}});
}

TEST_CASE("classify_small rejects t > 4") {
  CHECK_THROWS_AS(
      classify_small(make({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}})),
      DomainError);
}

TEST_CASE("chi of classes") {
  CHECK(ManifoldClass{{{Atom::S4, 1}}}.chi() == 2);
  CHECK(ManifoldClass{{{Atom::CP2, 2}}}.chi() == 4);
  CHECK(ManifoldClass{{{Atom::CP2, 3}}}.chi() == 5);
  CHECK(ManifoldClass{{{Atom::S2xS2, 1}}}.chi() == 4);
  CHECK(chi_of_class(ManifoldClass{{{Atom::CP2ConnSumCP2bar, 1}}}) == 4);
}

TEST_CASE("find_splits") {
  CHECK(find_splits(make({{1, 0}, {0, 1}})).empty());
  // both non-adjacent determinants are 0
  CHECK(find_splits(make({{1, 0}, {0, 1}, {1, 0}, {0, 1}})).empty());
  // every valid t = 5 space admits a split; checked over the enumeration
  for (const auto& x : enumerate_canonical({5, 3}))
    if (x.size() == 5) CHECK_FALSE(find_splits(x).empty());
}

TEST_CASE("find_splits ordering is lexicographic") {
  const auto splits =
      find_splits(make({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}));
  REQUIRE_FALSE(splits.empty());
  for (std::size_t k = 1; k < splits.size(); ++k)
    CHECK(splits[k - 1] < splits[k]);
}

TEST_CASE("split mechanics on a t = 5 space") {
  const auto x = make({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}});
  const auto splits = find_splits(x);
  REQUIRE_FALSE(splits.empty());
  for (const auto& choice : splits) {
    const auto [p1, p2] = split(x, choice);
    CHECK(p1.size() + p2.size() == x.size() + 2);
    CHECK(p1.size() >= 3);
    CHECK(p2.size() >= 3);
    CHECK(p1.size() <= x.size() - 1);
    CHECK(p2.size() <= x.size() - 1);
    // weights inherited verbatim
    const std::set<WeightVector> pool(x.edges().begin(), x.edges().end());
    for (const auto& e : p1.edges()) CHECK(pool.count(e) == 1);
    for (const auto& e : p2.edges()) CHECK(pool.count(e) == 1);
    // new-vertex determinants are negatives of each other: the new vertex
    // of piece 1 sits between its last and first edge, likewise piece 2
    const Int eps1 = det2(p1.edges().back(), p1.edges().front());
    const Int eps2 = det2(p2.edges().back(), p2.edges().front());
    CHECK(eps1 == -eps2);
    CHECK(std::llabs(eps1) == 1);
  }
}

TEST_CASE("split rejects an invalid choice") {
  const auto x = make({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(split(x, {0, 2, SplitChoice::Variant::Case1}), DomainError);
}

TEST_CASE("decompose small cases") {
  CHECK(decompose(make({{1, 0}, {0, 1}})) == ManifoldClass{{{Atom::S4, 1}}});
  CHECK(decompose(make({{1, 0}, {0, 1}, {-1, 1}})) ==
        ManifoldClass{{{Atom::CP2, 1}}});
  CHECK(decompose(make({{1, 0}, {0, 1}, {1, 0}, {0, 1}})) ==
        ManifoldClass{{{Atom::S2xS2, 1}}});
  CHECK(decompose(make({{1, 0}, {0, 1}, {1, 0}, {1, 1}})) ==
        ManifoldClass{{{Atom::CP2ConnSumCP2bar, 1}}});
}

TEST_CASE("t = 4 projective sums split into single projective pieces") {
  for (const auto& x : enumerate_canonical({4, 3})) {
    if (x.size() != 4) continue;
    const ManifoldClass cls = classify_small(x);
    const bool plus = cls == ManifoldClass{{{Atom::CP2, 2}}};
    const bool minus = cls == ManifoldClass{{{Atom::CP2bar, 2}}};
    if (!plus && !minus) continue;
    CHECK(decompose(x) == cls);
    for (const auto& choice : find_splits(x)) {
      const auto [p1, p2] = split(x, choice);
      const Atom expected = plus ? Atom::CP2 : Atom::CP2bar;
      CHECK(classify_small(p1) == ManifoldClass{{{expected, 1}}});
      CHECK(classify_small(p2) == ManifoldClass{{{expected, 1}}});
    }
  }
}

TEST_CASE("chi is conserved by decomposition") {
  for (const auto& x : enumerate_canonical({6, 2}))
    CHECK(chi_of_class(decompose(x)) == x.euler_characteristic());
}

namespace {

// Signature of the class: CP2 contributes +1, CP2bar -1, the rest 0.
long long signature_of(const ManifoldClass& c) {
  long long sig = 0;
  for (const auto& [atom, count] : c.summands) {
    if (atom == Atom::CP2) sig += count;
    if (atom == Atom::CP2bar) sig -= count;
  }
  return sig;
}

}  // namespace

TEST_CASE("root split choices agree on chi and signature") {
  // The summand multiset itself can depend on the root split: the same
  // space may decompose as N # S2xS2 or N # CP2 # CP2bar (the two are
  // homeomorphic when N is not spin). Euler characteristic and signature
  // are genuine invariants of every route.
  for (const auto& x : enumerate_canonical({7, 2})) {
    if (x.size() < 5) continue;
    const ManifoldClass expected = decompose(x);
    for (const auto& choice : find_splits(x)) {
      const ManifoldClass got = decompose(x, choice);
      CHECK(got.chi() == expected.chi());
      CHECK(signature_of(got) == signature_of(expected));
    }
  }
}

TEST_CASE("root split choices agree exactly on admissible spaces") {
  // Admissible spaces never reach the ambiguous S2xS2 / CP2 # CP2bar
  // summands, so there the multiset itself is route-independent.
  int checked = 0;
  for (const auto& x : enumerate_canonical({6, 3})) {
    if (x.size() < 5 || !ric2_admissible(x).admissible) continue;
    const ManifoldClass expected = decompose(x);
    for (const auto& choice : find_splits(x)) {
      CHECK(decompose(x, choice) == expected);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("orientation covariance of decomposition") {
  // Reversal negates the signature and preserves chi. The multiset itself
  // is only covariant up to the S2xS2 / CP2 # CP2bar identification, since
  // decompose may pick different routes for x and its reversal.
  for (const auto& x : enumerate_canonical({6, 2})) {
    const ManifoldClass fwd = decompose(x);
    const ManifoldClass rev = decompose(orientation_reverse(x));
    CHECK(rev.chi() == fwd.chi());
    CHECK(signature_of(rev) == -signature_of(fwd));
  }
  // On admissible spaces the covariance is exact.
  for (const auto& x : enumerate_canonical({6, 3})) {
    if (!ric2_admissible(x).admissible) continue;
    CHECK(decompose(orientation_reverse(x)) == mirror_class(decompose(x)));
  }
}

TEST_CASE("admissible spaces decompose into one projective orientation") {
  for (const auto& x : enumerate_canonical({7, 2})) {
    if (!ric2_admissible(x).admissible) continue;
    const ManifoldClass cls = decompose(x);
    REQUIRE(cls.summands.size() == 1);
    const Atom kind = cls.summands.begin()->first;
    CHECK((kind == Atom::S4 || kind == Atom::CP2 || kind == Atom::CP2bar));
  }
}

TEST_CASE("manifold class serialization") {
  const ManifoldClass cls{{{Atom::CP2, 2}}};
  const nlohmann::json j = cls;
  CHECK(j["chi"] == 4);
  REQUIRE(j["summands"].size() == 1);
  CHECK(j["summands"][0]["kind"] == "CP2");
  CHECK(j["summands"][0]["count"] == 2);
  CHECK(cls.to_string() == "CP2 # CP2");
}
