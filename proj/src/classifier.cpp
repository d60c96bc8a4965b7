#include "t2orbit/classifier.hpp"

#include <cstdlib>
#include <sstream>

namespace t2orbit {

namespace {

int imod(int a, int t) {
  int r = a % t;
  return r < 0 ? r + t : r;
}

ManifoldClass single(Atom a) { return ManifoldClass{{{a, 1}}}; }

ManifoldClass merge(const ManifoldClass& a, const ManifoldClass& b) {
  ManifoldClass out = a;
  for (const auto& [atom, count] : b.summands) out.summands[atom] += count;
  return out;
}

bool is_splittable_pair(const ManifoldClass& c) {
  return c.summands == std::map<Atom, int>{{Atom::CP2, 2}} ||
         c.summands == std::map<Atom, int>{{Atom::CP2bar, 2}};
}

ManifoldClass decompose_impl(const WeightedOrbitSpace& x,
                             const std::optional<SplitChoice>& root_split) {
  const int t = x.size();
  if (t <= 4) {
    ManifoldClass cls = classify_small(x);
    if (!(t == 4 && is_splittable_pair(cls))) return cls;
    // CP2 # CP2 and CP2bar # CP2bar admit the same cut; splitting them keeps
    // the output grammar uniform. If no unit-determinant cut exists the
    // table row already names the summands.
    const std::vector<SplitChoice> splits = find_splits(x);
    if (splits.empty() && !root_split) return cls;
    const SplitChoice choice = root_split ? *root_split : splits.front();
    const auto [p1, p2] = split(x, choice);
    return merge(decompose_impl(p1, {}), decompose_impl(p2, {}));
  }
  const std::vector<SplitChoice> splits = find_splits(x);
  if (splits.empty() && !root_split) {
    std::ostringstream diag;
    diag << "no split available for a valid space with t = " << t
         << "; edges:";
    for (const WeightVector& e : x.edges())
      diag << " (" << e.m << "," << e.n << ")";
    throw DomainError(Errc::NoSplitAvailable, diag.str());
  }
  const SplitChoice choice = root_split ? *root_split : splits.front();
  const auto [p1, p2] = split(x, choice);
  return merge(decompose_impl(p1, {}), decompose_impl(p2, {}));
}

}  // namespace

const char* atom_name(Atom a) {
  switch (a) {
    case Atom::S4: return "S4";
    case Atom::CP2: return "CP2";
    case Atom::CP2bar: return "CP2bar";
    case Atom::S2xS2: return "S2xS2";
    case Atom::CP2ConnSumCP2bar: return "CP2_connsum_CP2bar";
  }
  return "?";
}

int atom_chi(Atom a) {
  switch (a) {
    case Atom::S4: return 2;
    case Atom::CP2: return 3;
    case Atom::CP2bar: return 3;
    case Atom::S2xS2: return 4;
    case Atom::CP2ConnSumCP2bar: return 4;
  }
  return 0;
}

Atom mirror_atom(Atom a) {
  if (a == Atom::CP2) return Atom::CP2bar;
  if (a == Atom::CP2bar) return Atom::CP2;
  return a;
}

int ManifoldClass::chi() const {
  // chi(A # B) = chi(A) + chi(B) - 2.
  int chi = 2;
  for (const auto& [atom, count] : summands)
    chi += count * (atom_chi(atom) - 2);
  return chi;
}

int ManifoldClass::summand_count() const {
  int n = 0;
  for (const auto& [atom, count] : summands) n += count;
  return n;
}

std::string ManifoldClass::to_string() const {
  std::string out;
  for (const auto& [atom, count] : summands) {
    for (int k = 0; k < count; ++k) {
      if (!out.empty()) out += " # ";
      out += atom_name(atom);
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const ManifoldClass& c) {
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& [atom, count] : c.summands)
    summands.push_back({{"kind", atom_name(atom)}, {"count", count}});
  j = {{"summands", summands}, {"chi", c.chi()}};
}

int chi_of_class(const ManifoldClass& c) { return c.chi(); }

std::string to_string(const SplitChoice& c) {
  std::ostringstream out;
  out << c.i << ',' << c.j << ','
      << (c.variant == SplitChoice::Variant::Case1 ? "case1" : "case2");
  return out.str();
}

ManifoldClass classify_small(const WeightedOrbitSpace& x) {
  const int t = x.size();
  if (t > 4)
    throw DomainError(Errc::WrongSize,
                      "classify_small requires t <= 4, got " +
                          std::to_string(t));
  if (t == 2) return single(Atom::S4);
  if (t == 3) {
    const Int p = -x.epsilon(0) * x.epsilon(1) * x.epsilon(2);
    return single(p == 1 ? Atom::CP2 : Atom::CP2bar);
  }
  const Int p =
      -x.epsilon(0) * x.epsilon(1) * x.epsilon(2) * x.epsilon(3);
  const Int r02 = x.r_pair(0, 2);
  const Int r13 = x.r_pair(1, 3);
  const Int e23 = x.epsilon(2) * x.epsilon(3);
  if (p == 1) {
    if (r13 == e23 || r13 == 2 * e23)
      return ManifoldClass{{{Atom::CP2, 2}}};
    if (r13 == -e23 || r13 == -2 * e23)
      return ManifoldClass{{{Atom::CP2bar, 2}}};
  } else {
    const bool both_even = r02 % 2 == 0 && r13 % 2 == 0;
    if (both_even && (r02 == 0 || r13 == 0)) return single(Atom::S2xS2);
    if ((std::llabs(r02 % 2) == 1 && r13 == 0) ||
        (std::llabs(r13 % 2) == 1 && r02 == 0))
      return single(Atom::CP2ConnSumCP2bar);
  }
  std::ostringstream diag;
  diag << "t = 4 space outside the table's case analysis: -e0e1e2e3 = " << p
       << ", r02 = " << r02 << ", r13 = " << r13;
  throw DomainError(Errc::UnclassifiedT4, diag.str());
}

std::vector<SplitChoice> find_splits(const WeightedOrbitSpace& x) {
  const int t = x.size();
  std::vector<SplitChoice> out;
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (!edges_adjacent(i, j, t) && std::llabs(x.r_pair(i, j)) == 1)
        out.push_back({i, j, SplitChoice::Variant::Case1});
      if (!edges_adjacent(imod(i - 1, t), j, t) &&
          std::llabs(x.r_pair(i - 1, j)) == 1)
        out.push_back({i, j, SplitChoice::Variant::Case2});
    }
  }
  return out;
}

std::pair<WeightedOrbitSpace, WeightedOrbitSpace> split(
    const WeightedOrbitSpace& x, const SplitChoice& c) {
  const int t = x.size();
  const int a = c.variant == SplitChoice::Variant::Case1 ? imod(c.i, t)
                                                         : imod(c.i - 1, t);
  const int b = imod(c.j, t);
  if (edges_adjacent(a, b, t) || std::llabs(x.r_pair(a, b)) != 1)
    throw DomainError(Errc::InvalidSplit,
                      "split choice " + to_string(c) +
                          " does not satisfy its invariant");
  const int len1 = imod(b - a, t) + 1;
  const int len2 = imod(a - b, t) + 1;
  std::vector<WeightVector> edges1, edges2;
  edges1.reserve(static_cast<std::size_t>(len1));
  edges2.reserve(static_cast<std::size_t>(len2));
  for (int k = 0; k < len1; ++k) edges1.push_back(x.edge(a + k));
  for (int k = 0; k < len2; ++k) edges2.push_back(x.edge(b + k));
  return {WeightedOrbitSpace::validate(std::move(edges1)),
          WeightedOrbitSpace::validate(std::move(edges2))};
}

ManifoldClass decompose(const WeightedOrbitSpace& x,
                        const std::optional<SplitChoice>& root_split) {
  return decompose_impl(x, root_split);
}

}  // namespace t2orbit
