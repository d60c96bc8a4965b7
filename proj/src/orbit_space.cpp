#include "t2orbit/orbit_space.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace t2orbit {

namespace {

int imod(int a, int t) {
  int r = a % t;
  return r < 0 ? r + t : r;
}

}  // namespace

WeightedOrbitSpace WeightedOrbitSpace::validate(
    std::vector<WeightVector> edges) {
  const int t = static_cast<int>(edges.size());
  if (t < 2)
    throw DomainError(Errc::TooShort,
                      "need at least 2 edges, got " + std::to_string(t));
  for (int i = 0; i < t; ++i) {
    if (!is_primitive(edges[i]))
      throw DomainError(Errc::NotPrimitive,
                        "edge " + std::to_string(i) + " = (" +
                            std::to_string(edges[i].m) + "," +
                            std::to_string(edges[i].n) + ") is not primitive");
  }
  for (int i = 0; i < t; ++i) {
    const Int eps = det2(edges[imod(i - 1, t)], edges[i]);
    if (eps != 1 && eps != -1)
      throw DomainError(Errc::IllegalDeterminant,
                        "vertex " + std::to_string(i) + " has determinant " +
                            std::to_string(eps) + ", expected +-1");
  }
  return WeightedOrbitSpace(std::move(edges));
}

const WeightVector& WeightedOrbitSpace::edge(int i) const {
  return edges_[imod(i, size())];
}

Int WeightedOrbitSpace::epsilon(int i) const {
  return det2(edge(i - 1), edge(i));
}

Int WeightedOrbitSpace::r_pair(int i, int j) const {
  return det2(edge(i), edge(j));
}

bool edges_adjacent(int i, int j, int t) {
  const int d = imod(i - j, t);
  return d == 0 || d == 1 || d == t - 1;
}

AdmissibilityReport ric2_admissible(const WeightedOrbitSpace& x) {
  AdmissibilityReport report;
  const int t = x.size();
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (edges_adjacent(i, j, t)) continue;
      if (x.r_pair(i, j) == 0) report.witnesses.emplace_back(i, j);
    }
  }
  report.admissible = report.witnesses.empty();
  return report;
}

WeightedOrbitSpace canonical_form(const WeightedOrbitSpace& x) {
  const int t = x.size();
  std::vector<WeightVector> best;
  std::vector<WeightVector> cand(static_cast<std::size_t>(t));
  for (int start = 0; start < t; ++start) {
    for (int dir : {1, -1}) {
      for (Int s0 : {Int{1}, Int{-1}}) {
        for (Int s1 : {Int{1}, Int{-1}}) {
          WeightVector e0 = x.edge(start);
          WeightVector e1 = x.edge(start + dir);
          if (s0 < 0) e0 = negate(e0);
          if (s1 < 0) e1 = negate(e1);
          // Adjacent edges always have |det| = 1, so this never throws.
          const LatticeTransform tf = pair_basis_transform(e0, e1);
          for (int k = 0; k < t; ++k)
            cand[static_cast<std::size_t>(k)] =
                sign_normalized(apply_transform(tf, x.edge(start + dir * k)));
          if (best.empty() || cand < best) best = cand;
        }
      }
    }
  }
  return WeightedOrbitSpace::validate(std::move(best));
}

WeightedOrbitSpace orientation_reverse(const WeightedOrbitSpace& x) {
  std::vector<WeightVector> rev(x.edges().rbegin(), x.edges().rend());
  return WeightedOrbitSpace::validate(std::move(rev));
}

WeightedOrbitSpace parse_orbit_space(std::istream& in) {
  std::vector<WeightVector> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first[0] == '#') continue;
    Int m = 0, n = 0;
    std::istringstream vs(line);
    std::string rest;
    if (!(vs >> m >> n) || (vs >> rest))
      throw DomainError(Errc::ParseError,
                        "line " + std::to_string(lineno) +
                            ": expected two integers, got \"" + line + "\"");
    edges.push_back({m, n});
  }
  return WeightedOrbitSpace::validate(std::move(edges));
}

WeightedOrbitSpace parse_orbit_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError(Errc::ParseError, "cannot open file: " + path);
  return parse_orbit_space(in);
}

std::string format_orbit_space(const WeightedOrbitSpace& x) {
  std::ostringstream out;
  for (const WeightVector& e : x.edges()) out << e.m << ' ' << e.n << '\n';
  return out.str();
}

}  // namespace t2orbit
