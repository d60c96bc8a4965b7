#include "t2orbit/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace t2orbit {

namespace {

void check_bounds(const EnumBounds& b) {
  if (b.t_max < 2 || b.w_max < 1)
    throw DomainError(Errc::InvalidArgument,
                      "bounds require t_max >= 2 and w_max >= 1");
}

std::vector<WeightVector> primitive_candidates(Int w_max) {
  std::vector<WeightVector> out;
  for (Int m = -w_max; m <= w_max; ++m)
    for (Int n = -w_max; n <= w_max; ++n)
      if (is_primitive({m, n})) out.push_back({m, n});
  return out;  // already sorted lexicographically
}

bool within(const WeightedOrbitSpace& x, Int w_max) {
  for (const WeightVector& e : x.edges())
    if (std::llabs(e.m) > w_max || std::llabs(e.n) > w_max) return false;
  return true;
}

struct Dfs {
  const EnumBounds& bounds;
  const std::function<void(const WeightedOrbitSpace&)>& yield;
  std::vector<WeightVector> candidates;
  std::vector<WeightVector> stack;
  std::set<std::vector<WeightVector>> seen;

  void run() {
    stack = {{1, 0}, {0, 1}};
    extend();
  }

  void extend() {
    const Int closing = det2(stack.back(), stack.front());
    if (closing == 1 || closing == -1) emit();
    if (static_cast<int>(stack.size()) == bounds.t_max) return;
    for (const WeightVector& next : candidates) {
      const Int eps = det2(stack.back(), next);
      if (eps != 1 && eps != -1) continue;
      stack.push_back(next);
      extend();
      stack.pop_back();
    }
  }

  void emit() {
    const WeightedOrbitSpace canon =
        canonical_form(WeightedOrbitSpace::validate(stack));
    if (!within(canon, bounds.w_max)) return;
    if (seen.insert(canon.edges()).second) yield(canon);
  }
};

}  // namespace

void enumerate_canonical(
    const EnumBounds& bounds,
    const std::function<void(const WeightedOrbitSpace&)>& yield) {
  check_bounds(bounds);
  Dfs dfs{bounds, yield, primitive_candidates(bounds.w_max), {}, {}};
  dfs.run();
}

std::vector<WeightedOrbitSpace> enumerate_canonical(const EnumBounds& bounds) {
  std::vector<WeightedOrbitSpace> out;
  enumerate_canonical(bounds,
                      [&](const WeightedOrbitSpace& x) { out.push_back(x); });
  return out;
}

SurveyReport survey(const EnumBounds& bounds, int jobs) {
  check_bounds(bounds);
  const std::vector<WeightedOrbitSpace> spaces = enumerate_canonical(bounds);

  struct Outcome {
    bool admissible = false;
    bool classified = false;
    ManifoldClass cls;
    std::string incident_kind;
    std::string incident_detail;
  };
  std::vector<Outcome> outcomes(spaces.size());

  auto process = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      Outcome& out = outcomes[idx];
      out.admissible = ric2_admissible(spaces[idx]).admissible;
      try {
        out.cls = decompose(spaces[idx]);
        out.classified = true;
      } catch (const DomainError& err) {
        if (err.code() != Errc::UnclassifiedT4 &&
            err.code() != Errc::NoSplitAvailable)
          throw;
        out.incident_kind = err.code_name();
        out.incident_detail = err.what();
      }
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1 || spaces.size() < 2) {
    process(0, spaces.size());
  } else {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), spaces.size());
    std::vector<std::thread> pool;
    const std::size_t chunk = (spaces.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(begin + chunk, spaces.size());
      if (begin < end) pool.emplace_back(process, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  SurveyReport report;
  report.bounds = bounds;
  std::map<std::pair<int, ManifoldClass>, SurveyRow> rows;
  for (std::size_t idx = 0; idx < spaces.size(); ++idx) {
    const WeightedOrbitSpace& x = spaces[idx];
    const Outcome& out = outcomes[idx];
    if (!out.classified) {
      report.incidents.push_back(
          {out.incident_kind, out.incident_detail, x.edges()});
      if (out.admissible) report.theorem_dim4_holds = false;
      continue;
    }
    SurveyRow& row = rows[{x.size(), out.cls}];
    row.t = x.size();
    row.cls = out.cls;
    row.count += 1;
    if (out.admissible) {
      row.admissible_count += 1;
      const bool single_kind = out.cls.summands.size() == 1;
      const Atom kind =
          single_kind ? out.cls.summands.begin()->first : Atom::S2xS2;
      const bool projective_or_sphere =
          single_kind && (kind == Atom::S4 || kind == Atom::CP2 ||
                          kind == Atom::CP2bar);
      if (!projective_or_sphere) report.theorem_dim4_holds = false;
    }
  }
  for (auto& [key, row] : rows) report.rows.push_back(std::move(row));
  return report;
}

void to_json(nlohmann::json& j, const SurveyReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const SurveyRow& row : report.rows)
    classes.push_back({{"t", row.t},
                       {"class", row.cls},
                       {"count", row.count},
                       {"admissible_count", row.admissible_count}});
  nlohmann::json incidents = nlohmann::json::array();
  for (const SurveyIncident& inc : report.incidents) {
    nlohmann::json edges = nlohmann::json::array();
    for (const WeightVector& e : inc.edges) edges.push_back({e.m, e.n});
    incidents.push_back(
        {{"kind", inc.kind}, {"detail", inc.detail}, {"edges", edges}});
  }
  j = {{"bounds",
        {{"t_max", report.bounds.t_max}, {"w_max", report.bounds.w_max}}},
       {"classes", classes},
       {"incidents", incidents},
       {"theorem_dim4_holds", report.theorem_dim4_holds}};
}

}  // namespace t2orbit
