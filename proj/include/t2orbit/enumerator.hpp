#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "t2orbit/classifier.hpp"
#include "t2orbit/orbit_space.hpp"

namespace t2orbit {

struct EnumBounds {
  int t_max = 2;   // max vertex count, >= 2
  Int w_max = 1;   // max |m|, |n| over the canonical representative, >= 1
};

/// Yields one canonical representative per equivalence class of valid
/// spaces with t <= t_max whose canonical form has all entries bounded by
/// w_max. Depth-first from the fixed prefix (1,0),(0,1), deterministic
/// stream order.
void enumerate_canonical(const EnumBounds& bounds,
                         const std::function<void(const WeightedOrbitSpace&)>&
                             yield);

std::vector<WeightedOrbitSpace> enumerate_canonical(const EnumBounds& bounds);

struct SurveyIncident {
  std::string kind;    // "UnclassifiedT4" or "NoSplitAvailable"
  std::string detail;
  std::vector<WeightVector> edges;
};

struct SurveyRow {
  int t = 0;
  ManifoldClass cls;
  int count = 0;
  int admissible_count = 0;
};

struct SurveyReport {
  EnumBounds bounds;
  std::vector<SurveyRow> rows;  // sorted by (t, class)
  std::vector<SurveyIncident> incidents;
  bool theorem_dim4_holds = true;
};

/// Runs validate -> ric2_admissible -> decompose over the full enumeration
/// and aggregates. Classifier failures become incidents, not exceptions.
/// theorem_dim4_holds records whether every admissible space decomposed to
/// {S4} or to copies of a single projective atom.
SurveyReport survey(const EnumBounds& bounds, int jobs = 1);

void to_json(nlohmann::json& j, const SurveyReport& report);

}  // namespace t2orbit
