// Command-line front end for the weighted orbit space toolkit.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "t2orbit/classifier.hpp"
#include "t2orbit/enumerator.hpp"
#include "t2orbit/orbit_space.hpp"
#include "t2orbit/rigidity.hpp"

namespace {

using nlohmann::json;
using namespace t2orbit;

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.json())
    std::cout << doc.dump() << '\n';
  else
    std::cout << text;
}

SplitChoice parse_split_spec(const std::string& spec) {
  std::istringstream in(spec);
  SplitChoice choice;
  char c1 = 0, c2 = 0;
  std::string variant;
  if (!(in >> choice.i >> c1 >> choice.j >> c2 >> variant) || c1 != ',' ||
      c2 != ',')
    throw DomainError(Errc::InvalidArgument,
                      "expected \"i,j,variant\", got \"" + spec + "\"");
  if (variant == "case1")
    choice.variant = SplitChoice::Variant::Case1;
  else if (variant == "case2")
    choice.variant = SplitChoice::Variant::Case2;
  else
    throw DomainError(Errc::InvalidArgument,
                      "variant must be case1 or case2, got \"" + variant +
                          "\"");
  return choice;
}

rigidity::BettiVector parse_betti(const std::string& spec) {
  rigidity::BettiVector out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.b.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw DomainError(Errc::InvalidArgument,
                        "bad Betti entry \"" + item + "\"");
    }
  }
  if (out.b.empty())
    throw DomainError(Errc::InvalidArgument, "empty Betti vector");
  return out;
}

json space_to_json(const WeightedOrbitSpace& x) {
  json edges = json::array();
  for (const WeightVector& e : x.edges()) edges.push_back({e.m, e.n});
  return edges;
}

std::string space_to_line(const WeightedOrbitSpace& x) {
  std::string out;
  for (const WeightVector& e : x.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.m) + ',' + std::to_string(e.n);
  }
  return out;
}

void cmd_validate(const Options& opt, const std::string& path) {
  const WeightedOrbitSpace x = parse_orbit_space_file(path);
  emit(opt, {{"valid", true}, {"t", x.size()}},
       "valid weighted orbit space, t = " + std::to_string(x.size()) + "\n");
}

void cmd_classify(const Options& opt, const std::string& path) {
  const WeightedOrbitSpace x = parse_orbit_space_file(path);
  const ManifoldClass cls = classify_small(x);
  emit(opt, {{"class", cls}},
       cls.to_string() + " (chi = " + std::to_string(cls.chi()) + ")\n");
}

void cmd_admissible(const Options& opt, const std::string& path) {
  const WeightedOrbitSpace x = parse_orbit_space_file(path);
  const AdmissibilityReport report = ric2_admissible(x);
  json witnesses = json::array();
  std::string text =
      report.admissible ? "admissible\n" : "inadmissible; witnesses:";
  for (const auto& [i, j] : report.witnesses) {
    witnesses.push_back({i, j});
    text += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  if (!report.admissible) text += "\n";
  emit(opt, {{"admissible", report.admissible}, {"witnesses", witnesses}},
       text);
}

void cmd_decompose(const Options& opt, const std::string& path,
                   const std::string& force_split) {
  const WeightedOrbitSpace x = parse_orbit_space_file(path);
  std::optional<SplitChoice> root;
  if (!force_split.empty()) root = parse_split_spec(force_split);
  const ManifoldClass cls = decompose(x, root);
  emit(opt, {{"class", cls}},
       cls.to_string() + " (chi = " + std::to_string(cls.chi()) + ")\n");
}

void cmd_enumerate(const Options& opt, const EnumBounds& bounds) {
  const std::vector<WeightedOrbitSpace> spaces = enumerate_canonical(bounds);
  json list = json::array();
  std::string text;
  for (const WeightedOrbitSpace& x : spaces) {
    list.push_back(space_to_json(x));
    text += space_to_line(x) + "\n";
  }
  emit(opt,
       {{"bounds", {{"t_max", bounds.t_max}, {"w_max", bounds.w_max}}},
        {"count", spaces.size()},
        {"spaces", list}},
       text);
}

void cmd_survey(const Options& opt, const EnumBounds& bounds, int jobs) {
  const SurveyReport report = survey(bounds, jobs);
  std::ostringstream text;
  text << "survey t_max=" << bounds.t_max << " w_max=" << bounds.w_max
       << "\n";
  for (const SurveyRow& row : report.rows)
    text << "  t=" << row.t << "  " << row.cls.to_string() << "  count "
         << row.count << "  admissible " << row.admissible_count << "\n";
  text << "incidents: " << report.incidents.size() << "\n";
  text << "theorem_dim4_holds: "
       << (report.theorem_dim4_holds ? "true" : "false") << "\n";
  emit(opt, json(report), text.str());
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Classification calculus for T^2-actions on simply connected "
               "4-manifolds via weighted orbit spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string path;
  std::string force_split;
  EnumBounds bounds{4, 2};
  int jobs = 1;

  auto* validate_cmd =
      app.add_subcommand("validate", "Validate an orbit-space file");
  validate_cmd->add_option("file", path, "Orbit-space file")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "Table lookup for t <= 4");
  classify_cmd->add_option("file", path, "Orbit-space file")->required();

  auto* admissible_cmd =
      app.add_subcommand("admissible", "Ric_2 admissibility test");
  admissible_cmd->add_option("file", path, "Orbit-space file")->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Connected-sum decomposition");
  decompose_cmd->add_option("file", path, "Orbit-space file")->required();
  decompose_cmd->add_option("--force-split", force_split,
                            "Root split override, \"i,j,variant\"");

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "Enumerate canonical spaces within bounds");
  enumerate_cmd->add_option("--t-max", bounds.t_max, "Max vertex count");
  enumerate_cmd->add_option("--w-max", bounds.w_max, "Max weight entry");

  auto* survey_cmd =
      app.add_subcommand("survey", "Classify and aggregate the enumeration");
  survey_cmd->add_option("--t-max", bounds.t_max, "Max vertex count");
  survey_cmd->add_option("--w-max", bounds.w_max, "Max weight entry");
  survey_cmd->add_option("--jobs", jobs, "Worker threads");

  auto* calc = app.add_subcommand("calc", "Arithmetic lemma calculators");
  calc->require_subcommand(1);

  int n = 0, k = 0, d = 0, d1 = 0, d2 = 0, delta = 0, l = 0;
  long long b2 = 0, bb = 0, chi_triple = 1;
  std::string ambient_spec;
  std::vector<std::string> fixed_specs;
  std::vector<long long> chis;

  auto* symrank = calc->add_subcommand("symrank", "Symmetry-rank bound");
  symrank->add_option("--n", n, "Dimension")->required();
  symrank->add_option("--k", k, "Curvature index")->required();

  auto* conn = calc->add_subcommand("connectedness",
                                    "Connectedness degree of an inclusion");
  conn->add_option("--n", n, "Ambient dimension")->required();
  conn->add_option("--d", d, "Codimension")->required();
  conn->add_option("--k", k, "Curvature index")->required();
  conn->add_option("--delta", delta, "Principal orbit dimension");

  auto* inter = calc->add_subcommand(
      "intersection", "Connectedness degree of an intersection");
  inter->add_option("--n", n, "Ambient dimension")->required();
  inter->add_option("--d1", d1, "First codimension")->required();
  inter->add_option("--d2", d2, "Second codimension")->required();
  inter->add_option("--k", k, "Curvature index")->required();

  auto* period =
      calc->add_subcommand("periodicity", "Cup-product periodicity ranges");
  period->add_option("--n", n, "Ambient dimension")->required();
  period->add_option("--d", d, "Codimension")->required();
  period->add_option("--l", l, "Connectivity gap")->required();

  auto* trich = calc->add_subcommand(
      "trichotomy", "Betti vector under degree-2 periodicity");
  trich->add_option("--n", n, "Dimension (even)")->required();
  trich->add_option("--b2", b2, "Second Betti number")->required();

  auto* conner = calc->add_subcommand("conner", "Betti Number Lemma check");
  conner->add_option("--ambient", ambient_spec, "Ambient Betti numbers, comma-separated")
      ->required();
  conner->add_option("--fixed", fixed_specs,
                     "Fixed-set Betti numbers (repeatable; components are summed)")
      ->required();

  auto* b2bound = calc->add_subcommand(
      "b2bound", "Inclusion-exclusion bound on b2 in dimension 6");
  b2bound->add_option("--b", bb, "Second Betti number")->required();
  b2bound->add_option("--chi-triple", chi_triple,
                      "chi of the triple intersection");

  auto* orderbound = calc->add_subcommand(
      "orderbound", "Divisibility bound on a free action's group order");
  orderbound->add_option("--chi", chis, "Euler characteristics")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (validate_cmd->parsed()) cmd_validate(opt, path);
  if (classify_cmd->parsed()) cmd_classify(opt, path);
  if (admissible_cmd->parsed()) cmd_admissible(opt, path);
  if (decompose_cmd->parsed()) cmd_decompose(opt, path, force_split);
  if (enumerate_cmd->parsed()) cmd_enumerate(opt, bounds);
  if (survey_cmd->parsed()) cmd_survey(opt, bounds, jobs);

  if (symrank->parsed()) {
    const int bound = rigidity::symmetry_rank_bound({n, k});
    emit(opt, {{"bound", bound}}, std::to_string(bound) + "\n");
  }
  if (conn->parsed()) {
    const int degree = rigidity::connectedness_degree(n, d, k, delta);
    emit(opt, {{"degree", degree}}, std::to_string(degree) + "\n");
  }
  if (inter->parsed()) {
    const int degree = rigidity::intersection_connectedness(n, d1, d2, k);
    emit(opt, {{"degree", degree}}, std::to_string(degree) + "\n");
  }
  if (period->parsed()) {
    const rigidity::PeriodicityRanges r = rigidity::periodicity_ranges(n, d, l);
    std::ostringstream text;
    text << "surjective: " << r.surjective_min << " <= i <= "
         << r.surjective_max << "\ninjective: " << r.injective_min
         << " <= i <= " << r.injective_max << "\n"
         << (r.empty ? "(both ranges empty)\n" : "");
    emit(opt,
         {{"surjective", {{"min", r.surjective_min}, {"max", r.surjective_max}}},
          {"injective", {{"min", r.injective_min}, {"max", r.injective_max}}},
          {"empty", r.empty}},
         text.str());
  }
  if (trich->parsed()) {
    const rigidity::BettiVector v =
        rigidity::periodic_cohomology_trichotomy(n, b2);
    std::string text;
    for (long long x : v.b) text += (text.empty() ? "" : ",") + std::to_string(x);
    emit(opt, {{"betti", v.b}, {"chi", v.euler_characteristic()}},
         text + "\n");
  }
  if (conner->parsed()) {
    const rigidity::BettiVector ambient = parse_betti(ambient_spec);
    rigidity::BettiVector fixed;
    for (const std::string& spec : fixed_specs)
      fixed = betti_sum(fixed, parse_betti(spec));
    const bool ok = rigidity::conner_check(ambient, fixed);
    emit(opt, {{"satisfied", ok}}, std::string(ok ? "true" : "false") + "\n");
  }
  if (b2bound->parsed()) {
    const bool ok = rigidity::dim6_b2_bound(bb, chi_triple);
    emit(opt, {{"satisfied", ok}}, std::string(ok ? "true" : "false") + "\n");
  }
  if (orderbound->parsed()) {
    const long long bound = rigidity::free_action_order_bound(chis);
    emit(opt, {{"bound", bound}}, std::to_string(bound) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const DomainError& err) {
    bool json_mode = false;
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--format=json" ||
          (arg == "--format" && i + 1 < argc &&
           std::string(argv[i + 1]) == "json"))
        json_mode = true;
    }
    if (json_mode) {
      json doc = {{"error",
                   {{"code", err.code_name()}, {"detail", err.what()}}}};
      std::cout << doc.dump() << '\n';
    } else {
      std::cerr << "error [" << err.code_name() << "]: " << err.what()
                << '\n';
    }
    return 1;
  }
}
