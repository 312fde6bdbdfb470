// numwalk: turn digit expansions of rationals into lattice walks and report
// their invariants. Exit codes: 0 success (classify: Closed), 10 classify:
// Drift, 3 witness search exhausted its budget, 2 any error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "numwalk/classify.hpp"
#include "numwalk/digits.hpp"
#include "numwalk/equivalence.hpp"
#include "numwalk/io.hpp"
#include "numwalk/rational.hpp"
#include "numwalk/survey.hpp"
#include "numwalk/topology.hpp"
#include "numwalk/walk.hpp"

namespace {

using namespace numwalk;

constexpr int kExitDrift = 10;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

Point parse_center(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--center expects \"a,b\" in lattice coordinates");
  std::size_t used1 = 0, used2 = 0;
  const std::string left = text.substr(0, comma), right = text.substr(comma + 1);
  const std::int64_t a = std::stoll(left, &used1);
  const std::int64_t b = std::stoll(right, &used2);
  if (used1 != left.size() || used2 != right.size())
    throw std::invalid_argument("--center expects \"a,b\" in lattice coordinates");
  return {a, b};
}

std::vector<Digit> read_digits_file(const std::string& path, int base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open digits file: " + path);
  std::vector<Digit> digits;
  char c;
  while (in.get(c)) {
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
    if (c < '0' || c > '9') throw std::runtime_error("digits file holds a non-digit byte");
    const int z = c - '0';
    if (z >= base) throw std::runtime_error("digit " + std::string(1, c) + " is out of range for base " +
                                            std::to_string(base));
    digits.push_back(static_cast<Digit>(z));
  }
  return digits;
}

// Shared input shape of walk/render/winding: either a rational or a digits
// file drives the path.
struct PathArgs {
  std::string r;
  std::string digits_file;
  int base = 2;
  int turn_sign = 1;
  std::int64_t steps = -1;
};

void add_path_options(CLI::App* cmd, PathArgs& a, bool with_digits_file) {
  cmd->add_option("r", a.r, "rational in [0,1) as p/q");
  cmd->add_option("--base", a.base, "expansion base (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();
  cmd->add_option("--turn-sign", a.turn_sign, "+1 keeps the standard turns, -1 swaps left and right")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  cmd->add_option("--steps", a.steps, "number of digits to walk");
  if (with_digits_file)
    cmd->add_option("--digits-file", a.digits_file, "file with one ASCII digit per byte instead of r");
}

Path make_path(const PathArgs& a) {
  const TurnMap tm = TurnMap::standard(a.base, a.turn_sign);
  if (!a.digits_file.empty()) {
    if (!a.r.empty()) throw std::invalid_argument("give either r or --digits-file, not both");
    std::vector<Digit> digits = read_digits_file(a.digits_file, a.base);
    const std::int64_t n = a.steps >= 0 ? a.steps : static_cast<std::int64_t>(digits.size());
    BufferSource source(std::move(digits), a.base);
    return walk_prefix(source, n, tm);
  }
  if (a.r.empty()) throw std::invalid_argument("need a rational r or --digits-file");
  if (a.steps < 0) throw std::invalid_argument("--steps is required when walking a rational");
  return walk_prefix(expand(parse_rational(a.r), a.base), a.steps, tm);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"number walks: digit expansions of rationals as turtle paths on integer lattices"};
  app.require_subcommand(1);

  // expand
  std::string expand_r;
  int expand_base = 2;
  auto* cmd_expand = app.add_subcommand("expand", "canonical digit expansion, written preperiod|period");
  cmd_expand->add_option("r", expand_r, "rational in [0,1) as p/q")->required();
  cmd_expand->add_option("--base", expand_base, "expansion base (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();

  // classify
  std::string cls_r, cls_format = "csv";
  int cls_base = 2, cls_sign = 1;
  auto* cmd_classify = app.add_subcommand("classify", "closed-or-drift verdict with the walk invariants");
  cmd_classify->add_option("r", cls_r, "rational in [0,1) as p/q")->required();
  cmd_classify->add_option("--base", cls_base, "expansion base (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();
  cmd_classify->add_option("--turn-sign", cls_sign, "+1 standard turns, -1 mirrored")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  cmd_classify->add_option("--format", cls_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();

  // walk / render / winding / torsion
  PathArgs walk_args, render_args, winding_args, torsion_args;
  auto* cmd_walk = app.add_subcommand("walk", "walk states as CSV: step,a,b,dir,R");
  add_path_options(cmd_walk, walk_args, true);
  auto* cmd_render = app.add_subcommand("render", "walk as an SVG polyline");
  add_path_options(cmd_render, render_args, true);
  std::string winding_center = "0,0";
  auto* cmd_winding = app.add_subcommand("winding", "winding profile around a lattice point: step,winding");
  add_path_options(cmd_winding, winding_args, true);
  cmd_winding->add_option("--center", winding_center, "lattice point a,b the ray starts from")
      ->capture_default_str();
  auto* cmd_torsion = app.add_subcommand("torsion", "turn tally per step: step,R,torsion");
  add_path_options(cmd_torsion, torsion_args, false);

  // equiv
  std::string eq_r1, eq_r2, eq_escape_m;
  int eq_base = 2, eq_sign = 1, eq_budget = 4;
  std::int64_t eq_max_pos = 16;
  auto* cmd_equiv = app.add_subcommand("equiv", "search a run-surgery witness between two rationals");
  cmd_equiv->add_option("r1", eq_r1, "rational in [0,1) as p/q")->required();
  cmd_equiv->add_option("r2", eq_r2, "rational in [0,1) as p/q");
  cmd_equiv->add_option("--base", eq_base, "expansion base (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();
  cmd_equiv->add_option("--turn-sign", eq_sign, "+1 standard turns, -1 mirrored")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  cmd_equiv->add_option("--budget", eq_budget, "total surgery ops to try")->capture_default_str();
  cmd_equiv->add_option("--max-position", eq_max_pos, "deepest digit position ops may touch")
      ->capture_default_str();
  cmd_equiv->add_option("--escape-m", eq_escape_m,
                        "instead of matching r2, hunt for an equivalent value whose walk leaves radius M");

  // survey
  SurveyOptions survey_opt;
  std::string survey_format = "csv";
  auto* cmd_survey = app.add_subcommand("survey", "classify every reduced p/q up to a denominator bound");
  cmd_survey->add_option("--max-q", survey_opt.max_q, "largest denominator")->required();
  cmd_survey->add_option("--base", survey_opt.base, "expansion base (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();
  cmd_survey->add_option("--turn-sign", survey_opt.turn_sign, "+1 standard turns, -1 mirrored")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  cmd_survey->add_option("--jobs", survey_opt.jobs, "worker threads; output is identical for any count")
      ->capture_default_str();
  cmd_survey->add_option("--format", survey_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();

  // recurrence
  std::string rec_r, rec_far, rec_near;
  int rec_base = 2, rec_sign = 1;
  std::int64_t rec_horizon = 0;
  auto* cmd_recurrence =
      app.add_subcommand("recurrence", "first far excursion that returns near the start");
  cmd_recurrence->add_option("r", rec_r, "rational in [0,1) as p/q")->required();
  cmd_recurrence->add_option("--far", rec_far, "excursion distance (rational)")->required();
  cmd_recurrence->add_option("--near", rec_near, "return distance (rational)")->required();
  cmd_recurrence->add_option("--horizon", rec_horizon, "steps to scan")->required();
  cmd_recurrence->add_option("--base", rec_base, "expansion base (2, 3 or 5)")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();
  cmd_recurrence->add_option("--turn-sign", rec_sign, "+1 standard turns, -1 mirrored")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*cmd_expand) {
      std::cout << expand(parse_rational(expand_r), expand_base).to_string() << "\n";
    } else if (*cmd_classify) {
      const TurnMap tm = TurnMap::standard(cls_base, cls_sign);
      const Rational r = parse_rational(cls_r);
      const ClassifiedWalk w = classify(r, tm);
      if (cls_format == "csv")
        std::cout << classification_csv_header() << "\n" << classification_csv_row(r, w) << "\n";
      else
        std::cout << classification_jsonl(r, w) << "\n";
      return w.c.kind == WalkKind::Drift ? kExitDrift : 0;
    } else if (*cmd_walk) {
      std::cout << path_csv(make_path(walk_args));
    } else if (*cmd_render) {
      std::cout << render_svg(make_path(render_args));
    } else if (*cmd_winding) {
      const Path p = make_path(winding_args);
      std::cout << winding_csv(winding_profile(p, parse_center(winding_center)));
    } else if (*cmd_torsion) {
      std::cout << torsion_csv(make_path(torsion_args));
    } else if (*cmd_equiv) {
      const TurnMap tm = TurnMap::standard(eq_base, eq_sign);
      const Rational r1 = parse_rational(eq_r1);
      if (!eq_escape_m.empty()) {
        const auto hit = escape_search(r1, parse_rational(eq_escape_m), eq_budget, tm);
        if (!hit) {
          std::cout << "unknown\n";
          return kExitUnknown;
        }
        std::cout << "escape " << format_rational(hit->value) << " step " << hit->escape_step << "\n";
        if (!hit->witness.ops.empty()) std::cout << to_string(hit->witness) << "\n";
        return 0;
      }
      if (eq_r2.empty()) throw std::invalid_argument("equiv needs r2 (or --escape-m)");
      SearchBudget budget;
      budget.max_ops = eq_budget;
      budget.max_position = eq_max_pos;
      const auto witness = equivalent_witness(r1, parse_rational(eq_r2), budget, tm);
      if (!witness) {
        std::cout << "unknown\n";
        return kExitUnknown;
      }
      std::cout << "equivalent\n";
      if (!witness->ops.empty()) std::cout << to_string(*witness) << "\n";
      return 0;
    } else if (*cmd_survey) {
      survey_opt.jsonl = survey_format == "jsonl";
      std::cout << survey(survey_opt);
    } else if (*cmd_recurrence) {
      const TurnMap tm = TurnMap::standard(rec_base, rec_sign);
      const ClassifiedWalk w = classify(parse_rational(rec_r), tm);
      const RecurrenceReport rep =
          recurrence_stats(w, parse_rational(rec_far), parse_rational(rec_near), rec_horizon);
      std::cout << "far_step,return_step,horizon,max_norm_sq_seen\n";
      if (rep.witness)
        std::cout << rep.witness->first << ',' << rep.witness->second;
      else
        std::cout << ',';
      std::cout << ',' << rep.horizon << ',' << rep.max_norm_sq_seen << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
