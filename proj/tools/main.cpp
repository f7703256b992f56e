// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: builds the nested-rectangle geometry, evaluates f,
// emits covers and dimension reports, searches parameters, renders SVG
// figures, and runs the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
// usage, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cantorflat/covers.hpp"
#include "cantorflat/dump.hpp"
#include "cantorflat/evaluator.hpp"
#include "cantorflat/figure.hpp"
#include "cantorflat/planner.hpp"
#include "cantorflat/verify.hpp"

namespace {

using namespace cantorflat;

struct CommonFlags {
  int k = 1;
  int r = 4;
  int s = 3;
  std::string eps = "1/22";
  int bits = BoundedReal::kDefaultPrecision;
  std::string schedule;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--k", flags.k, "smoothness order (>= 1)");
  cmd->add_option("--r", flags.r, "rectangles per row (>= 2)");
  cmd->add_option("--s", flags.s, "rows (>= 2)");
  cmd->add_option("--eps", flags.eps, "gap fraction as an exact rational 'p/q'");
  cmd->add_option("--bits", flags.bits, "working precision in bits");
  cmd->add_option("--schedule", flags.schedule,
                  "per-generation 'r,s,p/q' triples separated by ';'");
  cmd->add_option("--out", flags.out, "output path (stdout when omitted)");
}

ConstructionParams params_from(const CommonFlags& flags) {
  ConstructionParams params;
  params.k = flags.k;
  params.r = flags.r;
  params.s = flags.s;
  params.eps = Rational::from_string(flags.eps);
  params.precision_bits = flags.bits;
  if (!flags.schedule.empty()) {
    std::istringstream in(flags.schedule);
    std::string item;
    while (std::getline(in, item, ';')) {
      std::istringstream entry(item);
      std::string r_text, s_text, eps_text;
      if (!std::getline(entry, r_text, ',') || !std::getline(entry, s_text, ',') ||
          !std::getline(entry, eps_text)) {
        throw std::invalid_argument("schedule: expected 'r,s,p/q' entries");
      }
      params.schedule.push_back(GenerationRule{std::stoi(r_text), std::stoi(s_text),
                                               Rational::from_string(eps_text)});
    }
  }
  params.validate();
  return params;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Cantor-type constructions of smooth functions with fractal level sets"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* cmd_build = app.add_subcommand("build", "dump metrics and the rectangle/gap inventory");
  int build_depth = 3;
  add_common(cmd_build, flags);
  cmd_build->add_option("--depth", build_depth, "deepest generation to enumerate");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate f (CSV: x,value,error,class,depth)");
  std::string eval_x;
  std::string eval_tol = "1/1000000";
  std::vector<std::string> eval_grid_spec;
  add_common(cmd_eval, flags);
  cmd_eval->add_option("--x", eval_x, "abscissa as 'p/q' in [-2,2]");
  cmd_eval->add_option("--grid", eval_grid_spec, "x_lo x_hi count")->expected(3);
  cmd_eval->add_option("--tol", eval_tol, "evaluation tolerance 'p/q'");

  auto* cmd_covers = app.add_subcommand("covers", "emit a cover of A, D, or a level set");
  std::string covers_target = "A";
  int covers_gen = 3;
  std::string covers_rows;
  add_common(cmd_covers, flags);
  cmd_covers->add_option("--target", covers_target, "A | D | level | level-tight");
  cmd_covers->add_option("--gen", covers_gen, "cover generation (targets A and D)");
  cmd_covers->add_option("--rows", covers_rows, "row address 'm,m,...' (level targets)");

  auto* cmd_dims = app.add_subcommand("dims", "closed-form dimensions and slope estimates");
  int dims_lo = 3, dims_hi = 8;
  add_common(cmd_dims, flags);
  cmd_dims->add_option("--n-lo", dims_lo, "first estimation generation");
  cmd_dims->add_option("--n-hi", dims_hi, "last estimation generation");

  auto* cmd_plan = app.add_subcommand("plan", "search (r,s,eps) for a target level-set dimension");
  std::string plan_alpha = "1/2", plan_eta = "1/20";
  int plan_k = 1, plan_max_s = 64, plan_max_r = 4096, plan_bits = BoundedReal::kDefaultPrecision;
  std::string plan_out;
  cmd_plan->add_option("--alpha", plan_alpha, "target level-set dimension 'p/q' in (0,1)");
  cmd_plan->add_option("--eta", plan_eta, "slack 'p/q' > 0");
  cmd_plan->add_option("--k", plan_k, "smoothness order");
  cmd_plan->add_option("--max-s", plan_max_s, "search limit for s");
  cmd_plan->add_option("--max-r", plan_max_r, "search limit for r");
  cmd_plan->add_option("--bits", plan_bits, "working precision in bits");
  cmd_plan->add_option("--out", plan_out, "output path (stdout when omitted)");

  auto* cmd_figure = app.add_subcommand("figure", "render an SVG figure");
  std::string figure_kind = "rects";
  int figure_depth = 2;
  std::string figure_addr;
  int figure_gap = 0;
  bool figure_true_scale = false;
  add_common(cmd_figure, flags);
  cmd_figure->add_option("--kind", figure_kind, "rects | link");
  cmd_figure->add_option("--depth", figure_depth, "deepest generation (kind=rects)");
  cmd_figure->add_option("--addr", figure_addr, "parent address 'm.p;m.p' (kind=link)");
  cmd_figure->add_option("--gap", figure_gap, "gap index under the parent (kind=link)");
  cmd_figure->add_flag("--true-scale", figure_true_scale,
                       "map rectangle heights faithfully instead of exaggerating");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
  int verify_depth = 6;
  std::string verify_geometry;
  bool inject_negative_b = false;
  add_common(cmd_verify, flags);
  cmd_verify->add_option("--depth", verify_depth, "check depth");
  cmd_verify->add_option("--geometry", verify_geometry,
                         "cross-check a geometry.json dump against recomputed metrics");
  cmd_verify->add_flag("--inject-fault", inject_negative_b)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (cmd_build->parsed()) {
    const Construction cons(params_from(flags));
    emit(flags.out, geometry_dump(cons, build_depth).dump(2) + "\n");
    return 0;
  }

  if (cmd_eval->parsed()) {
    const Construction cons(params_from(flags));
    const Rational tol = Rational::from_string(eval_tol);
    std::vector<std::pair<Rational, EvalResult>> rows;
    if (!eval_grid_spec.empty()) {
      rows = evaluate_grid(cons, Rational::from_string(eval_grid_spec[0]),
                           Rational::from_string(eval_grid_spec[1]),
                           std::stoi(eval_grid_spec[2]), tol);
    } else if (!eval_x.empty()) {
      const Rational x = Rational::from_string(eval_x);
      rows.emplace_back(x, evaluate(cons, x, tol));
    } else {
      throw std::invalid_argument("eval: pass --x or --grid");
    }
    emit(flags.out, eval_csv(rows));
    return 0;
  }

  if (cmd_covers->parsed()) {
    const Construction cons(params_from(flags));
    CoverSet cover;
    if (covers_target == "A") {
      cover = cover_A(cons, covers_gen);
    } else if (covers_target == "D") {
      cover = cover_D(cons, covers_gen);
    } else if (covers_target == "level" || covers_target == "level-tight") {
      cover = cover_level_set(cons, RowAddress::from_string(covers_rows),
                              covers_target == "level-tight");
    } else {
      throw std::invalid_argument("covers: unknown target '" + covers_target + "'");
    }
    emit(flags.out, cover_dump(cover).dump(2) + "\n");
    return 0;
  }

  if (cmd_dims->parsed()) {
    const Construction cons(params_from(flags));
    const DimensionReport report = closed_form_dimensions(cons, dims_lo, dims_hi);
    emit(flags.out, dims_dump(cons, report, dims_lo, dims_hi).dump(2) + "\n");
    return 0;
  }

  if (cmd_plan->parsed()) {
    PlanRequest request;
    request.k = plan_k;
    request.alpha_target = Rational::from_string(plan_alpha);
    request.eta = Rational::from_string(plan_eta);
    request.max_s = plan_max_s;
    request.max_r = plan_max_r;
    request.precision_bits = plan_bits;
    const PlanResult result = plan(request);
    emit(plan_out, plan_dump(result).dump(2) + "\n");
    return 0;
  }

  if (cmd_figure->parsed()) {
    const Construction cons(params_from(flags));
    FigureOptions options;
    options.true_scale = figure_true_scale;
    std::string svg;
    if (figure_kind == "rects") {
      svg = figure_rects_svg(cons, figure_depth, options);
    } else if (figure_kind == "link") {
      svg = figure_link_svg(cons, RectAddress::from_string(figure_addr), figure_gap, options);
    } else {
      throw std::invalid_argument("figure: unknown kind '" + figure_kind + "'");
    }
    emit(flags.out, svg);
    return 0;
  }

  if (cmd_verify->parsed()) {
    const Construction cons(params_from(flags));
    VerifyOptions options;
    options.depth = verify_depth;
    options.inject_negative_b = inject_negative_b;
    ValidationReport report = verify_suite(cons, options);

    if (!verify_geometry.empty()) {
      std::ifstream in(verify_geometry);
      if (!in) throw IoError("cannot read '" + verify_geometry + "'");
      Json dumped = Json::parse(in);
      const int depth = static_cast<int>(dumped["metrics"].size());
      const Json fresh = geometry_dump(cons, depth)["metrics"];
      const bool same = fresh == dumped["metrics"];
      report.checks.push_back(ValidationCheck{
          "geometry-roundtrip", depth, same,
          same ? "" : "serialized metrics differ from recomputed metrics"});
    }

    for (const ValidationCheck& c : report.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (c.generation > 0) std::cout << " (n=" << c.generation << ")";
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    if (!flags.out.empty()) {
      write_file_atomic(flags.out, verify_dump(report).dump(2) + "\n");
    }
    return report.all_pass() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PlanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
