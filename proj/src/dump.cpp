// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/dump.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace cantorflat {

Json json_of(const Rational& q) { return q.str(); }

Json json_of(const BoundedReal& v) {
  const std::string value = v.value_string();
  // Fold the decimal truncation of the printed midpoint into the error.
  const Rational printed = Rational::from_decimal_string(value);
  const Rational err = v.radius() + (printed - v.midpoint()).abs();
  Json out;
  out["value"] = value;
  out["error"] = (err.is_zero() ? err : dyadic_round_up(err, 64)).str();
  return out;
}

Json json_of(const ConstructionParams& params) {
  Json out;
  out["k"] = params.k;
  out["r"] = params.r;
  out["s"] = params.s;
  out["eps"] = params.eps.str();
  out["precision_bits"] = params.precision_bits;
  if (params.scheduled()) {
    Json sched = Json::array();
    for (const GenerationRule& rule : params.schedule) {
      Json item;
      item["r"] = rule.r;
      item["s"] = rule.s;
      item["eps"] = rule.eps.str();
      sched.push_back(std::move(item));
    }
    out["schedule"] = std::move(sched);
  }
  return out;
}

namespace {

Json json_of_rect(const RectAddress& address, const Rect& rect) {
  Json out;
  out["address"] = address.str();
  out["x0"] = rect.x0.str();
  out["width"] = rect.width.str();
  out["y0"] = json_of(rect.y0);
  out["height"] = json_of(rect.height);
  return out;
}

Json json_of_gap(const GapSegment& gap) {
  Json out;
  out["x_start"] = gap.x_start.str();
  out["x_end"] = gap.x_end.str();
  out["y_start"] = json_of(gap.y_start);
  out["y_end"] = json_of(gap.y_end);
  out["generation"] = gap.generation;
  out["kind"] = gap.kind == GapKind::WithinRow ? "within-row" : "row-transition";
  return out;
}

void enumerate_addresses(const Construction& cons, int generation,
                         const std::function<void(const RectAddress&)>& visit) {
  RectAddress address;
  std::function<void(int)> recur = [&](int gen) {
    if (gen == generation) {
      visit(address);
      return;
    }
    const GenerationRule rule = cons.params().rule_at(gen + 1);
    for (int m = 1; m <= rule.s; ++m) {
      for (int p = 1; p <= rule.r; ++p) {
        address.path.emplace_back(m, p);
        recur(gen + 1);
        address.path.pop_back();
      }
    }
  };
  recur(1);
}

}  // namespace

Json geometry_dump(const Construction& cons, int depth) {
  if (depth < 1) throw std::invalid_argument("geometry_dump: depth must be >= 1");
  mpz_class total(0), layer(1);
  for (int g = 1; g <= depth; ++g) {
    total += layer;
    if (g < depth) layer *= cons.children_per_parent(g + 1);
  }
  if (total > 500'000) {
    throw std::invalid_argument("geometry_dump: " + total.get_str() +
                                " rectangles exceed the dump limit; use a smaller depth");
  }

  Json out;
  out["params"] = json_of(cons.params());
  Json metrics = Json::array();
  for (int n = 1; n <= depth; ++n) {
    const GenerationMetrics& m = cons.metrics(n);
    Json row;
    row["n"] = n;
    row["c"] = m.c.str();
    row["d"] = m.d.str();
    row["a"] = json_of(m.a);
    row["b"] = json_of(m.b);
    metrics.push_back(std::move(row));
  }
  out["metrics"] = std::move(metrics);

  Json generations = Json::array();
  for (int g = 1; g <= depth; ++g) {
    Json gen;
    gen["n"] = g;
    Json rects = Json::array();
    enumerate_addresses(cons, g, [&](const RectAddress& address) {
      rects.push_back(json_of_rect(address, cons.rect_of(address)));
    });
    gen["rectangles"] = std::move(rects);
    if (g >= 2) {
      Json gaps = Json::array();
      enumerate_addresses(cons, g - 1, [&](const RectAddress& parent) {
        for (const GapSegment& gap : cons.gaps_of(parent)) {
          gaps.push_back(json_of_gap(gap));
        }
      });
      gen["gaps"] = std::move(gaps);
    }
    generations.push_back(std::move(gen));
  }
  out["generations"] = std::move(generations);
  return out;
}

namespace {

const char* target_name(CoverTarget target) {
  switch (target) {
    case CoverTarget::A: return "A";
    case CoverTarget::D: return "D";
    case CoverTarget::LevelSet: return "level-set";
    case CoverTarget::LevelSetTight: return "level-set-tight";
  }
  return "?";
}

}  // namespace

Json cover_dump(const CoverSet& cover) {
  Json out;
  out["target"] = target_name(cover.target);
  out["generation"] = cover.generation;
  if (cover.row_address) out["row_address"] = cover.row_address->str();
  out["exact"] = cover.exact;
  out["count"] = cover.intervals.size();
  out["nominal_length"] = json_of(cover.nominal_length);
  Json intervals = Json::array();
  for (const CoverInterval& iv : cover.intervals) {
    intervals.push_back(Json::array({iv.lo.str(), iv.hi.str()}));
  }
  out["intervals"] = std::move(intervals);
  return out;
}

Json dims_dump(const Construction& cons, const DimensionReport& report, int est_lo, int est_hi) {
  Json out;
  out["params"] = json_of(cons.params());
  out["alpha"] = json_of(report.alpha);
  out["beta"] = json_of(report.beta);
  out["lambda"] = report.lambda.str();
  out["dim_A"] = json_of(report.dim_A);
  out["dim_A_note"] = report.dim_A_note;
  out["boxcount_alpha"] = json_of(report.boxcount_alpha);
  out["boxcount_beta"] = json_of(report.boxcount_beta);
  out["boxcount_range"] = Json::array({est_lo, est_hi});
  Json bound;
  bound["holds"] = report.upper_bound_holds;
  bound["margin"] = json_of(report.upper_bound_margin);
  out["beta_le_one_minus_alpha_over_k"] = std::move(bound);
  return out;
}

Json plan_dump(const PlanResult& result) {
  Json out;
  out["params"] = json_of(result.params);
  out["achieved_alpha"] = json_of(result.achieved_alpha);
  out["achieved_beta"] = json_of(result.achieved_beta);
  Json cert = Json::array();
  for (const CertificateEntry& e : result.certificate.entries) {
    Json item;
    item["name"] = e.name;
    item["margin"] = json_of(e.margin);
    item["holds"] = e.holds;
    cert.push_back(std::move(item));
  }
  out["certificate"] = std::move(cert);
  out["all_hold"] = result.certificate.all_hold();
  return out;
}

Json verify_dump(const ValidationReport& report) {
  Json out;
  Json checks = Json::array();
  for (const ValidationCheck& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["generation"] = c.generation;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  out["all_pass"] = report.all_pass();
  return out;
}

std::string classification_name(PointClass cls) {
  switch (cls) {
    case PointClass::Gap: return "gap";
    case PointClass::Cantor: return "cantor";
    case PointClass::OutsideLeft: return "outside-left";
    case PointClass::OutsideRight: return "outside-right";
  }
  return "?";
}

std::string eval_csv(const std::vector<std::pair<Rational, EvalResult>>& rows) {
  std::ostringstream out;
  out << "x,value,error,classification,depth\n";
  for (const auto& [x, res] : rows) {
    const Json v = json_of(res.value);
    out << x.str() << ',' << v["value"].get<std::string>() << ','
        << v["error"].get<std::string>() << ',' << classification_name(res.cls) << ','
        << res.depth_used << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("rename to '" + path + "' failed");
  }
}

}  // namespace cantorflat
