// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "cantorflat/covers.hpp"
#include "cantorflat/evaluator.hpp"
#include "cantorflat/geometry.hpp"
#include "cantorflat/planner.hpp"

namespace cantorflat {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json json_of(const Rational& q);

/// {"value": <decimal string>, "error": "p/q"} where the error also covers
/// the decimal truncation of the printed value (the pair stays a rigorous
/// enclosure of the represented real).
Json json_of(const BoundedReal& v);

Json json_of(const ConstructionParams& params);

/// Params, metrics table, and the rectangle/gap inventory per generation.
Json geometry_dump(const Construction& cons, int depth);

Json cover_dump(const CoverSet& cover);

Json dims_dump(const Construction& cons, const DimensionReport& report, int est_lo, int est_hi);

Json plan_dump(const PlanResult& result);

Json verify_dump(const ValidationReport& report);

/// CSV rows: x,value,error,classification,depth (with header).
std::string eval_csv(const std::vector<std::pair<Rational, EvalResult>>& rows);

std::string classification_name(PointClass cls);

/// Writes content to path atomically (temp file in the same directory, then
/// rename). Throws IoError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace cantorflat
