#pragma once

#include <string>

#include <json.hpp>

#include "hz/pipeline.hpp"

namespace hz {

// {"p": int, "n": int, "field_poly": [ints]?, "Q": [entry...]} where each Q
// entry is an integer (prime-subfield element) or a list of n integers in
// [0, p), constant term first, last entry 1. InvalidInput (or the specific
// validation error) on anything malformed.
CurveInput parse_curve_document(const nlohmann::json& doc);
CurveInput parse_curve_line(const std::string& line);

nlohmann::json input_to_json(const CurveInput& in);
nlohmann::json result_to_json(const RunResult& r);

nlohmann::json error_to_json(const Error& e);

}  // namespace hz
