// Instance files, reports and SVG rendering.
//
// Instance file:
//   {"dim": 2,
//    "norm": {"kind": "euclidean"} | {"kind": "linf"}
//            | {"kind": "polygon", "vertices": [[x, y], ...]},
//    "red": [{"point": [x, y], "radius": r}, ...],
//    "blue": [[x, y], ...],
//    "lambda": 1}
// Unknown keys are rejected at every level.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "minkarr/cover.hpp"
#include "minkarr/density.hpp"
#include "minkarr/generators.hpp"

namespace minkarr::io {

using nlohmann::json;

/// Schema error; key() is the JSON path of the offending entry, e.g. "red[2].radius".
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string key, const std::string& problem)
      : std::runtime_error(key + ": " + problem), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& doc);

/// Parses and validates an instance document; syntax errors surface as FormatError with key "<document>".
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

json point_to_json(const Point& p);
json to_json(const HypothesisReport& report);
json to_json(const Certificate& cert);
json to_json(const DepthReport& report);
json to_json(const CoverResult& cover);
json witnesses_to_json(const Counterexample& cx);

// Planar instances only. Every homothet is outlined, members of `selected`
// are shaded, red centers are hollow and blue points filled. Output depends
// only on the inputs; all coordinates are printed with 6 decimals.
std::string render_svg(const Instance& inst, const std::vector<std::size_t>& selected = {});

}  // namespace minkarr::io
