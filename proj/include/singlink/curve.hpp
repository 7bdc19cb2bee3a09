#pragma once

// Minimal embedded resolution of a plane curve germ given by Puiseux data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "singlink/graph.hpp"

namespace singlink {

struct PuiseuxTerm {
  mpq_class exponent;
  mpq_class coefficient;

  bool operator==(const PuiseuxTerm&) const = default;
};

// x = sum c_i y^(e_i), or one of the coordinate axes.
struct PuiseuxBranch {
  enum class Kind { Series, AxisX, AxisY };

  Kind kind = Kind::Series;
  std::vector<PuiseuxTerm> terms;
  std::int64_t weight = 1;
  std::string label;
  // Carried through the blow-ups to place an arrow, but not a factor of f.
  bool tracked = false;
  // The listed terms are the whole series rather than a truncation.
  bool exact = false;

  static PuiseuxBranch axis_x(bool tracked = false);  // {x = 0}
  static PuiseuxBranch axis_y(bool tracked = false);  // {y = 0}
  static PuiseuxBranch series(std::vector<PuiseuxTerm> terms, std::int64_t weight = 1);

  // Common denominator N of the exponents (1 for the axes).
  std::int64_t ramification() const;

  bool operator==(const PuiseuxBranch&) const = default;
};

struct ArrowPlacement {
  std::string label;
  std::optional<std::string> vertex;  // empty when the graph is empty
  bool tracked = false;
  // The strict transform meets `vertex` transversally at a smooth point of
  // the divisor.
  bool transverse = false;

  bool operator==(const ArrowPlacement&) const = default;
};

// graph.arrows()[i] and placements[i] describe the i-th (merged) branch.
struct CurveResolution {
  PlumbingGraph graph;
  std::vector<ArrowPlacement> placements;
  std::size_t blowups = 0;
};

struct CurveOptions {
  bool merge_duplicates = false;
  // Maximum number of point blow-ups; when unset the environment variable
  // SINGLINK_BLOWUP_BUDGET is consulted, then a default derived from the input.
  std::optional<std::size_t> blowup_budget;
  // Longest series truncation tried before giving up.
  std::size_t max_precision = 1u << 13;
};

CurveResolution resolve_curve(const std::vector<PuiseuxBranch>& branches, const CurveOptions& opts = {});

// Budget used when neither the options nor the environment set one.
std::size_t default_blowup_budget(const std::vector<PuiseuxBranch>& branches);

}  // namespace singlink
