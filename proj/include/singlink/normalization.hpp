#pragma once

// Combinatorics of the link along a one-dimensional singular locus: how many
// discs a hyperplane section cuts out, and the pinched solid torus built from
// curlings and core identifications.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace singlink {

// Degrees d_j of the normalization over the components lying above one
// branch of the singular locus.
struct BranchCoverData {
  std::vector<std::int64_t> degrees;

  bool operator==(const BranchCoverData&) const = default;
};

// Mapping torus of a k-pinched disc; up to homeomorphism only the cycle type
// of the monodromy permutation matters. cycle_type is kept sorted.
struct PinchedTorusModel {
  std::int64_t k = 1;
  std::vector<std::int64_t> cycle_type;

  bool operator==(const PinchedTorusModel&) const = default;
};

struct QuotientStep {
  enum class Kind { Curling, Identification };
  Kind kind;
  std::int64_t order;  // curling order, or number of cores identified

  bool operator==(const QuotientStep&) const = default;
};

struct QuotientDescription {
  std::vector<QuotientStep> steps;
  std::int64_t pinched_discs = 0;

  bool operator==(const QuotientDescription&) const = default;
};

void validate(const BranchCoverData& data);

std::int64_t hyperplane_branch_count(const BranchCoverData& data);
PinchedTorusModel pinched_model(const BranchCoverData& data);
bool models_homeomorphic(const PinchedTorusModel& a, const PinchedTorusModel& b);
bool is_manifold_link(const std::vector<BranchCoverData>& branches);

// One curling step per degree >= 2 (a 1-curling is the identity and is
// omitted), then a single identification when two or more cores remain.
QuotientDescription compose_curlings_and_identifications(const BranchCoverData& data);

// "2,1,3;1" -> {(2,1,3), (1)}. An empty string means no singular locus.
std::vector<BranchCoverData> parse_branch_list(std::string_view text);

std::string to_string(const QuotientStep& step);

}  // namespace singlink
