#pragma once

// Hirzebruch-Jung resolution of the cyclic cover z^d = f(x, y): lift the
// embedded resolution graph of {f = 0} to the normalized cover, replace the
// cyclic quotient points by bamboos, compute Euler numbers and minimize.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singlink/curve.hpp"
#include "singlink/graph.hpp"
#include "singlink/lens.hpp"
#include "singlink/resolution.hpp"

namespace singlink {

// Cyclic quotient point of type (n, q): resolved by hj_expand(n, q), whose
// first vertex sits next to the first endpoint of the carrying edge.
struct HJParams {
  std::int64_t n = 1;
  std::int64_t q = 0;

  bool operator==(const HJParams&) const = default;
};

struct CoverVertex {
  std::string id;
  std::string base;
  int genus = 0;
  std::int64_t degree = 1;  // degree of the map onto the base component
  std::optional<std::int64_t> euler;
  std::optional<std::int64_t> mult;

  bool operator==(const CoverVertex&) const = default;
};

struct CoverEdge {
  std::string a;
  std::string b;
  std::optional<HJParams> hj;  // empty = smooth point
  std::vector<std::int64_t> bamboo_mults;  // multiplicities along the bamboo, if known

  bool operator==(const CoverEdge&) const = default;
};

struct CoverArrow {
  std::optional<std::string> at;
  std::string label;
  std::optional<std::int64_t> mult;
  std::optional<HJParams> hj;  // quotient point between `at` and the arrow
  std::vector<std::int64_t> bamboo_mults;

  bool operator==(const CoverArrow&) const = default;
};

struct CoveringGraph {
  PlumbingGraph base;
  std::int64_t d = 0;  // degree of the cyclic cover; 0 when supplied by hand
  std::vector<CoverVertex> vertices;
  std::vector<CoverEdge> edges;
  std::vector<CoverArrow> arrows;

  bool operator==(const CoveringGraph&) const = default;
};

// Normal form of the germ z^d = x^a y^b at a crossing, after normalization.
struct LocalQuotient {
  std::int64_t components = 1;  // gcd(d, a, b) points over the crossing
  std::optional<HJParams> hj;    // empty when the normalized germ is smooth
  // Multiplicities of f along the bamboo components, from the x side.
  std::vector<std::int64_t> mults;
};

LocalQuotient local_quotient(std::int64_t d, std::int64_t a, std::int64_t b);

CoveringGraph cover_graph(const PlumbingGraph& base, std::int64_t d);
inline CoveringGraph cover_graph(const CurveResolution& base, std::int64_t d) { return cover_graph(base.graph, d); }

// Throws InvalidCoveringData when the covering conditions fail.
void check_covering(const CoveringGraph& cov);

PlumbingGraph splice_bamboos(const CoveringGraph& cov);

// Solves m_w e_w + sum of neighbour multiplicities + arrow multiplicities = 0.
PlumbingGraph assign_euler_numbers(const PlumbingGraph& g);

struct PipelineOptions {
  bool minimize = true;
  CurveOptions curve;
  SelectionPolicy policy;
};

struct PipelineReport {
  std::optional<CurveResolution> base_resolution;
  CoveringGraph covering;
  PlumbingGraph resolved;
  PlumbingGraph minimal;
  std::vector<BlowDownCertificate> certificates;
};

PipelineReport resolve_cyclic(const std::vector<PuiseuxBranch>& branches, std::int64_t d,
                              const PipelineOptions& opts = {});
PipelineReport resolve_from_covering(const CoveringGraph& cov, const PipelineOptions& opts = {});

}  // namespace singlink
