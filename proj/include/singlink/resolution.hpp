#pragma once

// Blow-up / blow-down moves on plumbing graphs and reduction to the minimal
// good resolution.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singlink/graph.hpp"

namespace singlink {

struct BlowDownCertificate {
  std::string removed;
  std::vector<std::pair<std::string, std::int64_t>> neighbor_updates;  // (vertex, new euler)
  std::optional<Edge> added_edge;

  bool operator==(const BlowDownCertificate&) const = default;
};

// The new vertex gets `new_id` when non-empty, otherwise a fresh "B<k>" id.
// When every multiplicity involved is known the new vertex inherits the
// multiplicity of the blown-up point.
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v, std::string new_id = {});
PlumbingGraph blow_up_edge(const PlumbingGraph& g, const Edge& e, std::string new_id = {});
PlumbingGraph blow_up_arrow(const PlumbingGraph& g, std::size_t arrow_index, std::string new_id = {});

// Throws on every failure of the contraction precondition.
std::pair<PlumbingGraph, BlowDownCertificate> blow_down(const PlumbingGraph& g, const std::string& v);

// True iff blow_down(g, v) would succeed.
bool is_contractible(const PlumbingGraph& g, const std::string& v);

// Re-applies a certificate to the graph it was produced from.
PlumbingGraph replay(const PlumbingGraph& pre, const BlowDownCertificate& cert);

struct SelectionPolicy {
  enum class Kind { LowestId, HighestId, Random };
  Kind kind = Kind::LowestId;
  std::uint64_t seed = 0;

  static SelectionPolicy lowest() { return {}; }
  static SelectionPolicy highest() { return {Kind::HighestId, 0}; }
  static SelectionPolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct MinimizeResult {
  PlumbingGraph graph;
  std::vector<BlowDownCertificate> certificates;
};

MinimizeResult minimize(const PlumbingGraph& g, SelectionPolicy policy = {});

struct IsomorphismOptions {
  bool compare_weights = false;       // euler numbers
  bool compare_arrow_labels = false;  // otherwise only arrow counts matter
  std::size_t max_vertices = 16;
};

bool are_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2, const IsomorphismOptions& opts = {});

}  // namespace singlink
