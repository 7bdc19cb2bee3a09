#pragma once

// Weighted dual / plumbing graphs of a resolution and their intersection form.
//
// Vertices are keyed by a string id and always iterated in lexicographic id
// order; that order is also the row/column order of the intersection matrix,
// so determinants and minors are reproducible across runs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace singlink {

using BigInt = mpz_class;

struct Vertex {
  std::string id;
  int genus = 0;
  std::optional<std::int64_t> euler;  // self-intersection e_i; nullopt = unknown
  std::optional<std::int64_t> mult;   // multiplicity of a designated function
  std::string name;                   // display label, may be empty

  bool operator==(const Vertex&) const = default;
};

// Unordered pair; stored with a <= b.
struct Edge {
  std::string a;
  std::string b;

  Edge() = default;
  Edge(std::string u, std::string v);

  bool is_loop() const { return a == b; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Strict transform of a curve meeting the divisor. `at` is empty for a free
// arrow, i.e. a smooth curve in a smooth germ once every component is gone.
struct Arrow {
  std::optional<std::string> at;
  std::string label;
  std::optional<std::int64_t> mult;

  bool operator==(const Arrow&) const = default;
};

class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  void add_vertex(Vertex v);
  void add_edge(const std::string& u, const std::string& v);
  void add_arrow(Arrow a);

  // Removes the vertex, its incident edges; arrows at it become free.
  void remove_vertex(const std::string& id);
  // Removes one copy of the edge u-v.
  void remove_edge(const std::string& u, const std::string& v);

  bool has_vertex(const std::string& id) const { return vertices_.count(id) != 0; }
  const Vertex& vertex(const std::string& id) const;
  Vertex& vertex(const std::string& id);

  const std::map<std::string, Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::vector<Arrow>& arrows() { return arrows_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Number of edge ends at `id` (a self-loop counts twice).
  std::size_t edge_degree(const std::string& id) const;
  std::size_t loop_count(const std::string& id) const;
  std::size_t arrow_count(const std::string& id) const;
  // Edge multiplicity between two distinct vertices.
  std::size_t edge_multiplicity(const std::string& u, const std::string& v) const;
  // Other endpoints of non-loop edges at `id`, repeated per edge, sorted.
  std::vector<std::string> neighbors(const std::string& id) const;
  std::vector<std::size_t> arrows_at(const std::string& id) const;

  // A fresh id of the form prefix<k>, smallest k >= 1 not in use.
  std::string fresh_id(const std::string& prefix) const;

  // Human-readable problems that do not violate referential integrity
  // (currently: self-loops).
  std::vector<std::string> warnings() const;

  bool operator==(const PlumbingGraph&) const = default;

 private:
  void require_vertex(const std::string& id) const;

  std::map<std::string, Vertex> vertices_;
  std::vector<Edge> edges_;  // kept sorted
  std::vector<Arrow> arrows_;
};

struct IntersectionMatrix {
  std::vector<std::string> order;
  std::vector<std::vector<std::int64_t>> entries;

  std::size_t size() const { return order.size(); }
};

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

// Fraction-free (Bareiss) elimination; exact.
BigInt determinant(const PlumbingGraph& g);
BigInt determinant(const std::vector<std::vector<std::int64_t>>& m);

// Leading principal minors d_1..d_n of a square matrix.
std::vector<BigInt> leading_principal_minors(const std::vector<std::vector<std::int64_t>>& m);

bool is_negative_definite(const PlumbingGraph& g);
bool is_bamboo(const PlumbingGraph& g);
bool is_rupture_vertex(const PlumbingGraph& g, const std::string& id);

bool is_connected(const PlumbingGraph& g);
bool is_tree(const PlumbingGraph& g);
// Edges minus vertices plus connected components.
std::size_t cycle_rank(const PlumbingGraph& g);

// Copy with every arrow removed.
PlumbingGraph without_arrows(const PlumbingGraph& g);

}  // namespace singlink
