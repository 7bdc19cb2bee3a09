#include "singlink/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "singlink/errors.hpp"

namespace singlink {

Edge::Edge(std::string u, std::string v) : a(std::move(u)), b(std::move(v)) {
  if (b < a) std::swap(a, b);
}

void PlumbingGraph::require_vertex(const std::string& id) const {
  if (!has_vertex(id)) fail(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
}

void PlumbingGraph::add_vertex(Vertex v) {
  if (v.id.empty()) fail(ErrorCode::SchemaError, "vertex id must be non-empty");
  if (v.genus < 0) fail(ErrorCode::SchemaError, "vertex '" + v.id + "' has negative genus");
  if (v.mult && *v.mult <= 0)
    fail(ErrorCode::SchemaError, "vertex '" + v.id + "' has non-positive multiplicity");
  if (has_vertex(v.id)) fail(ErrorCode::SchemaError, "duplicate vertex id '" + v.id + "'");
  std::string id = v.id;
  vertices_.emplace(std::move(id), std::move(v));
}

void PlumbingGraph::add_edge(const std::string& u, const std::string& v) {
  require_vertex(u);
  require_vertex(v);
  Edge e(u, v);
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), std::move(e));
}

void PlumbingGraph::add_arrow(Arrow a) {
  if (a.at) require_vertex(*a.at);
  if (a.mult && *a.mult < 0) fail(ErrorCode::SchemaError, "arrow '" + a.label + "' has negative multiplicity");
  arrows_.push_back(std::move(a));
}

void PlumbingGraph::remove_vertex(const std::string& id) {
  require_vertex(id);
  std::erase_if(edges_, [&](const Edge& e) { return e.a == id || e.b == id; });
  for (auto& arrow : arrows_)
    if (arrow.at == id) arrow.at.reset();
  vertices_.erase(id);
}

void PlumbingGraph::remove_edge(const std::string& u, const std::string& v) {
  const Edge e(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    fail(ErrorCode::UnknownEdge, "no edge between '" + u + "' and '" + v + "'");
  edges_.erase(it);
}

const Vertex& PlumbingGraph::vertex(const std::string& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) fail(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  return it->second;
}

Vertex& PlumbingGraph::vertex(const std::string& id) {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) fail(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  return it->second;
}

std::size_t PlumbingGraph::edge_degree(const std::string& id) const {
  require_vertex(id);
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.a == id) ++d;
    if (e.b == id) ++d;
  }
  return d;
}

std::size_t PlumbingGraph::loop_count(const std::string& id) const {
  require_vertex(id);
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.is_loop() && e.a == id; }));
}

std::size_t PlumbingGraph::arrow_count(const std::string& id) const {
  require_vertex(id);
  return static_cast<std::size_t>(
      std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.at == id; }));
}

std::size_t PlumbingGraph::edge_multiplicity(const std::string& u, const std::string& v) const {
  const Edge e(u, v);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<std::string> PlumbingGraph::neighbors(const std::string& id) const {
  require_vertex(id);
  std::vector<std::string> out;
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    if (e.a == id) out.push_back(e.b);
    else if (e.b == id) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> PlumbingGraph::arrows_at(const std::string& id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].at == id) out.push_back(i);
  return out;
}

std::string PlumbingGraph::fresh_id(const std::string& prefix) const {
  for (std::size_t k = 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!has_vertex(id)) return id;
  }
}

std::vector<std::string> PlumbingGraph::warnings() const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (e.is_loop()) out.push_back("self-loop at '" + e.a + "'");
  return out;
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
  IntersectionMatrix m;
  std::map<std::string, std::size_t> index;
  for (const auto& [id, v] : g.vertices()) {
    if (!v.euler) fail(ErrorCode::UnknownEulerNumber, "vertex '" + id + "' has unknown Euler number");
    index[id] = m.order.size();
    m.order.push_back(id);
  }
  const std::size_t n = m.order.size();
  m.entries.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = *g.vertex(m.order[i]).euler;
  for (const auto& e : g.edges()) {
    const std::size_t i = index.at(e.a);
    const std::size_t j = index.at(e.b);
    if (i == j) {
      m.entries[i][i] = checked_add(m.entries[i][i], 2);
    } else {
      m.entries[i][j] += 1;
      m.entries[j][i] += 1;
    }
  }
  return m;
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& m, std::size_t k) {
  BigMatrix out(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i][j] = static_cast<long>(m[i][j]);
  return out;
}

// Bareiss with row pivoting on the leading k x k block.
BigInt bareiss_det(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  BigInt d = a[n - 1][n - 1];
  return sign < 0 ? BigInt(-d) : d;
}

}  // namespace

BigInt determinant(const std::vector<std::vector<std::int64_t>>& m) {
  return bareiss_det(to_big(m, m.size()));
}

BigInt determinant(const PlumbingGraph& g) { return determinant(intersection_matrix(g).entries); }

std::vector<BigInt> leading_principal_minors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> minors;
  minors.reserve(n);
  // Without pivoting the k-th Bareiss pivot is the k-th leading minor; a zero
  // pivot breaks the recurrence, after which minors are computed one by one.
  BigMatrix a = to_big(m, n);
  BigInt prev = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  for (std::size_t s = k + 2; s <= n; ++s) minors.push_back(bareiss_det(to_big(m, s)));
  return minors;
}

bool is_negative_definite(const PlumbingGraph& g) {
  const auto minors = leading_principal_minors(intersection_matrix(g).entries);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int s = sgn(minors[k]);
    const int want = (k % 2 == 0) ? -1 : 1;
    if (s != want) return false;
  }
  return true;
}

namespace {

std::size_t component_count(const PlumbingGraph& g) {
  std::map<std::string, std::string> parent;
  for (const auto& [id, v] : g.vertices()) parent[id] = id;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
    if (parent[x] == x) return x;
    return parent[x] = find(parent[x]);
  };
  std::size_t comps = g.vertex_count();
  for (const auto& e : g.edges()) {
    auto ra = find(e.a);
    auto rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

}  // namespace

bool is_connected(const PlumbingGraph& g) { return component_count(g) <= 1; }

std::size_t cycle_rank(const PlumbingGraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

bool is_tree(const PlumbingGraph& g) {
  return g.vertex_count() > 0 && is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

bool is_bamboo(const PlumbingGraph& g) {
  if (!is_tree(g)) return false;
  for (const auto& [id, v] : g.vertices()) {
    if (v.genus != 0) return false;
    if (g.edge_degree(id) > 2) return false;
  }
  return true;
}

bool is_rupture_vertex(const PlumbingGraph& g, const std::string& id) {
  const Vertex& v = g.vertex(id);
  return v.genus > 0 || g.edge_degree(id) + g.arrow_count(id) >= 3;
}

PlumbingGraph without_arrows(const PlumbingGraph& g) {
  PlumbingGraph out = g;
  out.arrows().clear();
  return out;
}

}  // namespace singlink
