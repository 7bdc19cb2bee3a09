#include "singlink/resolution.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "singlink/errors.hpp"

namespace singlink {

namespace {

std::int64_t known_euler(const PlumbingGraph& g, const std::string& id) {
  const auto& v = g.vertex(id);
  if (!v.euler) fail(ErrorCode::UnknownEulerNumber, "vertex '" + id + "' has unknown Euler number");
  return *v.euler;
}

void shift_euler(PlumbingGraph& g, const std::string& id, std::int64_t delta) {
  auto& v = g.vertex(id);
  v.euler = checked_add(*v.euler, delta);
}

std::optional<std::int64_t> sum_mults(std::initializer_list<std::optional<std::int64_t>> parts) {
  std::int64_t total = 0;
  for (const auto& p : parts) {
    if (!p) return std::nullopt;
    total = checked_add(total, *p);
  }
  return total;
}

Vertex exceptional(const PlumbingGraph& g, std::string id, std::optional<std::int64_t> mult) {
  if (id.empty()) id = g.fresh_id("B");
  Vertex w;
  w.id = std::move(id);
  w.euler = -1;
  w.mult = mult;
  return w;
}

}  // namespace

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v, std::string new_id) {
  known_euler(g, v);
  PlumbingGraph out = g;
  Vertex w = exceptional(out, std::move(new_id), g.vertex(v).mult);
  const std::string wid = w.id;
  out.add_vertex(std::move(w));
  out.add_edge(v, wid);
  shift_euler(out, v, -1);
  return out;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, const Edge& e, std::string new_id) {
  if (g.edge_multiplicity(e.a, e.b) == 0)
    fail(ErrorCode::UnknownEdge, "no edge between '" + e.a + "' and '" + e.b + "'");
  if (e.is_loop()) fail(ErrorCode::SelfLoopUnsupported, "cannot blow up the self-loop at '" + e.a + "'");
  known_euler(g, e.a);
  known_euler(g, e.b);
  PlumbingGraph out = g;
  Vertex w = exceptional(out, std::move(new_id), sum_mults({g.vertex(e.a).mult, g.vertex(e.b).mult}));
  const std::string wid = w.id;
  out.add_vertex(std::move(w));
  out.remove_edge(e.a, e.b);
  out.add_edge(e.a, wid);
  out.add_edge(wid, e.b);
  shift_euler(out, e.a, -1);
  shift_euler(out, e.b, -1);
  return out;
}

PlumbingGraph blow_up_arrow(const PlumbingGraph& g, std::size_t arrow_index, std::string new_id) {
  if (arrow_index >= g.arrows().size() || !g.arrows()[arrow_index].at)
    fail(ErrorCode::UnknownArrow, "no attached arrow with index " + std::to_string(arrow_index));
  const Arrow& a = g.arrows()[arrow_index];
  const std::string v = *a.at;
  known_euler(g, v);
  PlumbingGraph out = g;
  Vertex w = exceptional(out, std::move(new_id), sum_mults({g.vertex(v).mult, a.mult.value_or(0)}));
  const std::string wid = w.id;
  out.add_vertex(std::move(w));
  out.add_edge(v, wid);
  out.arrows()[arrow_index].at = wid;
  shift_euler(out, v, -1);
  return out;
}

std::pair<PlumbingGraph, BlowDownCertificate> blow_down(const PlumbingGraph& g, const std::string& v) {
  const Vertex& vx = g.vertex(v);
  const std::int64_t e = known_euler(g, v);
  const std::size_t edges = g.edge_degree(v);
  const std::size_t arrows = g.arrow_count(v);
  if (vx.genus != 0 || e != -1 || g.loop_count(v) != 0 || edges + arrows > 2)
    fail(ErrorCode::NotContractible, "vertex '" + v + "' is not a contractible (-1)-curve");
  if (arrows == 2) fail(ErrorCode::TangencyWouldForm, "contracting '" + v + "' would make two arrows tangent");

  const auto nbrs = g.neighbors(v);
  if (nbrs.size() == 2 && nbrs[0] == nbrs[1])
    fail(ErrorCode::SelfLoopWouldForm, "contracting '" + v + "' would create a self-loop at '" + nbrs[0] + "'");

  BlowDownCertificate cert;
  cert.removed = v;
  for (const auto& n : nbrs)
    cert.neighbor_updates.emplace_back(n, checked_add(known_euler(g, n), 1));
  if (nbrs.size() == 2) cert.added_edge = Edge(nbrs[0], nbrs[1]);
  return {replay(g, cert), cert};
}

bool is_contractible(const PlumbingGraph& g, const std::string& v) {
  const Vertex& vx = g.vertex(v);
  if (vx.genus != 0 || vx.euler != -1 || g.loop_count(v) != 0) return false;
  const std::size_t arrows = g.arrow_count(v);
  if (g.edge_degree(v) + arrows > 2 || arrows == 2) return false;
  const auto nbrs = g.neighbors(v);
  return !(nbrs.size() == 2 && nbrs[0] == nbrs[1]);
}

PlumbingGraph replay(const PlumbingGraph& pre, const BlowDownCertificate& cert) {
  PlumbingGraph out = pre;
  const auto nbrs = pre.neighbors(cert.removed);
  const auto moving = pre.arrows_at(cert.removed);
  out.remove_vertex(cert.removed);
  // An arrow survives on the single remaining neighbour, or becomes free.
  if (nbrs.size() == 1)
    for (std::size_t i : moving) out.arrows()[i].at = nbrs.front();
  for (const auto& [id, euler] : cert.neighbor_updates) out.vertex(id).euler = euler;
  if (cert.added_edge) out.add_edge(cert.added_edge->a, cert.added_edge->b);
  return out;
}

MinimizeResult minimize(const PlumbingGraph& g, SelectionPolicy policy) {
  for (const auto& [id, v] : g.vertices())
    if (!v.euler) fail(ErrorCode::UnknownEulerNumber, "vertex '" + id + "' has unknown Euler number");

  MinimizeResult result{g, {}};
  std::mt19937_64 rng(policy.seed);
  for (;;) {
    std::vector<std::string> eligible;
    for (const auto& [id, v] : result.graph.vertices())
      if (is_contractible(result.graph, id)) eligible.push_back(id);
    if (eligible.empty()) break;

    std::string pick;
    switch (policy.kind) {
      case SelectionPolicy::Kind::LowestId: pick = eligible.front(); break;
      case SelectionPolicy::Kind::HighestId: pick = eligible.back(); break;
      case SelectionPolicy::Kind::Random: {
        std::uniform_int_distribution<std::size_t> dist(0, eligible.size() - 1);
        pick = eligible[dist(rng)];
        break;
      }
    }
    auto [next, cert] = blow_down(result.graph, pick);
    result.graph = std::move(next);
    result.certificates.push_back(std::move(cert));
  }
  return result;
}

namespace {

struct Signature {
  int genus;
  std::optional<std::int64_t> euler;
  std::size_t loops;
  std::size_t degree;
  std::vector<std::string> arrow_labels;  // sorted; empty strings when labels are ignored
  std::vector<std::size_t> neighbor_degrees;

  bool operator==(const Signature&) const = default;
};

class Matcher {
 public:
  Matcher(const PlumbingGraph& g1, const PlumbingGraph& g2, const IsomorphismOptions& opts)
      : g1_(g1), g2_(g2), opts_(opts) {
    ids1_ = ids(g1);
    ids2_ = ids(g2);
    adj1_ = adjacency(g1, ids1_);
    adj2_ = adjacency(g2, ids2_);
    for (const auto& id : ids1_) sig1_.push_back(signature(g1, id));
    for (const auto& id : ids2_) sig2_.push_back(signature(g2, id));
    order_ = search_order();
  }

  bool run() {
    map_.assign(ids1_.size(), npos);
    used_.assign(ids2_.size(), false);
    return extend(0);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::vector<std::string> ids(const PlumbingGraph& g) {
    std::vector<std::string> out;
    for (const auto& [id, v] : g.vertices()) out.push_back(id);
    return out;
  }

  static std::vector<std::vector<std::size_t>> adjacency(const PlumbingGraph& g, const std::vector<std::string>& ids) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    std::vector<std::vector<std::size_t>> adj(ids.size(), std::vector<std::size_t>(ids.size(), 0));
    for (const auto& e : g.edges()) {
      const std::size_t i = index.at(e.a), j = index.at(e.b);
      if (i != j) {
        ++adj[i][j];
        ++adj[j][i];
      }
    }
    return adj;
  }

  Signature signature(const PlumbingGraph& g, const std::string& id) const {
    const Vertex& v = g.vertex(id);
    Signature s{v.genus, opts_.compare_weights ? v.euler : std::nullopt, g.loop_count(id), g.edge_degree(id), {}, {}};
    for (std::size_t i : g.arrows_at(id))
      s.arrow_labels.push_back(opts_.compare_arrow_labels ? g.arrows()[i].label : std::string{});
    std::sort(s.arrow_labels.begin(), s.arrow_labels.end());
    for (const auto& n : g.neighbors(id)) s.neighbor_degrees.push_back(g.edge_degree(n));
    std::sort(s.neighbor_degrees.begin(), s.neighbor_degrees.end());
    return s;
  }

  // Breadth-first from the highest-degree vertex of each component, so that
  // most candidates are constrained by an already mapped neighbour.
  std::vector<std::size_t> search_order() const {
    const std::size_t n = ids1_.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> order;
    while (order.size() < n) {
      std::size_t root = npos;
      for (std::size_t i = 0; i < n; ++i)
        if (!seen[i] && (root == npos || sig1_[i].degree > sig1_[root].degree)) root = i;
      std::vector<std::size_t> queue{root};
      seen[root] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        order.push_back(queue[h]);
        for (std::size_t j = 0; j < n; ++j)
          if (!seen[j] && adj1_[queue[h]][j] > 0) {
            seen[j] = true;
            queue.push_back(j);
          }
      }
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t i = order_[depth];
    for (std::size_t c = 0; c < ids2_.size(); ++c) {
      if (used_[c] || !(sig1_[i] == sig2_[c])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t j = order_[k];
        ok = adj1_[i][j] == adj2_[c][map_[j]];
      }
      if (!ok) continue;
      map_[i] = c;
      used_[c] = true;
      if (extend(depth + 1)) return true;
      used_[c] = false;
      map_[i] = npos;
    }
    return false;
  }

  const PlumbingGraph& g1_;
  const PlumbingGraph& g2_;
  const IsomorphismOptions& opts_;
  std::vector<std::string> ids1_, ids2_;
  std::vector<std::vector<std::size_t>> adj1_, adj2_;
  std::vector<Signature> sig1_, sig2_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

std::vector<std::string> free_arrow_labels(const PlumbingGraph& g, bool with_labels) {
  std::vector<std::string> out;
  for (const auto& a : g.arrows())
    if (!a.at) out.push_back(with_labels ? a.label : std::string{});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool are_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2, const IsomorphismOptions& opts) {
  const std::size_t n = std::max(g1.vertex_count(), g2.vertex_count());
  if (n > opts.max_vertices)
    fail(ErrorCode::TooLarge, "isomorphism test limited to " + std::to_string(opts.max_vertices) + " vertices");
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
      g1.arrows().size() != g2.arrows().size())
    return false;
  if (free_arrow_labels(g1, opts.compare_arrow_labels) != free_arrow_labels(g2, opts.compare_arrow_labels))
    return false;
  return Matcher(g1, g2, opts).run();
}

}  // namespace singlink
