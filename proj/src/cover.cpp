#include "singlink/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "singlink/errors.hpp"

namespace singlink {

LocalQuotient local_quotient(std::int64_t d, std::int64_t a, std::int64_t b) {
  if (d <= 0) fail(ErrorCode::NonPositiveDegree, "cover degree must be positive");
  if (a <= 0 || b < 0) fail(ErrorCode::MissingMultiplicity, "local exponents must be a > 0, b >= 0");

  LocalQuotient out;
  const std::int64_t g = std::gcd(d, std::gcd(a, b));
  out.components = g;
  const std::int64_t dd = d / g, aa = a / g, bb = b / g;
  const std::int64_t ga = std::gcd(dd, aa), gb = std::gcd(dd, bb);
  const std::int64_t n = dd / (ga * gb);
  if (n == 1) return out;

  // In the lattice {(p, r) : d | a p + b r} of valuations of (x, y) the
  // boundary rays of the first quadrant are (dd/ga, 0) and (0, dd/gb);
  // the rays in between are the components of the minimal resolution.
  const std::int64_t q = ((-(bb / gb) % n + n) % n) * mod_inverse(aa / ga, n) % n;
  out.hj = HJParams{n, q};
  const HJBamboo bamboo = hj_expand(n, q);
  std::int64_t p0 = dd / ga, r0 = 0;
  std::int64_t p1 = checked_mul(q, gb), r1 = ga;
  for (auto w : bamboo.weights) {
    out.mults.push_back(checked_add(checked_mul(a, p1), checked_mul(b, r1)));
    const std::int64_t p2 = checked_mul(w, p1) - p0, r2 = checked_mul(w, r1) - r0;
    p0 = p1;
    r0 = r1;
    p1 = p2;
    r1 = r2;
  }
  if (p1 != 0 || r1 != dd / gb) throw std::logic_error("toric chain does not close at the y-axis");
  return out;
}

namespace {

std::string sheet_id(const std::string& base, std::int64_t sheet, std::int64_t sheets) {
  std::string id = base + "'";
  if (sheets > 1) id += "(" + std::to_string(sheet + 1) + ")";
  return id;
}

std::int64_t lifted_mult(std::int64_t d, std::int64_t m) { return checked_mul(m, d / std::gcd(d, m)); }

void check_hj(const HJParams& hj) {
  if (hj.n < 2 || hj.q <= 0 || hj.q >= hj.n || std::gcd(hj.n, hj.q) != 1)
    fail(ErrorCode::InvalidHJParams,
         "invalid quotient type (" + std::to_string(hj.n) + "," + std::to_string(hj.q) + ")");
}

}  // namespace

CoveringGraph cover_graph(const PlumbingGraph& base, std::int64_t d) {
  if (d <= 0) fail(ErrorCode::NonPositiveDegree, "cover degree must be positive, got " + std::to_string(d));
  if (base.vertex_count() > 0 && !is_tree(base))
    fail(ErrorCode::InvalidCoveringData, "the base graph must be a tree");

  CoveringGraph cov;
  cov.base = base;
  cov.d = d;

  std::map<std::string, std::int64_t> mult, sheets;
  for (const auto& [id, v] : base.vertices()) {
    if (v.genus != 0) fail(ErrorCode::InvalidCoveringData, "base component '" + id + "' is not rational");
    if (!v.mult) fail(ErrorCode::MissingMultiplicity, "base vertex '" + id + "' has no multiplicity");
    mult[id] = *v.mult;
  }
  const auto arrow_mult = [](const Arrow& a) { return a.mult.value_or(0); };

  // E_v minus the other components is a punctured sphere whose fundamental
  // group is generated by the loops around the punctures, so the cover of a
  // tubular neighbourhood splits into gcd(d, m_v, neighbouring multiplicities)
  // pieces; each piece maps onto E_v with degree gcd(d, m_v) / pieces.
  for (const auto& [id, v] : base.vertices()) {
    const std::int64_t m = mult[id];
    std::vector<std::int64_t> around;
    for (const auto& n : base.neighbors(id)) around.push_back(mult[n]);
    for (std::size_t i : base.arrows_at(id)) around.push_back(arrow_mult(base.arrows()[i]));

    const std::int64_t gv = std::gcd(d, m);
    std::int64_t s = gv;
    for (auto x : around) s = std::gcd(s, x);
    const std::int64_t deg = gv / s;

    // Riemann-Hurwitz for one piece: over a puncture with multiplicity m_j
    // there are gcd(d, m_v, m_j) / s points.
    std::int64_t two_minus_2g = 2 * deg;
    for (auto x : around) two_minus_2g -= deg - std::gcd(gv, x) / s;
    if (two_minus_2g > 2 || two_minus_2g % 2 != 0)
      throw std::logic_error("Riemann-Hurwitz count is inconsistent at '" + id + "'");
    const int genus = static_cast<int>((2 - two_minus_2g) / 2);

    sheets[id] = s;
    for (std::int64_t k = 0; k < s; ++k)
      cov.vertices.push_back(CoverVertex{sheet_id(id, k, s), id, genus, deg, std::nullopt, lifted_mult(d, m)});
  }

  // Points over a crossing are indexed by Z/gcd(d, m_u, m_v); point k lies
  // on piece k mod s_u and k mod s_v. On a tree these labels can be chosen
  // compatibly everywhere.
  for (const auto& e : base.edges()) {
    const LocalQuotient lq = local_quotient(d, mult[e.a], mult[e.b]);
    for (std::int64_t k = 0; k < lq.components; ++k)
      cov.edges.push_back(CoverEdge{sheet_id(e.a, k % sheets[e.a], sheets[e.a]),
                                    sheet_id(e.b, k % sheets[e.b], sheets[e.b]), lq.hj, lq.mults});
  }

  for (const auto& a : base.arrows()) {
    const std::optional<std::int64_t> up = a.mult ? std::optional(lifted_mult(d, *a.mult)) : std::nullopt;
    if (!a.at) {
      cov.arrows.push_back(CoverArrow{std::nullopt, a.label, up, std::nullopt, {}});
      continue;
    }
    const std::string& v = *a.at;
    const LocalQuotient lq = local_quotient(d, mult[v], arrow_mult(a));
    for (std::int64_t k = 0; k < lq.components; ++k) {
      std::string label = a.label;
      if (lq.components > 1) label += "(" + std::to_string(k + 1) + ")";
      cov.arrows.push_back(CoverArrow{sheet_id(v, k % sheets[v], sheets[v]), label, up, lq.hj, lq.mults});
    }
  }
  return cov;
}

void check_covering(const CoveringGraph& cov) {
  const auto bad = [](const std::string& msg) { fail(ErrorCode::InvalidCoveringData, msg); };
  std::map<std::string, const CoverVertex*> by_id;
  std::map<std::string, std::vector<const CoverVertex*>> over;
  for (const auto& cv : cov.vertices) {
    if (!cov.base.has_vertex(cv.base)) bad("cover vertex '" + cv.id + "' lies over unknown base vertex '" + cv.base + "'");
    if (cv.degree < 1) bad("cover vertex '" + cv.id + "' has non-positive degree");
    if (cv.genus < 0) bad("cover vertex '" + cv.id + "' has negative genus");
    if (!by_id.emplace(cv.id, &cv).second) bad("duplicate cover vertex '" + cv.id + "'");
    over[cv.base].push_back(&cv);
  }
  for (const auto& [id, v] : cov.base.vertices()) {
    const auto it = over.find(id);
    if (it == over.end()) bad("no cover vertex over base vertex '" + id + "'");
    for (const auto* cv : it->second)
      if (cv->degree != it->second.front()->degree) bad("sheets over '" + id + "' have different degrees");
  }

  // Incidence: each cover edge projects to a base edge, and every sheet sees
  // every base edge at its base vertex.
  std::map<std::pair<std::string, std::string>, std::int64_t> edge_count;
  std::set<std::pair<std::string, std::string>> sheet_sees;
  for (const auto& ce : cov.edges) {
    const auto a = by_id.find(ce.a), b = by_id.find(ce.b);
    if (a == by_id.end() || b == by_id.end()) bad("cover edge " + ce.a + "-" + ce.b + " has an unknown endpoint");
    const std::string& ba = a->second->base;
    const std::string& bb = b->second->base;
    if (ba == bb || cov.base.edge_multiplicity(ba, bb) == 0)
      bad("cover edge " + ce.a + "-" + ce.b + " does not lie over a base edge");
    if (ce.hj) check_hj(*ce.hj);
    const Edge be(ba, bb);
    ++edge_count[{be.a, be.b}];
    sheet_sees.insert({ce.a, bb});
    sheet_sees.insert({ce.b, ba});
  }
  for (const auto& e : cov.base.edges()) {
    if (edge_count[{e.a, e.b}] == 0) bad("base edge " + e.a + "-" + e.b + " has no lift");
    for (const auto& [end, other] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}})
      for (const auto* cv : over[end])
        if (!sheet_sees.count({cv->id, other})) bad("cover vertex '" + cv->id + "' misses the edge towards '" + other + "'");
  }
  for (const auto& ca : cov.arrows) {
    if (ca.at && !by_id.count(*ca.at)) bad("cover arrow '" + ca.label + "' is attached to an unknown vertex");
    if (ca.hj) check_hj(*ca.hj);
  }

  // With the cover degree known, the gcd laws must hold exactly.
  if (cov.d > 0) {
    bool mults_known = true;
    for (const auto& [id, v] : cov.base.vertices()) mults_known = mults_known && v.mult.has_value();
    if (mults_known) {
      for (const auto& [id, v] : cov.base.vertices()) {
        const auto& sh = over[id];
        if (static_cast<std::int64_t>(sh.size()) * sh.front()->degree != std::gcd(cov.d, *v.mult))
          bad("sheet count times degree over '" + id + "' differs from gcd(d, m)");
      }
      for (const auto& e : cov.base.edges()) {
        const std::int64_t want = std::gcd(cov.d, std::gcd(*cov.base.vertex(e.a).mult, *cov.base.vertex(e.b).mult));
        const auto copies = static_cast<std::int64_t>(cov.base.edge_multiplicity(e.a, e.b));
        if (edge_count[{e.a, e.b}] != want * copies) bad("edge count over " + e.a + "-" + e.b + " differs from gcd(d, m_u, m_v)");
      }
    }
  }
}

PlumbingGraph splice_bamboos(const CoveringGraph& cov) {
  check_covering(cov);
  PlumbingGraph g;
  for (const auto& cv : cov.vertices) {
    Vertex v;
    v.id = cv.id;
    v.genus = cv.genus;
    v.euler = cv.euler;
    v.mult = cv.mult;
    v.name = cv.id;
    g.add_vertex(std::move(v));
  }

  // Adds the chain for one quotient point hanging off `from`; returns its far end.
  const auto chain = [&g](const std::string& from, const HJParams& hj, const std::vector<std::int64_t>& mults) {
    const HJBamboo b = hj_expand(hj.n, hj.q);
    std::string prev = from;
    for (std::size_t i = 0; i < b.weights.size(); ++i) {
      Vertex v;
      v.id = g.fresh_id("H");
      v.euler = -b.weights[i];
      if (mults.size() == b.weights.size()) v.mult = mults[i];
      v.name = v.id;
      const std::string id = v.id;
      g.add_vertex(std::move(v));
      g.add_edge(prev, id);
      prev = id;
    }
    return prev;
  };

  for (const auto& ce : cov.edges) {
    if (!ce.hj) {
      g.add_edge(ce.a, ce.b);
      continue;
    }
    g.add_edge(chain(ce.a, *ce.hj, ce.bamboo_mults), ce.b);
  }
  for (const auto& ca : cov.arrows) {
    std::optional<std::string> at = ca.at;
    if (at && ca.hj) at = chain(*at, *ca.hj, ca.bamboo_mults);
    g.add_arrow(Arrow{at, ca.label, ca.mult});
  }
  return g;
}

PlumbingGraph assign_euler_numbers(const PlumbingGraph& g) {
  PlumbingGraph out = g;
  for (const auto& [id, v] : g.vertices()) {
    if (!v.mult) fail(ErrorCode::MissingMultiplicity, "vertex '" + id + "' has no multiplicity");
    std::int64_t around = 0;
    for (const auto& e : g.edges()) {
      if (e.a != id && e.b != id) continue;
      if (e.is_loop()) {
        around = checked_add(around, checked_mul(2, *v.mult));
        continue;
      }
      const Vertex& other = g.vertex(e.a == id ? e.b : e.a);
      if (!other.mult) fail(ErrorCode::MissingMultiplicity, "vertex '" + other.id + "' has no multiplicity");
      around = checked_add(around, *other.mult);
    }
    for (std::size_t i : g.arrows_at(id)) around = checked_add(around, g.arrows()[i].mult.value_or(0));
    if (around % *v.mult != 0)
      fail(ErrorCode::NonIntegralSolution,
           "vertex '" + id + "': " + std::to_string(around) + " is not divisible by " + std::to_string(*v.mult));
    const std::int64_t e = -around / *v.mult;
    if (v.euler && *v.euler != e)
      fail(ErrorCode::InconsistentEulerNumber,
           "vertex '" + id + "' has Euler number " + std::to_string(*v.euler) + " but multiplicities force " +
               std::to_string(e));
    out.vertex(id).euler = e;
  }
  return out;
}

namespace {

void finish(PipelineReport& report, const PipelineOptions& opts) {
  bool known = true;
  for (const auto& [id, v] : report.resolved.vertices()) known = known && v.euler.has_value();
  if (opts.minimize && known) {
    MinimizeResult m = minimize(report.resolved, opts.policy);
    report.minimal = std::move(m.graph);
    report.certificates = std::move(m.certificates);
  } else {
    report.minimal = report.resolved;
  }
}

}  // namespace

PipelineReport resolve_cyclic(const std::vector<PuiseuxBranch>& branches, std::int64_t d, const PipelineOptions& opts) {
  if (d <= 0) fail(ErrorCode::NonPositiveDegree, "cover degree must be positive, got " + std::to_string(d));
  PipelineReport report;
  report.base_resolution = resolve_curve(branches, opts.curve);
  report.covering = cover_graph(*report.base_resolution, d);
  report.resolved = assign_euler_numbers(splice_bamboos(report.covering));
  finish(report, opts);
  return report;
}

PipelineReport resolve_from_covering(const CoveringGraph& cov, const PipelineOptions& opts) {
  PipelineReport report;
  report.covering = cov;
  report.resolved = splice_bamboos(cov);
  bool eulers = true, mults = true;
  for (const auto& [id, v] : report.resolved.vertices()) {
    eulers = eulers && v.euler.has_value();
    mults = mults && v.mult.has_value();
  }
  if (!eulers && mults) report.resolved = assign_euler_numbers(report.resolved);
  finish(report, opts);
  return report;
}

}  // namespace singlink
