// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// The optional argument is the unit-test binary whose property suites make up
// the last criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "singlink/cover.hpp"
#include "singlink/lens.hpp"

using namespace singlink;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

PlumbingGraph path_graph(const std::vector<std::string>& ids) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!g.has_vertex(ids[i])) g.add_vertex(Vertex{ids[i], 0, std::nullopt, std::nullopt, ""});
    if (i) g.add_edge(ids[i - 1], ids[i]);
  }
  return g;
}

PuiseuxBranch axis(bool x, std::int64_t weight) {
  PuiseuxBranch b = x ? PuiseuxBranch::axis_x() : PuiseuxBranch::axis_y();
  b.weight = weight;
  return b;
}

std::vector<std::int64_t> bamboo_weights(const PlumbingGraph& g) {
  std::vector<std::int64_t> w;
  if (!is_bamboo(without_arrows(g))) return w;
  std::string start;
  for (const auto& [id, v] : g.vertices())
    if (g.edge_degree(id) <= 1) {
      start = id;
      break;
    }
  for (std::string prev, cur = start; !cur.empty();) {
    w.push_back(*g.vertex(cur).euler);
    std::string next;
    for (const auto& n : g.neighbors(cur))
      if (n != prev) next = n;
    prev = cur;
    cur = next;
  }
  return w;
}

bool is_reversal(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return a == b || std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

Outcome x5_y11_bamboo() {
  Outcome o;
  o.require(hj_expand(12, 5).weights == std::vector<std::int64_t>{3, 2, 3}, "hj 12/5 != [3,2,3]");
  const auto r = resolve_cyclic({axis(true, 5), axis(false, 11)}, 12);
  o.require(is_reversal(bamboo_weights(r.minimal), {-3, -2, -3}), "x^5 y^11, d=12 is not the (-3,-2,-3) bamboo");
  return o;
}

Outcome a_n() {
  Outcome o;
  for (std::int64_t n = 2; n <= 30; ++n) {
    const auto r = resolve_cyclic({PuiseuxBranch::axis_x(), PuiseuxBranch::axis_y()}, n);
    o.require(bamboo_weights(r.minimal) == std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), -2),
              "xy, d=" + std::to_string(n) + " is not a chain of -2 curves");
  }
  return o;
}

Outcome quasi_ordinary() {
  Outcome o;
  for (std::int64_t n = 2; n <= 51; ++n) {
    o.require(resolve_quasi_ordinary(n, n - 1).weights == std::vector<std::int64_t>{n},
              "q=n-1 fails at n=" + std::to_string(n));
    if (n % 2 == 1 && n >= 3)
      o.require(resolve_quasi_ordinary(n, n - 2).weights == std::vector<std::int64_t>{(n + 1) / 2, 2},
                "q=n-2 fails at n=" + std::to_string(n));
  }
  return o;
}

Outcome lens_links() {
  Outcome o;
  for (std::int64_t n = 2; n <= 50; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const LensParams l = lens_of_quasi_ordinary(n, q);
      o.require(l == make_lens(n, n - q), "lens_of_quasi_ordinary(" + std::to_string(n) + "," + std::to_string(q) + ")");
      o.require(lens_equivalent(lens_of_bamboo(resolve_quasi_ordinary(n, q)), l, true),
                "bamboo link differs at (" + std::to_string(n) + "," + std::to_string(q) + ")");
    }
  return o;
}

// Vertices left after repeatedly stripping vertices of edge degree <= 1.
std::size_t two_core_size(PlumbingGraph g) {
  for (bool again = true; again;) {
    again = false;
    for (const auto& [id, v] : g.vertices())
      if (g.edge_degree(id) <= 1) {
        g.remove_vertex(id);
        again = true;
        break;
      }
  }
  return g.vertex_count();
}

// The dual graph of the Hirzebruch-Jung resolution: a hexagon with a
// one-vertex tail on one side and a four-vertex tail on the opposite side.
PlumbingGraph reference_hj_resolution() {
  PlumbingGraph g = path_graph({"1", "2", "3a", "4a", "5", "6", "7", "8", "9"});
  g.add_vertex(Vertex{"3b", 0, std::nullopt, std::nullopt, ""});
  g.add_vertex(Vertex{"4b", 0, std::nullopt, std::nullopt, ""});
  g.add_edge("2", "3b");
  g.add_edge("3b", "4b");
  g.add_edge("4b", "5");
  return g;
}

// The minimal resolution: the same graph with "6" blown down.
PlumbingGraph reference_minimal_resolution() {
  PlumbingGraph g = reference_hj_resolution();
  g.remove_vertex("6");
  g.add_edge("5", "7");
  return g;
}

Outcome three_branch_cover() {
  Outcome o;
  std::vector<PuiseuxBranch> bs;
  const auto series = [](std::vector<PuiseuxTerm> t, const char* label) {
    PuiseuxBranch b = PuiseuxBranch::series(std::move(t));
    b.label = label;
    return b;
  };
  bs.push_back(series({{1, 1}, {2, -1}}, "delta_1"));
  bs.push_back(series({{1, 1}, {3, -1}}, "delta_2"));
  bs.push_back(series({{1, 1}, {mpq_class(34, 13), 1}}, "delta_3"));
  bs.push_back(PuiseuxBranch::axis_x(true));

  // Curve resolution against the drawn chain: stars at the 2nd, 5th and 8th
  // vertex, the axis arrow at the 1st.
  const auto curve = resolve_curve(bs);
  PlumbingGraph drawn = path_graph({"1", "2", "3", "4", "5", "6", "7", "8"});
  drawn.add_arrow(Arrow{"1", "axis", std::nullopt});
  for (const char* v : {"2", "5", "8"}) drawn.add_arrow(Arrow{v, "star", std::nullopt});
  PlumbingGraph ours = curve.graph;
  for (auto& a : ours.arrows()) a.label = a.label == "x=0" ? "axis" : "star";
  o.require(are_isomorphic(ours, drawn, {false, true, 16}), "curve resolution differs from the drawn chain");

  const auto r = resolve_cyclic(bs, 2);
  const PlumbingGraph& y = r.resolved;
  o.require(y.vertex_count() == 11, "G(Y) has " + std::to_string(y.vertex_count()) + " vertices, expected 11");
  o.require(cycle_rank(y) == 1 && two_core_size(y) == 6, "G(Y) does not have exactly one cycle of length 6");
  bool genus_zero = true;
  for (const auto& [id, v] : y.vertices()) genus_zero = genus_zero && v.genus == 0;
  o.require(genus_zero, "G(Y) has a component of positive genus");
  o.require(are_isomorphic(without_arrows(y), reference_hj_resolution()), "G(Y) is not shaped like the drawn graph");

  std::string removed;
  for (const auto& c : r.certificates) removed += (removed.empty() ? "" : ",") + c.removed;
  o.require(r.certificates.size() == 1,
            "minimize removed " + std::to_string(r.certificates.size()) + " vertices (" + removed + "), expected exactly one");
  o.require(are_isomorphic(without_arrows(r.minimal), reference_minimal_resolution()),
            "minimal graph has " + std::to_string(r.minimal.vertex_count()) +
                " vertices and is not shaped like the drawn minimal resolution (10 vertices)");
  return o;
}

Outcome property_suites(const std::string& unit_binary) {
  Outcome o;
  if (unit_binary.empty()) {
    o.require(false, "unit-test binary not given");
    return o;
  }
  const std::string cmd = "\"" + unit_binary + "\" --test-case='property:*' --minimal";
  o.require(std::system(cmd.c_str()) == 0, "property suites failed");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string unit_binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 x^5 y^11 with d = 12 gives the bamboo (-3,-2,-3)", x5_y11_bamboo},
      {"2 A_(n-1) chains for n = 2..30", a_n},
      {"3 quasi-ordinary families for n <= 51", quasi_ordinary},
      {"4 lens links for n <= 50", lens_links},
      {"5 three-branch curve, double cover and minimal model", three_branch_cover},
      {"6 property suites", [&] { return property_suites(unit_binary); }},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << static_cast<long>(ms) << " ms)";
    if (!o.ok) line << "  -- " << o.detail;
    std::cout << line.str() << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
