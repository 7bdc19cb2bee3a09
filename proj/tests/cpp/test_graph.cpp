#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "singlink/errors.hpp"
#include "singlink/graph.hpp"
#include "singlink/lens.hpp"

using namespace singlink;

TEST_SUITE_BEGIN("graph");

namespace {

PlumbingGraph chain(const std::vector<std::int64_t>& eulers) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < eulers.size(); ++i) {
    g.add_vertex(Vertex{"E" + std::to_string(i + 1), 0, eulers[i], std::nullopt, ""});
    if (i) g.add_edge("E" + std::to_string(i), "E" + std::to_string(i + 1));
  }
  return g;
}

}  // namespace

TEST_CASE("intersection matrix of the (-3,-2,-3) bamboo") {
  const auto m = intersection_matrix(chain({-3, -2, -3}));
  CHECK(m.order == std::vector<std::string>{"E1", "E2", "E3"});
  CHECK(m.entries == oracle::Matrix{{-3, 1, 0}, {1, -2, 1}, {0, 1, -3}});
}

TEST_CASE("intersection matrix corner cases") {
  CHECK(intersection_matrix(chain({-1})).entries == oracle::Matrix{{-1}});
  CHECK(intersection_matrix(PlumbingGraph{}).entries.empty());

  PlumbingGraph g = chain({-4, -2});
  g.add_edge("E1", "E1");
  g.add_edge("E1", "E2");
  CHECK(intersection_matrix(g).entries == oracle::Matrix{{-2, 2}, {2, -2}});
  CHECK(g.warnings().size() == 1);

  PlumbingGraph u;
  u.add_vertex(Vertex{"A", 0, std::nullopt, std::nullopt, ""});
  CHECK_THROWS_AS(intersection_matrix(u), Error);
  try {
    determinant(u);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownEulerNumber);
  }
}

TEST_CASE("determinants") {
  CHECK(determinant(chain({-3, -2, -3})) == -12);
  CHECK(oracle::cofactor_det(intersection_matrix(chain({-3, -2, -3})).entries) == -12);
  CHECK(determinant(chain({-1})) == -1);
  CHECK(determinant(PlumbingGraph{}) == 1);
  for (int n = 2; n <= 9; ++n) {
    const auto g = chain(std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), -2));
    const mpz_class expected = (n % 2 == 0 ? -1 : 1) * n;  // (-1)^(n-1) n
    CHECK(determinant(g) == expected);
    CHECK(oracle::cofactor_det(intersection_matrix(g).entries) == expected);
  }
}

TEST_CASE("negative definiteness") {
  const auto minors = leading_principal_minors(intersection_matrix(chain({-3, -2, -3})).entries);
  CHECK(minors == std::vector<BigInt>{-3, 5, -12});
  CHECK(is_negative_definite(chain({-3, -2, -3})));
  CHECK_FALSE(is_negative_definite(chain({0})));
  CHECK(is_negative_definite(chain({-1})));
  CHECK_FALSE(is_negative_definite(chain({-1, -1})));
}

TEST_CASE("leading minors survive a zero pivot") {
  const oracle::Matrix m{{0, 1, 0}, {1, 0, 1}, {0, 1, 2}};
  const auto minors = leading_principal_minors(m);
  CHECK(minors == std::vector<BigInt>{0, -1, oracle::cofactor_det(m)});
}

TEST_CASE("bamboo and rupture predicates") {
  CHECK(is_bamboo(chain({-3, -2, -3})));
  CHECK(is_bamboo(chain({-7})));
  CHECK_FALSE(is_bamboo(PlumbingGraph{}));
  PlumbingGraph cyc = chain({-2, -2, -2});
  cyc.add_edge("E1", "E3");
  CHECK_FALSE(is_bamboo(cyc));
  CHECK(cycle_rank(cyc) == 1);

  const auto g = chain({-3, -2, -3});
  CHECK_FALSE(is_rupture_vertex(g, "E2"));
  PlumbingGraph star = chain({-2, -1, -2});
  star.add_vertex(Vertex{"E4", 0, -2, std::nullopt, ""});
  star.add_edge("E2", "E4");
  CHECK(is_rupture_vertex(star, "E2"));
  PlumbingGraph torus;
  torus.add_vertex(Vertex{"T", 1, -1, std::nullopt, ""});
  CHECK(is_rupture_vertex(torus, "T"));
  CHECK_FALSE(is_bamboo(torus));
  CHECK_THROWS_AS(is_rupture_vertex(g, "nope"), Error);
}

TEST_CASE("referential integrity") {
  PlumbingGraph g = chain({-2});
  CHECK_THROWS_AS(g.add_edge("E1", "X"), Error);
  CHECK_THROWS_AS(g.add_arrow(Arrow{"X", "a", 1}), Error);
  CHECK_THROWS_AS(g.add_vertex(Vertex{"E1", 0, -2, std::nullopt, ""}), Error);
  CHECK_THROWS_AS(g.add_vertex(Vertex{"G", -1, -2, std::nullopt, ""}), Error);
  g.add_arrow(Arrow{"E1", "a", 1});
  g.remove_vertex("E1");
  CHECK_FALSE(g.arrows().front().at.has_value());
}

TEST_CASE("property: matrix symmetry, determinant and definiteness against naive oracles") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 400; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 8, -5, 2);
    const auto m = intersection_matrix(g);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) REQUIRE(m.entries[i][j] == m.entries[j][i]);
    REQUIRE(determinant(g) == oracle::cofactor_det(m.entries));
    if (g.vertex_count() <= 6) REQUIRE(is_negative_definite(g) == oracle::negative_definite_by_all_minors(m.entries));
  }
}

TEST_CASE("property: bamboos have |V| - 1 edges and genus zero") {
  std::mt19937_64 rng(7);
  int seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const PlumbingGraph g = oracle::random_graph(rng, 6, -3, -1);
    if (!is_bamboo(g)) continue;
    ++seen;
    CHECK(g.edge_count() + 1 == g.vertex_count());
    for (const auto& [id, v] : g.vertices()) CHECK(v.genus == 0);
  }
  CHECK(seen > 20);
}
TEST_SUITE_END();
