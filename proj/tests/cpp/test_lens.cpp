#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "singlink/errors.hpp"
#include "singlink/lens.hpp"

using namespace singlink;

TEST_SUITE_BEGIN("lens");

namespace {

using W = std::vector<std::int64_t>;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_CASE("hj_expand examples") {
  CHECK(hj_expand(12, 5).weights == W{3, 2, 3});
  CHECK(hj_expand(5, 3).weights == W{2, 3});
  for (std::int64_t n = 2; n < 20; ++n) CHECK(hj_expand(n, 1).weights == W{n});
  CHECK(code_of([] { hj_expand(12, 4); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { hj_expand(5, 5); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { hj_expand(5, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("hj_evaluate examples") {
  CHECK(hj_evaluate(HJBamboo{{3, 2, 3}}) == std::pair<std::int64_t, std::int64_t>{12, 5});
  CHECK(hj_evaluate(HJBamboo{}) == std::pair<std::int64_t, std::int64_t>{1, 0});
  for (std::int64_t k = 1; k <= 8; ++k)
    CHECK(hj_evaluate(HJBamboo{W(static_cast<std::size_t>(k), 2)}) == std::pair<std::int64_t, std::int64_t>{k + 1, k});
  CHECK(code_of([] { hj_evaluate(HJBamboo{{3, 1}}); }) == ErrorCode::WeightTooSmall);
}

TEST_CASE("resolve_quasi_ordinary families") {
  for (std::int64_t n = 2; n <= 30; ++n) CHECK(resolve_quasi_ordinary(n, 1).weights == W(static_cast<std::size_t>(n - 1), 2));
  for (std::int64_t n = 2; n <= 51; ++n) CHECK(resolve_quasi_ordinary(n, n - 1).weights == W{n});
  for (std::int64_t n = 3; n <= 51; n += 2) CHECK(resolve_quasi_ordinary(n, n - 2).weights == W{(n + 1) / 2, 2});
  CHECK(code_of([] { resolve_quasi_ordinary(6, 4); }) == ErrorCode::NotCoprime);
}

TEST_CASE("lens parameters") {
  for (std::int64_t n = 2; n <= 30; ++n) CHECK(lens_of_quasi_ordinary(n, n - 1) == LensParams{n, 1});
  for (std::int64_t n = 3; n <= 31; n += 2) CHECK(lens_of_quasi_ordinary(n, n - 2) == LensParams{n, 2});
  CHECK(lens_of_quasi_ordinary(2, 1) == LensParams{2, 1});
  CHECK(lens_of_bamboo(HJBamboo{}) == LensParams{1, 0});
  CHECK(is_S3(lens_of_bamboo(HJBamboo{})));
  CHECK(lens_of_bamboo(HJBamboo{{7}}) == LensParams{7, 1});
  CHECK(is_S1xS2(make_lens(0, 1)));
  CHECK(make_lens(0, -1) == LensParams{0, 1});
  CHECK_FALSE(is_S3(make_lens(12, 5)));
  CHECK_FALSE(is_S1xS2(make_lens(12, 5)));
  CHECK(make_lens(7, -2) == LensParams{7, 5});
  CHECK(code_of([] { make_lens(6, 3); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { make_lens(-1, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("lens_equivalent examples") {
  CHECK(lens_equivalent({7, 2}, {7, 4}, true));
  CHECK_FALSE(lens_equivalent({7, 2}, {7, 5}, true));
  CHECK(lens_equivalent({7, 2}, {7, 5}, false));
  CHECK_FALSE(lens_equivalent({5, 1}, {7, 1}, false));
  CHECK(lens_equivalent({0, 1}, {0, 1}, true));
}

TEST_CASE("parsing") {
  CHECK(parse_fraction("12/5") == std::pair<std::int64_t, std::int64_t>{12, 5});
  CHECK(parse_fraction(" 7 / 3 ") == std::pair<std::int64_t, std::int64_t>{7, 3});
  CHECK(parse_lens("L(7,2)") == LensParams{7, 2});
  CHECK(parse_lens("L(7, 9)") == LensParams{7, 2});
  CHECK(to_string(HJBamboo{{3, 2, 3}}) == "[3,2,3]");
  CHECK(to_string(HJBamboo{}) == "[]");
  CHECK(to_string(LensParams{12, 5}) == "L(12,5)");
  for (const char* bad : {"12", "12/", "a/b", "12/5x", ""})
    CHECK(code_of([bad] { parse_fraction(bad); }) == ErrorCode::ParseError);
  for (const char* bad : {"L(7)", "M(7,2)", "L(7,2", "L(x,2)"})
    CHECK(code_of([bad] { parse_lens(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("property: expand and evaluate round-trip for n <= 200") {
  for (std::int64_t n = 2; n <= 200; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const HJBamboo b = hj_expand(n, q);
      for (auto w : b.weights) REQUIRE(w >= 2);
      REQUIRE(hj_evaluate(b) == std::pair<std::int64_t, std::int64_t>{n, q});
      REQUIRE(oracle::continued_fraction_value(b.weights) == mpq_class(n, q));
    }
}

TEST_CASE("property: bamboo determinant and definiteness for n <= 50") {
  for (std::int64_t n = 2; n <= 50; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const PlumbingGraph g = bamboo_graph(hj_expand(n, q));
      REQUIRE(is_bamboo(g));
      REQUIRE(abs(determinant(g)) == n);
      REQUIRE(is_negative_definite(g));
    }
}

TEST_CASE("property: line blow-up recursion agrees with the continued fraction for n <= 50") {
  for (std::int64_t n = 2; n <= 50; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      REQUIRE(resolve_quasi_ordinary_by_line_blowups(n, q) == hj_expand(n, n - q));
      REQUIRE(resolve_quasi_ordinary(n, q) == hj_expand(n, n - q));
    }
}

TEST_CASE("property: lens of the quasi-ordinary bamboo for n <= 50") {
  for (std::int64_t n = 2; n <= 50; ++n)
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const LensParams l = lens_of_quasi_ordinary(n, q);
      REQUIRE(l == LensParams{n, n - q});
      REQUIRE(lens_equivalent(lens_of_bamboo(resolve_quasi_ordinary(n, q)), l, true));
    }
}

TEST_CASE("property: lens_equivalent is an equivalence relation") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 40)(rng);
    std::vector<LensParams> ls;
    for (std::int64_t q = 0; q < n; ++q)
      if (std::gcd(n, q) == 1) ls.push_back(make_lens(n, q));
    std::uniform_int_distribution<std::size_t> pick(0, ls.size() - 1);
    for (bool oriented : {true, false}) {
      const LensParams a = ls[pick(rng)], b = ls[pick(rng)], c = ls[pick(rng)];
      REQUIRE(lens_equivalent(a, a, oriented));
      REQUIRE(lens_equivalent(a, b, oriented) == lens_equivalent(b, a, oriented));
      if (lens_equivalent(a, b, oriented) && lens_equivalent(b, c, oriented)) REQUIRE(lens_equivalent(a, c, oriented));
      if (oriented && lens_equivalent(a, b, true)) REQUIRE(lens_equivalent(a, b, false));
    }
  }
}

TEST_SUITE_END();
