#pragma once

// Negative (Hirzebruch-Jung) continued fractions, lens spaces and the bamboo
// resolutions of the quasi-ordinary germs z^n = x y^q.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singlink/graph.hpp"

namespace singlink {

// Weights b_1..b_k, each >= 2; the plumbing graph carries euler = -b_i.
// The empty bamboo stands for a smooth point.
struct HJBamboo {
  std::vector<std::int64_t> weights;

  bool operator==(const HJBamboo&) const = default;
};

// L(n, q). For n >= 1 it is kept with 0 <= q < n and gcd(n, q) = 1;
// n = 0 (S^1 x S^2) is kept as (0, 1).
struct LensParams {
  std::int64_t n = 1;
  std::int64_t q = 0;

  bool operator==(const LensParams&) const = default;
};

LensParams make_lens(std::int64_t n, std::int64_t q);

// n/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)); requires 0 < q < n coprime.
HJBamboo hj_expand(std::int64_t n, std::int64_t q);
std::pair<std::int64_t, std::int64_t> hj_evaluate(const HJBamboo& b);

// Bamboo resolving z^n = x y^q, i.e. hj_expand(n, n - q).
HJBamboo resolve_quasi_ordinary(std::int64_t n, std::int64_t q);

// The same bamboo obtained by repeatedly blowing up the line {y = z = 0}:
// with n = m q + r each round contributes m - 1 vertices of weight 2 and one
// vertex where the germ continues as z^r = x y^(q mod r).
HJBamboo resolve_quasi_ordinary_by_line_blowups(std::int64_t n, std::int64_t q);

LensParams lens_of_quasi_ordinary(std::int64_t n, std::int64_t q);
LensParams lens_of_bamboo(const HJBamboo& b);

bool lens_equivalent(const LensParams& a, const LensParams& b, bool oriented = true);
bool is_S3(const LensParams& l);
bool is_S1xS2(const LensParams& l);

// Linear plumbing graph with ids <prefix>1..<prefix>k.
PlumbingGraph bamboo_graph(const HJBamboo& b, const std::string& prefix = "B");

// "12/5" and "L(7,2)".
std::pair<std::int64_t, std::int64_t> parse_fraction(std::string_view text);
LensParams parse_lens(std::string_view text);

std::string to_string(const HJBamboo& b);   // "[3,2,3]"
std::string to_string(const LensParams& l);  // "L(12,5)"

// Arithmetic helpers shared with the cover pipeline.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

}  // namespace singlink
