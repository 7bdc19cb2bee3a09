#include "singlink/lens.hpp"

#include <charconv>
#include <numeric>
#include <tuple>

#include "singlink/errors.hpp"

namespace singlink {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
  }
  if (r0 != 1) fail(ErrorCode::NotCoprime, std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  return ((t0 % n) + n) % n;
}

LensParams make_lens(std::int64_t n, std::int64_t q) {
  if (n < 0) fail(ErrorCode::OutOfRange, "lens space order must be non-negative");
  if (n == 0) {
    if (q != 1 && q != -1) fail(ErrorCode::NotCoprime, "L(0,q) requires q = +-1");
    return {0, 1};
  }
  const std::int64_t r = ((q % n) + n) % n;
  if (std::gcd(n, r) != 1) fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(q) + ") != 1");
  return {n, r};
}

namespace {

void require_coprime_range(std::int64_t n, std::int64_t q) {
  if (!(0 < q && q < n))
    fail(ErrorCode::OutOfRange, "expected 0 < q < n, got n=" + std::to_string(n) + ", q=" + std::to_string(q));
  if (std::gcd(n, q) != 1)
    fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(q) + ") != 1");
}

}  // namespace

HJBamboo hj_expand(std::int64_t n, std::int64_t q) {
  require_coprime_range(n, q);
  HJBamboo out;
  while (q != 0) {
    const std::int64_t b = (n + q - 1) / q;
    out.weights.push_back(b);
    std::tie(n, q) = std::make_pair(q, b * q - n);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> hj_evaluate(const HJBamboo& b) {
  std::int64_t n = 1, q = 0;
  for (auto it = b.weights.rbegin(); it != b.weights.rend(); ++it) {
    if (*it < 2) fail(ErrorCode::WeightTooSmall, "bamboo weight " + std::to_string(*it) + " is below 2");
    const std::int64_t next = checked_add(checked_mul(*it, n), -q);
    q = n;
    n = next;
  }
  return {n, q};
}

HJBamboo resolve_quasi_ordinary(std::int64_t n, std::int64_t q) {
  require_coprime_range(n, q);
  return hj_expand(n, n - q);
}

HJBamboo resolve_quasi_ordinary_by_line_blowups(std::int64_t n, std::int64_t q) {
  require_coprime_range(n, q);
  HJBamboo out;
  for (;;) {
    if (q == 1) {
      out.weights.insert(out.weights.end(), static_cast<std::size_t>(n - 1), 2);
      return out;
    }
    const std::int64_t m = n / q, r = n % q;
    out.weights.insert(out.weights.end(), static_cast<std::size_t>(m - 1), 2);
    if (r == 1) {
      out.weights.push_back(q + 1);
      return out;
    }
    out.weights.push_back(q / r + 2);
    std::tie(n, q) = std::make_pair(r, q % r);
  }
}

LensParams lens_of_quasi_ordinary(std::int64_t n, std::int64_t q) {
  require_coprime_range(n, q);
  return make_lens(n, n - q);
}

LensParams lens_of_bamboo(const HJBamboo& b) {
  const auto [n, q] = hj_evaluate(b);
  return make_lens(n, q);
}

bool lens_equivalent(const LensParams& a, const LensParams& b, bool oriented) {
  const LensParams x = make_lens(a.n, a.q), y = make_lens(b.n, b.q);
  if (x.n != y.n) return false;
  if (x.n <= 1) return true;
  const __int128 n = x.n;
  const auto congruent = [n](__int128 u, __int128 v) { return ((u - v) % n + n) % n == 0; };
  const __int128 p = static_cast<__int128>(x.q) * y.q;
  if (congruent(y.q, x.q) || congruent(p, 1)) return true;
  if (oriented) return false;
  return congruent(y.q, -static_cast<__int128>(x.q)) || congruent(p, -1);
}

bool is_S3(const LensParams& l) { return l.n == 1; }
bool is_S1xS2(const LensParams& l) { return l.n == 0; }

PlumbingGraph bamboo_graph(const HJBamboo& b, const std::string& prefix) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < b.weights.size(); ++i) {
    Vertex v;
    v.id = prefix + std::to_string(i + 1);
    v.euler = -b.weights[i];
    g.add_vertex(std::move(v));
    if (i > 0) g.add_edge(prefix + std::to_string(i), prefix + std::to_string(i + 1));
  }
  return g;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last)
    fail(ErrorCode::ParseError, "cannot parse integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) fail(ErrorCode::ParseError, "expected n/q, got '" + std::string(text) + "'");
  return {parse_int(text.substr(0, slash), "fraction"), parse_int(text.substr(slash + 1), "fraction")};
}

LensParams parse_lens(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 5 || t.substr(0, 2) != "L(" || t.back() != ')')
    fail(ErrorCode::ParseError, "expected L(n,q), got '" + std::string(text) + "'");
  const std::string_view body = t.substr(2, t.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) fail(ErrorCode::ParseError, "expected L(n,q), got '" + std::string(text) + "'");
  return make_lens(parse_int(body.substr(0, comma), "lens space"), parse_int(body.substr(comma + 1), "lens space"));
}

std::string to_string(const HJBamboo& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.weights.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b.weights[i]);
  }
  return out + "]";
}

std::string to_string(const LensParams& l) {
  return "L(" + std::to_string(l.n) + "," + std::to_string(l.q) + ")";
}

}  // namespace singlink
