#include "singlink/curve.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "singlink/errors.hpp"
#include "singlink/resolution.hpp"
#include "singlink/series.hpp"

namespace singlink {

PuiseuxBranch PuiseuxBranch::axis_x(bool tracked) {
  PuiseuxBranch b;
  b.kind = Kind::AxisX;
  b.tracked = tracked;
  return b;
}

PuiseuxBranch PuiseuxBranch::axis_y(bool tracked) {
  PuiseuxBranch b;
  b.kind = Kind::AxisY;
  b.tracked = tracked;
  return b;
}

PuiseuxBranch PuiseuxBranch::series(std::vector<PuiseuxTerm> terms, std::int64_t weight) {
  PuiseuxBranch b;
  b.terms = std::move(terms);
  b.weight = weight;
  return b;
}

std::int64_t PuiseuxBranch::ramification() const {
  std::int64_t n = 1;
  for (const auto& t : terms) {
    const mpz_class den = t.exponent.get_den();
    if (!den.fits_slong_p()) fail(ErrorCode::Overflow, "exponent denominator too large");
    n = std::lcm(n, static_cast<std::int64_t>(den.get_si()));
  }
  return n;
}

namespace {

using Kind = PuiseuxBranch::Kind;

void validate(const PuiseuxBranch& b, std::size_t index) {
  const std::string where = "branch " + std::to_string(index + 1);
  if (b.weight < 1) fail(ErrorCode::InvalidBranch, where + ": weight must be positive");
  if (b.kind != Kind::Series) {
    if (!b.terms.empty()) fail(ErrorCode::InvalidBranch, where + ": an axis branch carries no terms");
    return;
  }
  if (b.terms.empty()) fail(ErrorCode::InvalidBranch, where + ": a series branch needs at least one term");
  for (std::size_t i = 0; i < b.terms.size(); ++i) {
    if (b.terms[i].exponent <= 0) fail(ErrorCode::InvalidBranch, where + ": exponents must be positive");
    if (b.terms[i].coefficient == 0) fail(ErrorCode::InvalidBranch, where + ": coefficients must be non-zero");
    if (i > 0 && b.terms[i].exponent <= b.terms[i - 1].exponent)
      fail(ErrorCode::InvalidBranch, where + ": exponents must be strictly increasing");
  }
}

// Does `a` coincide with the first a.size() terms of some Galois conjugate
// of `b` (y^(1/N) -> zeta y^(1/N))? Rational coefficients only allow the
// conjugates acting on each term by +1 or -1.
bool matches_conjugate_prefix(const std::vector<PuiseuxTerm>& a, const PuiseuxBranch& b) {
  if (a.size() > b.terms.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exponent != b.terms[i].exponent) return false;
  const std::int64_t n = b.ramification();
  for (std::int64_t j = 0; j < n; ++j) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      const mpq_class scaled = b.terms[i].exponent * n;
      const mpz_class k = (scaled.get_num() * j) % n;
      const mpq_class ratio = a[i].coefficient / b.terms[i].coefficient;
      if (k == 0) ok = ratio == 1;
      else if (2 * k == n) ok = ratio == -1;
      else ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool same_germ(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Kind::Series) return true;
  return a.terms.size() == b.terms.size() && matches_conjugate_prefix(a.terms, b);
}

std::vector<PuiseuxBranch> prepare(const std::vector<PuiseuxBranch>& input, const CurveOptions& opts) {
  if (input.empty()) fail(ErrorCode::InvalidBranch, "no branches given");
  std::vector<PuiseuxBranch> out;
  std::size_t series_count = 0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    validate(input[i], i);
    PuiseuxBranch b = input[i];
    if (b.kind == Kind::Series) ++series_count;
    if (b.label.empty()) {
      if (b.kind == Kind::AxisX) b.label = "x=0";
      else if (b.kind == Kind::AxisY) b.label = "y=0";
      else b.label = "delta_" + std::to_string(series_count);
    }
    auto dup = std::find_if(out.begin(), out.end(), [&](const PuiseuxBranch& o) { return same_germ(o, b); });
    if (dup != out.end()) {
      if (!opts.merge_duplicates)
        fail(ErrorCode::NotReduced, "branch " + std::to_string(i + 1) + " repeats branch '" + dup->label + "'");
      dup->weight = checked_add(dup->weight, b.weight);
      dup->tracked = dup->tracked && b.tracked;
      continue;
    }
    out.push_back(std::move(b));
  }
  for (const auto& a : out)
    for (const auto& b : out) {
      if (&a == &b || a.kind != Kind::Series || b.kind != Kind::Series || a.exact) continue;
      if (a.terms.size() < b.terms.size() && matches_conjugate_prefix(a.terms, b))
        fail(ErrorCode::InsufficientTruncation,
             "branch '" + a.label + "' is a truncation of branch '" + b.label + "'; extend it or mark it exact");
    }
  if (std::all_of(out.begin(), out.end(), [](const PuiseuxBranch& b) { return b.tracked; }))
    fail(ErrorCode::InvalidBranch, "every branch is tracked-only; the curve is empty");
  return out;
}

std::optional<std::size_t> budget_from_env() {
  const char* raw = std::getenv("SINGLINK_BLOWUP_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  std::size_t v = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    fail(ErrorCode::ParseError, "SINGLINK_BLOWUP_BUDGET must be a positive integer");
  return v;
}

// One branch in the local coordinates (u, v) of an infinitely near point.
struct Param {
  std::size_t branch;
  Series u;
  Series v;
};

struct Point {
  std::optional<std::string> div_u;  // exceptional component {u = 0}, if any
  std::optional<std::string> div_v;  // exceptional component {v = 0}, if any
  std::vector<Param> params;
  bool root = false;
};

// Lowest degree carrying a non-zero coefficient in u or v.
std::size_t min_order(const Param& p) {
  for (std::size_t d = 1;; ++d)
    if (p.u[d] != 0 || p.v[d] != 0) return d;
}

class Resolver {
 public:
  Resolver(const std::vector<PuiseuxBranch>& branches, std::size_t precision, std::size_t budget)
      : branches_(branches), precision_(precision), budget_(budget) {}

  CurveResolution run() {
    Point root;
    root.root = true;
    for (std::size_t i = 0; i < branches_.size(); ++i) root.params.push_back(initial_param(i));
    placements_.assign(branches_.size(), ArrowPlacement{});
    arrows_.assign(branches_.size(), std::nullopt);

    std::deque<Point> queue{std::move(root)};
    while (!queue.empty()) {
      Point p = std::move(queue.front());
      queue.pop_front();
      if (is_resolved(p)) {
        place_arrows(p);
      } else {
        for (auto& child : blow_up(p)) queue.push_back(std::move(child));
      }
    }

    CurveResolution out;
    out.graph = std::move(graph_);
    for (std::size_t i = 0; i < branches_.size(); ++i) {
      const auto& b = branches_[i];
      placements_[i].label = b.label;
      placements_[i].tracked = b.tracked;
      out.graph.add_arrow(Arrow{arrows_[i], b.label, b.tracked ? std::nullopt : std::optional<std::int64_t>(b.weight)});
    }
    out.placements = std::move(placements_);
    out.blowups = created_;
    return out;
  }

 private:
  Param initial_param(std::size_t i) const {
    const auto& b = branches_[i];
    switch (b.kind) {
      case Kind::AxisX: return {i, Series{}, Series::monomial(1)};
      case Kind::AxisY: return {i, Series::monomial(1), Series{}};
      case Kind::Series: break;
    }
    const std::int64_t n = b.ramification();
    std::vector<mpq_class> x;
    for (const auto& t : b.terms) {
      const mpq_class deg = t.exponent * n;
      const std::size_t k = deg.get_num().get_ui();
      if (x.size() <= k) x.resize(k + 1, 0);
      x[k] = t.coefficient;
    }
    return {i, Series::exact(std::move(x)), Series::monomial(static_cast<std::size_t>(n))};
  }

  std::vector<const Param*> factors(const Point& p) const {
    std::vector<const Param*> out;
    for (const auto& q : p.params)
      if (!branches_[q.branch].tracked) out.push_back(&q);
    return out;
  }

  bool is_resolved(const Point& p) const {
    const auto f = factors(p);
    if (p.root) return f.size() == 1 && (f[0]->u[1] != 0 || f[0]->v[1] != 0);
    if (p.div_u && p.div_v) return f.empty();
    if (f.empty()) return true;
    return f.size() == 1 && transverse_to_divisor(p, *f[0]);
  }

  static bool transverse_to_divisor(const Point& p, const Param& q) {
    if (p.div_u && p.div_v) return false;
    return p.div_v ? q.v[1] != 0 : q.u[1] != 0;
  }

  std::size_t creation_index(const std::string& id) const { return order_.at(id); }

  void place_arrows(const Point& p) {
    std::optional<std::string> at;
    if (p.div_u && p.div_v) at = creation_index(*p.div_u) > creation_index(*p.div_v) ? p.div_u : p.div_v;
    else at = p.div_u ? p.div_u : p.div_v;
    for (const auto& q : p.params) {
      arrows_[q.branch] = at;
      placements_[q.branch].vertex = at;
      placements_[q.branch].transverse = at.has_value() && transverse_to_divisor(p, q);
    }
  }

  std::vector<Point> blow_up(const Point& p) {
    if (created_ >= budget_)
      fail(ErrorCode::InsufficientTruncation,
           "blow-up budget of " + std::to_string(budget_) + " exhausted; branches may not separate");

    std::int64_t mult = 0;
    for (const auto& d : {p.div_u, p.div_v})
      if (d) mult = checked_add(mult, *graph_.vertex(*d).mult);
    for (const Param* q : factors(p))
      mult = checked_add(mult, checked_mul(branches_[q->branch].weight, static_cast<std::int64_t>(min_order(*q))));

    ++created_;
    const std::string e = "E" + std::to_string(created_);
    order_[e] = created_;
    Vertex v;
    v.id = e;
    v.euler = -1;
    v.mult = mult;
    v.name = "E_" + std::to_string(created_);
    graph_.add_vertex(std::move(v));
    for (const auto& d : {p.div_u, p.div_v})
      if (d) graph_.vertex(*d).euler = *graph_.vertex(*d).euler - 1;
    if (p.div_u && p.div_v) graph_.remove_edge(*p.div_u, *p.div_v);
    for (const auto& d : {p.div_u, p.div_v})
      if (d) graph_.add_edge(*d, e);

    // Chart A: u = v u' (E = {v = 0}); chart B: v = u v' (E = {u = 0}).
    std::optional<Point> a0, b0;
    std::map<mpq_class, Point> ac;
    for (const auto& q : p.params) {
      const std::size_t d = min_order(q);
      const bool u_lead = q.u[d] != 0, v_lead = q.v[d] != 0;
      const Series us = q.u.shifted_down(d), vs = q.v.shifted_down(d);
      if (v_lead) {
        Series quotient = Series::divide(us, vs, precision_);
        if (!u_lead) {
          if (!a0) a0 = Point{p.div_u, e, {}, false};
          a0->params.push_back({q.branch, std::move(quotient), q.v});
        } else {
          const mpq_class c = q.u[d] / q.v[d];
          auto it = ac.try_emplace(c, Point{std::nullopt, e, {}, false}).first;
          it->second.params.push_back({q.branch, quotient.minus_constant(c), q.v});
        }
      } else {
        if (!b0) b0 = Point{e, p.div_v, {}, false};
        b0->params.push_back({q.branch, q.u, Series::divide(vs, us, precision_)});
      }
    }
    std::vector<Point> children;
    if (a0) children.push_back(std::move(*a0));
    for (auto& [c, pt] : ac) children.push_back(std::move(pt));
    if (b0) children.push_back(std::move(*b0));
    return children;
  }

  const std::vector<PuiseuxBranch>& branches_;
  std::size_t precision_;
  std::size_t budget_;
  PlumbingGraph graph_;
  std::map<std::string, std::size_t> order_;
  std::size_t created_ = 0;
  std::vector<ArrowPlacement> placements_;
  std::vector<std::optional<std::string>> arrows_;
};

std::size_t initial_precision(const std::vector<PuiseuxBranch>& branches) {
  std::size_t top = 0;
  for (const auto& b : branches) {
    const std::int64_t n = b.ramification();
    for (const auto& t : b.terms) {
      const mpq_class deg = t.exponent * n;
      top = std::max<std::size_t>(top, deg.get_num().get_ui());
    }
  }
  return std::max<std::size_t>(32, 2 * top + 8);
}

}  // namespace

std::size_t default_blowup_budget(const std::vector<PuiseuxBranch>& branches) {
  std::size_t total_ramification = 0;
  mpq_class top_exponent = 1;
  for (const auto& b : branches) {
    total_ramification += static_cast<std::size_t>(b.ramification());
    for (const auto& t : b.terms) top_exponent = std::max(top_exponent, t.exponent);
  }
  const std::size_t k = branches.size();
  const std::size_t pairs = std::max<std::size_t>(1, k * (k - 1) / 2);
  mpz_class ceil_top;
  mpz_cdiv_q(ceil_top.get_mpz_t(), top_exponent.get_num_mpz_t(), top_exponent.get_den_mpz_t());
  return 10 * total_ramification * pairs * (1 + ceil_top.get_ui());
}

CurveResolution resolve_curve(const std::vector<PuiseuxBranch>& input, const CurveOptions& opts) {
  const std::vector<PuiseuxBranch> branches = prepare(input, opts);
  std::size_t budget = opts.blowup_budget ? *opts.blowup_budget : 0;
  if (!opts.blowup_budget) {
    const auto env = budget_from_env();
    budget = env ? *env : default_blowup_budget(branches);
  }

  for (std::size_t precision = initial_precision(branches);; precision *= 2) {
    try {
      CurveResolution res = Resolver(branches, precision, budget).run();
      for (const auto& [id, v] : res.graph.vertices())
        if (is_contractible(res.graph, id))
          throw std::logic_error("curve resolution is not minimal at '" + id + "'");
      return res;
    } catch (const PrecisionExhausted&) {
      if (precision * 2 > opts.max_precision)
        fail(ErrorCode::InsufficientTruncation,
             "series precision " + std::to_string(precision) + " exhausted while separating branches");
    }
  }
}

}  // namespace singlink
