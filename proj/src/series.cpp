#include "singlink/series.hpp"

#include <algorithm>

namespace singlink {

namespace {
const mpq_class kZero = 0;
}

Series Series::exact(std::vector<mpq_class> coefs) {
  Series s;
  s.coefs_ = std::move(coefs);
  s.exact_ = true;
  s.trim();
  return s;
}

Series Series::monomial(std::size_t degree, const mpq_class& c) {
  std::vector<mpq_class> coefs(degree + 1, 0);
  coefs[degree] = c;
  return exact(std::move(coefs));
}

Series Series::truncated(std::vector<mpq_class> coefs) {
  Series s;
  s.coefs_ = std::move(coefs);
  s.exact_ = false;
  return s;
}

void Series::trim() {
  while (!coefs_.empty() && coefs_.back() == 0) coefs_.pop_back();
}

const mpq_class& Series::operator[](std::size_t k) const {
  if (k < coefs_.size()) return coefs_[k];
  if (exact_) return kZero;
  throw PrecisionExhausted();
}

Series Series::shifted_down(std::size_t d) const {
  Series s;
  s.exact_ = exact_;
  if (d < coefs_.size()) s.coefs_.assign(coefs_.begin() + static_cast<std::ptrdiff_t>(d), coefs_.end());
  return s;
}

Series Series::minus_constant(const mpq_class& c) const {
  Series s = *this;
  if (s.coefs_.empty()) {
    if (!s.exact_) throw PrecisionExhausted();
    s.coefs_.push_back(0);
  }
  s.coefs_[0] -= c;
  if (s.exact_) s.trim();
  return s;
}

Series Series::divide(const Series& p, const Series& q, std::size_t cap) {
  const mpq_class q0 = q[0];
  if (q0 == 0) throw std::invalid_argument("series division by a non-unit");

  if (q.exact_ && q.coefs_.size() == 1) {
    Series s = p;
    for (auto& c : s.coefs_) c /= q0;
    return s;
  }

  std::size_t prec = cap;
  if (!p.exact_) prec = std::min(prec, p.coefs_.size());
  if (!q.exact_) prec = std::min(prec, q.coefs_.size());

  std::vector<mpq_class> r(prec);
  for (std::size_t k = 0; k < prec; ++k) {
    mpq_class acc = p[k];
    const std::size_t upto = q.exact_ ? std::min(k, q.coefs_.empty() ? 0 : q.coefs_.size() - 1) : k;
    for (std::size_t j = 1; j <= upto; ++j) acc -= q[j] * r[k - j];
    r[k] = acc / q0;
  }
  return truncated(std::move(r));
}

}  // namespace singlink
