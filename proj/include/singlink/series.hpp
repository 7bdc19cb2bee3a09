#pragma once

// Truncated power series in one variable t with exact rational coefficients.
// A series is either exact (every coefficient past the stored ones is zero)
// or known only below its precision, in which case reading beyond it throws
// PrecisionExhausted so the caller can retry with a longer truncation.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace singlink {

struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted() : std::runtime_error("series precision exhausted") {}
};

class Series {
 public:
  Series() = default;
  static Series exact(std::vector<mpq_class> coefs);
  static Series monomial(std::size_t degree, const mpq_class& c = 1);
  static Series truncated(std::vector<mpq_class> coefs);  // precision = coefs.size()

  bool is_exact() const { return exact_; }
  bool is_exact_zero() const { return exact_ && coefs_.empty(); }
  // Number of known coefficients; meaningless for exact series.
  std::size_t precision() const { return coefs_.size(); }

  const mpq_class& operator[](std::size_t k) const;

  // Divides by t^d; the caller guarantees the low coefficients vanish.
  Series shifted_down(std::size_t d) const;
  Series minus_constant(const mpq_class& c) const;

  // p / q where q(0) != 0; an infinite quotient is truncated to `cap` terms.
  static Series divide(const Series& p, const Series& q, std::size_t cap);

  bool operator==(const Series&) const = default;

 private:
  void trim();

  std::vector<mpq_class> coefs_;
  bool exact_ = true;
};

}  // namespace singlink
