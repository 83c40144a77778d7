#pragma once

// Minimal RAII handle over an MPFR value. Only used for float echoes and
// rendering; no geometric predicate goes through here.

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace phitile {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 256);
  BigFloat(double v, mpfr_prec_t bits);
  BigFloat(const mpq_class& q, mpfr_prec_t bits);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }

  /// Decimal text with `digits` significant digits (%Rg formatting).
  std::string to_string(int digits = 30) const;

  static BigFloat pi(mpfr_prec_t bits);
  static BigFloat sqrt5(mpfr_prec_t bits);

  friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
  friend BigFloat atan(const BigFloat& x);
  friend BigFloat abs(const BigFloat& x);
  friend bool operator<(const BigFloat& x, const BigFloat& y) {
    return mpfr_less_p(x.value_, y.value_) != 0;
  }

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

 private:
  static mpfr_prec_t max_prec(const BigFloat& x, const BigFloat& y);
  mpfr_t value_;
};

}  // namespace phitile
