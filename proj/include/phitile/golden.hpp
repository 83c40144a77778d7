#pragma once

// Exact arithmetic in Q(phi): numbers a + b*phi with rational a, b, where
// phi = (1 + sqrt 5) / 2 satisfies phi^2 = phi + 1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "phitile/bigfloat.hpp"

namespace phitile {

inline constexpr std::int64_t kDefaultExponentBound = 10'000;

class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(mpq_class a, mpq_class b);
  // NOLINTNEXTLINE(google-explicit-constructor)
  GoldenNumber(long a) : a_(a), b_(0) {}

  static GoldenNumber phi() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Galois conjugate a + b*phi' with phi' = 1 - phi.
  GoldenNumber conjugate() const;
  /// Field norm x * conjugate(x) = a^2 + ab - b^2 (rational).
  mpq_class norm() const;
  /// Throws std::domain_error on zero.
  GoldenNumber inverse() const;

  GoldenNumber& operator+=(const GoldenNumber& y);
  GoldenNumber& operator-=(const GoldenNumber& y);
  GoldenNumber& operator*=(const GoldenNumber& y);
  GoldenNumber& operator/=(const GoldenNumber& y);

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a_, -x.b_}; }

  // phi is irrational, so structural equality is value equality.
  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y);

  std::string to_string() const;

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

GoldenNumber gn_add(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber gn_mul(const GoldenNumber& x, const GoldenNumber& y);

/// Exact sign of a + b*phi: -1, 0 or +1. Integer arithmetic only.
int gn_sign(const GoldenNumber& x);

/// Value of a + b*(1+sqrt5)/2 correctly rounded to `bits` (>= 53) bits.
BigFloat gn_to_float(const GoldenNumber& x, long bits = 256);

/// Extended Fibonacci number F_n for any integer n; F_{-n} = (-1)^{n+1} F_n.
mpz_class fibonacci(std::int64_t n);

/// phi^n = F_{n-1} + F_n * phi. Throws std::out_of_range when |n| > bound.
GoldenNumber phi_pow(std::int64_t n, std::int64_t bound = kDefaultExponentBound);

/// If x == phi^k for some integer k (|k| <= bound), returns k.
std::optional<std::int64_t> phi_log(const GoldenNumber& x,
                                    std::int64_t bound = kDefaultExponentBound);

}  // namespace phitile
