#include "phitile/golden.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace phitile {

GoldenNumber::GoldenNumber(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

GoldenNumber GoldenNumber::conjugate() const { return {a_ + b_, -b_}; }

mpq_class GoldenNumber::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

GoldenNumber GoldenNumber::inverse() const {
  if (is_zero()) throw std::domain_error("GoldenNumber: inverse of zero");
  const mpq_class n = norm();
  return {(a_ + b_) / n, -b_ / n};
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

// (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& y) {
  const mpq_class bd = b_ * y.b_;
  mpq_class a = a_ * y.a_ + bd;
  mpq_class b = a_ * y.b_ + b_ * y.a_ + bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& y) { return *this *= y.inverse(); }

std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
  const int s = gn_sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string GoldenNumber::to_string() const {
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + mpq_class(abs(b_)).get_str() + "*phi";
}

GoldenNumber gn_add(const GoldenNumber& x, const GoldenNumber& y) { return x + y; }

GoldenNumber gn_mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }

int gn_sign(const GoldenNumber& x) {
  // 2(a + b phi) = s + b sqrt5 with s = 2a + b.
  const mpq_class s = 2 * x.a() + x.b();
  const int ss = sgn(s);
  const int sb = sgn(x.b());
  if (sb == 0) return ss;
  if (ss == 0 || ss == sb) return sb;
  // Opposite signs: whichever of |s| and |b| sqrt5 is larger wins.
  const int cmp_sq = cmp(s * s, 5 * x.b() * x.b());
  return cmp_sq > 0 ? ss : sb;
}

BigFloat gn_to_float(const GoldenNumber& x, long bits) {
  if (bits < 53) throw std::invalid_argument("gn_to_float: precision must be >= 53 bits");
  const auto target = static_cast<mpfr_prec_t>(bits);
  BigFloat out(target);
  if (sgn(x.b()) == 0) {
    mpfr_set_q(out.raw(), x.a().get_mpq_t(), MPFR_RNDN);
    return out;
  }
  // x = (s + b sqrt5) / 2 with s = 2a + b. The sum is irrational so the
  // Ziv loop below terminates.
  const mpq_class s = 2 * x.a() + x.b();
  for (mpfr_prec_t work = target + 32;; work *= 2) {
    BigFloat root = BigFloat::sqrt5(work);
    BigFloat bterm(x.b(), work);
    BigFloat sterm(s, work);
    BigFloat prod = bterm * root;
    BigFloat sum = prod + sterm;
    mpfr_div_2ui(sum.raw(), sum.raw(), 1, MPFR_RNDN);
    if (sum.sign() == 0) continue;
    // Each rounding contributes at most one ulp of the largest operand.
    const mpfr_exp_t big = std::max(mpfr_get_exp(prod.raw()),
                                    sgn(s) == 0 ? mpfr_get_exp(prod.raw()) : mpfr_get_exp(sterm.raw()));
    const mpfr_exp_t lost = big - mpfr_get_exp(sum.raw()) + 1;
    const mpfr_exp_t err = work - 3 - std::max<mpfr_exp_t>(lost, 0);
    if (err > target + 1 && mpfr_can_round(sum.raw(), err, MPFR_RNDN, MPFR_RNDZ, target + 1)) {
      mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
      return out;
    }
  }
}

mpz_class fibonacci(std::int64_t n) {
  const std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), m);
  if (n < 0 && m % 2 == 0) f = -f;
  return f;
}

GoldenNumber phi_pow(std::int64_t n, std::int64_t bound) {
  if (n > bound || n < -bound) {
    throw std::out_of_range("phi_pow: exponent " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  }
  return {mpq_class(fibonacci(n - 1)), mpq_class(fibonacci(n))};
}

std::optional<std::int64_t> phi_log(const GoldenNumber& x, std::int64_t bound) {
  if (gn_sign(x) <= 0) return std::nullopt;
  if (sgn(x.b()) == 0) {
    if (x.a() == 1) return 0;
    return std::nullopt;
  }
  if (x.a().get_den() != 1 || x.b().get_den() != 1) return std::nullopt;
  // |F_m| ~ phi^m / sqrt5, so m ~ log(|b| sqrt5) / log(phi).
  BigFloat mag(mpq_class(abs(x.b())), 64);
  mpfr_log(mag.raw(), mag.raw(), MPFR_RNDN);
  const double m = (mag.to_double() + 0.5 * std::log(5.0)) / std::log((1.0 + std::sqrt(5.0)) / 2.0);
  const auto guess = static_cast<std::int64_t>(std::llround(m));
  for (std::int64_t d = -2; d <= 2; ++d) {
    const std::int64_t k = guess + d;
    if (k < 0 || k > bound) continue;
    for (const std::int64_t cand : {k, -k}) {
      if (phi_pow(cand, bound) == x) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace phitile
