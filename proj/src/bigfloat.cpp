#include "phitile/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace phitile {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& q, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt5(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_sqrt_ui(r.value_, 5, MPFR_RNDN);
  return r;
}

mpfr_prec_t BigFloat::max_prec(const BigFloat& x, const BigFloat& y) {
  return std::max(x.precision(), y.precision());
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
  BigFloat r(BigFloat::max_prec(x, y));
  mpfr_add(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) {
  BigFloat r(BigFloat::max_prec(x, y));
  mpfr_sub(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
  BigFloat r(BigFloat::max_prec(x, y));
  mpfr_mul(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
  BigFloat r(BigFloat::max_prec(x, y));
  mpfr_div(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

BigFloat atan(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_atan(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDN);
  return r;
}

}  // namespace phitile
