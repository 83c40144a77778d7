#pragma once

// Exact partial sums of four phi power series with closed-form residuals,
// the weighted instance 1 phi^-2 + 2 phi^-3 + ... = phi^2, and a certificate
// for pi/4 = arctan(phi^3) - arctan(phi^-1).

#include <optional>
#include <string>
#include <vector>

#include "phitile/golden.hpp"

namespace phitile {

inline constexpr long kDefaultEchoBits = 256;

enum class Formula {
  odd_powers,      // sum_k phi^(n-2k+1)      = phi^n
  all_powers,      // sum_k phi^(n-k)         = phi^(n+1)
  fib_weighted,    // sum_k F_k phi^(n-2k+1)  = phi^(n+2) / 2
  arith_weighted,  // sum_k k phi^(n-k)       = phi^(n+3)
};

std::string to_string(Formula f);
Formula formula_from_string(const std::string& s);

struct SeriesReport {
  Formula formula = Formula::odd_powers;
  int n = 0;
  int terms = 0;
  GoldenNumber partial;
  GoldenNumber rhs;
  GoldenNumber residual;
  std::string float_echo;  // partial, decimal

  friend bool operator==(const SeriesReport&, const SeriesReport&) = default;
};

enum class CertificateKind { congruence, perpendicularity, angle };
enum class CheckKind { equality, sign, float_bound };

std::string to_string(CertificateKind k);
std::string to_string(CheckKind k);

struct Fact {
  CertificateKind category = CertificateKind::congruence;
  CheckKind check = CheckKind::equality;
  std::string description;
  bool pass = false;
  std::optional<GoldenNumber> lhs;
  std::optional<GoldenNumber> rhs;
  std::string float_echo;
};

struct Certificate {
  CertificateKind kind = CertificateKind::angle;
  std::vector<Fact> facts;
  std::string float_echo;

  bool passed() const;
};

namespace series {

/// k-th term (k >= 1).
GoldenNumber term(Formula f, int n, int k);
GoldenNumber rhs(Formula f, int n);
/// Exact tail sum after K terms, from the closed forms.
GoldenNumber closed_residual(Formula f, int n, int terms);

/// Throws std::invalid_argument when terms < 1.
SeriesReport partial_sum(Formula f, int n, int terms, long echo_bits = kDefaultEchoBits);

/// partial + residual == rhs exactly and residual > 0.
bool consistent(const SeriesReport& r);

/// 1 phi^-2 + 2 phi^-3 + ... = phi^2, i.e. arith_weighted at n = -1.
SeriesReport sequent_instance(int terms, long echo_bits = kDefaultEchoBits);

/// O, Q = (phi^(n+6), 0), R = (phi^(n+6), phi^(n+5)), S = R + (0, phi^(n+6)),
/// T = S - (phi^(n+5), 0): congruent right triangles OQR and RST make ORT a
/// right isosceles triangle.
Certificate pi_quarter_certificate(int n, long echo_bits = kDefaultEchoBits);

struct DividerSums {
  SeriesReport odd;  // horizontal descending segments
  SeriesReport all;  // all descending segments
  GoldenNumber horizontal_sum;
  GoldenNumber total_sum;
  bool horizontal_match = false;
  bool total_match = false;
};

/// Sums the first `segments` descending divider segments for anchor n and
/// compares them with the odd_powers / all_powers partial sums.
DividerSums divider_sums_check(int n, int segments, long echo_bits = kDefaultEchoBits);

}  // namespace series

}  // namespace phitile
