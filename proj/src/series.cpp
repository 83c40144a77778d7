#include "phitile/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "phitile/tiling.hpp"

namespace phitile {

std::string to_string(Formula f) {
  switch (f) {
    case Formula::odd_powers:
      return "ODD_POWERS";
    case Formula::all_powers:
      return "ALL_POWERS";
    case Formula::fib_weighted:
      return "FIB_WEIGHTED";
    case Formula::arith_weighted:
      return "ARITH_WEIGHTED";
  }
  return "ODD_POWERS";
}

Formula formula_from_string(const std::string& s) {
  if (s == "ODD_POWERS" || s == "odd") return Formula::odd_powers;
  if (s == "ALL_POWERS" || s == "all") return Formula::all_powers;
  if (s == "FIB_WEIGHTED" || s == "fib") return Formula::fib_weighted;
  if (s == "ARITH_WEIGHTED" || s == "arith") return Formula::arith_weighted;
  throw std::invalid_argument("unknown formula '" + s + "'");
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::congruence:
      return "congruence";
    case CertificateKind::perpendicularity:
      return "perpendicularity";
    case CertificateKind::angle:
      return "angle";
  }
  return "angle";
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::equality:
      return "equality";
    case CheckKind::sign:
      return "sign";
    case CheckKind::float_bound:
      return "float_bound";
  }
  return "equality";
}

bool Certificate::passed() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.pass; });
}

namespace series {

GoldenNumber term(Formula f, int n, int k) {
  switch (f) {
    case Formula::odd_powers:
      return phi_pow(n - 2 * k + 1);
    case Formula::all_powers:
      return phi_pow(n - k);
    case Formula::fib_weighted:
      return GoldenNumber(mpq_class(fibonacci(k)), 0) * phi_pow(n - 2 * k + 1);
    case Formula::arith_weighted:
      return GoldenNumber(k) * phi_pow(n - k);
  }
  return {};
}

GoldenNumber rhs(Formula f, int n) {
  switch (f) {
    case Formula::odd_powers:
      return phi_pow(n);
    case Formula::all_powers:
      return phi_pow(n + 1);
    case Formula::fib_weighted:
      return GoldenNumber(mpq_class(1, 2), 0) * phi_pow(n + 2);
    case Formula::arith_weighted:
      return phi_pow(n + 3);
  }
  return {};
}

GoldenNumber closed_residual(Formula f, int n, int terms) {
  const int K = terms;
  switch (f) {
    case Formula::odd_powers:
      return phi_pow(n - 2 * K);
    case Formula::all_powers:
      return phi_pow(n - K + 1);
    case Formula::fib_weighted: {
      // Tail of sum F_k x^k at x = phi^-2, using 1 - x - x^2 = 2 phi^-3.
      const GoldenNumber f_next(mpq_class(fibonacci(K + 1)), 0);
      const GoldenNumber f_k(mpq_class(fibonacci(K)), 0);
      return GoldenNumber(mpq_class(1, 2), 0) *
             (f_next * phi_pow(n - 2 * K + 2) + f_k * phi_pow(n - 2 * K));
    }
    case Formula::arith_weighted:
      return GoldenNumber(K) * phi_pow(n - K + 1) + phi_pow(n - K + 3);
  }
  return {};
}

SeriesReport partial_sum(Formula f, int n, int terms, long echo_bits) {
  if (terms < 1) throw std::invalid_argument("partial_sum: need at least one term");
  SeriesReport r;
  r.formula = f;
  r.n = n;
  r.terms = terms;
  for (int k = 1; k <= terms; ++k) r.partial += term(f, n, k);
  r.rhs = rhs(f, n);
  r.residual = closed_residual(f, n, terms);
  r.float_echo = gn_to_float(r.partial, echo_bits).to_string(30);
  return r;
}

bool consistent(const SeriesReport& r) {
  return r.partial + r.residual == r.rhs && gn_sign(r.residual) > 0;
}

SeriesReport sequent_instance(int terms, long echo_bits) {
  return partial_sum(Formula::arith_weighted, -1, terms, echo_bits);
}

namespace {

Fact exact_fact(CertificateKind cat, std::string text, const GoldenNumber& lhs, const GoldenNumber& rhs) {
  Fact f;
  f.category = cat;
  f.check = CheckKind::equality;
  f.description = std::move(text);
  f.pass = lhs == rhs;
  f.lhs = lhs;
  f.rhs = rhs;
  return f;
}

GoldenNumber dot(const GoldenPoint& u, const GoldenPoint& v) { return u.x * v.x + u.y * v.y; }

GoldenPoint minus(const GoldenPoint& p, const GoldenPoint& q) { return {p.x - q.x, p.y - q.y}; }

}  // namespace

Certificate pi_quarter_certificate(int n, long echo_bits) {
  const GoldenNumber big = phi_pow(n + 6);
  const GoldenNumber small = phi_pow(n + 5);
  const GoldenPoint o{0, 0};
  const GoldenPoint q{big, 0};
  const GoldenPoint r{big, small};
  const GoldenPoint s{big, small + big};
  const GoldenPoint t{big - small, small + big};

  Certificate cert;
  cert.kind = CertificateKind::angle;
  auto& facts = cert.facts;
  facts.push_back(exact_fact(CertificateKind::congruence, "|OQ| = |RS|", q.x - o.x, s.y - r.y));
  facts.push_back(exact_fact(CertificateKind::congruence, "|QR| = |ST|", r.y - q.y, s.x - t.x));
  facts.push_back(exact_fact(CertificateKind::congruence, "angle OQR is right", dot(minus(o, q), minus(r, q)), 0));
  facts.push_back(exact_fact(CertificateKind::congruence, "angle RST is right", dot(minus(r, s), minus(t, s)), 0));

  const GoldenNumber or2 = dot(r, r);
  const GoldenNumber rt = dot(minus(t, r), minus(t, r));
  facts.push_back(exact_fact(CertificateKind::congruence, "|OR|^2 = |RT|^2", or2, rt));
  facts.push_back(exact_fact(CertificateKind::congruence, "|OR|^2 = phi^(2n+12) + phi^(2n+10)", or2,
                             phi_pow(2 * n + 12) + phi_pow(2 * n + 10)));

  const GoldenNumber slope_or = r.y / r.x;
  const GoldenNumber slope_rt = (t.y - r.y) / (t.x - r.x);
  facts.push_back(exact_fact(CertificateKind::perpendicularity, "slope(OR) = phi^-1", slope_or, phi_pow(-1)));
  facts.push_back(exact_fact(CertificateKind::perpendicularity, "slope(RT) = -phi", slope_rt, -phi_pow(1)));
  facts.push_back(
      exact_fact(CertificateKind::perpendicularity, "slope(OR) * slope(RT) = -1", slope_or * slope_rt, -1));
  facts.push_back(exact_fact(CertificateKind::angle, "slope(OT) = phi^3", t.y / t.x, phi_pow(3)));

  // arctan(phi^3) - arctan(phi^-1) - pi/4
  const BigFloat a3 = atan(gn_to_float(phi_pow(3), echo_bits));
  const BigFloat a1 = atan(gn_to_float(phi_pow(-1), echo_bits));
  BigFloat quarter = BigFloat::pi(echo_bits) / BigFloat(4.0, echo_bits);
  const BigFloat diff = a3 - a1;
  const BigFloat gap = abs(diff - quarter);
  Fact angle;
  angle.category = CertificateKind::angle;
  angle.check = CheckKind::float_bound;
  angle.description = "|arctan(phi^3) - arctan(phi^-1) - pi/4| < 1e-12";
  angle.pass = gap < BigFloat(1e-12, echo_bits);
  angle.float_echo = gap.to_string(6);
  facts.push_back(std::move(angle));
  cert.float_echo = diff.to_string(30);
  return cert;
}

DividerSums divider_sums_check(int n, int segments, long echo_bits) {
  if (segments < 1) throw std::invalid_argument("divider_sums_check: need at least one segment");
  const tiling::DividerPath path = tiling::divider(n, segments, 0);
  DividerSums out;
  for (const auto& seg : path.descending()) {
    out.total_sum += seg.length;
    if (seg.direction == tiling::Direction::horizontal) out.horizontal_sum += seg.length;
  }
  out.odd = partial_sum(Formula::odd_powers, n, (segments + 1) / 2, echo_bits);
  out.all = partial_sum(Formula::all_powers, n, segments, echo_bits);
  out.horizontal_match = out.horizontal_sum == out.odd.partial;
  out.total_match = out.total_sum == out.all.partial;
  return out;
}

}  // namespace series

}  // namespace phitile
