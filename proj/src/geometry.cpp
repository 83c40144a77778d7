#include "phitile/geometry.hpp"

#include <stdexcept>

namespace phitile {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::landscape:
      return "landscape";
    case Orientation::portrait:
      return "portrait";
    case Orientation::square:
      return "square";
  }
  return "square";
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "landscape") return Orientation::landscape;
  if (s == "portrait") return Orientation::portrait;
  if (s == "square") return Orientation::square;
  throw std::invalid_argument("unknown orientation '" + s + "'");
}

GoldenRect GoldenRect::with_exponents(const GoldenPoint& lo, int w, int h) {
  GoldenRect r;
  r.lo = lo;
  r.hi = {lo.x + phi_pow(w), lo.y + phi_pow(h)};
  r.width_exp = w;
  r.height_exp = h;
  return r;
}

Orientation GoldenRect::orientation() const {
  if (tagged()) {
    if (*height_exp > *width_exp) return Orientation::portrait;
    if (*height_exp < *width_exp) return Orientation::landscape;
    return Orientation::square;
  }
  const int s = gn_sign(height() - width());
  if (s > 0) return Orientation::portrait;
  if (s < 0) return Orientation::landscape;
  return Orientation::square;
}

bool is_valid(const GoldenRect& r) {
  if (gn_sign(r.width()) <= 0 || gn_sign(r.height()) <= 0) return false;
  if (r.width_exp.has_value() != r.height_exp.has_value()) return false;
  if (r.tagged()) {
    return r.width() == phi_pow(*r.width_exp) && r.height() == phi_pow(*r.height_exp);
  }
  return true;
}

bool canonical_less(const GoldenRect& a, const GoldenRect& b) {
  if (auto c = a.lo.x <=> b.lo.x; c != 0) return c < 0;
  if (auto c = a.lo.y <=> b.lo.y; c != 0) return c < 0;
  if (auto c = a.hi.x <=> b.hi.x; c != 0) return c < 0;
  return (a.hi.y <=> b.hi.y) < 0;
}

bool interiors_overlap(const GoldenRect& a, const GoldenRect& b) {
  return a.lo.x < b.hi.x && b.lo.x < a.hi.x && a.lo.y < b.hi.y && b.lo.y < a.hi.y;
}

bool contains(const GoldenRect& outer, const GoldenRect& inner) {
  return outer.lo.x <= inner.lo.x && inner.hi.x <= outer.hi.x && outer.lo.y <= inner.lo.y &&
         inner.hi.y <= outer.hi.y;
}

GoldenRect scaled(const GoldenRect& r, int phi_exp) {
  const GoldenNumber f = phi_pow(phi_exp);
  GoldenRect out{{r.lo.x * f, r.lo.y * f}, {r.hi.x * f, r.hi.y * f}, r.width_exp, r.height_exp};
  if (out.width_exp) *out.width_exp += phi_exp;
  if (out.height_exp) *out.height_exp += phi_exp;
  return out;
}

GoldenRect reflected(const GoldenRect& r) {
  return {{r.lo.y, r.lo.x}, {r.hi.y, r.hi.x}, r.height_exp, r.width_exp};
}

bool on_ray(const GoldenPoint& p, int k) {
  return gn_sign(p.x) >= 0 && p.y == phi_pow(k) * p.x;
}

bool polygon_contains(const std::vector<GoldenPoint>& ccw, const GoldenPoint& p) {
  const std::size_t n = ccw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GoldenPoint& a = ccw[i];
    const GoldenPoint& b = ccw[(i + 1) % n];
    const GoldenNumber cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (gn_sign(cross) < 0) return false;
  }
  return true;
}

}  // namespace phitile
