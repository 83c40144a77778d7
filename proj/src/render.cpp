#include "phitile/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace phitile::render {

namespace {

constexpr long kProjectionBits = 64;
constexpr double kPixelWidth = 800.0;

const char* const kPalette[] = {"#f2e8cf", "#a7c957", "#6a994e", "#bc4749", "#386641", "#e9c46a",
                                "#f4a261", "#e76f51", "#2a9d8f", "#264653", "#8ab17d", "#b56576"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string style_attrs(const Style& s, double base_stroke) {
  std::string fill = s.fill;
  std::string out = " fill=\"" + fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" +
                    num(base_stroke * s.stroke_scale) + "\"";
  if (s.opacity != 1.0) out += " fill-opacity=\"" + num(s.opacity) + "\"";
  if (s.shaded) out += " class=\"shaded\"";
  return out;
}

RectShape rect_shape(const GoldenRect& r) {
  return {project(r.lo.x), project(r.lo.y), project(r.hi.x), project(r.hi.y)};
}

int colour_index(int v) {
  const int m = static_cast<int>(kPaletteSize);
  return ((v % m) + m) % m;
}

void add_rays(Scene& scene, const std::set<int>& slopes) {
  const Viewport& vp = scene.viewport;
  for (int k : slopes) {
    const double slope = project(phi_pow(k));
    const double x = std::min(vp.max_x, vp.max_y / slope);
    scene.elements.push_back({SegmentShape{0.0, 0.0, x, slope * x}, Style{"none", "#555555", 1.0, 0.6, false}, 2});
  }
}

}  // namespace

double project(const GoldenNumber& x) { return gn_to_float(x, kProjectionBits).to_double(); }

std::string render_svg(const Scene& scene) {
  if (scene.elements.empty()) throw std::invalid_argument("render_svg: empty scene");
  const Viewport& vp = scene.viewport;
  const double w = vp.max_x - vp.min_x;
  const double h = vp.max_y - vp.min_y;
  if (!(w > 0.0) || !(h > 0.0)) throw std::invalid_argument("render_svg: degenerate viewport");

  const double base_stroke = 0.002 * std::max(w, h);
  const double pixel_height = std::round(kPixelWidth * h / w);

  std::vector<const Element*> ordered;
  for (const auto& e : scene.elements) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Element* a, const Element* b) { return a->layer < b->layer; });

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kPixelWidth)
      << "\" height=\"" << num(pixel_height) << "\" viewBox=\"" << num(vp.min_x) << ' ' << num(-vp.max_y)
      << ' ' << num(w) << ' ' << num(h) << "\">\n";
  if (!scene.title.empty()) out << "  <title>" << escape(scene.title) << "</title>\n";
  out << "  <style>.shaded{fill-opacity:1;stroke-width:" << num(2 * base_stroke) << "}</style>\n";
  // First-quadrant orientation: flip y inside the group.
  out << "  <g transform=\"scale(1,-1)\">\n";
  for (const Element* e : ordered) {
    if (std::holds_alternative<LabelShape>(e->geometry)) continue;
    const std::string attrs = style_attrs(e->style, base_stroke);
    if (const auto* r = std::get_if<RectShape>(&e->geometry)) {
      out << "    <rect x=\"" << num(r->x0) << "\" y=\"" << num(r->y0) << "\" width=\"" << num(r->x1 - r->x0)
          << "\" height=\"" << num(r->y1 - r->y0) << "\"" << attrs << "/>\n";
    } else if (const auto* s = std::get_if<SegmentShape>(&e->geometry)) {
      out << "    <line x1=\"" << num(s->x0) << "\" y1=\"" << num(s->y0) << "\" x2=\"" << num(s->x1)
          << "\" y2=\"" << num(s->y1) << "\"" << attrs << "/>\n";
    } else if (const auto* p = std::get_if<PolygonShape>(&e->geometry)) {
      out << "    <polygon points=\"";
      for (std::size_t i = 0; i < p->points.size(); ++i) {
        if (i) out << ' ';
        out << num(p->points[i].first) << ',' << num(p->points[i].second);
      }
      out << "\"" << attrs << "/>\n";
    }
  }
  out << "  </g>\n";
  for (const Element* e : ordered) {
    if (const auto* l = std::get_if<LabelShape>(&e->geometry)) {
      out << "  <text x=\"" << num(l->x) << "\" y=\"" << num(-l->y) << "\" font-size=\"" << num(0.03 * h)
          << "\">" << escape(l->text) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

Scene grid_scene(const TileSet& tiles, const GridSceneOptions& opts) {
  if (tiles.tiles.empty()) throw std::invalid_argument("grid_scene: no tiles");
  Scene scene;
  scene.title = "golden grid";
  std::set<int> slopes;
  double max_x = 0, max_y = 0;
  for (const auto& t : tiles.tiles) {
    const RectShape r = rect_shape(t.rect);
    max_x = std::max(max_x, r.x1);
    max_y = std::max(max_y, r.y1);
    const int aspect = t.rect.tagged() ? *t.rect.height_exp - *t.rect.width_exp : 0;
    Style st;
    st.fill = kPalette[colour_index(std::abs(aspect))];
    st.opacity = 0.85;
    st.shaded = std::abs(aspect) == 1;
    scene.elements.push_back({r, st, 0});
    if (t.slope_exp) slopes.insert(*t.slope_exp);
  }
  scene.viewport = {0.0, 0.0, max_x, max_y};
  if (opts.rays) add_rays(scene, slopes);
  if (opts.divider_n) {
    const auto path = tiling::divider(*opts.divider_n, opts.divider_steps, 2);
    for (const auto& seg : path.segments) {
      scene.elements.push_back({SegmentShape{project(seg.start.x), project(seg.start.y), project(seg.end.x),
                                             project(seg.end.y)},
                                Style{"none", "#000000", 1.0, 3.0, false},
                                3});
    }
  }
  return scene;
}

Scene subdivision_scene(const TileSet& tiles) {
  if (tiles.tiles.empty()) throw std::invalid_argument("subdivision_scene: no tiles");
  Scene scene;
  scene.title = "golden subdivision";
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  for (const auto& t : tiles.tiles) {
    const RectShape r = rect_shape(t.rect);
    if (first) {
      min_x = r.x0, min_y = r.y0, max_x = r.x1, max_y = r.y1;
      first = false;
    }
    min_x = std::min(min_x, r.x0);
    min_y = std::min(min_y, r.y0);
    max_x = std::max(max_x, r.x1);
    max_y = std::max(max_y, r.y1);
    const int slope = t.rect.tagged() ? *t.rect.height_exp - *t.rect.width_exp : 0;
    Style st;
    st.fill = kPalette[colour_index(slope + 6)];
    st.opacity = 0.85;
    scene.elements.push_back({r, st, 0});
  }
  scene.viewport = {min_x, min_y, max_x, max_y};
  return scene;
}

Scene rabbit_scene(const RabbitTiling& t) {
  Scene scene;
  scene.title = "rabbit " + to_string(t.shape) + ", " + std::to_string(t.months) + " months";
  PolygonShape region;
  double max_x = 0, max_y = 0;
  for (const auto& p : t.region) {
    region.points.emplace_back(project(p.x), project(p.y));
    max_x = std::max(max_x, region.points.back().first);
    max_y = std::max(max_y, region.points.back().second);
  }
  scene.elements.push_back({region, Style{"none", "#000000", 1.0, 2.0, false}, 1});
  for (const auto& tile : t.tiles) {
    Style st;
    st.fill = kPalette[colour_index(tile.month)];
    st.shaded = tile.pair_id == 0;
    scene.elements.push_back({rect_shape(tile.rect), st, 0});
  }
  scene.viewport = {0.0, 0.0, max_x, max_y};
  return scene;
}

}  // namespace phitile::render
