#include "phitile/io.hpp"

#include <stdexcept>

namespace phitile {

namespace {

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

void to_json(nlohmann::json& j, const GoldenNumber& x) {
  j = nlohmann::json{{"a", x.a().get_str()}, {"b", x.b().get_str()}};
}

void from_json(const nlohmann::json& j, GoldenNumber& x) {
  x = GoldenNumber(parse_rational(j.at("a").get<std::string>()),
                   parse_rational(j.at("b").get<std::string>()));
}

void to_json(nlohmann::json& j, const GoldenPoint& p) { j = nlohmann::json{{"x", p.x}, {"y", p.y}}; }

void from_json(const nlohmann::json& j, GoldenPoint& p) {
  j.at("x").get_to(p.x);
  j.at("y").get_to(p.y);
}

void to_json(nlohmann::json& j, const Tile& t) {
  j = nlohmann::json{{"lo", t.rect.lo}, {"hi", t.rect.hi}};
  j["width_exp"] = t.rect.width_exp ? nlohmann::json(*t.rect.width_exp) : nlohmann::json(nullptr);
  j["height_exp"] = t.rect.height_exp ? nlohmann::json(*t.rect.height_exp) : nlohmann::json(nullptr);
  j["orientation"] = to_string(t.rect.orientation());
  if (t.slope_exp) j["slope_exp"] = *t.slope_exp;
}

void from_json(const nlohmann::json& j, Tile& t) {
  j.at("lo").get_to(t.rect.lo);
  j.at("hi").get_to(t.rect.hi);
  t.rect.width_exp.reset();
  t.rect.height_exp.reset();
  t.slope_exp.reset();
  if (!j.at("width_exp").is_null()) t.rect.width_exp = j.at("width_exp").get<int>();
  if (!j.at("height_exp").is_null()) t.rect.height_exp = j.at("height_exp").get<int>();
  if (j.contains("slope_exp")) t.slope_exp = j.at("slope_exp").get<int>();
  if (!is_valid(t.rect)) throw std::invalid_argument("tile rect fails validation");
  if (orientation_from_string(j.at("orientation").get<std::string>()) != t.rect.orientation()) {
    throw std::invalid_argument("tile orientation disagrees with its dimensions");
  }
}

void to_json(nlohmann::json& j, const SeriesReport& r) {
  j = nlohmann::json{{"formula", to_string(r.formula)}, {"n", r.n},           {"K", r.terms},
                     {"partial", r.partial},            {"rhs", r.rhs},       {"residual", r.residual},
                     {"float_echo", r.float_echo}};
}

void from_json(const nlohmann::json& j, SeriesReport& r) {
  r.formula = formula_from_string(j.at("formula").get<std::string>());
  j.at("n").get_to(r.n);
  j.at("K").get_to(r.terms);
  j.at("partial").get_to(r.partial);
  j.at("rhs").get_to(r.rhs);
  j.at("residual").get_to(r.residual);
  j.at("float_echo").get_to(r.float_echo);
}

void to_json(nlohmann::json& j, const Fact& f) {
  j = nlohmann::json{{"category", to_string(f.category)},
                     {"check", to_string(f.check)},
                     {"description", f.description},
                     {"pass", f.pass}};
  if (f.lhs) j["lhs"] = *f.lhs;
  if (f.rhs) j["rhs"] = *f.rhs;
  if (!f.float_echo.empty()) j["float_echo"] = f.float_echo;
}

void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"kind", to_string(c.kind)},
                     {"pass", c.passed()},
                     {"float_echo", c.float_echo},
                     {"facts", c.facts}};
}

void to_json(nlohmann::json& j, const RabbitTiling& t) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& tile : t.tiles) {
    tiles.push_back({{"pair", tile.pair_id}, {"month", tile.month}, {"lo", tile.rect.lo}, {"hi", tile.rect.hi}});
  }
  j = nlohmann::json{{"shape", to_string(t.shape)}, {"months", t.months}, {"region", t.region}, {"tiles", tiles}};
}

void from_json(const nlohmann::json& j, RabbitTiling& t) {
  t.shape = rabbit_shape_from_string(j.at("shape").get<std::string>());
  j.at("months").get_to(t.months);
  j.at("region").get_to(t.region);
  t.tiles.clear();
  for (const auto& jt : j.at("tiles")) {
    RabbitTile tile;
    jt.at("pair").get_to(tile.pair_id);
    jt.at("month").get_to(tile.month);
    jt.at("lo").get_to(tile.rect.lo);
    jt.at("hi").get_to(tile.rect.hi);
    // Exponent tags follow from the month.
    tile.rect.width_exp = -tile.month - 1;
    tile.rect.height_exp = t.shape == RabbitShape::triangle ? -tile.month - 1 : -tile.month;
    t.tiles.push_back(std::move(tile));
  }
}

nlohmann::json tileset_to_json(const TileSet& ts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : ts.tiles) arr.push_back(t);
  return arr;
}

TileSet tileset_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("tile set JSON must be an array");
  TileSet ts;
  for (const auto& jt : j) ts.tiles.push_back(jt.get<Tile>());
  return ts;
}

}  // namespace phitile
