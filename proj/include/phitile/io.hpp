#pragma once

// JSON encodings. Rationals travel as decimal strings ("p/q" or "p") so no
// precision is lost.

#include "json.hpp"

#include "phitile/rabbits.hpp"
#include "phitile/series.hpp"
#include "phitile/tiling.hpp"

namespace phitile {

void to_json(nlohmann::json& j, const GoldenNumber& x);
void from_json(const nlohmann::json& j, GoldenNumber& x);

void to_json(nlohmann::json& j, const GoldenPoint& p);
void from_json(const nlohmann::json& j, GoldenPoint& p);

void to_json(nlohmann::json& j, const Tile& t);
void from_json(const nlohmann::json& j, Tile& t);

void to_json(nlohmann::json& j, const SeriesReport& r);
void from_json(const nlohmann::json& j, SeriesReport& r);

void to_json(nlohmann::json& j, const Fact& f);
void to_json(nlohmann::json& j, const Certificate& c);

void to_json(nlohmann::json& j, const RabbitTiling& t);
void from_json(const nlohmann::json& j, RabbitTiling& t);

/// A tile set is dumped as a bare array of tiles in canonical order.
nlohmann::json tileset_to_json(const TileSet& ts);
/// Parsed sets come back with kind `subdivision` and no grid spec.
TileSet tileset_from_json(const nlohmann::json& j);

}  // namespace phitile
