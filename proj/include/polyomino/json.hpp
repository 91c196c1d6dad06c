#pragma once

// JSON interchange: {"width": w, "height": h, "columns": [[lo, hi], ...]}.

#include <json.hpp>

#include "polyomino.hpp"

namespace polyomino {

inline nlohmann::json to_json(const ConvexPolyomino& p) {
  nlohmann::json columns = nlohmann::json::array();
  for (const auto& c : p.columns()) {
    columns.push_back({c.lo, c.hi});
  }
  return {{"width", p.width()}, {"height", p.height()}, {"columns", std::move(columns)}};
}

// Throws nlohmann::json::exception on schema errors and ValidationError on
// geometric ones.
inline ConvexPolyomino polyomino_from_json(const nlohmann::json& j) {
  std::vector<Interval> columns;
  for (const auto& c : j.at("columns")) {
    if (!c.is_array() || c.size() != 2) {
      throw std::invalid_argument("each column must be a [lo, hi] pair");
    }
    columns.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  }
  return ConvexPolyomino::validate(std::move(columns), j.at("width").get<int>(), j.at("height").get<int>());
}

}  // namespace polyomino
