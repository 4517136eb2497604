#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hfo/floorplan.hpp"

namespace hfo {

/// {"n": int, "rooms": [{"id","x1","y1","x2","y2"}]}; y grows downward.
inline nlohmann::json floorplan_to_json(const mosaic_floorplan& f) {
  nlohmann::json rooms = nlohmann::json::array();
  for (const auto& r : f.rooms())
    rooms.push_back({{"id", r.id}, {"x1", r.x1}, {"y1", r.y1}, {"x2", r.x2}, {"y2", r.y2}});
  return {{"n", f.size()}, {"rooms", rooms}};
}

/// Validates all floorplan invariants and the 1..n id convention; throws
/// std::invalid_argument naming the violated invariant.
inline mosaic_floorplan floorplan_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rooms") || !doc["rooms"].is_array())
    throw std::invalid_argument("floorplan: document must be {\"n\": int, \"rooms\": [...]}");
  const int n = doc["n"].get<int>();
  std::vector<room> rooms;
  for (const auto& jr : doc["rooms"]) {
    for (const char* key : {"id", "x1", "y1", "x2", "y2"})
      if (!jr.contains(key) || !jr[key].is_number_integer())
        throw std::invalid_argument(std::string("floorplan: room entry missing integer field \"") + key + "\"");
    rooms.push_back({jr["id"].get<int>(), jr["x1"].get<int>(), jr["y1"].get<int>(), jr["x2"].get<int>(),
                     jr["y2"].get<int>()});
  }
  if (static_cast<int>(rooms.size()) != n)
    throw std::invalid_argument("floorplan: n does not match the number of rooms");
  for (const auto& r : rooms)
    if (r.id < 1 || r.id > n) throw std::invalid_argument("floorplan: room ids are not exactly 1..n");
  return mosaic_floorplan::from_rooms(std::move(rooms));
}

inline mosaic_floorplan floorplan_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("floorplan: invalid JSON: ") + e.what());
  }
  return floorplan_from_json(doc);
}

}  // namespace hfo
