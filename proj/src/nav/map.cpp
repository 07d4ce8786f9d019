#include "csev/nav/map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace csev::nav {

std::string to_string(NavAction action) {
  switch (action) {
    case NavAction::Forward: return "forward";
    case NavAction::Left: return "left";
    case NavAction::Right: return "right";
    case NavAction::Stop: return "stop";
  }
  return "stop";
}

NavAction nav_action_from_string(const std::string& s) {
  if (s == "forward") return NavAction::Forward;
  if (s == "left") return NavAction::Left;
  if (s == "right") return NavAction::Right;
  if (s == "stop") return NavAction::Stop;
  throw std::invalid_argument("unknown nav action: " + s);
}

Cell heading_delta(int heading) {
  const double angle = static_cast<double>(heading) * M_PI / 6.0;
  return {static_cast<int>(std::lround(std::cos(angle))),
          static_cast<int>(std::lround(std::sin(angle)))};
}

std::vector<std::pair<std::string, core::Vec2>> GridMap::object_poses() const {
  std::vector<std::pair<std::string, core::Vec2>> poses;
  poses.reserve(furniture.size());
  for (const Furniture& f : furniture) poses.emplace_back(f.id, f.center_m());
  return poses;
}

void GridMap::to_json(nlohmann::ordered_json& out) const {
  out["env"] = "nav";
  out["width"] = width;
  out["height"] = height;
  out["start"] = {{"x", start.x}, {"y", start.y}, {"heading", start_heading}};
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const Furniture& f : furniture) {
    nlohmann::ordered_json item;
    item["id"] = f.id;
    item["class"] = f.cls;
    item["rect"] = {f.x0, f.y0, f.x1, f.y1};
    item["role"] = f.role == FurnitureRole::GoalCandidate ? "goal_candidate" : "passive";
    items.push_back(std::move(item));
  }
  out["furniture"] = std::move(items);
}

GridMap GridMap::from_json(const nlohmann::ordered_json& j) {
  if (j.at("env").get<std::string>() != "nav") {
    throw std::invalid_argument("scene json is not a nav map");
  }
  GridMap map;
  map.width = j.at("width").get<int>();
  map.height = j.at("height").get<int>();
  map.start = {j.at("start").at("x").get<int>(), j.at("start").at("y").get<int>()};
  map.start_heading = j.at("start").at("heading").get<int>();
  for (const auto& item : j.at("furniture")) {
    Furniture f;
    f.id = item.at("id").get<std::string>();
    f.cls = item.at("class").get<std::string>();
    const auto& rect = item.at("rect");
    f.x0 = rect.at(0).get<int>();
    f.y0 = rect.at(1).get<int>();
    f.x1 = rect.at(2).get<int>();
    f.y1 = rect.at(3).get<int>();
    f.role = item.at("role").get<std::string>() == "passive" ? FurnitureRole::Passive
                                                             : FurnitureRole::GoalCandidate;
    map.furniture.push_back(std::move(f));
  }
  map.sort_furniture();
  return map;
}

bool GridMap::occupied(Cell c) const {
  for (const Furniture& f : furniture) {
    if (f.covers(c)) return true;
  }
  return false;
}

const Furniture* GridMap::find(const std::string& id) const {
  for (const Furniture& f : furniture) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const Furniture* GridMap::find_goal_class(const std::string& cls) const {
  const Furniture* best = nullptr;
  for (const Furniture& f : furniture) {
    if (f.role != FurnitureRole::GoalCandidate || f.cls != cls) continue;
    if (best == nullptr || f.id < best->id) best = &f;
  }
  return best;
}

void GridMap::sort_furniture() {
  std::sort(furniture.begin(), furniture.end(),
            [](const Furniture& a, const Furniture& b) { return a.id < b.id; });
}

std::vector<Cell> GridMap::halo(const Furniture& f) const {
  std::vector<Cell> cells;
  for (int y = f.y0 - 1; y <= f.y1 + 1; ++y) {
    for (int x = f.x0 - 1; x <= f.x1 + 1; ++x) {
      const Cell c{x, y};
      if (!in_bounds(c) || f.covers(c)) continue;
      cells.push_back(c);
    }
  }
  return cells;
}

bool GridMap::in_halo(const Furniture& f, Cell c) const {
  if (!in_bounds(c) || f.covers(c)) return false;
  return c.x >= f.x0 - 1 && c.x <= f.x1 + 1 && c.y >= f.y0 - 1 && c.y <= f.y1 + 1;
}

bool GridMap::valid() const {
  for (std::size_t i = 0; i < furniture.size(); ++i) {
    const Furniture& f = furniture[i];
    if (f.x0 > f.x1 || f.y0 > f.y1) return false;
    if (!in_bounds({f.x0, f.y0}) || !in_bounds({f.x1, f.y1})) return false;
    for (std::size_t k = i + 1; k < furniture.size(); ++k) {
      const Furniture& g = furniture[k];
      const bool disjoint = f.x1 < g.x0 || g.x1 < f.x0 || f.y1 < g.y0 || g.y1 < f.y0;
      if (!disjoint) return false;
      if (f.id == g.id) return false;
    }
  }
  return in_bounds(start) && !occupied(start) && start_heading >= 0 &&
         start_heading < kHeadingCount;
}

std::string GridMap::ascii_render() const {
  std::ostringstream out;
  for (int y = height - 1; y >= 0; --y) {
    for (int x = 0; x < width; ++x) {
      const Cell c{x, y};
      char glyph = '.';
      for (const Furniture& f : furniture) {
        if (!f.covers(c)) continue;
        glyph = f.cls == "chair" ? 'h' : f.cls[0];
        break;
      }
      if (c == start) glyph = '@';
      out << glyph;
    }
    out << '\n';
  }
  return out.str();
}

StepResult nav_step(const GridMap& map, RobotState state, NavAction action) {
  StepResult result;
  result.state = state;
  switch (action) {
    case NavAction::Left:
      result.state.heading = (state.heading + 1) % kHeadingCount;
      break;
    case NavAction::Right:
      result.state.heading = (state.heading + kHeadingCount - 1) % kHeadingCount;
      break;
    case NavAction::Forward: {
      const Cell d = heading_delta(state.heading);
      const Cell next{state.cell.x + d.x, state.cell.y + d.y};
      if (!map.in_bounds(next) || map.occupied(next)) {
        result.collision = true;
      } else {
        result.state.cell = next;
        result.moved = true;
      }
      break;
    }
    case NavAction::Stop:
      break;
  }
  return result;
}

}  // namespace csev::nav
