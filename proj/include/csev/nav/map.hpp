#pragma once

#include <string>
#include <vector>

#include "csev/core/types.hpp"

#include <json.hpp>

namespace csev::nav {

inline constexpr int kDefaultGridSize = 20;
inline constexpr double kCellSize = 0.25;  // meters
inline constexpr int kHeadingCount = 12;   // 30-degree increments, 0 = +x, left = +1
inline constexpr int kStepLimit = 200;

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class FurnitureRole { GoalCandidate, Passive };

struct Furniture {
  std::string id;     // "<class>" or "<class>-<n>", unique within a map
  std::string cls;
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive cell rectangle
  FurnitureRole role = FurnitureRole::GoalCandidate;

  [[nodiscard]] bool covers(Cell c) const {
    return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
  }
  [[nodiscard]] core::Vec2 center_m() const {
    return {(static_cast<double>(x0 + x1) + 1.0) * 0.5 * kCellSize,
            (static_cast<double>(y0 + y1) + 1.0) * 0.5 * kCellSize};
  }
};

enum class NavAction { Forward, Left, Right, Stop };

std::string to_string(NavAction action);
NavAction nav_action_from_string(const std::string& s);

// Forward displacement for a heading: cosine/sine of the 30-degree multiple
// rounded to the 8-cell neighborhood. Every forward action counts as one
// 0.25 m step regardless of grid direction.
Cell heading_delta(int heading);

class GridMap final : public core::Scene {
 public:
  int width = kDefaultGridSize;
  int height = kDefaultGridSize;
  std::vector<Furniture> furniture;  // kept sorted by id
  Cell start;
  int start_heading = 0;

  [[nodiscard]] core::EnvKind kind() const override { return core::EnvKind::Nav; }
  [[nodiscard]] std::vector<std::pair<std::string, core::Vec2>> object_poses() const override;
  void to_json(nlohmann::ordered_json& out) const override;
  static GridMap from_json(const nlohmann::ordered_json& j);

  [[nodiscard]] bool in_bounds(Cell c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  [[nodiscard]] bool occupied(Cell c) const;
  [[nodiscard]] const Furniture* find(const std::string& id) const;

  // Unique goal-candidate furniture of the class, smallest id on ties.
  [[nodiscard]] const Furniture* find_goal_class(const std::string& cls) const;

  void sort_furniture();

  // In-bounds cells at Chebyshev distance exactly 1 from the footprint.
  // Occupied halo cells stay in the set; they are simply unreachable.
  [[nodiscard]] std::vector<Cell> halo(const Furniture& f) const;
  [[nodiscard]] bool in_halo(const Furniture& f, Cell c) const;

  // Overlap and bounds of every footprint, start cell free.
  [[nodiscard]] bool valid() const;

  [[nodiscard]] std::string ascii_render() const;
};

struct RobotState {
  Cell cell;
  int heading = 0;
};

struct StepResult {
  RobotState state;
  bool collision = false;  // forward blocked by furniture or bounds; no-op
  bool moved = false;
};

StepResult nav_step(const GridMap& map, RobotState state, NavAction action);

}  // namespace csev::nav
