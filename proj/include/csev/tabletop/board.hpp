#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "csev/core/geometry.hpp"
#include "csev/core/types.hpp"

#include <json.hpp>

namespace csev::tabletop {

inline constexpr double kBoardWidth = 0.60;
inline constexpr double kBoardHeight = 0.40;
inline constexpr double kPusherRadius = 0.01;
inline constexpr double kBlockRadius = 0.02;
inline constexpr double kMaxStep = 0.005;       // pusher displacement cap per dynamics step
inline constexpr double kSuccessTol = 0.05;     // goal tolerance epsilon
inline constexpr double kSeparationThreshold = 0.15;
inline constexpr double kContactDistance = kPusherRadius + kBlockRadius;

inline core::Rect board_rect() { return {0.0, 0.0, kBoardWidth, kBoardHeight}; }
inline core::Rect block_workspace() { return board_rect().inset(kBlockRadius); }
inline core::Rect pusher_workspace() { return board_rect().inset(kPusherRadius); }

// Blocks are disc-approximated for contact; shape and color exist for
// language referents only.
struct Block {
  std::string id;  // "<color>-<shape>", unique within a scene
  std::string color;
  std::string shape;
  core::Vec2 pos;
};

class Board final : public core::Scene {
 public:
  core::Vec2 pusher{kBoardWidth / 2.0, kBoardHeight / 2.0};
  std::vector<Block> blocks;  // kept sorted by id

  [[nodiscard]] core::EnvKind kind() const override { return core::EnvKind::Tabletop; }
  [[nodiscard]] std::vector<std::pair<std::string, core::Vec2>> object_poses() const override;
  void to_json(nlohmann::ordered_json& out) const override;
  static Board from_json(const nlohmann::ordered_json& j);

  [[nodiscard]] const Block* find(const std::string& id) const;
  void sort_blocks();

  // Smallest pairwise center distance; +inf with fewer than two blocks.
  [[nodiscard]] double min_block_gap() const;
};

// One quasi-static step. The move is clamped to kMaxStep and the workspace;
// pusher-block and block-block overlaps resolve along contact normals, blocks
// yielding in order of distance from the pusher. A step that cannot resolve
// block overlaps (wall jam) reverts to the input state; it is a no-op, not an
// error.
void step_dynamics(Board& board, core::Vec2 move);

using BoardPredicate = std::function<bool(const Board&)>;

struct RolloutResult {
  Board end;
  double path_length = 0.0;  // meters actually covered by the pusher
  int steps = 0;
  bool timeout = false;
  bool stopped_at_goal = false;
};

// Drives the pusher along the waypoint polyline in ≤ kMaxStep increments.
// Once the waypoint at `approach_end` has been reached, the rollout stops as
// soon as `stop_when` holds (pass nullptr to always walk the full polyline).
RolloutResult run_waypoints(const Board& start, const std::vector<core::Vec2>& waypoints,
                            std::size_t approach_end, const BoardPredicate& stop_when,
                            int step_limit = 4000);

}  // namespace csev::tabletop
