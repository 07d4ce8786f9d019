#include "csev/tabletop/board.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace csev::tabletop {

using core::Vec2;

std::vector<std::pair<std::string, Vec2>> Board::object_poses() const {
  std::vector<std::pair<std::string, Vec2>> poses;
  poses.reserve(blocks.size());
  for (const Block& b : blocks) poses.emplace_back(b.id, b.pos);
  return poses;
}

void Board::to_json(nlohmann::ordered_json& out) const {
  nlohmann::ordered_json blocks_json = nlohmann::ordered_json::array();
  for (const Block& b : blocks) {
    blocks_json.push_back(nlohmann::ordered_json{{"id", b.id},
                                                 {"color", b.color},
                                                 {"shape", b.shape},
                                                 {"pos", {b.pos.x, b.pos.y}}});
  }
  out = nlohmann::ordered_json{{"kind", "tabletop"},
                               {"pusher", {pusher.x, pusher.y}},
                               {"blocks", blocks_json}};
}

Board Board::from_json(const nlohmann::ordered_json& j) {
  Board board;
  board.pusher = {j.at("pusher").at(0).get<double>(), j.at("pusher").at(1).get<double>()};
  for (const auto& b : j.at("blocks")) {
    board.blocks.push_back(Block{b.at("id").get<std::string>(),
                                 b.at("color").get<std::string>(),
                                 b.at("shape").get<std::string>(),
                                 {b.at("pos").at(0).get<double>(), b.at("pos").at(1).get<double>()}});
  }
  board.sort_blocks();
  return board;
}

const Block* Board::find(const std::string& id) const {
  for (const Block& b : blocks) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

void Board::sort_blocks() {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.id < b.id; });
}

double Board::min_block_gap() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      best = std::fmin(best, core::distance(blocks[i].pos, blocks[j].pos));
    }
  }
  return best;
}

namespace {

constexpr double kPenetrationTol = 1e-12;
constexpr int kResolvePasses = 10;

Vec2 clamp_move(Vec2 move) {
  const double n = move.norm();
  if (n <= kMaxStep) return move;
  return move * (kMaxStep / n);
}

bool resolve_overlaps(Board& board) {
  const core::Rect ws = block_workspace();
  for (int pass = 0; pass < kResolvePasses; ++pass) {
    bool changed = false;
    for (Block& b : board.blocks) {
      const double d = core::distance(b.pos, board.pusher);
      if (d < kContactDistance - kPenetrationTol) {
        b.pos = ws.clamp(board.pusher + (b.pos - board.pusher).normalized() * kContactDistance);
        changed = true;
      }
    }
    for (std::size_t i = 0; i < board.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < board.blocks.size(); ++j) {
        Block& a = board.blocks[i];
        Block& b = board.blocks[j];
        const double d = core::distance(a.pos, b.pos);
        if (d >= 2.0 * kBlockRadius - kPenetrationTol) continue;
        // The block farther from the pusher yields: contact propagates away
        // from the contact source.
        Block& stay = core::distance(a.pos, board.pusher) <= core::distance(b.pos, board.pusher) ? a : b;
        Block& move = (&stay == &a) ? b : a;
        move.pos = ws.clamp(stay.pos + (move.pos - stay.pos).normalized() * (2.0 * kBlockRadius));
        changed = true;
      }
    }
    if (!changed) return true;
  }
  // Final symmetric separation for anything still overlapping against a wall.
  for (std::size_t i = 0; i < board.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < board.blocks.size(); ++j) {
      Block& a = board.blocks[i];
      Block& b = board.blocks[j];
      const double d = core::distance(a.pos, b.pos);
      if (d >= 2.0 * kBlockRadius - kPenetrationTol) continue;
      const Vec2 n = (b.pos - a.pos).normalized();
      const double push = (2.0 * kBlockRadius - d) / 2.0;
      a.pos = ws.clamp(a.pos - n * push);
      b.pos = ws.clamp(b.pos + n * push);
    }
  }
  return board.min_block_gap() >= 2.0 * kBlockRadius - 1e-9;
}

}  // namespace

void step_dynamics(Board& board, Vec2 move) {
  const Board before = board;
  board.pusher = pusher_workspace().clamp(board.pusher + clamp_move(move));
  if (!resolve_overlaps(board)) board = before;
}

RolloutResult run_waypoints(const Board& start, const std::vector<Vec2>& waypoints,
                            std::size_t approach_end, const BoardPredicate& stop_when,
                            int step_limit) {
  RolloutResult result;
  result.end = start;
  if (waypoints.empty()) return result;

  bool past_approach = approach_end == 0;
  if (past_approach && stop_when && stop_when(result.end)) {
    result.stopped_at_goal = true;
    return result;
  }

  for (std::size_t w = 1; w < waypoints.size(); ++w) {
    while (core::distance(result.end.pusher, waypoints[w]) > 1e-12) {
      if (result.steps >= step_limit) {
        result.timeout = true;
        return result;
      }
      const Vec2 before = result.end.pusher;
      step_dynamics(result.end, waypoints[w] - result.end.pusher);
      result.path_length += core::distance(before, result.end.pusher);
      ++result.steps;
      if (before == result.end.pusher) break;  // jammed: no progress possible
      if (past_approach && stop_when && stop_when(result.end)) {
        result.stopped_at_goal = true;
        return result;
      }
    }
    if (w == approach_end) {
      past_approach = true;
      if (stop_when && stop_when(result.end)) {
        result.stopped_at_goal = true;
        return result;
      }
    }
  }
  return result;
}

}  // namespace csev::tabletop
