#include "csev/tabletop/sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "csev/tabletop/planner.hpp"

namespace csev::tabletop {

using core::Rng;
using core::Vec2;

namespace {

constexpr int kMinRosterSize = 4;
constexpr int kMaxRosterSize = 8;
constexpr double kBlockClearance = 0.05;   // min center distance between spawned blocks
constexpr double kPusherClearance = 0.05;  // min pusher-block center distance at spawn
constexpr int kMaxAttempts = 250;

// Spawn-spread calibration constant: the spawn sub-rectangle scales as
// spread/size so expected per-trial rearrangement distance is roughly
// independent of roster size.
constexpr double kSpawnSpread = 3.3;

core::Rect spawn_rect(double scale) {
  const core::Rect ws = block_workspace();
  const Vec2 c = ws.center();
  const double hw = ws.width() * 0.5 * scale;
  const double hh = ws.height() * 0.5 * scale;
  return {c.x - hw, c.y - hh, c.x + hw, c.y + hh};
}

Vec2 sample_clear_position(const core::Rect& rect, const Board& board, double clearance,
                           Rng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Vec2 p{rng.uniform(rect.x_min, rect.x_max), rng.uniform(rect.y_min, rect.y_max)};
    bool clear = true;
    for (const Block& b : board.blocks) clear = clear && core::distance(p, b.pos) >= clearance;
    if (clear) return p;
  }
  throw std::runtime_error("tabletop sampler: no clear spawn position found");
}

struct FramePick {
  core::SemanticFrame frame;
  std::string target_near_source;  // separate only: target id to re-place near the source
};

FramePick sample_frame(Category category, const Board& board, Rng& rng) {
  FramePick pick;
  pick.frame.category = to_string(category);

  std::vector<std::string> ids;
  for (const Block& b : board.blocks) ids.push_back(b.id);
  const int src = rng.uniform_int(static_cast<int>(ids.size()));
  pick.frame.source = ids[static_cast<std::size_t>(src)];

  const bool wants_target = category == Category::Block2Block ||
                            category == Category::Block2BlockRel ||
                            category == Category::Separate;
  if (wants_target) {
    int tgt = rng.uniform_int(static_cast<int>(ids.size()) - 1);
    if (tgt >= src) ++tgt;
    pick.frame.target = ids[static_cast<std::size_t>(tgt)];
  }
  if (category == Category::Block2Abs) {
    pick.frame.region = rng.pick(region_names());
  }
  if (category == Category::Block2Rel || category == Category::Block2BlockRel) {
    // Horizontal directions get 3x weight: the board is wider than it is
    // tall, so vertical offset goals (and especially their inversions) are
    // rejected far more often for leaving the workspace.
    static const std::vector<std::string> kDirectionPool = {"left",  "left", "left", "right",
                                                            "right", "right", "up",  "down"};
    pick.frame.direction = rng.pick(kDirectionPool);
    pick.frame.magnitude = rng.pick(magnitude_names());
  }
  if (category == Category::Separate) pick.target_near_source = pick.frame.target;
  return pick;
}

// Re-places the separate-task target inside the annulus where the pair is
// still closer than the separation threshold.
bool place_target_near_source(Board& board, const std::string& source_id,
                              const std::string& target_id, Rng& rng) {
  const Block* src = board.find(source_id);
  const core::Rect ws = block_workspace();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double radius = rng.uniform(kBlockClearance, kSeparationThreshold - 0.01);
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    const Vec2 p = src->pos + Vec2{std::cos(angle), std::sin(angle)} * radius;
    if (!ws.contains(p)) continue;
    bool clear = core::distance(p, board.pusher) >= kPusherClearance;
    for (const Block& b : board.blocks) {
      if (b.id == target_id) continue;
      clear = clear && core::distance(p, b.pos) >= kBlockClearance;
    }
    if (!clear) continue;
    for (Block& b : board.blocks) {
      if (b.id == target_id) b.pos = p;
    }
    return true;
  }
  return false;
}

}  // namespace

Roster sample_roster(Rng& rng) {
  Roster roster;
  const int size = kMinRosterSize + rng.uniform_int(kMaxRosterSize - kMinRosterSize + 1);
  std::vector<std::pair<std::string, std::string>> combos;
  for (const std::string& color : color_names()) {
    for (const std::string& shape : shape_names()) combos.emplace_back(color, shape);
  }
  rng.shuffle(combos);
  for (int i = 0; i < size; ++i) {
    const auto& [color, shape] = combos[static_cast<std::size_t>(i)];
    roster.blocks.push_back(Block{color + "-" + shape, color, shape, {}});
  }
  std::sort(roster.blocks.begin(), roster.blocks.end(),
            [](const Block& a, const Block& b) { return a.id < b.id; });
  // Floor keeps large rosters packable under the pairwise clearance.
  roster.spawn_scale = std::clamp(kSpawnSpread / static_cast<double>(size), 0.45, 1.0);
  return roster;
}

Board sample_board(const Roster& roster, Rng& rng) {
  const core::Rect rect = spawn_rect(roster.spawn_scale);
  Board board;
  board.blocks.clear();
  for (const Block& proto : roster.blocks) {
    Block b = proto;
    b.pos = sample_clear_position(rect, board, kBlockClearance, rng);
    board.blocks.push_back(b);
  }
  board.sort_blocks();
  const core::Rect pusher_rect = pusher_workspace();
  board.pusher = sample_clear_position(pusher_rect, board, kPusherClearance, rng);
  return board;
}

core::Feasibility tabletop_feasible(const core::Instruction& instruction, const Board& board) {
  const auto view = resolve_task(instruction.frame, board);
  if (!view) return {false, "referent missing or frame invalid"};
  const auto predicate = goal_predicate(instruction.frame, board);
  if ((*predicate)(board)) return {false, "goal already satisfied at start"};
  const auto plan = optimal_plan(board, instruction.frame);
  if (!plan) return {false, "no plan: goal leaves the workspace"};
  const RolloutResult rollout =
      run_waypoints(board, plan->waypoints, plan->approach_end, *predicate);
  if (rollout.timeout) return {false, "plan execution exceeded the step limit"};
  if (!rollout.stopped_at_goal && !(*predicate)(rollout.end)) {
    return {false, "plan does not execute to success"};
  }
  return {true, ""};
}

core::TestInstance sample_instance(Category category, const Roster& roster, Rng& rng,
                                   const std::string& id) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Board board = sample_board(roster, rng);
    FramePick pick = sample_frame(category, board, rng);
    if (!pick.target_near_source.empty() &&
        !place_target_near_source(board, pick.frame.source, pick.target_near_source, rng)) {
      continue;
    }
    core::Instruction instruction;
    instruction.frame = pick.frame;
    instruction.surface = render_surface(pick.frame);
    if (!tabletop_feasible(instruction, board).ok) continue;

    core::TestInstance instance;
    instance.id = id;
    instance.instruction = instruction;
    instance.scene = std::make_shared<Board>(std::move(board));
    instance.expected =
        *plan_behavior(static_cast<const Board&>(*instance.scene), instruction.frame);
    instance.tag = {core::TagKind::Original, 0};
    return instance;
  }
  throw std::runtime_error("tabletop sampler: no feasible " + to_string(category) +
                           " instance after repeated draws");
}

core::EvaluationSet sample_tabletop_set(int n, std::uint64_t seed) {
  Rng rng(seed);
  Rng roster_rng = rng.fork("roster");
  const Roster roster = sample_roster(roster_rng);

  // Category quota per 20 instances. Block2BlockRel is weighted up because it
  // is the one category where both referent swapping and direction inversion
  // apply, which keeps language-side perturbation clusters large; the other
  // four keep enough mass that per-category behavior stays observable.
  static constexpr std::pair<Category, int> kQuota[] = {
      {Category::Block2Block, 3},    {Category::Block2Abs, 2}, {Category::Block2Rel, 2},
      {Category::Block2BlockRel, 9}, {Category::Separate, 4},
  };
  std::vector<Category> order;
  while (static_cast<int>(order.size()) < n) {
    for (const auto& [category, count] : kQuota) {
      for (int k = 0; k < count && static_cast<int>(order.size()) < n; ++k) {
        order.push_back(category);
      }
    }
  }
  Rng shuffle_rng = rng.fork("category-order");
  shuffle_rng.shuffle(order);

  core::EvaluationSet set;
  set.env = core::EnvKind::Tabletop;
  set.seed = seed;
  for (int i = 0; i < n; ++i) {
    Rng instance_rng = rng.fork("instance", static_cast<std::uint64_t>(i));
    const std::string id = "tt-" + std::to_string(seed) + "-" + std::to_string(i);
    set.instances.push_back(
        sample_instance(order[static_cast<std::size_t>(i)], roster, instance_rng, id));
  }
  return set;
}

}  // namespace csev::tabletop
