#include "csev/tabletop/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <stdexcept>

#include "csev/core/rng.hpp"
#include "csev/tabletop/planner.hpp"
#include "csev/tabletop/sampler.hpp"
#include "csev/tabletop/task.hpp"

namespace csev::tabletop {

using core::Rng;
using core::SemanticFrame;
using core::Vec2;

namespace {

constexpr double kRelocationClearance = 0.05;  // min center distance to other objects
constexpr int kRelocationCandidates = 100;

const Board& board_of(const core::TestInstance& instance) {
  const auto* board = dynamic_cast<const Board*>(instance.scene.get());
  if (board == nullptr) throw std::invalid_argument("instance scene is not a tabletop board");
  return *board;
}

core::TestInstance derive(const core::TestInstance& base, const std::string& op,
                          core::PerturbationTag tag, const SemanticFrame& frame,
                          core::ScenePtr scene) {
  core::TestInstance out;
  out.id = base.id + "#" + op;
  out.instruction.frame = frame;
  out.instruction.surface = render_surface(frame);
  out.instruction.template_id = base.instruction.template_id;
  out.instruction.paraphrase_id = base.instruction.paraphrase_id;
  out.scene = std::move(scene);
  out.tag = tag;
  out.parent_id = base.id;
  return out;
}

// Validity gate shared by all four operators: an emission either passes the
// full feasibility check or comes back as a reason, never as a broken
// instance.
core::PerturbResult finish(core::TestInstance instance) {
  const Board& board = board_of(instance);
  const core::Feasibility feasible = tabletop_feasible(instance.instruction, board);
  if (!feasible.ok) return {std::nullopt, feasible.reason};
  instance.expected = *plan_behavior(board, instance.instruction.frame);
  return {std::move(instance), ""};
}

core::PerturbResult swap_referents(const core::TestInstance& base) {
  SemanticFrame frame = base.instruction.frame;
  if (frame.target.empty()) {
    return {std::nullopt, "inapplicable: instruction has a single block referent"};
  }
  std::swap(frame.source, frame.target);
  return finish(derive(base, "swap_referents", {core::TagKind::DLB, 1}, frame, base.scene));
}

core::PerturbResult invert_direction(const core::TestInstance& base) {
  SemanticFrame frame = base.instruction.frame;
  if (!frame.direction.empty()) {
    frame.direction = inverted_direction(frame.direction);
  } else if (!frame.region.empty()) {
    const auto inverse = inverted_region(frame.region);
    if (!inverse) return {std::nullopt, "inapplicable: region has no opposite"};
    frame.region = *inverse;
  } else {
    return {std::nullopt, "inapplicable: instruction has no direction or region"};
  }
  return finish(derive(base, "invert_direction", {core::TagKind::DLB, 2}, frame, base.scene));
}

// Repositions one block to a seeded collision-free point. Candidates are
// tried farthest first so the scene edit relocates the block as far as the
// board allows; the minimum displacement is a hard floor.
core::PerturbResult move_block(const core::TestInstance& base, const std::string& op,
                               int variant, const std::string& block_id, std::uint64_t seed) {
  const Board& board = board_of(base);
  const Block* moved = board.find(block_id);
  if (moved == nullptr) return {std::nullopt, "referent missing or frame invalid"};

  Rng rng(seed);
  const core::Rect ws = block_workspace();
  std::vector<Vec2> candidates;
  for (int attempt = 0; attempt < kRelocationCandidates; ++attempt) {
    const Vec2 p{rng.uniform(ws.x_min, ws.x_max), rng.uniform(ws.y_min, ws.y_max)};
    if (core::distance(p, moved->pos) < kMinRelocation) continue;
    bool clear = core::distance(p, board.pusher) >= kRelocationClearance;
    for (const Block& b : board.blocks) {
      if (b.id == block_id) continue;
      clear = clear && core::distance(p, b.pos) >= kRelocationClearance;
    }
    if (clear) candidates.push_back(p);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Vec2& a, const Vec2& b) {
    return core::distance(a, moved->pos) > core::distance(b, moved->pos);
  });

  for (const Vec2& p : candidates) {
    Board edited = board;
    for (Block& b : edited.blocks) {
      if (b.id == block_id) b.pos = p;
    }
    core::PerturbResult result =
        finish(derive(base, op, {core::TagKind::DSB, variant}, base.instruction.frame,
                      std::make_shared<Board>(std::move(edited))));
    if (result.instance) return result;
  }
  return {std::nullopt, "no feasible relocation found"};
}

}  // namespace

core::PerturbationTag tabletop_tag_for_op(const std::string& op) {
  if (op == "swap_referents") return {core::TagKind::DLB, 1};
  if (op == "invert_direction") return {core::TagKind::DLB, 2};
  if (op == "move_target") return {core::TagKind::DSB, 1};
  if (op == "move_source") return {core::TagKind::DSB, 2};
  throw std::invalid_argument("unknown tabletop perturbation op: " + op);
}

core::PerturbResult tabletop_perturb(const core::TestInstance& base, const std::string& op,
                                     std::uint64_t seed) {
  if (op == "swap_referents") return swap_referents(base);
  if (op == "invert_direction") return invert_direction(base);
  if (op == "move_target") {
    const std::string& target = base.instruction.frame.target;
    if (target.empty()) return {std::nullopt, "inapplicable: instruction has no target block"};
    return move_block(base, op, 1, target, seed);
  }
  if (op == "move_source") {
    return move_block(base, op, 2, base.instruction.frame.source, seed);
  }
  throw std::invalid_argument("unknown tabletop perturbation op: " + op);
}

}  // namespace csev::tabletop
