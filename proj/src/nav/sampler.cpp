#include "csev/nav/sampler.hpp"

#include <stdexcept>

#include "csev/nav/lang.hpp"
#include "csev/nav/planner.hpp"

namespace csev::nav {

using core::Rng;

namespace {

constexpr int kJitterAttempts = 50;
constexpr int kInstanceAttempts = 100;

struct BaseItem {
  const char* id;
  const char* cls;
  int x0, y0, x1, y1;
  FurnitureRole role;
};

struct BaseLayout {
  std::vector<BaseItem> items;
  Cell start;
  int heading;
};

constexpr FurnitureRole kGoal = FurnitureRole::GoalCandidate;
constexpr FurnitureRole kPassive = FurnitureRole::Passive;

// Five studio arrangements. Every goal class appears exactly once per style;
// passives are chairs only, so the familiarity list stays layout-derived.
const BaseLayout& base_layout(int style) {
  static const std::vector<BaseLayout> layouts{
      {{{"bed", "bed", 1, 16, 3, 17, kGoal},
        {"couch", "couch", 8, 1, 10, 1, kGoal},
        {"table", "table", 12, 10, 13, 11, kGoal},
        {"bookshelf", "bookshelf", 18, 12, 18, 14, kGoal},
        {"lamp", "lamp", 2, 3, 2, 3, kGoal},
        {"chair-1", "chair", 6, 8, 6, 8, kPassive},
        {"chair-2", "chair", 14, 4, 14, 4, kPassive}},
       {9, 9},
       0},
      {{{"bed", "bed", 15, 2, 17, 3, kGoal},
        {"couch", "couch", 1, 8, 1, 10, kGoal},
        {"table", "table", 3, 15, 4, 16, kGoal},
        {"bookshelf", "bookshelf", 9, 18, 11, 18, kGoal},
        {"lamp", "lamp", 17, 9, 17, 9, kGoal},
        {"chair-1", "chair", 7, 5, 7, 5, kPassive}},
       {10, 10},
       3},
      {{{"bed", "bed", 15, 15, 17, 16, kGoal},
        {"couch", "couch", 2, 2, 4, 2, kGoal},
        {"table", "table", 9, 3, 10, 4, kGoal},
        {"bookshelf", "bookshelf", 1, 11, 1, 13, kGoal},
        {"lamp", "lamp", 10, 17, 10, 17, kGoal},
        {"chair-1", "chair", 14, 8, 14, 8, kPassive},
        {"chair-2", "chair", 5, 7, 5, 7, kPassive}},
       {8, 10},
       6},
      {{{"bed", "bed", 1, 9, 3, 10, kGoal},
        {"couch", "couch", 16, 8, 18, 8, kGoal},
        {"table", "table", 14, 14, 15, 15, kGoal},
        {"bookshelf", "bookshelf", 8, 1, 10, 1, kGoal},
        {"lamp", "lamp", 6, 12, 6, 12, kGoal},
        {"chair-1", "chair", 12, 5, 12, 5, kPassive}},
       {10, 6},
       9},
      {{{"bed", "bed", 8, 1, 10, 2, kGoal},
        {"couch", "couch", 8, 17, 10, 17, kGoal},
        {"table", "table", 2, 6, 3, 7, kGoal},
        {"bookshelf", "bookshelf", 17, 15, 17, 17, kGoal},
        {"lamp", "lamp", 16, 3, 16, 3, kGoal},
        {"chair-1", "chair", 5, 12, 5, 12, kPassive},
        {"chair-2", "chair", 13, 11, 13, 11, kPassive}},
       {12, 8},
       1},
  };
  return layouts.at(static_cast<std::size_t>(style));
}

GridMap materialize(const BaseLayout& base, Cell start_offset, int heading,
                    const std::vector<Cell>& item_offsets) {
  GridMap map;
  for (std::size_t i = 0; i < base.items.size(); ++i) {
    const BaseItem& item = base.items[i];
    const Cell d = item_offsets[i];
    map.furniture.push_back(Furniture{item.id, item.cls, item.x0 + d.x, item.y0 + d.y,
                                      item.x1 + d.x, item.y1 + d.y, item.role});
  }
  map.sort_furniture();
  map.start = {base.start.x + start_offset.x, base.start.y + start_offset.y};
  map.start_heading = heading;
  return map;
}

bool layout_ok(const GridMap& map) {
  if (!map.valid()) return false;
  for (const Furniture& f : map.furniture) {
    if (f.role != FurnitureRole::GoalCandidate) continue;
    if (map.in_halo(f, map.start)) return false;
    if (!halo_reachable(map, map.start, f)) return false;
  }
  return true;
}

}  // namespace

GridMap sample_layout(int style, Rng& rng) {
  const BaseLayout& base = base_layout(style);
  for (int attempt = 0; attempt < kJitterAttempts; ++attempt) {
    std::vector<Cell> offsets;
    offsets.reserve(base.items.size());
    for (std::size_t i = 0; i < base.items.size(); ++i) {
      offsets.push_back({rng.uniform_int(3) - 1, rng.uniform_int(3) - 1});
    }
    const Cell start_offset{rng.uniform_int(5) - 2, rng.uniform_int(5) - 2};
    const int heading = rng.uniform_int(kHeadingCount);
    GridMap map = materialize(base, start_offset, heading, offsets);
    if (layout_ok(map)) return map;
  }
  GridMap map = materialize(base, {0, 0}, base.heading,
                            std::vector<Cell>(base.items.size(), Cell{0, 0}));
  if (!layout_ok(map)) throw std::logic_error("nav sampler: base layout is invalid");
  return map;
}

core::Feasibility nav_feasible(const core::Instruction& instruction, const GridMap& map) {
  const auto goals = resolve_goals(instruction.frame, map);
  if (!goals) return {false, "referent missing or frame invalid"};
  if (map.in_halo(*goals->g1, map.start) && map.in_halo(*goals->g2, map.start)) {
    return {false, "goal already satisfied at start"};
  }
  if (!shortest_path_plan(map, *goals->g1, *goals->g2)) {
    return {false, "no plan: a subgoal is unreachable"};
  }
  return {true, ""};
}

core::TestInstance sample_nav_instance(int style, Rng& rng, const std::string& id) {
  for (int attempt = 0; attempt < kInstanceAttempts; ++attempt) {
    const GridMap map = sample_layout(style, rng);

    const auto& classes = nav_goal_classes();
    const int g1 = rng.uniform_int(static_cast<int>(classes.size()));
    int g2 = rng.uniform_int(static_cast<int>(classes.size()) - 1);
    if (g2 >= g1) ++g2;

    core::Instruction instruction;
    instruction.frame.category = "nav";
    instruction.frame.source = classes[static_cast<std::size_t>(g1)];
    instruction.frame.target = classes[static_cast<std::size_t>(g2)];
    instruction.template_id = 0;
    instruction.paraphrase_id = 0;
    instruction.surface = render_nav_surface(instruction.frame, 0, 0);

    if (!nav_feasible(instruction, map).ok) continue;

    core::TestInstance instance;
    instance.id = id;
    instance.instruction = instruction;
    instance.scene = std::make_shared<GridMap>(map);
    instance.expected = *nav_behavior(map, instruction.frame);
    instance.tag = {core::TagKind::Original, 0};
    return instance;
  }
  throw std::runtime_error("nav sampler: no feasible instance after repeated draws");
}

core::EvaluationSet sample_nav_set(int n, std::uint64_t seed) {
  Rng rng(seed);
  core::EvaluationSet set;
  set.env = core::EnvKind::Nav;
  set.seed = seed;
  for (int i = 0; i < n; ++i) {
    Rng instance_rng = rng.fork("instance", static_cast<std::uint64_t>(i));
    const std::string id = "nav-" + std::to_string(seed) + "-" + std::to_string(i);
    set.instances.push_back(sample_nav_instance(i % kLayoutStyleCount, instance_rng, id));
  }
  return set;
}

}  // namespace csev::nav
