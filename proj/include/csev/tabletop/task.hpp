#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csev/core/types.hpp"
#include "csev/tabletop/board.hpp"

namespace csev::tabletop {

enum class Category { Block2Block, Block2Abs, Block2Rel, Block2BlockRel, Separate };

inline constexpr int kCategoryCount = 5;

std::string to_string(Category category);
std::optional<Category> category_from_string(const std::string& s);
std::vector<Category> all_categories();

// Relative-move magnitudes. Both exceed the success tolerance so a
// magnitude-sized move is never already satisfied at the start state.
double magnitude_value(const std::string& magnitude);  // "slightly" | "somewhat"
std::vector<std::string> magnitude_names();

core::Vec2 direction_vector(const std::string& direction);  // up/down/left/right, y-up
std::string inverted_direction(const std::string& direction);
std::vector<std::string> direction_names();

// 3x3 absolute grid over the board; "top" is the +y edge.
core::Vec2 region_center(const std::string& region);
std::optional<std::string> inverted_region(const std::string& region);  // center inverts to nothing
std::vector<std::string> region_names();

std::vector<std::string> shape_names();
std::vector<std::string> color_names();

// Typed, scene-resolved view of a tabletop frame. Resolution fails when a
// referent names no block in the board or the frame is not a valid parse of
// exactly one category.
struct TaskView {
  Category category = Category::Block2Block;
  const Block* source = nullptr;
  const Block* target = nullptr;  // null for categories without a block target
  std::string region;
  std::string direction;
  std::string magnitude;
};

std::optional<TaskView> resolve_task(const core::SemanticFrame& frame, const Board& board);

// Success predicate for the frame, anchored at `at_plan` where the goal is
// defined relative to the source's own position (block2rel). Block-referenced
// goals track the referent's current position during execution.
std::optional<BoardPredicate> goal_predicate(const core::SemanticFrame& frame,
                                             const Board& at_plan);

std::string goal_description(const core::SemanticFrame& frame, const Board& at_plan);

// Surface realization from the versioned template table.
std::string render_surface(const core::SemanticFrame& frame);

std::string tabletop_template_version();

}  // namespace csev::tabletop
