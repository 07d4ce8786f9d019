#include "csev/tabletop/task.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "csev/resources/tabletop_templates.hpp"

namespace csev::tabletop {

using core::SemanticFrame;
using core::Vec2;

std::string to_string(Category category) {
  switch (category) {
    case Category::Block2Block: return "block2block";
    case Category::Block2Abs: return "block2abs";
    case Category::Block2Rel: return "block2rel";
    case Category::Block2BlockRel: return "block2blockrel";
    case Category::Separate: return "separate";
  }
  return "block2block";
}

std::optional<Category> category_from_string(const std::string& s) {
  if (s == "block2block") return Category::Block2Block;
  if (s == "block2abs") return Category::Block2Abs;
  if (s == "block2rel") return Category::Block2Rel;
  if (s == "block2blockrel") return Category::Block2BlockRel;
  if (s == "separate") return Category::Separate;
  return std::nullopt;
}

std::vector<Category> all_categories() {
  return {Category::Block2Block, Category::Block2Abs, Category::Block2Rel,
          Category::Block2BlockRel, Category::Separate};
}

double magnitude_value(const std::string& magnitude) {
  if (magnitude == "slightly") return 0.10;
  if (magnitude == "somewhat") return 0.20;
  throw std::invalid_argument("unknown magnitude: " + magnitude);
}

std::vector<std::string> magnitude_names() { return {"slightly", "somewhat"}; }

Vec2 direction_vector(const std::string& direction) {
  if (direction == "up") return {0.0, 1.0};
  if (direction == "down") return {0.0, -1.0};
  if (direction == "left") return {-1.0, 0.0};
  if (direction == "right") return {1.0, 0.0};
  throw std::invalid_argument("unknown direction: " + direction);
}

std::string inverted_direction(const std::string& direction) {
  if (direction == "up") return "down";
  if (direction == "down") return "up";
  if (direction == "left") return "right";
  if (direction == "right") return "left";
  throw std::invalid_argument("unknown direction: " + direction);
}

std::vector<std::string> direction_names() { return {"up", "down", "left", "right"}; }

namespace {

struct RegionInfo {
  const char* name;
  const char* surface;
  const char* inverse;  // empty: not invertible
  double cx;
  double cy;
};

constexpr double kX0 = kBoardWidth / 6.0;
constexpr double kX1 = kBoardWidth / 2.0;
constexpr double kX2 = 5.0 * kBoardWidth / 6.0;
constexpr double kY0 = kBoardHeight / 6.0;
constexpr double kY1 = kBoardHeight / 2.0;
constexpr double kY2 = 5.0 * kBoardHeight / 6.0;

const RegionInfo kRegions[] = {
    {"top-left", "upper left", "bottom-right", kX0, kY2},
    {"top", "top", "bottom", kX1, kY2},
    {"top-right", "upper right", "bottom-left", kX2, kY2},
    {"left", "left", "right", kX0, kY1},
    {"center", "center", "", kX1, kY1},
    {"right", "right", "left", kX2, kY1},
    {"bottom-left", "lower left", "top-right", kX0, kY0},
    {"bottom", "bottom", "top", kX1, kY0},
    {"bottom-right", "lower right", "top-left", kX2, kY0},
};

const RegionInfo& region_info(const std::string& region) {
  for (const RegionInfo& r : kRegions) {
    if (region == r.name) return r;
  }
  throw std::invalid_argument("unknown region: " + region);
}

}  // namespace

Vec2 region_center(const std::string& region) {
  const RegionInfo& r = region_info(region);
  return {r.cx, r.cy};
}

std::optional<std::string> inverted_region(const std::string& region) {
  const RegionInfo& r = region_info(region);
  if (r.inverse[0] == '\0') return std::nullopt;
  return std::string(r.inverse);
}

std::vector<std::string> region_names() {
  std::vector<std::string> names;
  for (const RegionInfo& r : kRegions) names.emplace_back(r.name);
  return names;
}

std::vector<std::string> shape_names() { return {"cube", "moon", "star", "pentagon"}; }

std::vector<std::string> color_names() {
  return {"red", "blue", "green", "yellow", "purple", "orange"};
}

std::optional<TaskView> resolve_task(const SemanticFrame& frame, const Board& board) {
  const auto category = category_from_string(frame.category);
  if (!category) return std::nullopt;

  TaskView view;
  view.category = *category;
  view.source = board.find(frame.source);
  if (view.source == nullptr) return std::nullopt;

  const bool wants_target = *category == Category::Block2Block ||
                            *category == Category::Block2BlockRel ||
                            *category == Category::Separate;
  if (wants_target) {
    if (frame.target.empty()) return std::nullopt;
    view.target = board.find(frame.target);
    if (view.target == nullptr || view.target == view.source) return std::nullopt;
  } else if (!frame.target.empty()) {
    return std::nullopt;
  }

  if (*category == Category::Block2Abs) {
    bool known = false;
    for (const std::string& name : region_names()) known = known || name == frame.region;
    if (!known) return std::nullopt;
    view.region = frame.region;
  } else if (!frame.region.empty()) {
    return std::nullopt;
  }

  const bool wants_direction =
      *category == Category::Block2Rel || *category == Category::Block2BlockRel;
  if (wants_direction) {
    bool known = false;
    for (const std::string& name : direction_names()) known = known || name == frame.direction;
    if (!known) return std::nullopt;
    bool known_mag = false;
    for (const std::string& name : magnitude_names()) known_mag = known_mag || name == frame.magnitude;
    if (!known_mag) return std::nullopt;
    view.direction = frame.direction;
    view.magnitude = frame.magnitude;
  } else if (!frame.direction.empty() || !frame.magnitude.empty()) {
    return std::nullopt;
  }

  return view;
}

namespace {

// Tolerance pad keeps a push planned to land exactly on the epsilon boundary
// inside the predicate under floating-point rounding.
constexpr double kPredicatePad = 1e-9;

}  // namespace

std::optional<BoardPredicate> goal_predicate(const SemanticFrame& frame, const Board& at_plan) {
  const auto view = resolve_task(frame, at_plan);
  if (!view) return std::nullopt;

  const std::string source_id = view->source->id;
  switch (view->category) {
    case Category::Block2Block: {
      const std::string target_id = view->target->id;
      return [source_id, target_id](const Board& b) {
        const Block* s = b.find(source_id);
        const Block* t = b.find(target_id);
        return s != nullptr && t != nullptr &&
               core::distance(s->pos, t->pos) <= kSuccessTol + kPredicatePad;
      };
    }
    case Category::Block2Abs: {
      const Vec2 goal = region_center(view->region);
      return [source_id, goal](const Board& b) {
        const Block* s = b.find(source_id);
        return s != nullptr && core::distance(s->pos, goal) <= kSuccessTol + kPredicatePad;
      };
    }
    case Category::Block2Rel: {
      const Vec2 goal =
          view->source->pos + direction_vector(view->direction) * magnitude_value(view->magnitude);
      return [source_id, goal](const Board& b) {
        const Block* s = b.find(source_id);
        return s != nullptr && core::distance(s->pos, goal) <= kSuccessTol + kPredicatePad;
      };
    }
    case Category::Block2BlockRel: {
      const std::string target_id = view->target->id;
      const Vec2 offset =
          direction_vector(view->direction) * magnitude_value(view->magnitude);
      return [source_id, target_id, offset](const Board& b) {
        const Block* s = b.find(source_id);
        const Block* t = b.find(target_id);
        return s != nullptr && t != nullptr &&
               core::distance(s->pos, t->pos + offset) <= kSuccessTol + kPredicatePad;
      };
    }
    case Category::Separate: {
      const std::string target_id = view->target->id;
      return [source_id, target_id](const Board& b) {
        const Block* s = b.find(source_id);
        const Block* t = b.find(target_id);
        return s != nullptr && t != nullptr &&
               core::distance(s->pos, t->pos) >= kSeparationThreshold - kPredicatePad;
      };
    }
  }
  return std::nullopt;
}

std::string goal_description(const SemanticFrame& frame, const Board& at_plan) {
  const auto view = resolve_task(frame, at_plan);
  if (!view) return "unresolvable";
  std::ostringstream out;
  switch (view->category) {
    case Category::Block2Block:
      out << frame.source << " within " << kSuccessTol << " m of " << frame.target;
      break;
    case Category::Block2Abs:
      out << frame.source << " within " << kSuccessTol << " m of region " << frame.region;
      break;
    case Category::Block2Rel: {
      const Vec2 g =
          view->source->pos + direction_vector(view->direction) * magnitude_value(view->magnitude);
      out << frame.source << " within " << kSuccessTol << " m of (" << g.x << ", " << g.y << ")";
      break;
    }
    case Category::Block2BlockRel:
      out << frame.source << " within " << kSuccessTol << " m of " << frame.magnitude << " "
          << frame.direction << " of " << frame.target;
      break;
    case Category::Separate:
      out << frame.source << " at least " << kSeparationThreshold << " m from " << frame.target;
      break;
  }
  return out.str();
}

namespace {

std::map<std::string, std::string> parse_templates(std::string& version) {
  std::map<std::string, std::string> templates;
  std::istringstream in{std::string(resources::kTabletopTemplates)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    if (key == "version") {
      version = value;
    } else {
      templates[key] = value;
    }
  }
  return templates;
}

const std::map<std::string, std::string>& templates_by_category(std::string* version_out = nullptr) {
  static std::string version;
  static const std::map<std::string, std::string> table = parse_templates(version);
  if (version_out != nullptr) *version_out = version;
  return table;
}

void replace_all(std::string& text, const std::string& key, const std::string& value) {
  for (auto at = text.find(key); at != std::string::npos; at = text.find(key)) {
    text.replace(at, key.size(), value);
  }
}

std::string direction_phrase(const std::string& direction) {
  if (direction == "up") return "up";
  if (direction == "down") return "down";
  if (direction == "left") return "to the left";
  return "to the right";
}

std::string direction_of_phrase(const std::string& direction) {
  if (direction == "up") return "above";
  if (direction == "down") return "below";
  if (direction == "left") return "to the left of";
  return "to the right of";
}

std::string region_phrase(const std::string& region) { return region_info(region).surface; }

// Block ids are "<color>-<shape>"; the spoken referent is "<color> <shape>".
std::string referent_phrase(std::string id) {
  for (char& c : id) {
    if (c == '-') c = ' ';
  }
  return id;
}

}  // namespace

std::string render_surface(const SemanticFrame& frame) {
  const auto& table = templates_by_category();
  const auto it = table.find(frame.category);
  if (it == table.end()) throw std::invalid_argument("no template for category " + frame.category);
  std::string text = it->second;
  replace_all(text, "{src}", referent_phrase(frame.source));
  replace_all(text, "{tgt}", referent_phrase(frame.target));
  if (!frame.region.empty()) replace_all(text, "{region}", region_phrase(frame.region));
  if (!frame.direction.empty()) {
    replace_all(text, "{dir}", direction_phrase(frame.direction));
    replace_all(text, "{dirof}", direction_of_phrase(frame.direction));
  }
  if (!frame.magnitude.empty()) replace_all(text, "{mag}", frame.magnitude);
  return text;
}

std::string tabletop_template_version() {
  std::string version;
  templates_by_category(&version);
  return version;
}

}  // namespace csev::tabletop
