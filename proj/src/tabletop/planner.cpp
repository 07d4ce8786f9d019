#include "csev/tabletop/planner.hpp"

#include <cmath>

#include "csev/tabletop/task.hpp"

namespace csev::tabletop {

using core::Vec2;

namespace {

// Detour radius slightly above contact distance so chord-sampled arc steps
// stay clear of the source block (max chord sagitta at kMaxStep is ~1e-4).
constexpr double kDetourRadius = kContactDistance + 1e-3;

double polyline_length(const std::vector<Vec2>& pts) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += core::distance(pts[i - 1], pts[i]);
  return total;
}

// Appends chord samples of the arc around `center` from angle a0 to a1
// (shorter way, signed sweep chosen by caller), excluding the start angle.
void append_arc(std::vector<Vec2>& pts, Vec2 center, double radius, double a0, double sweep) {
  const double arc_len = std::fabs(sweep) * radius;
  const int n = std::max(1, static_cast<int>(std::ceil(arc_len / kMaxStep)));
  for (int i = 1; i <= n; ++i) {
    const double a = a0 + sweep * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
}

double wrap_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a < -M_PI) a += 2.0 * M_PI;
  return a;
}

// Approach polyline from `start` to `contact`, detouring around the disc at
// `center` when the straight segment would intersect the inflated disc.
std::vector<Vec2> approach_path(Vec2 start, Vec2 contact, Vec2 center) {
  std::vector<Vec2> pts{start};
  // The segment ends exactly kContactDistance from the center, so a plain
  // clearance test against kDetourRadius can never pass. The straight line is
  // safe when its closest pass at the block is that terminal kiss, which
  // holds iff the closest point on the segment is the contact endpoint.
  const bool kiss_at_end = core::dot(contact - start, center - contact) >= 0.0;
  const double clear = core::segment_point_distance(start, contact, center);
  if (kiss_at_end || clear >= kDetourRadius - 1e-12) {
    pts.push_back(contact);
    return pts;
  }

  const double exit_angle = std::atan2(contact.y - center.y, contact.x - center.x);
  const double d = core::distance(start, center);
  if (d < kDetourRadius) {
    // Already inside the detour circle: move radially out, then walk the arc.
    const Vec2 out = center + (start - center).normalized() * kDetourRadius;
    const double a0 = std::atan2(out.y - center.y, out.x - center.x);
    pts.push_back(out);
    append_arc(pts, center, kDetourRadius, a0, wrap_angle(exit_angle - a0));
  } else {
    // Tangent from start to the circle on the side giving the shorter arc.
    const double base = std::atan2(start.y - center.y, start.x - center.x);
    const double spread = std::acos(kDetourRadius / d);
    double best_len = -1.0;
    std::vector<Vec2> best;
    for (const double side : {+1.0, -1.0}) {
      const double tangent_angle = base + side * spread;
      const Vec2 tangent{center.x + kDetourRadius * std::cos(tangent_angle),
                         center.y + kDetourRadius * std::sin(tangent_angle)};
      std::vector<Vec2> candidate{start, tangent};
      append_arc(candidate, center, kDetourRadius, tangent_angle,
                 wrap_angle(exit_angle - tangent_angle));
      const double len = polyline_length(candidate);
      if (best_len < 0.0 || len < best_len) {
        best_len = len;
        best = std::move(candidate);
      }
    }
    pts.insert(pts.end(), best.begin() + 1, best.end());
  }
  pts.push_back(contact);  // short radial hop from the detour circle to contact
  return pts;
}

struct PushTarget {
  Vec2 direction;      // unit push direction
  double distance;     // required block displacement
};

std::optional<PushTarget> push_target(const TaskView& view) {
  const Vec2 src = view.source->pos;
  switch (view.category) {
    case Category::Block2Block: {
      const Vec2 g = view.target->pos;
      return PushTarget{(g - src).normalized(),
                        std::fmax(0.0, core::distance(src, g) - kSuccessTol)};
    }
    case Category::Block2Abs: {
      const Vec2 g = region_center(view.region);
      return PushTarget{(g - src).normalized(),
                        std::fmax(0.0, core::distance(src, g) - kSuccessTol)};
    }
    case Category::Block2Rel: {
      const Vec2 g = src + direction_vector(view.direction) * magnitude_value(view.magnitude);
      return PushTarget{(g - src).normalized(),
                        std::fmax(0.0, core::distance(src, g) - kSuccessTol)};
    }
    case Category::Block2BlockRel: {
      const Vec2 g =
          view.target->pos + direction_vector(view.direction) * magnitude_value(view.magnitude);
      return PushTarget{(g - src).normalized(),
                        std::fmax(0.0, core::distance(src, g) - kSuccessTol)};
    }
    case Category::Separate: {
      const Vec2 away = (src - view.target->pos).normalized();
      return PushTarget{away, std::fmax(0.0, kSeparationThreshold -
                                                 core::distance(src, view.target->pos))};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PushPlan> optimal_plan(const Board& board, const core::SemanticFrame& frame) {
  const auto view = resolve_task(frame, board);
  if (!view) return std::nullopt;
  const auto target = push_target(*view);
  if (!target) return std::nullopt;

  const Vec2 src = view->source->pos;
  // The pushed block must stay inside the workspace for the plan to achieve
  // its goal.
  const Vec2 block_end = src + target->direction * target->distance;
  if (!block_workspace().contains(block_end)) return std::nullopt;

  const Vec2 contact = src - target->direction * kContactDistance;
  if (!pusher_workspace().contains(contact)) return std::nullopt;

  PushPlan plan;
  plan.waypoints = approach_path(board.pusher, contact, src);
  plan.approach_end = plan.waypoints.size() - 1;
  plan.approach_length = polyline_length(plan.waypoints);
  plan.push_length = target->distance;
  plan.push_direction = target->direction;
  if (target->distance > 0.0) {
    plan.waypoints.push_back(contact + target->direction * target->distance);
  }
  return plan;
}

std::optional<core::Behavior> plan_behavior(const Board& board, const core::SemanticFrame& frame) {
  const auto plan = optimal_plan(board, frame);
  if (!plan) return std::nullopt;
  core::Behavior behavior;
  behavior.waypoints = plan->waypoints;
  behavior.l_opt = plan->l_opt();
  behavior.goal = goal_description(frame, board);
  return behavior;
}

}  // namespace csev::tabletop
