#pragma once

#include <string>

#include "csev/core/types.hpp"

namespace csev::core {

// Staging distance charged per object added to or removed from the workspace:
// objects enter and leave via an off-board staging point at this fixed
// distance.
inline double staging_distance(EnvKind kind) {
  return kind == EnvKind::Tabletop ? 1.0 : 3.0;
}

struct SceneDiff {
  double distance_m = 0.0;
  int objects_moved = 0;    // matched objects with nonzero displacement
  int objects_added = 0;
  int objects_removed = 0;

  [[nodiscard]] int objects_touched() const {
    return objects_moved + objects_added + objects_removed;
  }
};

// Physical effort to rearrange scene `prev` into scene `next`: matched-object
// Euclidean displacements plus staging distance per unmatched object. Objects
// match by id. Throws std::invalid_argument on mismatched environment kinds.
SceneDiff scene_diff(const Scene& prev, const Scene& next);

inline double scene_diff_cost(const Scene& prev, const Scene& next) {
  return scene_diff(prev, next).distance_m;
}

// Objects present in both scenes whose positions differ by more than
// `tolerance` meters. Used by scene-state-sensitive policies to react to a
// workspace that drifted away from an instance's nominal layout.
int displaced_object_count(const Scene& current, const Scene& nominal, double tolerance);

struct TimeProxyParams {
  double seconds_per_meter = 10.0;
  double seconds_per_object = 5.0;
};

inline double time_proxy_cost(double distance_m, int objects_touched,
                              const TimeProxyParams& params = {}) {
  return params.seconds_per_meter * distance_m +
         params.seconds_per_object * static_cast<double>(objects_touched);
}

enum class CostModel { DistanceMoved, TimeProxy };

std::string to_string(CostModel model);
CostModel cost_model_from_string(const std::string& s);

// Budget accounting for one evaluation run. Units are meters under the
// distance model, seconds under the time model.
class CostLedger {
 public:
  CostLedger(CostModel model, double budget) : model_(model), budget_(budget) {}

  double charge(const SceneDiff& diff) {
    const double amount = model_ == CostModel::DistanceMoved
                              ? diff.distance_m
                              : time_proxy_cost(diff.distance_m, diff.objects_touched());
    total_ += amount;
    return amount;
  }

  [[nodiscard]] double total() const { return total_; }
  [[nodiscard]] double budget() const { return budget_; }
  [[nodiscard]] CostModel model() const { return model_; }
  [[nodiscard]] bool exceeded() const { return total_ > budget_; }

 private:
  CostModel model_;
  double budget_;
  double total_ = 0.0;
};

}  // namespace csev::core
