#include "csev/core/cost.hpp"

#include <algorithm>
#include <stdexcept>

namespace csev::core {

SceneDiff scene_diff(const Scene& prev, const Scene& next) {
  if (prev.kind() != next.kind()) {
    throw std::invalid_argument("scene_diff: environment kinds differ");
  }
  const double d_stage = staging_distance(prev.kind());

  auto a = prev.object_poses();
  auto b = next.object_poses();
  const auto by_id = [](const auto& l, const auto& r) { return l.first < r.first; };
  std::sort(a.begin(), a.end(), by_id);
  std::sort(b.begin(), b.end(), by_id);

  SceneDiff diff;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      const double d = distance(a[i].second, b[j].second);
      diff.distance_m += d;
      if (d > 0.0) ++diff.objects_moved;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      diff.distance_m += d_stage;
      ++diff.objects_removed;
      ++i;
    } else {
      diff.distance_m += d_stage;
      ++diff.objects_added;
      ++j;
    }
  }
  diff.objects_removed += static_cast<int>(a.size() - i);
  diff.objects_added += static_cast<int>(b.size() - j);
  diff.distance_m += d_stage * static_cast<double>((a.size() - i) + (b.size() - j));
  return diff;
}

int displaced_object_count(const Scene& current, const Scene& nominal, double tolerance) {
  auto a = current.object_poses();
  auto b = nominal.object_poses();
  const auto by_id = [](const auto& l, const auto& r) { return l.first < r.first; };
  std::sort(a.begin(), a.end(), by_id);
  std::sort(b.begin(), b.end(), by_id);

  int displaced = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (distance(a[i].second, b[j].second) > tolerance) ++displaced;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return displaced;
}

std::string to_string(CostModel model) {
  return model == CostModel::DistanceMoved ? "distance_moved" : "time_proxy";
}

CostModel cost_model_from_string(const std::string& s) {
  if (s == "distance_moved") return CostModel::DistanceMoved;
  if (s == "time_proxy") return CostModel::TimeProxy;
  throw std::invalid_argument("unknown cost model: " + s);
}

}  // namespace csev::core
