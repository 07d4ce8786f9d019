#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csev/core/geometry.hpp"

#include <json.hpp>

namespace csev::core {

enum class EnvKind { Tabletop, Nav };

std::string to_string(EnvKind kind);
EnvKind env_kind_from_string(const std::string& s);

// Perturbation family. The B suffix marks operators whose perturbed instance
// has a different expected behavior than its base instance.
enum class TagKind { Original, DL, DLB, DS, DSB };

struct PerturbationTag {
  TagKind kind = TagKind::Original;
  int variant = 0;  // 0 = unnumbered; tabletop operators use 1 and 2.

  friend bool operator==(const PerturbationTag&, const PerturbationTag&) = default;
};

std::string to_string(const PerturbationTag& tag);
PerturbationTag tag_from_string(const std::string& s);

// Canonical parse of an instruction. Referents name object classes or
// class-unique descriptors the environment can resolve in a scene. Fields not
// used by a task category stay empty.
struct SemanticFrame {
  std::string category;
  std::string source;
  std::string target;
  std::string region;
  std::string direction;
  std::string magnitude;

  friend bool operator==(const SemanticFrame&, const SemanticFrame&) = default;
};

struct Instruction {
  std::string surface;
  SemanticFrame frame;
  int template_id = 0;
  int paraphrase_id = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

// Immutable concrete scene owned by an environment module. Strategy and cost
// code only sees this interface; object_poses() is the canonical layout used
// for reset-cost accounting (robot/pusher pose is excluded: repositioning the
// robot is free).
class Scene {
 public:
  virtual ~Scene() = default;
  [[nodiscard]] virtual EnvKind kind() const = 0;
  [[nodiscard]] virtual std::vector<std::pair<std::string, Vec2>> object_poses() const = 0;
  virtual void to_json(nlohmann::ordered_json& out) const = 0;
};

using ScenePtr = std::shared_ptr<const Scene>;

// Expected behavior of a correct policy: reference trajectory, optimal path
// length in meters, and a human-readable description of the goal predicate.
struct Behavior {
  std::vector<Vec2> waypoints;
  std::vector<std::string> actions;  // nav only; empty for tabletop
  double l_opt = 0.0;
  std::string goal;
};

struct TestInstance {
  std::string id;
  Instruction instruction;
  ScenePtr scene;
  Behavior expected;
  PerturbationTag tag;
  std::string parent_id;  // empty for originals
};

struct EvaluationSet {
  EnvKind env = EnvKind::Tabletop;
  std::uint64_t seed = 0;
  std::vector<TestInstance> instances;
};

struct Feasibility {
  bool ok = false;
  std::string reason;
};

// Success-weighted path length. Clamped to [0, 1]; failures score 0.
inline double spl(bool success, double l_opt, double l_taken) {
  if (!success) return 0.0;
  const double denom = std::fmax(std::fmax(l_opt, l_taken), 1e-9);
  return l_opt / denom;
}

}  // namespace csev::core
