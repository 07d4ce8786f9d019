#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csev::core {

enum class PolicyKind { Oracle, NoisyOracle, Defect };

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& s);

// Scripted failure modes layered on top of the per-environment oracle.
// Semantic knobs act at the frame level (mirrored direction, exchanged
// referents), not on raw actions, so a defect produces coherent wrong
// behavior rather than noise.
struct DefectKnobs {
  double p_fail = 0.0;              // base probability of aborting into a random walk
  double p_direction_invert = 0.0;  // probability of executing the mirrored direction/region
  double p_referent_swap = 0.0;     // probability of acting on the target as if it were the source
  double p_paraphrase_fail = 0.0;   // probability of mis-parsing any non-canonical surface form
  double distractor_penalty = 0.0;  // added failure probability per unfamiliar or displaced object

  friend bool operator==(const DefectKnobs&, const DefectKnobs&) = default;
};

struct PolicyConfig {
  PolicyKind kind = PolicyKind::Oracle;
  DefectKnobs knobs;
  std::uint32_t seed_stream = 0;

  // Throws std::invalid_argument if a probability leaves [0,1] or a knob is
  // set that the policy kind cannot use (oracle: none; noisy oracle: p_fail
  // only).
  void validate() const;
};

// Named knob sets for the scripted evaluation scenarios shipped with the CLI.
PolicyConfig policy_preset(const std::string& name);
std::vector<std::string> policy_preset_names();

}  // namespace csev::core
