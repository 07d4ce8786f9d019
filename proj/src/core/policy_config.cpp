#include "csev/core/policy_config.hpp"

#include <stdexcept>

namespace csev::core {

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Oracle: return "oracle";
    case PolicyKind::NoisyOracle: return "noisy_oracle";
    case PolicyKind::Defect: return "defect";
  }
  return "oracle";
}

PolicyKind policy_kind_from_string(const std::string& s) {
  if (s == "oracle") return PolicyKind::Oracle;
  if (s == "noisy_oracle") return PolicyKind::NoisyOracle;
  if (s == "defect") return PolicyKind::Defect;
  throw std::invalid_argument("unknown policy kind: " + s);
}

void PolicyConfig::validate() const {
  const auto check_prob = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(std::string("policy knob out of [0,1]: ") + name);
    }
  };
  check_prob(knobs.p_fail, "p_fail");
  check_prob(knobs.p_direction_invert, "p_direction_invert");
  check_prob(knobs.p_referent_swap, "p_referent_swap");
  check_prob(knobs.p_paraphrase_fail, "p_paraphrase_fail");
  if (knobs.distractor_penalty < 0.0) {
    throw std::invalid_argument("distractor_penalty must be >= 0");
  }

  const bool semantic = knobs.p_direction_invert > 0.0 || knobs.p_referent_swap > 0.0 ||
                        knobs.p_paraphrase_fail > 0.0 || knobs.distractor_penalty > 0.0;
  if (kind == PolicyKind::Oracle && (semantic || knobs.p_fail > 0.0)) {
    throw std::invalid_argument("oracle policy takes no defect knobs");
  }
  if (kind == PolicyKind::NoisyOracle && semantic) {
    throw std::invalid_argument("noisy_oracle takes only p_fail");
  }
}

PolicyConfig policy_preset(const std::string& name) {
  PolicyConfig cfg;
  if (name == "oracle") {
    cfg.kind = PolicyKind::Oracle;
  } else if (name == "noisy20") {
    cfg.kind = PolicyKind::NoisyOracle;
    cfg.knobs.p_fail = 0.2;
  } else if (name == "direction_overfit") {
    cfg.kind = PolicyKind::Defect;
    cfg.knobs.p_direction_invert = 1.0;
  } else if (name == "paraphrase_brittle") {
    cfg.kind = PolicyKind::Defect;
    cfg.knobs.p_paraphrase_fail = 0.7;
  } else if (name == "scene_sensitive") {
    cfg.kind = PolicyKind::Defect;
    cfg.knobs.p_fail = 0.05;
    cfg.knobs.distractor_penalty = 0.12;
  } else if (name == "distractor_averse") {
    cfg.kind = PolicyKind::Defect;
    cfg.knobs.distractor_penalty = 0.3;
  } else {
    throw std::invalid_argument("unknown policy preset: " + name);
  }
  cfg.validate();
  return cfg;
}

std::vector<std::string> policy_preset_names() {
  return {"oracle",     "noisy20",         "direction_overfit",
          "paraphrase_brittle", "scene_sensitive", "distractor_averse"};
}

}  // namespace csev::core
