#include "csev/core/json_io.hpp"

#include <stdexcept>

namespace csev::core {

using nlohmann::ordered_json;

ordered_json to_json(const SemanticFrame& frame) {
  return ordered_json{{"category", frame.category},   {"source", frame.source},
                      {"target", frame.target},       {"region", frame.region},
                      {"direction", frame.direction}, {"magnitude", frame.magnitude}};
}

SemanticFrame frame_from_json(const ordered_json& j) {
  SemanticFrame frame;
  frame.category = j.at("category").get<std::string>();
  frame.source = j.at("source").get<std::string>();
  frame.target = j.at("target").get<std::string>();
  frame.region = j.at("region").get<std::string>();
  frame.direction = j.at("direction").get<std::string>();
  frame.magnitude = j.at("magnitude").get<std::string>();
  return frame;
}

ordered_json to_json(const Instruction& instruction) {
  return ordered_json{{"surface", instruction.surface},
                      {"frame", to_json(instruction.frame)},
                      {"template_id", instruction.template_id},
                      {"paraphrase_id", instruction.paraphrase_id}};
}

Instruction instruction_from_json(const ordered_json& j) {
  Instruction instruction;
  instruction.surface = j.at("surface").get<std::string>();
  instruction.frame = frame_from_json(j.at("frame"));
  instruction.template_id = j.at("template_id").get<int>();
  instruction.paraphrase_id = j.at("paraphrase_id").get<int>();
  return instruction;
}

namespace {

ordered_json behavior_to_json(const Behavior& behavior) {
  ordered_json waypoints = ordered_json::array();
  for (const Vec2& w : behavior.waypoints) {
    waypoints.push_back(ordered_json::array({w.x, w.y}));
  }
  return ordered_json{{"l_opt", behavior.l_opt},
                      {"goal", behavior.goal},
                      {"waypoints", waypoints},
                      {"actions", behavior.actions}};
}

Behavior behavior_from_json(const ordered_json& j) {
  Behavior behavior;
  behavior.l_opt = j.at("l_opt").get<double>();
  behavior.goal = j.at("goal").get<std::string>();
  for (const auto& w : j.at("waypoints")) {
    behavior.waypoints.push_back({w.at(0).get<double>(), w.at(1).get<double>()});
  }
  behavior.actions = j.at("actions").get<std::vector<std::string>>();
  return behavior;
}

}  // namespace

ordered_json to_json(const TestInstance& instance) {
  ordered_json scene;
  instance.scene->to_json(scene);
  return ordered_json{{"id", instance.id},
                      {"tag", to_string(instance.tag)},
                      {"parent_id", instance.parent_id},
                      {"instruction", to_json(instance.instruction)},
                      {"scene", scene},
                      {"expected", behavior_to_json(instance.expected)}};
}

TestInstance instance_from_json(const ordered_json& j, const Environment& env) {
  TestInstance instance;
  instance.id = j.at("id").get<std::string>();
  instance.tag = tag_from_string(j.at("tag").get<std::string>());
  instance.parent_id = j.at("parent_id").get<std::string>();
  instance.instruction = instruction_from_json(j.at("instruction"));
  instance.scene = env.scene_from_json(j.at("scene"));
  instance.expected = behavior_from_json(j.at("expected"));
  return instance;
}

ordered_json to_json(const EvaluationSet& set) {
  ordered_json instances = ordered_json::array();
  for (const TestInstance& x : set.instances) instances.push_back(to_json(x));
  return ordered_json{{"env", to_string(set.env)}, {"seed", set.seed}, {"instances", instances}};
}

EvaluationSet evaluation_set_from_json(const ordered_json& j, const Environment& env) {
  EvaluationSet set;
  set.env = env_kind_from_string(j.at("env").get<std::string>());
  if (set.env != env.kind()) {
    throw std::invalid_argument("evaluation set environment does not match loader");
  }
  set.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& x : j.at("instances")) {
    set.instances.push_back(instance_from_json(x, env));
  }
  return set;
}

std::string dump_evaluation_set(const EvaluationSet& set) { return to_json(set).dump(2) + "\n"; }

EvaluationSet load_evaluation_set(const std::string& text, const Environment& env) {
  return evaluation_set_from_json(ordered_json::parse(text), env);
}

}  // namespace csev::core
