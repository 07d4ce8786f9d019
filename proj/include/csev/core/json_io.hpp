#pragma once

#include <string>

#include "csev/core/environment.hpp"
#include "csev/core/types.hpp"

#include <json.hpp>

namespace csev::core {

nlohmann::ordered_json to_json(const SemanticFrame& frame);
SemanticFrame frame_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Instruction& instruction);
Instruction instruction_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const TestInstance& instance);
TestInstance instance_from_json(const nlohmann::ordered_json& j, const Environment& env);

nlohmann::ordered_json to_json(const EvaluationSet& set);
EvaluationSet evaluation_set_from_json(const nlohmann::ordered_json& j, const Environment& env);

std::string dump_evaluation_set(const EvaluationSet& set);
EvaluationSet load_evaluation_set(const std::string& text, const Environment& env);

}  // namespace csev::core
