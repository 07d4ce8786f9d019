#pragma once

#include <string>
#include <vector>

#include "csev/core/types.hpp"

namespace csev::nav {

inline constexpr int kTemplateCount = 4;

// Paraphrase ids select the synonym pair for the two subgoal nouns: id 0 is
// canonical (base class names); nonzero ids walk distinct synonym
// combinations.
inline constexpr int kParaphraseCount = 6;

std::string nav_language_version();

// Surface variants for a furniture class; index 0 is the class name itself.
const std::vector<std::string>& nav_synonyms(const std::string& cls);

// Renders "visit g1 then g2" wording from the versioned template table.
// frame.source names the first subgoal class, frame.target the second.
std::string render_nav_surface(const core::SemanticFrame& frame, int template_id,
                               int paraphrase_id);

const std::vector<std::string>& nav_goal_classes();
const std::vector<std::string>& nav_passive_classes();

// Classes a policy counts as familiar: everything the default layouts
// contain. Objects of any other class are distractors.
const std::vector<std::string>& nav_familiar_classes();
bool is_familiar_class(const std::string& cls);

}  // namespace csev::nav
