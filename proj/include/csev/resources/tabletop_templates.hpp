#pragma once

#include <string_view>

namespace csev::resources {

// Tabletop instruction templates. Tab-separated: category, then the surface
// template. Placeholders: {src} {tgt} {region} {mag} {dir} {dirof}. Bump the
// version line whenever any surface form changes.
inline constexpr std::string_view kTabletopTemplates = R"RES(version	1
block2block	push the {src} to the {tgt}
block2abs	push the {src} to the {region} of the board
block2rel	push the {src} {mag} {dir}
block2blockrel	push the {src} {mag} {dirof} the {tgt}
separate	move the {src} away from the {tgt}
)RES";

}  // namespace csev::resources
