#pragma once

#include <string_view>

namespace csev::resources {

// Navigation instruction wording. Tab-separated records: "template<TAB>id
// <TAB>text" with {g1}/{g2} placeholders, and "synonym<TAB>class" followed by
// that class's surface variants (variant 0 is the canonical class name). Bump
// the version line whenever any surface form changes.
inline constexpr std::string_view kNavLanguage = R"RES(version	1
template	0	go to the {g1} and then go to the {g2}
template	1	walk past the {g1}, then stop at the {g2}
template	2	head over to the {g1} before making your way to the {g2}
template	3	first visit the {g1}, then reach the {g2}
synonym	bed	bed	bunk	cot
synonym	couch	couch	sofa	settee
synonym	table	table	desk	kitchen table
synonym	bookshelf	bookshelf	shelf of books	bookcase
synonym	lamp	lamp	floor lamp	reading light
synonym	plant	plant	potted plant	houseplant
synonym	chair	chair	seat	armchair
)RES";

}  // namespace csev::resources
