#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "critradius/geometry.h"

namespace critradius {

/// Parses a region description:
///   {"kind":"polygon","vertices":[[x,y],...]}
///   {"kind":"disk","center":[x,y],"radius":r}
///   {"kind":"named","name":"unit-square"|"unit-disk"|"rect"|"hexagon","params":{...}}
/// with optional "normalize": true. `rect` takes params.width (default 1).
/// Throws ParseError on malformed JSON and InvalidRegion on bad geometry.
ConvexRegion parse_region(std::string_view json_text);
ConvexRegion read_region(std::istream& in);
ConvexRegion load_region_file(const std::string& path);

/// Built-in unit-area region by name; `width` applies to "rect".
ConvexRegion named_region(std::string_view name, double width = 1.0);

/// Names accepted by named_region.
std::vector<std::string> named_region_names();

/// Region JSON in the "polygon" or "disk" form.
std::string region_to_json(const ConvexRegion& region);

}  // namespace critradius
