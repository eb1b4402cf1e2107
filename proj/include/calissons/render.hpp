#pragma once

#include <optional>
#include <string>

#include "calissons/io.hpp"

namespace calissons {

/// Throws RuleError if the tiling does not fit the document's region.
std::string render_svg(const PuzzleDocument& d, const std::optional<Tiling>& t);
std::string render_ascii(const PuzzleDocument& d, const std::optional<Tiling>& t);

}  // namespace calissons
