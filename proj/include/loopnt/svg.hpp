#pragma once

/// SVG rendering of a 2-variable analysis: guard line(s), shaded NT region,
/// generator rays (solid = closed, dashed = open). This is the one module
/// allowed to convert exact scalars to floating point; the conversion is
/// presentation-only (about 1e-12 relative error).

#include <string>

#include "loopnt/ntcore.hpp"

namespace loopnt {

std::string render_svg(const LoopSpec& spec, const LoopAnalysis& analysis);

} // namespace loopnt
