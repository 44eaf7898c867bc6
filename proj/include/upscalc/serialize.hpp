#pragma once

#include <string>

#include "upscalc/plfunction.hpp"

namespace upscalc {

// {"breakpoints":[{"t":"p/q","v":"r/s"},...]}
std::string plfunction_to_json(const PLFunction& f);
PLFunction plfunction_from_json(const std::string& text);

// Rows "t,value" at breakpoints, with a header line.
std::string plfunction_to_csv(const PLFunction& f);

// Fixed-viewBox polyline plot with rational tick labels at integer t.
std::string plfunction_to_svg(const PLFunction& f);

}  // namespace upscalc
