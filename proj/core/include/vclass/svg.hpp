#pragma once

#include <string>

#include "vclass/filtrations.hpp"

namespace vclass {

// Standalone SVG: one lane per degree first-1 .. last+1, members as bars,
// gaps hatched, dense classes shaded.
std::string render_svg(const AdmissibleFiltration& f);

}  // namespace vclass
