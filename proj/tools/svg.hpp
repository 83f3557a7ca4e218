#pragma once

#include <string>
#include <vector>

#include "qmink/hilbert.hpp"

namespace qmink::cli {

// Scatter of (r, t) with the light-cone lines t = +r and t = -r.
std::string spectrum_svg(const std::vector<SpectrumPoint>& points, double q);

}  // namespace qmink::cli
