#pragma once

#include <string>

#include "lenstight/star_configuration.hpp"

namespace lenstight {

// Graphviz rendering: the star (e_0, h_i, e_i), one point node per boundary
// endpoint grouped into a cluster per occupied arc B_j, and dashed unstable
// separatrices. Byte-stable.
std::string to_dot(const StarConfiguration& config);

}  // namespace lenstight
