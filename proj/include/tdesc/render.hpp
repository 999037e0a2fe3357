#pragma once

#include <string>

#include "tdesc/increasing_tree.hpp"
#include "tdesc/planar_tree.hpp"

namespace tdesc {

// Deterministic monospaced drawing. Leaves on the top row, the root bus at
// the bottom; vertices are horizontal buses with '+' where children attach
// and the natural branch labels printed between attachment points. For
// increasing trees the bus row is the vertex level; for plain trees it is
// the vertex height.
std::string render_ascii(const PlanarTree& t);
std::string render_ascii(const IncreasingTree& t);

} // namespace tdesc
