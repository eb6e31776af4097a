#pragma once

#include "poslab/dyck.hpp"
#include "poslab/lediagram.hpp"
#include "poslab/plabic.hpp"

#include <optional>
#include <string>

namespace poslab {

std::string svg_path(const DyckPath& p);
std::string svg_lediagram(const LeDiagram& L, bool pipe_dream = false);

/// Disk drawing; when an orientation index is given, its edges are drawn as
/// arrows and the boundary sources highlighted.
std::string svg_plabic(const PlabicGraph& G, std::optional<int> orientation = std::nullopt);

} // namespace poslab
