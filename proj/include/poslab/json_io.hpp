#pragma once

#include "poslab/dyck.hpp"
#include "poslab/lediagram.hpp"
#include "poslab/necklace.hpp"
#include "poslab/permutation.hpp"
#include "poslab/plabic.hpp"
#include "poslab/polytope.hpp"
#include "poslab/positroid.hpp"

#include <json.hpp>

namespace poslab {

using json = nlohmann::ordered_json;

json to_json(const DyckPath& p);
json to_json(const DyckMatrix& D);
json to_json(const ExtendedMatrix& A);
json to_json(const Positroid& P);
json to_json(const GrassmannNecklace& I);
json to_json(const DecoratedPermutation& pi);
json to_json(const LeDiagram& L);
json to_json(const PlabicGraph& G);
json to_json(const HPolytope& H);

/// Canonical lowest-terms "p/q" with positive q.
std::string rat_to_string(const Rat& r);

} // namespace poslab
