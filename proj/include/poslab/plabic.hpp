#pragma once

#include "poslab/dyck.hpp"
#include "poslab/permutation.hpp"
#include "poslab/positroid.hpp"

#include <map>
#include <vector>

namespace poslab {

enum class Color { Black, White };

/// Planar bicolored graph in a disk: boundary vertices 1..n (degree one,
/// clockwise), colored internal vertices, and a clockwise rotation order of
/// incident edges at every vertex.
class PlabicGraph {
public:
    struct Edge {
        int u;
        int v;
        bool operator==(const Edge&) const = default;
    };

    PlabicGraph(int n, std::map<int, Color> internal, std::vector<Edge> edges,
                std::map<int, std::vector<int>> rotations);

    int n() const { return n_; }
    const std::map<int, Color>& internal() const { return internal_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<int, std::vector<int>>& rotations() const { return rotations_; }

    bool is_boundary(int v) const { return v >= 1 && v <= n_; }
    bool is_internal(int v) const { return internal_.count(v) > 0; }
    Color color(int v) const { return internal_.at(v); }
    int degree(int v) const { return static_cast<int>(rotations_.at(v).size()); }
    int other_end(int edge, int v) const;
    int vertex_count() const { return n_ + static_cast<int>(internal_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int fresh_vertex_id() const;

    /// Same boundary, same colored vertices, and at every vertex the same
    /// clockwise neighbor sequence up to rotation.
    bool equivalent_to(const PlabicGraph& other) const;

private:
    int n_;
    std::map<int, Color> internal_;
    std::vector<Edge> edges_;
    std::map<int, std::vector<int>> rotations_;
};

/// One internal vertex per step (white on E, black on N), path edges between
/// consecutive steps, one boundary leg per step under the southwest labeling.
PlabicGraph build_plabic(const DyckPath& p);

/// (d, n) with d from the degree census; throws on a half-integral census.
std::pair<int, int> graph_type(const PlabicGraph& G);

/// Rules of the road: turn left at black, right at white.
DecoratedPermutation trip_permutation(const PlabicGraph& G);

/// Edge direction assignment; direction[e] true means edges()[e].u -> .v.
struct PerfectOrientation {
    std::vector<bool> direction;
    std::vector<int> boundary_sources; // sorted
};

/// All orientations with black outdegree one and white indegree one, ordered
/// by direction bitmask.
std::vector<PerfectOrientation> perfect_orientations(const PlabicGraph& G);

/// Bases = boundary source sets over all perfect orientations.
Positroid positroid_from_plabic(const PlabicGraph& G);

bool is_tree(const PlabicGraph& G);

enum class Move {
    SquareMove,      // M1: recolor an alternating trivalent square
    Contract,        // M2: contract a unicolored edge
    Uncontract,      // M2: split a vertex along a rotation arc
    InsertMiddle,    // M3: insert a degree-2 vertex on an edge
    RemoveMiddle,    // M3: remove a degree-2 vertex
    ReduceParallel,  // R1: delete a trivalent bicolored parallel pair
};

struct MoveSite {
    int edge = -1;   // SquareMove, Contract, InsertMiddle, ReduceParallel
    int vertex = -1; // Uncontract, RemoveMiddle
    Color color = Color::Black; // InsertMiddle
    int arc_start = 0;          // Uncontract: index into the rotation of `vertex`
    int arc_len = 0;            // Uncontract: number of edges moved to the new vertex
};

/// Apply a local move; throws MoveNotApplicableError when the pattern does
/// not match at the site.
PlabicGraph apply_move(const PlabicGraph& G, Move move, const MoveSite& site);

} // namespace poslab
