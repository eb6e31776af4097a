#include "poslab/plabic.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace poslab {

PlabicGraph::PlabicGraph(int n, std::map<int, Color> internal, std::vector<Edge> edges,
                         std::map<int, std::vector<int>> rotations)
    : n_(n), internal_(std::move(internal)), edges_(std::move(edges)),
      rotations_(std::move(rotations)) {
    if (n_ < 1) throw MalformedInputError("a plabic graph needs boundary vertices");
    for (const auto& [v, color] : internal_) {
        (void)color;
        if (v <= n_) throw MalformedInputError("internal ids must exceed the boundary range");
    }
    std::map<int, std::vector<int>> incident;
    for (size_t e = 0; e < edges_.size(); ++e) {
        int u = edges_[e].u, v = edges_[e].v;
        if (u == v) throw MalformedInputError("loops are not allowed");
        for (int w : {u, v}) {
            if (!is_boundary(w) && !is_internal(w)) {
                throw MalformedInputError("edge endpoint " + std::to_string(w) +
                                          " is not a vertex");
            }
            incident[w].push_back(static_cast<int>(e));
        }
    }
    for (int b = 1; b <= n_; ++b) {
        if (incident[b].size() != 1) {
            throw MalformedInputError("boundary vertex " + std::to_string(b) +
                                      " must have degree one");
        }
    }
    for (const auto& [v, color] : internal_) {
        (void)color;
        if (incident[v].size() < 2) {
            throw MalformedInputError("internal vertex " + std::to_string(v) +
                                      " has degree below two (leafless violated)");
        }
    }
    for (auto& [v, edgeIds] : incident) {
        auto it = rotations_.find(v);
        if (it == rotations_.end()) {
            throw MalformedInputError("missing rotation at vertex " + std::to_string(v));
        }
        std::vector<int> sortedRot = it->second;
        std::sort(sortedRot.begin(), sortedRot.end());
        std::sort(edgeIds.begin(), edgeIds.end());
        if (sortedRot != edgeIds) {
            throw MalformedInputError("rotation at vertex " + std::to_string(v) +
                                      " is not a cyclic order of its incident edges");
        }
    }
    if (rotations_.size() != incident.size()) {
        throw MalformedInputError("rotations given for non-vertices");
    }
    // every component must reach the boundary
    std::set<int> reached;
    std::vector<int> stack;
    for (int b = 1; b <= n_; ++b) {
        stack.push_back(b);
        reached.insert(b);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : rotations_.at(v)) {
            int w = other_end(e, v);
            if (reached.insert(w).second) stack.push_back(w);
        }
    }
    if (static_cast<int>(reached.size()) != vertex_count()) {
        throw MalformedInputError("graph has a component not touching the boundary");
    }
}

int PlabicGraph::other_end(int edge, int v) const {
    const Edge& e = edges_[edge];
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
    throw std::invalid_argument("vertex not incident to edge");
}

int PlabicGraph::fresh_vertex_id() const {
    int id = n_;
    if (!internal_.empty()) id = std::max(id, internal_.rbegin()->first);
    return id + 1;
}

bool PlabicGraph::equivalent_to(const PlabicGraph& other) const {
    if (n_ != other.n_ || internal_ != other.internal_) return false;
    auto key = [](const Edge& e) { return std::minmax(e.u, e.v); };
    std::multiset<std::pair<int, int>> mine, theirs;
    for (const auto& e : edges_) mine.insert(key(e));
    for (const auto& e : other.edges_) theirs.insert(key(e));
    if (mine != theirs) return false;
    for (const auto& [v, rot] : rotations_) {
        std::vector<int> a, b;
        for (int e : rot) a.push_back(other_end(e, v));
        for (int e : other.rotations_.at(v)) b.push_back(other.other_end(e, v));
        if (a.size() != b.size()) return false;
        // compare as cyclic sequences
        bool match = false;
        for (size_t shift = 0; shift < a.size() && !match; ++shift) {
            match = true;
            for (size_t k = 0; k < a.size(); ++k) {
                if (a[(k + shift) % a.size()] != b[k]) {
                    match = false;
                    break;
                }
            }
        }
        if (!match) return false;
    }
    return true;
}

PlabicGraph build_plabic(const DyckPath& p) {
    int d = p.north(), m = p.east(), n = d + m;
    const std::string& steps = p.steps();
    // southwest labels, as in the path reading
    std::vector<int> label(n, 0);
    int eseen = 0;
    for (int k = 0; k < n; ++k) {
        if (steps[k] == 'E') label[k] = d + (++eseen);
    }
    int next = 1;
    for (int k = n - 1; k >= 0; --k) {
        if (steps[k] == 'N') label[k] = next++;
    }

    std::map<int, Color> internal;
    std::vector<PlabicGraph::Edge> edges;
    std::map<int, std::vector<int>> rotations;
    auto stepVertex = [&](int k) { return n + 1 + k; }; // step index 0-based

    std::vector<int> pathEdge(n, -1), legEdge(n, -1);
    for (int k = 0; k < n; ++k) {
        internal[stepVertex(k)] = steps[k] == 'N' ? Color::Black : Color::White;
        if (k + 1 < n) {
            pathEdge[k] = static_cast<int>(edges.size());
            edges.push_back({stepVertex(k), stepVertex(k + 1)});
        }
        legEdge[k] = static_cast<int>(edges.size());
        edges.push_back({stepVertex(k), label[k]});
        rotations[label[k]] = {legEdge[k]};
    }
    for (int k = 0; k < n; ++k) {
        int prev = k > 0 ? pathEdge[k - 1] : -1;
        int nextE = k + 1 < n ? pathEdge[k] : -1;
        std::vector<int> rot;
        if (steps[k] == 'N') {
            // black: boundary leg points east; clockwise (next, leg, prev)
            for (int e : {nextE, legEdge[k], prev}) {
                if (e >= 0) rot.push_back(e);
            }
        } else {
            // white: boundary leg points north; clockwise (leg, next, prev)
            for (int e : {legEdge[k], nextE, prev}) {
                if (e >= 0) rot.push_back(e);
            }
        }
        rotations[stepVertex(k)] = std::move(rot);
    }
    return PlabicGraph(n, std::move(internal), std::move(edges), std::move(rotations));
}

std::pair<int, int> graph_type(const PlabicGraph& G) {
    int n = G.n();
    int census = n;
    for (const auto& [v, color] : G.internal()) {
        int deg = G.degree(v);
        census += color == Color::Black ? deg - 2 : 2 - deg;
    }
    if (census % 2 != 0) throw MalformedInputError("degree census is odd");
    return {census / 2, n};
}

namespace {

/// Next directed edge under the rules of the road. Directed edges are
/// (edge id, head vertex).
std::pair<int, int> trip_step(const PlabicGraph& G, int edge, int head) {
    const auto& rot = G.rotations().at(head);
    auto it = std::find(rot.begin(), rot.end(), edge);
    size_t idx = static_cast<size_t>(it - rot.begin());
    size_t deg = rot.size();
    // left at black = clockwise successor, right at white = ccw successor
    size_t nextIdx = G.color(head) == Color::Black ? (idx + 1) % deg : (idx + deg - 1) % deg;
    int nextEdge = rot[nextIdx];
    return {nextEdge, G.other_end(nextEdge, head)};
}

} // namespace

DecoratedPermutation trip_permutation(const PlabicGraph& G) {
    int n = G.n();
    std::vector<int> images(n, 0);
    std::map<int, Decoration> decorations;
    for (int b = 1; b <= n; ++b) {
        int edge = G.rotations().at(b).front();
        int head = G.other_end(edge, b);
        while (!G.is_boundary(head)) {
            auto [e2, h2] = trip_step(G, edge, head);
            edge = e2;
            head = h2;
        }
        images[b - 1] = head;
        if (head == b) {
            int adj = G.other_end(G.rotations().at(b).front(), b);
            decorations[b] = G.color(adj) == Color::Black ? Decoration::Clockwise
                                                          : Decoration::Counterclockwise;
        }
    }
    return DecoratedPermutation(std::move(images), std::move(decorations));
}

std::vector<PerfectOrientation> perfect_orientations(const PlabicGraph& G) {
    int E = G.edge_count();
    std::vector<PerfectOrientation> out;
    std::vector<int> dir(E, -1); // -1 unset, 1 = u->v, 0 = v->u

    // per-vertex tallies for pruning
    std::map<int, int> outdeg, indeg, unassigned;
    for (const auto& [v, rot] : G.rotations()) {
        outdeg[v] = 0;
        indeg[v] = 0;
        unassigned[v] = static_cast<int>(rot.size());
    }

    auto feasible = [&](int v) {
        if (!G.is_internal(v)) return true;
        if (G.color(v) == Color::Black) {
            // outdegree must end exactly 1
            if (outdeg[v] > 1) return false;
            if (outdeg[v] == 0 && unassigned[v] == 0) return false;
        } else {
            if (indeg[v] > 1) return false;
            if (indeg[v] == 0 && unassigned[v] == 0) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int e) {
        if (e == E) {
            PerfectOrientation o;
            o.direction.resize(E);
            for (int k = 0; k < E; ++k) o.direction[k] = dir[k] == 1;
            for (int b = 1; b <= G.n(); ++b) {
                if (outdeg[b] == 1) o.boundary_sources.push_back(b);
            }
            out.push_back(std::move(o));
            return;
        }
        int u = G.edges()[e].u, v = G.edges()[e].v;
        for (int choice : {0, 1}) { // bitmask order: v->u first is 0? keep 0 then 1
            int tail = choice == 1 ? u : v;
            int head = choice == 1 ? v : u;
            dir[e] = choice;
            ++outdeg[tail];
            ++indeg[head];
            --unassigned[u];
            --unassigned[v];
            if (feasible(u) && feasible(v)) rec(e + 1);
            dir[e] = -1;
            --outdeg[tail];
            --indeg[head];
            ++unassigned[u];
            ++unassigned[v];
        }
    };
    rec(0);
    return out;
}

Positroid positroid_from_plabic(const PlabicGraph& G) {
    auto orientations = perfect_orientations(G);
    if (orientations.empty()) {
        throw NotOrientableError("graph admits no perfect orientation");
    }
    std::set<std::vector<int>> sources;
    for (const auto& o : orientations) sources.insert(o.boundary_sources);
    auto [d, n] = graph_type(G);
    std::vector<std::vector<int>> bases(sources.begin(), sources.end());
    for (const auto& B : bases) {
        if (static_cast<int>(B.size()) != d) {
            throw MalformedInputError("source set size disagrees with the graph type");
        }
    }
    return Positroid(n, d, std::move(bases));
}

bool is_tree(const PlabicGraph& G) {
    if (G.edge_count() != G.vertex_count() - 1) return false;
    std::set<int> reached{1};
    std::vector<int> stack{1};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : G.rotations().at(v)) {
            int w = G.other_end(e, v);
            if (reached.insert(w).second) stack.push_back(w);
        }
    }
    return static_cast<int>(reached.size()) == G.vertex_count();
}

namespace {

std::vector<int> incident_edges(const PlabicGraph& G, int v) {
    return G.rotations().at(v);
}

void replace_in_rotation(std::vector<int>& rot, int oldEdge, int newEdge) {
    auto it = std::find(rot.begin(), rot.end(), oldEdge);
    if (it == rot.end()) throw std::logic_error("edge missing from rotation");
    *it = newEdge;
}

/// Rebuild a graph after dropping edges/vertices, compacting edge ids.
PlabicGraph rebuild(int n, std::map<int, Color> internal,
                    const std::vector<PlabicGraph::Edge>& edges,
                    const std::vector<bool>& keepEdge,
                    std::map<int, std::vector<int>> rotations) {
    std::vector<int> newId(edges.size(), -1);
    std::vector<PlabicGraph::Edge> newEdges;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (keepEdge[e]) {
            newId[e] = static_cast<int>(newEdges.size());
            newEdges.push_back(edges[e]);
        }
    }
    std::map<int, std::vector<int>> newRot;
    for (auto& [v, rot] : rotations) {
        std::vector<int> r;
        for (int e : rot) {
            if (keepEdge[e]) r.push_back(newId[e]);
        }
        newRot[v] = std::move(r);
    }
    return PlabicGraph(n, std::move(internal), std::move(newEdges), std::move(newRot));
}

PlabicGraph square_move(const PlabicGraph& G, int edgeId) {
    if (edgeId < 0 || edgeId >= G.edge_count()) {
        throw MoveNotApplicableError("no such edge");
    }
    auto trivalent_internal = [&](int v) { return G.is_internal(v) && G.degree(v) == 3; };
    int a = G.edges()[edgeId].u, b = G.edges()[edgeId].v;
    if (!trivalent_internal(a) || !trivalent_internal(b) || G.color(a) == G.color(b)) {
        throw MoveNotApplicableError("edge does not join trivalent vertices of opposite colors");
    }
    // find c adjacent to b and dd adjacent to a with an edge c-dd closing the square
    for (int eb : incident_edges(G, b)) {
        if (eb == edgeId) continue;
        int c = G.other_end(eb, b);
        if (!trivalent_internal(c) || G.color(c) != G.color(a) || c == a) continue;
        for (int ea : incident_edges(G, a)) {
            if (ea == edgeId) continue;
            int dd = G.other_end(ea, a);
            if (!trivalent_internal(dd) || G.color(dd) != G.color(b) || dd == b) continue;
            for (int ec : incident_edges(G, c)) {
                int x = G.other_end(ec, c);
                if (x == dd) {
                    auto internal = G.internal();
                    for (int v : {a, b, c, dd}) {
                        internal[v] =
                            internal[v] == Color::Black ? Color::White : Color::Black;
                    }
                    return PlabicGraph(G.n(), std::move(internal), G.edges(), G.rotations());
                }
            }
        }
    }
    throw MoveNotApplicableError("edge is not part of an alternating trivalent square");
}

PlabicGraph contract_edge(const PlabicGraph& G, int edgeId) {
    if (edgeId < 0 || edgeId >= G.edge_count()) {
        throw MoveNotApplicableError("no such edge");
    }
    int u = G.edges()[edgeId].u, v = G.edges()[edgeId].v;
    if (!G.is_internal(u) || !G.is_internal(v) || G.color(u) != G.color(v)) {
        throw MoveNotApplicableError("contraction needs a unicolored internal edge");
    }
    for (size_t e = 0; e < G.edges().size(); ++e) {
        if (static_cast<int>(e) != edgeId) {
            auto [x, y] = std::minmax(G.edges()[e].u, G.edges()[e].v);
            if (x == std::min(u, v) && y == std::max(u, v)) {
                throw MoveNotApplicableError("contracting a parallel edge would create a loop");
            }
        }
    }
    int keep = std::min(u, v), drop = std::max(u, v);

    auto edges = G.edges();
    auto rotations = G.rotations();
    // splice: in keep's rotation replace the contracted edge with drop's
    // rotation taken clockwise starting after the contracted edge
    std::vector<int> dropRot = rotations.at(drop);
    auto at = std::find(dropRot.begin(), dropRot.end(), edgeId);
    std::rotate(dropRot.begin(), at, dropRot.end()); // contracted edge first
    dropRot.erase(dropRot.begin());

    std::vector<int>& keepRot = rotations.at(keep);
    auto pos = std::find(keepRot.begin(), keepRot.end(), edgeId);
    pos = keepRot.erase(pos);
    keepRot.insert(pos, dropRot.begin(), dropRot.end());

    for (auto& e : edges) {
        if (e.u == drop) e.u = keep;
        if (e.v == drop) e.v = keep;
    }
    rotations.erase(drop);
    auto internal = G.internal();
    internal.erase(drop);

    std::vector<bool> keepEdge(edges.size(), true);
    keepEdge[edgeId] = false;
    return rebuild(G.n(), std::move(internal), edges, keepEdge, std::move(rotations));
}

PlabicGraph uncontract_vertex(const PlabicGraph& G, int vertex, int arcStart, int arcLen) {
    if (!G.is_internal(vertex)) throw MoveNotApplicableError("can only split internal vertices");
    int deg = G.degree(vertex);
    if (arcLen < 1 || arcLen > deg - 1 || arcStart < 0 || arcStart >= deg) {
        throw MoveNotApplicableError("arc must move between 1 and deg-1 edges");
    }
    int fresh = G.fresh_vertex_id();
    auto edges = G.edges();
    auto rotations = G.rotations();
    auto internal = G.internal();

    const std::vector<int> oldRot = rotations.at(vertex);
    std::vector<int> moved, kept;
    for (int k = 0; k < deg; ++k) {
        int e = oldRot[(arcStart + k) % deg];
        (k < arcLen ? moved : kept).push_back(e);
    }
    int newEdge = static_cast<int>(edges.size());
    edges.push_back({vertex, fresh});

    for (int e : moved) {
        if (edges[e].u == vertex) {
            edges[e].u = fresh;
        } else {
            edges[e].v = fresh;
        }
    }
    // fresh vertex: new edge then the moved arc, clockwise; original vertex:
    // the kept arc with the new edge where the moved arc began
    std::vector<int> freshRot{newEdge};
    freshRot.insert(freshRot.end(), moved.begin(), moved.end());
    std::vector<int> keptRot = kept;
    keptRot.push_back(newEdge);
    rotations[fresh] = std::move(freshRot);
    rotations[vertex] = std::move(keptRot);
    internal[fresh] = G.color(vertex);

    return PlabicGraph(G.n(), std::move(internal), std::move(edges), std::move(rotations));
}

PlabicGraph insert_middle(const PlabicGraph& G, int edgeId, Color color) {
    if (edgeId < 0 || edgeId >= G.edge_count()) {
        throw MoveNotApplicableError("no such edge");
    }
    int u = G.edges()[edgeId].u, v = G.edges()[edgeId].v;
    int fresh = G.fresh_vertex_id();
    auto edges = G.edges();
    auto rotations = G.rotations();
    auto internal = G.internal();

    int e1 = static_cast<int>(edges.size());
    edges.push_back({u, fresh});
    int e2 = static_cast<int>(edges.size());
    edges.push_back({fresh, v});
    replace_in_rotation(rotations.at(u), edgeId, e1);
    replace_in_rotation(rotations.at(v), edgeId, e2);
    rotations[fresh] = {e1, e2};
    internal[fresh] = color;

    std::vector<bool> keepEdge(edges.size(), true);
    keepEdge[edgeId] = false;
    return rebuild(G.n(), std::move(internal), edges, keepEdge, std::move(rotations));
}

PlabicGraph remove_middle(const PlabicGraph& G, int vertex) {
    if (!G.is_internal(vertex) || G.degree(vertex) != 2) {
        throw MoveNotApplicableError("removal needs an internal vertex of degree two");
    }
    const auto& rot = G.rotations().at(vertex);
    int e1 = rot[0], e2 = rot[1];
    int u = G.other_end(e1, vertex), v = G.other_end(e2, vertex);
    if (u == v) {
        throw MoveNotApplicableError("removing this vertex would create a loop");
    }
    auto edges = G.edges();
    auto rotations = G.rotations();
    auto internal = G.internal();

    int glued = static_cast<int>(edges.size());
    edges.push_back({u, v});
    replace_in_rotation(rotations.at(u), e1, glued);
    replace_in_rotation(rotations.at(v), e2, glued);
    rotations.erase(vertex);
    internal.erase(vertex);

    std::vector<bool> keepEdge(edges.size(), true);
    keepEdge[e1] = keepEdge[e2] = false;
    return rebuild(G.n(), std::move(internal), edges, keepEdge, std::move(rotations));
}

PlabicGraph reduce_parallel(const PlabicGraph& G, int edgeId) {
    if (edgeId < 0 || edgeId >= G.edge_count()) {
        throw MoveNotApplicableError("no such edge");
    }
    int u = G.edges()[edgeId].u, v = G.edges()[edgeId].v;
    if (!G.is_internal(u) || !G.is_internal(v) || G.color(u) == G.color(v) ||
        G.degree(u) != 3 || G.degree(v) != 3) {
        throw MoveNotApplicableError(
            "reduction needs trivalent vertices of opposite colors");
    }
    int parallel = -1;
    for (size_t e = 0; e < G.edges().size(); ++e) {
        if (static_cast<int>(e) == edgeId) continue;
        auto [x, y] = std::minmax(G.edges()[e].u, G.edges()[e].v);
        if (x == std::min(u, v) && y == std::max(u, v)) parallel = static_cast<int>(e);
    }
    if (parallel < 0) throw MoveNotApplicableError("no parallel partner edge");

    auto third = [&](int w) {
        for (int e : G.rotations().at(w)) {
            if (e != edgeId && e != parallel) return e;
        }
        throw MoveNotApplicableError("vertex has no third edge");
    };
    int eu = third(u), ev = third(v);
    int x = G.other_end(eu, u), y = G.other_end(ev, v);
    if (x == y) throw MoveNotApplicableError("gluing would create a loop");
    if (x == v || y == u) throw MoveNotApplicableError("third edges re-enter the pair");

    auto edges = G.edges();
    auto rotations = G.rotations();
    auto internal = G.internal();

    int glued = static_cast<int>(edges.size());
    edges.push_back({x, y});
    replace_in_rotation(rotations.at(x), eu, glued);
    replace_in_rotation(rotations.at(y), ev, glued);
    rotations.erase(u);
    rotations.erase(v);
    internal.erase(u);
    internal.erase(v);

    std::vector<bool> keepEdge(edges.size(), true);
    keepEdge[edgeId] = keepEdge[parallel] = keepEdge[eu] = keepEdge[ev] = false;
    return rebuild(G.n(), std::move(internal), edges, keepEdge, std::move(rotations));
}

} // namespace

PlabicGraph apply_move(const PlabicGraph& G, Move move, const MoveSite& site) {
    switch (move) {
    case Move::SquareMove:
        return square_move(G, site.edge);
    case Move::Contract:
        return contract_edge(G, site.edge);
    case Move::Uncontract:
        return uncontract_vertex(G, site.vertex, site.arc_start, site.arc_len);
    case Move::InsertMiddle:
        return insert_middle(G, site.edge, site.color);
    case Move::RemoveMiddle:
        return remove_middle(G, site.vertex);
    case Move::ReduceParallel:
        return reduce_parallel(G, site.edge);
    }
    throw std::invalid_argument("unknown move");
}

} // namespace poslab
