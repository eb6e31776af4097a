#include "poslab/json_io.hpp"

namespace poslab {

std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

json to_json(const DyckPath& p) {
    return json{{"m", p.east()}, {"d", p.north()}, {"steps", p.steps()}};
}

json to_json(const DyckMatrix& D) {
    return json{{"d", D.d()}, {"m", D.m()}, {"rows", D.rows()}};
}

json to_json(const ExtendedMatrix& A) {
    return json{{"d", A.d()}, {"m", A.m()}, {"rows", A.rows()}};
}

json to_json(const Positroid& P) {
    return json{{"n", P.n()}, {"d", P.rank()}, {"bases", P.bases()}};
}

json to_json(const GrassmannNecklace& I) {
    return json{{"n", I.n()}, {"d", I.rank()}, {"entries", I.entries()}};
}

json to_json(const DecoratedPermutation& pi) {
    json decorations = json::object();
    for (const auto& [j, dec] : pi.decorations()) {
        decorations[std::to_string(j)] = dec == Decoration::Clockwise ? "cw" : "ccw";
    }
    return json{{"n", pi.n()},
                {"images", pi.images()},
                {"decorations", decorations},
                {"cycle", pi.cycle_string()}};
}

json to_json(const LeDiagram& L) {
    return json{{"d", L.d()}, {"m", L.m()}, {"shape", L.shape()}, {"fill", L.fill()}};
}

json to_json(const PlabicGraph& G) {
    json internal = json::array();
    for (const auto& [id, color] : G.internal()) {
        internal.push_back(json{{"id", id}, {"color", color == Color::Black ? "black" : "white"}});
    }
    json edges = json::array();
    for (const auto& e : G.edges()) edges.push_back(json::array({e.u, e.v}));
    json rotations = json::object();
    for (const auto& [v, rot] : G.rotations()) rotations[std::to_string(v)] = rot;
    return json{{"n", G.n()}, {"internal", internal}, {"edges", edges}, {"rotations", rotations}};
}

json to_json(const HPolytope& H) {
    auto constraint = [](const LinearConstraint& c) {
        json a = json::array();
        for (const auto& v : c.a) a.push_back(rat_to_string(v));
        return json{{"a", a}, {"b", rat_to_string(c.b)}};
    };
    json eq = json::array();
    for (const auto& c : H.equalities()) eq.push_back(constraint(c));
    json ineq = json::array();
    for (const auto& c : H.inequalities()) ineq.push_back(constraint(c));
    return json{{"n", H.n()}, {"eq", eq}, {"ineq", ineq}};
}

} // namespace poslab
