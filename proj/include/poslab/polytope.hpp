#pragma once

#include "poslab/common.hpp"
#include "poslab/dyck.hpp"
#include "poslab/necklace.hpp"
#include "poslab/positroid.hpp"

#include <vector>

namespace poslab {

struct LinearConstraint {
    std::vector<Rat> a;
    Rat b;
    bool operator==(const LinearConstraint&) const = default;
};

/// H-representation over exact rationals: equalities a.x = b and
/// inequalities a.x <= b in ambient dimension n.
class HPolytope {
public:
    explicit HPolytope(int n) : n_(n) {}

    int n() const { return n_; }
    const std::vector<LinearConstraint>& equalities() const { return eq_; }
    const std::vector<LinearConstraint>& inequalities() const { return ineq_; }

    void add_equality(std::vector<Rat> a, Rat b);
    void add_inequality(std::vector<Rat> a, Rat b);

    bool satisfies(const std::vector<Rat>& x) const;

private:
    int n_;
    std::vector<LinearConstraint> eq_;
    std::vector<LinearConstraint> ineq_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    std::vector<Rat> witness;
};

/// Exact rational simplex with Bland's rule; variables are free.
LpResult lp_max(const HPolytope& H, const std::vector<Rat>& objective);

/// Every outer constraint is satisfied over the inner polytope, certified by
/// exact LPs. Throws UnboundedError if the inner system is unbounded along a
/// checked direction, MalformedInputError if it is infeasible.
bool polytope_contains(const HPolytope& outer, const HPolytope& inner);

/// 0/1 indicator vectors of the bases, in colex order of the bases.
std::vector<std::vector<int>> vertices_from_bases(const Positroid& P);

/// Equality, nonnegativity, and all cyclic-window inequalities of a necklace.
HPolytope hrep_general(const GrassmannNecklace& I);

/// The short inequality system read off the column profile.
HPolytope hrep_refined(const ColumnProfile& profile);

/// All 0/1 points with exactly d ones satisfying H exactly.
std::vector<std::vector<int>> zero_one_points(const HPolytope& H, int d);

/// Midpoint criterion: u,v span an edge iff (u+v)/2 cannot be written as a
/// convex combination of the remaining vertices (exact LP feasibility).
bool vertices_adjacent(const std::vector<std::vector<int>>& V, const std::vector<int>& u,
                       const std::vector<int>& v);

} // namespace poslab
