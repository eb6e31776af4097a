#pragma once

#include "poslab/dyck.hpp"
#include "poslab/linalg.hpp"

#include <set>
#include <vector>

namespace poslab {

/// Rank-d matroid on [n] given by its bases, stored as sorted d-tuples in
/// colexicographic order. The exchange axiom is validated on construction.
class Positroid {
public:
    Positroid(int n, int d, std::vector<std::vector<int>> bases);

    int n() const { return n_; }
    int rank() const { return d_; }
    const std::vector<std::vector<int>>& bases() const { return bases_; }
    bool contains(const std::vector<int>& basis) const; // sorted d-tuple

    bool operator==(const Positroid& other) const = default;

private:
    int n_;
    int d_;
    std::vector<std::vector<int>> bases_;
    std::set<std::vector<int>> index_;
};

/// Bases = column subsets with nonzero maximal minor. Throws RankError if the
/// matrix does not have full row rank.
Positroid bases_from_matrix(const IntMat& A);

inline Positroid bases_from_matrix(const ExtendedMatrix& A) {
    return bases_from_matrix(IntMat(A.rows()));
}

/// Single exchange-equivalence class covering the whole ground set.
bool is_connected(const Positroid& P);

/// Checks the minor identity between a matrix and its identity-extended,
/// sign-alternating image, over all equal-size row/column subsets.
bool minor_correspondence_holds(const IntMat& M);

/// All minors (every size) of a square binary matrix with an upper-right
/// Young zero region are nonnegative. Throws if the input is not of that shape.
bool young_binary_tnn_holds(const IntMat& M);

/// Exhaustive basis-exchange check (desk scale).
bool basis_exchange_holds(int n, int d, const std::vector<std::vector<int>>& bases);

} // namespace poslab
