#pragma once

#include "poslab/dyck.hpp"
#include "poslab/positroid.hpp"

#include <vector>

namespace poslab {

/// n-tuple of ordered d-subsets of [n], the i-th listed increasingly in the
/// cyclic order starting at i, satisfying the necklace exchange condition.
class GrassmannNecklace {
public:
    GrassmannNecklace(int n, int d, std::vector<std::vector<int>> entries);

    int n() const { return n_; }
    int rank() const { return d_; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    const std::vector<int>& entry(int i) const { return entries_[i - 1]; } // 1-indexed

    bool operator==(const GrassmannNecklace& other) const = default;

private:
    int n_;
    int d_;
    std::vector<std::vector<int>> entries_;
};

/// a precedes-or-equals b in the rotated total order i, i+1, ..., n, 1, ..., i-1.
bool leq_i(int i, int a, int b, int n);

/// Position of a in the rotated order (0-based).
int cyclic_pos(int i, int a, int n);

/// Gale comparison: sort S and T by the rotated order and compare componentwise.
bool gale_leq(int i, const std::vector<int>& S, const std::vector<int>& T, int n);

/// Sort a subset increasingly in the rotated order starting at i.
std::vector<int> sort_cyclic(int i, std::vector<int> S, int n);

/// I_i = lexicographically minimal basis in the rotated order, for each i.
GrassmannNecklace necklace_from_bases(const Positroid& P);

/// Bases = subsets Gale-above every necklace entry.
Positroid bases_from_necklace(const GrassmannNecklace& I);

/// Closed-form necklace of the positroid of an extended Dyck matrix, built
/// from its column profile alone.
GrassmannNecklace necklace_explicit(const ColumnProfile& profile);

} // namespace poslab
