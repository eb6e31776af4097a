#pragma once

#include "poslab/dyck.hpp"
#include "poslab/necklace.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace poslab {

enum class Decoration { Clockwise, Counterclockwise };

/// Permutation of [n] with fixed points marked clockwise or counterclockwise.
class DecoratedPermutation {
public:
    DecoratedPermutation(std::vector<int> images, std::map<int, Decoration> decorations = {});

    int n() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[i - 1]; } // 1-indexed
    const std::vector<int>& images() const { return images_; }
    const std::map<int, Decoration>& decorations() const { return decorations_; }

    DecoratedPermutation inverse() const;
    bool is_fixed_point_free() const { return decorations_.empty(); }

    /// Disjoint cycles, each rotated to start at its least element, sorted by
    /// least element; fixed points appear as singletons.
    std::vector<std::vector<int>> cycles() const;
    std::string cycle_string() const;

    bool operator==(const DecoratedPermutation& other) const = default;

private:
    std::vector<int> images_;
    std::map<int, Decoration> decorations_;
};

/// Build a permutation from its disjoint cycles over [n].
DecoratedPermutation perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles,
                                      std::map<int, Decoration> decorations = {});

DecoratedPermutation perm_from_necklace(const GrassmannNecklace& I);
GrassmannNecklace necklace_from_perm(const DecoratedPermutation& pi);

/// Permutation of the positroid of an extended Dyck matrix, computed by the
/// closed-form description of its inverse on the column profile.
DecoratedPermutation perm_inverse_explicit(const ColumnProfile& profile);

/// Label N steps 1..d top to bottom, E steps d+1..d+m left to right, and read
/// the labels from the last step to the first.
DecoratedPermutation southwest_perm(const DyckPath& p);

/// Inverse of the southwest reading: rebuild the path from the cycle of the
/// inverse permutation starting at d+1. Throws NotRationalDyckError when the
/// permutation is not a single fixed-point-free cycle or the decoded step
/// string violates the diagonal condition.
DyckPath path_from_perm(const DecoratedPermutation& pi, int d);

std::set<int> weak_excedances(const DecoratedPermutation& pi);

/// m*w(j) >= d*(d+m-j+1) for every column j > d of the profile.
bool geometric_bound_holds(const ColumnProfile& profile);

} // namespace poslab
