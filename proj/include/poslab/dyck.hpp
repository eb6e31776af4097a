#pragma once

#include "poslab/common.hpp"

#include <string>
#include <vector>

namespace poslab {

/// Lattice path from (0,0) to (m,d) over unit steps E=(1,0), N=(0,1) that
/// never goes above the diagonal line y = (d/m)x.
class DyckPath {
public:
    DyckPath(int m, int d, std::string steps);

    /// Parse a step string over {E,N}; m and d are inferred from the letters.
    static DyckPath parse(const std::string& steps);

    int east() const { return m_; }
    int north() const { return d_; }
    int size() const { return m_ + d_; }
    const std::string& steps() const { return steps_; }

    /// h_j = number of N steps strictly before the j-th E step, j = 1..m.
    std::vector<int> north_before_east() const;

    bool operator==(const DyckPath& other) const = default;

private:
    int m_;
    int d_;
    std::string steps_;
};

/// All paths of type (m,d), lexicographic in the step string with E < N.
std::vector<DyckPath> enumerate_paths(int m, int d);

/// binom(d+m, d) / (d+m), exact; requires gcd(m,d) = 1.
Int count_formula(int m, int d);

/// Counts of type (n*a, n*b) paths for n = 1..N, gcd(a,b) = 1, via the
/// exponential generating identity over exact rationals.
std::vector<Int> count_bizley(int a, int b, int N);

/// d x m binary matrix whose zero region is a right-justified Young diagram
/// anchored in the upper-right corner, cut off by the reflected path.
class DyckMatrix {
public:
    DyckMatrix(int d, int m, std::vector<std::vector<int>> rows);

    int d() const { return d_; }
    int m() const { return m_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_[i - 1][j - 1]; } // 1-indexed

    /// Number of ones in column j (ones are bottom-justified), j = 1..m.
    std::vector<int> column_ones() const;

    bool operator==(const DyckMatrix& other) const = default;

private:
    int d_;
    int m_;
    std::vector<std::vector<int>> rows_;
};

/// The d x (d+m) image of a Dyck matrix: identity block followed by the
/// sign-alternating, row-reversed copy of the matrix.
class ExtendedMatrix {
public:
    ExtendedMatrix(int d, int m, std::vector<std::vector<int>> rows);

    int d() const { return d_; }
    int m() const { return m_; }
    int n() const { return d_ + m_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_[i - 1][j - 1]; } // 1-indexed
    std::vector<int> column(int j) const;                      // 1-indexed

    bool operator==(const ExtendedMatrix& other) const = default;

private:
    int d_;
    int m_;
    std::vector<std::vector<int>> rows_;
};

DyckMatrix path_to_matrix(const DyckPath& p);
DyckPath matrix_to_path(const DyckMatrix& D);
ExtendedMatrix phi(const DyckMatrix& D);

/// Column data of an extended matrix: the weight map, the principal indices
/// (columns differing from their left neighbor) and the weight complement.
struct ColumnProfile {
    int d = 0;
    int m = 0;
    std::vector<int> weights;    // weights[j-1] = w(j), j = 1..d+m
    std::vector<int> principal;  // sorted, subset of {d+1..d+m}
    std::vector<int> complement; // sorted, subset of [d]

    int n() const { return d + m; }
    int weight(int j) const { return weights[j - 1]; }
};

ColumnProfile column_profile(const ExtendedMatrix& A);

} // namespace poslab
