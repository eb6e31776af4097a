#pragma once

#include "poslab/common.hpp"

#include <initializer_list>
#include <vector>

namespace poslab {

/// Dense integer matrix with exact entries, 1-indexed accessors.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long long>> rows);
    explicit IntMat(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i - 1) * cols_ + (j - 1)]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i - 1) * cols_ + (j - 1)]; }

    /// Submatrix on the given 1-indexed row and column sets, in the given order.
    IntMat submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det_exact(const IntMat& M);

/// Minor on rows I and columns J (1-indexed, |I| = |J|); empty minor is 1.
Int minor_det(const IntMat& M, const std::vector<int>& I, const std::vector<int>& J);

/// Maximal minor of a d x n matrix on the column set S (|S| = d).
Int maximal_minor(const IntMat& M, const std::vector<int>& S);

} // namespace poslab
