#include "poslab/linalg.hpp"

namespace poslab {

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        for (long long v : row) a_.emplace_back(v);
    }
}

IntMat::IntMat(const std::vector<std::vector<int>>& rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.front().size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw std::invalid_argument("ragged matrix");
        }
        for (int v : row) a_.emplace_back(v);
    }
}

IntMat IntMat::submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const {
    IntMat S(static_cast<int>(rowIdx.size()), static_cast<int>(colIdx.size()));
    for (size_t i = 0; i < rowIdx.size(); ++i) {
        for (size_t j = 0; j < colIdx.size(); ++j) {
            S.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = at(rowIdx[i], colIdx[j]);
        }
    }
    return S;
}

Int det_exact(const IntMat& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    int n = M.rows();
    if (n == 0) return 1;
    IntMat a = M;
    Int prev = 1;
    int sign = 1;
    for (int k = 1; k < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = 0;
            for (int i = k + 1; i <= n; ++i) {
                if (a.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == 0) return 0;
            for (int j = 1; j <= n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                // fraction-free update: division by the previous pivot is exact
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n, n) : -a.at(n, n);
}

Int minor_det(const IntMat& M, const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) {
        throw std::invalid_argument("minor needs equally many rows and columns");
    }
    return det_exact(M.submatrix(I, J));
}

Int maximal_minor(const IntMat& M, const std::vector<int>& S) {
    std::vector<int> allRows(M.rows());
    for (int i = 0; i < M.rows(); ++i) allRows[i] = i + 1;
    return det_exact(M.submatrix(allRows, S));
}

} // namespace poslab
