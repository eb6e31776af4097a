#pragma once

#include "poslab/dyck.hpp"
#include "poslab/permutation.hpp"

#include <string>
#include <vector>

namespace poslab {

/// Zero/plus filling of a Young diagram inside a d x m rectangle. Rows are
/// stored as strings over {'0','+'}; row r has length shape[r-1].
class LeDiagram {
public:
    LeDiagram(int d, int m, std::vector<int> shape, std::vector<std::string> fill);

    int d() const { return d_; }
    int m() const { return m_; }
    const std::vector<int>& shape() const { return shape_; }
    const std::vector<std::string>& fill() const { return fill_; }

    int row_count() const { return static_cast<int>(shape_.size()); }
    int row_length(int r) const { return r <= row_count() ? shape_[r - 1] : 0; }
    bool has_cell(int r, int c) const { return r >= 1 && r <= row_count() && c >= 1 && c <= shape_[r - 1]; }
    bool plus_at(int r, int c) const { return fill_[r - 1][c - 1] == '+'; }

    bool operator==(const LeDiagram& other) const = default;

private:
    int d_;
    int m_;
    std::vector<int> shape_;
    std::vector<std::string> fill_;
};

/// True iff no zero cell has a plus above it in its column and a plus to its
/// left in its row.
bool validate_le(const LeDiagram& L);

/// The full-rectangle diagram of a path: one plus per column except the last
/// column which carries d pluses, placed so the pipe trips reproduce the
/// southwest reading of the path.
LeDiagram le_from_path(const DyckPath& p);

/// Shape is the full rectangle, the per-column plus counts are right, and the
/// bottom-most plus rows decode to a valid path.
bool is_rational_dyck_le(const LeDiagram& L);

/// Trace the pipe dream (plus = elbow, zero = cross) from the north/west
/// border to the boundary path.
DecoratedPermutation perm_from_le(const LeDiagram& L);

/// Number of plus cells.
int cell_dimension(const LeDiagram& L);

/// Boundary-path step labels: vrow[r-1] = label of the vertical step in row r,
/// hcol[c-1] = label of the horizontal step in column c.
struct BoundaryLabels {
    std::vector<int> vrow;
    std::vector<int> hcol;
};
BoundaryLabels boundary_labels(const LeDiagram& L);

} // namespace poslab
