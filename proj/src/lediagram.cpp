#include "poslab/lediagram.hpp"

#include <algorithm>

namespace poslab {

LeDiagram::LeDiagram(int d, int m, std::vector<int> shape, std::vector<std::string> fill)
    : d_(d), m_(m), shape_(std::move(shape)), fill_(std::move(fill)) {
    if (d < 1 || m < 1) throw std::invalid_argument("rectangle must be at least 1 x 1");
    while (!shape_.empty() && shape_.back() == 0) {
        shape_.pop_back();
        if (fill_.size() > shape_.size()) fill_.pop_back();
    }
    if (static_cast<int>(shape_.size()) > d) {
        throw MalformedInputError("shape has more than d parts");
    }
    for (size_t r = 0; r + 1 < shape_.size(); ++r) {
        if (shape_[r] < shape_[r + 1]) throw MalformedInputError("shape is not a partition");
    }
    if (!shape_.empty() && shape_.front() > m) {
        throw MalformedInputError("shape does not fit in the rectangle");
    }
    if (fill_.size() != shape_.size()) {
        throw MalformedInputError("fill does not cover the shape");
    }
    for (size_t r = 0; r < shape_.size(); ++r) {
        if (static_cast<int>(fill_[r].size()) != shape_[r]) {
            throw MalformedInputError("fill row " + std::to_string(r + 1) +
                                      " does not match the shape");
        }
        for (char c : fill_[r]) {
            if (c != '0' && c != '+') {
                throw MalformedInputError("fill entries must be '0' or '+'");
            }
        }
    }
}

bool validate_le(const LeDiagram& L) {
    for (int r = 1; r <= L.row_count(); ++r) {
        for (int c = 1; c <= L.row_length(r); ++c) {
            if (L.plus_at(r, c)) continue;
            bool plusAbove = false;
            for (int i = 1; i < r; ++i) {
                if (L.has_cell(i, c) && L.plus_at(i, c)) plusAbove = true;
            }
            bool plusLeft = false;
            for (int j = 1; j < c; ++j) {
                if (L.plus_at(r, j)) plusLeft = true;
            }
            if (plusAbove && plusLeft) return false;
        }
    }
    return true;
}

BoundaryLabels boundary_labels(const LeDiagram& L) {
    BoundaryLabels out;
    out.vrow.assign(L.d(), 0);
    out.hcol.assign(L.m(), 0);
    int label = 1;
    int x = L.m();
    for (int r = 1; r <= L.d(); ++r) {
        int rowLen = L.row_length(r);
        while (x > rowLen) out.hcol[--x] = label++;
        out.vrow[r - 1] = label++;
    }
    while (x > 0) out.hcol[--x] = label++;
    return out;
}

LeDiagram le_from_path(const DyckPath& p) {
    int d = p.north(), m = p.east();
    std::vector<int> h = p.north_before_east();
    std::vector<std::string> fill(d, std::string(m, '0'));
    // column k < m: single plus in the row read off the reflected path
    for (int k = 1; k < m; ++k) {
        int row = d - h[m - k]; // h index m-k+1, 1-based
        fill[row - 1][k - 1] = '+';
    }
    for (int r = 1; r <= d; ++r) fill[r - 1][m - 1] = '+';
    std::vector<int> shape(d, m);
    return LeDiagram(d, m, std::move(shape), std::move(fill));
}

int cell_dimension(const LeDiagram& L) {
    int count = 0;
    for (const auto& row : L.fill()) {
        count += static_cast<int>(std::count(row.begin(), row.end(), '+'));
    }
    return count;
}

bool is_rational_dyck_le(const LeDiagram& L) {
    int d = L.d(), m = L.m();
    if (L.row_count() != d) return false;
    for (int r = 1; r <= d; ++r) {
        if (L.row_length(r) != m) return false;
    }
    std::vector<int> bottom(m, 0), count(m, 0);
    for (int c = 1; c <= m; ++c) {
        for (int r = 1; r <= d; ++r) {
            if (L.plus_at(r, c)) {
                ++count[c - 1];
                bottom[c - 1] = r;
            }
        }
    }
    for (int c = 1; c < m; ++c) {
        if (count[c - 1] != 1) return false;
    }
    if (count[m - 1] != d) return false;
    // decode the reflected-path rows back into a step string and validate
    std::string steps;
    int prev_h = 0;
    for (int j = 1; j <= m; ++j) {
        int hj = d - bottom[m - j]; // column m-j+1
        if (hj < prev_h) return false;
        for (int k = prev_h; k < hj; ++k) steps.push_back('N');
        steps.push_back('E');
        prev_h = hj;
    }
    for (int k = prev_h; k < d; ++k) steps.push_back('N');
    try {
        DyckPath probe(m, d, std::move(steps));
    } catch (const MalformedInputError&) {
        return false;
    }
    return true;
}

DecoratedPermutation perm_from_le(const LeDiagram& L) {
    int d = L.d(), m = L.m(), n = d + m;
    BoundaryLabels labels = boundary_labels(L);
    std::vector<int> images(n, 0);
    std::map<int, Decoration> decorations;

    // trace one pipe from an entry edge; crosses keep the heading, elbows
    // toggle it (north<->east, west<->south)
    auto trace = [&](int r, int c, bool headingSouth) -> int {
        while (true) {
            if (L.plus_at(r, c)) headingSouth = !headingSouth;
            if (headingSouth) {
                if (!L.has_cell(r + 1, c)) return labels.hcol[c - 1];
                ++r;
            } else {
                if (!L.has_cell(r, c + 1)) return labels.vrow[r - 1];
                ++c;
            }
        }
    };

    for (int r = 1; r <= d; ++r) {
        int label = labels.vrow[r - 1];
        images[label - 1] = L.row_length(r) >= 1 ? trace(r, 1, false) : label;
    }
    for (int c = 1; c <= m; ++c) {
        int label = labels.hcol[c - 1];
        images[label - 1] = L.has_cell(1, c) ? trace(1, c, true) : label;
    }

    for (int label = 1; label <= n; ++label) {
        if (images[label - 1] == 0) {
            throw std::logic_error("pipe tracing missed a border label");
        }
        if (images[label - 1] == label) {
            bool vertical =
                std::find(labels.vrow.begin(), labels.vrow.end(), label) != labels.vrow.end();
            decorations[label] =
                vertical ? Decoration::Counterclockwise : Decoration::Clockwise;
        }
    }
    return DecoratedPermutation(std::move(images), std::move(decorations));
}

} // namespace poslab
