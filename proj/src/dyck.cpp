#include "poslab/dyck.hpp"

#include <algorithm>
#include <numeric>

namespace poslab {

namespace {

void check_type(int m, int d) {
    if (m < 1 || d < 1) {
        throw std::invalid_argument("path type requires m >= 1 and d >= 1");
    }
}

} // namespace

DyckPath::DyckPath(int m, int d, std::string steps) : m_(m), d_(d), steps_(std::move(steps)) {
    check_type(m, d);
    if (static_cast<int>(steps_.size()) != m + d) {
        throw MalformedInputError("step string has wrong length");
    }
    int x = 0, y = 0;
    for (char c : steps_) {
        if (c == 'E') {
            ++x;
        } else if (c == 'N') {
            ++y;
        } else {
            throw MalformedInputError("step string may contain only E and N");
        }
        // weakly below the diagonal: y <= (d/m) x
        if (static_cast<long long>(y) * m > static_cast<long long>(x) * d) {
            throw MalformedInputError("path rises above the diagonal at step " +
                                      std::to_string(x + y));
        }
    }
    if (x != m || y != d) {
        throw MalformedInputError("step counts do not match the declared type");
    }
}

DyckPath DyckPath::parse(const std::string& steps) {
    int m = static_cast<int>(std::count(steps.begin(), steps.end(), 'E'));
    int d = static_cast<int>(std::count(steps.begin(), steps.end(), 'N'));
    return DyckPath(m, d, steps);
}

std::vector<int> DyckPath::north_before_east() const {
    std::vector<int> h;
    h.reserve(m_);
    int norths = 0;
    for (char c : steps_) {
        if (c == 'N') {
            ++norths;
        } else {
            h.push_back(norths);
        }
    }
    return h;
}

std::vector<DyckPath> enumerate_paths(int m, int d) {
    check_type(m, d);
    std::vector<DyckPath> out;
    std::string cur;
    cur.reserve(m + d);
    // E before N keeps the output lexicographic with E < N
    auto rec = [&](auto&& self, int x, int y) -> void {
        if (x == m && y == d) {
            out.emplace_back(m, d, cur);
            return;
        }
        if (x < m) {
            cur.push_back('E');
            self(self, x + 1, y);
            cur.pop_back();
        }
        if (y < d && static_cast<long long>(y + 1) * m <= static_cast<long long>(x) * d) {
            cur.push_back('N');
            self(self, x, y + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

Int count_formula(int m, int d) {
    check_type(m, d);
    if (std::gcd(m, d) != 1) {
        throw NotCoprimeError("count_formula requires gcd(m,d) = 1");
    }
    Int num = binomial(d + m, d);
    if (num % (d + m) != 0) {
        throw std::logic_error("binomial not divisible by d+m despite coprimality");
    }
    return num / (d + m);
}

std::vector<Int> count_bizley(int a, int b, int N) {
    check_type(a, b);
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument("count_bizley requires gcd(a,b) = 1");
    }
    if (N < 1) {
        throw std::invalid_argument("count_bizley requires N >= 1");
    }
    // S(x) = sum_{j>=1} binom(j(a+b), jb) / ((a+b) j) x^j, truncated at N
    std::vector<Rat> S(N + 1, Rat(0));
    for (int j = 1; j <= N; ++j) {
        S[j] = Rat(binomial(j * (a + b), j * b), Int(a + b) * j);
    }
    // exp(S) by power accumulation: E = sum_k S^k / k!
    std::vector<Rat> expS(N + 1, Rat(0));
    expS[0] = 1;
    std::vector<Rat> power(N + 1, Rat(0));
    power[0] = 1; // S^0
    Int factorial = 1;
    for (int k = 1; k <= N; ++k) {
        std::vector<Rat> next(N + 1, Rat(0));
        for (int i = 0; i + 1 <= N; ++i) {
            if (power[i] == 0) continue;
            for (int j = 1; i + j <= N; ++j) {
                next[i + j] += power[i] * S[j];
            }
        }
        power = std::move(next);
        factorial *= k;
        for (int i = 0; i <= N; ++i) {
            expS[i] += power[i] / Rat(factorial);
        }
    }
    std::vector<Int> coeffs;
    coeffs.reserve(N);
    for (int n = 1; n <= N; ++n) {
        if (denominator(expS[n]) != 1) {
            throw std::logic_error("series coefficient is not an integer");
        }
        coeffs.push_back(numerator(expS[n]));
    }
    return coeffs;
}

DyckMatrix::DyckMatrix(int d, int m, std::vector<std::vector<int>> rows)
    : d_(d), m_(m), rows_(std::move(rows)) {
    check_type(m, d);
    if (static_cast<int>(rows_.size()) != d) {
        throw MalformedInputError("wrong number of rows");
    }
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != m) {
            throw MalformedInputError("wrong number of columns");
        }
        for (int v : row) {
            if (v != 0 && v != 1) throw MalformedInputError("entries must be 0 or 1");
        }
    }
    // ones bottom-justified per column, column counts weakly decreasing with
    // c_1 = d, and every count on or below the diagonal cutoff
    int prev = d;
    for (int j = 1; j <= m; ++j) {
        int c = 0;
        for (int i = 1; i <= d; ++i) c += rows_[i - 1][j - 1];
        for (int i = 1; i <= d; ++i) {
            int expect = i > d - c ? 1 : 0;
            if (rows_[i - 1][j - 1] != expect) {
                throw MalformedInputError("ones must be bottom-justified in column " +
                                          std::to_string(j));
            }
        }
        if (j == 1 && c != d) {
            throw MalformedInputError("first column must be all ones");
        }
        if (c > prev) {
            throw MalformedInputError("column one-counts must be weakly decreasing");
        }
        if (static_cast<long long>(m) * c < static_cast<long long>(d) * (m - j + 1)) {
            throw MalformedInputError("zero region crosses the diagonal in column " +
                                      std::to_string(j));
        }
        prev = c;
    }
}

std::vector<int> DyckMatrix::column_ones() const {
    std::vector<int> c(m_, 0);
    for (int j = 0; j < m_; ++j) {
        for (int i = 0; i < d_; ++i) c[j] += rows_[i][j];
    }
    return c;
}

ExtendedMatrix::ExtendedMatrix(int d, int m, std::vector<std::vector<int>> rows)
    : d_(d), m_(m), rows_(std::move(rows)) {
    check_type(m, d);
    if (static_cast<int>(rows_.size()) != d) {
        throw MalformedInputError("wrong number of rows");
    }
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != d + m) {
            throw MalformedInputError("wrong number of columns");
        }
    }
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            if (at(i, j) != (i == j ? 1 : 0)) {
                throw MalformedInputError("columns 1..d must form the identity");
            }
        }
    }
    // column d+j: nonzeros contiguous in rows 1..w with alternating signs,
    // positive in row w
    for (int j = 1; j <= m; ++j) {
        int w = 0;
        for (int i = 1; i <= d; ++i) {
            if (at(i, d + j) != 0) w = i;
        }
        if (w == 0) throw MalformedInputError("zero column in extended matrix");
        for (int i = 1; i <= d; ++i) {
            int v = at(i, d + j);
            int expect = i <= w ? ((w - i) % 2 == 0 ? 1 : -1) : 0;
            if (v != expect) {
                throw MalformedInputError("column " + std::to_string(d + j) +
                                          " is not a signed staircase column");
            }
        }
    }
}

std::vector<int> ExtendedMatrix::column(int j) const {
    std::vector<int> col(d_);
    for (int i = 1; i <= d_; ++i) col[i - 1] = at(i, j);
    return col;
}

DyckMatrix path_to_matrix(const DyckPath& p) {
    int d = p.north(), m = p.east();
    std::vector<int> h = p.north_before_east();
    std::vector<std::vector<int>> rows(d, std::vector<int>(m, 0));
    for (int j = 1; j <= m; ++j) {
        int c = d - h[j - 1];
        for (int i = d - c + 1; i <= d; ++i) rows[i - 1][j - 1] = 1;
    }
    return DyckMatrix(d, m, std::move(rows));
}

DyckPath matrix_to_path(const DyckMatrix& D) {
    int d = D.d(), m = D.m();
    std::vector<int> c = D.column_ones();
    std::string steps;
    steps.reserve(m + d);
    int prev_h = 0;
    for (int j = 1; j <= m; ++j) {
        int h = d - c[j - 1];
        for (int k = prev_h; k < h; ++k) steps.push_back('N');
        steps.push_back('E');
        prev_h = h;
    }
    for (int k = prev_h; k < d; ++k) steps.push_back('N');
    return DyckPath(m, d, std::move(steps));
}

ExtendedMatrix phi(const DyckMatrix& D) {
    int d = D.d(), m = D.m();
    std::vector<std::vector<int>> rows(d, std::vector<int>(d + m, 0));
    for (int i = 1; i <= d; ++i) {
        rows[i - 1][i - 1] = 1;
        int sign = (d - i) % 2 == 0 ? 1 : -1;
        for (int j = 1; j <= m; ++j) {
            rows[i - 1][d + j - 1] = sign * D.at(d - i + 1, j);
        }
    }
    return ExtendedMatrix(d, m, std::move(rows));
}

ColumnProfile column_profile(const ExtendedMatrix& A) {
    ColumnProfile prof;
    prof.d = A.d();
    prof.m = A.m();
    int d = A.d(), n = A.n();
    prof.weights.resize(n);
    for (int j = 1; j <= n; ++j) {
        int w = 0;
        for (int i = 1; i <= d; ++i) {
            if (A.at(i, j) != 0) w = i;
        }
        if (w == 0) throw MalformedInputError("zero column");
        prof.weights[j - 1] = w;
    }
    for (int j = d + 1; j <= n; ++j) {
        if (A.column(j) != A.column(j - 1)) prof.principal.push_back(j);
    }
    std::vector<bool> hit(d + 1, false);
    for (int j = d + 1; j <= n; ++j) hit[prof.weights[j - 1]] = true;
    for (int q = 1; q <= d; ++q) {
        if (!hit[q]) prof.complement.push_back(q);
    }
    return prof;
}

} // namespace poslab
