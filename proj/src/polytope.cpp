#include "poslab/polytope.hpp"

#include <algorithm>

namespace poslab {

void HPolytope::add_equality(std::vector<Rat> a, Rat b) {
    if (static_cast<int>(a.size()) != n_) {
        throw std::invalid_argument("coefficient vector has wrong length");
    }
    eq_.push_back({std::move(a), std::move(b)});
}

void HPolytope::add_inequality(std::vector<Rat> a, Rat b) {
    if (static_cast<int>(a.size()) != n_) {
        throw std::invalid_argument("coefficient vector has wrong length");
    }
    ineq_.push_back({std::move(a), std::move(b)});
}

bool HPolytope::satisfies(const std::vector<Rat>& x) const {
    auto dot = [&](const std::vector<Rat>& a) {
        Rat s = 0;
        for (int i = 0; i < n_; ++i) s += a[i] * x[i];
        return s;
    };
    for (const auto& c : eq_) {
        if (dot(c.a) != c.b) return false;
    }
    for (const auto& c : ineq_) {
        if (dot(c.a) > c.b) return false;
    }
    return true;
}

namespace {

/// Dense simplex tableau over exact rationals, Bland's rule throughout.
/// Rows: one per constraint (b >= 0 after normalization). Columns: structural
/// variables (x split into x+ - x-), slacks, artificials.
class SimplexTableau {
public:
    SimplexTableau(const HPolytope& H) : n_(H.n()) {
        for (const auto& c : H.equalities()) addRow(c.a, c.b, /*slack=*/false);
        for (const auto& c : H.inequalities()) addRow(c.a, c.b, /*slack=*/true);
        cols_ = 2 * n_ + slackCount_;
        // assemble: each stored row has structural part, slack id, rhs
        int rows = static_cast<int>(rawRows_.size());
        T_.assign(rows, std::vector<Rat>(cols_ + rows + 1, Rat(0)));
        basis_.assign(rows, 0);
        for (int r = 0; r < rows; ++r) {
            const auto& raw = rawRows_[r];
            for (int j = 0; j < 2 * n_; ++j) T_[r][j] = raw.coeff[j];
            if (raw.slack >= 0) T_[r][2 * n_ + raw.slack] = raw.slackSign;
            T_[r][cols_ + r] = 1; // artificial
            basis_[r] = cols_ + r;
            T_[r].back() = raw.rhs;
        }
        artificialStart_ = cols_;
        totalCols_ = cols_ + rows;
    }

    LpResult maximize(const std::vector<Rat>& objective) {
        // phase 1: minimize sum of artificials
        std::vector<Rat> phase1(totalCols_, Rat(0));
        for (int j = artificialStart_; j < totalCols_; ++j) phase1[j] = -1;
        runSimplex(phase1);
        Rat artSum = 0;
        for (size_t r = 0; r < basis_.size(); ++r) {
            if (basis_[r] >= artificialStart_) artSum += T_[r].back();
        }
        if (artSum != 0) return {LpStatus::Infeasible, Rat(0), {}};
        driveOutArtificials();

        // phase 2
        std::vector<Rat> phase2(totalCols_, Rat(0));
        for (int i = 0; i < n_; ++i) {
            phase2[i] = objective[i];
            phase2[n_ + i] = -objective[i];
        }
        bool bounded = runSimplex(phase2, /*forbidArtificials=*/true);
        if (!bounded) return {LpStatus::Unbounded, Rat(0), {}};

        std::vector<Rat> x(n_, Rat(0));
        for (size_t r = 0; r < basis_.size(); ++r) {
            int j = basis_[r];
            if (j < n_) {
                x[j] += T_[r].back();
            } else if (j < 2 * n_) {
                x[j - n_] -= T_[r].back();
            }
        }
        Rat value = 0;
        for (int i = 0; i < n_; ++i) value += objective[i] * x[i];
        return {LpStatus::Optimal, value, std::move(x)};
    }

private:
    struct RawRow {
        std::vector<Rat> coeff; // over split variables
        int slack = -1;
        int slackSign = 1;
        Rat rhs;
    };

    void addRow(const std::vector<Rat>& a, const Rat& b, bool slack) {
        RawRow row;
        row.coeff.assign(2 * n_, Rat(0));
        int sign = b < 0 ? -1 : 1;
        for (int i = 0; i < n_; ++i) {
            row.coeff[i] = sign * a[i];
            row.coeff[n_ + i] = -sign * a[i];
        }
        row.rhs = sign * b;
        if (slack) {
            row.slack = slackCount_++;
            row.slackSign = sign;
        }
        rawRows_.push_back(std::move(row));
    }

    /// Bland's rule; objective given as reduced-cost seed over all columns.
    /// Returns false when unbounded.
    bool runSimplex(const std::vector<Rat>& objective, bool forbidArtificials = false) {
        int rows = static_cast<int>(T_.size());
        while (true) {
            // reduced costs: c_j - c_B . B^{-1} A_j computed from the tableau
            int entering = -1;
            for (int j = 0; j < totalCols_ && entering < 0; ++j) {
                if (forbidArtificials && j >= artificialStart_) break;
                bool inBasis = false;
                for (int r = 0; r < rows; ++r) {
                    if (basis_[r] == j) inBasis = true;
                }
                if (inBasis) continue;
                Rat reduced = objective[j];
                for (int r = 0; r < rows; ++r) reduced -= objective[basis_[r]] * T_[r][j];
                if (reduced > 0) entering = j; // Bland: first improving index
            }
            if (entering < 0) return true;
            int leaving = -1;
            Rat bestRatio = 0;
            for (int r = 0; r < rows; ++r) {
                if (T_[r][entering] <= 0) continue;
                Rat ratio = T_[r].back() / T_[r][entering];
                if (leaving < 0 || ratio < bestRatio ||
                    (ratio == bestRatio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    bestRatio = ratio;
                }
            }
            if (leaving < 0) return false; // unbounded direction
            pivot(leaving, entering);
        }
    }

    void pivot(int r, int j) {
        Rat p = T_[r][j];
        for (auto& v : T_[r]) v /= p;
        for (size_t i = 0; i < T_.size(); ++i) {
            if (static_cast<int>(i) == r || T_[i][j] == 0) continue;
            Rat f = T_[i][j];
            for (size_t k = 0; k < T_[i].size(); ++k) T_[i][k] -= f * T_[r][k];
        }
        basis_[r] = j;
    }

    void driveOutArtificials() {
        int rows = static_cast<int>(T_.size());
        for (int r = 0; r < rows; ++r) {
            if (basis_[r] < artificialStart_) continue;
            int j = 0;
            while (j < artificialStart_ && T_[r][j] == 0) ++j;
            if (j < artificialStart_) {
                pivot(r, j);
            }
            // otherwise the row is identically zero over real columns
            // (redundant constraint); it stays basic at zero and is harmless
        }
    }

    int n_;
    int cols_ = 0;
    int slackCount_ = 0;
    int artificialStart_ = 0;
    int totalCols_ = 0;
    std::vector<RawRow> rawRows_;
    std::vector<std::vector<Rat>> T_;
    std::vector<int> basis_;
};

} // namespace

LpResult lp_max(const HPolytope& H, const std::vector<Rat>& objective) {
    if (static_cast<int>(objective.size()) != H.n()) {
        throw std::invalid_argument("objective has wrong dimension");
    }
    SimplexTableau tableau(H);
    return tableau.maximize(objective);
}

bool polytope_contains(const HPolytope& outer, const HPolytope& inner) {
    if (outer.n() != inner.n()) {
        throw std::invalid_argument("ambient dimensions differ");
    }
    auto maxOf = [&](std::vector<Rat> a) {
        LpResult r = lp_max(inner, a);
        if (r.status == LpStatus::Unbounded) {
            throw UnboundedError("inner system is unbounded");
        }
        if (r.status == LpStatus::Infeasible) {
            throw MalformedInputError("inner system is infeasible");
        }
        return r.value;
    };
    for (const auto& c : outer.inequalities()) {
        if (maxOf(c.a) > c.b) return false;
    }
    for (const auto& c : outer.equalities()) {
        if (maxOf(c.a) > c.b) return false;
        std::vector<Rat> neg(c.a);
        for (auto& v : neg) v = -v;
        if (maxOf(neg) > -c.b) return false;
    }
    return true;
}

std::vector<std::vector<int>> vertices_from_bases(const Positroid& P) {
    std::vector<std::vector<int>> out;
    out.reserve(P.bases().size());
    for (const auto& B : P.bases()) {
        std::vector<int> v(P.n(), 0);
        for (int b : B) v[b - 1] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

/// Cyclic coordinate window [from, to) as a 0/1 coefficient vector; empty
/// when from == to.
std::vector<Rat> window_coeffs(int n, int from, int to) {
    std::vector<Rat> a(n, Rat(0));
    int i = from;
    while (i != to) {
        a[i - 1] = 1;
        i = i % n + 1;
    }
    return a;
}

} // namespace

HPolytope hrep_general(const GrassmannNecklace& I) {
    int n = I.n(), d = I.rank();
    HPolytope H(n);
    H.add_equality(std::vector<Rat>(n, Rat(1)), Rat(d));
    for (int j = 1; j <= n; ++j) {
        std::vector<Rat> a(n, Rat(0));
        a[j - 1] = -1;
        H.add_inequality(std::move(a), Rat(0));
    }
    for (int j = 1; j <= n; ++j) {
        const auto& entry = I.entry(j);
        for (int k = 1; k <= d; ++k) {
            H.add_inequality(window_coeffs(n, j, entry[k - 1]), Rat(k - 1));
        }
    }
    return H;
}

HPolytope hrep_refined(const ColumnProfile& prof) {
    int d = prof.d, n = prof.n();
    const std::vector<int>& p = prof.principal;
    int t = static_cast<int>(p.size());
    HPolytope H(n);
    H.add_equality(std::vector<Rat>(n, Rat(1)), Rat(d));
    for (int i = 1; i <= n; ++i) {
        std::vector<Rat> a(n, Rat(0));
        a[i - 1] = -1;
        H.add_inequality(std::move(a), Rat(0));
    }
    for (int i = 1; i <= d; ++i) {
        std::vector<Rat> a(n, Rat(0));
        a[i - 1] = 1;
        H.add_inequality(std::move(a), Rat(1));
    }
    // consecutive principal blocks; the last block runs to the end
    for (int i = 1; i <= t; ++i) {
        int from = p[i - 1];
        int to = i < t ? p[i] : n + 1;
        std::vector<Rat> a(n, Rat(0));
        for (int j = from; j < to; ++j) a[j - 1] = 1;
        H.add_inequality(std::move(a), Rat(1));
    }
    // windows up to the m(i)-th principal column; omitted when the defining
    // set is empty (the unit bounds already imply the necklace windows there)
    for (int i = 1; i <= d; ++i) {
        int mi = 0;
        for (int r = 1; r <= t && r < i; ++r) {
            if (prof.weight(p[r - 1]) >= i) mi = r;
        }
        if (mi == 0) continue;
        std::vector<Rat> a(n, Rat(0));
        for (int j = i; j < p[mi - 1]; ++j) a[j - 1] = 1;
        H.add_inequality(std::move(a), Rat(d - i + mi));
    }
    // cyclic windows from each later principal column through its weight row
    for (int i = 2; i <= t; ++i) {
        int w = prof.weight(p[i - 1]);
        H.add_inequality(window_coeffs(n, p[i - 1], w + 1), Rat(w));
    }
    return H;
}

std::vector<std::vector<int>> zero_one_points(const HPolytope& H, int d) {
    std::vector<std::vector<int>> out;
    for (const auto& S : subsets_colex(H.n(), d)) {
        std::vector<Rat> x(H.n(), Rat(0));
        std::vector<int> v(H.n(), 0);
        for (int b : S) {
            x[b - 1] = 1;
            v[b - 1] = 1;
        }
        if (H.satisfies(x)) out.push_back(std::move(v));
    }
    return out;
}

bool vertices_adjacent(const std::vector<std::vector<int>>& V, const std::vector<int>& u,
                       const std::vector<int>& v) {
    auto find = [&](const std::vector<int>& x) {
        return std::find(V.begin(), V.end(), x) != V.end();
    };
    if (!find(u) || !find(v)) throw std::invalid_argument("u and v must be vertices");
    if (u == v) throw std::invalid_argument("u and v must differ");
    std::vector<const std::vector<int>*> others;
    for (const auto& w : V) {
        if (w != u && w != v) others.push_back(&w);
    }
    if (others.empty()) return true;
    // feasibility of midpoint = convex combination of the others
    int dim = static_cast<int>(u.size());
    int k = static_cast<int>(others.size());
    HPolytope feas(k);
    for (int c = 0; c < dim; ++c) {
        std::vector<Rat> a(k);
        for (int j = 0; j < k; ++j) a[j] = (*others[j])[c];
        feas.add_equality(std::move(a), Rat(u[c] + v[c], 2));
    }
    feas.add_equality(std::vector<Rat>(k, Rat(1)), Rat(1));
    for (int j = 0; j < k; ++j) {
        std::vector<Rat> a(k, Rat(0));
        a[j] = -1;
        feas.add_inequality(std::move(a), Rat(0));
    }
    LpResult r = lp_max(feas, std::vector<Rat>(k, Rat(0)));
    return r.status == LpStatus::Infeasible;
}

} // namespace poslab
