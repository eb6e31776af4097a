#include "poslab/positroid.hpp"

#include <algorithm>

namespace poslab {

Positroid::Positroid(int n, int d, std::vector<std::vector<int>> bases)
    : n_(n), d_(d), bases_(std::move(bases)) {
    if (n < 1 || d < 0 || d > n) throw std::invalid_argument("bad ground set or rank");
    if (bases_.empty()) throw MalformedInputError("a matroid needs at least one basis");
    for (auto& B : bases_) {
        if (static_cast<int>(B.size()) != d_ || !std::is_sorted(B.begin(), B.end()) ||
            std::adjacent_find(B.begin(), B.end()) != B.end() || B.front() < 1 ||
            B.back() > n_) {
            throw MalformedInputError("each basis must be a sorted d-subset of [n]");
        }
    }
    std::sort(bases_.begin(), bases_.end(), colex_less);
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    index_.insert(bases_.begin(), bases_.end());
    if (!basis_exchange_holds(n_, d_, bases_)) {
        throw MalformedInputError("basis collection violates the exchange axiom");
    }
}

bool Positroid::contains(const std::vector<int>& basis) const {
    return index_.count(basis) > 0;
}

bool basis_exchange_holds(int n, int d, const std::vector<std::vector<int>>& bases) {
    (void)n;
    (void)d;
    std::set<std::vector<int>> idx(bases.begin(), bases.end());
    for (const auto& B : bases) {
        for (const auto& Bp : bases) {
            for (int b : B) {
                if (std::binary_search(Bp.begin(), Bp.end(), b)) continue;
                bool found = false;
                for (int bp : Bp) {
                    if (std::binary_search(B.begin(), B.end(), bp)) continue;
                    std::vector<int> swapped;
                    swapped.reserve(B.size());
                    for (int x : B) {
                        if (x != b) swapped.push_back(x);
                    }
                    swapped.insert(std::lower_bound(swapped.begin(), swapped.end(), bp), bp);
                    if (idx.count(swapped)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

Positroid bases_from_matrix(const IntMat& A) {
    int d = A.rows(), n = A.cols();
    if (d < 1 || n < d) throw std::invalid_argument("matrix must be d x n with d <= n");
    std::vector<std::vector<int>> bases;
    for (const auto& S : subsets_colex(n, d)) {
        if (maximal_minor(A, S) != 0) bases.push_back(S);
    }
    if (bases.empty()) throw RankError("matrix does not have full row rank");
    return Positroid(n, d, std::move(bases));
}

bool is_connected(const Positroid& P) {
    int n = P.n();
    std::vector<int> parent(n + 1);
    for (int i = 0; i <= n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    for (const auto& B : P.bases()) {
        for (int b : B) {
            for (int bp = 1; bp <= n; ++bp) {
                if (std::binary_search(B.begin(), B.end(), bp)) continue;
                std::vector<int> swapped;
                swapped.reserve(B.size());
                for (int x : B) {
                    if (x != b) swapped.push_back(x);
                }
                swapped.insert(std::lower_bound(swapped.begin(), swapped.end(), bp), bp);
                if (P.contains(swapped)) unite(b, bp);
            }
        }
    }
    int root = find(1);
    for (int i = 2; i <= n; ++i) {
        if (find(i) != root) return false;
    }
    return true;
}

namespace {

/// phi applied entrywise to an arbitrary d x m integer matrix.
IntMat phi_star(const IntMat& M) {
    int d = M.rows(), m = M.cols();
    IntMat B(d, d + m);
    for (int i = 1; i <= d; ++i) {
        B.at(i, i) = 1;
        int sign = (d - i) % 2 == 0 ? 1 : -1;
        for (int j = 1; j <= m; ++j) {
            B.at(i, d + j) = sign * M.at(d - i + 1, j);
        }
    }
    return B;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i) {
            if (mask & (1 << (i - 1))) s.push_back(i);
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

bool minor_correspondence_holds(const IntMat& M) {
    int d = M.rows(), m = M.cols();
    IntMat B = phi_star(M);
    for (const auto& I : all_subsets(d)) {
        for (const auto& J : all_subsets(m)) {
            if (I.size() != J.size()) continue;
            Int lhs = minor_det(M, I, J);
            std::vector<int> cols;
            for (int i = d; i >= 1; --i) {
                if (!std::binary_search(I.begin(), I.end(), i)) cols.push_back(d + 1 - i);
            }
            std::sort(cols.begin(), cols.end());
            for (int j : J) cols.push_back(d + j);
            Int rhs = maximal_minor(B, cols);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool young_binary_tnn_holds(const IntMat& M) {
    int n = M.rows();
    if (n != M.cols()) throw std::invalid_argument("input must be square");
    // binary with right-justified zeros whose row counts weakly decrease downward
    int prevZeros = n;
    for (int i = 1; i <= n; ++i) {
        int zeros = 0;
        for (int j = n; j >= 1; --j) {
            const Int& v = M.at(i, j);
            if (v != 0 && v != 1) throw std::invalid_argument("input must be binary");
            if (v == 0 && zeros == n - j) ++zeros;
        }
        for (int j = 1; j <= n - zeros; ++j) {
            if (M.at(i, j) == 0) {
                throw std::invalid_argument("zeros must be right-justified in each row");
            }
        }
        if (zeros > prevZeros) {
            throw std::invalid_argument("zero region must be anchored in the upper-right corner");
        }
        prevZeros = zeros;
    }
    for (const auto& I : all_subsets(n)) {
        for (const auto& J : all_subsets(n)) {
            if (I.size() != J.size()) continue;
            if (minor_det(M, I, J) < 0) return false;
        }
    }
    return true;
}

} // namespace poslab
