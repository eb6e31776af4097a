#include "poslab/necklace.hpp"

#include <algorithm>
#include <set>

namespace poslab {

int cyclic_pos(int i, int a, int n) {
    return ((a - i) % n + n) % n;
}

bool leq_i(int i, int a, int b, int n) {
    if (i < 1 || i > n || a < 1 || a > n || b < 1 || b > n) {
        throw std::invalid_argument("leq_i arguments must lie in [n]");
    }
    return cyclic_pos(i, a, n) <= cyclic_pos(i, b, n);
}

std::vector<int> sort_cyclic(int i, std::vector<int> S, int n) {
    std::sort(S.begin(), S.end(),
              [&](int a, int b) { return cyclic_pos(i, a, n) < cyclic_pos(i, b, n); });
    return S;
}

bool gale_leq(int i, const std::vector<int>& S, const std::vector<int>& T, int n) {
    if (S.size() != T.size()) {
        throw std::invalid_argument("gale_leq needs subsets of equal size");
    }
    std::vector<int> s = sort_cyclic(i, S, n);
    std::vector<int> t = sort_cyclic(i, T, n);
    for (size_t k = 0; k < s.size(); ++k) {
        if (cyclic_pos(i, s[k], n) > cyclic_pos(i, t[k], n)) return false;
    }
    return true;
}

GrassmannNecklace::GrassmannNecklace(int n, int d, std::vector<std::vector<int>> entries)
    : n_(n), d_(d), entries_(std::move(entries)) {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("bad necklace type");
    if (static_cast<int>(entries_.size()) != n) {
        throw MalformedInputError("a necklace needs one entry per ground-set element");
    }
    for (int i = 1; i <= n; ++i) {
        const auto& I = entries_[i - 1];
        if (static_cast<int>(I.size()) != d) {
            throw MalformedInputError("necklace entries must have size d");
        }
        std::set<int> seen;
        for (size_t k = 0; k < I.size(); ++k) {
            if (I[k] < 1 || I[k] > n || !seen.insert(I[k]).second) {
                throw MalformedInputError("necklace entries must be subsets of [n]");
            }
            if (k > 0 && !(cyclic_pos(i, I[k - 1], n) < cyclic_pos(i, I[k], n))) {
                throw MalformedInputError("entry " + std::to_string(i) +
                                          " is not listed increasingly in its cyclic order");
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        const auto& cur = entries_[i - 1];
        const auto& nxt = entries_[i % n];
        std::set<int> curSet(cur.begin(), cur.end());
        std::set<int> nxtSet(nxt.begin(), nxt.end());
        if (curSet.count(i)) {
            std::set<int> removed = curSet;
            removed.erase(i);
            std::vector<int> extra;
            std::set_difference(nxtSet.begin(), nxtSet.end(), removed.begin(), removed.end(),
                                std::back_inserter(extra));
            if (extra.size() != 1 || !std::includes(nxtSet.begin(), nxtSet.end(),
                                                    removed.begin(), removed.end())) {
                throw MalformedInputError("necklace exchange condition fails at " +
                                          std::to_string(i));
            }
        } else if (curSet != nxtSet) {
            throw MalformedInputError("necklace entries must agree at " + std::to_string(i) +
                                      " when i is absent");
        }
    }
}

GrassmannNecklace necklace_from_bases(const Positroid& P) {
    int n = P.n(), d = P.rank();
    std::vector<std::vector<int>> entries;
    entries.reserve(n);
    for (int i = 1; i <= n; ++i) {
        // greedy lexicographic minimum in the rotated order; valid because the
        // collection satisfies the exchange axiom
        std::vector<int> prefix;
        for (int pos = 0; pos < n && static_cast<int>(prefix.size()) < d; ++pos) {
            int candidate = (i - 1 + pos) % n + 1;
            std::vector<int> attempt = prefix;
            attempt.push_back(candidate);
            std::vector<int> sortedAttempt = attempt;
            std::sort(sortedAttempt.begin(), sortedAttempt.end());
            bool extendable = false;
            for (const auto& B : P.bases()) {
                if (std::includes(B.begin(), B.end(), sortedAttempt.begin(),
                                  sortedAttempt.end())) {
                    extendable = true;
                    break;
                }
            }
            if (extendable) prefix = std::move(attempt);
        }
        if (static_cast<int>(prefix.size()) != d) {
            throw MalformedInputError("basis collection has no completion at rotation " +
                                      std::to_string(i));
        }
        entries.push_back(sort_cyclic(i, prefix, n));
    }
    return GrassmannNecklace(n, d, std::move(entries));
}

Positroid bases_from_necklace(const GrassmannNecklace& I) {
    int n = I.n(), d = I.rank();
    std::vector<std::vector<int>> bases;
    for (const auto& B : subsets_colex(n, d)) {
        bool ok = true;
        for (int j = 1; j <= n && ok; ++j) {
            ok = gale_leq(j, I.entry(j), B, n);
        }
        if (ok) bases.push_back(B);
    }
    return Positroid(n, d, std::move(bases));
}

GrassmannNecklace necklace_explicit(const ColumnProfile& prof) {
    int d = prof.d, m = prof.m, n = prof.n();
    const std::vector<int>& p = prof.principal;
    int t = static_cast<int>(p.size());

    // completion: smallest elements of [d] whose unit vectors are independent
    // of the columns already picked, i.e. not among their weights
    auto complete = [&](std::vector<int>& entry, const std::set<int>& usedWeights, int count) {
        for (int q = 1; q <= d && count > 0; ++q) {
            if (!usedWeights.count(q)) {
                entry.push_back(q);
                --count;
            }
        }
        if (count != 0) {
            throw MalformedInputError("profile admits no completion for a necklace entry");
        }
    };

    std::vector<std::vector<int>> entries(n);
    for (int i = 1; i <= d; ++i) entries[0].push_back(i);

    for (int j = 2; j <= d; ++j) {
        std::vector<int> entry;
        std::set<int> used;
        for (int v = j; v <= d + 1; ++v) {
            entry.push_back(v);
            used.insert(v <= d ? v : prof.weight(v));
        }
        int s = 0;
        for (int k = 1; k <= t; ++k) {
            if (prof.weight(p[k - 1]) >= j - 1) s = k;
        }
        int need = j - 2;
        for (int k = s + 1; k <= t && need > 0; ++k) {
            entry.push_back(p[k - 1]);
            used.insert(prof.weight(p[k - 1]));
            --need;
        }
        complete(entry, used, need);
        entries[j - 1] = std::move(entry);
    }

    for (int j = d + 1; j <= n; ++j) {
        std::vector<int> entry{j};
        std::set<int> used{prof.weight(j)};
        int s = 0;
        for (int k = 1; k <= t; ++k) {
            if (p[k - 1] <= j) s = k;
        }
        for (int k = s + 1; k <= t; ++k) {
            entry.push_back(p[k - 1]);
            used.insert(prof.weight(p[k - 1]));
        }
        complete(entry, used, d - static_cast<int>(entry.size()));
        entries[j - 1] = std::move(entry);
    }

    return GrassmannNecklace(n, d, std::move(entries));
}

} // namespace poslab
