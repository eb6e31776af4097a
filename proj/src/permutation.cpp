#include "poslab/permutation.hpp"

#include <algorithm>

namespace poslab {

DecoratedPermutation::DecoratedPermutation(std::vector<int> images,
                                           std::map<int, Decoration> decorations)
    : images_(std::move(images)), decorations_(std::move(decorations)) {
    int n = static_cast<int>(images_.size());
    if (n < 1) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v]) {
            throw MalformedInputError("images must form a permutation of [n]");
        }
        seen[v] = true;
    }
    for (int i = 1; i <= n; ++i) {
        bool fixed = images_[i - 1] == i;
        bool decorated = decorations_.count(i) > 0;
        if (fixed != decorated) {
            throw MalformedInputError("decorations must be defined exactly on the fixed points");
        }
    }
}

DecoratedPermutation DecoratedPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= n(); ++i) inv[images_[i - 1] - 1] = i;
    return DecoratedPermutation(std::move(inv), decorations_);
}

std::vector<std::vector<int>> DecoratedPermutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= n(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[cur] = true;
            cycle.push_back(cur);
            cur = images_[cur - 1];
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string DecoratedPermutation::cycle_string() const {
    std::string s;
    for (const auto& cycle : cycles()) {
        s += '(';
        for (size_t k = 0; k < cycle.size(); ++k) {
            if (k > 0) s += ' ';
            s += std::to_string(cycle[k]);
        }
        if (cycle.size() == 1) {
            s += decorations_.at(cycle[0]) == Decoration::Clockwise ? ":cw" : ":ccw";
        }
        s += ')';
    }
    return s;
}

DecoratedPermutation perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles,
                                      std::map<int, Decoration> decorations) {
    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = i;
    for (const auto& cycle : cycles) {
        for (size_t k = 0; k < cycle.size(); ++k) {
            images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (images[i - 1] == i && !decorations.count(i)) {
            decorations[i] = Decoration::Counterclockwise;
        }
    }
    return DecoratedPermutation(std::move(images), std::move(decorations));
}

DecoratedPermutation perm_from_necklace(const GrassmannNecklace& I) {
    int n = I.n();
    std::vector<int> images(n, 0);
    std::map<int, Decoration> decorations;
    for (int i = 1; i <= n; ++i) {
        const auto& cur = I.entry(i);
        const auto& nxt = I.entry(i % n + 1);
        bool has_i = std::find(cur.begin(), cur.end(), i) != cur.end();
        std::set<int> curSet(cur.begin(), cur.end());
        std::set<int> nxtSet(nxt.begin(), nxt.end());
        if (!has_i) {
            images[i - 1] = i;
            decorations[i] = Decoration::Clockwise;
            continue;
        }
        if (curSet == nxtSet) {
            images[i - 1] = i;
            decorations[i] = Decoration::Counterclockwise;
            continue;
        }
        curSet.erase(i);
        int j = 0;
        for (int v : nxtSet) {
            if (!curSet.count(v)) j = v;
        }
        images[j - 1] = i;
    }
    return DecoratedPermutation(std::move(images), std::move(decorations));
}

GrassmannNecklace necklace_from_perm(const DecoratedPermutation& pi) {
    int n = pi.n();
    std::vector<std::vector<int>> entries;
    entries.reserve(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> entry;
        for (int j = 1; j <= n; ++j) {
            int img = pi.image(j);
            if (img == j) {
                if (pi.decorations().at(j) == Decoration::Counterclockwise) entry.push_back(j);
            } else if (leq_i(i, j, img, n)) {
                entry.push_back(j);
            }
        }
        entries.push_back(sort_cyclic(i, entry, n));
    }
    int d = entries.empty() ? 0 : static_cast<int>(entries.front().size());
    return GrassmannNecklace(n, d, std::move(entries));
}

DecoratedPermutation perm_inverse_explicit(const ColumnProfile& prof) {
    int d = prof.d, n = prof.n();
    std::set<int> principal(prof.principal.begin(), prof.principal.end());
    std::vector<int> inv(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (i == 1) {
            inv[i - 1] = d + 1;
        } else if (i <= d) {
            int j = 0;
            for (int pcol : prof.principal) {
                if (prof.weight(pcol) == i - 1) j = pcol;
            }
            inv[i - 1] = j != 0 ? j : i - 1;
        } else if (i == n || principal.count(i + 1)) {
            inv[i - 1] = prof.weight(i);
        } else {
            inv[i - 1] = i + 1;
        }
    }
    DecoratedPermutation inverse(std::move(inv));
    return inverse.inverse();
}

DecoratedPermutation southwest_perm(const DyckPath& p) {
    int d = p.north(), m = p.east();
    const std::string& steps = p.steps();
    int len = d + m;
    // N steps labeled 1..d from top (last in the string) to bottom, E steps
    // labeled d+1..d+m from left to right
    std::vector<int> label(len, 0);
    int eseen = 0;
    for (int k = 0; k < len; ++k) {
        if (steps[k] == 'E') label[k] = d + (++eseen);
    }
    // top-to-bottom = reverse string order for N steps
    int next = 1;
    for (int k = len - 1; k >= 0; --k) {
        if (steps[k] == 'N') label[k] = next++;
    }
    std::vector<int> reading;
    reading.reserve(len);
    for (int k = len - 1; k >= 0; --k) reading.push_back(label[k]);
    return perm_from_cycles(len, {reading});
}

DyckPath path_from_perm(const DecoratedPermutation& pi, int d) {
    int n = pi.n();
    if (d < 1 || d >= n) throw NotRationalDyckError("rank must satisfy 1 <= d < n");
    if (!pi.is_fixed_point_free()) {
        throw NotRationalDyckError("permutation has fixed points");
    }
    auto cycles = pi.inverse().cycles();
    if (cycles.size() != 1) {
        throw NotRationalDyckError("inverse permutation is not a single cycle");
    }
    const auto& cycle = cycles.front();
    auto start = std::find(cycle.begin(), cycle.end(), d + 1);
    if (start == cycle.end()) {
        throw NotRationalDyckError("cycle does not contain d+1");
    }
    std::string steps;
    steps.reserve(n);
    size_t offset = static_cast<size_t>(start - cycle.begin());
    for (int k = 0; k < n; ++k) {
        int v = cycle[(offset + k) % n];
        steps.push_back(v > d ? 'E' : 'N');
    }
    try {
        return DyckPath(n - d, d, std::move(steps));
    } catch (const MalformedInputError& e) {
        throw NotRationalDyckError(std::string("decoded step string is invalid: ") + e.what());
    }
}

std::set<int> weak_excedances(const DecoratedPermutation& pi) {
    std::set<int> out;
    for (int j = 1; j <= pi.n(); ++j) {
        int img = pi.image(j);
        if (img == j) {
            if (pi.decorations().at(j) == Decoration::Counterclockwise) out.insert(j);
        } else if (j < img) {
            out.insert(j);
        }
    }
    return out;
}

bool geometric_bound_holds(const ColumnProfile& prof) {
    int d = prof.d, m = prof.m, n = prof.n();
    for (int j = d + 1; j <= n; ++j) {
        if (static_cast<long long>(m) * prof.weight(j) <
            static_cast<long long>(d) * (d + m - j + 1)) {
            return false;
        }
    }
    return true;
}

} // namespace poslab
