#include "poslab/common.hpp"

namespace poslab {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is binom(n-k+i, i) after each step
    }
    return r;
}

std::vector<std::vector<int>> subsets_colex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    while (true) {
        out.push_back(s);
        // colex successor: bump the smallest position that can move without
        // disturbing larger elements
        int i = 0;
        while (i + 1 < k && s[i] + 1 == s[i + 1]) ++i;
        if (i == k - 1 && s[i] == n) break;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j + 1;
    }
    return out;
}

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

} // namespace poslab
