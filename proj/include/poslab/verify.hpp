#pragma once

#include <set>
#include <string>
#include <vector>

namespace poslab {

struct VerifyOptions {
    int lp_max_n = 8;          // cross-certify the two H-systems only up to this d+m
    int adjacency_max_n = 7;   // edge scan only up to this d+m
    std::set<std::string> skip; // check names to skip, e.g. "polytope-lp"
};

struct VerifyReport {
    int m = 0;
    int d = 0;
    int paths_checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
};

/// Run every cross-representation identity on every path of type (m,d).
VerifyReport verify_type(int m, int d, const VerifyOptions& options = {});

} // namespace poslab
