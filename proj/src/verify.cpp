#include "poslab/verify.hpp"

#include "poslab/dyck.hpp"
#include "poslab/lediagram.hpp"
#include "poslab/necklace.hpp"
#include "poslab/permutation.hpp"
#include "poslab/plabic.hpp"
#include "poslab/polytope.hpp"
#include "poslab/positroid.hpp"

#include <algorithm>

namespace poslab {

VerifyReport verify_type(int m, int d, const VerifyOptions& options) {
    VerifyReport report;
    report.m = m;
    report.d = d;
    auto skipped = [&](const std::string& name) { return options.skip.count(name) > 0; };
    auto fail = [&](const DyckPath& p, const std::string& what) {
        report.failures.push_back("path " + p.steps() + ": " + what);
    };

    report.notes.push_back(
        "necklace completion rule: entries are completed with the smallest elements of [d] "
        "not among the weights of the already-selected columns; the literal complement-set "
        "rule fails when that set is too small (e.g. the last entry at type (3,2)).");
    report.notes.push_back(
        "refined polytope windows: the window inequality for a row i with an empty defining "
        "set (always i = 1) is omitted; the corresponding necklace windows are sums of unit "
        "bounds, and the LP equality certificate checks that nothing is lost.");

    for (const DyckPath& p : enumerate_paths(m, d)) {
        ++report.paths_checked;
        int n = d + m;
        DyckMatrix D = path_to_matrix(p);
        if (matrix_to_path(D) != p) fail(p, "matrix round trip broke");
        ExtendedMatrix A = phi(D);
        ColumnProfile prof = column_profile(A);
        IntMat M(A.rows());

        if (!skipped("minors")) {
            for (const auto& S : subsets_colex(n, d)) {
                if (maximal_minor(M, S) < 0) {
                    fail(p, "negative maximal minor");
                    break;
                }
            }
        }

        Positroid P = bases_from_matrix(M);
        GrassmannNecklace necklace = necklace_from_bases(P);

        if (!skipped("necklace")) {
            if (necklace_explicit(prof) != necklace) {
                fail(p, "closed-form necklace disagrees with the lex-min necklace");
            }
            if (bases_from_necklace(necklace) != P) {
                fail(p, "necklace does not reconstruct the bases");
            }
        }

        DecoratedPermutation sw = southwest_perm(p);
        if (!skipped("permutation")) {
            if (perm_from_necklace(necklace) != sw) {
                fail(p, "necklace recipe disagrees with the southwest reading");
            }
            if (perm_inverse_explicit(prof) != sw) {
                fail(p, "closed-form inverse disagrees with the southwest reading");
            }
            if (necklace_from_perm(sw) != necklace) {
                fail(p, "permutation does not reconstruct the necklace");
            }
            auto cycles = sw.cycles();
            if (cycles.size() != 1 || static_cast<int>(cycles.front().size()) != n) {
                fail(p, "permutation is not a single full cycle");
            }
            std::set<int> expected;
            for (int i = 1; i <= d; ++i) expected.insert(i);
            if (weak_excedances(sw) != expected) {
                fail(p, "weak excedances are not exactly [d]");
            }
            if (path_from_perm(sw, d) != p) fail(p, "path round trip broke");
        }

        if (!skipped("geometry") && !geometric_bound_holds(prof)) {
            fail(p, "weight bound fails");
        }

        if (!skipped("le")) {
            LeDiagram L = le_from_path(p);
            if (!validate_le(L)) fail(p, "diagram violates the zero rule");
            if (cell_dimension(L) != n - 1) fail(p, "plus count is not d+m-1");
            if (!is_rational_dyck_le(L)) fail(p, "diagram fails its own characterization");
            if (perm_from_le(L) != sw) fail(p, "pipe trips disagree with the southwest reading");
        }

        if (!skipped("plabic")) {
            PlabicGraph G = build_plabic(p);
            if (!is_tree(G)) fail(p, "step graph is not a tree");
            auto [gd, gn] = graph_type(G);
            if (gd != d || gn != n) fail(p, "graph type mismatch");
            if (trip_permutation(G) != sw) {
                fail(p, "graph trips disagree with the southwest reading");
            }
            if (positroid_from_plabic(G) != P) {
                fail(p, "orientation sources disagree with the matrix bases");
            }
        }

        if (!skipped("connectivity") && !is_connected(P)) {
            fail(p, "positroid is not connected");
        }

        if (!skipped("polytope")) {
            HPolytope general = hrep_general(necklace);
            HPolytope refined = hrep_refined(prof);
            auto indicators = vertices_from_bases(P);
            if (zero_one_points(general, d) != indicators) {
                fail(p, "general system has the wrong lattice points");
            }
            if (zero_one_points(refined, d) != indicators) {
                fail(p, "refined system has the wrong lattice points");
            }
            if (!skipped("polytope-lp") && n <= options.lp_max_n) {
                if (!polytope_contains(general, refined) ||
                    !polytope_contains(refined, general)) {
                    fail(p, "the two systems cut out different polytopes");
                }
            }
            if (!skipped("polytope-adjacency") && n <= options.adjacency_max_n) {
                for (size_t a = 0; a < indicators.size(); ++a) {
                    for (size_t b = a + 1; b < indicators.size(); ++b) {
                        if (!vertices_adjacent(indicators, indicators[a], indicators[b])) {
                            continue;
                        }
                        int plus = 0, minus = 0;
                        for (size_t c = 0; c < indicators[a].size(); ++c) {
                            int diff = indicators[a][c] - indicators[b][c];
                            plus += diff == 1;
                            minus += diff == -1;
                        }
                        if (plus != 1 || minus != 1) {
                            fail(p, "an edge is not parallel to a difference of unit vectors");
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace poslab
