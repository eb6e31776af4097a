#include "poslab/dyck.hpp"
#include "poslab/json_io.hpp"
#include "poslab/lediagram.hpp"
#include "poslab/necklace.hpp"
#include "poslab/permutation.hpp"
#include "poslab/plabic.hpp"
#include "poslab/polytope.hpp"
#include "poslab/positroid.hpp"
#include "poslab/svg.hpp"
#include "poslab/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>

namespace {

using namespace poslab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct Caps {
    int counting = 12;
    int bases = 9;
    int lp = 8;
};

Caps read_caps() {
    Caps caps;
    if (const char* raw = std::getenv("POSITROID_LAB_MAX_N")) {
        int v = std::atoi(raw);
        if (v >= 1) {
            caps.counting = v;
            caps.bases = v;
            caps.lp = v;
        }
    }
    return caps;
}

std::pair<int, int> parse_type(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--type expects m,d");
    }
    int m = std::stoi(s.substr(0, comma));
    int d = std::stoi(s.substr(comma + 1));
    if (m < 1 || d < 1) throw CLI::ValidationError("--type needs m >= 1 and d >= 1");
    return {m, d};
}

int run_count(const std::string& type, const std::string& method) {
    auto [m, d] = parse_type(type);
    Caps caps = read_caps();
    std::vector<std::pair<std::string, Int>> results;
    bool coprime = std::gcd(m, d) == 1;
    if (method == "formula" || method == "all") {
        if (!coprime && method == "formula") {
            std::cerr << "error: the closed formula needs gcd(m,d) = 1; use --method bizley\n";
            return kExitUsage;
        }
        if (coprime) results.emplace_back("formula", count_formula(m, d));
    }
    if (method == "bizley" || method == "all") {
        int g = std::gcd(m, d);
        results.emplace_back("bizley", count_bizley(m / g, d / g, g).back());
    }
    if (method == "enumerate" || method == "all") {
        if (m + d > caps.counting) {
            std::cerr << "error: enumeration is capped at d+m <= " << caps.counting << "\n";
            return kExitUsage;
        }
        results.emplace_back("enumerate", Int(enumerate_paths(m, d).size()));
    }
    if (results.empty()) {
        std::cerr << "error: unknown method\n";
        return kExitUsage;
    }
    if (method == "all") {
        for (const auto& [name, value] : results) {
            std::cout << name << " " << value.str() << "\n";
        }
        for (const auto& [name, value] : results) {
            if (value != results.front().second) {
                std::cerr << "error: methods disagree\n";
                return kExitVerifyFailure;
            }
        }
    } else {
        std::cout << results.front().second.str() << "\n";
    }
    return kExitOk;
}

int run_enumerate(const std::string& type, const std::string& format) {
    auto [m, d] = parse_type(type);
    Caps caps = read_caps();
    if (m + d > caps.counting) {
        std::cerr << "error: enumeration is capped at d+m <= " << caps.counting << "\n";
        return kExitUsage;
    }
    auto paths = enumerate_paths(m, d);
    if (format == "json") {
        json out = json::array();
        for (const auto& p : paths) out.push_back(p.steps());
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& p : paths) std::cout << p.steps() << "\n";
    }
    return kExitOk;
}

int run_convert(const std::string& steps, const std::string& target, const std::string& format) {
    DyckPath p = DyckPath::parse(steps);
    if (format == "svg") {
        if (target == "le") {
            std::cout << svg_lediagram(le_from_path(p));
        } else if (target == "pipedream") {
            std::cout << svg_lediagram(le_from_path(p), true);
        } else if (target == "plabic") {
            std::cout << svg_plabic(build_plabic(p));
        } else if (target == "path") {
            std::cout << svg_path(p);
        } else {
            std::cerr << "error: no svg form for target " << target << "\n";
            return kExitUsage;
        }
        return kExitOk;
    }
    json out;
    std::string text;
    if (target == "matrix") {
        out = to_json(path_to_matrix(p));
    } else if (target == "extended") {
        out = to_json(phi(path_to_matrix(p)));
    } else if (target == "necklace") {
        out = to_json(necklace_from_bases(bases_from_matrix(phi(path_to_matrix(p)))));
    } else if (target == "perm") {
        DecoratedPermutation pi = southwest_perm(p);
        out = to_json(pi);
        text = pi.cycle_string();
    } else if (target == "le") {
        out = to_json(le_from_path(p));
    } else if (target == "plabic") {
        out = to_json(build_plabic(p));
    } else if (target == "positroid") {
        out = to_json(bases_from_matrix(phi(path_to_matrix(p))));
    } else if (target == "polytope-general") {
        auto P = bases_from_matrix(phi(path_to_matrix(p)));
        out = to_json(hrep_general(necklace_from_bases(P)));
    } else if (target == "polytope-refined") {
        out = to_json(hrep_refined(column_profile(phi(path_to_matrix(p)))));
    } else {
        std::cerr << "error: unknown target " << target << "\n";
        return kExitUsage;
    }
    if (format == "text" && !text.empty()) {
        std::cout << text << "\n";
    } else {
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

void print_system_text(const HPolytope& H) {
    auto render = [](const LinearConstraint& c, const char* rel) {
        std::string line;
        bool first = true;
        for (size_t i = 0; i < c.a.size(); ++i) {
            if (c.a[i] == 0) continue;
            std::string coeff;
            if (c.a[i] == 1) {
                coeff = first ? "" : "+ ";
            } else if (c.a[i] == -1) {
                coeff = first ? "-" : "- ";
            } else {
                coeff = (first ? "" : "+ ") + rat_to_string(c.a[i]) + "*";
            }
            line += coeff + "x" + std::to_string(i + 1) + " ";
            first = false;
        }
        if (first) line += "0 ";
        line += std::string(rel) + " " + rat_to_string(c.b);
        return line;
    };
    for (const auto& c : H.equalities()) std::cout << render(c, "=") << "\n";
    for (const auto& c : H.inequalities()) std::cout << render(c, "<=") << "\n";
}

int run_polytope(const std::string& steps, const std::string& system,
                 const std::string& format) {
    DyckPath p = DyckPath::parse(steps);
    HPolytope H = system == "general"
                      ? hrep_general(necklace_from_bases(bases_from_matrix(phi(path_to_matrix(p)))))
                      : hrep_refined(column_profile(phi(path_to_matrix(p))));
    if (format == "text") {
        print_system_text(H);
    } else {
        std::cout << to_json(H).dump() << "\n";
    }
    return kExitOk;
}

int run_plabic(const std::string& steps, const std::string& format,
               std::optional<int> orientation) {
    DyckPath p = DyckPath::parse(steps);
    PlabicGraph G = build_plabic(p);
    if (format == "svg") {
        std::cout << svg_plabic(G, orientation);
    } else {
        json out = to_json(G);
        out["trip"] = trip_permutation(G).cycle_string();
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& type, int maxN, const std::vector<std::string>& skip) {
    auto [m, d] = parse_type(type);
    Caps caps = read_caps();
    if (maxN > 0) caps.bases = caps.lp = maxN;
    if (m + d > caps.bases) {
        std::cerr << "error: verification is capped at d+m <= " << caps.bases
                  << " (set POSITROID_LAB_MAX_N or --max-n to raise)\n";
        return kExitUsage;
    }
    VerifyOptions options;
    options.lp_max_n = caps.lp;
    options.skip.insert(skip.begin(), skip.end());
    VerifyReport report = verify_type(m, d, options);
    for (const auto& note : report.notes) std::cerr << "note: " << note << "\n";
    for (const auto& failure : report.failures) std::cout << "FAIL " << failure << "\n";
    std::cout << "type " << m << "," << d << ": " << report.paths_checked << " paths, "
              << (report.ok() ? "all identities hold" : "identities FAILED") << "\n";
    return report.ok() ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for positroids of rational lattice paths"};
    app.require_subcommand(1);

    std::string type, method = "formula", format = "json", steps, target, system = "general";
    int maxN = 0;
    std::optional<int> orientation;
    std::vector<std::string> skip;

    CLI::App* count = app.add_subcommand("count", "count paths of a type");
    count->add_option("--type", type, "m,d")->required();
    count->add_option("--method", method)
        ->check(CLI::IsMember({"formula", "bizley", "enumerate", "all"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list paths of a type");
    enumerate->add_option("--type", type, "m,d")->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* convert = app.add_subcommand("convert", "convert a path to a representation");
    convert->add_option("steps", steps, "step string over E/N")->required();
    convert->add_option("--to", target)->required();
    convert->add_option("--format", format)->check(CLI::IsMember({"json", "text", "svg"}));

    CLI::App* polytope = app.add_subcommand("polytope", "emit an inequality system");
    polytope->add_option("steps", steps, "step string over E/N")->required();
    polytope->add_option("--system", system)->check(CLI::IsMember({"general", "refined"}));
    polytope->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* plabic = app.add_subcommand("plabic", "emit the step graph of a path");
    plabic->add_option("steps", steps, "step string over E/N")->required();
    plabic->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));
    int orientationFlag = -1;
    plabic->add_option("--orientation", orientationFlag, "index of a perfect orientation");

    CLI::App* verify = app.add_subcommand("verify", "cross-check every identity for a type");
    verify->add_option("--type", type, "m,d")->required();
    verify->add_option("--max-n", maxN, "raise the sweep caps");
    verify->add_option("--skip", skip, "checks to skip")->allow_extra_args(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return run_count(type, method);
        if (*enumerate) return run_enumerate(type, format);
        if (*convert) return run_convert(steps, target, format);
        if (*polytope) return run_polytope(steps, system, format);
        if (*plabic) {
            if (orientationFlag >= 0) orientation = orientationFlag;
            return run_plabic(steps, format, orientation);
        }
        if (*verify) return run_verify(type, maxN, skip);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
