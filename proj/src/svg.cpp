#include "poslab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace poslab {

namespace {

constexpr double kCell = 40.0;

std::string header(double w, double h) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    return os.str();
}

std::string line(double x1, double y1, double x2, double y2, const std::string& style) {
    std::ostringstream os;
    os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" " << style << "/>\n";
    return os.str();
}

std::string circle(double cx, double cy, double r, const std::string& style) {
    std::ostringstream os;
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" " << style
       << "/>\n";
    return os.str();
}

std::string text(double x, double y, const std::string& s) {
    std::ostringstream os;
    os << "  <text x=\"" << x << "\" y=\"" << y
       << "\" font-size=\"12\" text-anchor=\"middle\">" << s << "</text>\n";
    return os.str();
}

} // namespace

std::string svg_path(const DyckPath& p) {
    int m = p.east(), d = p.north();
    double pad = 20.0;
    double w = pad * 2 + m * kCell, h = pad * 2 + d * kCell;
    auto X = [&](double x) { return pad + x * kCell; };
    auto Y = [&](double y) { return h - pad - y * kCell; };
    std::string out = header(w, h);
    for (int i = 0; i <= m; ++i) {
        out += line(X(i), Y(0), X(i), Y(d), "stroke=\"#ddd\"");
    }
    for (int j = 0; j <= d; ++j) {
        out += line(X(0), Y(j), X(m), Y(j), "stroke=\"#ddd\"");
    }
    out += line(X(0), Y(0), X(m), Y(d), "stroke=\"#c33\" stroke-dasharray=\"4 3\"");
    double x = 0, y = 0;
    for (char c : p.steps()) {
        double nx = x + (c == 'E' ? 1 : 0), ny = y + (c == 'N' ? 1 : 0);
        out += line(X(x), Y(y), X(nx), Y(ny), "stroke=\"#06c\" stroke-width=\"3\"");
        x = nx;
        y = ny;
    }
    out += "</svg>\n";
    return out;
}

std::string svg_lediagram(const LeDiagram& L, bool pipe_dream) {
    int m = L.m(), d = L.d();
    double pad = 20.0;
    double w = pad * 2 + m * kCell, h = pad * 2 + d * kCell;
    auto X = [&](double c) { return pad + c * kCell; };
    auto Y = [&](double r) { return pad + r * kCell; };
    std::string out = header(w, h);
    for (int r = 1; r <= L.row_count(); ++r) {
        for (int c = 1; c <= L.row_length(r); ++c) {
            std::ostringstream cell;
            cell << "  <rect x=\"" << X(c - 1) << "\" y=\"" << Y(r - 1) << "\" width=\""
                 << kCell << "\" height=\"" << kCell
                 << "\" fill=\"none\" stroke=\"#333\"/>\n";
            out += cell.str();
            double cx = X(c - 1) + kCell / 2, cy = Y(r - 1) + kCell / 2;
            if (!pipe_dream) {
                out += text(cx, cy + 4, L.plus_at(r, c) ? "+" : "0");
            } else if (L.plus_at(r, c)) {
                // elbows: north<->east and west<->south quarter turns
                out += line(cx, Y(r - 1), X(c), cy, "stroke=\"#06c\" stroke-width=\"2\"");
                out += line(X(c - 1), cy, cx, Y(r), "stroke=\"#06c\" stroke-width=\"2\"");
            } else {
                out += line(cx, Y(r - 1), cx, Y(r), "stroke=\"#06c\" stroke-width=\"2\"");
                out += line(X(c - 1), cy, X(c), cy, "stroke=\"#06c\" stroke-width=\"2\"");
            }
        }
    }
    BoundaryLabels labels = boundary_labels(L);
    for (int r = 1; r <= d; ++r) {
        out += text(X(L.row_length(r)) + 10, Y(r - 1) + kCell / 2 + 4,
                    std::to_string(labels.vrow[r - 1]));
    }
    for (int c = 1; c <= m; ++c) {
        int depth = 0;
        for (int r = 1; r <= L.row_count(); ++r) {
            if (L.row_length(r) >= c) depth = r;
        }
        out += text(X(c - 1) + kCell / 2, Y(depth) + 14, std::to_string(labels.hcol[c - 1]));
    }
    out += "</svg>\n";
    return out;
}

std::string svg_plabic(const PlabicGraph& G, std::optional<int> orientation) {
    double R = 180.0, pad = 30.0;
    double size = 2 * (R + pad);
    double cx = size / 2, cy = size / 2;
    std::map<int, std::pair<double, double>> pos;
    int n = G.n();
    for (int b = 1; b <= n; ++b) {
        double angle = -M_PI / 2 + 2 * M_PI * (b - 1) / n; // clockwise from the top
        pos[b] = {cx + R * std::cos(angle), cy + R * std::sin(angle)};
    }
    // internal vertices on a smaller circle, in id order
    int k = static_cast<int>(G.internal().size());
    int i = 0;
    for (const auto& [id, color] : G.internal()) {
        (void)color;
        double angle = -M_PI / 2 + 2 * M_PI * i / std::max(1, k);
        pos[id] = {cx + 0.45 * R * std::cos(angle), cy + 0.45 * R * std::sin(angle)};
        ++i;
    }
    std::vector<bool> dir;
    std::vector<int> sources;
    if (orientation) {
        auto all = perfect_orientations(G);
        if (*orientation < 0 || *orientation >= static_cast<int>(all.size())) {
            throw std::invalid_argument("orientation index out of range");
        }
        dir = all[*orientation].direction;
        sources = all[*orientation].boundary_sources;
    }
    std::string out = header(size, size);
    out += circle(cx, cy, R, "fill=\"none\" stroke=\"#999\"");
    if (orientation) {
        out += "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
               "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L "
               "0 10 z\" fill=\"#06c\"/></marker></defs>\n";
    }
    for (size_t e = 0; e < G.edges().size(); ++e) {
        auto [x1, y1] = pos.at(G.edges()[e].u);
        auto [x2, y2] = pos.at(G.edges()[e].v);
        if (orientation && !dir[e]) {
            std::swap(x1, x2);
            std::swap(y1, y2);
        }
        std::string style = "stroke=\"#06c\" stroke-width=\"2\"";
        if (orientation) style += " marker-end=\"url(#arrow)\"";
        out += line(x1, y1, x2, y2, style);
    }
    for (int b = 1; b <= n; ++b) {
        auto [x, y] = pos.at(b);
        bool src = std::find(sources.begin(), sources.end(), b) != sources.end();
        out += circle(x, y, 4, src ? "fill=\"#c33\"" : "fill=\"#333\"");
        double lx = cx + (x - cx) * 1.09, ly = cy + (y - cy) * 1.09;
        out += text(lx, ly + 4, std::to_string(b));
    }
    for (const auto& [id, color] : G.internal()) {
        auto [x, y] = pos.at(id);
        out += circle(x, y, 7,
                      color == Color::Black ? "fill=\"#000\" stroke=\"#000\""
                                            : "fill=\"#fff\" stroke=\"#000\"");
    }
    out += "</svg>\n";
    return out;
}

} // namespace poslab
