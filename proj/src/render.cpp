#include "dessinforge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace dforge::render {

using dessins::Dessin;

namespace {

struct Vertex {
    bool black;
    std::vector<int> edges; // incident edges in cyclic order
    double x = 0, y = 0;
    int depth = 0;
    int leaf_weight = 0;
};

struct TreeModel {
    std::vector<Vertex> verts;
    std::vector<std::pair<int, int>> endpoints; // edge -> (black vtx, white vtx)
};

TreeModel build_model(const Dessin& d) {
    TreeModel m;
    std::vector<int> black_of(d.n()), white_of(d.n());
    for (const auto& cyc : d.sigma0().cycles()) {
        Vertex v{true, cyc};
        for (int e : cyc)
            black_of[e] = static_cast<int>(m.verts.size());
        m.verts.push_back(std::move(v));
    }
    for (const auto& cyc : d.sigma1().cycles()) {
        Vertex v{false, cyc};
        for (int e : cyc)
            white_of[e] = static_cast<int>(m.verts.size());
        m.verts.push_back(std::move(v));
    }
    for (int e = 0; e < d.n(); ++e)
        m.endpoints.emplace_back(black_of[e], white_of[e]);
    return m;
}

int other_end(const TreeModel& m, int edge, int vtx) {
    auto [b, w] = m.endpoints[edge];
    return b == vtx ? w : b;
}

int count_leaves(TreeModel& m, int vtx, int parent_edge) {
    Vertex& v = m.verts[vtx];
    int total = 0;
    for (int e : v.edges) {
        if (e == parent_edge)
            continue;
        total += count_leaves(m, other_end(m, e, vtx), e);
    }
    v.leaf_weight = std::max(total, 1);
    return v.leaf_weight;
}

void place(TreeModel& m, int vtx, int parent_edge, double a0, double a1, int depth,
           double radius_step) {
    Vertex& v = m.verts[vtx];
    v.depth = depth;
    double mid = (a0 + a1) / 2;
    v.x = depth * radius_step * std::cos(mid);
    v.y = depth * radius_step * std::sin(mid);
    // Children fan out in the vertex's cyclic order, starting after the
    // edge back to the parent.
    std::vector<int> order = v.edges;
    if (parent_edge >= 0) {
        auto it = std::find(order.begin(), order.end(), parent_edge);
        std::rotate(order.begin(), it, order.end());
        order.erase(order.begin());
    }
    double total = 0;
    for (int e : order)
        total += m.verts[other_end(m, e, vtx)].leaf_weight;
    double at = a0;
    for (int e : order) {
        int child = other_end(m, e, vtx);
        double span = (a1 - a0) * m.verts[child].leaf_weight / std::max(total, 1.0);
        place(m, child, e, at, at + span, depth + 1, radius_step);
        at += span;
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0); // avoid "-0.00"
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

} // namespace

std::string dessin_to_svg(const Dessin& d, bool edge_labels) {
    TreeModel m = build_model(d);
    // Root at a vertex of maximal degree for a balanced picture.
    int root = 0;
    for (size_t v = 1; v < m.verts.size(); ++v)
        if (m.verts[v].edges.size() > m.verts[root].edges.size())
            root = static_cast<int>(v);
    count_leaves(m, root, -1);
    const double pi = 3.14159265358979323846;
    place(m, root, -1, 0, 2 * pi, 0, 70.0);

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& v : m.verts) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const double pad = 24;
    double ox = pad - min_x, oy = pad - min_y;
    double width = max_x - min_x + 2 * pad, height = max_y - min_y + 2 * pad;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    for (size_t e = 0; e < m.endpoints.size(); ++e) {
        const auto& [b, w] = m.endpoints[e];
        svg << "  <line x1=\"" << fmt(m.verts[b].x + ox) << "\" y1=\"" << fmt(m.verts[b].y + oy)
            << "\" x2=\"" << fmt(m.verts[w].x + ox) << "\" y2=\"" << fmt(m.verts[w].y + oy)
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        if (edge_labels) {
            double lx = (m.verts[b].x + m.verts[w].x) / 2 + ox + 3;
            double ly = (m.verts[b].y + m.verts[w].y) / 2 + oy - 3;
            svg << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
                << "\" font-size=\"9\" fill=\"#888\">" << e + 1 << "</text>\n";
        }
    }
    for (const auto& v : m.verts) {
        if (v.black)
            svg << "  <circle cx=\"" << fmt(v.x + ox) << "\" cy=\"" << fmt(v.y + oy)
                << "\" r=\"5\" fill=\"black\"/>\n";
        else
            svg << "  <circle cx=\"" << fmt(v.x + ox) << "\" cy=\"" << fmt(v.y + oy)
                << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace dforge::render
