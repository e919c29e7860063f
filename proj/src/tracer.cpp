#include "lemni/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <unordered_map>

namespace lemni {

std::array<double, 4> bounding_box(const ExactPoly& p) {
    if (p.degree() < 1) throw ZeroOrConstantInput("bounding box needs degree >= 1");
    const int n = p.degree();
    const double lc = std::abs(to_complex(p.leading()));
    double ratio_max = 0.0;
    for (int i = 0; i < n; ++i)
        ratio_max = std::max(ratio_max, std::abs(to_complex(p.coeff(i))) / lc);
    const double cauchy = 1.0 + ratio_max;
    const double lc_term = std::pow(1.0 / lc, 1.0 / n);
    const double half = 2.0 * (1.0 + std::max(cauchy, lc_term));
    return {-half, half, -half, half};
}

namespace {

// Grid-edge identifiers make segment stitching exact: each crossing vertex
// lives on one edge, and each edge borders at most two cells.
std::int64_t edge_key(int ix, int iy, bool vertical, int res) {
    return (static_cast<std::int64_t>(iy) * (res + 2) + ix) * 2 + (vertical ? 1 : 0);
}

struct Segment {
    int a, b; // vertex indices
};

} // namespace

CurveSet trace_lemniscate(const ExactPoly& p, int resolution) {
    if (resolution < 16) throw Error("trace resolution must be at least 16");
    CurveSet out;
    out.box = bounding_box(p);
    out.resolution = resolution;

    const int res = resolution;
    const double x0 = out.box[0], y0 = out.box[2];
    const double dx = (out.box[1] - out.box[0]) / res;
    const double dy = (out.box[3] - out.box[2]) / res;

    auto g_at = [&](double x, double y) {
        return std::norm(eval_numeric(p, {x, y})) - 1.0;
    };

    std::vector<double> g(static_cast<std::size_t>(res + 1) * (res + 1));
    for (int iy = 0; iy <= res; ++iy)
        for (int ix = 0; ix <= res; ++ix) {
            double v = g_at(x0 + ix * dx, y0 + iy * dy);
            if (v == 0.0) v = std::numeric_limits<double>::min(); // corners stay off-curve
            g[static_cast<std::size_t>(iy) * (res + 1) + ix] = v;
        }
    auto gv = [&](int ix, int iy) { return g[static_cast<std::size_t>(iy) * (res + 1) + ix]; };

    std::unordered_map<std::int64_t, int> vertex_of_edge;
    std::vector<std::array<double, 2>> vertices;
    std::vector<Segment> segments;

    auto vertex_on = [&](int ix, int iy, bool vertical) {
        const std::int64_t key = edge_key(ix, iy, vertical, res);
        auto it = vertex_of_edge.find(key);
        if (it != vertex_of_edge.end()) return it->second;
        const double va = gv(ix, iy);
        const double vb = vertical ? gv(ix, iy + 1) : gv(ix + 1, iy);
        const double t = va / (va - vb);
        const double x = x0 + (vertical ? ix : ix + t) * dx;
        const double y = y0 + (vertical ? iy + t : iy) * dy;
        const int id = static_cast<int>(vertices.size());
        vertices.push_back({x, y});
        vertex_of_edge.emplace(key, id);
        return id;
    };

    // Cell edges: B = bottom horizontal, R = right vertical, T = top, L = left.
    enum CellEdge { B = 0, R = 1, T = 2, L = 3 };
    for (int cy = 0; cy < res; ++cy)
        for (int cx = 0; cx < res; ++cx) {
            const bool sw = gv(cx, cy) < 0, se = gv(cx + 1, cy) < 0;
            const bool ne = gv(cx + 1, cy + 1) < 0, nw = gv(cx, cy + 1) < 0;
            const int mask = (sw ? 1 : 0) | (se ? 2 : 0) | (ne ? 4 : 0) | (nw ? 8 : 0);
            if (mask == 0 || mask == 15) continue;

            auto edge_vertex = [&](CellEdge e) {
                switch (e) {
                    case B: return vertex_on(cx, cy, false);
                    case R: return vertex_on(cx + 1, cy, true);
                    case T: return vertex_on(cx, cy + 1, false);
                    default: return vertex_on(cx, cy, true);
                }
            };
            auto add = [&](CellEdge e1, CellEdge e2) {
                segments.push_back({edge_vertex(e1), edge_vertex(e2)});
            };

            switch (mask) {
                case 1: case 14: add(L, B); break;
                case 2: case 13: add(B, R); break;
                case 3: case 12: add(L, R); break;
                case 4: case 11: add(R, T); break;
                case 6: case 9:  add(B, T); break;
                case 7: case 8:  add(T, L); break;
                case 5: { // SW and NE inside: pairing follows the center sample
                    const bool center_in =
                        g_at(x0 + (cx + 0.5) * dx, y0 + (cy + 0.5) * dy) < 0;
                    if (center_in) { add(T, L); add(B, R); }
                    else           { add(L, B); add(R, T); }
                    break;
                }
                case 10: { // SE and NW inside
                    const bool center_in =
                        g_at(x0 + (cx + 0.5) * dx, y0 + (cy + 0.5) * dy) < 0;
                    if (center_in) { add(L, B); add(R, T); }
                    else           { add(B, R); add(T, L); }
                    break;
                }
                default: break;
            }
        }

    // Stitch segments into chains and cycles by shared vertices.
    std::vector<std::vector<std::pair<int, int>>> adj(vertices.size()); // (other vertex, segment)
    for (std::size_t s = 0; s < segments.size(); ++s) {
        adj[static_cast<std::size_t>(segments[s].a)].push_back({segments[s].b, static_cast<int>(s)});
        adj[static_cast<std::size_t>(segments[s].b)].push_back({segments[s].a, static_cast<int>(s)});
    }
    std::vector<bool> used(segments.size(), false);

    auto walk = [&](int start_vertex, int first_segment) {
        std::vector<std::array<double, 2>> line;
        line.push_back(vertices[static_cast<std::size_t>(start_vertex)]);
        int v = start_vertex, s = first_segment;
        while (true) {
            used[static_cast<std::size_t>(s)] = true;
            v = segments[static_cast<std::size_t>(s)].a == v ? segments[static_cast<std::size_t>(s)].b
                                                             : segments[static_cast<std::size_t>(s)].a;
            line.push_back(vertices[static_cast<std::size_t>(v)]);
            int next = -1;
            for (const auto& [w, seg] : adj[static_cast<std::size_t>(v)])
                if (!used[static_cast<std::size_t>(seg)]) {
                    next = seg;
                    break;
                }
            if (next < 0) break;
            s = next;
        }
        const bool is_closed = v == start_vertex;
        out.polylines.push_back(std::move(line));
        out.closed.push_back(is_closed);
    };

    // Open chains first (boundary-clipped curves), then the remaining cycles.
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (adj[v].size() == 1 && !used[static_cast<std::size_t>(adj[v][0].second)])
            walk(static_cast<int>(v), adj[v][0].second);
    for (std::size_t s = 0; s < segments.size(); ++s)
        if (!used[s]) walk(segments[s].a, static_cast<int>(s));

    return out;
}

int component_count_numeric(const CurveSet& c) {
    const int n = static_cast<int>(c.polylines.size());
    if (n == 0) return 0;
    const double dx = (c.box[1] - c.box[0]) / std::max(1, c.resolution);
    const double dy = (c.box[3] - c.box[2]) / std::max(1, c.resolution);
    const double stitch = std::hypot(dx, dy);

    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };

    auto endpoint_near = [&](const std::vector<std::array<double, 2>>& a,
                             const std::vector<std::array<double, 2>>& b) {
        for (const auto& pa : {a.front(), a.back()})
            for (const auto& pb : {b.front(), b.back()})
                if (std::hypot(pa[0] - pb[0], pa[1] - pb[1]) <= stitch) return true;
        return false;
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (endpoint_near(c.polylines[static_cast<std::size_t>(i)],
                              c.polylines[static_cast<std::size_t>(j)])) {
                const int a = find(i), b = find(j);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }

    int groups = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++groups;
    return groups;
}

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

void emit_svg(const CurveSet& c, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");

    const double w = c.box[1] - c.box[0], h = c.box[3] - c.box[2];
    // Flip y so the drawing keeps mathematical orientation.
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\""
       << " viewBox=\"" << fmt6(c.box[0]) << " " << fmt6(-c.box[3]) << " " << fmt6(w) << " "
       << fmt6(h) << "\">\n";
    const std::string stroke = fmt6(w / 800.0); // 1px at the rendered size
    for (std::size_t i = 0; i < c.polylines.size(); ++i) {
        const auto& poly = c.polylines[i];
        if (poly.empty()) continue;
        os << "  <path d=\"M " << fmt6(poly[0][0]) << " " << fmt6(-poly[0][1]);
        for (std::size_t k = 1; k < poly.size(); ++k)
            os << " L " << fmt6(poly[k][0]) << " " << fmt6(-poly[k][1]);
        if (c.closed[i]) os << " Z";
        os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
    }
    os << "</svg>\n";
    if (!os) throw IoError("write to '" + path + "' failed");
}

void emit_csv(const CurveSet& c, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    os << "polyline_id,x,y\n";
    for (std::size_t i = 0; i < c.polylines.size(); ++i)
        for (const auto& pt : c.polylines[i])
            os << i << "," << fmt6(pt[0]) << "," << fmt6(pt[1]) << "\n";
    if (!os) throw IoError("write to '" + path + "' failed");
}

} // namespace lemni
