#include "ferncore/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ferncore {

nlohmann::ordered_json region_json(const std::string& spec_text, const Built& b) {
    const Region& r = b.region;
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["spec"] = spec_text;
    j["cell_count"] = r.size();
    j["up"] = r.ups();
    j["down"] = r.downs();
    if (r.center) j["center"] = {{"cp2", r.center->cp2}, {"cq2", r.center->cq2}};
    else j["center"] = nullptr;
    j["symmetric"] = r.center ? is_centrally_symmetric(r) : false;
    if (b.has_sides) j["sides"] = b.sides;
    else j["sides"] = nullptr;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Cell& c : r.cells) cells.push_back({c.p, c.q, c.up() ? "U" : "D"});
    j["cells"] = cells;
    return j;
}

namespace {

struct Pt {
    double x, y;
};

const double kH = std::sqrt(3.0) / 2;

Pt to_xy(const Vertex& v) { return {v.p + 0.5 * v.q, -kH * v.q}; }

std::string poly(const std::vector<Vertex>& vs, const char* fill, const char* stroke, double width) {
    std::ostringstream o;
    o << "<polygon points=\"";
    char buf[64];
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Pt p = to_xy(vs[i]);
        std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", i ? " " : "", p.x, p.y);
        o << buf;
    }
    o << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
    return o.str();
}

}  // namespace

std::string region_svg(const Region& r, const std::optional<Tiling>& tiling) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const Cell& c : r.cells)
        for (const Vertex& v : cell_vertices(c)) {
            Pt p = to_xy(v);
            if (first) x0 = x1 = p.x, y0 = y1 = p.y, first = false;
            x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
        }
    std::ostringstream o;
    char vb[160];
    std::snprintf(vb, sizeof vb, "%.3f %.3f %.3f %.3f", x0 - 0.5, y0 - 0.5, x1 - x0 + 1, y1 - y0 + 1);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << vb << "\" width=\"" << int(40 * (x1 - x0 + 1))
      << "\" height=\"" << int(40 * (y1 - y0 + 1)) << "\">\n";
    for (const Cell& c : r.cells) {
        auto v = cell_vertices(c);
        o << poly({v.begin(), v.end()}, c.up() ? "#f4f4f4" : "#dcdcdc", "#999999", 0.02);
    }
    if (tiling) {
        static const char* fills[] = {"#e8c07d", "#7da7e8", "#9ad18b"};
        for (const Lozenge& l : *tiling) {
            auto u = cell_vertices(l.up), d = cell_vertices(l.down);
            // the lozenge outline: Up vertices plus the Down vertex not shared
            Vertex extra{};
            for (const Vertex& w : d)
                if (std::find(u.begin(), u.end(), w) == u.end()) extra = w;
            int kind = l.down.p == l.up.p && l.down.q == l.up.q ? 0 : (l.down.q == l.up.q ? 1 : 2);
            std::vector<Vertex> pts;
            // walk the Up triangle and splice the extra vertex opposite its apex
            for (int i = 0; i < 3; ++i) {
                pts.push_back(u[i]);
                const Vertex& a = u[i];
                const Vertex& b = u[(i + 1) % 3];
                bool a_in = std::find(d.begin(), d.end(), a) != d.end(), b_in = std::find(d.begin(), d.end(), b) != d.end();
                if (a_in && b_in) pts.push_back(extra);
            }
            o << poly(pts, fills[kind], "#333333", 0.05);
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace ferncore
