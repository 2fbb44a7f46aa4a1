#include "ferncore/regions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ferncore {

int FernSpec::o() const {
    int s = 0;
    for (std::size_t i = 0; i < lobes.size(); i += 2) s += lobes[i];
    return s;
}

int FernSpec::e() const {
    int s = 0;
    for (std::size_t i = 1; i < lobes.size(); i += 2) s += lobes[i];
    return s;
}

namespace {

template <class Pred>
std::vector<Cell> cells_in_box(int p0, int p1, int q0, int q1, Pred inside) {
    std::vector<Cell> out;
    for (int q = q0; q <= q1; ++q)
        for (int p = p0; p <= p1; ++p)
            for (Cell c : {Up(p, q), Down(p, q)}) {
                bool ok = true;
                for (const Vertex& v : cell_vertices(c)) ok = ok && inside(v);
                if (ok) out.push_back(c);
            }
    return out;
}

void check_nonneg(std::initializer_list<int> xs, const char* what) {
    for (int v : xs)
        if (v < 0) throw SpecError(std::string(what) + ": negative parameter");
}

std::vector<Vertex> fern_points(const FernSpec& f, Vertex base, const std::vector<Cell>& cells) {
    std::set<Vertex> pts;
    for (int t = 0; t <= f.width(); ++t) pts.insert({base.p + t, base.q});
    for (const Cell& c : cells)
        for (const Vertex& v : cell_vertices(c)) pts.insert(v);
    return {pts.begin(), pts.end()};
}

Built assemble(const Sides& sides, std::vector<std::vector<Cell>> ferns, std::vector<std::vector<Vertex>> holes) {
    auto hex = hexagon_cells(sides);
    std::set<Cell> removed;
    for (auto& f : ferns)
        for (const Cell& c : f) {
            if (!removed.insert(c).second) throw SpecError("ferns overlap");
            if (!std::binary_search(hex.begin(), hex.end(), c)) throw SpecError("fern exceeds hexagon");
        }
    std::vector<Cell> keep;
    keep.reserve(hex.size());
    for (const Cell& c : hex)
        if (!removed.count(c)) keep.push_back(c);
    Built b;
    b.region = make_region(std::move(keep), hexagon_center(sides));
    if (!is_centrally_symmetric(b.region)) b.region.center.reset();
    b.has_sides = true;
    b.sides = sides;
    b.holes = std::move(holes);
    return b;
}

}  // namespace

std::vector<Cell> hexagon_cells(const Sides& s) {
    auto [t, ne, se, b, sw, nw] = s;
    for (int v : s)
        if (v < 0) throw SpecError("negative hexagon side");
    if (ne + se != sw + nw || t + ne != b + sw) throw SpecError("hexagon sides do not close up");
    int P = t + ne, S = t + nw;
    return cells_in_box(-(sw + nw) - 1, P + 1, -sw, nw, [&](const Vertex& v) {
        return v.q >= -sw && v.q <= nw && v.p >= 0 && v.p <= P && v.p + v.q >= 0 && v.p + v.q <= S;
    });
}

SymCenter hexagon_center(const Sides& s) { return {s[0] + s[1], s[5] - s[1]}; }

Vertex aux_base(int x, int y, int z) {
    int cp2 = x + y, cq2 = z - y;
    bool pe = cp2 % 2 == 0, qe = cq2 % 2 == 0;
    auto half = [](int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };  // floor(v/2)
    if (pe && qe) return {half(cp2), half(cq2)};
    if (!pe && qe) return {half(cp2 - 1), half(cq2)};       // x odd one out: half a unit left
    if (pe && !qe) return {half(cp2), half(cq2 - 1)};       // z odd one out: direction -2pi/3
    return {half(cp2 - 1), half(cq2 + 1)};                  // y odd one out: direction 2pi/3
}

std::vector<Cell> build_fern(const FernSpec& f, Vertex base) {
    std::vector<Cell> out;
    int p = base.p, q0 = base.q;
    for (std::size_t i = 0; i < f.lobes.size(); ++i) {
        int s = f.lobes[i];
        if (s < 0) throw SpecError("negative lobe size");
        std::vector<Cell> lobe;
        if (i % 2 == 0) {
            lobe = cells_in_box(p - 1, p + s, q0, q0 + s, [&](const Vertex& v) {
                return v.q >= q0 && v.q <= q0 + s && v.p >= p && v.p + v.q <= p + q0 + s;
            });
        } else {
            lobe = cells_in_box(p - 1, p + 2 * s, q0 - s, q0, [&](const Vertex& v) {
                return v.q >= q0 - s && v.q <= q0 && v.p <= p + s && v.p + v.q >= p + q0;
            });
        }
        out.insert(out.end(), lobe.begin(), lobe.end());
        p += s;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int fern_end(const FernSpec& f, Vertex base) { return base.p + f.width(); }

Sides multifern_sides(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    int u = 0, d = 0;
    for (const auto& f : ferns) {
        u += f.o();
        d += f.e();
    }
    int g = std::accumulate(gaps.begin(), gaps.end(), 0);
    return {x + d + g, y + u, z + d, x + u + g, y + d, z + u};
}

Region build_hexagon(int x, int y, int z) {
    check_nonneg({x, y, z}, "hexagon");
    Sides s{x, y, z, x, y, z};
    return make_region(hexagon_cells(s), hexagon_center(s));
}

namespace {

Built multi_fern_built(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    check_nonneg({x, y, z}, "fern-cored hexagon");
    if (ferns.empty()) throw SpecError("at least one fern required");
    if (gaps.size() + 1 != ferns.size()) throw SpecError("need exactly one gap between consecutive ferns");
    for (int g : gaps)
        if (g < 0) throw SpecError("negative gap");
    Sides sides = multifern_sides(x, y, z, gaps, ferns);
    Vertex base = aux_base(x, y, z);
    std::vector<std::vector<Cell>> fs;
    std::vector<std::vector<Vertex>> holes;
    for (std::size_t i = 0; i < ferns.size(); ++i) {
        fs.push_back(build_fern(ferns[i], base));
        holes.push_back(fern_points(ferns[i], base, fs.back()));
        base.p = fern_end(ferns[i], base) + (i < gaps.size() ? gaps[i] : 0);
    }
    return assemble(sides, std::move(fs), std::move(holes));
}

Built fern_cored_prime_built(int x, int y, int z, const FernSpec& half) {
    if (x < -1) throw SpecError("FC' requires x >= -1");
    if (y < 0 || z < 0) throw SpecError("FC' requires y, z >= 0");
    if ((x - y) % 2 != 0 || (y - z) % 2 != 0) throw SpecError("FC' requires x, y, z of the same parity");
    int a = half.width();
    Sides sides{x + a + 1, y + a, z + a, x + a + 1, y + a, z + a};
    Vertex base{(x + y) / 2, (z - y) / 2};
    auto f1 = build_fern(half, base);
    SymCenter c = hexagon_center(sides);
    std::vector<Cell> f2;
    for (const Cell& t : f1) f2.push_back(reflect_cell(t, c));
    std::sort(f2.begin(), f2.end());
    std::vector<Vertex> h2;
    for (const Vertex& v : fern_points(half, base, f1)) h2.push_back(reflect_vertex(v, c));
    std::sort(h2.begin(), h2.end());
    std::vector<std::vector<Vertex>> holes{fern_points(half, base, f1), h2};
    return assemble(sides, {f1, f2}, std::move(holes));
}

}  // namespace

Region build_fern_cored(int x, int y, int z, const FernSpec& f) { return multi_fern_built(x, y, z, {}, {f}).region; }

Region build_fern_cored_prime(int x, int y, int z, const FernSpec& half) {
    return fern_cored_prime_built(x, y, z, half).region;
}

Region build_multi_fern(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    return multi_fern_built(x, y, z, gaps, ferns).region;
}

spec::Trapezoid semihexagon_as_trapezoid(const std::vector<int>& b) {
    spec::Trapezoid t{0, 0, {}};
    int pos = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0) throw SpecError("semihexagon: negative run");
        if (i % 2 == 0) {
            for (int k = 0; k < b[i]; ++k) t.positions.push_back(pos + k);
            t.n += b[i];
        } else {
            t.m += b[i];
        }
        pos += b[i];
    }
    return t;
}

Region build_trapezoid(int m, int n, const std::vector<int>& positions) {
    check_nonneg({m, n}, "trapezoid");
    if (int(positions.size()) != n) throw SpecError("trapezoid: need exactly n removed positions");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1 || positions[i] > m + n) throw SpecError("trapezoid: position out of range");
        if (i && positions[i] <= positions[i - 1]) throw SpecError("trapezoid: positions must be distinct and ascending");
    }
    auto cells = cells_in_box(-1, m + n + 1, 0, n, [&](const Vertex& v) {
        return v.q >= 0 && v.q <= n && v.p >= 0 && v.p + v.q <= m + n;
    });
    std::set<Cell> gone;
    for (int x : positions) gone.insert(Up(x - 1, 0));
    std::vector<Cell> keep;
    for (const Cell& c : cells)
        if (!gone.count(c)) keep.push_back(c);
    return make_region(std::move(keep));
}

Region build_semihexagon(const std::vector<int>& b) {
    auto t = semihexagon_as_trapezoid(b);
    return build_trapezoid(t.m, t.n, t.positions);
}

Built build(const RegionSpec& s) {
    return std::visit(
        [](const auto& v) -> Built {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, spec::Hexagon>) {
                Built b;
                b.region = build_hexagon(v.x, v.y, v.z);
                b.has_sides = true;
                b.sides = {v.x, v.y, v.z, v.x, v.y, v.z};
                return b;
            } else if constexpr (std::is_same_v<T, spec::SemiHexagon>) {
                Built b;
                b.region = build_semihexagon(v.b);
                return b;
            } else if constexpr (std::is_same_v<T, spec::Trapezoid>) {
                Built b;
                b.region = build_trapezoid(v.m, v.n, v.positions);
                return b;
            } else if constexpr (std::is_same_v<T, spec::FernCored>) {
                return multi_fern_built(v.x, v.y, v.z, {}, {v.fern});
            } else if constexpr (std::is_same_v<T, spec::FernCoredPrime>) {
                return fern_cored_prime_built(v.x, v.y, v.z, v.half);
            } else {
                return multi_fern_built(v.x, v.y, v.z, v.gaps, v.ferns);
            }
        },
        s);
}

namespace {
std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}
}  // namespace

std::string describe(const RegionSpec& s) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            auto xyz = [&](const auto& w) {
                return "x=" + std::to_string(w.x) + ",y=" + std::to_string(w.y) + ",z=" + std::to_string(w.z);
            };
            if constexpr (std::is_same_v<T, spec::Hexagon>) return "hex:" + xyz(v);
            else if constexpr (std::is_same_v<T, spec::SemiHexagon>) return "s:b=" + join(v.b);
            else if constexpr (std::is_same_v<T, spec::Trapezoid>)
                return "t:m=" + std::to_string(v.m) + ",n=" + std::to_string(v.n) + ",pos=" + join(v.positions);
            else if constexpr (std::is_same_v<T, spec::FernCored>) return "fc:" + xyz(v) + ",a=" + join(v.fern.lobes);
            else if constexpr (std::is_same_v<T, spec::FernCoredPrime>) return "fcp:" + xyz(v) + ",a=" + join(v.half.lobes);
            else {
                std::string f;
                for (std::size_t i = 0; i < v.ferns.size(); ++i) f += (i ? "/" : "") + join(v.ferns[i].lobes);
                return "mf:" + xyz(v) + ",g=" + join(v.gaps) + ",f=" + f;
            }
        },
        s);
}

}  // namespace ferncore
