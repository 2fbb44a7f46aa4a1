#include "ferncore/formulas.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace ferncore {

namespace {

std::shared_mutex hf_mutex;
std::vector<BigInt> hf_table{1, 1};    // h(0), h(1)
std::vector<BigInt> fact_table{1, 1};  // 0!, 1!

// h(a)/h(b) as an exact ratio
Ratio hr(int a, int b) {
    Ratio r(hyperfactorial(a), hyperfactorial(b));
    r.canonicalize();
    return r;
}

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
int ceil_half(int v) { return -floor_half(-v); }

}  // namespace

BigInt hyperfactorial(int n) {
    if (n < 0) throw FormulaError("hyperfactorial of a negative number");
    {
        std::shared_lock lk(hf_mutex);
        if (n < int(hf_table.size())) return hf_table[n];
    }
    std::unique_lock lk(hf_mutex);
    while (int(hf_table.size()) <= n) {
        int k = int(hf_table.size());  // h(k) = h(k-1) * (k-1)!
        fact_table.push_back(fact_table.back() * (k - 1));
        hf_table.push_back(hf_table.back() * fact_table.back());
    }
    return hf_table[n];
}

BigInt macmahon(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw FormulaError("macmahon: negative side");
    BigInt num = 1, den = 1;
    for (int i = 1; i <= x; ++i)
        for (int j = 1; j <= y; ++j)
            for (int k = 1; k <= z; ++k) {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
    if (num % den != 0) throw FormulaError("macmahon: non-integral product");
    return num / den;
}

std::vector<int> pad_even(std::vector<int> lobes) {
    if (lobes.size() % 2) lobes.push_back(0);
    return lobes;
}

std::vector<int> pad_odd(std::vector<int> lobes) {
    if (lobes.size() % 2 == 0) lobes.push_back(0);
    return lobes;
}

bool is_integer(const Ratio& r) { return r.get_den() == 1; }

Ratio s_value(const std::vector<int>& b_in) {
    for (int v : b_in)
        if (v < 0) throw FormulaError("s: negative entry");
    std::vector<int> b = b_in;
    if (b.size() % 2 == 0 && !b.empty()) b.pop_back();  // s(b_1..b_2l) = s(b_1..b_2l-1)
    if (b.empty()) return 1;
    const int L = int(b.size());
    BigInt num = 1, den = 1;
    for (int i = 0; i < L; ++i) {
        int sum = 0;
        for (int j = i; j < L; ++j) {
            sum += b[j];
            if ((j - i) % 2 == 0) num *= hyperfactorial(sum);
            else den *= hyperfactorial(sum);
        }
    }
    int odd = 0;
    for (int i = 0; i < L; i += 2) odd += b[i];
    den *= hyperfactorial(odd);
    Ratio r(num, den);
    r.canonicalize();
    if (!is_integer(r)) throw FormulaError("s: non-integral value");
    return r;
}

Ratio trapezoid_count(int m, int n, const std::vector<int>& x) {
    if (m < 0 || n < 0) throw FormulaError("trapezoid: negative side");
    if (int(x.size()) != n) throw FormulaError("trapezoid: need exactly n positions");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > m + n) throw FormulaError("trapezoid: position out of range");
        if (i && x[i] <= x[i - 1]) throw FormulaError("trapezoid: positions must be distinct and ascending");
    }
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= x[j] - x[i];
            den *= j - i;
        }
    Ratio r(num, den);
    r.canonicalize();
    if (!is_integer(r)) throw FormulaError("trapezoid: non-integral value");
    return r;
}

namespace {

// s(full) * h(Z+A_k)/h(X+A_k) * prod_{odd j<2k} h(X+A_j)/h(Z+A_j) * prod_{even 2<=j<=2k-2} h(Z+A_j)/h(X+A_j)
Ratio mirrored_product(int X, int Z, const std::vector<int>& s_arg, const std::vector<int>& full, int k) {
    std::vector<int> A(full.size() + 1, 0);
    for (std::size_t i = 0; i < full.size(); ++i) A[i + 1] = A[i] + full[i];
    Ratio r = s_value(s_arg) * hr(Z + A[k], X + A[k]);
    for (int j = 1; j <= 2 * k - 1; j += 2) r *= hr(X + A[j], Z + A[j]);
    for (int j = 2; j <= 2 * k - 2; j += 2) r *= hr(Z + A[j], X + A[j]);
    return r;
}

void check_lobes(const std::vector<int>& v) {
    for (int a : v)
        if (a < 0) throw FormulaError("negative lobe");
}

}  // namespace

Ratio theorem1_rhs(int x, int y, int z, const std::vector<int>& half) {
    if (x < 0 || y < 0 || z < 0 || x % 2 || y % 2 || z % 2) throw FormulaError("theorem1_rhs needs even non-negative x, y, z");
    check_lobes(half);
    if (half.empty()) return 1;
    std::vector<int> full = half;
    full.insert(full.end(), half.rbegin(), half.rend());  // a_{k+i} = a_{k-i+1}
    return mirrored_product((x + y) / 2, (x + z) / 2, full, full, int(half.size()));
}

Ratio theorem2_rhs(int x, int y, int z, const std::vector<int>& half_in) {
    if (x < -1 || y < 0 || z < 0) throw FormulaError("theorem2_rhs needs x >= -1, y, z >= 0");
    if ((x - y) % 2 || (x - z) % 2) throw FormulaError("theorem2_rhs needs x, y, z of the same parity");
    check_lobes(half_in);
    if (half_in.empty()) return 1;
    // The printed formula is only right for odd k; an even-length list gets a trailing 0 lobe first.
    std::vector<int> a = pad_odd(half_in);
    const int k = int(a.size());
    std::vector<int> full(a.begin(), a.end());
    full.push_back(a.back() + 1);  // a_{k+1} = a_k + 1
    for (int i = k - 2; i >= 0; --i) full.push_back(a[i]);
    return mirrored_product((x + y) / 2, (x + z) / 2, full, full, k);
}

LobeGeometry lobe_geometry(const std::vector<int>& gaps, const std::vector<FernSpec>& ferns, Origin) {
    // Fern 1 is based at the auxiliary center, which is also the leftmost point of the
    // system, so both origins give the same distances.
    LobeGeometry g;
    int pos = 0;
    for (std::size_t i = 0; i < ferns.size(); ++i) {
        if (i > 0) pos += i - 1 < gaps.size() ? gaps[i - 1] : 0;
        for (int a : ferns[i].lobes) g.r.push_back(pos += a);
    }
    g.k = int(g.r.size());
    return g;
}

namespace {

std::vector<FernSpec> padded(const std::vector<FernSpec>& ferns) {
    std::vector<FernSpec> out;
    for (const auto& f : ferns) {
        check_lobes(f.lobes);
        out.push_back({f.lobes.empty() ? std::vector<int>{0, 0} : pad_even(f.lobes)});
    }
    return out;
}

// a^(1), g_1 + a^(2)_1, a^(2)_2.., ...  (gap added to the first lobe of the next fern)
std::vector<int> gap_sequence(const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < ferns.size(); ++i) {
        auto l = ferns[i].lobes;
        if (i > 0 && !l.empty()) l[0] += gaps[i - 1];
        seq.insert(seq.end(), l.begin(), l.end());
    }
    return seq;
}

}  // namespace

Ratio conjecture1_rhs(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns_in,
                      Form form) {
    if (x < 0 || y < 0 || z < 0) throw FormulaError("conjecture1_rhs needs non-negative x, y, z");
    if (ferns_in.empty() || gaps.size() + 1 != ferns_in.size()) throw FormulaError("conjecture1_rhs: need n ferns and n-1 gaps");
    for (int g : gaps)
        if (g < 0) throw FormulaError("negative gap");
    auto ferns = padded(ferns_in);
    auto seq = gap_sequence(gaps, ferns);
    auto geo = lobe_geometry(gaps, ferns, Origin::AuxCenter);
    const int k = geo.k;
    if (k == 0) return 1;
    const int rk = geo.r[k - 1];
    const int fX = floor_half(x + y), fZ = floor_half(x + z), cX = ceil_half(x + y), cZ = ceil_half(x + z);
    Ratio res = s_value(seq) * s_value(std::vector<int>(seq.begin() + 1, seq.end()));
    for (int j = 1; j <= k; j += 2) {
        int rj = geo.r[j - 1];
        res *= hr(fX + rj, fZ + rj) * hr(cX + rk - rj, cZ + rk - rj);
    }
    for (int j = 2; j < k; j += 2) {
        int rj = geo.r[j - 1];
        res *= hr(fZ + rj, fX + rj);
        if (form == Form::Printed) res *= hr(cX + rk - rj, cZ + rk - rj);
        else res *= hr(cZ + rk - rj, cX + rk - rj);
    }
    return res;
}

Ratio singlefern_rhs(int x, int y, int z, const std::vector<int>& lobes, Form form) {
    return conjecture1_rhs(x, y, z, {}, {FernSpec{lobes}}, form);
}

Ratio twolobe_rhs(int x, int y, int z, const std::vector<int>& lobes) {
    FernSpec f{lobes};
    int o = f.o(), e = f.e();
    return hr(floor_half(x + y) + o, floor_half(x + z) + o) * hr(ceil_half(x + y) + e, ceil_half(x + z) + e);
}

FernSystem symmetric_system(const std::vector<int>& gaps, const std::vector<FernSpec>& ferns_in) {
    const std::size_t n = ferns_in.size();
    if (n == 0 || gaps.size() != n) throw FormulaError("symmetric_system: need n ferns and gaps g_1..g_n");
    for (int g : gaps)
        if (g < 0) throw FormulaError("negative gap");
    auto a = padded(ferns_in);
    FernSystem s;
    s.ferns = a;
    for (std::size_t i = n; i-- > 0;) {
        auto b = a[i].lobes;
        std::reverse(b.begin(), b.end());
        s.ferns.push_back({b});
    }
    s.gaps.assign(gaps.begin(), gaps.end() - 1);
    s.gaps.push_back(gaps.back());
    for (std::size_t i = n - 1; i-- > 0;) s.gaps.push_back(gaps[i]);
    return s;
}

Ratio conjecture2_rhs(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    if (x < 0 || y < 0 || z < 0) throw FormulaError("conjecture2_rhs needs non-negative x, y, z");
    if ((x - y) % 2 || (x - z) % 2) throw FormulaError("conjecture2_rhs needs x, y, z of the same parity");
    FernSystem sys = symmetric_system(gaps, ferns);
    auto seq = gap_sequence(sys.gaps, sys.ferns);
    auto geo = lobe_geometry(sys.gaps, sys.ferns, Origin::SystemLeft);
    const int X = (x + y) / 2, Z = (x + z) / 2, k = geo.k;
    Ratio res = s_value(seq);
    for (int j = 1; j <= k; j += 2) res *= hr(X + geo.r[j - 1], Z + geo.r[j - 1]);
    for (int j = 2; j < k; j += 2) res *= hr(Z + geo.r[j - 1], X + geo.r[j - 1]);
    return res;
}

Ratio conjecture2_rhs_normalized(int x, int y, int z, const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    std::vector<FernSpec> a0;
    for (const auto& f : ferns) a0.push_back({{f.width()}});
    return conjecture2_rhs(x, y, z, gaps, ferns) / conjecture2_rhs(x, y, z, gaps, a0);
}

}  // namespace ferncore
