#include <algorithm>

#include "ferncore/verify.hpp"

namespace ferncore {

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Counterexample: return "counterexample";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

Status VerificationReport::status() const {
    if (!skip_reason.empty()) return Status::Skipped;
    bool cex = false;
    for (const auto& i : identities) {
        if (i.holds) continue;
        if (i.asserted) return Status::Fail;
        cex = true;
    }
    return cex ? Status::Counterexample : Status::Pass;
}

const Identity* VerificationReport::primary() const {
    if (identities.empty()) return nullptr;
    for (const auto& i : identities)
        if (i.asserted) return &i;
    return &identities.front();
}

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const Ratio& v) { return v.get_str(); }

Identity identity(std::string name, const Ratio& lhs, const Ratio& rhs, bool asserted) {
    return Identity{std::move(name), str(lhs), str(rhs), lhs == rhs, asserted};
}

namespace {

Ratio ratio(const BigInt& a, const BigInt& b) {
    if (b == 0) throw CountError("normalising region has no tilings");
    Ratio r(a, b);
    r.canonicalize();
    return r;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string xyz(int x, int y, int z) {
    return "x=" + std::to_string(x) + ",y=" + std::to_string(y) + ",z=" + std::to_string(z);
}

std::string ferns_str(const std::vector<int>& gaps, const std::vector<FernSpec>& ferns) {
    std::string s = ",g=" + join(gaps) + ",f=";
    for (std::size_t i = 0; i < ferns.size(); ++i) s += (i ? "/" : "") + join(ferns[i].lobes);
    return s;
}

std::vector<FernSpec> two_lobe(const std::vector<FernSpec>& ferns) {
    std::vector<FernSpec> out;
    for (const auto& f : ferns) out.push_back({{f.o(), f.e()}});
    return out;
}

std::vector<FernSpec> one_lobe(const std::vector<FernSpec>& ferns) {
    std::vector<FernSpec> out;
    for (const auto& f : ferns) out.push_back({{f.width()}});
    return out;
}

}  // namespace

VerificationReport theorem1_check(int x, int y, int z, const std::vector<int>& half) {
    int a = 0;
    for (int v : half) a += v;
    Region num = build_fern_cored(x, y, z, FernSpec{mirror_full(half)});
    Region den = build_fern_cored(x, y, z, FernSpec{{a, a}});
    BigInt sn = count_symmetric_tilings(num), sd = count_symmetric_tilings(den);
    BigInt mn = count_tilings(num), md = count_tilings(den);
    VerificationReport r;
    r.family = "theorem1";
    r.params = xyz(x, y, z) + ",a=" + join(half);
    r.cells = int(num.size());
    r.counts = {{"Msym(FC(a))", str(sn)}, {"Msym(FC(a,a))", str(sd)}, {"M(FC(a))", str(mn)}, {"M(FC(a,a))", str(md)}};
    Ratio S = ratio(sn, sd);
    r.identities.push_back(identity("symmetric ratio = product", S, theorem1_rhs(x, y, z, half)));
    r.identities.push_back(identity("square root", S * S, ratio(mn, md)));
    return r;
}

VerificationReport theorem2_check(int x, int y, int z, const std::vector<int>& half) {
    int a = 0;
    for (int v : half) a += v;
    Region num = build_fern_cored_prime(x, y, z, FernSpec{half});
    Region den = build_fern_cored_prime(x, y, z, FernSpec{{a}});
    BigInt sn = count_symmetric_tilings(num), sd = count_symmetric_tilings(den);
    VerificationReport r;
    r.family = "theorem2";
    r.params = xyz(x, y, z) + ",a=" + join(half);
    r.cells = int(num.size());
    r.counts = {{"Msym(FC'(a))", str(sn)}, {"Msym(FC'(a))_norm", str(sd)}};
    r.identities.push_back(identity("symmetric ratio = product", ratio(sn, sd), theorem2_rhs(x, y, z, half)));
    return r;
}

VerificationReport conjecture1_single_check(int x, int y, int z, const std::vector<int>& lobes) {
    FernSpec f{lobes};
    Region num = build_fern_cored(x, y, z, f);
    BigInt mn = count_tilings(num);
    BigInt m_oe = count_tilings(build_fern_cored(x, y, z, FernSpec{{f.o(), f.e()}}));
    BigInt m_w = count_tilings(build_fern_cored(x, y, z, FernSpec{{f.width()}}));
    VerificationReport r;
    r.family = "conjecture1";
    r.params = xyz(x, y, z) + ",g=,f=" + join(lobes);
    r.cells = int(num.size());
    r.counts = {{"M(FC(a))", str(mn)}, {"M(FC(o,e))", str(m_oe)}, {"M(FC(o+e))", str(m_w)}};
    r.identities.push_back(identity("single fern / two-lobe", ratio(mn, m_oe),
                                    singlefern_rhs(x, y, z, lobes, Form::Corrected) / twolobe_rhs(x, y, z, lobes)));
    r.identities.push_back(
        identity("printed product", ratio(mn, m_w), singlefern_rhs(x, y, z, lobes, Form::Printed), false));
    return r;
}

VerificationReport conjecture1_multi_check(int x, int y, int z, const std::vector<int>& gaps,
                                           const std::vector<FernSpec>& ferns) {
    Region num = build_multi_fern(x, y, z, gaps, ferns);
    BigInt mn = count_tilings(num);
    BigInt m_oe = count_tilings(build_multi_fern(x, y, z, gaps, two_lobe(ferns)));
    BigInt m_w = count_tilings(build_multi_fern(x, y, z, gaps, one_lobe(ferns)));
    VerificationReport r;
    r.family = "conjecture1";
    r.params = xyz(x, y, z) + ferns_str(gaps, ferns);
    r.cells = int(num.size());
    r.counts = {{"M(MF(a))", str(mn)}, {"M(MF(o,e))", str(m_oe)}, {"M(MF(o+e))", str(m_w)}};
    Ratio corrected = conjecture1_rhs(x, y, z, gaps, ferns, Form::Corrected) /
                      conjecture1_rhs(x, y, z, gaps, two_lobe(ferns), Form::Corrected);
    r.identities.push_back(identity("corrected product / two-lobe normaliser", ratio(mn, m_oe), corrected, false));
    r.identities.push_back(
        identity("printed product", ratio(mn, m_w), conjecture1_rhs(x, y, z, gaps, ferns, Form::Printed), false));
    return r;
}

VerificationReport conjecture2_check(int x, int y, int z, const std::vector<int>& gaps,
                                     const std::vector<FernSpec>& ferns) {
    FernSystem sys = symmetric_system(gaps, ferns);
    FernSystem sys0 = symmetric_system(gaps, one_lobe(ferns));
    Region num = build_multi_fern(x, y, z, sys.gaps, sys.ferns);
    Region den = build_multi_fern(x, y, z, sys0.gaps, sys0.ferns);
    if (!num.center || !den.center) throw SpecError("fern system is not centrally symmetric");
    BigInt sn = count_symmetric_tilings(num), sd = count_symmetric_tilings(den);
    BigInt mn = count_tilings(num), md = count_tilings(den);
    VerificationReport r;
    r.family = "conjecture2";
    r.params = xyz(x, y, z) + ferns_str(gaps, ferns);
    r.cells = int(num.size());
    r.counts = {{"Msym(sys)", str(sn)}, {"Msym(sys0)", str(sd)}, {"M(sys)", str(mn)}, {"M(sys0)", str(md)}};
    Ratio S = ratio(sn, sd);
    r.identities.push_back(
        identity("normalised product", S, conjecture2_rhs_normalized(x, y, z, gaps, ferns), false));
    r.identities.push_back(identity("square root", S * S, ratio(mn, md), false));
    r.identities.push_back(identity("printed product", S, conjecture2_rhs(x, y, z, gaps, ferns), false));
    return r;
}

}  // namespace ferncore
