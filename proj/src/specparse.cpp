#include "ferncore/specparse.hpp"

#include <cctype>
#include <set>

namespace ferncore {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i); }

    std::string word() {
        std::size_t b = i;
        while (!done() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (b == i) fail("expected a name");
        return s.substr(b, i - b);
    }

    int number() {
        std::size_t b = i;
        if (peek() == '-' || peek() == '+') ++i;
        std::size_t d = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (d == i) {
            i = b;
            fail("expected an integer");
        }
        try {
            return std::stoi(s.substr(b, i - b));
        } catch (const std::out_of_range&) {
            i = b;
            fail("integer out of range");
        }
    }
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+'; }

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
    Lexer lx{text};
    ParsedSpec out;
    out.family = lx.word();
    if (lx.peek() != ':') lx.fail("expected ':' after the family name");
    ++lx.i;
    std::string key;
    bool first = true;
    while (!lx.done()) {
        if (!first) {
            if (lx.peek() != ',') lx.fail("expected ','");
            ++lx.i;
        }
        first = false;
        if (starts_number(lx.peek())) {
            if (key.empty()) lx.fail("value without a key");
            out.values[key].back().push_back(lx.number());
        } else {
            std::size_t at = lx.i;
            key = lx.word();
            if (lx.peek() != '=') lx.fail("expected '=' after '" + key + "'");
            ++lx.i;
            if (out.values.count(key)) throw ParseError("duplicate key '" + key + "'", at);
            out.order.push_back(key);
            auto& groups = out.values[key];
            groups.emplace_back();
            if (starts_number(lx.peek())) groups.back().push_back(lx.number());
        }
        while (lx.peek() == '/') {
            ++lx.i;
            out.values[key].emplace_back();
            if (starts_number(lx.peek())) out.values[key].back().push_back(lx.number());
        }
    }
    return out;
}

int ParsedSpec::integer(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) throw SpecError("missing key '" + k + "'");
    if (it->second.size() != 1 || it->second[0].size() != 1) throw SpecError("key '" + k + "' needs a single integer");
    return it->second[0][0];
}

int ParsedSpec::integer_or(const std::string& k, int fallback) const { return has(k) ? integer(k) : fallback; }

std::vector<int> ParsedSpec::list(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) return {};
    if (it->second.size() != 1) throw SpecError("key '" + k + "' takes a single list");
    return it->second[0];
}

std::vector<std::vector<int>> ParsedSpec::groups(const std::string& k) const {
    auto it = values.find(k);
    return it == values.end() ? std::vector<std::vector<int>>{} : it->second;
}

namespace {

void allow_keys(const ParsedSpec& p, std::set<std::string> keys) {
    for (const auto& k : p.order)
        if (!keys.count(k)) throw SpecError("unknown key '" + k + "' for family '" + p.family + "'");
}

void nonneg(const ParsedSpec& p, const std::string& k) {
    for (const auto& g : p.groups(k))
        for (int v : g)
            if (v < 0) throw SpecError("negative value for '" + k + "' (only fcp allows x = -1)");
}

}  // namespace

RegionSpec to_region_spec(const ParsedSpec& p) {
    const std::string& f = p.family;
    if (f == "hex") {
        allow_keys(p, {"x", "y", "z"});
        for (auto k : {"x", "y", "z"}) nonneg(p, k);
        return spec::Hexagon{p.integer("x"), p.integer("y"), p.integer("z")};
    }
    if (f == "s") {
        allow_keys(p, {"b"});
        nonneg(p, "b");
        return spec::SemiHexagon{p.list("b")};
    }
    if (f == "t") {
        allow_keys(p, {"m", "n", "pos"});
        for (auto k : {"m", "n", "pos"}) nonneg(p, k);
        return spec::Trapezoid{p.integer("m"), p.integer("n"), p.list("pos")};
    }
    if (f == "fc" || f == "fcp") {
        allow_keys(p, {"x", "y", "z", "a"});
        for (auto k : {"y", "z", "a"}) nonneg(p, k);
        if (f == "fc") {
            nonneg(p, "x");
            return spec::FernCored{p.integer("x"), p.integer("y"), p.integer("z"), FernSpec{p.list("a")}};
        }
        return spec::FernCoredPrime{p.integer("x"), p.integer("y"), p.integer("z"), FernSpec{p.list("a")}};
    }
    if (f == "mf") {
        allow_keys(p, {"x", "y", "z", "g", "f"});
        for (auto k : {"x", "y", "z", "g", "f"}) nonneg(p, k);
        std::vector<FernSpec> ferns;
        for (const auto& g : p.groups("f")) ferns.push_back({g});
        return spec::MultiFern{p.integer("x"), p.integer("y"), p.integer("z"), p.list("g"), ferns};
    }
    throw SpecError("unknown region family '" + f + "' (expected hex, s, t, fc, fcp or mf)");
}

RegionSpec parse_region_spec(const std::string& text) { return to_region_spec(parse_spec(text)); }

}  // namespace ferncore
