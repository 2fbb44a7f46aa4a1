#pragma once

#include <map>
#include <string>
#include <vector>

#include "ferncore/regions.hpp"

namespace ferncore {

struct ParseError : SpecError {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : SpecError("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

// `family:key=v,v,...,key=...`. A bare integer after a comma continues the list of the
// previous key; '/' separates groups (used by `f=` for several ferns).
struct ParsedSpec {
    std::string family;
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::vector<int>>> values;

    bool has(const std::string& k) const { return values.count(k) > 0; }
    int integer(const std::string& k) const;                      // exactly one value
    int integer_or(const std::string& k, int fallback) const;
    std::vector<int> list(const std::string& k) const;            // single group, may be empty
    std::vector<std::vector<int>> groups(const std::string& k) const;
};

ParsedSpec parse_spec(const std::string& text);
RegionSpec to_region_spec(const ParsedSpec& p);
RegionSpec parse_region_spec(const std::string& text);

}  // namespace ferncore
