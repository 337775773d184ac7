#pragma once

#include <string>
#include <vector>

#include "cubewords/family.hpp"
#include "cubewords/geometry.hpp"
#include "cubewords/word.hpp"

namespace fixtures {

inline std::vector<std::string> paper_k2_strings() { return {"00*", "*10", "1*1"}; }

inline cubewords::WordFamily paper_k2_family() {
    std::vector<cubewords::Word> ws;
    for (const auto& s : paper_k2_strings()) ws.push_back(cubewords::Word::parse(s));
    return cubewords::make_family(ws, 2);
}

// Tilings of {0,1}^n that no single coordinate splits (every coordinate has a
// star in some member), so they are not reachable by recursive splitting.
inline std::vector<std::vector<std::string>> nonhierarchical_tilings() {
    return {
        {"00*", "*10", "1*1", "011", "100"},
        {"00**", "*10*", "1*1*", "011*", "100*"},
        {"00**", "*10*", "1*1*", "0110", "0111", "100*"},
    };
}

inline std::vector<cubewords::Word> words_of(const std::vector<std::string>& ss) {
    std::vector<cubewords::Word> out;
    for (const auto& s : ss) out.push_back(cubewords::Word::parse(s));
    return out;
}

inline cubewords::geometry::Point pt(long long x, long long y) {
    return {cubewords::geometry::Rational(x), cubewords::geometry::Rational(y)};
}

// Two triangles sharing the edge from (0,0) to (1,0), mirror images across it.
inline std::vector<cubewords::geometry::Simplex> two_triangles() {
    using cubewords::geometry::Simplex;
    return {Simplex({pt(0, 0), pt(1, 0), pt(0, 1)}),
            Simplex({pt(0, 0), pt(1, 0), pt(0, -1)})};
}

// Four pairwise-neighbourly triangles: every pair shares a line carrying an
// edge of each, with the triangles on opposite sides and the edges
// overlapping in a segment.
inline std::vector<cubewords::geometry::Simplex> four_triangles() {
    using cubewords::geometry::Simplex;
    return {Simplex({pt(0, 0), pt(0, 4), pt(2, 2)}),
            Simplex({pt(0, 0), pt(1, 1), pt(4, 1)}),
            Simplex({pt(0, 4), pt(3, 1), pt(4, 1)}),
            Simplex({pt(1, 1), pt(2, 2), pt(3, 1)})};
}

}  // namespace fixtures
