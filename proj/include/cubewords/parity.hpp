#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cubewords/word.hpp"

namespace cubewords {

// Character sum over a box, by closed form:
//   sum_{x in B} chi_S(x) = 0                        if some i in S has B_i = *
//                         = (-1)^s * 2^(n - |prop B|) otherwise,
// where s = |{i in S : B_i = 1}|.  Equals brute-force point enumeration.
BigInt char_sum_box(const PropSet& support, const Word& box);

// sum over the whole cube: 2^n for S = {} and 0 otherwise
BigInt char_sum_cube(const PropSet& support, int n);

struct TilingReport {
    bool is_tiling = false;
    // first pair of members whose boxes meet, in input order
    std::optional<std::pair<Word, Word>> overlap;
    // 2^n minus covered points; 0 for a tiling, meaningful when disjoint
    BigInt deficit = 0;
};

TilingReport verify_tiling(const std::vector<Word>& members, int n);

// Members minimal w.r.t. the order  v <= u iff prop v >= prop u,
// i.e. members whose prop set is not strictly contained in another member's.
std::vector<Word> minimal_members(const std::vector<Word>& members);

// Partition of [base] = {B : prop B = prop base} by the parity of
// |{i in prop base : base_i != B_i}|.  For a tiling with >= 2 members and
// minimal base, both sides have equal size.
struct EquivClassSplit {
    Word base;
    std::vector<Word> even_side;
    std::vector<Word> odd_side;
};

EquivClassSplit lemma1_split(const std::vector<Word>& tiling, const Word& base);

// Some member equivalent to `base` with odd disagreement on prop(base).
// Throws if none exists (not a tiling, base not minimal, or the single
// full-cube member tiling where the class is {base} alone).
Word odd_witness(const std::vector<Word>& tiling, const Word& base);

// Random tiling of {0,1}^n by recursive splitting: each box stops with
// probability stop_prob, otherwise splits on a uniformly random free
// coordinate.  The root always splits when n >= 1 so the result has at
// least two members and every member has nonempty prop.
std::vector<Word> random_tiling(int n, std::mt19937_64& rng, double stop_prob = 0.5);

}  // namespace cubewords
