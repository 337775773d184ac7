#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubewords/word.hpp"

namespace cubewords {

// A set of words of common length n with a declared prop size k.
// Words are kept sorted and unique.
struct WordFamily {
    std::vector<Word> words;
    int n = 0;
    int k = 0;

    int size() const { return static_cast<int>(words.size()); }
};

// Validates equal lengths, sorts and removes duplicates.
WordFamily make_family(std::vector<Word> words, int k);

enum class AlphaCondition { Alpha1, Alpha2, Alpha3 };

struct AlphaViolation {
    AlphaCondition condition;
    Word a;
    std::optional<Word> b;  // set for the pairwise conditions
    std::string detail;
};

struct AlphaReport {
    bool alpha1_ok = true;
    bool alpha2_ok = true;
    bool alpha3_ok = true;
    std::vector<AlphaViolation> violations;

    bool all_ok() const { return alpha1_ok && alpha2_ok && alpha3_ok; }
};

// alpha1: |prop v| = k for every member;
// alpha2: distinct members clash in exactly one position;
// alpha3: distinct members have distinct prop sets.
// All violations are reported, not just the first.
AlphaReport check_alpha(const WordFamily& f);

// Largest family size permitted for the declared k: 1 for k=1, 3 for k=2,
// 2^k - 2 for k >= 3.
BigInt family_size_bound(int k);

struct SliceCounts {
    int zeros = 0;
    int ones = 0;
    int stars = 0;
};

SliceCounts slice_counts(const WordFamily& f, int pos);

// |V^{i0}| = |V^{i1}| != 0 and V^{i*} nonempty, for every position i.
bool a1_assumption_holds(const WordFamily& f);

// 2^n - |F| * 2^(n-k); requires alpha1 and alpha2 (members pairwise disjoint).
BigInt uncovered_count(const WordFamily& f);

// Elementary-op image of the family in which the lexicographically least
// word becomes 0^k *^(n-k), together with the ops used (applied in order).
struct Canonicalization {
    WordFamily family;
    std::vector<ElementaryOp> ops;
};

Canonicalization canonicalize(const WordFamily& f);

// Exact diagnostics for the fiber *...*delta (stars on the first k canonical
// coordinates, delta on the last n-k).  The family is canonicalized
// internally; members, restrictions and uncovered points are reported in the
// original coordinates.  ones_in_prefix counts '1's among the first k
// canonical coordinates of each uncovered point.
struct FiberView {
    Word delta;
    std::vector<Word> members;       // A^delta
    std::vector<Word> restrictions;  // B^delta, aligned with members
    std::vector<Word> uncovered;     // U^delta as points
    std::vector<int> ones_in_prefix;  // aligned with uncovered
};

FiberView fiber_view(const WordFamily& f, const Word& delta);

// largest k for which fiber enumeration (2^k points) is permitted
inline constexpr int max_fiber_k = 24;

}  // namespace cubewords
