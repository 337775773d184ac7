#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubewords/family.hpp"

namespace cubewords {

// alpha2 and alpha3 as a symmetric predicate on two words of equal prop size:
// exactly one clash and distinct prop sets.
bool compatible(const Word& v, const Word& u);

// C(n,k) * 2^k
BigInt universe_size(int n, int k);

// proven maximum family size for the declared k (1, 3, or 2^k - 2)
int theorem_cap(int k);

inline constexpr std::size_t exact_universe_cap = 200000;
// safety limit on candidate generation for bounded mode
inline constexpr std::size_t bounded_universe_cap = 5000000;

struct SearchProblem {
    int n = 0;
    int k = 0;
    // 0 = exact mode (requires universe <= exact_universe_cap);
    // otherwise branch-and-bound stops after roughly this many nodes
    std::uint64_t node_budget = 0;
    std::optional<WordFamily> seed;  // family to extend; must be alpha-valid
    int threads = 1;
};

struct SearchResult {
    WordFamily best_family;
    int size = 0;
    bool optimal = false;  // search tree exhausted (or theorem cap attained)
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

// Maximum alpha-valid family via branch and bound over the compatibility
// graph (maximum clique with greedy-coloring bounds and bitset adjacency).
// Without a seed the first word is fixed to 0^k *^(n-k) and second-member
// candidates are reduced to orbit representatives under its stabilizer.
SearchResult max_family(const SearchProblem& p);

// W' = {w *^n 0 : w in W} union {*^n w 1 : w in W}: parameters (2n+1, k+1),
// twice the size, alpha-validity checked on input and output.
WordFamily double_family(const WordFamily& w);

struct ProbeEntry {
    int n = 0;
    int size = 0;
    bool optimal = false;
    std::uint64_t nodes = 0;
    bool exceeds_conjecture = false;
};

struct ProbeReport {
    int k = 0;
    int conjectured_max = 0;  // (3/4) * 2^k
    int theorem_bound = 0;    // 2^k - 2
    std::vector<ProbeEntry> entries;
    std::optional<WordFamily> counterexample;  // first family above the conjectured max
};

// For each n, runs max_family (exact when the universe cap allows, else
// bounded by `budget` nodes) and flags any family larger than (3/4)*2^k.
// A seed family is used at the n matching its length.
ProbeReport conjecture_probe(int k, const std::vector<int>& ns, std::uint64_t budget,
                             const std::optional<WordFamily>& seed = std::nullopt,
                             int threads = 1);

}  // namespace cubewords
