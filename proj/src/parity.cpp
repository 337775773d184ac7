#include "cubewords/parity.hpp"

#include <stdexcept>

namespace cubewords {

using detail::BitVec;

BigInt char_sum_box(const PropSet& support, const Word& box) {
    if (support.universe() != box.length())
        throw std::invalid_argument("support does not match word length");
    BitVec stars_in_support = support.bits();
    stars_in_support.and_not(box.fixed_mask());
    if (stars_in_support.any()) return 0;
    BitVec ones = support.bits();
    ones &= box.value_mask();
    BigInt magnitude = BigInt(1) << box.free_count();
    return (ones.count() & 1) ? -magnitude : magnitude;
}

BigInt char_sum_cube(const PropSet& support, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (support.universe() != n)
        throw std::invalid_argument("support does not match cube dimension");
    if (support.empty_set()) return BigInt(1) << n;
    return 0;
}

TilingReport verify_tiling(const std::vector<Word>& members, int n) {
    TilingReport rep;
    for (const Word& w : members) {
        if (w.length() != n) throw std::invalid_argument("member length differs from n");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (clash_count(members[i], members[j]) == 0) {
                rep.is_tiling = false;
                rep.overlap = std::make_pair(members[i], members[j]);
                rep.deficit = 0;
                return rep;
            }
        }
    }
    BigInt covered = 0;
    for (const Word& w : members) covered += w.cardinality();
    rep.deficit = (BigInt(1) << n) - covered;
    rep.is_tiling = rep.deficit == 0;
    return rep;
}

std::vector<Word> minimal_members(const std::vector<Word>& members) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < members.size() && minimal; ++j) {
            if (j == i) continue;
            // members[j] strictly precedes members[i]: prop_j strictly contains prop_i
            if (members[i].fixed_mask().is_subset_of(members[j].fixed_mask()) &&
                members[i].fixed_mask() != members[j].fixed_mask())
                minimal = false;
        }
        if (minimal) out.push_back(members[i]);
    }
    return out;
}

static bool contains_word(const std::vector<Word>& ws, const Word& w) {
    for (const Word& x : ws)
        if (x == w) return true;
    return false;
}

EquivClassSplit lemma1_split(const std::vector<Word>& tiling, const Word& base) {
    if (!contains_word(tiling, base))
        throw std::invalid_argument("base word is not a member of the tiling");
    if (!contains_word(minimal_members(tiling), base))
        throw std::invalid_argument("base word is not minimal");
    EquivClassSplit split{base, {}, {}};
    for (const Word& b : tiling) {
        if (!equivalent(base, b)) continue;
        // prop b == prop base, so disagreements are exactly where values differ
        BitVec diff = base.value_mask() ^ b.value_mask();
        diff &= base.fixed_mask();
        if (diff.count() & 1)
            split.odd_side.push_back(b);
        else
            split.even_side.push_back(b);
    }
    return split;
}

Word odd_witness(const std::vector<Word>& tiling, const Word& base) {
    EquivClassSplit split = lemma1_split(tiling, base);
    if (split.odd_side.empty())
        throw std::runtime_error(
            "no member with odd disagreement: input is not a tiling with >= 2 members "
            "or the base is not minimal");
    return split.odd_side.front();
}

std::vector<Word> random_tiling(int n, std::mt19937_64& rng, double stop_prob) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::bernoulli_distribution stop(stop_prob);
    std::vector<Word> out;
    std::vector<std::pair<Word, bool>> stack;  // (box, may_stop)
    stack.emplace_back(Word::all_stars(n), false);
    while (!stack.empty()) {
        auto [w, may_stop] = stack.back();
        stack.pop_back();
        int free = w.free_count();
        if (free == 0 || (may_stop && stop(rng))) {
            out.push_back(w);
            continue;
        }
        std::uniform_int_distribution<int> pick(0, free - 1);
        int target = pick(rng);
        int split_pos = -1;
        for (int i = 0, seen = 0; i < n; ++i) {
            if (!w.fixed_mask().test(i)) {
                if (seen == target) {
                    split_pos = i;
                    break;
                }
                ++seen;
            }
        }
        detail::BitVec f0 = w.fixed_mask();
        f0.set(split_pos);
        detail::BitVec v1 = w.value_mask();
        v1.set(split_pos);
        stack.emplace_back(Word(n, f0, w.value_mask()), true);
        stack.emplace_back(Word(n, f0, v1), true);
    }
    return out;
}

}  // namespace cubewords
