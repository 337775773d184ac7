#include "cubewords/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubewords {

using detail::BitVec;

WordFamily make_family(std::vector<Word> words, int k) {
    if (words.empty()) throw std::invalid_argument("family must contain at least one word");
    int n = words.front().length();
    for (const Word& w : words)
        if (w.length() != n) throw std::invalid_argument("family words have mixed lengths");
    if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return WordFamily{std::move(words), n, k};
}

AlphaReport check_alpha(const WordFamily& f) {
    AlphaReport rep;
    for (const Word& w : f.words) {
        int p = w.prop_size();
        if (p != f.k) {
            rep.alpha1_ok = false;
            rep.violations.push_back({AlphaCondition::Alpha1, w, std::nullopt,
                                      "|prop|=" + std::to_string(p)});
        }
    }
    for (std::size_t i = 0; i < f.words.size(); ++i) {
        for (std::size_t j = i + 1; j < f.words.size(); ++j) {
            const Word& v = f.words[i];
            const Word& u = f.words[j];
            int clashes = clash_count(v, u);
            if (clashes != 1) {
                rep.alpha2_ok = false;
                rep.violations.push_back({AlphaCondition::Alpha2, v, u,
                                          "clashes=" + std::to_string(clashes)});
            }
            if (v.fixed_mask() == u.fixed_mask()) {
                rep.alpha3_ok = false;
                rep.violations.push_back({AlphaCondition::Alpha3, v, u, "equal props"});
            }
        }
    }
    return rep;
}

BigInt family_size_bound(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k == 1) return 1;
    if (k == 2) return 3;
    return (BigInt(1) << k) - 2;
}

SliceCounts slice_counts(const WordFamily& f, int pos) {
    if (pos < 0 || pos >= f.n) throw std::invalid_argument("position out of range");
    SliceCounts c;
    for (const Word& w : f.words) {
        switch (w.at(pos)) {
            case Symbol::Zero: ++c.zeros; break;
            case Symbol::One: ++c.ones; break;
            case Symbol::Star: ++c.stars; break;
        }
    }
    return c;
}

bool a1_assumption_holds(const WordFamily& f) {
    for (int i = 0; i < f.n; ++i) {
        SliceCounts c = slice_counts(f, i);
        if (c.zeros != c.ones || c.zeros == 0 || c.stars == 0) return false;
    }
    return true;
}

BigInt uncovered_count(const WordFamily& f) {
    AlphaReport rep = check_alpha(f);
    if (!rep.alpha1_ok || !rep.alpha2_ok)
        throw std::invalid_argument(
            "uncovered_count requires alpha1 and alpha2 (exact count needs equal-size "
            "pairwise-disjoint members)");
    return (BigInt(1) << f.n) - BigInt(f.size()) * (BigInt(1) << (f.n - f.k));
}

Canonicalization canonicalize(const WordFamily& f) {
    AlphaReport rep = check_alpha(f);
    if (!rep.alpha1_ok)
        throw std::invalid_argument("canonicalize requires alpha1 (|prop| = k everywhere)");
    const Word least = *std::min_element(f.words.begin(), f.words.end());

    // permutation sending prop(least) to the first k positions, order preserved
    Permutation perm;
    perm.source.reserve(f.n);
    for (int i = 0; i < f.n; ++i)
        if (least.fixed_mask().test(i)) perm.source.push_back(i);
    for (int i = 0; i < f.n; ++i)
        if (!least.fixed_mask().test(i)) perm.source.push_back(i);
    ElementaryOp perm_op{std::move(perm)};
    Word moved = apply_op(perm_op, least);

    // complement the '1' cells among the first k positions
    BitVec mask(f.n);
    for (int i = 0; i < f.k; ++i)
        if (moved.value_mask().test(i)) mask.set(i);
    ElementaryOp compl_op{Complementation{std::move(mask)}};

    std::vector<ElementaryOp> ops{perm_op, compl_op};
    std::vector<Word> image = apply_op_family(compl_op, apply_op_family(perm_op, f.words));
    return Canonicalization{make_family(std::move(image), f.k), std::move(ops)};
}

FiberView fiber_view(const WordFamily& f, const Word& delta) {
    if (f.k > max_fiber_k)
        throw std::invalid_argument("fiber enumeration limited to k <= 24");
    if (delta.length() != f.n - f.k)
        throw std::invalid_argument("delta must have length n-k");
    if (!delta.star_free()) throw std::invalid_argument("delta must be star-free");

    Canonicalization canon = canonicalize(f);

    // fiber word *^k delta in canonical coordinates
    BitVec fixed(f.n), value(f.n);
    for (int i = 0; i < f.n - f.k; ++i) {
        fixed.set(f.k + i);
        if (delta.at(i) == Symbol::One) value.set(f.k + i);
    }
    Word fiber(f.n, std::move(fixed), std::move(value));

    FiberView view{delta, {}, {}, {}, {}};
    std::vector<Word> restrictions_canonical;
    for (const Word& g : canon.family.words) {
        std::optional<Word> meet = intersect(g, fiber);
        if (!meet) continue;
        view.members.push_back(unapply_ops(canon.ops, g));
        view.restrictions.push_back(unapply_ops(canon.ops, *meet));
        restrictions_canonical.push_back(*meet);
    }

    // exact enumeration of the 2^k fiber points
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.k); ++bits) {
        BitVec pf(f.n), pv(f.n);
        for (int i = 0; i < f.n; ++i) pf.set(i);
        for (int i = 0; i < f.k; ++i)
            if ((bits >> i) & 1u) pv.set(i);
        for (int i = 0; i < f.n - f.k; ++i)
            if (delta.at(i) == Symbol::One) pv.set(f.k + i);
        Word point(f.n, std::move(pf), std::move(pv));
        bool covered = false;
        for (const Word& r : restrictions_canonical) {
            if (clash_count(r, point) == 0) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            view.uncovered.push_back(unapply_ops(canon.ops, point));
            view.ones_in_prefix.push_back(__builtin_popcountll(bits));
        }
    }
    return view;
}

}  // namespace cubewords
