#include "cubewords/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubewords {

using detail::BitVec;

Word Word::parse(std::string_view text) {
    int n = static_cast<int>(text.size());
    if (n < 1) throw std::invalid_argument("empty word");
    if (n > max_length) throw std::invalid_argument("word longer than supported maximum");
    BitVec fixed(n), value(n);
    for (int i = 0; i < n; ++i) {
        switch (text[i]) {
            case '0': fixed.set(i); break;
            case '1': fixed.set(i); value.set(i); break;
            case '*': break;
            default:
                throw std::invalid_argument(std::string("invalid word character '") +
                                            text[i] + "'");
        }
    }
    return Word(n, std::move(fixed), std::move(value));
}

Word Word::all_stars(int n) {
    if (n < 1 || n > max_length) throw std::invalid_argument("bad word length");
    return Word(n, BitVec(n), BitVec(n));
}

Word Word::point(int n, std::uint64_t bits) {
    if (n < 1 || n > max_length) throw std::invalid_argument("bad word length");
    BitVec fixed(n), value(n);
    for (int i = 0; i < n; ++i) {
        fixed.set(i);
        if (i < 64 && ((bits >> i) & 1u)) value.set(i);
    }
    return Word(n, std::move(fixed), std::move(value));
}

Word Word::from_cells(const std::vector<Symbol>& cells) {
    int n = static_cast<int>(cells.size());
    if (n < 1 || n > max_length) throw std::invalid_argument("bad word length");
    BitVec fixed(n), value(n);
    for (int i = 0; i < n; ++i) {
        if (cells[i] != Symbol::Star) {
            fixed.set(i);
            if (cells[i] == Symbol::One) value.set(i);
        }
    }
    return Word(n, std::move(fixed), std::move(value));
}

std::string Word::str() const {
    std::string s(n_, '*');
    for (int i = 0; i < n_; ++i) {
        if (fixed_.test(i)) s[i] = value_.test(i) ? '1' : '0';
    }
    return s;
}

bool Word::operator<(const Word& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (int i = 0; i < n_; ++i) {
        auto rank = [](Symbol s) { return static_cast<int>(s); };  // 0 < 1 < *
        int a = rank(at(i)), b = rank(o.at(i));
        if (a != b) return a < b;
    }
    return false;
}

PropSet PropSet::of(int n, const std::vector<int>& positions) {
    BitVec b(n);
    for (int p : positions) {
        if (p < 0 || p >= n) throw std::invalid_argument("position out of range");
        b.set(p);
    }
    return PropSet(std::move(b));
}

std::vector<int> PropSet::positions() const {
    std::vector<int> out;
    bits_.for_each_set([&](int i) { out.push_back(i); });
    return out;
}

std::string PropSet::str() const {
    std::string s = "{";
    bool first = true;
    bits_.for_each_set([&](int i) {
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
    });
    s += '}';
    return s;
}

PropSet prop(const Word& w) { return PropSet(w.fixed_mask()); }
BigInt cardinality(const Word& w) { return w.cardinality(); }

static void require_same_length(const Word& v, const Word& u) {
    if (v.length() != u.length())
        throw std::invalid_argument("words have different lengths");
}

std::optional<Word> intersect(const Word& v, const Word& u) {
    require_same_length(v, u);
    BitVec conflict = v.fixed_mask();
    conflict &= u.fixed_mask();
    conflict &= v.value_mask() ^ u.value_mask();
    if (conflict.any()) return std::nullopt;
    BitVec fixed = v.fixed_mask() | u.fixed_mask();
    BitVec value = v.value_mask() | u.value_mask();
    return Word(v.length(), std::move(fixed), std::move(value));
}

PropSet clash_positions(const Word& v, const Word& u) {
    require_same_length(v, u);
    BitVec c = v.fixed_mask();
    c &= u.fixed_mask();
    c &= v.value_mask() ^ u.value_mask();
    return PropSet(std::move(c));
}

int clash_count(const Word& v, const Word& u) {
    require_same_length(v, u);
    BitVec c = v.fixed_mask();
    c &= u.fixed_mask();
    c &= v.value_mask() ^ u.value_mask();
    return c.count();
}

bool equivalent(const Word& v, const Word& u) {
    require_same_length(v, u);
    return v.fixed_mask() == u.fixed_mask();
}

bool precedes(const Word& v, const Word& u) {
    require_same_length(v, u);
    return u.fixed_mask().is_subset_of(v.fixed_mask());
}

ElementaryOp ElementaryOp::swap_positions(int n, int a, int b) {
    Permutation p;
    p.source.resize(n);
    for (int i = 0; i < n; ++i) p.source[i] = i;
    std::swap(p.source[a], p.source[b]);
    return ElementaryOp(std::move(p));
}

ElementaryOp ElementaryOp::complement_at(int n, const std::vector<int>& positions) {
    Complementation c{BitVec(n)};
    for (int p : positions) {
        if (p < 0 || p >= n) throw std::invalid_argument("position out of range");
        c.mask.set(p);
    }
    return ElementaryOp(std::move(c));
}

ElementaryOp ElementaryOp::identity(int n) {
    Permutation p;
    p.source.resize(n);
    for (int i = 0; i < n; ++i) p.source[i] = i;
    return ElementaryOp(std::move(p));
}

int ElementaryOp::length() const {
    if (is_permutation()) return static_cast<int>(permutation().source.size());
    return complementation().mask.size();
}

ElementaryOp ElementaryOp::inverse() const {
    if (!is_permutation()) return *this;  // complementation is an involution
    const auto& src = permutation().source;
    Permutation inv;
    inv.source.resize(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) inv.source[src[j]] = static_cast<int>(j);
    return ElementaryOp(std::move(inv));
}

Word apply_op(const ElementaryOp& op, const Word& w) {
    if (op.length() != w.length())
        throw std::invalid_argument("operation length does not match word length");
    int n = w.length();
    if (op.is_permutation()) {
        const auto& src = op.permutation().source;
        BitVec fixed(n), value(n);
        for (int j = 0; j < n; ++j) {
            int i = src[j];
            if (w.fixed_mask().test(i)) {
                fixed.set(j);
                if (w.value_mask().test(i)) value.set(j);
            }
        }
        return Word(n, std::move(fixed), std::move(value));
    }
    // complement where masked and fixed; stars are untouched
    BitVec flips = op.complementation().mask;
    flips &= w.fixed_mask();
    BitVec value = w.value_mask();
    value ^= flips;
    return Word(n, w.fixed_mask(), std::move(value));
}

std::vector<Word> apply_op_family(const ElementaryOp& op, const std::vector<Word>& words) {
    std::vector<Word> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(apply_op(op, w));
    return out;
}

Word apply_ops(const std::vector<ElementaryOp>& ops, const Word& w) {
    Word cur = w;
    for (const auto& op : ops) cur = apply_op(op, cur);
    return cur;
}

Word unapply_ops(const std::vector<ElementaryOp>& ops, const Word& w) {
    Word cur = w;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) cur = apply_op(it->inverse(), cur);
    return cur;
}

}  // namespace cubewords
