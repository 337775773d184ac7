#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubewords/bits.hpp"

namespace cubewords {

using BigInt = boost::multiprecision::cpp_int;

enum class Symbol : unsigned char { Zero, One, Star };

// A word over {0,1,*} encoding the box B_1 x ... x B_n contained in {0,1}^n,
// with {0} <-> '0', {1} <-> '1', {0,1} <-> '*'.  Immutable after construction.
// Positions are 0-based throughout the API; 1-based only in rendered text.
class Word {
public:
    static constexpr int max_length = 1024;

    static Word parse(std::string_view text);
    static Word all_stars(int n);
    // star-free word from the low `n` bits of `bits` (bit i -> position i)
    static Word point(int n, std::uint64_t bits);
    static Word from_cells(const std::vector<Symbol>& cells);

    int length() const { return n_; }
    Symbol at(int i) const {
        return fixed_.test(i) ? (value_.test(i) ? Symbol::One : Symbol::Zero) : Symbol::Star;
    }
    std::string str() const;

    // prop(w) as a mask of fixed positions
    const detail::BitVec& fixed_mask() const { return fixed_; }
    // values at fixed positions ('1' bits); zero elsewhere
    const detail::BitVec& value_mask() const { return value_; }

    int prop_size() const { return fixed_.count(); }
    int free_count() const { return n_ - prop_size(); }
    bool star_free() const { return free_count() == 0; }
    BigInt cardinality() const { return BigInt(1) << free_count(); }

    bool operator==(const Word& o) const {
        return n_ == o.n_ && fixed_ == o.fixed_ && value_ == o.value_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }
    // lexicographic with symbol order 0 < 1 < *
    bool operator<(const Word& o) const;

    Word(int n, detail::BitVec fixed, detail::BitVec value)
        : n_(n), fixed_(std::move(fixed)), value_(std::move(value)) {
        value_ &= fixed_;  // value bits are only meaningful at fixed positions
    }

private:
    int n_ = 0;
    detail::BitVec fixed_;
    detail::BitVec value_;
};

// Set of coordinate positions, e.g. prop(w).
class PropSet {
public:
    PropSet() = default;
    explicit PropSet(detail::BitVec bits) : bits_(std::move(bits)) {}
    static PropSet of(int n, const std::vector<int>& positions);
    static PropSet empty(int n) { return PropSet(detail::BitVec(n)); }

    int universe() const { return bits_.size(); }
    int size() const { return bits_.count(); }
    bool contains(int i) const { return bits_.test(i); }
    bool empty_set() const { return bits_.none(); }
    std::vector<int> positions() const;
    std::string str() const;  // 1-based, e.g. "{1,3}"

    const detail::BitVec& bits() const { return bits_; }

    bool operator==(const PropSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const PropSet& o) const { return !(*this == o); }
    bool subset_of(const PropSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool superset_of(const PropSet& o) const { return o.bits_.is_subset_of(bits_); }

private:
    detail::BitVec bits_;
};

PropSet prop(const Word& w);
BigInt cardinality(const Word& w);

// Cellwise meet; nullopt iff the boxes are disjoint.
std::optional<Word> intersect(const Word& v, const Word& u);

// {i : {v_i, u_i} = {0,1}}; nonempty iff the boxes are disjoint.
PropSet clash_positions(const Word& v, const Word& u);
int clash_count(const Word& v, const Word& u);

bool equivalent(const Word& v, const Word& u);  // prop v == prop u
bool precedes(const Word& v, const Word& u);    // v <= u  iff  prop v >= prop u

// Elementary operations: coordinate permutations and per-coordinate
// complementations (0 <-> 1, * fixed).  Both preserve cardinality, |prop|,
// pairwise clash counts and equivalence.
struct Permutation {
    // result position j takes input position source[j]
    std::vector<int> source;
};
struct Complementation {
    detail::BitVec mask;
};

class ElementaryOp {
public:
    ElementaryOp(Permutation p) : op_(std::move(p)) {}
    ElementaryOp(Complementation c) : op_(std::move(c)) {}

    static ElementaryOp swap_positions(int n, int a, int b);
    static ElementaryOp complement_at(int n, const std::vector<int>& positions);
    static ElementaryOp identity(int n);

    int length() const;
    ElementaryOp inverse() const;
    bool is_permutation() const { return std::holds_alternative<Permutation>(op_); }
    const Permutation& permutation() const { return std::get<Permutation>(op_); }
    const Complementation& complementation() const { return std::get<Complementation>(op_); }

private:
    std::variant<Permutation, Complementation> op_;
};

Word apply_op(const ElementaryOp& op, const Word& w);
std::vector<Word> apply_op_family(const ElementaryOp& op, const std::vector<Word>& words);
Word apply_ops(const std::vector<ElementaryOp>& ops, const Word& w);
// Undo a sequence of ops (applied first-to-last) on a word in image coordinates.
Word unapply_ops(const std::vector<ElementaryOp>& ops, const Word& w);

}  // namespace cubewords
