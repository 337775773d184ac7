#include <doctest.h>

#include <random>

#include "cubewords/family.hpp"
#include "cubewords/parity.hpp"
#include "cubewords/search.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cubewords;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

WordFamily F(std::initializer_list<const char*> ws, int k) {
    std::vector<Word> out;
    for (const char* s : ws) out.push_back(W(s));
    return make_family(out, k);
}

}  // namespace

TEST_CASE("make_family validates and dedupes") {
    WordFamily f = F({"00*", "00*", "1*1"}, 2);
    CHECK(f.size() == 2);
    CHECK(f.n == 3);
    CHECK_THROWS_AS(make_family({W("0*"), W("0**")}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_family({}, 1), std::invalid_argument);
}

TEST_CASE("check_alpha on the 3-word k=2 family") {
    AlphaReport rep = check_alpha(fixtures::paper_k2_family());
    CHECK(rep.all_ok());
    CHECK(rep.violations.empty());
}

TEST_CASE("check_alpha reports violations with witnesses") {
    // same star pattern: alpha2 holds (one clash) but alpha3 fails
    AlphaReport rep = check_alpha(F({"00*", "01*"}, 2));
    CHECK(rep.alpha1_ok);
    CHECK(rep.alpha2_ok);
    CHECK(!rep.alpha3_ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].condition == AlphaCondition::Alpha3);

    // |prop| = 3 != k for the second word
    AlphaReport rep2 = check_alpha(F({"00*", "110"}, 2));
    CHECK(!rep2.alpha1_ok);
    bool found = false;
    for (const auto& v : rep2.violations)
        if (v.condition == AlphaCondition::Alpha1 && v.a.str() == "110") found = true;
    CHECK(found);

    // overlap: zero clashes
    AlphaReport rep3 = check_alpha(F({"00*", "0**"}, 2));
    CHECK(!rep3.alpha2_ok);
}

TEST_CASE("family size bound per k") {
    CHECK(family_size_bound(1) == 1);
    CHECK(family_size_bound(2) == 3);
    CHECK(family_size_bound(3) == 6);
    CHECK(family_size_bound(10) == 1022);
}

TEST_CASE("slice counts and the A1 assumption") {
    WordFamily f = fixtures::paper_k2_family();
    for (int i = 0; i < 3; ++i) {
        SliceCounts c = slice_counts(f, i);
        CHECK(c.zeros == 1);
        CHECK(c.ones == 1);
        CHECK(c.stars == 1);
    }
    CHECK(a1_assumption_holds(f));

    WordFamily single = F({"00*"}, 2);
    SliceCounts c = slice_counts(single, 1);
    CHECK(c.zeros == 1);
    CHECK(c.ones == 0);
    CHECK(c.stars == 0);
    CHECK(!a1_assumption_holds(single));
}

TEST_CASE("uncovered_count") {
    CHECK(uncovered_count(fixtures::paper_k2_family()) == 2);
    CHECK(uncovered_count(F({"0*"}, 1)) == 2);
    WordFamily doubled = double_family(fixtures::paper_k2_family());
    CHECK(doubled.n == 7);
    CHECK(uncovered_count(doubled) == 32);
    // and the exact uncovered count matches point enumeration
    std::set<std::uint64_t> covered;
    for (const Word& w : doubled.words)
        for (std::uint64_t p : oracle::box_points(w.str())) covered.insert(p);
    CHECK(BigInt(128 - covered.size()) == uncovered_count(doubled));
    CHECK_THROWS_AS(uncovered_count(F({"00*", "0**"}, 2)), std::invalid_argument);
}

TEST_CASE("canonicalize maps the least word to 0^k *^(n-k)") {
    auto c1 = canonicalize(F({"1*1"}, 2));
    CHECK(c1.family.words.size() == 1);
    CHECK(c1.family.words[0].str() == "00*");

    auto c2 = canonicalize(F({"00*"}, 2));
    CHECK(c2.family.words[0].str() == "00*");

    auto c3 = canonicalize(fixtures::paper_k2_family());
    bool has_u0 = false;
    for (const Word& w : c3.family.words) has_u0 |= w.str() == "00*";
    CHECK(has_u0);
    CHECK(check_alpha(c3.family).all_ok());

    // ops round-trip between original and canonical coordinates
    WordFamily f = fixtures::paper_k2_family();
    auto c = canonicalize(f);
    for (const Word& w : f.words) {
        Word img = apply_ops(c.ops, w);
        CHECK(unapply_ops(c.ops, img) == w);
    }
}

TEST_CASE("alpha status is invariant under elementary operations") {
    std::mt19937_64 rng(9001);
    std::vector<WordFamily> families = {
        fixtures::paper_k2_family(),
        F({"00*", "01*"}, 2),
        F({"00*", "110"}, 2),
        double_family(fixtures::paper_k2_family()),
    };
    for (const WordFamily& f : families) {
        AlphaReport before = check_alpha(f);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> src(f.n);
            for (int i = 0; i < f.n; ++i) src[i] = i;
            std::shuffle(src.begin(), src.end(), rng);
            std::vector<int> flips;
            for (int i = 0; i < f.n; ++i)
                if (rng() & 1) flips.push_back(i);
            auto words = apply_op_family(ElementaryOp{Permutation{src}}, f.words);
            words = apply_op_family(ElementaryOp::complement_at(f.n, flips), words);
            AlphaReport after = check_alpha(make_family(words, f.k));
            CHECK(after.alpha1_ok == before.alpha1_ok);
            CHECK(after.alpha2_ok == before.alpha2_ok);
            CHECK(after.alpha3_ok == before.alpha3_ok);
        }
    }
}

TEST_CASE("fiber view of the k=2 family at delta=0") {
    WordFamily f = fixtures::paper_k2_family();
    FiberView v = fiber_view(f, W("0"));
    // members meeting the fiber **0: 00* and *10
    REQUIRE(v.members.size() == 2);
    CHECK(v.members[0].str() == "00*");
    CHECK(v.members[1].str() == "*10");
    CHECK(v.restrictions[0].str() == "000");
    CHECK(v.restrictions[1].str() == "*10");
    REQUIRE(v.uncovered.size() == 1);
    CHECK(v.uncovered[0].str() == "100");
    CHECK(v.ones_in_prefix[0] == 1);

    FiberView v1 = fiber_view(f, W("1"));
    CHECK(v1.uncovered.size() == 1);
}

TEST_CASE("fiber view tolerates alpha2 violations (diagnostics use)") {
    // not alpha-valid ({00*, 11*} clashes twice) but alpha1 holds
    WordFamily f = F({"00*", "11*"}, 2);
    FiberView v = fiber_view(f, W("1"));
    std::vector<std::string> uncovered;
    for (const Word& w : v.uncovered) uncovered.push_back(w.str());
    std::sort(uncovered.begin(), uncovered.end());
    CHECK(uncovered == std::vector<std::string>{"011", "101"});
    CHECK(v.ones_in_prefix.size() == 2);
}

TEST_CASE("fibers partition the uncovered set") {
    std::vector<WordFamily> families = {fixtures::paper_k2_family(),
                                        double_family(fixtures::paper_k2_family())};
    for (const WordFamily& f : families) {
        BigInt total = 0;
        int tail = f.n - f.k;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << tail); ++bits) {
            FiberView v = fiber_view(f, Word::point(tail, bits));
            total += static_cast<int>(v.uncovered.size());
        }
        CHECK(total == uncovered_count(f));
    }
}

TEST_CASE("fiber view rejects bad deltas") {
    WordFamily f = fixtures::paper_k2_family();
    CHECK_THROWS_AS(fiber_view(f, W("00")), std::invalid_argument);
    CHECK_THROWS_AS(fiber_view(f, W("*")), std::invalid_argument);
}

TEST_CASE("uncovered count vs the size bound, as the formula ties them") {
    // for alpha-valid families: uncovered >= 2^(n-k+1) iff size <= 2^k - 2
    std::vector<WordFamily> families = {double_family(fixtures::paper_k2_family()),
                                        double_family(double_family(fixtures::paper_k2_family()))};
    for (const WordFamily& f : families) {
        BigInt uncovered = uncovered_count(f);
        bool lhs = uncovered >= (BigInt(1) << (f.n - f.k + 1));
        bool rhs = BigInt(f.size()) <= (BigInt(1) << f.k) - 2;
        CHECK(lhs == rhs);
        CHECK(uncovered % (BigInt(1) << (f.n - f.k)) == 0);
    }
}
