#pragma once

// Independent brute-force oracles for the test suite.  Everything here works
// on plain strings over {0,1,*} and explicit point enumeration, deliberately
// avoiding the library's own representations and algorithms.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// all points of the box encoded by `w` as bitmasks (bit i = coordinate i)
inline std::vector<std::uint64_t> box_points(const std::string& w) {
    int n = static_cast<int>(w.size());
    std::vector<std::uint64_t> pts;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        bool in = true;
        for (int i = 0; i < n && in; ++i) {
            int bit = (x >> i) & 1u;
            if (w[i] == '0' && bit != 0) in = false;
            if (w[i] == '1' && bit != 1) in = false;
        }
        if (in) pts.push_back(x);
    }
    return pts;
}

inline std::set<std::uint64_t> box_point_set(const std::string& w) {
    auto v = box_points(w);
    return {v.begin(), v.end()};
}

// chi_S(x) summed over the box by explicit enumeration
inline long long char_sum_brute(std::uint64_t support_mask, const std::string& w) {
    long long sum = 0;
    for (std::uint64_t x : box_points(w))
        sum += (__builtin_popcountll(x & support_mask) & 1) ? -1 : 1;
    return sum;
}

inline std::string random_word(int n, std::mt19937_64& rng) {
    static const char syms[3] = {'0', '1', '*'};
    std::uniform_int_distribution<int> pick(0, 2);
    std::string s(n, '*');
    for (int i = 0; i < n; ++i) s[i] = syms[pick(rng)];
    return s;
}

// word with a prescribed number of fixed positions
inline std::string random_word_prop(int n, int prop, std::mt19937_64& rng) {
    std::string s(n, '*');
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < prop; ++t) s[idx[t]] = bit(rng) ? '1' : '0';
    return s;
}

inline int clash_count_str(const std::string& a, const std::string& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] == '0' && b[i] == '1') || (a[i] == '1' && b[i] == '0')) ++c;
    return c;
}

inline int prop_size_str(const std::string& a) {
    int c = 0;
    for (char ch : a)
        if (ch != '*') ++c;
    return c;
}

inline bool props_equal_str(const std::string& a, const std::string& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] == '*') != (b[i] == '*')) return false;
    return true;
}

inline bool alpha_valid_str(const std::vector<std::string>& words, int k) {
    for (const auto& w : words)
        if (prop_size_str(w) != k) return false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (clash_count_str(words[i], words[j]) != 1) return false;
            if (props_equal_str(words[i], words[j])) return false;
        }
    }
    return true;
}

// every word of length n over {0,1,*} with exactly k fixed positions
inline std::vector<std::string> universe_str(int n, int k) {
    std::vector<std::string> out;
    std::vector<std::string> stack{""};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        if (static_cast<int>(cur.size()) == n) {
            if (prop_size_str(cur) == k) out.push_back(cur);
            continue;
        }
        for (char c : {'*', '1', '0'}) stack.push_back(cur + c);
    }
    return out;
}

// maximum alpha-valid subset by full subset enumeration (universe <= ~20)
inline int naive_max_family(const std::vector<std::string>& universe, int k) {
    int m = static_cast<int>(universe.size());
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size <= best) continue;
        std::vector<std::string> sub;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) sub.push_back(universe[i]);
        if (alpha_valid_str(sub, k)) best = size;
    }
    return best;
}

// Maximum alpha-valid subset via plain Bron-Kerbosch with pivoting over the
// pairwise-compatibility graph.  No symmetry breaking, no bounds beyond the
// pivot rule; usable up to a few hundred words.
class BronKerbosch {
public:
    explicit BronKerbosch(const std::vector<std::string>& universe) {
        m_ = static_cast<int>(universe.size());
        adj_.assign(m_, std::vector<char>(m_, 0));
        for (int i = 0; i < m_; ++i) {
            for (int j = i + 1; j < m_; ++j) {
                bool ok = clash_count_str(universe[i], universe[j]) == 1 &&
                          !props_equal_str(universe[i], universe[j]);
                adj_[i][j] = adj_[j][i] = ok;
            }
        }
    }

    int max_clique() {
        best_ = 0;
        std::vector<int> p(m_);
        for (int i = 0; i < m_; ++i) p[i] = i;
        expand(0, p, {});
        return best_;
    }

private:
    void expand(int rsize, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            if (rsize > best_) best_ = rsize;
            return;
        }
        if (rsize + static_cast<int>(p.size()) <= best_) return;
        // pivot: vertex of p+x with the most neighbours in p
        int pivot = -1, pivot_deg = -1;
        for (const auto& pool : {p, x}) {
            for (int u : pool) {
                int deg = 0;
                for (int v : p) deg += adj_[u][v];
                if (deg > pivot_deg) {
                    pivot_deg = deg;
                    pivot = u;
                }
            }
        }
        std::vector<int> branch;
        for (int v : p)
            if (pivot < 0 || !adj_[pivot][v]) branch.push_back(v);
        for (int v : branch) {
            std::vector<int> p2, x2;
            for (int u : p)
                if (adj_[v][u]) p2.push_back(u);
            for (int u : x)
                if (adj_[v][u]) x2.push_back(u);
            expand(rsize + 1, std::move(p2), std::move(x2));
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    int m_ = 0;
    int best_ = 0;
    std::vector<std::vector<char>> adj_;
};

}  // namespace oracle
