#include "cubewords/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace cubewords {

bool compatible(const Word& v, const Word& u) {
    return clash_count(v, u) == 1 && v.fixed_mask() != u.fixed_mask();
}

BigInt universe_size(int n, int k) {
    BigInt c = 1;
    for (int i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c << k;
}

int theorem_cap(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k == 1) return 1;
    if (k == 2) return 3;
    if (k >= 31) return INT_MAX;
    return (1 << k) - 2;
}

namespace {

// all words of length n with |prop| = k, ordered by (prop set, value bits
// with the first prop position most significant)
std::vector<Word> generate_universe(int n, int k) {
    std::vector<Word> out;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
            detail::BitVec fixed(n), value(n);
            for (int t = 0; t < k; ++t) {
                fixed.set(comb[t]);
                if ((v >> (k - 1 - t)) & 1u) value.set(comb[t]);
            }
            out.emplace_back(n, std::move(fixed), std::move(value));
        }
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

struct Graph {
    int m = 0;
    int row_words = 0;
    std::vector<std::uint64_t> bits;

    void init(int m_) {
        m = m_;
        row_words = (m + 63) / 64;
        bits.assign(static_cast<std::size_t>(m) * row_words, 0);
    }
    std::uint64_t* row(int i) { return bits.data() + static_cast<std::size_t>(i) * row_words; }
    const std::uint64_t* row(int i) const {
        return bits.data() + static_cast<std::size_t>(i) * row_words;
    }
    void add_edge(int i, int j) {
        row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
        row(j)[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
};

int popcount_row(const std::uint64_t* p, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += __builtin_popcountll(p[i]);
    return c;
}

struct Shared {
    const Graph* g = nullptr;
    int base_size = 0;
    int cap = INT_MAX;
    std::uint64_t budget = 0;
    std::atomic<int> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted_budget{false};
    std::atomic<bool> cap_reached{false};
    std::mutex witness_mu;
    std::vector<int> best_stack;
};

class Worker {
public:
    Worker(Shared& sh) : sh_(sh), row_words_(sh.g->row_words) {}

    ~Worker() { drain(); }

    void run_root(int v, const std::vector<std::uint64_t>& pset) {
        stack_.clear();
        stack_.push_back(v);
        report(1);
        if (popcount_row(pset.data(), row_words_) > 0 && !sh_.stop.load(std::memory_order_relaxed))
            expand(pset.data(), 1);
        stack_.pop_back();
    }

private:
    void drain() {
        sh_.nodes.fetch_add(local_ - flushed_, std::memory_order_relaxed);
        flushed_ = local_;
    }

    void bump_nodes() {
        if ((++local_ & 4095) == 0) {
            drain();
            if (sh_.budget && sh_.nodes.load(std::memory_order_relaxed) >= sh_.budget) {
                sh_.exhausted_budget.store(true, std::memory_order_relaxed);
                sh_.stop.store(true, std::memory_order_relaxed);
            }
        }
    }

    void report(int depth) {
        int size = sh_.base_size + depth;
        int cur = sh_.best.load(std::memory_order_relaxed);
        if (size <= cur) return;
        std::lock_guard<std::mutex> lock(sh_.witness_mu);
        if (size > sh_.best.load(std::memory_order_relaxed)) {
            sh_.best.store(size, std::memory_order_relaxed);
            sh_.best_stack = stack_;
            if (size >= sh_.cap) {
                sh_.cap_reached.store(true, std::memory_order_relaxed);
                sh_.stop.store(true, std::memory_order_relaxed);
            }
        }
    }

    // Arenas are deques: growing them for deeper levels must not move the
    // rows that shallower frames still reference across recursive calls.
    std::vector<std::uint64_t>& depth_row(std::deque<std::vector<std::uint64_t>>& arena,
                                          int depth) {
        while (static_cast<int>(arena.size()) <= depth) arena.emplace_back(row_words_, 0);
        return arena[depth];
    }

    // Greedy coloring of P in index order; fills order/colors ascending by color.
    void color_sort(const std::uint64_t* P, std::vector<int>& order, std::vector<int>& colors) {
        order.clear();
        colors.clear();
        classes_used_ = 0;
        for (int w = 0; w < row_words_; ++w) {
            std::uint64_t x = P[w];
            while (x) {
                int v = (w << 6) + __builtin_ctzll(x);
                x &= x - 1;
                const std::uint64_t* nv = sh_.g->row(v);
                int c = 0;
                for (; c < classes_used_; ++c) {
                    const std::uint64_t* cls = class_bits_[c].data();
                    bool conflict = false;
                    for (int t = 0; t < row_words_; ++t)
                        if (cls[t] & nv[t]) {
                            conflict = true;
                            break;
                        }
                    if (!conflict) break;
                }
                if (c == classes_used_) {
                    if (static_cast<int>(class_bits_.size()) == classes_used_)
                        class_bits_.emplace_back(row_words_, 0);
                    std::fill(class_bits_[c].begin(), class_bits_[c].end(), 0);
                    ++classes_used_;
                }
                class_bits_[c][v >> 6] |= std::uint64_t{1} << (v & 63);
            }
        }
        for (int c = 0; c < classes_used_; ++c) {
            const auto& cls = class_bits_[c];
            for (int w = 0; w < row_words_; ++w) {
                std::uint64_t x = cls[w];
                while (x) {
                    int v = (w << 6) + __builtin_ctzll(x);
                    x &= x - 1;
                    order.push_back(v);
                    colors.push_back(c + 1);
                }
            }
        }
    }

    void expand(const std::uint64_t* P, int depth) {
        bump_nodes();
        if (sh_.stop.load(std::memory_order_relaxed)) return;

        auto& live = depth_row(p_arena_, depth);
        std::copy(P, P + row_words_, live.begin());

        auto& order = order_arena(depth);
        auto& colors = color_arena(depth);
        color_sort(live.data(), order, colors);

        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (sh_.stop.load(std::memory_order_relaxed)) return;
            int clique = sh_.base_size + depth;
            if (clique + colors[i] <= sh_.best.load(std::memory_order_relaxed)) return;
            int v = order[i];
            auto& child = depth_row(q_arena_, depth);
            const std::uint64_t* nv = sh_.g->row(v);
            bool nonempty = false;
            for (int t = 0; t < row_words_; ++t) {
                child[t] = live[t] & nv[t];
                nonempty |= child[t] != 0;
            }
            stack_.push_back(v);
            report(depth + 1);
            if (nonempty && !sh_.stop.load(std::memory_order_relaxed))
                expand(child.data(), depth + 1);
            stack_.pop_back();
            live[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    std::vector<int>& order_arena(int depth) {
        while (static_cast<int>(orders_.size()) <= depth) orders_.emplace_back();
        return orders_[depth];
    }
    std::vector<int>& color_arena(int depth) {
        while (static_cast<int>(colors_.size()) <= depth) colors_.emplace_back();
        return colors_[depth];
    }

    Shared& sh_;
    int row_words_;
    std::uint64_t local_ = 0, flushed_ = 0;
    std::vector<int> stack_;
    std::deque<std::vector<std::uint64_t>> p_arena_, q_arena_;
    std::deque<std::vector<int>> orders_, colors_;
    std::vector<std::vector<std::uint64_t>> class_bits_;
    int classes_used_ = 0;
};

// orbit invariant of a second member under the stabilizer of 0^k *^(n-k):
// symbol counts over the first k positions plus the fixed count of the tail
std::tuple<int, int, int, int> orbit_key(const Word& w, int k) {
    int zeros = 0, ones = 0, stars = 0, tail_fixed = 0;
    for (int i = 0; i < w.length(); ++i) {
        Symbol s = w.at(i);
        if (i < k) {
            if (s == Symbol::Zero) ++zeros;
            else if (s == Symbol::One) ++ones;
            else ++stars;
        } else if (s != Symbol::Star) {
            ++tail_fixed;
        }
    }
    return {zeros, ones, stars, tail_fixed};
}

}  // namespace

SearchResult max_family(const SearchProblem& p) {
    auto t0 = std::chrono::steady_clock::now();
    if (p.k < 1 || p.k >= p.n) throw std::invalid_argument("need 1 <= k < n");
    if (p.n > Word::max_length) throw std::invalid_argument("n exceeds supported maximum");
    bool exact = p.node_budget == 0;
    BigInt usize = universe_size(p.n, p.k);
    if (exact && usize > exact_universe_cap)
        throw std::invalid_argument(
            "universe C(n,k)*2^k exceeds the exact-mode cap of 200000; use bounded mode "
            "(--budget-nodes)");
    if (usize > bounded_universe_cap)
        throw std::invalid_argument("universe too large to enumerate; reduce n or k");

    std::vector<Word> universe = generate_universe(p.n, p.k);

    std::vector<Word> base;
    std::vector<Word> candidates;
    bool seedless = !p.seed.has_value();
    if (seedless) {
        Word u0 = universe.front();  // 0^k *^(n-k) is first in generation order
        base.push_back(u0);
        for (const Word& w : universe)
            if (compatible(u0, w)) candidates.push_back(w);
    } else {
        const WordFamily& seed = *p.seed;
        if (seed.n != p.n || seed.k != p.k)
            throw std::invalid_argument("seed family parameters do not match the problem");
        if (!check_alpha(seed).all_ok())
            throw std::invalid_argument("seed family is not alpha-valid");
        base = seed.words;
        for (const Word& w : universe) {
            bool ok = true;
            for (const Word& s : base) {
                if (w == s || !compatible(s, w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) candidates.push_back(w);
        }
    }

    int m = static_cast<int>(candidates.size());
    if (m > 60000)
        throw std::invalid_argument("candidate set too large for bitset adjacency");

    Graph g;
    g.init(std::max(m, 1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (compatible(candidates[i], candidates[j])) g.add_edge(i, j);

    Shared sh;
    sh.g = &g;
    sh.base_size = static_cast<int>(base.size());
    sh.cap = theorem_cap(p.k);
    sh.budget = p.node_budget;
    sh.best.store(sh.base_size);
    if (sh.base_size >= sh.cap) sh.cap_reached.store(true);

    // root branches; earlier branches' vertices are excluded from later ones
    struct Root {
        int v;
        std::vector<std::uint64_t> pset;
    };
    std::vector<Root> roots;
    if (!sh.cap_reached.load()) {
        std::vector<std::uint64_t> remaining(g.row_words, 0);
        for (int i = 0; i < m; ++i) remaining[i >> 6] |= std::uint64_t{1} << (i & 63);
        if (seedless) {
            std::vector<std::tuple<int, int, int, int>> seen;
            std::vector<std::vector<int>> orbit_members;
            std::vector<int> reps;
            for (int i = 0; i < m; ++i) {
                auto key = orbit_key(candidates[i], p.k);
                auto it = std::find(seen.begin(), seen.end(), key);
                if (it == seen.end()) {
                    seen.push_back(key);
                    orbit_members.emplace_back();
                    reps.push_back(i);
                }
                orbit_members[std::find(seen.begin(), seen.end(), key) - seen.begin()]
                    .push_back(i);
            }
            for (std::size_t o = 0; o < reps.size(); ++o) {
                int v = reps[o];
                Root r{v, std::vector<std::uint64_t>(g.row_words)};
                const std::uint64_t* nv = g.row(v);
                for (int t = 0; t < g.row_words; ++t) r.pset[t] = remaining[t] & nv[t];
                roots.push_back(std::move(r));
                for (int member : orbit_members[o])
                    remaining[member >> 6] &= ~(std::uint64_t{1} << (member & 63));
            }
        } else {
            for (int v = 0; v < m; ++v) {
                Root r{v, std::vector<std::uint64_t>(g.row_words)};
                const std::uint64_t* nv = g.row(v);
                for (int t = 0; t < g.row_words; ++t) r.pset[t] = remaining[t] & nv[t];
                roots.push_back(std::move(r));
                remaining[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            }
        }
    }

    int nthreads = std::max(1, std::min<int>(p.threads, static_cast<int>(roots.size())));
    std::atomic<std::size_t> cursor{0};
    auto drive = [&]() {
        Worker worker(sh);
        while (true) {
            std::size_t idx = cursor.fetch_add(1);
            if (idx >= roots.size() || sh.stop.load(std::memory_order_relaxed)) break;
            worker.run_root(roots[idx].v, roots[idx].pset);
        }
    };
    if (nthreads <= 1) {
        drive();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(drive);
        for (auto& th : pool) th.join();
    }

    std::vector<Word> best_words = base;
    for (int idx : sh.best_stack) best_words.push_back(candidates[idx]);
    WordFamily family = make_family(std::move(best_words), p.k);
    if (!check_alpha(family).all_ok())
        throw std::logic_error("search produced a family violating alpha conditions");
    if (family.size() > sh.cap)
        throw std::logic_error("search produced a family above the proven size bound");

    SearchResult res;
    res.best_family = std::move(family);
    res.size = sh.best.load();
    res.optimal = sh.cap_reached.load() || !sh.exhausted_budget.load();
    res.nodes = sh.nodes.load();
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.size != res.best_family.size())
        throw std::logic_error("search bookkeeping mismatch");
    return res;
}

WordFamily double_family(const WordFamily& w) {
    if (!check_alpha(w).all_ok())
        throw std::invalid_argument("doubling requires an alpha-valid family");
    int n = w.n;
    std::vector<Word> out;
    out.reserve(2 * w.words.size());
    for (const Word& v : w.words) {
        std::vector<Symbol> left(2 * n + 1, Symbol::Star);
        std::vector<Symbol> right(2 * n + 1, Symbol::Star);
        for (int i = 0; i < n; ++i) {
            left[i] = v.at(i);
            right[n + i] = v.at(i);
        }
        left[2 * n] = Symbol::Zero;
        right[2 * n] = Symbol::One;
        out.push_back(Word::from_cells(left));
        out.push_back(Word::from_cells(right));
    }
    WordFamily doubled = make_family(std::move(out), w.k + 1);
    if (doubled.size() != 2 * w.size())
        throw std::logic_error("doubling did not produce 2|W| distinct words");
    if (!check_alpha(doubled).all_ok())
        throw std::logic_error("doubled family violates alpha conditions");
    return doubled;
}

ProbeReport conjecture_probe(int k, const std::vector<int>& ns, std::uint64_t budget,
                             const std::optional<WordFamily>& seed, int threads) {
    if (k < 3) throw std::invalid_argument("conjecture probe requires k >= 3");
    ProbeReport rep;
    rep.k = k;
    rep.conjectured_max = 3 << (k - 2);
    rep.theorem_bound = theorem_cap(k);
    for (int n : ns) {
        SearchProblem p;
        p.n = n;
        p.k = k;
        p.threads = threads;
        if (universe_size(n, k) > exact_universe_cap) p.node_budget = budget ? budget : 1;
        if (seed && seed->n == n && seed->k == k) p.seed = seed;
        SearchResult r = max_family(p);
        ProbeEntry e{n, r.size, r.optimal, r.nodes, r.size > rep.conjectured_max};
        rep.entries.push_back(e);
        if (e.exceeds_conjecture && !rep.counterexample) rep.counterexample = r.best_family;
    }
    return rep;
}

}  // namespace cubewords
