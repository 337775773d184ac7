// cubewords: exact tools for families of disjoint sub-boxes of {0,1}^n
// encoded as words over {0,1,*}.
//
// Exit codes: 0 = property holds / run completed, 1 = property violated
// (witness printed), 2 = usage or parse error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubewords/family.hpp"
#include "cubewords/geometry.hpp"
#include "cubewords/io.hpp"
#include "cubewords/parity.hpp"
#include "cubewords/search.hpp"
#include "cubewords/word.hpp"

using namespace cubewords;

namespace {

constexpr std::uint64_t default_seed = 12648430;

struct Options {
    bool deterministic = false;
    std::uint64_t seed = default_seed;
    int threads = 1;
};

std::string condition_name(AlphaCondition c) {
    switch (c) {
        case AlphaCondition::Alpha1: return "alpha1";
        case AlphaCondition::Alpha2: return "alpha2";
        case AlphaCondition::Alpha3: return "alpha3";
    }
    return "?";
}

void print_alpha_report(std::ostream& out, const AlphaReport& rep) {
    out << "alpha1=" << (rep.alpha1_ok ? "ok" : "fail") << '\n';
    out << "alpha2=" << (rep.alpha2_ok ? "ok" : "fail") << '\n';
    out << "alpha3=" << (rep.alpha3_ok ? "ok" : "fail") << '\n';
    for (const auto& v : rep.violations) {
        out << "violation=" << condition_name(v.condition) << " a=" << v.a.str();
        if (v.b) out << " b=" << v.b->str();
        out << " detail=" << v.detail << '\n';
    }
}

WordFamily family_from_file(const std::string& path, int k) {
    return make_family(io::read_words_file(path), k);
}

int infer_k(const std::vector<Word>& words) {
    int k = words.front().prop_size();
    for (const Word& w : words)
        if (w.prop_size() != k)
            throw std::invalid_argument(
                "cannot infer k: members have different |prop| sizes");
    return k;
}

std::vector<int> parse_support(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int pos = std::stoi(tok);
        if (pos < 1 || pos > n)
            throw std::invalid_argument("support position " + tok + " out of range 1.." +
                                        std::to_string(n));
        out.push_back(pos - 1);
    }
    return out;
}

int run_verify_family(const std::string& path, int k) {
    WordFamily f = family_from_file(path, k);
    AlphaReport rep = check_alpha(f);
    BigInt bound = family_size_bound(k);
    bool within = BigInt(f.size()) <= bound;
    std::ostringstream out;
    out << "n=" << f.n << " k=" << f.k << " size=" << f.size() << '\n';
    print_alpha_report(out, rep);
    out << "bound=" << bound.str() << '\n';
    out << "within_bound=" << (within ? "true" : "false") << '\n';
    bool pass = rep.all_ok() && within;
    out << "result=" << (pass ? "pass" : "fail") << '\n';
    std::cout << out.str();
    return pass ? 0 : 1;
}

int run_verify_tiling(const std::string& path) {
    std::vector<Word> words = io::read_words_file(path);
    int n = words.front().length();
    TilingReport rep = verify_tiling(words, n);
    std::ostringstream out;
    out << "n=" << n << " size=" << words.size() << '\n';
    out << "tiling=" << (rep.is_tiling ? "true" : "false") << '\n';
    if (rep.overlap)
        out << "overlap=" << rep.overlap->first.str() << ',' << rep.overlap->second.str()
            << '\n';
    else if (rep.deficit != 0)
        out << "deficit=" << rep.deficit.str() << '\n';
    out << "result=" << (rep.is_tiling ? "pass" : "fail") << '\n';
    std::cout << out.str();
    return rep.is_tiling ? 0 : 1;
}

int check_one_tiling(std::ostream& out, const std::vector<Word>& words, int n,
                     bool print_members) {
    TilingReport rep = verify_tiling(words, n);
    if (!rep.is_tiling) {
        out << "tiling=false\n";
        if (rep.overlap)
            out << "overlap=" << rep.overlap->first.str() << ','
                << rep.overlap->second.str() << '\n';
        else
            out << "deficit=" << rep.deficit.str() << '\n';
        return 1;
    }
    if (print_members) out << "tiling=true\n";
    if (words.size() == 1) {
        out << "degenerate=true\n";
        out << "# single full-cube member; the parity law needs at least two members\n";
        return 0;
    }
    bool all_balanced = true;
    for (const Word& a : minimal_members(words)) {
        EquivClassSplit split = lemma1_split(words, a);
        bool balanced = split.even_side.size() == split.odd_side.size();
        all_balanced &= balanced;
        if (print_members)
            out << "minimal=" << a.str() << " even=" << split.even_side.size()
                << " odd=" << split.odd_side.size()
                << " balanced=" << (balanced ? "true" : "false") << '\n';
    }
    return all_balanced ? 0 : 1;
}

int run_lemma1_check(const std::string& path, int random_count, int random_n,
                     const Options& opt) {
    std::ostringstream out;
    int rc = 0;
    if (!path.empty()) {
        std::vector<Word> words = io::read_words_file(path);
        int n = words.front().length();
        out << "n=" << n << " size=" << words.size() << '\n';
        rc = check_one_tiling(out, words, n, true);
    } else {
        std::mt19937_64 rng(opt.seed);
        out << "mode=random tilings=" << random_count << " n=" << random_n
            << " seed=" << opt.seed << '\n';
        for (int t = 0; t < random_count && rc == 0; ++t) {
            std::vector<Word> words = random_tiling(random_n, rng);
            int r = check_one_tiling(out, words, random_n, false);
            if (r != 0) {
                out << "failing_index=" << t << '\n';
                rc = r;
            }
        }
    }
    out << "lemma1=" << (rc == 0 ? "ok" : "violated") << '\n';
    out << "result=" << (rc == 0 ? "pass" : "fail") << '\n';
    std::cout << out.str();
    return rc;
}

int run_char_sum(const std::string& support_text, const std::string& word_text, int cube_n) {
    std::ostringstream out;
    if (!word_text.empty()) {
        Word w = Word::parse(word_text);
        PropSet s = PropSet::of(w.length(), parse_support(support_text, w.length()));
        out << "sum=" << char_sum_box(s, w).str() << '\n';
    } else {
        PropSet s = PropSet::of(cube_n, parse_support(support_text, cube_n));
        out << "sum=" << char_sum_cube(s, cube_n).str() << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_search_max(int n, int k, std::uint64_t budget, const std::string& seed_file,
                   const std::string& out_file, const Options& opt) {
    SearchProblem p;
    p.n = n;
    p.k = k;
    p.node_budget = budget;
    p.threads = opt.threads;
    if (!seed_file.empty()) {
        std::vector<Word> seed_words = io::read_words_file(seed_file);
        p.seed = make_family(seed_words, infer_k(seed_words));
    }
    SearchResult r = max_family(p);
    std::ostringstream out;
    out << "n=" << n << " k=" << k << " size=" << r.size
        << " optimal=" << (r.optimal ? "true" : "false");
    if (!opt.deterministic) out << " nodes=" << r.nodes;
    out << '\n';
    if (!opt.deterministic)
        out << "elapsed_ms=" << static_cast<long long>(r.elapsed_seconds * 1000) << '\n';
    for (const Word& w : r.best_family.words) out << w.str() << '\n';
    std::cout << out.str();
    if (!out_file.empty()) {
        std::ostringstream comment;
        comment << "n=" << n << " k=" << k << " size=" << r.size;
        io::write_words_file(out_file, r.best_family.words, comment.str());
    }
    return 0;
}

int run_construct_double(const std::string& path, const std::string& out_file) {
    std::vector<Word> words = io::read_words_file(path);
    WordFamily f = make_family(words, infer_k(words));
    WordFamily d = double_family(f);
    std::ostringstream out;
    out << "n=" << d.n << " k=" << d.k << " size=" << d.size() << '\n';
    for (const Word& w : d.words) out << w.str() << '\n';
    std::cout << out.str();
    if (!out_file.empty()) {
        std::ostringstream comment;
        comment << "n=" << d.n << " k=" << d.k << " size=" << d.size();
        io::write_words_file(out_file, d.words, comment.str());
    }
    return 0;
}

int run_conjecture_probe(int k, int n_min, int n_max, std::uint64_t budget,
                         const std::string& seed_file, const std::string& out_file,
                         const Options& opt) {
    if (n_min > n_max) throw std::invalid_argument("--n-min exceeds --n-max");
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; ++n) ns.push_back(n);
    std::optional<WordFamily> seed;
    if (!seed_file.empty()) {
        std::vector<Word> seed_words = io::read_words_file(seed_file);
        seed = make_family(seed_words, infer_k(seed_words));
    }
    ProbeReport rep = conjecture_probe(k, ns, budget, seed, opt.threads);
    std::ostringstream out;
    out << "k=" << rep.k << " conjectured_max=" << rep.conjectured_max
        << " theorem_bound=" << rep.theorem_bound << '\n';
    for (const auto& e : rep.entries) {
        out << "n=" << e.n << " size=" << e.size
            << " optimal=" << (e.optimal ? "true" : "false");
        if (!opt.deterministic) out << " nodes=" << e.nodes;
        if (e.exceeds_conjecture) out << " exceeds_conjecture=true";
        out << '\n';
    }
    if (rep.counterexample) {
        const WordFamily& c = *rep.counterexample;
        std::string path = out_file.empty() ? "conjecture_counterexample_k" +
                                                  std::to_string(k) + "_n" +
                                                  std::to_string(c.n) + ".words"
                                            : out_file;
        std::ostringstream comment;
        comment << "family exceeding (3/4)*2^k: n=" << c.n << " k=" << c.k
                << " size=" << c.size();
        io::write_words_file(path, c.words, comment.str());
        out << "counterexample=n=" << c.n << " size=" << c.size() << '\n';
        out << "counterexample_file=" << path << '\n';
    } else {
        out << "counterexample=none\n";
    }
    std::cout << out.str();
    return 0;
}

const char* failure_name(geometry::PairFailure f) {
    switch (f) {
        case geometry::PairFailure::NoCommonFacetLine:
            return "no_common_facet_hyperplane";
        case geometry::PairFailure::SameSide:
            return "same_side";
        case geometry::PairFailure::LowDimContact:
            return "facet_intersection_lower_dimensional";
    }
    return "?";
}

int run_encode_simplices(const std::string& path, bool check_neighbourly,
                         const std::string& out_file) {
    std::vector<geometry::Simplex> simplices = io::read_simplices_file(path);
    std::ostringstream out;
    int d = simplices.front().dim();
    out << "d=" << d << " m=" << simplices.size() << '\n';

    bool neighbourly_ok = true;
    std::ostringstream pair_lines;
    if (check_neighbourly) {
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            for (std::size_t j = i + 1; j < simplices.size(); ++j) {
                geometry::NeighbourlyCheck res =
                    geometry::neighbourly_pair(simplices[i], simplices[j]);
                pair_lines << "pair=" << i + 1 << ',' << j + 1
                           << " neighbourly=" << (res.ok ? "true" : "false");
                if (res.ok) {
                    pair_lines << " plane=" << res.plane->str()
                               << " witness=" << geometry::point_str(*res.witness);
                } else {
                    pair_lines << " reason=" << failure_name(*res.failure);
                    neighbourly_ok = false;
                }
                pair_lines << '\n';
            }
        }
    }

    geometry::Encoding enc = geometry::encode_family(simplices);
    out << "hyperplanes=" << enc.hyperplanes.size() << '\n';
    for (std::size_t i = 0; i < enc.hyperplanes.size(); ++i)
        out << 'H' << i + 1 << ' ' << enc.hyperplanes[i].str() << '\n';
    out << "n=" << enc.family.n << " k=" << enc.family.k << " size=" << enc.family.size()
        << '\n';
    out << pair_lines.str();
    for (const Word& w : enc.words) out << w.str() << '\n';

    AlphaReport rep = check_alpha(enc.family);
    print_alpha_report(out, rep);
    BigInt bound = family_size_bound(enc.family.k);
    bool within = BigInt(enc.family.size()) <= bound;
    out << "bound=" << bound.str() << '\n';
    out << "within_bound=" << (within ? "true" : "false") << '\n';
    bool pass = rep.all_ok() && within && neighbourly_ok;
    out << "result=" << (pass ? "pass" : "fail") << '\n';
    std::cout << out.str();
    if (!out_file.empty()) {
        std::ostringstream comment;
        comment << "encoded simplex family: n=" << enc.family.n << " k=" << enc.family.k;
        io::write_words_file(out_file, enc.family.words, comment.str());
    }
    return pass ? 0 : 1;
}

int run_slice_stats(const std::string& path, int k) {
    WordFamily f = family_from_file(path, k);
    std::ostringstream out;
    out << "n=" << f.n << " k=" << f.k << " size=" << f.size() << '\n';
    for (int i = 0; i < f.n; ++i) {
        SliceCounts c = slice_counts(f, i);
        out << "i=" << i + 1 << " zeros=" << c.zeros << " ones=" << c.ones
            << " stars=" << c.stars << '\n';
    }
    bool a1 = a1_assumption_holds(f);
    out << "A1=" << (a1 ? "true" : "false") << '\n';
    out << "result=" << (a1 ? "pass" : "fail") << '\n';
    std::cout << out.str();
    return a1 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of {0,1,*} words over the discrete cube"};
    app.require_subcommand(1);
    // allow the global flags to appear after the subcommand as well
    app.fallthrough();

    Options opt;
    app.add_flag("--deterministic", opt.deterministic,
                 "suppress timing and node-count output fields");
    app.add_option("--seed", opt.seed, "seed for randomized modes");
    app.add_option("--threads", opt.threads, "worker threads for the search core")
        ->check(CLI::Range(1, 256));

    std::string vf_file;
    int vf_k = 0;
    auto* vf = app.add_subcommand("verify-family", "check alpha1-alpha3 and the size bound");
    vf->add_option("--k", vf_k, "declared prop size")->required();
    vf->add_option("file", vf_file, "family file")->required();

    std::string vt_file;
    auto* vt = app.add_subcommand("verify-tiling", "check disjointness and exact cover");
    vt->add_option("file", vt_file, "tiling file")->required();

    std::string l1_file;
    int l1_random = 0, l1_n = 0;
    auto* l1 =
        app.add_subcommand("lemma1-check", "parity balance of minimal members' classes");
    l1->add_option("file", l1_file, "tiling file");
    l1->add_option("--random", l1_random, "check this many random tilings instead");
    l1->add_option("--n", l1_n, "cube dimension for --random");

    std::string cs_support, cs_word;
    int cs_n = 0;
    auto* cs = app.add_subcommand("char-sum", "character sum over a box or the cube");
    cs->add_option("--support", cs_support, "1-based positions, comma separated");
    cs->add_option("--word", cs_word, "box as a word over {0,1,*}");
    cs->add_option("--cube-n", cs_n, "sum over the whole cube of this dimension");

    int sm_n = 0, sm_k = 0;
    std::uint64_t sm_budget = 0;
    std::string sm_seed_file, sm_out;
    auto* sm = app.add_subcommand("search-max", "maximum alpha-valid family for (n, k)");
    sm->add_option("--n", sm_n)->required();
    sm->add_option("--k", sm_k)->required();
    sm->add_option("--budget-nodes", sm_budget, "node budget (0 = exact)");
    sm->add_option("--seed-file", sm_seed_file, "family to extend");
    sm->add_option("--out", sm_out, "write the best family to this file");

    std::string cd_file, cd_out;
    auto* cd = app.add_subcommand("construct-double",
                                  "the doubling construction (n,k) -> (2n+1, k+1)");
    cd->add_option("file", cd_file, "family file")->required();
    cd->add_option("--out", cd_out, "write the doubled family to this file");

    int cp_k = 0, cp_nmin = 0, cp_nmax = 0;
    std::uint64_t cp_budget = 0;
    std::string cp_seed_file, cp_out;
    auto* cp = app.add_subcommand("conjecture-probe",
                                  "per-n maxima against the (3/4)*2^k conjecture");
    cp->add_option("--k", cp_k)->required();
    cp->add_option("--n-min", cp_nmin)->required();
    cp->add_option("--n-max", cp_nmax)->required();
    cp->add_option("--budget-nodes", cp_budget, "node budget for oversized universes");
    cp->add_option("--seed-file", cp_seed_file, "seed family, used at its own n");
    cp->add_option("--out", cp_out, "file for a counterexample family, if found");

    std::string es_file, es_out;
    bool es_check = false;
    auto* es = app.add_subcommand("encode-simplices",
                                  "facet hyperplanes and words of a simplex family");
    es->add_option("file", es_file, "simplex family file")->required();
    es->add_flag("--check-neighbourly", es_check, "run all pairwise certificates first");
    es->add_option("--out", es_out, "write the word family to this file");

    std::string ss_file;
    int ss_k = 0;
    auto* ss = app.add_subcommand("slice-stats", "per-coordinate symbol counts and (A1)");
    ss->add_option("--k", ss_k, "declared prop size")->required();
    ss->add_option("file", ss_file, "family file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (vf->parsed()) return run_verify_family(vf_file, vf_k);
        if (vt->parsed()) return run_verify_tiling(vt_file);
        if (l1->parsed()) {
            if (l1_file.empty() && (l1_random <= 0 || l1_n <= 0))
                throw std::invalid_argument(
                    "lemma1-check needs a file or --random N with --n D");
            if (!l1_file.empty() && l1_random > 0)
                throw std::invalid_argument(
                    "lemma1-check takes a file or --random, not both");
            return run_lemma1_check(l1_file, l1_random, l1_n, opt);
        }
        if (cs->parsed()) {
            if (cs_word.empty() == (cs_n == 0))
                throw std::invalid_argument("char-sum needs exactly one of --word, --cube-n");
            return run_char_sum(cs_support, cs_word, cs_n);
        }
        if (sm->parsed())
            return run_search_max(sm_n, sm_k, sm_budget, sm_seed_file, sm_out, opt);
        if (cd->parsed()) return run_construct_double(cd_file, cd_out);
        if (cp->parsed())
            return run_conjecture_probe(cp_k, cp_nmin, cp_nmax, cp_budget, cp_seed_file,
                                        cp_out, opt);
        if (es->parsed()) return run_encode_simplices(es_file, es_check, es_out);
        if (ss->parsed()) return run_slice_stats(ss_file, ss_k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
