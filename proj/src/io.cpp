#include "cubewords/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cubewords::io {

namespace {

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(s[i])) ++i;
    return s.substr(i);
}

}  // namespace

std::vector<Word> parse_words(std::istream& in, std::string_view source) {
    std::vector<Word> out;
    std::string line;
    int lineno = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        for (char c : t)
            if (c != '0' && c != '1' && c != '*')
                throw ParseError(source, lineno,
                                 std::string("invalid character '") + c + "' in word");
        if (n < 0) n = static_cast<int>(t.size());
        if (static_cast<int>(t.size()) != n)
            throw ParseError(source, lineno,
                             "word length " + std::to_string(t.size()) +
                                 " differs from first word length " + std::to_string(n));
        out.push_back(Word::parse(t));
    }
    if (out.empty()) throw ParseError(source, lineno, "no words in input");
    return out;
}

std::vector<Word> parse_words_text(std::string_view text, std::string_view source) {
    std::istringstream in{std::string(text)};
    return parse_words(in, source);
}

std::vector<Word> read_words_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_words(in, path);
}

void write_words(std::ostream& out, const std::vector<Word>& words) {
    for (const Word& w : words) out << w.str() << '\n';
}

void write_words_file(const std::string& path, const std::vector<Word>& words,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    if (!comment.empty()) out << "# " << comment << '\n';
    write_words(out, words);
    if (!out) throw std::runtime_error("error writing file: " + path);
}

namespace {

geometry::Rational parse_rational(const std::string& tok, std::string_view source, int lineno) {
    auto bad = [&]() {
        return ParseError(source, lineno, "invalid rational '" + tok + "'");
    };
    std::size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return geometry::Rational(geometry::Integer(tok));
        geometry::Integer num(tok.substr(0, slash));
        geometry::Integer den(tok.substr(slash + 1));
        if (den == 0) throw bad();
        return geometry::Rational(num, den);
    } catch (const std::exception&) {
        throw bad();
    }
}

}  // namespace

std::vector<geometry::Simplex> parse_simplices(std::istream& in, std::string_view source) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out_line) {
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            out_line = t;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError(source, lineno, "missing `d m` header");
    int d = 0, m = 0;
    {
        std::istringstream hs(header);
        if (!(hs >> d >> m) || d < 1 || m < 1)
            throw ParseError(source, lineno, "header must be `d m` with d,m >= 1");
        std::string extra;
        if (hs >> extra) throw ParseError(source, lineno, "trailing tokens after `d m` header");
    }

    std::vector<geometry::Simplex> out;
    std::map<std::string, std::pair<int, int>> seen;  // canonical vertices -> (index, line)
    for (int s = 0; s < m; ++s) {
        std::vector<geometry::Point> verts;
        int first_line = 0;
        for (int v = 0; v < d + 1; ++v) {
            std::string vline;
            if (!next_content_line(vline))
                throw ParseError(source, lineno,
                                 "unexpected end of file: simplex " + std::to_string(s + 1) +
                                     " needs " + std::to_string(d + 1) + " vertex lines");
            if (v == 0) first_line = lineno;
            std::istringstream vs(vline);
            geometry::Point p;
            std::string tok;
            while (vs >> tok) p.push_back(parse_rational(tok, source, lineno));
            if (static_cast<int>(p.size()) != d)
                throw ParseError(source, lineno,
                                 "expected " + std::to_string(d) + " coordinates, got " +
                                     std::to_string(p.size()));
            verts.push_back(std::move(p));
        }
        std::vector<std::string> keys;
        for (const auto& p : verts) keys.push_back(geometry::point_str(p));
        std::sort(keys.begin(), keys.end());
        std::string key;
        for (const auto& k : keys) key += k + ";";
        if (auto it = seen.find(key); it != seen.end())
            throw ParseError(source, first_line,
                             "duplicate simplex (same vertex set as the one at line " +
                                 std::to_string(it->second.second) + ")");
        seen[key] = {s, first_line};
        try {
            out.emplace_back(std::move(verts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, first_line, e.what());
        }
    }
    std::string extra;
    if (next_content_line(extra))
        throw ParseError(source, lineno, "trailing content after the declared m simplices");
    return out;
}

std::vector<geometry::Simplex> read_simplices_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_simplices(in, path);
}

}  // namespace cubewords::io
