#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubewords/geometry.hpp"
#include "cubewords/word.hpp"

namespace cubewords::io {

// Parse/format errors carry the 1-based source line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string_view source, int line, const std::string& what)
        : std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Family / tiling file: one word over {0,1,*} per line, all of equal length;
// blank lines and lines starting with '#' are skipped; input order is kept,
// duplicates are kept (family construction dedupes).
std::vector<Word> parse_words(std::istream& in, std::string_view source);
std::vector<Word> parse_words_text(std::string_view text, std::string_view source);
std::vector<Word> read_words_file(const std::string& path);

void write_words(std::ostream& out, const std::vector<Word>& words);
void write_words_file(const std::string& path, const std::vector<Word>& words,
                      const std::string& comment = "");

// Simplex family file: header `d m`, then m blocks of d+1 vertex lines with
// d rationals each (`p/q` or integers).  Flat simplices and duplicate
// simplices (as vertex sets) are rejected with line numbers.
std::vector<geometry::Simplex> parse_simplices(std::istream& in, std::string_view source);
std::vector<geometry::Simplex> read_simplices_file(const std::string& path);

}  // namespace cubewords::io
