#include <doctest.h>

#include <sstream>

#include "cubewords/io.hpp"

using namespace cubewords;

namespace {

std::vector<geometry::Simplex> parse_simplices_text(const std::string& text) {
    std::istringstream in(text);
    return io::parse_simplices(in, "test");
}

}  // namespace

TEST_CASE("word file parsing") {
    auto ws = io::parse_words_text("# comment\n00*\n  *10 \n\n1*1\n", "test");
    REQUIRE(ws.size() == 3);
    CHECK(ws[0].str() == "00*");
    CHECK(ws[1].str() == "*10");
    CHECK(ws[2].str() == "1*1");
}

TEST_CASE("word file errors carry line numbers") {
    try {
        io::parse_words_text("00*\n0x*\n", "test");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        io::parse_words_text("00*\n0011\n", "test");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(io::parse_words_text("# nothing\n", "test"), io::ParseError);
}

TEST_CASE("word file write/parse round trip") {
    auto ws = io::parse_words_text("00*\n*10\n1*1\n", "test");
    std::ostringstream out;
    io::write_words(out, ws);
    auto back = io::parse_words_text(out.str(), "round");
    CHECK(back == ws);
}

TEST_CASE("simplex file parsing") {
    auto ss = parse_simplices_text(
        "# two mirrored triangles\n"
        "2 2\n"
        "0 0\n"
        "1 0\n"
        "0 1\n"
        "0 0\n"
        "1 0\n"
        "0 -1\n");
    REQUIRE(ss.size() == 2);
    CHECK(ss[0].dim() == 2);
    CHECK(ss[1].vertex(2)[1] == geometry::Rational(-1));
}

TEST_CASE("simplex file accepts rationals") {
    auto ss = parse_simplices_text("2 1\n1/2 0\n3/2 0\n1/2 -7/3\n");
    CHECK(ss[0].vertex(2)[1] == geometry::Rational(-7, 3));
}

TEST_CASE("simplex file errors") {
    // flat simplex, reported at the block's first line
    try {
        parse_simplices_text("2 1\n0 0\n1 1\n2 2\n");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 2);
    }
    // duplicate simplex (same vertex set, different order)
    try {
        parse_simplices_text("2 2\n0 0\n1 0\n0 1\n0 1\n0 0\n1 0\n");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 5);
    }
    // wrong coordinate count
    try {
        parse_simplices_text("2 1\n0 0\n1 0 3\n0 1\n");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 3);
    }
    // zero denominator
    CHECK_THROWS_AS(parse_simplices_text("2 1\n0 0\n1/0 0\n0 1\n"), io::ParseError);
    // truncated block
    CHECK_THROWS_AS(parse_simplices_text("2 1\n0 0\n1 0\n"), io::ParseError);
    // trailing garbage
    CHECK_THROWS_AS(parse_simplices_text("2 1\n0 0\n1 0\n0 1\n9 9\n"), io::ParseError);
}
