#include "doctest.h"

#include <string>

#include "dikroma/digraph.hpp"
#include "dikroma/enumeration.hpp"
#include "dikroma/errors.hpp"
#include "dikroma/formats.hpp"
#include "fixtures.hpp"

using namespace dikroma;

namespace {

// message must mention the offending location, e.g. "line 3" or "byte 2"
template <class E, class F>
std::string message_of(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    FAIL("expected exception was not thrown");
    return {};
}

} // namespace

TEST_CASE("edge list parses the documented example") {
    Digraph d = parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
    CHECK(d == fixtures::directed_triangle());
}

TEST_CASE("edge list tolerates comments and blank lines") {
    Digraph d = parse_edge_list("# triangle\n\n3 3\n0 1\n# middle\n1 2\n\n2 0\n");
    CHECK(d == fixtures::directed_triangle());
}

TEST_CASE("edge list handles the arcless digraph") {
    Digraph d = parse_edge_list("4 0\n");
    CHECK(d == Digraph(4));
}

TEST_CASE("edge list errors name the offending line") {
    auto bad_header = message_of<ParseError>([] { parse_edge_list("x y\n"); });
    CHECK(bad_header.find("line 1") != std::string::npos);

    auto range = message_of<ParseError>([] { parse_edge_list("2 1\n0 2\n"); });
    CHECK(range.find("line 2") != std::string::npos);

    auto loop = message_of<ParseError>([] { parse_edge_list("2 1\n1 1\n"); });
    CHECK(loop.find("line 2") != std::string::npos);

    auto dup = message_of<ParseError>([] { parse_edge_list("2 2\n0 1\n0 1\n"); });
    CHECK(dup.find("line 3") != std::string::npos);

    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);        // truncated
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n1 0\n"), ParseError);   // extra arcs
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);                  // empty
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);             // no vertices
}

TEST_CASE("edge list round trip is canonical") {
    DigraphEnumerator en(3);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        Digraph d = en.at(i);
        std::string text = serialize_edge_list(d);
        CHECK(parse_edge_list(text) == d);
        CHECK(serialize_edge_list(parse_edge_list(text)) == text);
    }
}

TEST_CASE("digraph6 known encodings") {
    // "&A?": n = 'A'-63 = 2, '?'-63 = 0, so no arc bits set.
    CHECK(parse_digraph6("&A?") == Digraph(2));
    CHECK(serialize_digraph6(Digraph(2)) == "&A?");

    // digon on 2 vertices: matrix bits 0110, padded to 011000 = 24 -> 'W'
    CHECK(serialize_digraph6(fixtures::digon2()) == "&AW");
    CHECK(parse_digraph6("&AW") == fixtures::digon2());

    // directed triangle: rows 010 001 100, padded to 010001 100000
    // = 17, 32 -> 'P', '_'
    CHECK(serialize_digraph6(fixtures::directed_triangle()) == "&BP_");
    CHECK(parse_digraph6("&BP_") == fixtures::directed_triangle());

    // single vertex: one bit of matrix, padded to one full '?' group
    CHECK(serialize_digraph6(Digraph(1)) == "&@?");
    CHECK(parse_digraph6("&@?") == Digraph(1));
    CHECK_THROWS_AS(parse_digraph6("&@"), ParseError); // group missing
}

TEST_CASE("digraph6 errors name the offending byte") {
    CHECK_THROWS_AS(parse_digraph6("A?"), ParseError);   // missing '&'
    CHECK_THROWS_AS(parse_digraph6("&"), ParseError);    // missing order byte
    CHECK_THROWS_AS(parse_digraph6("&A"), ParseError);   // truncated payload
    CHECK_THROWS_AS(parse_digraph6("&A??"), ParseError); // trailing bytes

    auto out_of_range = message_of<ParseError>([] {
        parse_digraph6(std::string("&A") + char(30)); // byte below '?'
    });
    CHECK(out_of_range.find("byte") != std::string::npos);

    // loop bit (diagonal) set: n=2, bits 1000 -> 100000 = 32 -> '_'
    CHECK_THROWS_AS(parse_digraph6("&A_"), ParseError);

    // nonzero padding: n=2, bits 0000 but pad bits 01 -> 000001 = 1 -> '@'
    CHECK_THROWS_AS(parse_digraph6("&A@"), ParseError);
}

TEST_CASE("digraph6 order cap") {
    CHECK_NOTHROW(serialize_digraph6(Digraph(62)));
    CHECK_THROWS_AS(serialize_digraph6(Digraph(63)), CapError);
}

TEST_CASE("digraph6 round trip is bit exact on all order-3 digraphs") {
    DigraphEnumerator en(3);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        Digraph d = en.at(i);
        std::string s6 = serialize_digraph6(d);
        CHECK(parse_digraph6(s6) == d);
        CHECK(serialize_digraph6(parse_digraph6(s6)) == s6);
    }
}

TEST_CASE("parse_digraph auto-detects the format") {
    CHECK(parse_digraph("&BP_") == fixtures::directed_triangle());
    CHECK(parse_digraph("3 3\n0 1\n1 2\n2 0\n") == fixtures::directed_triangle());
}
