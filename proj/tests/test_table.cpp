#include <doctest.h>

#include <sstream>

#include "ckd3/table.hpp"
#include "pinned_values.hpp"
#include "test_util.hpp"

using namespace ckd3;

TEST_CASE("builtin tables match the published cells") {
    CheckTable t1 = builtin_table("verhoeff-regular");
    CHECK(t1.cell(0, 0) == 0);
    CHECK(t1.cell(9, 9) == 9);
    CHECK(t1.cell(3, 2) == 0);  // codeword (302)

    CheckTable t2 = builtin_table("verhoeff-irregular");
    CHECK(t2.cell(9, 9) == 9);  // codeword (999)

    CheckTable t3 = builtin_table("dunning-t3");
    CHECK(t3.cell(0, 1) == 9);
    CHECK(t3.cell(9, 0) == 7);  // tenth printed row
    for (int i = 0; i < 10; ++i) CHECK(t3.cell(i, i) == i);
}

TEST_CASE("builtin tables checksum against the parsed form") {
    CHECK(pinned::fnv1a64(serialize_table(builtin_table("verhoeff-regular"))) ==
          pinned::kT1Checksum);
    CHECK(pinned::fnv1a64(serialize_table(builtin_table("verhoeff-irregular"))) ==
          pinned::kT2Checksum);
    CHECK(pinned::fnv1a64(serialize_table(builtin_table("dunning-t3"))) == pinned::kT3Checksum);
}

TEST_CASE("unknown builtin name") {
    CHECK_THROWS_AS(builtin_table("verhoeff"), std::invalid_argument);
}

TEST_CASE("parser accepts comments, blank lines, CRLF, and a base directive") {
    std::string text =
        "# a comment\r\n"
        "\r\n"
        "base 4\n"
        "0 1 2 3\n"
        "1 0 3 2\r\n"
        "  # indented comment\n"
        "2 3 0 1\n"
        "3 2 1 0\n";
    CheckTable t = parse_table(text, "demo");
    CHECK(t.base() == 4);
    CHECK(t.cell(1, 3) == 2);
    CHECK(t.name() == "demo");
}

TEST_CASE("parser defaults to base 10") {
    CheckTable t3 = builtin_table("dunning-t3");
    std::string no_directive;
    for (int r = 0; r < 10; ++r) {
        for (int c = 0; c < 10; ++c)
            no_directive += (c ? " " : "") + std::to_string(t3.cell(r, c));
        no_directive += '\n';
    }
    CHECK(parse_table(no_directive).same_cells(t3));
}

TEST_CASE("parser reports malformed input with line numbers") {
    CheckTable t3 = builtin_table("dunning-t3");
    std::string text = serialize_table(t3);

    SUBCASE("wrong row count: too few") {
        std::string nine_rows = text.substr(0, text.rfind("7 6 4 2 1 8 5 3 0 9\n"));
        CHECK_THROWS_WITH_AS(parse_table(nine_rows), doctest::Contains("wrong row count"),
                             ParseError);
    }
    SUBCASE("wrong row count: too many") {
        try {
            parse_table(text + "0 1 2 3 4 5 6 7 8 9\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 12);
            CHECK(std::string(e.what()).find("wrong row count") != std::string::npos);
        }
    }
    SUBCASE("malformed row length") {
        std::string bad = text;
        bad.replace(bad.find("0 9 7 1 2 3 4 8 6 5"), 19, "0 9 7 1 2 3 4 8 6");
        CHECK_THROWS_WITH_AS(parse_table(bad), doctest::Contains("malformed row length"),
                             ParseError);
    }
    SUBCASE("digit out of range") {
        std::string bad = text;
        bad.replace(bad.find("0 9 7 1 2 3 4 8 6 5"), 19, "0 33 7 1 2 3 4 8 6 5");
        CHECK_THROWS_WITH_AS(parse_table(bad), doctest::Contains("out of range"), ParseError);
    }
    SUBCASE("unknown directive") {
        try {
            parse_table("width 10\n" + text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(std::string(e.what()).find("unknown directive") != std::string::npos);
        }
    }
    SUBCASE("base out of range") {
        CHECK_THROWS_WITH_AS(parse_table(std::string("base 11\n")),
                             doctest::Contains("out of range"), ParseError);
        CHECK_THROWS_AS(parse_table(std::string("base 3\n0 1 2\n1 2 0\n2 0 1\n")), ParseError);
    }
    SUBCASE("directive after rows") {
        CHECK_THROWS_AS(parse_table("base 4\n0 1 2 3\nbase 4\n1 0 3 2\n2 3 0 1\n3 2 1 0\n"),
                        ParseError);
    }
}

TEST_CASE("serialize/parse round-trips arbitrary grids cell-for-cell") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 60; ++i) {
        int base = kMinBase + static_cast<int>(rng() % (kMaxBase - kMinBase + 1));
        CheckTable t = testing::random_grid(base, rng);
        CheckTable back = parse_table(serialize_table(t));
        CHECK(back.same_cells(t));
    }
}

TEST_CASE("constructor validates shape and range") {
    CHECK_THROWS_AS(CheckTable(3, std::vector<int>(9, 0)), std::invalid_argument);
    CHECK_THROWS_AS(CheckTable(4, std::vector<int>(15, 0)), std::invalid_argument);
    std::vector<int> cells(16, 0);
    cells[5] = 4;  // out of range for base 4
    CHECK_THROWS_AS(CheckTable(4, std::move(cells)), std::invalid_argument);
}
