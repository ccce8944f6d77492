#include <doctest.h>

#include <set>
#include <sstream>

#include "ckd3/codec.hpp"
#include "ckd3/oracle.hpp"
#include "test_util.hpp"

using namespace ckd3;

TEST_CASE("encode reads the table cell") {
    CheckTable t3 = builtin_table("dunning-t3");
    CHECK(encode(t3, 0, 1) == Word{0, 9, 1});
    CHECK(encode(t3, 3, 5) == Word{3, 4, 5});
    CHECK(encode(t3, 9, 9) == Word{9, 9, 9});
    CHECK_THROWS_AS(encode(t3, 10, 0), std::invalid_argument);
}

TEST_CASE("is_codeword checks the middle digit") {
    CheckTable t3 = builtin_table("dunning-t3");
    CHECK(is_codeword(t3, {1, 5, 0}));
    CHECK_FALSE(is_codeword(t3, {1, 1, 0}));
    CHECK(is_codeword(builtin_table("verhoeff-regular"), {3, 0, 2}));
    CHECK_FALSE(is_codeword(t3, {0, 0, 10}));
}

TEST_CASE("complete fills the third digit from any two positions") {
    CheckTable t3 = builtin_table("dunning-t3");
    CHECK(complete(t3, PartialWord().set(2, 4).set(3, 5)) == Word{3, 4, 5});
    CHECK(complete(t3, PartialWord().set(1, 7).set(2, 9)) == Word{7, 9, 2});
    CHECK(complete(t3, PartialWord().set(1, 0).set(3, 0)) == Word{0, 0, 0});
    CHECK_THROWS_AS(complete(t3, PartialWord().set(1, 1)), std::invalid_argument);
}

TEST_CASE("complete round-trips every codeword through every position pair") {
    CheckTable t3 = builtin_table("dunning-t3");
    for (Word w : oracle::enumerate_codewords(t3)) {
        CHECK(complete(t3, PartialWord().set(1, w.d1).set(2, w.d2)) == w);
        CHECK(complete(t3, PartialWord().set(1, w.d1).set(3, w.d3)) == w);
        CHECK(complete(t3, PartialWord().set(2, w.d2).set(3, w.d3)) == w);
    }
}

TEST_CASE("complete on a non-latin table reports witnesses") {
    // column 0 holds symbol 0 ten times: {pos2=0, pos3=0} is ambiguous
    CheckTable zeros(10, std::vector<int>(100, 0));
    try {
        complete(zeros, PartialWord().set(2, 0).set(3, 0));
        FAIL("expected CompletionError");
    } catch (const CompletionError& e) {
        CHECK(e.candidates().size() == 10);
    }
    // and nothing matches {pos2=1, pos3=0}
    try {
        complete(zeros, PartialWord().set(2, 1).set(3, 0));
        FAIL("expected CompletionError");
    } catch (const CompletionError& e) {
        CHECK(e.candidates().empty());
    }
}

TEST_CASE("PartialWord rejects misuse") {
    CHECK_THROWS_AS(PartialWord().set(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(PartialWord().set(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(PartialWord().set(1, 3).set(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(PartialWord().set(1, 10), std::invalid_argument);
}

TEST_CASE("words_containing surfaces every candidate") {
    CheckTable t3 = builtin_table("dunning-t3");
    CHECK(words_containing(t3, {0, 1, 9}) == std::vector<Word>{{0, 9, 1}});
    CHECK(words_containing(t3, {5, 5}) == std::vector<Word>{{5, 5, 5}});
    CHECK(words_containing(t3, {0, 1}).size() > 1);
    CHECK_THROWS_AS(words_containing(t3, {1}), std::invalid_argument);

    SUBCASE("each full multiset of dunning-t3 pins exactly one word") {
        for (Word w : oracle::enumerate_codewords(t3))
            CHECK(words_containing(t3, {w.d1, w.d2, w.d3}) == std::vector<Word>{w});
    }
}

TEST_CASE("registry issues each category from its own conjugate") {
    CategoryRegistry reg(builtin_table("dunning-t3"));
    auto first = reg.issue(0, 0, 1);
    CHECK(first.status == CategoryRegistry::IssueStatus::issued);
    CHECK(first.word == Word{0, 9, 1});

    SUBCASE("diagonal words are never issued") {
        for (int cat = 0; cat < 6; ++cat)
            for (int i = 0; i < 10; ++i)
                CHECK(reg.issue(cat, i, i).status ==
                      CategoryRegistry::IssueStatus::rejected_diagonal);
    }
    SUBCASE("re-issuing is idempotent") {
        auto again = reg.issue(0, 0, 1);
        CHECK(again.status == CategoryRegistry::IssueStatus::duplicate);
        CHECK(again.word == first.word);
        CHECK(reg.issued_count() == 1);
    }
    SUBCASE("bad category") { CHECK_THROWS_AS(reg.issue(6, 0, 1), std::invalid_argument); }
}

TEST_CASE("exhaustive issue: 540 words, globally unique") {
    CategoryRegistry reg(builtin_table("dunning-t3"));
    std::set<Word> seen;
    for (int cat = 0; cat < 6; ++cat)
        for (int r = 0; r < 10; ++r)
            for (int c = 0; c < 10; ++c) {
                auto res = reg.issue(cat, r, c);
                if (r == c) {
                    CHECK(res.status == CategoryRegistry::IssueStatus::rejected_diagonal);
                    continue;
                }
                REQUIRE(res.status == CategoryRegistry::IssueStatus::issued);
                CHECK(seen.insert(*res.word).second);  // never seen before
            }
    CHECK(seen.size() == 540);
    CHECK(reg.issued_count() == 540);
}

TEST_CASE("registry log round-trips and tolerates replayed lines") {
    CheckTable t3 = builtin_table("dunning-t3");
    CategoryRegistry reg(t3);
    reg.issue(0, 0, 1);
    reg.issue(3, 2, 5);
    reg.issue(5, 9, 0);

    std::ostringstream log;
    reg.write_log(log);
    CHECK(log.str().find("0 091\n") == 0);

    std::istringstream replay(log.str() + log.str());  // every line twice
    CategoryRegistry back = CategoryRegistry::replay_log(t3, replay);
    CHECK(back.issued_count() == 3);
    CHECK(back.issue(0, 0, 1).status == CategoryRegistry::IssueStatus::duplicate);

    std::istringstream corrupt("0 000\n");
    CHECK_THROWS_AS(CategoryRegistry::replay_log(t3, corrupt), std::runtime_error);
    std::istringstream garbage("x yz\n");
    CHECK_THROWS_AS(CategoryRegistry::replay_log(t3, garbage), std::runtime_error);
}
