#include "qschur/notation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qschur;

static Partition P(std::initializer_list<int> xs) { return Partition(std::vector<int>(xs)); }

TEST_CASE("runner notation parses the worked examples") {
    CHECK(partition_from_notation("<2,4_{2^2}|2^5>") == P({10, 6, 5, 2, 1, 1}));
    CHECK(partition_from_notation("<0,1,4_3|2^5>") == P({15, 3, 3, 2, 2}));
    CHECK(partition_from_notation("<|2^3>") == Partition{});
    CHECK(partition_from_notation("<0_{1^2},2_{1^2}|2^5>") ==
          partition_from_notation("<0_{1,1},2_{1,1}|2,2,2,2,2>"));
}

TEST_CASE("notation rejects malformed text") {
    CHECK_THROWS_AS(partition_from_notation("0,1|2,2"), malformed_text);
    CHECK_THROWS_AS(partition_from_notation("<0,1|2,2>x"), malformed_text);
    CHECK_THROWS_AS(partition_from_notation("<5|2,2>"), malformed_text); // runner out of range
    CHECK_THROWS_AS(partition_from_notation("<0|2>"), bad_e);
    CHECK_THROWS_AS(parse_block_label("<4,>"), malformed_text);
}

TEST_CASE("notation printing round trip") {
    for (const char* s : {"<2,4_{2^2}|2^5>", "<0_{1^2},2_{1^2}|2^4,0>", "<0,1,2,3|2^4>",
                          "<0_{2,1},1|4^2>", "<|3^3>"}) {
        auto rn = parse_notation(s);
        auto printed = notation_string(rn);
        auto rn2 = parse_notation(printed);
        CHECK(rn2.bead_counts == rn.bead_counts);
        for (std::size_t i = 0; i < rn.quotient.size(); ++i)
            CHECK(rn2.quotient[i] == rn.quotient[i]);
        CHECK(notation_string(rn2) == printed);
    }
    CHECK(notation_string(parse_notation("<0_{1^2},2_{1^2}|2^5>")) == "<0_{1^2},2_{1^2}|2^5>");
    CHECK(block_label_string({4, 4, 6}) == "<4^2,6>");
}

TEST_CASE("quotient/notation round trip over a block") {
    // every partition of 9 against its 3-quotient at a canonical bead count
    for (const auto& p : partitions_of(9)) {
        int r = canonical_beads(p.length(), 3, p.size());
        auto rn = e_quotient(p, 3, r);
        auto s = notation_string(rn);
        CHECK(partition_from_notation(s) == p);
    }
}
