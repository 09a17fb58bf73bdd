#include "qschur/partition.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qschur;

static Partition P(std::initializer_list<int> xs) { return Partition(std::vector<int>(xs)); }

TEST_CASE("parse_partition") {
    CHECK(parse_partition("10,6,5,2,1,1") == P({10, 6, 5, 2, 1, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("3,5"), not_weakly_decreasing);
    CHECK_THROWS_AS(parse_partition("3,,1"), malformed_text);
    CHECK_THROWS_AS(parse_partition("a,1"), malformed_text);
    CHECK(to_string(P({3, 1})) == "3,1");
    CHECK(to_string(Partition{}) == "");
}

TEST_CASE("e-regularity") {
    CHECK_FALSE(is_e_regular(P({1, 1}), 2));
    CHECK(is_e_regular(P({2, 1}), 2));
    CHECK_FALSE(is_e_regular(P({3, 3, 3, 1}), 3));
    CHECK_THROWS_AS(is_e_regular(P({1}), 1), bad_e);

    // run-length scan agrees with a direct "e equal consecutive parts" search
    for (int n = 0; n <= 20; ++n)
        for (const auto& lam : partitions_of(n))
            for (int e = 2; e <= 5; ++e) {
                bool singular = false;
                const auto& ps = lam.parts();
                for (std::size_t i = 0; i + e <= ps.size() && !singular; ++i) {
                    bool alleq = true;
                    for (int k = 1; k < e; ++k) alleq &= (ps[i + k] == ps[i]);
                    singular |= alleq;
                }
                CHECK(is_e_regular(lam, e) == !singular);
            }
}

TEST_CASE("dominance order") {
    CHECK(dominates(P({15, 3, 3, 2, 2}), P({10, 6, 5, 2, 1, 1})));
    CHECK(dominates(P({3, 1}), P({3, 1})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK_THROWS_AS(dominates(P({2}), P({1})), size_mismatch);

    // partial order on partitions of n <= 8: reflexive, antisymmetric, transitive
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(dominates(a, a));
            for (const auto& b : ps) {
                if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("row and column removal") {
    CHECK(row_removal(P({10, 6, 5})) == P({6, 5}));
    CHECK(row_removal(P({4})) == Partition{});
    CHECK(row_removal(P({3, 3, 1})) == P({3, 1}));
    CHECK(column_removal(P({3, 2, 1})) == P({2, 1}));
    CHECK(column_removal(P({1, 1, 1})) == Partition{});
    CHECK(column_removal(P({5, 5})) == P({4, 4}));
    CHECK_THROWS_AS(row_removal(Partition{}), empty_partition_error);
    CHECK_THROWS_AS(column_removal(Partition{}), empty_partition_error);
}

TEST_CASE("conjugation") {
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(P({2, 2})) == P({2, 2}));

    for (int n = 0; n <= 14; ++n)
        for (const auto& lam : partitions_of(n)) {
            CHECK(conjugate(conjugate(lam)) == lam);
            if (!lam.is_empty())
                CHECK(conjugate(row_removal(lam)) == column_removal(conjugate(lam)));
        }
}

TEST_CASE("descending lexicographic enumeration") {
    auto ps = partitions_of(5);
    REQUIRE(ps.size() == 7);
    CHECK(ps.front() == P({5}));
    CHECK(ps.back() == P({1, 1, 1, 1, 1}));
    CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
}
