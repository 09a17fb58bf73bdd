#include "qschur/orders.hpp"
#include "qschur/blocks.hpp"
#include "qschur/notation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qschur;

static Partition P(std::initializer_list<int> xs) { return Partition(std::vector<int>(xs)); }
static Partition N(const std::string& s) { return partition_from_notation(s); }

TEST_CASE("induced e-sequences of the worked example") {
    auto lam = P({10, 6, 5, 2, 1, 1});
    auto mu = P({15, 3, 3, 2, 2});
    CHECK(induced_e_sequence(lam, 5, 10) == std::vector<int>{19, 14, 14, 12, 9});
    CHECK(induced_e_sequence(mu, 5, 10) == std::vector<int>{24, 19, 14, 11, 10});
    CHECK(dominates(mu, lam));
    CHECK_FALSE(product_leq(lam, mu, 5));
    CHECK_FALSE(product_leq(mu, lam, 5));
    CHECK(product_leq(lam, lam, 5));
    // cores have empty induced sequence
    CHECK(induced_e_sequence(P({2, 1}), 3, 6).empty());
    // different cores are incomparable
    CHECK_FALSE(product_leq(P({2}), P({1, 1}), 3));
}

TEST_CASE("induced sequence length and bead-count stability") {
    for (int e = 2; e <= 4; ++e)
        for (int n = 1; n <= 10; ++n)
            for (const auto& p : partitions_of(n)) {
                int w = e_weight(p, e);
                int r = canonical_beads(p.length(), e, w);
                auto s1 = induced_e_sequence(p, e, r);
                auto s2 = induced_e_sequence(p, e, r + e);
                REQUIRE(s1.size() == s2.size());
                CHECK(static_cast<int>(s1.size()) == w);
                // shifting the display by a full row shifts every entry by e
                for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s2[i] == s1[i] + e);
            }
}

TEST_CASE("jantzen moves") {
    // an e-core admits no move
    CHECK(jantzen_successors(P({2, 1}), 3).empty());
    // (1,1) at e=2: the only family yields (2)
    auto succ = jantzen_successors(P({1, 1}), 2);
    REQUIRE(succ.size() == 1);
    CHECK(succ.begin()->first == P({2}));
    // block <4,4,6>: successors of <1_{2,1},2> include <1_{1^2},2_2> and <0,1_2,2>
    auto lam = N("<1_{2,1},2|4,4,6>");
    auto s2 = jantzen_successors(lam, 3);
    CHECK(s2.count(N("<1_{1^2},2_2|4,4,6>")));
    CHECK(s2.count(N("<0,1_2,2|4,4,6>")));
    // every edge strictly dominates its source
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            for (int e = 2; e <= 3; ++e)
                for (auto& [tau, moves] : jantzen_successors(p, e)) {
                    CHECK(tau != p);
                    CHECK(dominates(tau, p));
                    for (const auto& m : moves) {
                        CHECK(m.a < m.b);
                        CHECK(m.i >= 1);
                    }
                }
}

TEST_CASE("jantzen order extends to product order and dominance") {
    for (int e = 2; e <= 4; ++e) {
        JantzenOrder ord(e);
        for (int cn = 0; cn <= 4; ++cn)
            for (const auto& core : partitions_of(cn)) {
                if (e_core(core, e) != core) continue;
                for (int w = 1; w <= 3; ++w) {
                    if (e == 4 && (w == 3 || cn > 2)) continue; // keep runtime modest
                    auto B = make_block(core, w, e);
                    auto parts = enumerate_block(B);
                    for (const auto& lam : parts) {
                        CHECK(ord.leq(lam, lam));
                        for (const auto& mu : parts) {
                            if (lam != mu && ord.leq(lam, mu)) {
                                CHECK(product_leq(lam, mu, e));
                                CHECK(dominates(mu, lam));
                                CHECK_FALSE(ord.leq(mu, lam)); // antisymmetry
                            }
                        }
                    }
                }
            }
    }
}

TEST_CASE("product order facts behind the double restriction") {
    // mu >_P lam implies mu_1 >= lam_1 and l(mu) <= l(lam)
    for (int e = 2; e <= 3; ++e)
        for (int cn = 0; cn <= 3; ++cn)
            for (const auto& core : partitions_of(cn)) {
                if (e_core(core, e) != core) continue;
                auto B = make_block(core, 4, e);
                auto parts = enumerate_block(B);
                for (const auto& lam : parts)
                    for (const auto& mu : parts)
                        if (lam != mu && product_leq(lam, mu, e)) {
                            CHECK(mu.part(1) >= lam.part(1));
                            CHECK(mu.length() <= lam.length());
                        }
            }
}
