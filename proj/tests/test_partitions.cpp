#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklab/partitions.hpp"
#include "oracles.hpp"

#include <random>

using namespace jacklab;

TEST_CASE("conjugate on known diagrams") {
    CHECK(conjugate(Partition({5, 4, 4, 2})) == Partition({4, 4, 3, 3, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({3})) == Partition({1, 1, 1}));
}

TEST_CASE("conjugate is an involution, size <= 12") {
    for (const auto& p : oracles::partitions_up_to(12, 12)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("diagram statistics") {
    auto s = diagram_stats(Partition({5, 4, 4, 2}), 3, 3);
    CHECK(s.arm == 1);
    CHECK(s.arm_colength == 2);
    CHECK(s.leg == 0);
    CHECK(s.leg_colength == 2);
    auto t = diagram_stats(Partition({1}), 1, 1);
    CHECK(t.arm == 0);
    CHECK(t.leg == 0);
    auto u = diagram_stats(Partition({3, 1}), 1, 1);
    CHECK(u.arm == 2);
    CHECK(u.arm_colength == 0);
    CHECK(u.leg == 1);
    CHECK(u.leg_colength == 0);
    CHECK_THROWS_AS(diagram_stats(Partition({3, 1}), 2, 2), std::domain_error);
    CHECK_THROWS_AS(diagram_stats(Partition({3, 1}), 0, 1), std::domain_error);
}

TEST_CASE("frobenius coordinates") {
    auto f = frobenius(Partition({5, 4, 4, 2}));
    REQUIRE(f.depth() == 3);
    CHECK(f.doubled_a == std::vector<long>({9, 5, 3}));  // 4.5, 2.5, 1.5
    CHECK(f.doubled_b == std::vector<long>({7, 5, 1}));  // 3.5, 2.5, 0.5
    CHECK(frobenius(Partition{}).depth() == 0);
    auto g = frobenius(Partition({1}));
    CHECK(g.doubled_a == std::vector<long>({1}));
    CHECK(g.doubled_b == std::vector<long>({1}));
}

TEST_CASE("frobenius sum identity, size <= 12") {
    for (const auto& p : oracles::partitions_up_to(12, 12)) {
        auto f = frobenius(p);
        long doubled_sum = 0;
        for (std::size_t i = 0; i < f.depth(); ++i) doubled_sum += f.doubled_a[i] + f.doubled_b[i];
        CHECK(doubled_sum == 2 * p.size());
    }
}

TEST_CASE("signature split and reassembly") {
    auto [p1, m1] = split_signature(Signature({3, 0, -2}));
    CHECK(p1 == Partition({3}));
    CHECK(m1 == Partition({2}));
    auto [p2, m2] = split_signature(Signature({0, 0}));
    CHECK(p2 == Partition{});
    CHECK(m2 == Partition{});
    auto [p3, m3] = split_signature(Signature({2, 1, 1, -1, -4}));
    CHECK(p3 == Partition({2, 1, 1}));
    CHECK(m3 == Partition({4, 1}));

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> part(-10, 10);
    std::uniform_int_distribution<std::size_t> len(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> parts(len(rng));
        for (auto& v : parts) v = part(rng);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        Signature sig(parts);
        auto [plus, minus] = split_signature(sig);
        CHECK(join_split(plus, minus, sig.length()) == sig);
    }
}

TEST_CASE("interlacing agrees with the brute-force inequalities") {
    CHECK(interlaces(Signature({1}), Signature({1, 0})));
    CHECK_FALSE(interlaces(Signature({2}), Signature({1, 0})));
    CHECK(interlaces(Signature({3, 1}), Signature({4, 2, 1})));
    CHECK_THROWS_AS(interlaces(Signature({1}), Signature({1, 0, 0})), std::domain_error);

    auto tuples = [](std::size_t len) {
        std::vector<std::vector<long>> out;
        std::vector<long> cur(len, 4);
        auto rec = [&](auto&& self, std::size_t i, long cap) -> void {
            if (i == len) {
                out.push_back(cur);
                return;
            }
            for (long v = cap; v >= 0; --v) {
                cur[i] = v;
                self(self, i + 1, v);
            }
        };
        rec(rec, 0, 4);
        return out;
    };
    for (std::size_t len = 1; len <= 3; ++len)
        for (const auto& mu : tuples(len))
            for (const auto& la : tuples(len + 1)) {
                bool expect = true;
                for (std::size_t i = 0; i < len; ++i)
                    expect &= la[i + 1] <= mu[i] && mu[i] <= la[i];
                CHECK(interlaces(Signature(mu), Signature(la)) == expect);
            }
}

TEST_CASE("shift") {
    CHECK(Signature({1, -1}).shifted(1) == Signature({2, 0}));
    CHECK(Signature({3, 1}).shifted(0) == Signature({3, 1}));
    CHECK(Signature({0, 0, -3}).shifted(3) == Signature({3, 3, 0}));
}

TEST_CASE("signature text round trip") {
    CHECK(Signature::parse("[3,1,0,-2]") == Signature({3, 1, 0, -2}));
    CHECK(Signature::parse(" [ 2 , 2 ] ") == Signature({2, 2}));
    CHECK(Signature({3, 1, 0, -2}).to_string() == "[3,1,0,-2]");
    CHECK_THROWS(Signature::parse("3,1"));
    CHECK_THROWS(Signature::parse("[1,2]"));  // increasing
    CHECK_THROWS(Signature::parse("[]"));
    CHECK_THROWS(Signature::parse("[1,a]"));
}
