#include <gtest/gtest.h>

#include <random>

#include "lexfact/oracle.hpp"

using namespace lexfact;

namespace {

// Full box enumeration, no pruning: the crudest possible reference.
std::set<Candidate> box_enumeration(Natural n, const std::vector<Natural>& g) {
    std::set<Candidate> out;
    Candidate a(g.size(), 0);
    while (true) {
        Natural sum = 0;
        for (std::size_t i = 0; i < g.size(); ++i) sum += a[i] * g[i];
        if (sum == n) out.insert(a);
        std::size_t i = 0;
        while (i < g.size() && a[i] == n / g[i]) a[i++] = 0;
        if (i == g.size()) break;
        ++a[i];
    }
    return out;
}

// Coin-change count of representations.
std::uint64_t denumerant(Natural n, const std::vector<Natural>& g) {
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (Natural x : g) {
        for (Natural v = x; v <= n; ++v) ways[v] += ways[v - x];
    }
    return ways[n];
}

}  // namespace

TEST(Oracle, Examples) {
    const auto small = oracle::brute_force(Instance(10, {2, 3}));
    EXPECT_EQ(small.factorizations, (std::set<Candidate>{{5, 0}, {2, 2}}));
    EXPECT_EQ(small.count, 2u);

    const auto zero = oracle::brute_force(Instance(0, {5, 7}));
    EXPECT_EQ(zero.factorizations, (std::set<Candidate>{{0, 0}}));
    EXPECT_EQ(zero.count, 1u);

    EXPECT_EQ(oracle::brute_force(Instance(1000, {13, 37, 38})).count, 30u);
    EXPECT_EQ(oracle::brute_force(Instance(100, {13, 37, 38})).factorizations, (std::set<Candidate>{{2, 2, 0}}));
}

TEST(Oracle, DimensionOneAndRepeats) {
    EXPECT_EQ(oracle::brute_force(Instance(12, {4})).factorizations, (std::set<Candidate>{{3}}));
    EXPECT_EQ(oracle::brute_force(Instance(13, {4})).count, 0u);
    EXPECT_EQ(oracle::brute_force(Instance(4, {2, 2})).factorizations,
              (std::set<Candidate>{{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Oracle, WorkCeiling) {
    EXPECT_THROW(oracle::brute_force(Instance(2000, {1, 1, 1, 1}), 10'000), oracle::OracleTooLarge);
    EXPECT_NO_THROW(oracle::brute_force(Instance(20, {1, 1, 1}), 10'000));
}

TEST(Oracle, MatchesBoxEnumerationAndDenumerant) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<Natural> gen(1, 12);
    std::uniform_int_distribution<Natural> elem(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Natural> g(dim(rng));
        for (auto& x : g) x = gen(rng);
        const Natural n = elem(rng);
        const auto result = oracle::brute_force(Instance(n, g));
        ASSERT_EQ(result.factorizations, box_enumeration(n, g)) << Instance(n, g).describe();
        ASSERT_EQ(result.count, denumerant(n, g));
        ASSERT_EQ(result.count, result.factorizations.size());
    }
}

TEST(Oracle, TableRowsAgreeWithDenumerant) {
    const std::vector<Natural> base{13, 37, 38, 40, 41, 42, 43};
    const std::vector<std::uint64_t> expected{30, 274, 1920, 10873, 52036};
    for (std::size_t d = 3; d <= 7; ++d) {
        const std::vector<Natural> g(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(d));
        EXPECT_EQ(denumerant(1000, g), expected[d - 3]);
        EXPECT_EQ(oracle::brute_force(Instance(1000, g)).count, expected[d - 3]);
    }
}
