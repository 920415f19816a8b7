#include "gradstar/linalg.hpp"

#include "doctest.h"

#include <random>

using namespace gradstar;
using namespace gradstar::linalg;

TEST_CASE("exact_rank small cases")
{
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
    CHECK(exact_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}) == 3);
}

TEST_CASE("checked arithmetic falls back to big integers")
{
    const std::int64_t big = std::int64_t(1) << 62;
    const std::vector<IntRow> rows{{big, big - 1, 3}, {big - 1, big, 5}, {3, 5, big}};
    CHECK(exact_rank(rows) == exact_rank_gmp(rows));
    CHECK(exact_rank(rows) == 3);
    const std::vector<IntRow> dep{{big, big - 1}, {big, big - 1}};
    CHECK(exact_rank(dep) == 1);
}

TEST_CASE("rank agrees with the GMP path on random matrices")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 200; ++t) {
        const int r = 1 + t % 7, c = 1 + (t / 7) % 7;
        std::vector<IntRow> rows(static_cast<std::size_t>(r), IntRow(static_cast<std::size_t>(c)));
        for (auto& row : rows)
            for (auto& x : row)
                x = d(rng) * (d(rng) == 0 ? 0 : 1);
        if (r > 2)
            for (int j = 0; j < c; ++j)
                rows[2][static_cast<std::size_t>(j)] = rows[0][static_cast<std::size_t>(j)] - 2 * rows[1][static_cast<std::size_t>(j)];
        CHECK(exact_rank(rows) == exact_rank_gmp(rows));
    }
}

TEST_CASE("EchelonBasis membership")
{
    EchelonBasis b(3);
    CHECK(b.insert({1, 1, 0}));
    CHECK(b.insert({0, 2, 2}));
    CHECK_FALSE(b.insert({2, 4, 2}));
    CHECK(b.contains({1, -1, -2}));
    CHECK_FALSE(b.contains({0, 0, 1}));
    CHECK(b.rank() == 2);
    CHECK(b.contains({0, 0, 0}));
}

TEST_CASE("left_kernel")
{
    const std::vector<IntRow> rows{{1, 2}, {2, 4}, {0, 1}};
    const auto k = left_kernel(rows, 2);
    REQUIRE(k.size() == 1);
    for (std::size_t j = 0; j < 2; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            s += k[0][i] * rows[i][j];
        CHECK(s == 0);
    }
    CHECK(left_kernel({{1, 0}, {0, 1}}, 2).empty());
}

TEST_CASE("to_integer_row and compress")
{
    CHECK(to_integer_row({Rational(1, 2), Rational(-1, 3), 0}) == IntRow{3, -2, 0});
    CHECK(to_integer_row({4, 6}) == IntRow{2, 3});
    const auto c = compress({{0, 1, 0}, {0, 2, 0}, {0, 0, 0}, {0, 1, 0}});
    CHECK(exact_rank(c) == 1);
    for (const auto& row : c)
        CHECK(row.size() == 1);
}
