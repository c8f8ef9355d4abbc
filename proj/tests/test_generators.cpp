#include <bondlab/corpus.hpp>
#include <bondlab/error.hpp>
#include <bondlab/generators.hpp>

#include <doctest.h>

using namespace bondlab;

TEST_CASE("rook graphs are 2(n-1)-regular with n^2(n-1) edges")
{
    for (int n = 1 ; n <= 8 ; ++n) {
        auto g = generate({Family::rook, {n}});
        CHECK(g.order() == n * n);
        CHECK(g.size() == n * n * (n - 1));
        auto stats = degree_stats(g);
        CHECK(stats.min_degree == 2 * (n - 1));
        CHECK(stats.max_degree == 2 * (n - 1));
        for (int a = 0 ; a < n * n ; ++a)
            for (int b = a + 1 ; b < n * n ; ++b)
                CHECK(g.adjacent(a, b) == ((a / n == b / n) != (a % n == b % n)));
    }
    CHECK(generate({Family::rook, {3}}).labels()->at(5) == "(1,2)");
}

TEST_CASE("small families")
{
    auto c5 = generate({Family::cycle, {5}});
    CHECK(c5.size() == 5);
    CHECK(degree_stats(c5).max_degree == 2);
    auto k33 = generate({Family::complete_bipartite, {3, 3}});
    CHECK(k33.size() == 9);
    CHECK_FALSE(k33.adjacent(0, 1));
    CHECK(k33.adjacent(0, 3));
    auto star = generate({Family::star, {5}});
    CHECK(star.order() == 6);
    CHECK(star.degree(0) == 5);
    auto wheel = generate({Family::wheel, {5}});
    CHECK(wheel.size() == 10);
    CHECK(wheel.degree(0) == 5);
    auto q4 = generate({Family::hypercube, {4}});
    CHECK(q4.order() == 16);
    CHECK(q4.size() == 32);
    auto p = generate({Family::petersen, {}});
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(degree_stats(p).min_degree == 3);
    CHECK(generate({Family::path, {1}}).size() == 0);
    CHECK(generate({Family::complete, {7}}).size() == 21);
}

TEST_CASE("gnp is deterministic and tracks its probability")
{
    auto a = generate({Family::gnp, {40, 1, 4}, 7});
    auto b = generate({Family::gnp, {40, 1, 4}, 7});
    auto c = generate({Family::gnp, {40, 1, 4}, 8});
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(generate({Family::gnp, {20, 0, 3}, 1}).size() == 0);
    CHECK(generate({Family::gnp, {20, 3, 3}, 1}).size() == 190);
    long long edges = 0;
    for (std::uint64_t seed = 0 ; seed < 50 ; ++seed)
        edges += generate({Family::gnp, {40, 1, 4}, seed}).size();
    double mean = static_cast<double>(edges) / 50;
    CHECK(mean > 780 * 0.25 * 0.9);
    CHECK(mean < 780 * 0.25 * 1.1);
}

TEST_CASE("splitmix64 reference values")
{
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
}

TEST_CASE("family names and bad parameters")
{
    for (auto f : {Family::path, Family::cycle, Family::complete, Family::complete_bipartite, Family::star,
                Family::wheel, Family::rook, Family::hypercube, Family::gnp, Family::petersen})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("moebius"), Error);
    CHECK_THROWS_AS(generate({Family::cycle, {2}}), Error);
    CHECK_THROWS_AS(generate({Family::gnp, {5, 4, 3}}), Error);
    try {
        generate({Family::rook, {9}});
        FAIL("81 vertices accepted");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::SizeLimit);
    }
}
