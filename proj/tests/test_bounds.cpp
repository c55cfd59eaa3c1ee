#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "valueset/bounds.hpp"
#include "valueset/funcstats.hpp"

using namespace valueset;

TEST_CASE("general lower bound")
{
    const auto a = lower_bound(10, 2, 4);
    CHECK(a.value == Rational(8));
    CHECK(a.ceiling == 8);

    const auto b = lower_bound(10, 3, 6);
    CHECK(b.value == Rational(9, 2));
    CHECK(b.ceiling == 5);

    CHECK(lower_bound(17, 4, 0).ceiling == 6);  // 17/3 -> 6
    CHECK(lower_bound(17, 2, 0).ceiling == 17);

    // Constant function on 4 points: N_2 = 12 drives the real bound negative.
    CHECK(lower_bound(4, 2, 12).ceiling == -2);

    CHECK_THROWS_AS(lower_bound(10, 1, 0), parameter_error);
    CHECK_THROWS_AS(lower_bound(10, 3, 4), infeasible_error);  // 0 < t < 3!
}

TEST_CASE("exact upper bound")
{
    auto u = upper_bound_exact(10, 2, 6);
    CHECK(u.max_multiplicity == 3);
    CHECK(u.value == 8);

    u = upper_bound_exact(10, 3, 6);
    CHECK(u.max_multiplicity == 3);
    CHECK(u.value == 8);

    CHECK(upper_bound_exact(10, 3, 0).value == 10);
    CHECK(upper_bound_exact(10, 2, 0).max_multiplicity == 0);
    CHECK_THROWS_AS(upper_bound_exact(10, 4, 23), infeasible_error);
    CHECK_THROWS_AS(upper_bound_exact(10, 0, 23), parameter_error);

    // Large t: m* found by search, not by stepping.
    const WideCount big = WideCount(1) << 100;
    const auto w = upper_bound_exact(1ULL << 60, 2, big);
    CHECK(WideCount(w.max_multiplicity) * WideCount(w.max_multiplicity - 1) <= big);
    CHECK(WideCount(w.max_multiplicity + 1) * WideCount(w.max_multiplicity) > big);
}

TEST_CASE("pair-count bounds")
{
    auto r = bounds_s2(10, 4);
    CHECK(r.lower_int == 8);
    CHECK(r.upper_real == doctest::Approx(10.0 - 8.0 / (1.0 + std::sqrt(17.0))).epsilon(1e-12));
    CHECK(r.upper_real == doctest::Approx(8.438).epsilon(1e-3));
    CHECK_FALSE(r.upper_real_exact);
    CHECK(r.upper_int == 8);
    CHECK(*r.singleton_floor == 6);

    // k = 3 is triangular (u = 3): n + 1 - u.
    r = bounds_s2(10, 6);
    CHECK(r.upper_real_exact);
    CHECK(r.upper_int == 8);
    CHECK(r.lower_int == 7);

    r = bounds_s2(9, 0);
    CHECK(r.lower_int == 9);
    CHECK(r.upper_int == 9);
    CHECK(*r.refined_upper == 9);

    CHECK_THROWS_AS(bounds_s2(10, 3), parameter_error);
    CHECK_THROWS_AS(bounds_s2(4, 14), infeasible_error);
    CHECK_NOTHROW(bounds_s2(4, 12));
}

TEST_CASE("integer upper bound matches the floating closed form")
{
    for (std::uint64_t t = 0; t <= 20000; t += 2) {
        const auto r = bounds_s2(100000, t);
        const double d = 100000.0 - 2.0 * double(t) / (1.0 + std::sqrt(4.0 * double(t) + 1.0));
        REQUIRE(std::floor(d + 1e-12) == double(r.upper_int));
        REQUIRE(r.notes.empty());
    }
}

TEST_CASE("minimal-weight triangular sums")
{
    const auto four = triangular_B(4);
    CHECK(four.weight == 3);
    CHECK(four.parts == std::vector<std::uint64_t>{3, 2});

    const auto ten = triangular_B(10);
    CHECK(ten.weight == 4);
    CHECK(ten.parts == std::vector<std::uint64_t>{5});

    CHECK(triangular_B(0).weight == 0);
    CHECK(triangular_B(0).parts.empty());

    const TriangularTable table(1300);
    for (std::uint64_t u = 2; u <= 50; ++u) {
        CHECK(table.min_weight(triangular(u)) == u - 1);
    }
    for (std::uint64_t k = 0; k <= 100; ++k) {
        const auto w = table.witness(k);
        REQUIRE(w.weight == oracle::min_triangular_weight(k));
        std::uint64_t sum = 0, weight = 0;
        for (auto r : w.parts) {
            REQUIRE(r >= 2);
            sum += triangular(r);
            weight += r - 1;
        }
        REQUIRE(sum == k);
        REQUIRE(weight == w.weight);
        REQUIRE(std::is_sorted(w.parts.rbegin(), w.parts.rend()));
    }
    for (std::uint64_t k = 1; k <= 1300; ++k) {
        REQUIRE(table.min_weight(k) <= table.min_weight(k - 1) + 1);
    }
    CHECK_THROWS_AS(table.min_weight(1301), parameter_error);
}

TEST_CASE("every k <= 1000 is a sum of at most three triangular numbers")
{
    for (std::uint64_t k = 0; k <= 1000; ++k) {
        REQUIRE(oracle::min_triangular_length(k) <= 3);
    }
}

TEST_CASE("refined bound")
{
    CHECK(upper_bound_refined_s2(10, 6) == 8);
    CHECK(upper_bound_refined_s2(50, 20) == 46);
    CHECK(upper_bound_refined_s2(13, 2) == 12);
    CHECK_THROWS_AS(upper_bound_refined_s2(10, 5), parameter_error);

    const TriangularTable table(10000);
    for (std::uint64_t t = 0; t <= 20000; t += 2) {
        const std::int64_t n = 1000000;
        const auto r = bounds_s2(n, t);
        REQUIRE(n - std::int64_t(table.min_weight(t / 2)) <= r.upper_int);
        REQUIRE(*r.refined_upper == n - std::int64_t(table.min_weight(t / 2)));
    }
}

TEST_CASE("tight constructions")
{
    auto f = construct_lower_tight(6, 4);
    CHECK(image_count(f) == 4);
    CHECK(oracle::pair_collisions(f) == 4);

    f = construct_lower_tight(5, 4);
    CHECK(f == FunctionTable({0, 0, 1, 1, 2}));

    f = construct_lower_tight(7, 0);
    CHECK(image_count(f) == 7);

    CHECK_THROWS_AS(construct_lower_tight(5, 6), infeasible_error);
    CHECK_THROWS_AS(construct_lower_tight(5, 3), parameter_error);

    f = construct_upper_tight(6, 3);
    CHECK(image_count(f) == 4);
    CHECK(oracle::pair_collisions(f) == 6);

    f = construct_upper_tight(10, triangular(4));
    CHECK(image_count(f) == 10 + 1 - 4);
    CHECK(oracle::pair_collisions(f) == 12);

    CHECK(image_count(construct_upper_tight(4, 0)) == 4);
    CHECK_THROWS_AS(construct_upper_tight(4, 10), infeasible_error);  // needs a block of 5
}

TEST_CASE("constructions attain their bounds across parameters")
{
    for (std::uint64_t n = 1; n <= 30; ++n) {
        for (std::uint64_t t = 0; t <= n; t += 2) {
            const auto f = construct_lower_tight(n, t);
            REQUIRE(oracle::pair_collisions(f) == t);
            REQUIRE(std::int64_t(oracle::distinct_values(f)) == bounds_s2(n, t).lower_int);
        }
        for (std::uint64_t k = 0; k <= 60; ++k) {
            FunctionTable f({0});
            try {
                f = construct_upper_tight(n, k);
            } catch (const infeasible_error&) {
                continue;
            }
            REQUIRE(oracle::pair_collisions(f) == 2 * k);
            REQUIRE(std::int64_t(oracle::distinct_values(f)) == upper_bound_refined_s2(n, 2 * k));
        }
    }
}

TEST_CASE("bounds sandwich V over all spectra of n <= 20")
{
    for (std::size_t n = 1; n <= 20; ++n) {
        oracle::for_each_partition(n, [&](const std::vector<std::size_t>& blocks) {
            const auto f = oracle::table_from_blocks(blocks);
            const auto v = std::int64_t(oracle::distinct_values(f));
            for (std::uint64_t s = 2; s <= 4; ++s) {
                const auto t = collision_count(f, s);
                REQUIRE(lower_bound(n, s, t).ceiling <= v);
                REQUIRE(v <= upper_bound_exact(n, s, t).value);
            }
            const auto r = bounds_s2(n, collision_count(f, 2));
            REQUIRE(r.lower_int <= v);
            REQUIRE(v <= *r.refined_upper);
            REQUIRE(*r.refined_upper <= r.upper_int);
        });
    }
}

TEST_CASE("general report dispatch")
{
    const auto r = bounds_general(10, 3, 6);
    CHECK(r.lower_int == 5);
    CHECK(r.upper_int == 8);
    CHECK(r.provenance.count("upper") == 1);
    CHECK(bounds_general(10, 2, 4).upper_int == 8);
    const auto j = to_json(r);
    CHECK(j["lower_real"]["exact"] == "9/2");
    CHECK(j["upper_int"] == 8);
}

TEST_CASE("degree bound for non-permutation polynomials")
{
    CHECK(wan_degree_bound(7, 2) == 4);
    CHECK(wan_degree_bound(7, 6) == 6);
    CHECK(wan_degree_bound(9, 1) == 1);
    CHECK_THROWS_AS(wan_degree_bound(7, 0), parameter_error);
    CHECK_THROWS_AS(wan_degree_bound(7, 7), parameter_error);
    CHECK_THROWS_AS(wan_degree_bound(6, 2), parameter_error);
}

TEST_CASE("integer square root")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    const WideCount big = (WideCount(1) << 126) - 1;
    const WideCount r = isqrt(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);
}
