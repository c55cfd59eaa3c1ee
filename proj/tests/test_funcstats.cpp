#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "valueset/funcstats.hpp"

using namespace valueset;

namespace {

FunctionTable pairs_table() { return FunctionTable({0, 0, 1, 1, 2}); }

}  // namespace

TEST_CASE("spectrum of small tables")
{
    const auto id = spectrum(FunctionTable::identity(5));
    CHECK(id.m == 1);
    CHECK(id.at(1) == 5);

    const auto c = spectrum(FunctionTable::constant(4));
    CHECK(c.m == 4);
    CHECK(c.at(4) == 1);
    CHECK(c.at(1) == 0);

    const auto s = spectrum(pairs_table());
    CHECK(s.m == 2);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 2);
    CHECK(s.at(3) == 0);
}

TEST_CASE("image count")
{
    CHECK(image_count(FunctionTable::identity(5)) == 5);
    CHECK(image_count(FunctionTable::constant(4)) == 1);
    CHECK(image_count(pairs_table()) == 3);
    // Labels are opaque: gaps and huge values do not matter.
    CHECK(image_count(FunctionTable({7, 1'000'000'000'000ULL, 7})) == 2);
}

TEST_CASE("falling factorial")
{
    CHECK(falling_factorial(3, 3) == 6);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(9, 0) == 1);
    CHECK(falling_factorial(0, 0) == 1);
    // 2^40 choose-ordered 4 is about 2^160: must throw, not wrap.
    CHECK_THROWS_AS(falling_factorial(1ULL << 40, 4), std::overflow_error);
    CHECK(falling_factorial(1ULL << 31, 4) > WideCount(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("collision count and oracle agree on the worked examples")
{
    CHECK(collision_count(FunctionTable::identity(5), 2) == 0);
    CHECK(collision_count(FunctionTable::constant(4), 2) == 12);
    CHECK(collision_count(FunctionTable::constant(4), 3) == 24);
    CHECK(collision_count(pairs_table(), 2) == 4);

    CHECK(collision_count_oracle(pairs_table(), 2) == 4);
    CHECK(collision_count_oracle(FunctionTable::constant(4), 3) == 24);
    for (std::uint64_t s = 2; s <= 5; ++s) {
        CHECK(collision_count_oracle(FunctionTable::identity(6), s) == 0);
    }
    CHECK_THROWS_AS(collision_count(pairs_table(), 1), parameter_error);
}

TEST_CASE("oracle refuses over budget instead of truncating")
{
    const auto f = FunctionTable::constant(100);
    CHECK_THROWS_AS(collision_count_oracle(f, 5), budget_exceeded);  // 10^10
    CHECK_THROWS_AS(collision_count_oracle(f, 3, 999'999), budget_exceeded);
    CHECK(collision_count_oracle(f, 3, 1'000'000) == falling_factorial(100, 3));
}

TEST_CASE("identities hold exhaustively for n <= 6 over 4 labels")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Label> v(n);
            std::size_t c = code;
            for (auto& x : v) {
                x = c % 4;
                c /= 4;
            }
            const FunctionTable f(v);
            const auto s = spectrum(f);
            REQUIRE(s.image_count() == oracle::distinct_values(f));
            REQUIRE(s.weighted_total() == n);
            REQUIRE(s.at(s.m) > 0);
            for (const auto& [r, count] : oracle::multiplicities(f)) REQUIRE(s.at(r) == count);
            for (std::uint64_t k = 2; k <= 4; ++k) {
                REQUIRE(collision_count(f, k) == collision_count_oracle(f, k));
            }
        }
    }
}

TEST_CASE("identities and inequalities on random functions")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const std::size_t labels = 1 + rng() % n;
        const auto f = oracle::random_table(rng, n, labels);
        const auto s = spectrum(f);
        const WideCount n2 = collision_count(f, 2);
        REQUIRE(n2 == oracle::pair_collisions(f));
        REQUIRE(n2 % 2 == 0);
        for (std::uint64_t k = 2; k <= 4; ++k) {
            const WideCount nk = collision_count(f, k);
            REQUIRE(nk == collision_count_oracle(f, k));
            // sum_{r<k} r M_r >= max(0, n - N_k + m(m-2)) when m >= k.
            if (s.m >= k) {
                std::int64_t low = 0;
                for (std::size_t r = 1; r < k; ++r) low += std::int64_t(r * s.at(r));
                const std::int64_t rhs =
                    std::int64_t(n) - nk.convert_to<std::int64_t>() + std::int64_t(s.m * (s.m - 2));
                REQUIRE(low >= std::max<std::int64_t>(0, rhs));
            }
        }
        const std::int64_t floor_m1 = std::max<std::int64_t>(0, std::int64_t(n) - n2.convert_to<std::int64_t>());
        REQUIRE(std::int64_t(s.at(1)) >= floor_m1);
    }
}

TEST_CASE("JSON table format")
{
    const auto f = table_from_json(nlohmann::json::parse(R"({"domain_size":5,"values":[0,0,1,1,2]})"));
    CHECK(f == pairs_table());
    CHECK(table_from_json(table_to_json(f)) == f);
    CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"domain_size":4,"values":[0,0,1,1,2]})")),
                    input_error);
    CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"values":[0,-1]})")), input_error);
    CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"values":[]})")), input_error);
    CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"([1,2])")), input_error);
}

TEST_CASE("CSV table format")
{
    std::istringstream ok("x,f\n2,1\n0,0\n4,2\n1,0\n3,1\n");
    CHECK(table_from_csv(ok) == pairs_table());

    std::istringstream dup("0,1\n0,2\n");
    CHECK_THROWS_AS(table_from_csv(dup), input_error);
    std::istringstream gap("0,1\n2,2\n");
    CHECK_THROWS_AS(table_from_csv(gap), input_error);
    std::istringstream junk("0,1\n1,banana\n");
    CHECK_THROWS_AS(table_from_csv(junk), input_error);
    std::istringstream one_col("0\n");
    CHECK_THROWS_AS(table_from_csv(one_col), input_error);
}

TEST_CASE("spectrum from blocks")
{
    const auto s = MultiplicitySpectrum::from_blocks({3, 1, 1, 2});
    CHECK(s.n == 7);
    CHECK(s.m == 3);
    CHECK(s.image_count() == 4);
    CHECK(collision_count(s, 2) == 6 + 2);
}
