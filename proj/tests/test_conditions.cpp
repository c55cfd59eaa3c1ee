#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "valueset/classify.hpp"
#include "valueset/conditions.hpp"
#include "valueset/funcstats.hpp"

using namespace valueset;

namespace {

FieldPtr prime_field(int p) { return Field::build(p, 1); }

// C2 decided by floating character sums at tolerance 1e-6 q.
bool c2_float(const Field& F, std::span<const Elem> values)
{
    for (Elem h = 1; h < F.q(); ++h) {
        const double s = char_sum_abs_float(F, values, h);
        if (std::abs(s * s - double(F.q())) >= 1e-6 * F.q()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("difference tables")
{
    const auto F = prime_field(7);
    const auto sq = FieldPoly::monomial(F, 2);
    for (Elem a = 1; a < 7; ++a) {
        const auto d = difference_table(sq, a);
        // 2ax + a^2
        for (Elem x = 0; x < 7; ++x) {
            CHECK(d[x] == F->add(F->mul(F->mul(2, a), x), F->mul(a, a)));
        }
        CHECK(image_count(d) == 7);
        CHECK(difference_table(FieldPoly::monomial(F, 1), a) == FunctionTable::constant(7, a));
        CHECK(difference_table(FieldPoly(F, {4}), a) == FunctionTable::constant(7, 0));
    }
    CHECK_THROWS_AS(difference_table(sq, 0), parameter_error);
}

TEST_CASE("conditions for X^2 and X over F_7")
{
    const auto F = prime_field(7);
    const auto sq = FieldPoly::monomial(F, 2);
    CHECK(test_c1(sq).holds);
    CHECK(test_c2(sq).holds);
    CHECK(test_c3(sq).holds);
    CHECK(test_c4(sq));
    CHECK(n2_poly(sq) == 6);

    const auto x = FieldPoly::monomial(F, 1);
    const auto r1 = test_c1(x);
    CHECK_FALSE(r1.holds);
    CHECK(r1.witness == Elem(1));
    CHECK_FALSE(test_c2(x).holds);
    CHECK_FALSE(test_c3(x).holds);
    CHECK(n2_poly(x) == 0);
    CHECK_FALSE(test_c4(x));

    const FieldPoly c(F, {3});
    CHECK(n2_poly(c) == 42);
    CHECK_FALSE(test_c4(c));
}

TEST_CASE("X^4 + 2X^2 over F_7 as computed")
{
    // Values [0,3,3,1,1,3,3]: N_2 = 4*3 + 2*1 = 14, so C4 fails and C2, C3
    // (each implying C4) fail with it.
    const auto F = prime_field(7);
    const auto f = FieldPoly::from_terms(F, {{4, 1}, {2, 2}});
    CHECK(f.values() == std::vector<Elem>{0, 3, 3, 1, 1, 3, 3});
    const auto p = profile(f);
    CHECK(p.n2 == 14);
    CHECK_FALSE(p.c1);
    CHECK_FALSE(p.c2);
    CHECK_FALSE(p.c3);
    CHECK_FALSE(p.c4);
}

TEST_CASE("X^4 + 2X over F_7 satisfies C2 and C3 but not C1")
{
    const auto F = prime_field(7);
    const auto f = FieldPoly::from_terms(F, {{4, 1}, {1, 2}});
    const auto p = profile(f);
    CHECK_FALSE(p.c1);
    CHECK(p.c2);
    CHECK(p.c3);
    CHECK(p.c4);
    CHECK(p.mask() == 0b0111);
    CHECK(c2_float(*F, f.values()));
}

TEST_CASE("F_9 examples for every primitive element and every modulus")
{
    for (const auto& modulus : Field::irreducible_moduli(3, 2)) {
        const auto F = Field::build(3, 2, modulus);
        const auto prims = F->primitive_elements();
        REQUIRE(prims.size() == 4);
        for (Elem g : prims) {
            const auto f7 = FieldPoly::from_terms(F, {{7, 1}, {2, g}});
            const auto f8 = FieldPoly::from_terms(F, {{8, 1}, {2, g}});
            const auto p7 = profile(f7);
            const auto p8 = profile(f8);
            CHECK(p7.c2);
            CHECK_FALSE(p7.c3);
            CHECK(p8.c3);
            CHECK_FALSE(p8.c2);
        }
    }
}

TEST_CASE("average lemma")
{
    const auto f5 = prime_field(5);
    auto check = verify_average_lemma(FieldPoly::monomial(f5, 2));
    CHECK(check.sum == 20);
    CHECK(check.ok);

    const auto f7 = prime_field(7);
    check = verify_average_lemma(FieldPoly(f7, {1, 2, 3, 4, 5, 6, 0}));
    CHECK(check.sum == 42);
    CHECK(check.ok);

    for (auto F : {prime_field(3), prime_field(7), Field::build(3, 2)}) {
        const auto c = verify_average_lemma(FieldPoly::monomial(F, 1));
        CHECK(c.sum == WideCount(F->q()) * (F->q() - 1));
        CHECK(c.ok);
    }

    std::mt19937_64 rng(5);
    for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {5, 2}, {3, 3}, {2, 3}, {2, 4}}) {
        const auto F = Field::build(p, k);
        std::uniform_int_distribution<Elem> pick(0, F->q() - 1);
        for (int i = 0; i < 25; ++i) {
            std::vector<Elem> c(F->q());
            for (auto& x : c) x = pick(rng);
            REQUIRE(verify_average_lemma(FieldPoly(F, c)).ok);
        }
    }
}

TEST_CASE("expected-N_2 bounds")
{
    auto r = poly_version_bounds(7);
    CHECK(r.lower_int == 4);
    CHECK(r.upper_int == 5);
    CHECK(r.upper_real_exact);

    r = poly_version_bounds(3);
    CHECK(r.lower_int == 2);
    CHECK(r.upper_int == 2);

    r = poly_version_bounds(9);
    CHECK(r.lower_int == 5);
    CHECK(r.upper_real == doctest::Approx(9.0 - 16.0 / (1.0 + std::sqrt(33.0))));
    CHECK(r.upper_int == 6);

    r = poly_version_bounds(8);
    CHECK(r.lower_real == Rational(9, 2));
    CHECK(r.lower_int == 5);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("power-sum invariant")
{
    for (auto F : {prime_field(5), prime_field(7), Field::build(3, 2), Field::build(2, 3)}) {
        const auto x = FieldPoly::monomial(F, 1);
        CHECK(up_invariant(x) == F->q() - 1);
        CHECK(wsc_lower(x) == F->q());
    }
    const auto f5 = prime_field(5);
    const auto sq = FieldPoly::monomial(f5, 2);
    CHECK(up_invariant(sq) == 2u);
    CHECK(image_count(sq.table()) == 3);
    CHECK(wsc_lower(sq) == 3u);
    CHECK(up_invariant(FieldPoly(f5, {})) == std::nullopt);
    CHECK(wsc_lower(FieldPoly(f5, {})) == std::nullopt);

    const auto f7 = prime_field(7);
    CHECK(up_invariant(FieldPoly::monomial(f7, 2)) == 3u);
}

TEST_CASE("planar squares meet the lower bound")
{
    for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        const auto F = Field::build(p, k);
        const auto sq = FieldPoly::monomial(F, 2);
        const auto prof = profile(sq);
        REQUIRE(prof.c1);
        REQUIRE(prof.c4);
        const auto v = std::int64_t(image_count(sq.table()));
        REQUIRE(v == std::int64_t(F->q() + 1) / 2);
        const auto b = poly_version_bounds(F->q());
        REQUIRE(b.lower_int <= v);
        REQUIRE(v <= b.upper_int);
    }
}

TEST_CASE("even order fields")
{
    const auto F = Field::build(2, 2);
    ConditionKernel kernel(F);
    for (std::uint64_t rank = 0; rank < 256; ++rank) {
        const auto v = table_at_rank(*F, rank);
        const auto ref = profile_reference(*F, v);
        REQUIRE(ref.even_order);
        REQUIRE_FALSE(ref.c1);
        REQUIRE_FALSE(ref.c4);
        REQUIRE(ref.respects_implications());
        const auto fast = kernel.evaluate(v);
        REQUIRE(fast.mask() == ref.mask());
    }
    CHECK(to_json(profile(FieldPoly::monomial(F, 2))).contains("even_order_note"));
}

TEST_CASE("kernel agrees with the reference path and the float test")
{
    for (auto F : {prime_field(3), prime_field(5)}) {
        ConditionKernel kernel(F);
        const auto total = *function_count(F->q());
        for (std::uint64_t rank = 0; rank < total; ++rank) {
            const auto v = table_at_rank(*F, rank);
            const auto ref = profile_reference(*F, v);
            const auto fast = kernel.evaluate(v);
            REQUIRE(fast.mask() == ref.mask());
            REQUIRE(fast.n2 == ref.n2);
            REQUIRE(fast.c1_witness == ref.c1_witness);
            REQUIRE(fast.c2_witness == ref.c2_witness);
            REQUIRE(fast.c3_witness == ref.c3_witness);
            REQUIRE(ref.c2 == c2_float(*F, v));
            REQUIRE(ref.respects_implications());
            const FunctionTable t(std::vector<Label>(v.begin(), v.end()));
            REQUIRE(ref.n2 == oracle::pair_collisions(t));
        }
    }
}

TEST_CASE("implication lattice on sampled functions over F_7, F_9, F_11")
{
    std::mt19937_64 rng(11);
    for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{7, 1}, {3, 2}, {11, 1}}) {
        const auto F = Field::build(p, k);
        ConditionKernel kernel(F);
        std::uniform_int_distribution<Elem> pick(0, F->q() - 1);
        for (int i = 0; i < 3000; ++i) {
            std::vector<Elem> v(F->q());
            if (i % 3 == 0) {
                for (auto& x : v) x = pick(rng);
            } else {
                // Sparse polynomials hit the interesting masks far more often.
                std::vector<Elem> c(F->q(), 0);
                for (int t = 0; t < 2 + i % 2; ++t) c[1 + pick(rng) % (F->q() - 1)] = pick(rng);
                v = FieldPoly(F, c).values();
            }
            const auto fast = kernel.evaluate(v);
            REQUIRE(fast.respects_implications());
            if (i % 10 == 0) REQUIRE(profile_reference(*F, v).mask() == fast.mask());
            const FunctionTable t(std::vector<Label>(v.begin(), v.end()));
            REQUIRE(fast.n2 == collision_count(t, 2));
        }
    }
}

TEST_CASE("mask helpers")
{
    CHECK(mask_string(0b1111) == "1111");
    CHECK(mask_string(0b0110) == "0110");
    CHECK(mask_respects_implications(0b1111));
    CHECK(mask_respects_implications(0b0111));
    CHECK(mask_respects_implications(0b0000));
    CHECK_FALSE(mask_respects_implications(0b1000));
    CHECK_FALSE(mask_respects_implications(0b0100));
    CHECK_FALSE(mask_respects_implications(0b0010));
    CHECK_FALSE(mask_respects_implications(0b1101));
}
