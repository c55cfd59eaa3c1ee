#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "valueset/errors.hpp"
#include "valueset/function_table.hpp"
#include "valueset/wide_count.hpp"

namespace valueset {

// Bounds on the image size V(f) of a function on n points whose s-fold
// collision count N_s(f) is t. Real-valued bounds are kept next to their
// integer refinements (ceiling of the lower, floor of the upper).
struct BoundReport {
    std::uint64_t n = 0;
    std::uint64_t s = 2;
    WideCount collision_count = 0;

    Rational lower_real = 0;
    std::int64_t lower_int = 0;

    double upper_real = 0.0;
    bool upper_real_exact = false;  // the closed form was evaluated without rounding
    std::int64_t upper_int = 0;

    // s == 2 extras.
    std::optional<std::int64_t> singleton_floor;  // M_1 >= max(0, n - t)
    std::optional<std::int64_t> refined_upper;    // n - B_{t/2}

    std::map<std::string, std::string> provenance;
    std::vector<std::string> notes;
};

nlohmann::json to_json(const BoundReport& r);

struct LowerBound {
    Rational value;
    std::int64_t ceiling = 0;
};

// (n - t/s!) / (s - 1). Requires s >= 2 and t == 0 or t >= s!.
LowerBound lower_bound(std::uint64_t n, std::uint64_t s, const WideCount& t);

struct ExactUpperBound {
    std::uint64_t max_multiplicity = 0;  // largest m with P(m, s) <= t; 0 when t == 0
    std::int64_t value = 0;
};

// n - ceil(t / (m* P(m*-2, s-2))) with m* = max{m : P(m,s) <= t}; n when t == 0.
ExactUpperBound upper_bound_exact(std::uint64_t n, std::uint64_t s, const WideCount& t);

// Lower bound n - t/2 and upper bound n - 2t / (1 + sqrt(4t + 1)) for s = 2,
// together with the refined n - B_k bound. Requires t even, t <= n(n-1).
BoundReport bounds_s2(std::uint64_t n, const WideCount& t);

// The same closed forms without the parity and range checks; used where the
// pair count is hypothetical (e.g. t = q - 1 for even q).
BoundReport bounds_s2_unchecked(std::uint64_t n, const WideCount& t);

// Dispatches to bounds_s2 for s == 2, otherwise combines lower_bound and
// upper_bound_exact.
BoundReport bounds_general(std::uint64_t n, std::uint64_t s, const WideCount& t);

// floor(sqrt(x)).
WideCount isqrt(const WideCount& x);

// Parts r_1 >= ... >= r_l >= 2 with sum of T_{r_i} = k.
struct TriangularDecomposition {
    std::uint64_t k = 0;
    std::vector<std::uint64_t> parts;
    std::uint64_t weight = 0;  // sum of (r_i - 1)
};

constexpr std::uint64_t triangular(std::uint64_t r) { return r * (r - 1) / 2; }

// Minimal-weight triangular sums for every k up to a limit. Built once, then
// read-only. Ties prefer the largest part.
class TriangularTable {
public:
    explicit TriangularTable(std::uint64_t k_max);

    std::uint64_t k_max() const noexcept { return best_.size() - 1; }
    std::uint64_t min_weight(std::uint64_t k) const;
    TriangularDecomposition witness(std::uint64_t k) const;

private:
    struct Entry {
        std::uint64_t weight;
        std::uint64_t part;
    };
    std::vector<Entry> best_;
};

TriangularDecomposition triangular_B(std::uint64_t k);

// n - B_{t/2}. Requires t even.
std::int64_t upper_bound_refined_s2(std::uint64_t n, const WideCount& t);

// Pairs up the first t points, injective on the rest: N_2 = t, V = n - t/2.
// Requires t even and t <= n.
FunctionTable construct_lower_tight(std::uint64_t n, const WideCount& t);

// One equal-valued block per part of the B_k witness, injective elsewhere:
// N_2 = 2k, V = n - B_k.
FunctionTable construct_upper_tight(std::uint64_t n, std::uint64_t k);

// q - floor((q - 1) / d). Only meaningful for non-permutation polynomials of
// degree d over F_q.
std::int64_t wan_degree_bound(std::uint64_t q, std::uint64_t d);

}  // namespace valueset
