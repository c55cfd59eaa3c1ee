#include "valueset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include "valueset/numtheory.hpp"

namespace valueset {

namespace {

BigInt to_big(const WideCount& c) { return BigInt(c.str()); }

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt ceil_rational(const Rational& r)
{
    return -floor_div(-boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

std::int64_t to_i64(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("bound does not fit in 64 bits: " + v.str());
    }
    return v.convert_to<std::int64_t>();
}

BigInt factorial(std::uint64_t s)
{
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= s; ++i) f *= i;
    return f;
}

// P(m, s) <= t, without materialising products larger than t.
bool falling_factorial_at_most(std::uint64_t m, std::uint64_t s, const BigInt& t)
{
    if (m < s) return true;
    BigInt p = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
        p *= (m - i);
        if (p > t) return false;
    }
    return true;
}

BigInt falling_factorial_big(std::uint64_t r, std::uint64_t s)
{
    if (r < s) return 0;
    BigInt p = 1;
    for (std::uint64_t i = 0; i < s; ++i) p *= (r - i);
    return p;
}

void check_collision_feasible(std::uint64_t s, const WideCount& t)
{
    if (t != 0 && to_big(t) < factorial(s)) {
        throw infeasible_error("collision count " + t.str() + " is below " + std::to_string(s) +
                               "! and nonzero; no function realises it");
    }
}

constexpr std::uint64_t kRefinedLimit = 200'000;

}  // namespace

WideCount isqrt(const WideCount& x)
{
    return WideCount(boost::multiprecision::sqrt(to_big(x)).str());
}

nlohmann::json to_json(const BoundReport& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["collision_count"] = count_to_json(r.collision_count);
    j["lower_real"] = {{"exact", r.lower_real.str()},
                       {"approx", r.lower_real.convert_to<double>()}};
    j["lower_int"] = r.lower_int;
    j["upper_real"] = {{"approx", r.upper_real}, {"exact", r.upper_real_exact}};
    j["upper_int"] = r.upper_int;
    if (r.singleton_floor) j["singleton_floor"] = *r.singleton_floor;
    if (r.refined_upper) j["refined_upper"] = *r.refined_upper;
    j["provenance"] = r.provenance;
    j["notes"] = r.notes;
    return j;
}

LowerBound lower_bound(std::uint64_t n, std::uint64_t s, const WideCount& t)
{
    if (s < 2) throw parameter_error("lower_bound: s must be >= 2");
    check_collision_feasible(s, t);
    const Rational value =
        (Rational(BigInt(n)) - Rational(to_big(t), factorial(s))) / Rational(BigInt(s - 1));
    return {value, to_i64(ceil_rational(value))};
}

ExactUpperBound upper_bound_exact(std::uint64_t n, std::uint64_t s, const WideCount& t)
{
    if (s < 2) throw parameter_error("upper_bound_exact: s must be >= 2");
    if (t == 0) return {0, static_cast<std::int64_t>(n)};
    check_collision_feasible(s, t);

    const BigInt tb = to_big(t);
    // Largest m with P(m, s) <= t; P(s, s) = s! <= t is guaranteed above.
    std::uint64_t lo = s;
    std::uint64_t hi = s + 1;
    while (falling_factorial_at_most(hi, s, tb)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (falling_factorial_at_most(mid, s, tb)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const std::uint64_t m = lo;
    const BigInt denominator = BigInt(m) * falling_factorial_big(m - 2, s - 2);
    const BigInt deficit = -floor_div(-tb, denominator);
    return {m, to_i64(BigInt(n) - deficit)};
}

BoundReport bounds_s2(std::uint64_t n, const WideCount& t)
{
    if (t % 2 != 0) {
        throw parameter_error("bounds_s2: N_2 = " + t.str() + " is odd; pair counts are even");
    }
    const BigInt nb(n);
    const BigInt tb = to_big(t);
    if (tb > nb * (nb - 1)) {
        throw infeasible_error("bounds_s2: N_2 = " + t.str() + " exceeds n(n-1)");
    }

    return bounds_s2_unchecked(n, t);
}

BoundReport bounds_s2_unchecked(std::uint64_t n, const WideCount& t)
{
    const BigInt nb(n);
    const BigInt tb = to_big(t);
    BoundReport r;
    r.n = n;
    r.s = 2;
    r.collision_count = t;
    r.lower_real = Rational(nb) - Rational(tb, 2);
    r.lower_int = to_i64(ceil_rational(r.lower_real));
    r.provenance["lower"] = "pair-count lower bound n - t/2";

    // 2t / (1 + sqrt(4t+1)) = (sqrt(4t+1) - 1) / 2, so the floor of the upper
    // bound follows from the integer square root alone.
    const BigInt disc = 4 * tb + 1;
    const BigInt root = boost::multiprecision::sqrt(disc);
    if (root * root == disc) {
        r.upper_int = to_i64(nb - (root - 1) / 2);
        r.upper_real = static_cast<double>(r.upper_int);
        r.upper_real_exact = true;
        r.provenance["upper"] = "pair-count upper bound n - 2t/(1+sqrt(4t+1)), 4t+1 a square";
    } else {
        const BigInt floor_value = root % 2 == 1 ? BigInt(nb - (root - 1) / 2 - 1) : BigInt(nb - root / 2);
        r.upper_int = to_i64(floor_value);
        const double td = tb.convert_to<double>();
        r.upper_real = static_cast<double>(n) - 2.0 * td / (1.0 + std::sqrt(4.0 * td + 1.0));
        r.upper_real_exact = false;
        r.provenance["upper"] = "pair-count upper bound n - 2t/(1+sqrt(4t+1))";
        // The floating value is informational; the integer comes from isqrt.
        if (std::floor(r.upper_real + 1e-12) != static_cast<double>(r.upper_int) &&
            std::abs(r.upper_real) < 1e15) {
            r.notes.push_back("floating upper_real disagrees with exact floor beyond 1e-12");
        }
    }

    r.singleton_floor = std::max<std::int64_t>(0, to_i64(nb - tb));
    r.provenance["singleton_floor"] = "M_1 >= max(0, n - t)";

    const BigInt k = tb / 2;
    if (tb % 2 != 0) {
        r.notes.push_back("refined n - B_k bound skipped: t is odd");
    } else if (k <= kRefinedLimit) {
        r.refined_upper = upper_bound_refined_s2(n, t);
        r.provenance["refined_upper"] = "n - B_k, minimal-weight triangular sum for k = t/2";
    } else {
        r.notes.push_back("refined n - B_k bound skipped: k = t/2 exceeds " +
                          std::to_string(kRefinedLimit));
    }
    return r;
}

BoundReport bounds_general(std::uint64_t n, std::uint64_t s, const WideCount& t)
{
    if (s == 2) return bounds_s2(n, t);
    if (s < 2) throw parameter_error("bounds: s must be >= 2");
    const auto lo = lower_bound(n, s, t);
    const auto hi = upper_bound_exact(n, s, t);
    BoundReport r;
    r.n = n;
    r.s = s;
    r.collision_count = t;
    r.lower_real = lo.value;
    r.lower_int = lo.ceiling;
    r.upper_real = static_cast<double>(hi.value);
    r.upper_real_exact = true;
    r.upper_int = hi.value;
    r.provenance["lower"] = "(n - t/s!)/(s-1)";
    r.provenance["upper"] =
        "n - ceil(t / (m* P(m*-2, s-2))), m* = max{m : P(m,s) <= t} = " +
        std::to_string(hi.max_multiplicity);
    r.notes.push_back("asymptotic form n - t^(1/s) + O(t^(1/(s+1))) is not evaluated");
    return r;
}

TriangularTable::TriangularTable(std::uint64_t k_max) : best_(k_max + 1, Entry{0, 0})
{
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        Entry e{std::numeric_limits<std::uint64_t>::max(), 0};
        // Ascending r with <= keeps the largest part among ties.
        for (std::uint64_t r = 2; triangular(r) <= k; ++r) {
            const std::uint64_t w = (r - 1) + best_[k - triangular(r)].weight;
            if (w <= e.weight) e = Entry{w, r};
        }
        best_[k] = e;
    }
}

std::uint64_t TriangularTable::min_weight(std::uint64_t k) const
{
    if (k > k_max()) throw parameter_error("TriangularTable: k beyond table");
    return best_[k].weight;
}

TriangularDecomposition TriangularTable::witness(std::uint64_t k) const
{
    if (k > k_max()) throw parameter_error("TriangularTable: k beyond table");
    TriangularDecomposition d;
    d.k = k;
    d.weight = best_[k].weight;
    for (std::uint64_t rest = k; rest > 0; rest -= triangular(best_[rest].part)) {
        d.parts.push_back(best_[rest].part);
    }
    std::sort(d.parts.begin(), d.parts.end(), std::greater<>());
    return d;
}

namespace {

// Process-wide table, replaced by a larger immutable one when a bigger k is asked for.
std::shared_ptr<const TriangularTable> shared_table(std::uint64_t k)
{
    static std::mutex mutex;
    static std::shared_ptr<const TriangularTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->k_max() < k) {
        const std::uint64_t grown = table ? std::max(k, 2 * table->k_max()) : std::max<std::uint64_t>(k, 1024);
        table = std::make_shared<const TriangularTable>(std::min(grown, std::max(k, kRefinedLimit)));
    }
    return table;
}

}  // namespace

TriangularDecomposition triangular_B(std::uint64_t k)
{
    if (k > kRefinedLimit) return TriangularTable(k).witness(k);
    return shared_table(k)->witness(k);
}

std::int64_t upper_bound_refined_s2(std::uint64_t n, const WideCount& t)
{
    if (t % 2 != 0) {
        throw parameter_error("upper_bound_refined_s2: N_2 = " + t.str() + " is odd");
    }
    const WideCount k = t / 2;
    if (k > kRefinedLimit) {
        throw budget_exceeded("upper_bound_refined_s2: k = " + k.str() + " exceeds table limit " +
                              std::to_string(kRefinedLimit));
    }
    const auto b = triangular_B(k.convert_to<std::uint64_t>()).weight;
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(b);
}

FunctionTable construct_lower_tight(std::uint64_t n, const WideCount& t)
{
    if (t % 2 != 0) throw parameter_error("construct_lower_tight: t must be even");
    if (t > n) {
        throw infeasible_error("construct_lower_tight: t = " + t.str() + " exceeds n = " +
                               std::to_string(n));
    }
    const auto tt = t.convert_to<std::uint64_t>();
    std::vector<Label> values(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        values[x] = x < tt ? x / 2 : tt / 2 + (x - tt);
    }
    return FunctionTable(std::move(values));
}

FunctionTable construct_upper_tight(std::uint64_t n, std::uint64_t k)
{
    const auto w = triangular_B(k);
    std::uint64_t used = 0;
    for (auto r : w.parts) used += r;
    if (used > n) {
        throw infeasible_error("construct_upper_tight: witness blocks need " +
                               std::to_string(used) + " points, only " + std::to_string(n) +
                               " available");
    }
    std::vector<Label> values;
    values.reserve(n);
    Label label = 0;
    for (auto r : w.parts) {
        values.insert(values.end(), r, label++);
    }
    while (values.size() < n) values.push_back(label++);
    return FunctionTable(std::move(values));
}

std::int64_t wan_degree_bound(std::uint64_t q, std::uint64_t d)
{
    if (!as_prime_power(q)) throw parameter_error("wan_degree_bound: q must be a prime power");
    if (d == 0 || d >= q) throw parameter_error("wan_degree_bound: degree must satisfy 1 <= d < q");
    return static_cast<std::int64_t>(q - (q - 1) / d);
}

}  // namespace valueset
