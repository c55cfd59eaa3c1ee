#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "valueset/bounds.hpp"
#include "valueset/field_poly.hpp"
#include "valueset/wide_count.hpp"

namespace valueset {

// Which of the four conditions a function on F_q satisfies:
//   c1  planar: every difference function x -> f(x+a) - f(x), a != 0, is a bijection
//   c2  |S_h(f)|^2 = q for every h != 0
//   c3  every difference function (a != 0) has exactly one root
//   c4  N_2(f) = q - 1
// Failure witnesses are the smallest a (c1, c3) or h (c2) that breaks the condition.
struct ConditionProfile {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    bool c4 = false;
    WideCount n2 = 0;
    std::optional<Elem> c1_witness;
    std::optional<Elem> c2_witness;
    std::optional<Elem> c3_witness;
    // q even: c1 and c4 cannot hold (difference functions are 2-to-1, N_2 is even).
    bool even_order = false;

    // Bit 3 = c1, bit 2 = c2, bit 1 = c3, bit 0 = c4.
    unsigned mask() const noexcept { return (c1 << 3) | (c2 << 2) | (c3 << 1) | unsigned(c4); }
    bool respects_implications() const noexcept;
};

// "c1c2c3c4" as four binary digits, e.g. "0111".
std::string mask_string(unsigned mask);
bool mask_respects_implications(unsigned mask) noexcept;

nlohmann::json to_json(const ConditionProfile& p);

// x -> f(x + a) - f(x). Requires a != 0.
FunctionTable difference_table(const FieldPoly& f, Elem a);

struct ConditionResult {
    bool holds = false;
    std::optional<Elem> witness;
};

ConditionResult test_c1(const FieldPoly& f);
ConditionResult test_c2(const FieldPoly& f);
ConditionResult test_c3(const FieldPoly& f);
bool test_c4(const FieldPoly& f);
WideCount n2_poly(const FieldPoly& f);

// Straightforward profile built from the per-condition tests above (tables,
// image counts, character count vectors). Kept as the reference path.
ConditionProfile profile_reference(const Field& field, std::span<const Elem> values);
ConditionProfile profile(const FieldPoly& f);

// Table-driven profile evaluation for enumeration loops. Holds scratch
// buffers, so one instance per thread.
class ConditionKernel {
public:
    explicit ConditionKernel(FieldPtr field);

    const Field& field() const noexcept { return *field_; }
    ConditionProfile evaluate(std::span<const Elem> values);

private:
    FieldPtr field_;
    std::uint32_t q_;
    std::uint32_t p_;
    std::vector<Elem> add_;         // q x q
    std::vector<Elem> sub_;         // q x q
    std::vector<Elem> trace_of_product_;  // q x q: Tr(h c)
    std::vector<std::uint32_t> hits_;
    std::vector<std::uint64_t> diffs_;
    std::vector<std::uint32_t> seen_;
    std::vector<std::uint64_t> d_;
    std::uint32_t stamp_ = 0;
};

struct LemmaCheck {
    WideCount sum = 0;       // sum over a of N_2(f(X) + aX)
    WideCount expected = 0;  // q (q - 1)
    bool ok = false;
};

LemmaCheck verify_average_lemma(const FieldPoly& f);

// Bounds for a polynomial over F_q with N_2 = q - 1: [(q+1)/2, q - 2(q-1)/(1+sqrt(4q-3))].
BoundReport poly_version_bounds(std::uint64_t q);

// Least k in [1, q-1] with sum_x f(x)^k != 0; nullopt means infinity.
std::optional<std::uint64_t> up_invariant(const FieldPoly& f);
// u_p + 1 when u_p is finite.
std::optional<std::uint64_t> wsc_lower(const FieldPoly& f);

}  // namespace valueset
