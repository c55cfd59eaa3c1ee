#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "valueset/errors.hpp"

namespace valueset {

// Field elements are encoded as integers in [0, q): the base-p digits of the
// encoding, least significant first, are the coordinates in the polynomial
// basis 1, X, ..., X^(k-1).
using Elem = std::uint32_t;

// Dense coefficient vector over F_p, least significant first.
using PrimePoly = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^k} with an explicit irreducible modulus. Immutable once built; the
// exp/log, addition and trace tables are filled at construction.
class Field {
public:
    // With no modulus the canonical one is used: the monic irreducible whose
    // non-leading coefficients, read as a base-p number, are smallest.
    // A supplied modulus is little-endian including its leading 1.
    static FieldPtr build(std::uint64_t p, unsigned k,
                          std::optional<PrimePoly> modulus = std::nullopt);

    // All monic irreducibles of degree k over F_p, ordered by encoding.
    static std::vector<PrimePoly> irreducible_moduli(std::uint64_t p, unsigned k);
    static bool is_irreducible(const PrimePoly& f, std::uint64_t p);

    std::uint32_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    // Empty for prime fields.
    const PrimePoly& modulus() const noexcept { return modulus_; }

    bool operator==(const Field& other) const
    {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    // The prime-subfield element c (0 <= c < p).
    Elem constant(std::uint32_t c) const { return c % p_; }

    Elem add(Elem a, Elem b) const
    {
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    // Square-and-multiply; pow(0, 0) == 1.
    Elem pow(Elem a, std::uint64_t e) const;

    // x + x^p + ... + x^(p^(k-1)), an element of the prime subfield.
    Elem trace(Elem x) const { return trace_[x]; }

    bool is_primitive(Elem x) const;
    std::vector<Elem> primitive_elements() const;

    // A fixed primitive element used for the exp/log tables.
    Elem generator() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }

    void check_element(Elem x) const
    {
        if (x >= q_) {
            throw parameter_error("element " + std::to_string(x) + " outside F_" +
                                  std::to_string(q_));
        }
    }

    std::string name() const;
    nlohmann::json describe() const;

    // Use build(); public only for std::make_shared.
    Field(std::uint32_t p, unsigned k, PrimePoly modulus);

private:
    Elem add_digits(Elem a, Elem b) const;
    Elem mul_digits(Elem a, Elem b) const;

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    PrimePoly modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> trace_;
    std::vector<Elem> add_table_;
    std::vector<std::uint64_t> order_factors_;
};

// Value type pairing an encoding with its field.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value);

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement trace() const;
    bool is_primitive() const;

    bool operator==(const FieldElement& o) const;

private:
    const Field& same_field(const FieldElement& o) const;

    FieldPtr field_;
    Elem value_;
};

// Image counts of x -> Tr(h (f(x) - f(y))) over all pairs: d[j] counts pairs
// whose trace is j. Sum of d is q^2.
struct CharacterCountVector {
    Elem h = 0;
    std::vector<std::uint64_t> d;
};

// w[c] = #{(x, y) : f(x) - f(y) = c}, from the value distribution of f.
std::vector<std::uint64_t> difference_distribution(const Field& field,
                                                   std::span<const Elem> values);

CharacterCountVector char_count_vector(const Field& field, std::span<const std::uint64_t> diffs,
                                       Elem h);
CharacterCountVector char_count_vector(const Field& field, std::span<const Elem> values, Elem h);

// |S_h|^2 = sum_j d[j] w^j equals q exactly when d[0] - q = d[1] = ... = d[p-1],
// since 1 + X + ... + X^(p-1) is the minimal polynomial of a primitive p-th
// root of unity.
bool char_sum_sq_is_q(const CharacterCountVector& v, std::uint32_t q);

// |sum_x w^Tr(h f(x))| in floating point.
double char_sum_abs_float(const Field& field, std::span<const Elem> values, Elem h);

}  // namespace valueset
