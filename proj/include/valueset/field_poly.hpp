#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "valueset/function_table.hpp"
#include "valueset/gf.hpp"

namespace valueset {

// Polynomial over a Field with little-endian coefficients; trailing zeros
// are trimmed, so the zero polynomial has no coefficients.
class FieldPoly {
public:
    FieldPoly(FieldPtr field, std::vector<Elem> coeffs);

    // Sum of coeff * X^exponent terms.
    static FieldPoly from_terms(FieldPtr field,
                                std::initializer_list<std::pair<std::uint64_t, Elem>> terms);
    static FieldPoly monomial(FieldPtr field, std::uint64_t exponent, Elem coeff = 1);

    // The unique polynomial of degree < q with the given value at every
    // element (values indexed by encoding).
    static FieldPoly interpolate(FieldPtr field, std::span<const Elem> values);
    static FieldPoly interpolate(FieldPtr field, const FunctionTable& table);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    // nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;

    Elem eval(Elem x) const;
    // Values at every element in encoding order.
    std::vector<Elem> values() const;
    FunctionTable table() const;

    // f mod (X^q - X).
    FieldPoly reduced() const;

    bool operator==(const FieldPoly& o) const;

private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

// Polynomial spec: {"p":3,"k":2,"modulus":[1,0,1],"coeffs":[c0,c1,...]}.
// The modulus is optional (canonical when absent).
FieldPoly poly_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const FieldPoly& f);

std::vector<Elem> to_elements(const Field& field, const FunctionTable& table);

}  // namespace valueset
