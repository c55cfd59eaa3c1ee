#include "valueset/field_poly.hpp"

namespace valueset {

FieldPoly::FieldPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (!field_) throw parameter_error("FieldPoly: null field");
    for (Elem c : coeffs_) field_->check_element(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPoly FieldPoly::from_terms(FieldPtr field,
                                std::initializer_list<std::pair<std::uint64_t, Elem>> terms)
{
    std::vector<Elem> coeffs;
    for (const auto& [e, c] : terms) {
        field->check_element(c);
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] = field->add(coeffs[e], c);
    }
    return FieldPoly(std::move(field), std::move(coeffs));
}

FieldPoly FieldPoly::monomial(FieldPtr field, std::uint64_t exponent, Elem coeff)
{
    std::vector<Elem> coeffs(exponent + 1, 0);
    coeffs[exponent] = coeff;
    return FieldPoly(std::move(field), std::move(coeffs));
}

FieldPoly FieldPoly::interpolate(FieldPtr field, std::span<const Elem> values)
{
    const Field& F = *field;
    const std::uint32_t q = F.q();
    if (values.size() != q) {
        throw parameter_error("interpolate: expected " + std::to_string(q) + " values, got " +
                              std::to_string(values.size()));
    }
    for (Elem v : values) F.check_element(v);
    // c_0 = f(0); c_j = -sum_a f(a) a^(q-1-j) for 1 <= j <= q-1 (with a^0 = 1).
    std::vector<Elem> coeffs(q, 0);
    coeffs[0] = values[0];
    for (std::uint32_t j = 1; j < q; ++j) {
        Elem sum = 0;
        for (Elem a = 0; a < q; ++a) {
            if (values[a] == 0) continue;
            sum = F.add(sum, F.mul(values[a], F.pow(a, q - 1 - j)));
        }
        coeffs[j] = F.neg(sum);
    }
    return FieldPoly(std::move(field), std::move(coeffs));
}

FieldPoly FieldPoly::interpolate(FieldPtr field, const FunctionTable& table)
{
    const auto elems = to_elements(*field, table);
    return interpolate(std::move(field), elems);
}

std::optional<std::size_t> FieldPoly::degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Elem FieldPoly::eval(Elem x) const
{
    field_->check_element(x);
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    }
    return acc;
}

std::vector<Elem> FieldPoly::values() const
{
    std::vector<Elem> out(field_->q());
    for (Elem x = 0; x < field_->q(); ++x) out[x] = eval(x);
    return out;
}

FunctionTable FieldPoly::table() const
{
    const auto v = values();
    return FunctionTable(std::vector<Label>(v.begin(), v.end()));
}

FieldPoly FieldPoly::reduced() const
{
    const std::uint64_t q = field_->q();
    if (coeffs_.size() <= q) return *this;
    std::vector<Elem> out(q, 0);
    out[0] = coeffs_[0];
    for (std::uint64_t j = 1; j < coeffs_.size(); ++j) {
        const std::uint64_t e = (j - 1) % (q - 1) + 1;
        out[e] = field_->add(out[e], coeffs_[j]);
    }
    return FieldPoly(field_, std::move(out));
}

bool FieldPoly::operator==(const FieldPoly& o) const
{
    return coeffs_ == o.coeffs_ && (field_ == o.field_ || *field_ == *o.field_);
}

FieldPoly poly_from_json(const nlohmann::json& j)
{
    try {
        if (!j.is_object()) throw input_error("polynomial spec must be a JSON object");
        const auto p = j.at("p").get<std::uint64_t>();
        const auto k = j.contains("k") ? j.at("k").get<unsigned>() : 1u;
        std::optional<PrimePoly> modulus;
        if (j.contains("modulus") && !j.at("modulus").is_null()) {
            modulus = j.at("modulus").get<PrimePoly>();
        }
        auto field = Field::build(p, k, modulus);
        auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
        std::vector<Elem> elems;
        elems.reserve(coeffs.size());
        for (auto c : coeffs) {
            if (c < 0 || c >= static_cast<std::int64_t>(field->q())) {
                throw input_error("polynomial spec: coefficient " + std::to_string(c) +
                                  " outside [0, q)");
            }
            elems.push_back(static_cast<Elem>(c));
        }
        return FieldPoly(std::move(field), std::move(elems));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("polynomial spec: ") + e.what());
    }
}

nlohmann::json poly_to_json(const FieldPoly& f)
{
    nlohmann::json j = f.field()->describe();
    j.erase("q");
    j["coeffs"] = f.coeffs();
    return j;
}

std::vector<Elem> to_elements(const Field& field, const FunctionTable& table)
{
    if (table.domain_size() != field.q()) {
        throw parameter_error("table has " + std::to_string(table.domain_size()) +
                              " points, field has " + std::to_string(field.q()));
    }
    std::vector<Elem> out;
    out.reserve(field.q());
    for (Label v : table.values()) {
        if (v >= field.q()) {
            throw parameter_error("table value " + std::to_string(v) + " is not an element of " +
                                  field.name());
        }
        out.push_back(static_cast<Elem>(v));
    }
    return out;
}

}  // namespace valueset
