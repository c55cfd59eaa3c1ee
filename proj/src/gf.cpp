#include "valueset/gf.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "valueset/numtheory.hpp"

namespace valueset {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

void trim(PrimePoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g.
PrimePoly poly_mod(PrimePoly f, const PrimePoly& g, std::uint64_t p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = static_cast<Elem>((f[shift + i] + (p - lead) * g[i]) % p);
        }
        trim(f);
    }
    return f;
}

PrimePoly digits_of(std::uint64_t e, std::uint64_t p, unsigned len)
{
    PrimePoly d(len);
    for (unsigned i = 0; i < len; ++i) {
        d[i] = static_cast<Elem>(e % p);
        e /= p;
    }
    return d;
}

}  // namespace

bool Field::is_irreducible(const PrimePoly& f_in, std::uint64_t p)
{
    PrimePoly f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    if (d == 1) return true;
    // Make f monic so the check does not depend on scaling.
    const std::uint64_t lead = f.back();
    std::uint64_t lead_inv = 1;
    for (std::uint64_t e = p - 2, b = lead; e; e >>= 1, b = b * b % p) {
        if (e & 1) lead_inv = lead_inv * b % p;
    }
    for (auto& c : f) c = static_cast<Elem>(c * lead_inv % p);

    for (unsigned dg = 1; dg <= d / 2; ++dg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t e = 0; e < count; ++e) {
            PrimePoly g = digits_of(e, p, dg);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<PrimePoly> Field::irreducible_moduli(std::uint64_t p, unsigned k)
{
    std::vector<PrimePoly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t e = 0; e < count; ++e) {
        PrimePoly g = digits_of(e, p, k);
        g.push_back(1);
        if (is_irreducible(g, p)) out.push_back(std::move(g));
    }
    return out;
}

FieldPtr Field::build(std::uint64_t p, unsigned k, std::optional<PrimePoly> modulus)
{
    if (!is_prime(p)) throw parameter_error("field: p = " + std::to_string(p) + " is not prime");
    if (k == 0) throw parameter_error("field: k must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw parameter_error("field: order exceeds " + std::to_string(kMaxFieldOrder));
        }
    }

    PrimePoly chosen;
    if (modulus) {
        PrimePoly m = *modulus;
        if (m.size() != k + 1 || m.back() != 1) {
            throw parameter_error("field: modulus must be monic of degree " + std::to_string(k) +
                                  ", given little-endian with its leading 1");
        }
        for (auto c : m) {
            if (c >= p) throw parameter_error("field: modulus coefficient outside F_p");
        }
        if (!is_irreducible(m, p)) throw parameter_error("field: modulus is reducible");
        if (k > 1) chosen = std::move(m);
    } else if (k > 1) {
        for (std::uint64_t e = 0; e < q; ++e) {
            PrimePoly g = digits_of(e, p, k);
            g.push_back(1);
            if (is_irreducible(g, p)) {
                chosen = std::move(g);
                break;
            }
        }
    }
    return std::make_shared<const Field>(static_cast<std::uint32_t>(p), k, std::move(chosen));
}

Field::Field(std::uint32_t p, unsigned k, PrimePoly modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < k_; ++i) q_ *= p_;

    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        Elem out = 0;
        Elem scale = 1;
        for (Elem rest = a; rest; rest /= p_) {
            out += ((p_ - rest % p_) % p_) * scale;
            scale *= p_;
        }
        neg_[a] = out;
    }

    if (q_ <= kAddTableLimit) {
        add_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a) {
            for (Elem b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = add_digits(a, b);
        }
    }

    order_factors_ = prime_factors(q_ - 1);
    auto slow_pow = [this](Elem a, std::uint64_t e) {
        Elem r = 1;
        for (; e; e >>= 1, a = mul_digits(a, a)) {
            if (e & 1) r = mul_digits(r, a);
        }
        return r;
    };
    Elem g = 1;
    for (Elem cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (auto r : order_factors_) {
            if (slow_pow(cand, (q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_digits(x, g);
    }

    trace_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        Elem sum = 0;
        Elem term = a;
        for (unsigned i = 0; i < k_; ++i) {
            sum = add(sum, term);
            term = pow(term, p_);
        }
        trace_[a] = sum;
    }
}

Elem Field::add_digits(Elem a, Elem b) const
{
    Elem out = 0;
    Elem scale = 1;
    while (a || b) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::mul_digits(Elem a, Elem b) const
{
    if (k_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);
    const PrimePoly da = digits_of(a, p_, k_);
    const PrimePoly db = digits_of(b, p_, k_);
    PrimePoly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        for (unsigned j = 0; j < k_; ++j) {
            prod[i + j] = static_cast<Elem>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
        }
    }
    const PrimePoly r = poly_mod(prod, modulus_, p_);
    Elem out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

Elem Field::inv(Elem a) const
{
    if (a == 0) throw parameter_error("field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
    Elem r = 1;
    for (; e; e >>= 1, a = mul(a, a)) {
        if (e & 1) r = mul(r, a);
    }
    return r;
}

bool Field::is_primitive(Elem x) const
{
    check_element(x);
    if (x == 0) throw parameter_error("is_primitive: zero has no multiplicative order");
    for (auto r : order_factors_) {
        if (pow(x, (q_ - 1) / r) == 1) return false;
    }
    return true;
}

std::vector<Elem> Field::primitive_elements() const
{
    std::vector<Elem> out;
    for (Elem x = 1; x < q_; ++x) {
        if (is_primitive(x)) out.push_back(x);
    }
    return out;
}

std::string Field::name() const
{
    return "F_" + std::to_string(q_);
}

nlohmann::json Field::describe() const
{
    nlohmann::json j;
    j["p"] = p_;
    j["k"] = k_;
    j["q"] = q_;
    j["modulus"] = modulus_;
    return j;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value)
{
    if (!field_) throw parameter_error("FieldElement: null field");
    field_->check_element(value_);
}

const Field& FieldElement::same_field(const FieldElement& o) const
{
    if (field_ != o.field_ && !(*field_ == *o.field_)) {
        throw parameter_error("FieldElement: operands belong to different fields");
    }
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    return {field_, same_field(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const
{
    return {field_, same_field(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const
{
    return {field_, same_field(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const
{
    return {field_, same_field(o).div(value_, o.value_)};
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::trace() const { return {field_, field_->trace(value_)}; }
bool FieldElement::is_primitive() const { return field_->is_primitive(value_); }

bool FieldElement::operator==(const FieldElement& o) const
{
    return value_ == o.value_ && (field_ == o.field_ || *field_ == *o.field_);
}

std::vector<std::uint64_t> difference_distribution(const Field& field,
                                                   std::span<const Elem> values)
{
    const std::uint32_t q = field.q();
    std::vector<std::uint64_t> hits(q, 0);
    for (Elem v : values) {
        field.check_element(v);
        ++hits[v];
    }
    std::vector<std::uint64_t> w(q, 0);
    for (Elem u = 0; u < q; ++u) {
        if (!hits[u]) continue;
        for (Elem v = 0; v < q; ++v) {
            if (hits[v]) w[field.sub(u, v)] += hits[u] * hits[v];
        }
    }
    return w;
}

CharacterCountVector char_count_vector(const Field& field, std::span<const std::uint64_t> diffs,
                                       Elem h)
{
    if (h == 0) throw parameter_error("char_count_vector: h must be nonzero");
    field.check_element(h);
    CharacterCountVector v{h, std::vector<std::uint64_t>(field.p(), 0)};
    for (Elem c = 0; c < field.q(); ++c) {
        if (diffs[c]) v.d[field.trace(field.mul(h, c))] += diffs[c];
    }
    return v;
}

CharacterCountVector char_count_vector(const Field& field, std::span<const Elem> values, Elem h)
{
    const auto w = difference_distribution(field, values);
    return char_count_vector(field, w, h);
}

bool char_sum_sq_is_q(const CharacterCountVector& v, std::uint32_t q)
{
    if (v.d.empty() || v.d[0] < q) return false;
    const std::uint64_t shifted = v.d[0] - q;
    for (std::size_t j = 1; j < v.d.size(); ++j) {
        if (v.d[j] != shifted) return false;
    }
    return true;
}

double char_sum_abs_float(const Field& field, std::span<const Elem> values, Elem h)
{
    field.check_element(h);
    const double angle = 2.0 * std::numbers::pi / field.p();
    std::complex<double> sum = 0.0;
    for (Elem v : values) {
        const Elem j = field.trace(field.mul(h, v));
        sum += std::polar(1.0, angle * j);
    }
    return std::abs(sum);
}

}  // namespace valueset
