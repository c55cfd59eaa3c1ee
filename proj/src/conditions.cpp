#include "valueset/conditions.hpp"

#include "valueset/funcstats.hpp"

namespace valueset {

bool mask_respects_implications(unsigned mask) noexcept
{
    const bool c1 = mask & 8, c2 = mask & 4, c3 = mask & 2, c4 = mask & 1;
    return !(c1 && !c2) && !(c1 && !c3) && !(c3 && !c4) && !(c2 && !c4);
}

bool ConditionProfile::respects_implications() const noexcept
{
    return mask_respects_implications(mask());
}

std::string mask_string(unsigned mask)
{
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) {
        if (mask & (8u >> i)) s[i] = '1';
    }
    return s;
}

nlohmann::json to_json(const ConditionProfile& p)
{
    nlohmann::json j;
    j["c1"] = p.c1;
    j["c2"] = p.c2;
    j["c3"] = p.c3;
    j["c4"] = p.c4;
    j["mask"] = mask_string(p.mask());
    j["n2"] = count_to_json(p.n2);
    nlohmann::json w = nlohmann::json::object();
    if (p.c1_witness) w["c1"] = {{"a", *p.c1_witness}};
    if (p.c2_witness) w["c2"] = {{"h", *p.c2_witness}};
    if (p.c3_witness) w["c3"] = {{"a", *p.c3_witness}};
    j["failure_witnesses"] = w;
    if (p.even_order) {
        j["even_order_note"] =
            "q even: c1 and c4 are false by parity (N_2 is even, q - 1 is odd)";
    }
    return j;
}

FunctionTable difference_table(const FieldPoly& f, Elem a)
{
    const Field& F = *f.field();
    F.check_element(a);
    if (a == 0) throw parameter_error("difference_table: a must be nonzero");
    const auto v = f.values();
    std::vector<Label> out(F.q());
    for (Elem x = 0; x < F.q(); ++x) out[x] = F.sub(v[F.add(x, a)], v[x]);
    return FunctionTable(std::move(out));
}

namespace {

std::vector<Elem> difference_values(const Field& F, std::span<const Elem> v, Elem a)
{
    std::vector<Elem> out(F.q());
    for (Elem x = 0; x < F.q(); ++x) out[x] = F.sub(v[F.add(x, a)], v[x]);
    return out;
}

FunctionTable as_table(std::span<const Elem> v)
{
    return FunctionTable(std::vector<Label>(v.begin(), v.end()));
}

ConditionResult c1_of(const Field& F, std::span<const Elem> v)
{
    for (Elem a = 1; a < F.q(); ++a) {
        if (image_count(as_table(difference_values(F, v, a))) != F.q()) return {false, a};
    }
    return {true, std::nullopt};
}

ConditionResult c2_of(const Field& F, std::span<const Elem> v)
{
    const auto w = difference_distribution(F, v);
    for (Elem h = 1; h < F.q(); ++h) {
        if (!char_sum_sq_is_q(char_count_vector(F, w, h), F.q())) return {false, h};
    }
    return {true, std::nullopt};
}

ConditionResult c3_of(const Field& F, std::span<const Elem> v)
{
    for (Elem a = 1; a < F.q(); ++a) {
        const auto d = difference_values(F, v, a);
        std::size_t roots = 0;
        for (Elem y : d) roots += (y == 0);
        if (roots != 1) return {false, a};
    }
    return {true, std::nullopt};
}

}  // namespace

ConditionResult test_c1(const FieldPoly& f) { return c1_of(*f.field(), f.values()); }
ConditionResult test_c2(const FieldPoly& f) { return c2_of(*f.field(), f.values()); }
ConditionResult test_c3(const FieldPoly& f) { return c3_of(*f.field(), f.values()); }

WideCount n2_poly(const FieldPoly& f)
{
    // Sum of n_c (n_c - 1) over the value distribution.
    std::vector<std::uint64_t> hits(f.field()->q(), 0);
    for (Elem v : f.values()) ++hits[v];
    WideCount n2 = 0;
    for (auto c : hits) {
        if (c > 1) n2 += WideCount(c) * WideCount(c - 1);
    }
    return n2;
}

bool test_c4(const FieldPoly& f) { return n2_poly(f) == WideCount(f.field()->q() - 1); }

ConditionProfile profile_reference(const Field& F, std::span<const Elem> v)
{
    if (v.size() != F.q()) throw parameter_error("profile: table size differs from q");
    ConditionProfile p;
    const auto r1 = c1_of(F, v);
    const auto r2 = c2_of(F, v);
    const auto r3 = c3_of(F, v);
    p.c1 = r1.holds;
    p.c1_witness = r1.witness;
    p.c2 = r2.holds;
    p.c2_witness = r2.witness;
    p.c3 = r3.holds;
    p.c3_witness = r3.witness;
    p.n2 = collision_count(as_table(v), 2);
    p.c4 = p.n2 == WideCount(F.q() - 1);
    p.even_order = F.q() % 2 == 0;
    return p;
}

ConditionProfile profile(const FieldPoly& f)
{
    return profile_reference(*f.field(), f.values());
}

ConditionKernel::ConditionKernel(FieldPtr field)
    : field_(std::move(field)), q_(field_->q()), p_(field_->p())
{
    const std::size_t qq = std::size_t(q_) * q_;
    add_.resize(qq);
    sub_.resize(qq);
    trace_of_product_.resize(qq);
    for (Elem a = 0; a < q_; ++a) {
        for (Elem b = 0; b < q_; ++b) {
            add_[a * q_ + b] = field_->add(a, b);
            sub_[a * q_ + b] = field_->sub(a, b);
            trace_of_product_[a * q_ + b] = field_->trace(field_->mul(a, b));
        }
    }
    hits_.resize(q_);
    diffs_.resize(q_);
    seen_.assign(q_, 0);
    d_.resize(p_);
}

ConditionProfile ConditionKernel::evaluate(std::span<const Elem> v)
{
    ConditionProfile out;
    out.even_order = q_ % 2 == 0;

    std::fill(hits_.begin(), hits_.end(), 0);
    for (Elem y : v) ++hits_[y];
    std::uint64_t n2 = 0;
    for (auto c : hits_) n2 += std::uint64_t(c) * (c ? c - 1 : 0);
    out.n2 = n2;
    out.c4 = n2 == q_ - 1;

    // c1 and c3 from the difference functions.
    out.c1 = true;
    out.c3 = true;
    for (Elem a = 1; a < q_ && (out.c1 || out.c3); ++a) {
        if (++stamp_ == 0) {
            std::fill(seen_.begin(), seen_.end(), 0);
            stamp_ = 1;
        }
        bool bijective = true;
        unsigned roots = 0;
        for (Elem x = 0; x < q_; ++x) {
            const Elem d = sub_[v[add_[x * q_ + a]] * q_ + v[x]];
            roots += (d == 0);
            if (seen_[d] == stamp_) bijective = false;
            seen_[d] = stamp_;
        }
        if (out.c1 && !bijective) {
            out.c1 = false;
            out.c1_witness = a;
        }
        if (out.c3 && roots != 1) {
            out.c3 = false;
            out.c3_witness = a;
        }
    }

    // c2 from the distribution of differences f(x) - f(y).
    std::fill(diffs_.begin(), diffs_.end(), 0);
    for (Elem u = 0; u < q_; ++u) {
        if (!hits_[u]) continue;
        for (Elem w = 0; w < q_; ++w) {
            if (hits_[w]) diffs_[sub_[u * q_ + w]] += std::uint64_t(hits_[u]) * hits_[w];
        }
    }
    out.c2 = true;
    for (Elem h = 1; h < q_; ++h) {
        std::fill(d_.begin(), d_.end(), 0);
        const Elem* tr = &trace_of_product_[std::size_t(h) * q_];
        for (Elem c = 0; c < q_; ++c) d_[tr[c]] += diffs_[c];
        bool equal = d_[0] >= q_;
        for (std::uint32_t j = 1; equal && j < p_; ++j) equal = d_[j] == d_[0] - q_;
        if (!equal) {
            out.c2 = false;
            out.c2_witness = h;
            break;
        }
    }
    return out;
}

LemmaCheck verify_average_lemma(const FieldPoly& f)
{
    const Field& F = *f.field();
    const auto v = f.values();
    LemmaCheck out;
    std::vector<Label> shifted(F.q());
    for (Elem a = 0; a < F.q(); ++a) {
        for (Elem x = 0; x < F.q(); ++x) shifted[x] = F.add(v[x], F.mul(a, x));
        out.sum += collision_count(FunctionTable(shifted), 2);
    }
    out.expected = WideCount(F.q()) * WideCount(F.q() - 1);
    out.ok = out.sum == out.expected;
    return out;
}

BoundReport poly_version_bounds(std::uint64_t q)
{
    if (q < 2) throw parameter_error("poly_version_bounds: q must be >= 2");
    BoundReport r = q % 2 == 1 ? bounds_s2(q, q - 1) : bounds_s2_unchecked(q, q - 1);
    r.provenance["lower"] = "(q+1)/2 from n - t/2 with n = q, t = q - 1";
    r.provenance["upper"] = "q - 2(q-1)/(1+sqrt(4q-3)) from the pair-count upper bound";
    if (q % 2 == 0) {
        r.notes.push_back("q even: N_2 = q - 1 is odd, so no function attains it");
    }
    return r;
}

std::optional<std::uint64_t> up_invariant(const FieldPoly& f)
{
    const Field& F = *f.field();
    const auto v = f.values();
    std::vector<Elem> power(v.begin(), v.end());
    for (std::uint64_t k = 1; k < F.q(); ++k) {
        Elem sum = 0;
        for (Elem x : power) sum = F.add(sum, x);
        if (sum != 0) return k;
        for (std::size_t i = 0; i < power.size(); ++i) power[i] = F.mul(power[i], v[i]);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> wsc_lower(const FieldPoly& f)
{
    const auto u = up_invariant(f);
    if (!u) return std::nullopt;
    return *u + 1;
}

}  // namespace valueset
