#include "valueset/classify.hpp"

#include <omp.h>

namespace valueset {

void ClassificationSummary::merge(const ClassificationSummary& other)
{
    if (!field) field = other.field;
    total += other.total;
    for (unsigned m = 0; m < 16; ++m) {
        counts[m] += other.counts[m];
        const auto& w = other.witness_rank[m];
        if (w && (!witness_rank[m] || *w < *witness_rank[m])) witness_rank[m] = w;
    }
}

std::uint64_t ClassificationSummary::count_where(bool (*pred)(unsigned)) const
{
    std::uint64_t n = 0;
    for (unsigned m = 0; m < 16; ++m) {
        if (pred(m)) n += counts[m];
    }
    return n;
}

std::uint64_t ClassificationSummary::lattice_violations() const
{
    return count_where([](unsigned m) { return !mask_respects_implications(m); });
}

bool ClassificationSummary::c2_set_equals_c3_set() const
{
    return count_where([](unsigned m) { return bool(m & 4) != bool(m & 2); }) == 0;
}

bool ClassificationSummary::c2_and_c3_imply_c1() const
{
    return count_where([](unsigned m) { return (m & 4) && (m & 2) && !(m & 8); }) == 0;
}

std::optional<std::uint64_t> ClassificationSummary::c2_c3_not_c1_witness() const
{
    std::optional<std::uint64_t> best;
    for (unsigned m = 0; m < 16; ++m) {
        if ((m & 4) && (m & 2) && !(m & 8) && witness_rank[m]) {
            if (!best || *witness_rank[m] < *best) best = witness_rank[m];
        }
    }
    return best;
}

std::vector<Elem> table_at_rank(const Field& field, std::uint64_t rank)
{
    const std::uint32_t q = field.q();
    std::vector<Elem> v(q);
    for (std::uint32_t i = q; i-- > 0;) {
        v[i] = static_cast<Elem>(rank % q);
        rank /= q;
    }
    return v;
}

std::optional<std::uint64_t> function_count(std::uint32_t q)
{
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < q; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        total *= q;
    }
    return total;
}

nlohmann::json to_json(const ClassificationSummary& s)
{
    nlohmann::json j;
    const Field& F = *s.field;
    j["q"] = F.q();
    j["p"] = F.p();
    j["k"] = F.k();
    j["modulus"] = F.modulus();
    j["total"] = s.total;
    nlohmann::json masks = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::object();
    for (unsigned m = 0; m < 16; ++m) {
        if (s.counts[m] == 0) continue;
        const auto key = mask_string(m);
        masks[key] = s.counts[m];
        if (s.witness_rank[m]) {
            const auto table = table_at_rank(F, *s.witness_rank[m]);
            const auto poly = FieldPoly::interpolate(s.field, table);
            witnesses[key] = {{"coeffs", poly.coeffs()}, {"table", table},
                              {"rank", *s.witness_rank[m]}};
        }
    }
    j["masks"] = masks;
    j["witnesses"] = witnesses;
    j["lattice_violations"] = s.lattice_violations();
    j["c2_set_equals_c3_set"] = s.c2_set_equals_c3_set();
    j["c2_and_c3_imply_c1"] = s.c2_and_c3_imply_c1();
    j["c2_c3_not_c1_exists"] = s.c2_c3_not_c1_witness().has_value();
    j["c2_count"] = s.count_where([](unsigned m) { return bool(m & 4); });
    j["c3_count"] = s.count_where([](unsigned m) { return bool(m & 2); });
    return j;
}

namespace {

std::uint64_t checked_total(const Field& field, std::uint64_t budget)
{
    const auto total = function_count(field.q());
    if (!total || *total > budget) {
        throw budget_exceeded("classify: " + std::to_string(field.q()) + "^" +
                              std::to_string(field.q()) + " = " +
                              (total ? std::to_string(*total) : std::string("> 2^64")) +
                              " functions exceeds budget " + std::to_string(budget));
    }
    return *total;
}

// Odometer step on a value table, last position fastest.
void advance(std::vector<Elem>& v, std::uint32_t q)
{
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < q) return;
        v[i] = 0;
    }
}

void record(ClassificationSummary& s, unsigned mask, std::uint64_t rank)
{
    ++s.total;
    ++s.counts[mask];
    if (!s.witness_rank[mask]) s.witness_rank[mask] = rank;
}

}  // namespace

ClassificationSummary classify_range(const FieldPtr& field, std::uint64_t begin,
                                     std::uint64_t end)
{
    ClassificationSummary s;
    s.field = field;
    if (begin >= end) return s;
    ConditionKernel kernel(field);
    auto v = table_at_rank(*field, begin);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
        record(s, kernel.evaluate(v).mask(), rank);
        advance(v, field->q());
    }
    return s;
}

ClassificationSummary classify_all(const FieldPtr& field, const ClassifyOptions& opts)
{
    const std::uint64_t total = checked_total(*field, opts.budget);
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<ClassificationSummary> shards(jobs);

#pragma omp parallel for schedule(static, 1) num_threads(jobs)
    for (int i = 0; i < static_cast<int>(jobs); ++i) {
        const std::uint64_t begin = total / jobs * i + std::min<std::uint64_t>(i, total % jobs);
        const std::uint64_t len = total / jobs + (std::uint64_t(i) < total % jobs ? 1 : 0);
        shards[i] = classify_range(field, begin, begin + len);
    }

    ClassificationSummary out;
    out.field = field;
    for (const auto& s : shards) out.merge(s);
    return out;
}

ClassificationSummary classify_all_serial(const FieldPtr& field, std::uint64_t budget)
{
    const std::uint64_t total = checked_total(*field, budget);
    ClassificationSummary s;
    s.field = field;
    std::vector<Elem> v(field->q(), 0);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        record(s, profile_reference(*field, v).mask(), rank);
        advance(v, field->q());
    }
    return s;
}

}  // namespace valueset
