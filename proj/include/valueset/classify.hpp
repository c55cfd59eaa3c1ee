#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "valueset/conditions.hpp"

namespace valueset {

// Mask counts over every function F_q -> F_q. Functions are ranked
// lexicographically by value table (f(0) most significant); the witness of a
// mask is the lowest-ranked function carrying it.
struct ClassificationSummary {
    FieldPtr field;
    std::uint64_t total = 0;
    std::array<std::uint64_t, 16> counts{};
    std::array<std::optional<std::uint64_t>, 16> witness_rank{};

    // Commutative and associative; witnesses merge by minimum rank.
    void merge(const ClassificationSummary& other);

    bool operator==(const ClassificationSummary& o) const
    {
        return total == o.total && counts == o.counts && witness_rank == o.witness_rank;
    }

    std::uint64_t count_where(bool (*pred)(unsigned mask)) const;
    std::uint64_t lattice_violations() const;
    // No function satisfies exactly one of c2, c3.
    bool c2_set_equals_c3_set() const;
    // Every function with c2 and c3 also has c1.
    bool c2_and_c3_imply_c1() const;
    // Rank of the first function with c2, c3 and not c1.
    std::optional<std::uint64_t> c2_c3_not_c1_witness() const;
};

nlohmann::json to_json(const ClassificationSummary& s);

// Value table of the function with the given lexicographic rank.
std::vector<Elem> table_at_rank(const Field& field, std::uint64_t rank);

// q^q, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> function_count(std::uint32_t q);

inline constexpr std::uint64_t kDefaultClassifyBudget = 823'543;  // 7^7

struct ClassifyOptions {
    std::uint64_t budget = kDefaultClassifyBudget;
    unsigned jobs = 1;  // shard count, one OpenMP worker per shard
};

// Tallies ranks [begin, end) with the table-driven kernel.
ClassificationSummary classify_range(const FieldPtr& field, std::uint64_t begin,
                                     std::uint64_t end);

// Contiguous shards processed in parallel, merged in shard order. The result
// does not depend on jobs.
ClassificationSummary classify_all(const FieldPtr& field, const ClassifyOptions& opts = {});

// Single-threaded walk using profile_reference; the baseline for tests and
// benchmarks.
ClassificationSummary classify_all_serial(const FieldPtr& field,
                                          std::uint64_t budget = kDefaultClassifyBudget);

}  // namespace valueset
