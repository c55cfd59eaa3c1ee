#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "valueset/function_table.hpp"
#include "valueset/wide_count.hpp"

namespace valueset {

// counts[r] = M_r(f) for 1 <= r <= m; counts[0] is unused and zero.
struct MultiplicitySpectrum {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> counts;

    std::size_t at(std::size_t r) const { return r < counts.size() ? counts[r] : 0; }

    // Sum of M_r, i.e. the image size.
    std::size_t image_count() const;
    // Sum of r * M_r; equals n for a spectrum built from a table.
    std::size_t weighted_total() const;

    // Builds a spectrum from block sizes (one entry per image value).
    static MultiplicitySpectrum from_blocks(const std::vector<std::size_t>& blocks);
};

MultiplicitySpectrum spectrum(const FunctionTable& f);

std::size_t image_count(const FunctionTable& f);

// P(r, s) = r (r-1) ... (r-s+1); zero when r < s, one when s == 0.
WideCount falling_factorial(std::uint64_t r, std::uint64_t s);

// N_s via sum over r >= s of P(r, s) M_r. Requires s >= 2.
WideCount collision_count(const MultiplicitySpectrum& spec, std::uint64_t s);
WideCount collision_count(const FunctionTable& f, std::uint64_t s);

inline constexpr std::uint64_t kOracleBudget = 100'000'000;

// Counts ordered s-tuples of pairwise-distinct points with equal images by
// walking the tuples directly. Refuses (budget_exceeded) when n^s > budget.
WideCount collision_count_oracle(const FunctionTable& f, std::uint64_t s,
                                 std::uint64_t budget = kOracleBudget);

}  // namespace valueset
