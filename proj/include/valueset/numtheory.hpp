#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace valueset {

bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct PrimePower {
    std::uint64_t p;
    unsigned k;
};

// q = p^k with p prime, k >= 1; nullopt otherwise.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

}  // namespace valueset
