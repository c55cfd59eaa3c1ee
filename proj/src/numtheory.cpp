#include "valueset/numtheory.hpp"

namespace valueset {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q)
{
    if (q < 2) return std::nullopt;
    const auto factors = prime_factors(q);
    if (factors.size() != 1) return std::nullopt;
    PrimePower pp{factors.front(), 0};
    while (q > 1) {
        q /= pp.p;
        ++pp.k;
    }
    return pp;
}

}  // namespace valueset
