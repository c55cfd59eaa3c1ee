#include "valueset/funcstats.hpp"

#include <unordered_map>

namespace valueset {

std::size_t MultiplicitySpectrum::image_count() const
{
    std::size_t v = 0;
    for (std::size_t r = 1; r < counts.size(); ++r) v += counts[r];
    return v;
}

std::size_t MultiplicitySpectrum::weighted_total() const
{
    std::size_t total = 0;
    for (std::size_t r = 1; r < counts.size(); ++r) total += r * counts[r];
    return total;
}

MultiplicitySpectrum MultiplicitySpectrum::from_blocks(const std::vector<std::size_t>& blocks)
{
    MultiplicitySpectrum s;
    for (auto b : blocks) {
        if (b == 0) continue;
        s.n += b;
        if (b > s.m) s.m = b;
    }
    s.counts.assign(s.m + 1, 0);
    for (auto b : blocks) {
        if (b != 0) ++s.counts[b];
    }
    return s;
}

MultiplicitySpectrum spectrum(const FunctionTable& f)
{
    std::unordered_map<Label, std::size_t> tally;
    tally.reserve(f.domain_size());
    for (Label y : f.values()) ++tally[y];
    std::vector<std::size_t> blocks;
    blocks.reserve(tally.size());
    for (const auto& [label, count] : tally) blocks.push_back(count);
    return MultiplicitySpectrum::from_blocks(blocks);
}

std::size_t image_count(const FunctionTable& f)
{
    return spectrum(f).image_count();
}

WideCount falling_factorial(std::uint64_t r, std::uint64_t s)
{
    if (r < s) return 0;
    WideCount p = 1;
    for (std::uint64_t i = 0; i < s; ++i) p *= WideCount(r - i);
    return p;
}

WideCount collision_count(const MultiplicitySpectrum& spec, std::uint64_t s)
{
    if (s < 2) throw parameter_error("collision_count: s must be >= 2");
    WideCount total = 0;
    for (std::size_t r = s; r <= spec.m; ++r) {
        if (spec.at(r) != 0) total += falling_factorial(r, s) * WideCount(spec.at(r));
    }
    return total;
}

WideCount collision_count(const FunctionTable& f, std::uint64_t s)
{
    return collision_count(spectrum(f), s);
}

namespace {

// Extends a partial tuple one position at a time; every position ranges over
// the whole domain and is filtered by distinctness and equal image.
void extend_tuple(const FunctionTable& f, std::uint64_t s, std::vector<std::size_t>& tuple,
                  WideCount& found)
{
    if (tuple.size() == s) {
        ++found;
        return;
    }
    const std::size_t n = f.domain_size();
    for (std::size_t x = 0; x < n; ++x) {
        bool fresh = true;
        for (auto y : tuple) {
            if (y == x) {
                fresh = false;
                break;
            }
        }
        if (!fresh) continue;
        if (!tuple.empty() && f[x] != f[tuple.front()]) continue;
        tuple.push_back(x);
        extend_tuple(f, s, tuple, found);
        tuple.pop_back();
    }
}

}  // namespace

WideCount collision_count_oracle(const FunctionTable& f, std::uint64_t s, std::uint64_t budget)
{
    if (s < 2) throw parameter_error("collision_count_oracle: s must be >= 2");
    const std::uint64_t n = f.domain_size();
    std::uint64_t space = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
        if (space > budget / n) {
            throw budget_exceeded("collision_count_oracle: n^s exceeds enumeration budget " +
                                  std::to_string(budget));
        }
        space *= n;
    }
    WideCount found = 0;
    std::vector<std::size_t> tuple;
    tuple.reserve(s);
    extend_tuple(f, s, tuple, found);
    return found;
}

}  // namespace valueset
