#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "valueset/errors.hpp"

namespace valueset {

using Label = std::uint64_t;

// A function f: {0..n-1} -> labels. Labels are opaque; only equality matters.
class FunctionTable {
public:
    explicit FunctionTable(std::vector<Label> values);

    static FunctionTable identity(std::size_t n);
    static FunctionTable constant(std::size_t n, Label value = 0);

    std::size_t domain_size() const noexcept { return values_.size(); }
    std::span<const Label> values() const noexcept { return values_; }
    Label operator[](std::size_t x) const { return values_[x]; }

    bool operator==(const FunctionTable&) const = default;

private:
    std::vector<Label> values_;
};

// {"domain_size": n, "values": [...]}
FunctionTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const FunctionTable& f);

// Two-column CSV "x,f(x)"; every x in 0..n-1 must appear exactly once.
// A non-numeric first row is treated as a header.
FunctionTable table_from_csv(std::istream& in);

// Dispatches on extension (.json / .csv), falling back to content sniffing.
FunctionTable load_table(const std::string& path);

}  // namespace valueset
