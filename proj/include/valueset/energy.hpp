#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "valueset/bounds.hpp"
#include "valueset/function_table.hpp"
#include "valueset/wide_count.hpp"

namespace valueset {

using GroupElem = std::uint32_t;

// A finite group on {0..n-1}: cyclic Z_n, a direct product of cyclic groups
// (mixed-radix encoding, first factor least significant), or an explicit
// Cayley table. Tables are checked against the group axioms when loaded.
class Group {
public:
    enum class Kind { cyclic, product, table };

    static std::shared_ptr<const Group> cyclic(std::uint32_t n);
    static std::shared_ptr<const Group> product(std::vector<std::uint32_t> moduli);
    static std::shared_ptr<const Group> from_cayley(std::vector<std::vector<GroupElem>> table);
    // n x n CSV, row i column j holds i*j.
    static std::shared_ptr<const Group> load_cayley_csv(std::istream& in);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t size() const noexcept { return size_; }
    GroupElem op(GroupElem a, GroupElem b) const;
    GroupElem identity() const noexcept { return identity_; }
    bool is_abelian() const;

    bool operator==(const Group& o) const
    {
        return kind_ == o.kind_ && size_ == o.size_ && moduli_ == o.moduli_ && table_ == o.table_;
    }

    nlohmann::json describe() const;

    Group(Kind kind, std::uint32_t size, std::vector<std::uint32_t> moduli,
          std::vector<GroupElem> table, GroupElem identity);

private:
    Kind kind_;
    std::uint32_t size_;
    std::vector<std::uint32_t> moduli_;
    std::vector<GroupElem> table_;  // row-major, table kind only
    GroupElem identity_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Sorted, duplicate-free subset of a group.
class Subset {
public:
    Subset(GroupPtr group, std::vector<GroupElem> elements);

    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<GroupElem>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

private:
    GroupPtr group_;
    std::vector<GroupElem> elements_;
};

struct SubsetPair {
    // Throws parameter_error when A and B live in different groups.
    SubsetPair(Subset a, Subset b);

    const Group& group() const { return *a.group(); }

    Subset a;
    Subset b;
};

// {ab : a in A, b in B}, sorted.
std::vector<GroupElem> product_set(const SubsetPair& pair);

// #{(a, a', b, b') : ab = a'b'} as the sum of squared product multiplicities.
WideCount energy(const SubsetPair& pair);

// Quadruple enumeration; refuses when |A|^2 |B|^2 exceeds the budget.
WideCount energy_oracle(const SubsetPair& pair, std::uint64_t budget = 100'000'000);

// E(A, B) - |A||B|: the pair-collision count of (a, b) -> ab.
WideCount n2_from_energy(const SubsetPair& pair);

// (a, b) -> ab over the |A||B| points, a-major.
FunctionTable product_table(const SubsetPair& pair);

// [max(1, ceil((3n - E)/2)), floor(n - 2(E-n)/(1 + sqrt(4(E-n)+1)))] with n = |A||B|.
BoundReport energy_bounds(const SubsetPair& pair);

}  // namespace valueset
