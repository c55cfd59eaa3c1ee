#include "valueset/energy.hpp"

#include <algorithm>
#include <sstream>

namespace valueset {

Group::Group(Kind kind, std::uint32_t size, std::vector<std::uint32_t> moduli,
             std::vector<GroupElem> table, GroupElem identity)
    : kind_(kind), size_(size), moduli_(std::move(moduli)), table_(std::move(table)),
      identity_(identity)
{
}

GroupPtr Group::cyclic(std::uint32_t n)
{
    if (n == 0) throw parameter_error("cyclic group: order must be positive");
    return std::make_shared<const Group>(Kind::cyclic, n, std::vector<std::uint32_t>{n},
                                         std::vector<GroupElem>{}, 0);
}

GroupPtr Group::product(std::vector<std::uint32_t> moduli)
{
    if (moduli.empty()) throw parameter_error("product group: no factors");
    std::uint64_t size = 1;
    for (auto m : moduli) {
        if (m == 0) throw parameter_error("product group: factor order must be positive");
        size *= m;
        if (size > (1u << 24)) throw parameter_error("product group: order too large");
    }
    return std::make_shared<const Group>(Kind::product, static_cast<std::uint32_t>(size),
                                         std::move(moduli), std::vector<GroupElem>{}, 0);
}

GroupPtr Group::from_cayley(std::vector<std::vector<GroupElem>> rows)
{
    const std::size_t n = rows.size();
    if (n == 0) throw input_error("Cayley table: empty");
    if (n > 4096) throw input_error("Cayley table: order too large");
    std::vector<GroupElem> t;
    t.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw input_error("Cayley table: row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(n));
        }
        for (auto x : rows[i]) {
            if (x >= n) throw input_error("Cayley table: entry " + std::to_string(x) + " out of range");
            t.push_back(x);
        }
    }
    auto at = [&](std::size_t i, std::size_t j) { return t[i * n + j]; };

    // Latin square.
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ++stamp;
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[at(i, j)] == stamp) {
                throw input_error("Cayley table: row " + std::to_string(i) + " repeats an element");
            }
            seen[at(i, j)] = stamp;
        }
        ++stamp;
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[at(j, i)] == stamp) {
                throw input_error("Cayley table: column " + std::to_string(i) +
                                  " repeats an element");
            }
            seen[at(j, i)] = stamp;
        }
    }
    // Two-sided identity.
    std::optional<GroupElem> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
        if (ok) identity = static_cast<GroupElem>(e);
    }
    if (!identity) throw input_error("Cayley table: no identity element");
    // Inverses: each row contains the identity (Latin square), and the
    // inverse must be two-sided.
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = 0;
        while (at(x, y) != *identity) ++y;
        if (at(y, x) != *identity) {
            throw input_error("Cayley table: element " + std::to_string(x) +
                              " has no two-sided inverse");
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto ab = at(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                if (at(ab, c) != at(a, at(b, c))) {
                    throw input_error("Cayley table: not associative at (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
                }
            }
        }
    }
    return std::make_shared<const Group>(Kind::table, static_cast<std::uint32_t>(n),
                                         std::vector<std::uint32_t>{}, std::move(t), *identity);
}

GroupPtr Group::load_cayley_csv(std::istream& in)
{
    std::vector<std::vector<GroupElem>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<GroupElem> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                const long v = std::stol(cell, &used);
                if (v < 0 || cell.find_first_not_of(" \t\r", used) != std::string::npos) {
                    throw std::invalid_argument(cell);
                }
                row.push_back(static_cast<GroupElem>(v));
            } catch (const std::logic_error&) {
                throw input_error("Cayley table: bad entry '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return from_cayley(std::move(rows));
}

GroupElem Group::op(GroupElem a, GroupElem b) const
{
    switch (kind_) {
    case Kind::cyclic: {
        const std::uint32_t s = a + b;
        return s >= size_ ? s - size_ : s;
    }
    case Kind::product: {
        GroupElem out = 0;
        std::uint32_t scale = 1;
        for (auto m : moduli_) {
            out += ((a % m + b % m) % m) * scale;
            a /= m;
            b /= m;
            scale *= m;
        }
        return out;
    }
    case Kind::table:
        return table_[std::size_t(a) * size_ + b];
    }
    return 0;
}

bool Group::is_abelian() const
{
    if (kind_ != Kind::table) return true;
    for (GroupElem a = 0; a < size_; ++a) {
        for (GroupElem b = a + 1; b < size_; ++b) {
            if (op(a, b) != op(b, a)) return false;
        }
    }
    return true;
}

nlohmann::json Group::describe() const
{
    nlohmann::json j;
    switch (kind_) {
    case Kind::cyclic: j["kind"] = "cyclic"; break;
    case Kind::product: j["kind"] = "product"; j["moduli"] = moduli_; break;
    case Kind::table: j["kind"] = "table"; break;
    }
    j["order"] = size_;
    j["abelian"] = is_abelian();
    return j;
}

Subset::Subset(GroupPtr group, std::vector<GroupElem> elements)
    : group_(std::move(group)), elements_(std::move(elements))
{
    if (!group_) throw parameter_error("Subset: null group");
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] >= group_->size()) {
            throw input_error("subset element " + std::to_string(elements_[i]) +
                              " outside group of order " + std::to_string(group_->size()));
        }
        if (i > 0 && elements_[i] == elements_[i - 1]) {
            throw input_error("subset element " + std::to_string(elements_[i]) + " repeated");
        }
    }
}

SubsetPair::SubsetPair(Subset a_, Subset b_) : a(std::move(a_)), b(std::move(b_))
{
    if (a.group() != b.group() && !(*a.group() == *b.group())) {
        throw parameter_error("subsets belong to different groups");
    }
}

namespace {

std::vector<std::uint64_t> product_multiplicities(const SubsetPair& pair)
{
    const Group& G = pair.group();
    std::vector<std::uint64_t> m(G.size(), 0);
    for (auto x : pair.a.elements()) {
        for (auto y : pair.b.elements()) ++m[G.op(x, y)];
    }
    return m;
}

}  // namespace

std::vector<GroupElem> product_set(const SubsetPair& pair)
{
    const auto m = product_multiplicities(pair);
    std::vector<GroupElem> out;
    for (GroupElem c = 0; c < m.size(); ++c) {
        if (m[c]) out.push_back(c);
    }
    return out;
}

WideCount energy(const SubsetPair& pair)
{
    WideCount e = 0;
    for (auto c : product_multiplicities(pair)) e += WideCount(c) * WideCount(c);
    return e;
}

WideCount energy_oracle(const SubsetPair& pair, std::uint64_t budget)
{
    const std::uint64_t na = pair.a.size();
    const std::uint64_t nb = pair.b.size();
    if (na * nb != 0 && na * nb > budget / (na * nb)) {
        throw budget_exceeded("energy_oracle: |A|^2 |B|^2 exceeds budget " +
                              std::to_string(budget));
    }
    const Group& G = pair.group();
    WideCount e = 0;
    for (auto a : pair.a.elements()) {
        for (auto a2 : pair.a.elements()) {
            for (auto b : pair.b.elements()) {
                const auto ab = G.op(a, b);
                for (auto b2 : pair.b.elements()) {
                    if (ab == G.op(a2, b2)) ++e;
                }
            }
        }
    }
    return e;
}

WideCount n2_from_energy(const SubsetPair& pair)
{
    return energy(pair) - WideCount(pair.a.size()) * WideCount(pair.b.size());
}

FunctionTable product_table(const SubsetPair& pair)
{
    const Group& G = pair.group();
    std::vector<Label> v;
    v.reserve(pair.a.size() * pair.b.size());
    for (auto x : pair.a.elements()) {
        for (auto y : pair.b.elements()) v.push_back(G.op(x, y));
    }
    return FunctionTable(std::move(v));
}

BoundReport energy_bounds(const SubsetPair& pair)
{
    const std::uint64_t n = pair.a.size() * pair.b.size();
    if (n == 0) throw parameter_error("energy_bounds: A and B must be non-empty");
    const WideCount e = energy(pair);
    const WideCount t = e - WideCount(n);

    BoundReport r = bounds_s2(n, t);
    const Rational lower = (Rational(BigInt(3 * n)) - Rational(BigInt(e.str()))) / 2;
    r.lower_real = lower;
    // ceil((3n - E)/2), E an integer.
    BigInt num = BigInt(3 * n) - BigInt(e.str());
    const BigInt ceil_half = num >= 0 ? BigInt((num + 1) / 2) : BigInt(-((-num) / 2));
    if (ceil_half < 1) {
        r.lower_int = 1;
        r.provenance["lower"] = "(3n - E)/2 clamped to 1";
    } else {
        r.lower_int = ceil_half.convert_to<std::int64_t>();
        r.provenance["lower"] = "(3n - E)/2, n = |A||B|";
    }
    r.provenance["upper"] = "n - 2(E-n)/(1 + sqrt(4(E-n)+1)), n = |A||B|";
    return r;
}

}  // namespace valueset
