#include "valueset/function_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace valueset {

FunctionTable::FunctionTable(std::vector<Label> values) : values_(std::move(values))
{
    if (values_.empty()) {
        throw input_error("function table: domain must be non-empty");
    }
}

FunctionTable FunctionTable::identity(std::size_t n)
{
    std::vector<Label> v(n);
    std::iota(v.begin(), v.end(), Label{0});
    return FunctionTable(std::move(v));
}

FunctionTable FunctionTable::constant(std::size_t n, Label value)
{
    return FunctionTable(std::vector<Label>(n, value));
}

FunctionTable table_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
        throw input_error("function table JSON: expected object with a \"values\" array");
    }
    std::vector<Label> values;
    values.reserve(j["values"].size());
    for (const auto& v : j["values"]) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            throw input_error("function table JSON: values must be non-negative integers");
        }
        values.push_back(v.get<Label>());
    }
    if (j.contains("domain_size")) {
        const auto& n = j["domain_size"];
        if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) {
            throw input_error("function table JSON: domain_size must be a positive integer");
        }
        if (n.get<std::uint64_t>() != values.size()) {
            throw input_error("function table JSON: domain_size " + n.dump() +
                              " does not match " + std::to_string(values.size()) + " values");
        }
    }
    return FunctionTable(std::move(values));
}

nlohmann::json table_to_json(const FunctionTable& f)
{
    return {{"domain_size", f.domain_size()},
            {"values", std::vector<Label>(f.values().begin(), f.values().end())}};
}

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<std::uint64_t> parse_u64(const std::string& s)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

}  // namespace

FunctionTable table_from_csv(std::istream& in)
{
    std::vector<std::pair<std::uint64_t, Label>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw input_error("CSV line " + std::to_string(lineno) + ": expected two columns");
        }
        const auto x = parse_u64(trim(std::string_view(line).substr(0, comma)));
        const auto y = parse_u64(trim(std::string_view(line).substr(comma + 1)));
        if (!x || !y) {
            if (rows.empty() && lineno == 1) continue;  // header
            throw input_error("CSV line " + std::to_string(lineno) +
                              ": expected non-negative integers");
        }
        rows.emplace_back(*x, *y);
    }
    const std::size_t n = rows.size();
    if (n == 0) throw input_error("CSV: no rows");
    std::vector<Label> values(n);
    std::vector<bool> seen(n, false);
    for (const auto& [x, y] : rows) {
        if (x >= n) {
            throw input_error("CSV: point " + std::to_string(x) + " outside 0.." +
                              std::to_string(n - 1));
        }
        if (seen[x]) throw input_error("CSV: point " + std::to_string(x) + " appears twice");
        seen[x] = true;
        values[x] = y;
    }
    return FunctionTable(std::move(values));
}

FunctionTable load_table(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const bool json_ext = path.size() >= 5 && path.ends_with(".json");
    const bool csv_ext = path.size() >= 4 && path.ends_with(".csv");
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool looks_json = first != std::string::npos && text[first] == '{';
    if (json_ext || (!csv_ext && looks_json)) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw input_error(path + ": " + e.what());
        }
        return table_from_json(j);
    }
    std::istringstream is(text);
    return table_from_csv(is);
}

}  // namespace valueset
