#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "valueset/bounds.hpp"
#include "valueset/classify.hpp"
#include "valueset/conditions.hpp"
#include "valueset/energy.hpp"
#include "valueset/funcstats.hpp"
#include "valueset/numtheory.hpp"

namespace valueset::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    }
    return os.str();
}

// Everything that determines a report. Two runs with equal manifests produce
// byte-identical output.
struct RunManifest {
    std::string subcommand;
    json flags = json::object();
    json inputs = json::object();
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    void add_input(const std::string& role, const std::string& path, const std::string& bytes)
    {
        inputs[role] = {{"path", path}, {"sha256", sha256_hex(bytes)}};
    }

    json to_json() const
    {
        return {{"subcommand", subcommand}, {"flags", flags},   {"inputs", inputs},
                {"seed", seed},             {"jobs", jobs},     {"tool_version", kToolVersion}};
    }
};

struct Outcome {
    json report;
    bool pass = true;
};

WideCount parse_count(const std::string& s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw input_error("expected a non-negative integer, got '" + s + "'");
    }
    try {
        return WideCount(s);
    } catch (const std::exception&) {
        throw input_error("integer out of range: " + s);
    }
}

// Inline JSON, or @path / an existing path holding JSON.
json load_json_arg(const std::string& arg, RunManifest& manifest, const std::string& role)
{
    std::string text = arg;
    std::string path;
    if (!arg.empty() && arg[0] == '@') {
        path = arg.substr(1);
    } else if (std::filesystem::is_regular_file(arg)) {
        path = arg;
    }
    if (!path.empty()) {
        text = read_file(path);
        manifest.add_input(role, path, text);
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(role + ": " + e.what());
    }
}

FieldPtr field_for_order(std::uint64_t q, const std::optional<PrimePoly>& modulus)
{
    const auto pp = as_prime_power(q);
    if (!pp) throw input_error("q = " + std::to_string(q) + " is not a prime power");
    return Field::build(pp->p, pp->k, modulus);
}

std::optional<PrimePoly> parse_modulus(const std::string& s, RunManifest& manifest)
{
    if (s.empty()) return std::nullopt;
    const json j = load_json_arg(s, manifest, "modulus");
    if (!j.is_array()) throw input_error("modulus must be a JSON array of coefficients");
    return j.get<PrimePoly>();
}

json spectrum_json(const MultiplicitySpectrum& s)
{
    json j = json::object();
    for (std::size_t r = 1; r <= s.m; ++r) {
        if (s.at(r)) j[std::to_string(r)] = s.at(r);
    }
    return j;
}

bool within(const BoundReport& b, std::int64_t v)
{
    return b.lower_int <= v && v <= b.upper_int && (!b.refined_upper || v <= *b.refined_upper);
}

// ---------------------------------------------------------------- stats

Outcome cmd_stats(const std::string& path, RunManifest& manifest)
{
    manifest.add_input("table", path, read_file(path));
    const FunctionTable f = load_table(path);
    const auto spec = spectrum(f);
    const auto n = f.domain_size();
    const auto v = spec.image_count();
    const WideCount n2 = collision_count(spec, 2);
    const WideCount n3 = collision_count(spec, 3);

    json r;
    r["n"] = n;
    r["V"] = v;
    r["m"] = spec.m;
    r["spectrum"] = spectrum_json(spec);
    r["N_2"] = count_to_json(n2);
    r["N_3"] = count_to_json(n3);

    const bool id2 = spec.weighted_total() == n;
    const bool parity = n2 % 2 == 0;
    const auto floor_m1 = n2 >= n ? 0 : static_cast<std::int64_t>(n - n2.convert_to<std::uint64_t>());
    const bool m1_ok = static_cast<std::int64_t>(spec.at(1)) >= floor_m1;
    r["checks"] = {{"image_count_is_sum_of_multiplicities", v == image_count(f)},
                   {"domain_is_weighted_sum", id2},
                   {"N_2_even", parity},
                   {"M_1", spec.at(1)},
                   {"M_1_floor", floor_m1},
                   {"M_1_at_least_floor", m1_ok}};

    const auto b2 = bounds_s2(n, n2);
    r["bounds_s2"] = to_json(b2);
    const bool in2 = within(b2, static_cast<std::int64_t>(v));
    bool in3 = true;
    if (n3 == 0 || n3 >= 6) {
        const auto b3 = bounds_general(n, 3, n3);
        r["bounds_s3"] = to_json(b3);
        in3 = within(b3, static_cast<std::int64_t>(v));
    }
    r["sandwich"] = {{"s2", in2}, {"s3", in3}};
    return {r, id2 && parity && m1_ok && in2 && in3};
}

// ---------------------------------------------------------------- bounds

Outcome cmd_bounds(std::uint64_t n, std::uint64_t s, const WideCount& t, bool construct)
{
    const BoundReport b = bounds_general(n, s, t);
    json r = to_json(b);
    bool pass = true;
    if (construct && s == 2) {
        json tables = json::object();
        if (t <= n) {
            const auto f = construct_lower_tight(n, t);
            const auto v = image_count(f);
            tables["lower_tight"] = {{"values", table_to_json(f)["values"]},
                                     {"V", v},
                                     {"N_2", count_to_json(collision_count(f, 2))}};
            pass = pass && static_cast<std::int64_t>(v) == b.lower_int;
        } else {
            tables["lower_tight"] = "not constructed: requires t <= n";
        }
        const auto k = (t / 2).convert_to<std::uint64_t>();
        try {
            const auto f = construct_upper_tight(n, k);
            const auto v = image_count(f);
            tables["upper_tight"] = {{"values", table_to_json(f)["values"]},
                                     {"V", v},
                                     {"N_2", count_to_json(collision_count(f, 2))}};
            pass = pass && b.refined_upper && static_cast<std::int64_t>(v) == *b.refined_upper;
        } catch (const infeasible_error& e) {
            tables["upper_tight"] = std::string("not constructed: ") + e.what();
        }
        r["constructions"] = tables;
    }
    return {r, pass};
}

Outcome cmd_bk(std::uint64_t k)
{
    const auto d = triangular_B(k);
    std::vector<std::uint64_t> terms;
    for (auto p : d.parts) terms.push_back(triangular(p));
    json r;
    r["k"] = k;
    r["B_k"] = d.weight;
    r["witness"] = d.parts;
    r["triangular_terms"] = terms;
    r["length"] = d.parts.size();
    return {r, true};
}

Outcome cmd_construct(std::uint64_t n, const WideCount& t, const std::string& kind)
{
    if (t % 2 != 0) throw parameter_error("construct: t must be even");
    FunctionTable f = kind == "upper" ? construct_upper_tight(n, (t / 2).convert_to<std::uint64_t>())
                                      : construct_lower_tight(n, t);
    const auto v = static_cast<std::int64_t>(image_count(f));
    const auto n2 = collision_count(f, 2);
    const auto b = bounds_s2(n, t);
    const std::int64_t target = kind == "upper" ? *b.refined_upper : b.lower_int;
    json r;
    r["kind"] = kind;
    r["table"] = table_to_json(f);
    r["V"] = v;
    r["N_2"] = count_to_json(n2);
    r["target_V"] = target;
    r["attains"] = v == target && n2 == t;
    return {r, v == target && n2 == t};
}

// ---------------------------------------------------------------- field

Outcome cmd_field(std::uint64_t p, unsigned k, const std::optional<PrimePoly>& modulus)
{
    const FieldPtr F = Field::build(p, k, modulus);
    json r = F->describe();
    r["canonical_modulus"] = !modulus.has_value();
    r["generator"] = F->generator();
    r["primitive_elements"] = F->primitive_elements();
    if (F->q() <= 4096) {
        r["irreducible_moduli"] = Field::irreducible_moduli(p, k);
    }
    if (F->q() <= 64) {
        json elems = json::array();
        for (Elem x = 0; x < F->q(); ++x) {
            elems.push_back({{"x", x},
                             {"trace", F->trace(x)},
                             {"inverse", x ? json(F->inv(x)) : json(nullptr)}});
        }
        r["elements"] = elems;
    }
    return {r, true};
}

// ---------------------------------------------------------------- conditions

Outcome cmd_test_conditions(const FieldPoly& f)
{
    const Field& F = *f.field();
    const auto reduced = f.reduced();
    const ConditionProfile prof = profile(reduced);
    const auto table = reduced.table();
    const auto v = static_cast<std::int64_t>(image_count(table));
    const auto lemma = verify_average_lemma(reduced);

    json r;
    r["field"] = F.describe();
    r["coeffs"] = f.coeffs();
    r["reduced_coeffs"] = reduced.coeffs();
    r["profile"] = to_json(prof);
    r["V"] = v;
    r["values"] = reduced.values();
    r["lattice_ok"] = prof.respects_implications();

    bool pass = prof.respects_implications() && lemma.ok;

    const auto b = bounds_s2(F.q(), prof.n2);
    r["bounds"] = to_json(b);
    r["bounds_hold"] = within(b, v);
    pass = pass && within(b, v);
    if (prof.c4) {
        const auto pv = poly_version_bounds(F.q());
        r["expected_n2_bounds"] = to_json(pv);
        pass = pass && within(pv, v);
    }

    const auto up = up_invariant(reduced);
    if (up) {
        r["u_p"] = *up;
        r["wsc_lower"] = *up + 1;
        r["wsc_holds"] = v >= static_cast<std::int64_t>(*up + 1);
        pass = pass && v >= static_cast<std::int64_t>(*up + 1);
    } else {
        r["u_p"] = "infinity";
    }
    const auto deg = reduced.degree();
    if (deg && *deg >= 1 && v != static_cast<std::int64_t>(F.q())) {
        const auto wan = wan_degree_bound(F.q(), *deg);
        r["wan_upper"] = wan;
        r["wan_holds"] = v <= wan;
        pass = pass && v <= wan;
    }
    r["average_lemma"] = {{"sum", count_to_json(lemma.sum)},
                          {"expected", count_to_json(lemma.expected)},
                          {"ok", lemma.ok}};
    return {r, pass};
}

Outcome cmd_classify(std::uint64_t q, const std::optional<PrimePoly>& modulus,
                     std::uint64_t budget, unsigned jobs)
{
    const FieldPtr F = field_for_order(q, modulus);
    const auto summary = classify_all(F, {budget, jobs});
    json r = to_json(summary);
    return {r, summary.lattice_violations() == 0};
}

Outcome cmd_verify_lemma(const std::vector<FieldPoly>& polys)
{
    json items = json::array();
    bool pass = true;
    for (const auto& f : polys) {
        const auto check = verify_average_lemma(f);
        items.push_back({{"coeffs", f.coeffs()},
                         {"sum", count_to_json(check.sum)},
                         {"expected", count_to_json(check.expected)},
                         {"ok", check.ok}});
        pass = pass && check.ok;
    }
    json r;
    r["field"] = polys.empty() ? json(nullptr) : polys.front().field()->describe();
    r["checked"] = polys.size();
    r["results"] = items;
    r["all_ok"] = pass;
    return {r, pass};
}

// ---------------------------------------------------------------- energy

GroupPtr parse_group(const std::string& spec, RunManifest& manifest)
{
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto parse_u32 = [](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw input_error("bad group order '" + s + "'");
        }
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    if (kind == "cyclic") return Group::cyclic(parse_u32(arg));
    if (kind == "product") {
        std::vector<std::uint32_t> moduli;
        std::stringstream ss(arg);
        std::string part;
        while (std::getline(ss, part, ',')) moduli.push_back(parse_u32(part));
        return Group::product(std::move(moduli));
    }
    if (kind == "table") {
        const std::string bytes = read_file(arg);
        manifest.add_input("group", arg, bytes);
        std::istringstream in(bytes);
        return Group::load_cayley_csv(in);
    }
    throw input_error("group spec must be cyclic:N, product:N1,N2,... or table:PATH");
}

Subset parse_subset(const GroupPtr& G, const std::string& arg, RunManifest& manifest,
                    const std::string& role)
{
    const json j = load_json_arg(arg, manifest, role);
    if (!j.is_array()) throw input_error(role + ": expected a JSON array of element indices");
    std::vector<GroupElem> elems;
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw input_error(role + ": indices must be non-negative");
        elems.push_back(x.get<GroupElem>());
    }
    return Subset(G, std::move(elems));
}

Outcome cmd_energy(const SubsetPair& pair, std::uint64_t oracle_budget)
{
    const auto n = pair.a.size() * pair.b.size();
    const WideCount e = energy(pair);
    const WideCount n2 = n2_from_energy(pair);
    const WideCount n2_direct = collision_count(product_table(pair), 2);
    const auto prod = product_set(pair);
    const auto b = energy_bounds(pair);
    const auto size = static_cast<std::int64_t>(prod.size());

    json r;
    r["group"] = pair.group().describe();
    r["A"] = pair.a.elements();
    r["B"] = pair.b.elements();
    r["n"] = n;
    r["energy"] = count_to_json(e);
    r["N_2"] = count_to_json(n2);
    r["N_2_from_product_table"] = count_to_json(n2_direct);
    r["product_set"] = prod;
    r["product_set_size"] = size;
    r["bounds"] = to_json(b);
    const bool sandwich = b.lower_int <= size && size <= b.upper_int;
    r["sandwich"] = sandwich;
    bool pass = sandwich && n2 == n2_direct;
    try {
        const auto eo = energy_oracle(pair, oracle_budget);
        r["energy_oracle"] = count_to_json(eo);
        pass = pass && eo == e;
    } catch (const budget_exceeded&) {
        r["energy_oracle"] = "skipped: quadruple enumeration exceeds budget";
    }
    return {r, pass};
}

// ---------------------------------------------------------------- code-bounds

Outcome cmd_code_bounds(const std::string& path, RunManifest& manifest)
{
    const std::string bytes = read_file(path);
    manifest.add_input("assignment", path, bytes);
    std::istringstream in(bytes);
    std::string line;
    std::unordered_map<std::string, std::size_t> codewords;
    std::unordered_map<std::string, Label> messages;
    std::vector<Label> values;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string{};
        return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw input_error("line " + std::to_string(lineno) + ": expected codeword,message");
        }
        const std::string cw = trim(line.substr(0, comma));
        const std::string msg = trim(line.substr(comma + 1));
        if (values.empty() && cw == "codeword" && msg == "message") continue;
        if (!codewords.emplace(cw, lineno).second) {
            throw input_error("line " + std::to_string(lineno) + ": codeword '" + cw +
                              "' assigned twice");
        }
        const auto [it, inserted] = messages.emplace(msg, messages.size());
        values.push_back(it->second);
    }
    if (values.empty()) throw input_error("assignment file has no rows");
    const FunctionTable f(std::move(values));
    const auto n = f.domain_size();
    const WideCount t = collision_count(f, 2);
    const auto v = static_cast<std::int64_t>(image_count(f));
    const auto b = bounds_s2(n, t);

    json r;
    r["codewords"] = n;
    r["t"] = count_to_json(t);
    r["distinct_messages"] = v;
    r["bounds"] = to_json(b);
    r["sandwich"] = within(b, v);
    r["interpretation"] =
        "t counts ordered pairs of distinct codewords with the same message; the bounds "
        "apply to V(f), the number of distinct messages used, with n = |C|. They are not "
        "bounds on |C| itself, which is an input here rather than an unknown.";
    return {r, within(b, v)};
}

void emit(const json& doc, const std::string& out_path, std::ostream& out)
{
    const std::string text = doc.dump(2) + "\n";
    out << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw input_error("cannot write " + out_path);
        f << text;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Image-set statistics, bounds and finite-field condition tests"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    std::string out_path;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::optional<std::uint64_t> budget;
    app.add_option("--out", out_path, "Also write the JSON report to this path");
    app.add_option("--seed", seed, "Seed for randomised subcommands")->capture_default_str();
    app.add_option("--jobs", jobs, "Shard workers for classify")
        ->capture_default_str()
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--budget", budget, "Cap on enumeration size");

    std::string path;
    std::uint64_t n = 0, s = 2, k = 0, p = 0, q = 0, random_count = 0;
    unsigned degree = 1;
    std::string t_text = "0", kind = "lower", modulus_arg, poly_arg, group_arg, a_arg, b_arg;
    bool with_construct = false;

    auto* stats = app.add_subcommand("stats", "Image statistics of a function table");
    stats->add_option("file", path, "JSON or CSV function table")->required();

    auto* bounds = app.add_subcommand("bounds", "Bounds on V(f) from N_s(f)");
    bounds->add_option("--n", n, "Domain size")->required();
    bounds->add_option("--s", s, "Tuple size s >= 2")->capture_default_str();
    bounds->add_option("--t", t_text, "Collision count N_s")->required();
    bounds->add_flag("--construct", with_construct, "Include tight constructions (s = 2)");

    auto* bk = app.add_subcommand("bk", "Minimal-weight triangular sum B_k");
    bk->add_option("--k", k, "k >= 0")->required();

    auto* construct = app.add_subcommand("construct", "Build a function meeting a bound");
    construct->add_option("--n", n, "Domain size")->required();
    construct->add_option("--t", t_text, "Pair collision count N_2")->required();
    construct->add_option("--kind", kind, "lower | upper")
        ->check(CLI::IsMember({"lower", "upper"}))
        ->capture_default_str();

    auto* field = app.add_subcommand("field", "Describe F_{p^k}");
    field->add_option("--p", p, "Characteristic")->required();
    field->add_option("--k", degree, "Extension degree")->capture_default_str();
    field->add_option("--modulus", modulus_arg, "Little-endian monic modulus as JSON");

    auto* test_cond = app.add_subcommand("test-conditions", "Conditions C1-C4 for a polynomial");
    test_cond->add_option("spec", path, "Polynomial spec JSON file");
    test_cond->add_option("--poly", poly_arg, "Inline polynomial spec JSON");

    auto* classify = app.add_subcommand("classify", "Classify every function F_q -> F_q");
    classify->add_option("--q", q, "Field order")->required();
    classify->add_option("--modulus", modulus_arg, "Little-endian monic modulus as JSON");

    auto* lemma = app.add_subcommand("verify-lemma", "Check sum_a N_2(f + aX) = q(q-1)");
    lemma->add_option("spec", path, "Polynomial spec JSON file");
    lemma->add_option("--poly", poly_arg, "Inline polynomial spec JSON");
    lemma->add_option("--q", q, "Field order for random polynomials");
    lemma->add_option("--random", random_count, "Number of random polynomials");

    auto* energy_cmd = app.add_subcommand("energy", "Multiplicative energy and product-set bounds");
    energy_cmd->add_option("--group", group_arg, "cyclic:N | product:N1,N2,... | table:PATH")
        ->required();
    energy_cmd->add_option("--a", a_arg, "Subset A as JSON array or @file")->required();
    energy_cmd->add_option("--b", b_arg, "Subset B as JSON array or @file")->required();

    auto* code = app.add_subcommand("code-bounds", "Bounds for a codeword-to-message assignment");
    code->add_option("file", path, "CSV of codeword,message rows")->required();

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::CallForVersion& e) {
        out << kToolVersion << "\n";
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    RunManifest manifest;
    manifest.seed = seed;
    manifest.jobs = jobs;
    CLI::App* sub = app.get_subcommands().front();
    manifest.subcommand = sub->get_name();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->count() == 0) continue;
        const auto results = opt->results();
        manifest.flags[opt->get_name()] =
            results.size() == 1 ? json(results.front()) : json(results);
    }
    if (budget) manifest.flags["--budget"] = *budget;

    try {
        Outcome outcome;
        const std::string name = sub->get_name();
        if (name == "stats") {
            outcome = cmd_stats(path, manifest);
        } else if (name == "bounds") {
            outcome = cmd_bounds(n, s, parse_count(t_text), with_construct);
        } else if (name == "bk") {
            outcome = cmd_bk(k);
        } else if (name == "construct") {
            outcome = cmd_construct(n, parse_count(t_text), kind);
        } else if (name == "field") {
            outcome = cmd_field(p, degree, parse_modulus(modulus_arg, manifest));
        } else if (name == "test-conditions" || name == "verify-lemma") {
            std::vector<FieldPoly> polys;
            if (!path.empty()) {
                polys.push_back(poly_from_json(load_json_arg("@" + path, manifest, "poly")));
            } else if (!poly_arg.empty()) {
                polys.push_back(poly_from_json(load_json_arg(poly_arg, manifest, "poly")));
            }
            if (name == "test-conditions") {
                if (polys.size() != 1) throw input_error("test-conditions needs a polynomial spec");
                outcome = cmd_test_conditions(polys.front());
            } else {
                if (polys.empty()) {
                    if (q == 0 || random_count == 0) {
                        throw input_error("verify-lemma needs a spec, --poly, or --q with --random");
                    }
                    const FieldPtr F = field_for_order(q, std::nullopt);
                    std::mt19937_64 rng(seed);
                    std::uniform_int_distribution<Elem> coeff(0, F->q() - 1);
                    for (std::uint64_t i = 0; i < random_count; ++i) {
                        std::vector<Elem> c(F->q());
                        for (auto& x : c) x = coeff(rng);
                        polys.emplace_back(F, std::move(c));
                    }
                }
                outcome = cmd_verify_lemma(polys);
            }
        } else if (name == "classify") {
            outcome = cmd_classify(q, parse_modulus(modulus_arg, manifest),
                                   budget.value_or(kDefaultClassifyBudget), jobs);
        } else if (name == "energy") {
            const GroupPtr G = parse_group(group_arg, manifest);
            SubsetPair pair(parse_subset(G, a_arg, manifest, "A"),
                            parse_subset(G, b_arg, manifest, "B"));
            outcome = cmd_energy(pair, budget.value_or(100'000'000));
        } else if (name == "code-bounds") {
            outcome = cmd_code_bounds(path, manifest);
        }
        json doc;
        doc["manifest"] = manifest.to_json();
        doc["report"] = outcome.report;
        doc["verdict"] = outcome.pass ? "pass" : "violation";
        emit(doc, out_path, out);
        return outcome.pass ? kPass : kViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace valueset::cli
