#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "circle_action.hpp"
#include "error.hpp"
#include "grassmannian.hpp"
#include "io.hpp"
#include "seidel.hpp"
#include "toric.hpp"

namespace gwidth::cli {

enum class Command { Width, Check, Fixed, Seidel, Edges };
enum class OutputFormat { Text, Json };

inline std::string to_string(Command c)
{
    switch (c) {
    case Command::Width: return "width";
    case Command::Check: return "check";
    case Command::Fixed: return "fixed";
    case Command::Seidel: return "seidel";
    case Command::Edges: return "edges";
    }
    return "?";
}

struct ActionFileSource {
    std::string path;
};

struct ToricSource {
    std::string path;
    LatticeVector xi;
};

struct GrassmannianSource {
    GrassmannianSpec spec;
};

struct Source;

struct ProductSource {
    std::vector<Source> parts;
};

struct Source {
    std::variant<ActionFileSource, ToricSource, GrassmannianSource, ProductSource> value;
};

struct Request {
    Command command = Command::Width;
    Source source;
    OutputFormat format = OutputFormat::Text;
};

// ---------------------------------------------------------------- parsing

inline std::vector<Integer> parse_integer_list(std::string_view csv, const char* what)
{
    std::vector<Integer> out;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        auto token = detail::trim(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start));
        try {
            out.push_back(detail::parse_integer(token));
        } catch (const Error&) {
            throw Error(ErrorCode::InvalidInput, std::string(what) + ": malformed integer list '" + std::string(csv) + "'");
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

/// "a,b[,c...]": integers with gcd 1.
inline LatticeVector parse_direction(std::string_view csv)
{
    LatticeVector xi(parse_integer_list(csv, "--dir"));
    if (xi.is_zero())
        throw Error(ErrorCode::ZeroVector, "--dir: direction is zero");
    if (!xi.is_primitive())
        throw Error(ErrorCode::NotPrimitive, "--dir: " + to_string(xi) + " is not primitive (entries must be coprime)");
    return xi;
}

inline GrassmannianSpec parse_grassmannian(std::string_view csv)
{
    auto v = parse_integer_list(csv, "--grassmannian");
    if (v.size() != 2)
        throw Error(ErrorCode::InvalidInput, "--grassmannian expects k,m");
    GrassmannianSpec spec{static_cast<int>(v[0]), static_cast<int>(v[1])};
    if (spec.k < 1 || spec.k > spec.m - spec.k)
        throw Error(ErrorCode::InvalidRange, "Gr(" + std::to_string(spec.k) + "," + std::to_string(spec.m) +
                                                 ") needs 1 <= k <= m - k");
    return spec;
}

/// Splits on commas that are not inside parentheses.
inline std::vector<std::string_view> split_top_level(std::string_view s)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (s[i] == ',' && depth == 0) {
            out.push_back(detail::trim(s.substr(start, i - start)));
            start = i + 1;
        }
        if (depth < 0)
            throw Error(ErrorCode::InvalidInput, "unbalanced parentheses in '" + std::string(s) + "'");
    }
    if (depth != 0)
        throw Error(ErrorCode::InvalidInput, "unbalanced parentheses in '" + std::string(s) + "'");
    out.push_back(detail::trim(s.substr(start)));
    return out;
}

inline std::vector<Source> parse_product(std::string_view list);

/**
 * One factor of --product: gr(k,m), action(PATH), toric(PATH;a,b,...) or a
 * nested product(...).
 */
inline Source parse_source_term(std::string_view term)
{
    auto open = term.find('(');
    if (open == std::string_view::npos || term.back() != ')')
        throw Error(ErrorCode::InvalidInput, "product factor '" + std::string(term) +
                                                 "' must look like gr(k,m), action(PATH), toric(PATH;a,b) or product(...)");
    auto name = detail::trim(term.substr(0, open));
    auto args = term.substr(open + 1, term.size() - open - 2);
    if (name == "gr" || name == "grassmannian")
        return {GrassmannianSource{parse_grassmannian(args)}};
    if (name == "action")
        return {ActionFileSource{std::string(detail::trim(args))}};
    if (name == "toric") {
        auto semi = args.find(';');
        if (semi == std::string_view::npos)
            throw Error(ErrorCode::InvalidInput, "toric factor needs PATH;direction");
        return {ToricSource{std::string(detail::trim(args.substr(0, semi))), parse_direction(args.substr(semi + 1))}};
    }
    if (name == "product")
        return {ProductSource{parse_product(args)}};
    throw Error(ErrorCode::InvalidInput, "unknown product factor '" + std::string(name) + "'");
}

inline std::vector<Source> parse_product(std::string_view list)
{
    std::vector<Source> parts;
    for (auto term : split_top_level(list)) {
        if (term.empty())
            throw Error(ErrorCode::InvalidInput, "empty product factor");
        parts.push_back(parse_source_term(term));
    }
    return parts;
}

/// Thrown by parse_request when help was requested; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Parses the arguments after the program name.
inline Request parse_request(std::vector<std::string> args)
{
    // Values such as "-1,-2" look like flags to the option parser; glue them to their option.
    std::vector<std::string> merged;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if ((args[i] == "--dir" || args[i] == "--grassmannian") && i + 1 < args.size()) {
            merged.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            merged.push_back(args[i]);
        }
    }

    CLI::App app{"Gromov width of monotone manifolds with a semifree circle action", "gwidth"};
    app.require_subcommand(1);
    struct {
        std::string action, toric, dir, grassmannian, product, format = "text";
    } raw;
    const std::vector<std::pair<Command, const char*>> commands = {
        {Command::Width, "Gromov width from the fixed point data"},
        {Command::Check, "verify every hypothesis and report each check"},
        {Command::Fixed, "list fixed components by descending moment value"},
        {Command::Seidel, "degree structure of the Seidel element"},
        {Command::Edges, "gradient-sphere cross-check on polytope edges (toric sources)"},
    };
    std::vector<std::pair<Command, CLI::App*>> subs;
    for (const auto& [cmd, desc] : commands) {
        auto* sub = app.add_subcommand(to_string(cmd), desc);
        sub->add_option("--action", raw.action, "action JSON file");
        sub->add_option("--toric", raw.toric, "polytope JSON file");
        sub->add_option("--dir", raw.dir, "subcircle direction a,b[,c...] (coprime integers)");
        sub->add_option("--grassmannian", raw.grassmannian, "Gr(k,m) as k,m");
        sub->add_option("--product", raw.product, "factors, e.g. \"gr(2,4),gr(1,2)\"");
        sub->add_option("--format", raw.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        subs.emplace_back(cmd, sub);
    }

    std::reverse(merged.begin(), merged.end());
    try {
        app.parse(merged);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
    }

    Request req;
    for (const auto& [cmd, sub] : subs)
        if (sub->parsed())
            req.command = cmd;
    req.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Text;

    int sources = !raw.action.empty() + !raw.toric.empty() + !raw.grassmannian.empty() + !raw.product.empty();
    if (sources != 1)
        throw Error(ErrorCode::InvalidInput,
                    "exactly one of --action, --toric, --grassmannian, --product is required");
    if (!raw.dir.empty() && raw.toric.empty())
        throw Error(ErrorCode::InvalidInput, "--dir only applies to --toric");
    if (!raw.action.empty())
        req.source = {ActionFileSource{raw.action}};
    else if (!raw.toric.empty()) {
        if (raw.dir.empty())
            throw Error(ErrorCode::InvalidInput, "--toric needs --dir");
        req.source = {ToricSource{raw.toric, parse_direction(raw.dir)}};
    } else if (!raw.grassmannian.empty())
        req.source = {GrassmannianSource{parse_grassmannian(raw.grassmannian)}};
    else
        req.source = {ProductSource{parse_product(raw.product)}};
    return req;
}

// ---------------------------------------------------------------- evaluation

struct Resolved {
    ActionData action;
    std::optional<ToricSetup> toric;
};

inline Resolved resolve(const Source& source)
{
    struct Visitor {
        Resolved operator()(const ActionFileSource& s) const { return {load_action(s.path), std::nullopt}; }
        Resolved operator()(const ToricSource& s) const
        {
            auto setup = prepare_subcircle(load_polytope(s.path), s.xi);
            auto action = toric_action(setup.spec);
            return {std::move(action), std::move(setup)};
        }
        Resolved operator()(const GrassmannianSource& s) const { return {grassmannian_action(s.spec), std::nullopt}; }
        Resolved operator()(const ProductSource& s) const
        {
            std::vector<ActionData> parts;
            for (const auto& p : s.parts)
                parts.push_back(resolve(p).action);
            return {product_action(parts), std::nullopt};
        }
    };
    return std::visit(Visitor{}, source.value);
}

/// Semifree verdict: the face-lattice witness for toric sources, the weight scan otherwise.
inline CheckResult semifree_check(const Resolved& r)
{
    if (r.toric)
        return check_toric_semifree(isotropy_report(r.toric->spec));
    return check_semifree(r.action);
}

/// Width with every hypothesis checked; toric sources are screened by isotropy first.
inline WidthReport checked_width(const Resolved& r)
{
    if (r.toric) {
        auto semifree = semifree_check(r);
        if (!semifree.passed)
            throw HypothesisFailed(std::move(semifree), raw_gap(r.action));
    }
    return gromov_width(r.action);
}

inline std::string failure_heading(const std::string& check)
{
    if (check == kSemifree)
        return "NOT SEMIFREE";
    if (check == kIsolatedMax)
        return "NO ISOLATED MAXIMUM";
    return "NOT MONOTONE";
}

/// "NOT SEMIFREE: facet D3 isotropy order 2; raw H_max − s = 1 (diagnostic only)"
inline std::string failure_line(const CheckResult& check, const std::optional<Rational>& raw)
{
    std::string line = failure_heading(check.name) + ": " + check.witness;
    if (raw)
        line += "; raw H_max − s = " + gwidth::to_string(*raw) + " (diagnostic only)";
    return line;
}

inline json failure_json(Command cmd, const CheckResult& check, const std::optional<Rational>& raw)
{
    json j = {{"command", to_string(cmd)}, {"status", "hypothesis_failed"}, {"check", check.name},
              {"witness", check.witness}, {"message", failure_line(check, raw)}};
    j["raw_difference"] = raw ? rational_to_json(*raw) : json(nullptr);
    return j;
}

inline std::string join(const std::vector<std::string>& items, const char* sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep : "") + items[i];
    return out;
}

inline std::string weights_text(const std::vector<Integer>& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "," : "") + std::to_string(w[i]);
    return out + "]";
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline int run_width(const Request& req, const Resolved& r, std::ostream& out)
{
    auto report = checked_width(r);
    if (req.format == OutputFormat::Json) {
        print_json(out, {{"command", "width"},
                         {"status", "ok"},
                         {"width", rational_to_json(report.width)},
                         {"H_max", rational_to_json(report.h_max)},
                         {"s", rational_to_json(report.s)},
                         {"max_component", report.max_component},
                         {"second_level_components", report.second_level_components},
                         {"hypotheses", report.hypothesis_log}});
        return 0;
    }
    out << "Gromov width: " << gwidth::to_string(report.width) << "\n"
        << "H(F_max) = " << gwidth::to_string(report.h_max) << " at " << report.max_component << "\n"
        << "H(F_smax) = " << gwidth::to_string(report.s) << " at " << join(report.second_level_components) << "\n"
        << "hypotheses: " << join(report.hypothesis_log) << "\n";
    return 0;
}

inline int run_check(const Request& req, const Resolved& r, std::ostream& out)
{
    std::vector<CheckResult> results;
    results.push_back(semifree_check(r));
    results.push_back(check_isolated_max(r.action));
    results.push_back(check_monotone_consistency(r.action));
    auto raw = raw_gap(r.action);
    if (!raw)
        throw Error(ErrorCode::NotEnoughComponents, "the moment map takes a single critical value");
    const CheckResult* failed = nullptr;
    for (const auto& c : results)
        if (!c.passed && !failed)
            failed = &c;

    if (req.format == OutputFormat::Json) {
        json checks = json::array();
        for (const auto& c : results)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
        json j = failed ? failure_json(Command::Check, *failed, raw) : json{{"command", "check"}, {"status", "ok"}};
        j["checks"] = checks;
        if (r.toric)
            j["translation"] = point_to_json(r.toric->normalization.translation);
        print_json(out, j);
        return failed ? 1 : 0;
    }
    if (r.toric)
        out << "monotone: pass (translation " << gwidth::to_string(r.toric->normalization.translation)
            << " gives reflexive position)\n";
    for (const auto& c : results)
        out << c.name << ": " << (c.passed ? "pass" : "FAIL (" + c.witness + ")") << "\n";
    if (failed) {
        out << failure_line(*failed, raw) << "\n";
        return 1;
    }
    out << "all hypotheses hold; Gromov width " << gwidth::to_string(*raw) << "\n";
    return 0;
}

inline int run_fixed(const Request& req, const Resolved& r, std::ostream& out)
{
    if (req.format == OutputFormat::Json) {
        print_json(out, action_to_json(r.action));
        return 0;
    }
    out << "n = " << r.action.n << " (" << r.action.provenance.describe() << ")\n";
    for (auto i : order_by_level(r.action)) {
        const auto& c = r.action.components[i];
        out << "H = " << gwidth::to_string(c.H) << "  complex_dim = " << c.complex_dim
            << "  weights = " << weights_text(c.weights) << "  " << c.label << "\n";
    }
    return 0;
}

inline int run_seidel(const Request& req, const Resolved& r, std::ostream& out)
{
    checked_width(r);
    auto st = seidel_structure(r.action);
    degree_check(st);
    if (req.format == OutputFormat::Json) {
        json entries = json::array();
        for (auto it = st.entries.rbegin(); it != st.entries.rend(); ++it)
            entries.push_back({{"index", it->index},
                               {"cohomology_degree", it->cohomology_degree},
                               {"q_exponent", it->q_exponent},
                               {"status", to_string(it->status)}});
        print_json(out, {{"command", "seidel"},
                         {"status", "ok"},
                         {"n", st.n},
                         {"s", st.s},
                         {"formula", seidel_formula(st)},
                         {"entries", entries},
                         {"degree_check", "pass"}});
        return 0;
    }
    out << seidel_formula(st) << "\n"
        << "n = " << st.n << ", s = " << st.s << "; a_i has degree 2i and pairs with q^{-i};"
        << " a section class sigma_max + B contributes at i = n - c1(B)\n";
    for (auto it = st.entries.rbegin(); it != st.entries.rend(); ++it)
        out << "a_" << it->index << " (degree " << it->cohomology_degree << ", q^" << it->q_exponent
            << "): " << to_string(it->status) << "\n";
    out << "degree check: pass\n";
    return 0;
}

inline int run_edges(const Request& req, const Resolved& r, std::ostream& out)
{
    if (!r.toric)
        throw Error(ErrorCode::InvalidInput, "edges needs a --toric source");
    const auto& t = r.toric->normalization.translation;
    auto input_coords = [&](const RationalPoint& p) {
        RationalPoint q = p;
        for (std::size_t i = 0; i < q.size(); ++i)
            q[i] -= t[i];
        return q;
    };
    auto checks = edge_cross_check(r.toric->spec);
    if (req.format == OutputFormat::Json) {
        json edges = json::array();
        for (const auto& c : checks)
            edges.push_back({{"from", point_to_json(input_coords(c.from_position))},
                             {"to", point_to_json(input_coords(c.to_position))},
                             {"direction", vector_to_json(c.edge.direction)},
                             {"lattice_length", rational_to_json(c.lattice_length)},
                             {"c1", c.c1},
                             {"area", rational_to_json(c.area)}});
        print_json(out, {{"command", "edges"}, {"status", "ok"}, {"translation", point_to_json(t)}, {"edges", edges}});
        return 0;
    }
    out << "translation to reflexive position: " << gwidth::to_string(t) << "\n";
    for (const auto& c : checks)
        out << gwidth::to_string(input_coords(c.from_position)) << "-" << gwidth::to_string(input_coords(c.to_position))
            << "  direction " << c.edge.direction << "  lattice length " << gwidth::to_string(c.lattice_length)
            << "  c1 " << c.c1 << "  area " << gwidth::to_string(c.area) << "\n";
    out << checks.size() << " edges: c1 = area = lattice length on each\n";
    return 0;
}

/**
 * Runs a parsed request. Exit status: 0 success, 1 a hypothesis fails
 * (the report names the witness), 2 malformed input.
 */
inline int run(const Request& req, std::ostream& out, std::ostream& err)
{
    try {
        auto resolved = resolve(req.source);
        switch (req.command) {
        case Command::Width: return run_width(req, resolved, out);
        case Command::Check: return run_check(req, resolved, out);
        case Command::Fixed: return run_fixed(req, resolved, out);
        case Command::Seidel: return run_seidel(req, resolved, out);
        case Command::Edges: return run_edges(req, resolved, out);
        }
        return 2;
    } catch (const HypothesisFailed& e) {
        if (req.format == OutputFormat::Json)
            print_json(out, failure_json(req.command, e.check(), e.raw_difference()));
        else
            out << failure_line(e.check(), e.raw_difference()) << "\n";
        return 1;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotMonotone) {
            if (req.format == OutputFormat::Json)
                print_json(out, {{"command", to_string(req.command)},
                                 {"status", "hypothesis_failed"},
                                 {"check", "monotone"},
                                 {"witness", e.what()},
                                 {"message", std::string("NOT MONOTONE: ") + e.what()}});
            else
                out << "NOT MONOTONE: " << e.what() << "\n";
            return 1;
        }
        if (req.format == OutputFormat::Json)
            print_json(out, {{"command", to_string(req.command)},
                             {"status", "input_error"},
                             {"error", std::string(gwidth::to_string(e.code()))},
                             {"message", e.what()}});
        err << "error (" << gwidth::to_string(e.code()) << "): " << e.what() << "\n";
        return 2;
    }
}

/// Full command line: parse then run. Parse failures exit 2.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Request req;
    try {
        req = parse_request(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const Error& e) {
        err << "error (" << gwidth::to_string(e.code()) << "): " << e.what() << "\n";
        return 2;
    }
    return run(req, out, err);
}

} // namespace gwidth::cli
