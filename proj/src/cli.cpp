#include "dgloc/cli.hpp"

#include "dgloc/bracket.hpp"
#include "dgloc/connection_io.hpp"
#include "dgloc/moduli.hpp"
#include "dgloc/rbg_check.hpp"
#include "dgloc/space_io.hpp"
#include "dgloc/verify/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace dgloc {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int parse_count(const std::string& spec, const std::string& text)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad parameter in built-in space '" + spec + "'");
}

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

std::string format_vector(const RationalVector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + format_rational(v[i]);
    return s + "]";
}

Json vector_json(const RationalVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(format_rational(x));
    return out;
}

struct Inputs {
    std::string space;
    std::string connection = "trivial";
    std::optional<std::size_t> r;
    std::string basepoint;
};

SemiSimplicialSet load_pointed(const std::string& spec, const std::string& basepoint)
{
    SemiSimplicialSet space = resolve_space(spec);
    if (!basepoint.empty()) {
        if (!space.find(0, basepoint))
            throw UsageError("unknown basepoint vertex '" + basepoint + "'");
        space = SpaceBuilder(space).set_basepoint(basepoint).build();
    }
    const auto report = validate(space);
    if (!report.ok)
        throw SpaceError(report.message);
    return space;
}

Connection load_conn(const SemiSimplicialSet& space, const std::string& spec, std::optional<std::size_t> r)
{
    if (spec == "trivial") {
        if (!r)
            throw UsageError("--connection trivial needs --r");
        if (*r < 1)
            throw UsageError("--r must be at least 1");
        return trivial_connection(space, *r);
    }
    Connection e = load_connection(space, spec);
    if (r && *r != e.r)
        throw UsageError("--r " + std::to_string(*r) + " differs from the rank " + std::to_string(e.r) +
                         " in the connection file");
    return e;
}

std::string describe_connection(const std::string& spec, const SemiSimplicialSet& space, const Connection& e)
{
    return (spec == "trivial" ? "trivial" : "file") + std::string(" digest ") + connection_digest(space, e);
}

// ---------------------------------------------------------------------------

int cmd_validate(const Inputs& in, bool json, std::ostream& out)
{
    SemiSimplicialSet space = resolve_space(in.space);
    if (!in.basepoint.empty()) {
        if (!space.find(0, in.basepoint))
            throw UsageError("unknown basepoint vertex '" + in.basepoint + "'");
        space = SpaceBuilder(space).set_basepoint(in.basepoint).build();
    }
    const auto report = validate(space);
    if (json) {
        Json j;
        j["space"] = space.name();
        j["space_digest"] = text_digest(serialize_space(space));
        Json counts = Json::array();
        for (int d = 0; d <= space.dimension(); ++d)
            counts.push_back(space.count(d));
        j["counts"] = counts;
        j["valid"] = report.ok;
        j["message"] = report.message;
        j["simplex"] = report.simplex_id ? Json(*report.simplex_id) : Json(nullptr);
        if (report.simplex_id)
            j["simplex_dim"] = report.simplex_dim;
        out << j.dump(2) << '\n';
    } else {
        out << "space: " << space.name() << '\n';
        out << "simplices per dimension:";
        for (int d = 0; d <= space.dimension(); ++d)
            out << ' ' << space.count(d);
        out << '\n';
        if (report.ok)
            out << "valid\n";
        else
            out << "invalid: " << report.message << '\n';
    }
    return report.ok ? kExitOk : kExitInvariant;
}

int cmd_spaces(bool json, std::ostream& out)
{
    const auto list = builtin_spaces();
    if (json) {
        Json j = Json::array();
        for (const auto& b : list)
            j.push_back({{"name", b.name}, {"description", b.description}});
        out << j.dump(2) << '\n';
    } else {
        for (const auto& b : list)
            out << b.name << "  " << b.description << '\n';
    }
    return kExitOk;
}

int cmd_tangent(const Inputs& in, bool prequotient, bool bases, bool json, std::ostream& out)
{
    const auto space = load_pointed(in.space, in.basepoint);
    const FlatConnection e(space, load_conn(space, in.connection, in.r));
    const auto rep = tangent_report(space, e, bases);
    if (json) {
        Json j;
        j["space"] = rep.space;
        j["space_digest"] = text_digest(serialize_space(space));
        j["basepoint"] = rep.basepoint;
        j["r"] = rep.r;
        j["connection_digest"] = rep.connection_digest;
        j["dims"] = rep.dims;
        if (prequotient)
            j["prequotient_dims"] = rep.prequotient_dims;
        j["gauge_kernel_dim"] = rep.gauge_kernel_dim;
        j["checks"] = {{"flat", true},
                       {"gauge_action_free", rep.gauge_action_free()},
                       {"euler_consistent", rep.euler_consistent}};
        if (bases) {
            Json b = Json::array();
            for (const auto& degree : rep.bases) {
                Json d = Json::array();
                for (const auto& v : degree)
                    d.push_back(vector_json(v));
                b.push_back(d);
            }
            j["bases"] = b;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "space: " << rep.space << " (basepoint " << rep.basepoint << ")\n";
        out << "rank: " << rep.r << '\n';
        out << "connection: " << describe_connection(in.connection, space, e.connection()) << '\n';
        for (std::size_t k = 0; k < rep.dims.size(); ++k)
            out << "H^" << k << " = " << rep.dims[k] << '\n';
        if (prequotient)
            out << "before gauge quotient: " << join(rep.prequotient_dims) << '\n';
        out << "ker(C^0_res -> C^1) = " << rep.gauge_kernel_dim
            << (rep.gauge_action_free() ? " (gauge action free)" : " (FLAGGED: gauge action not free)") << '\n';
        out << "euler characteristic consistent: " << (rep.euler_consistent ? "yes" : "no") << '\n';
        if (bases)
            for (std::size_t k = 0; k < rep.bases.size(); ++k)
                for (std::size_t i = 0; i < rep.bases[k].size(); ++i)
                    out << "basis H^" << k << " #" << i << ": " << format_vector(rep.bases[k][i]) << '\n';
    }
    return rep.gauge_action_free() && rep.euler_consistent ? kExitOk : kExitInvariant;
}

int report_checks(const std::string& title, const Json& header, const std::vector<CheckResult>& checks, bool json,
                  std::ostream& out)
{
    if (json) {
        Json j = header;
        Json list = Json::array();
        for (const auto& c : checks)
            list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = list;
        j["pass"] = all_pass(checks);
        out << j.dump(2) << '\n';
    } else {
        out << title << '\n';
        for (const auto& c : checks)
            out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    return all_pass(checks) ? kExitOk : kExitInvariant;
}

int cmd_resolution(int n, int r, std::uint64_t seed, int samples, bool json, std::ostream& out)
{
    if (n < 0 || r < 1 || samples < 0)
        throw UsageError("resolution-check needs n >= 0, r >= 1 and samples >= 0");
    const auto checks = resolution_check({n, r, seed, samples});
    const Json header = {{"n", n}, {"r", r}, {"seed", seed}, {"samples", samples}};
    return report_checks("RB_" + std::to_string(n) + " GL(" + std::to_string(r) + "), seed " + std::to_string(seed),
                         header, checks, json, out);
}

int cmd_bracket(const Inputs& in, bool json, std::ostream& out)
{
    const auto space = load_pointed(in.space, in.basepoint);
    const FlatConnection e(space, load_conn(space, in.connection, in.r));
    const auto t = bracket_on_tangent(space, e);

    std::vector<std::pair<std::string, std::optional<bool>>> laws{
        {"closed", t.closed},
        {"descends", t.descends},
        {"antisymmetric", t.antisymmetric},
        {"jacobi", t.jacobi},
        {"lambda1_squared_zero", t.lambda1_squared_zero},
        {"lambda1_derivation", t.lambda1_derivation},
        {"lambda3_zero", t.lambda3_zero},
        {"aw_commutator", t.aw_commutator},
    };
    if (json) {
        Json j;
        j["space"] = space.name();
        j["basepoint"] = space.id(*space.basepoint());
        j["r"] = t.r;
        j["connection_digest"] = connection_digest(space, e.connection());
        j["dims"] = t.dims;
        Json constants = Json::array();
        for (const auto& [key, block] : t.constants)
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t k = 0; k < block[i].size(); ++k)
                    if (!is_zero(block[i][k]))
                        constants.push_back(
                            {{"degrees", {key.first, key.second}}, {"i", i}, {"j", k}, {"class", vector_json(block[i][k])}});
        j["constants"] = constants;
        Json l;
        for (const auto& [name, v] : laws)
            l[name] = v ? Json(*v) : Json(nullptr);
        j["laws"] = l;
        j["pass"] = t.ok();
        out << j.dump(2) << '\n';
    } else {
        out << "space: " << space.name() << " (basepoint " << space.id(*space.basepoint()) << ")\n";
        out << "rank: " << t.r << '\n';
        out << "connection: " << describe_connection(in.connection, space, e.connection()) << '\n';
        out << "dims: " << join(t.dims) << '\n';
        std::size_t nonzero = 0;
        for (const auto& [key, block] : t.constants)
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t k = 0; k < block[i].size(); ++k)
                    if (!is_zero(block[i][k])) {
                        ++nonzero;
                        out << "[H^" << key.first << " #" << i << ", H^" << key.second << " #" << k
                            << "] = " << format_vector(block[i][k]) << '\n';
                    }
        if (nonzero == 0)
            out << "bracket vanishes on cohomology\n";
        for (const auto& [name, v] : laws)
            out << name << ": " << (v ? (*v ? "yes" : "NO") : "not evaluated") << '\n';
    }
    return t.ok() ? kExitOk : kExitInvariant;
}

int cmd_invariance(const Inputs& a, const Inputs& b, bool json, std::ostream& out)
{
    const auto s1 = load_pointed(a.space, a.basepoint);
    const auto s2 = load_pointed(b.space, b.basepoint);
    const FlatConnection e1(s1, load_conn(s1, a.connection, a.r));
    const FlatConnection e2(s2, load_conn(s2, b.connection, b.r));
    const auto rep = triangulation_invariance(s1, e1, s2, e2);
    if (json) {
        Json j;
        j["first"] = {{"space", s1.name()}, {"connection_digest", connection_digest(s1, e1.connection())}, {"dims", rep.first}};
        j["second"] = {{"space", s2.name()}, {"connection_digest", connection_digest(s2, e2.connection())}, {"dims", rep.second}};
        j["equal"] = rep.equal;
        out << j.dump(2) << '\n';
    } else {
        out << s1.name() << ": " << join(rep.first) << '\n';
        out << s2.name() << ": " << join(rep.second) << '\n';
        out << (rep.equal ? "equal" : "DIFFERENT") << '\n';
    }
    return rep.equal ? kExitOk : kExitInvariant;
}

int cmd_suite(std::uint64_t seed, int criterion, bool json, std::ostream& out)
{
    std::vector<CriterionResult> results;
    if (criterion == 0)
        results = run_acceptance(seed);
    else if (criterion >= 1 && criterion <= kCriterionCount)
        results.push_back(run_criterion(criterion, seed));
    else
        throw UsageError("--criterion must be 1.." + std::to_string(kCriterionCount));
    bool pass = true;
    for (const auto& r : results)
        pass = pass && r.pass;
    if (json) {
        Json j;
        j["seed"] = seed;
        Json list = Json::array();
        for (const auto& r : results)
            list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        j["criteria"] = list;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    } else {
        out << "acceptance suite, seed " << seed << '\n';
        for (const auto& r : results)
            out << format_result(r) << '\n';
    }
    return pass ? kExitOk : kExitInvariant;
}

int guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConnectionError& e) {
        err << "connection error: " << e.what() << '\n';
        return e.kind() == ConnectionError::Kind::NonFlat ? kExitNonFlat : kExitInvariant;
    } catch (const PointError& e) {
        err << "not a point: " << e.what() << '\n';
        return kExitNonFlat;
    } catch (const SpaceError& e) {
        err << "invalid space: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
}

}  // namespace

std::vector<BuiltinSpace> builtin_spaces()
{
    return {
        {"torus", "one vertex v, edges a b c, triangles L U"},
        {"sphere", "boundary of the 3-simplex"},
        {"simplex:N", "standard N-simplex, basepoint 0"},
        {"boundary:N", "boundary of the standard N-simplex (N >= 1), basepoint 0"},
        {"circle:K", "K vertices and K edges in a loop (K >= 1), basepoint v0"},
        {"wedge:G", "G loops at one vertex v (G >= 1)"},
    };
}

SemiSimplicialSet resolve_space(const std::string& spec)
{
    if (spec == "torus")
        return torus();
    if (spec == "sphere")
        return sphere();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        if (kind == "simplex") {
            const int n = parse_count(spec, arg);
            if (n < 0)
                throw std::invalid_argument("simplex dimension must be >= 0");
            return standard_simplex(n);
        }
        if (kind == "boundary")
            return boundary_simplex(parse_count(spec, arg));
        if (kind == "circle")
            return circle(parse_count(spec, arg));
        if (kind == "wedge")
            return wedge_of_circles(parse_count(spec, arg));
    }
    return load_space(spec);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Derived moduli of local systems on semi-simplicial sets", "dgloc"};
    app.require_subcommand(1);
    std::string format = "human";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}));
    };
    auto add_inputs = [&](CLI::App* sub, Inputs& in, const std::string& prefix) {
        sub->add_option("--" + prefix + "space", in.space, "built-in name or space file")->required();
        sub->add_option("--" + prefix + "connection", in.connection, "'trivial' or connection file");
        sub->add_option("--" + prefix + "basepoint", in.basepoint, "basepoint vertex id");
    };

    Inputs in, other;
    std::optional<std::size_t> r;
    bool prequotient = false, bases = false;
    int n = 0, rank = 1, samples = 5, criterion = 0;
    std::uint64_t seed = kDefaultSeed;

    auto* validate_cmd = app.add_subcommand("validate", "check face tables, simplicial identities, connectivity");
    validate_cmd->add_option("--space", in.space, "built-in name or space file")->required();
    validate_cmd->add_option("--basepoint", in.basepoint, "basepoint vertex id");
    add_format(validate_cmd);

    auto* spaces_cmd = app.add_subcommand("spaces", "list built-in spaces");
    add_format(spaces_cmd);

    auto* tangent_cmd = app.add_subcommand("tangent", "tangent cohomology of the derived moduli at a connection");
    add_inputs(tangent_cmd, in, "");
    tangent_cmd->add_option("--r", r, "rank for --connection trivial");
    tangent_cmd->add_flag("--prequotient", prequotient, "also report cohomology before the gauge quotient");
    tangent_cmd->add_flag("--bases", bases, "print cocycle representatives");
    add_format(tangent_cmd);

    auto* resolution_cmd = app.add_subcommand("resolution-check", "verify RB_n GL(r)");
    resolution_cmd->add_option("--n", n, "simplicial level")->required();
    resolution_cmd->add_option("--r", rank, "matrix rank")->required();
    resolution_cmd->add_option("--seed", seed, "random seed");
    resolution_cmd->add_option("--samples", samples, "flat points to sample");
    add_format(resolution_cmd);

    auto* bracket_cmd = app.add_subcommand("bracket", "bracket on tangent cohomology and its laws");
    add_inputs(bracket_cmd, in, "");
    bracket_cmd->add_option("--r", r, "rank for --connection trivial");
    add_format(bracket_cmd);

    auto* invariance_cmd = app.add_subcommand("invariance", "compare tangent cohomology of two triangulations");
    add_inputs(invariance_cmd, in, "");
    add_inputs(invariance_cmd, other, "other-");
    invariance_cmd->add_option("--r", r, "rank for trivial connections");
    add_format(invariance_cmd);

    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance battery");
    suite_cmd->add_option("--seed", seed, "random seed");
    suite_cmd->add_option("--criterion", criterion, "run one criterion (1..10)");
    add_format(suite_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    const bool json = format == "json";
    in.r = r;
    other.r = r;

    return guarded(
        [&]() -> int {
            if (validate_cmd->parsed())
                return cmd_validate(in, json, out);
            if (spaces_cmd->parsed())
                return cmd_spaces(json, out);
            if (tangent_cmd->parsed())
                return cmd_tangent(in, prequotient, bases, json, out);
            if (resolution_cmd->parsed())
                return cmd_resolution(n, rank, seed, samples, json, out);
            if (bracket_cmd->parsed())
                return cmd_bracket(in, json, out);
            if (invariance_cmd->parsed())
                return cmd_invariance(in, other, json, out);
            return cmd_suite(seed, criterion, json, out);
        },
        err);
}

}  // namespace dgloc
