#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radbound/radbound.hpp"

using namespace radbound;

namespace {

enum Exit { ok = 0, state_absent = 2, invalid = 3, no_convergence = 4, reproduction_failed = 5 };

struct PotentialFlags {
    std::string family;
    std::string units = "dimensionless";
    std::vector<std::string> params;  // key=value
    std::map<std::string, double> named;
};

struct Common {
    PotentialFlags pot;
    int n_r = 0;
    int ell = 0;
    double sigma = kDefaultSigma;
    std::string format = "json";
    std::string output;
    std::string input;
};

void add_potential_flags(CLI::App* cmd, Common& c)
{
    cmd->add_option("--family", c.pot.family, "potential family (" + [] {
        std::string s;
        for (const auto& f : family_names()) s += (s.empty() ? "" : ", ") + f;
        return s;
    }() + ")");
    cmd->add_option("--units", c.pot.units, "dimensionless | nuclear | helium")
        ->check(CLI::IsMember({"dimensionless", "nuclear", "helium"}));
    cmd->add_option("--param", c.pot.params, "extra family parameter as key=value");
    // Shortcuts for the common parameters; --power is the family exponent n.
    for (const auto& [flag, key] : std::vector<std::pair<std::string, std::string>>{
             {"--g", "g"}, {"--R", "R"}, {"--V0", "V0"}, {"--a", "a"}, {"--b", "b"}, {"--p", "p"},
             {"--p-rep", "p_rep"}, {"--p-att", "p_att"}, {"--A", "A"}, {"--power", "n"}}) {
        cmd->add_option_function<double>(
            flag, [&c, key = key](double v) { c.pot.named[key] = v; }, "parameter " + key);
    }
    cmd->add_option("--input", c.input, "JSON document whose inputs replace the flags");
}

void add_output_flags(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output,-o", c.output, "output path (default: standard output)");
}

FamilySpec spec_from_flags(const PotentialFlags& f)
{
    if (f.family.empty()) throw DomainError("--family is required");
    FamilySpec s;
    s.family = f.family;
    s.units = f.units;
    s.params = f.named;
    for (const auto& kv : f.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw DomainError("--param expects key=value, got '" + kv + "'");
        try {
            std::size_t used = 0;
            const std::string value = kv.substr(eq + 1);
            s.params[kv.substr(0, eq)] = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::logic_error&) {
            throw DomainError("--param value is not a number: '" + kv + "'");
        }
    }
    return normalized(s);
}

/// Potential and quantum numbers, from --input when given.
void resolve_inputs(Common& c, FamilySpec& spec)
{
    if (c.input.empty()) {
        spec = spec_from_flags(c.pot);
        return;
    }
    Json doc;
    try {
        doc = Json::parse(read_text(c.input));
    } catch (const Json::parse_error& e) {
        throw DomainError("cannot parse '" + c.input + "': " + e.what());
    }
    const Json& in = doc.contains("inputs") ? doc.at("inputs") : doc;
    try {
        spec = normalized(family_spec_from_json(in.at("potential")));
        if (in.contains("n_r")) c.n_r = in.at("n_r").get<int>();
        if (in.contains("ell")) c.ell = in.at("ell").get<int>();
        if (in.contains("sigma")) c.sigma = in.at("sigma").get<double>();
    } catch (const Json::exception& e) {
        throw DomainError("malformed inputs in '" + c.input + "': " + e.what());
    }
}

void emit(const Common& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
    } else {
        write_text(c.output, text);
    }
}

std::string render(const Json& doc, const Common& c, const Json& flat)
{
    if (c.format == "json") return doc.dump(2) + "\n";
    std::ostringstream os;
    write_csv(os, flat);
    return os.str();
}

Json base_inputs(const std::string& cmd, const FamilySpec& spec, const Common& c)
{
    Json in;
    in["subcommand"] = cmd;
    in["potential"] = to_json(spec);
    in["n_r"] = c.n_r;
    in["ell"] = c.ell;
    return in;
}

int run_solve(Common& c)
{
    FamilySpec spec;
    resolve_inputs(c, spec);
    const Potential pot = make_potential(spec);
    const RadialState s = solve_state(pot, c.n_r, c.ell);
    const Json results = to_json(s, pot);
    emit(c, render(make_document(base_inputs("solve", spec, c), results, diagnostics_json(s)), c,
                   results));
    return ok;
}

int run_bounds(Common& c)
{
    FamilySpec spec;
    resolve_inputs(c, spec);
    const Potential pot = make_potential(spec);
    const RadialState s = solve_state(pot, c.n_r, c.ell);
    const BoundsReport rep = report(pot, s);
    const Json results = to_json(rep);
    if (c.format == "json") {
        emit(c, render(make_document(base_inputs("bounds", spec, c), results, diagnostics_json(s)),
                       c, results));
        return ok;
    }
    std::ostringstream os;
    CsvWriter w(os);
    w.row({"id", "kind", "quantity", "status", "value", "exact", "satisfied", "note"});
    for (const auto& e : rep.entries) {
        const double exact = e.quantity == "<r2>" ? rep.exact_msr : rep.exact;
        w.row({e.id, to_string(e.kind), e.quantity, to_string(e.status), csv_number(e.value),
               csv_number(exact), e.applicable() ? (e.satisfied ? "true" : "false") : "", e.note});
    }
    emit(c, os.str());
    return ok;
}

int run_halo(Common& c, const std::string& coupling, const std::string& method)
{
    FamilySpec spec;
    resolve_inputs(c, spec);
    if (c.ell != 0) throw DomainError("the halo criterion is formulated for S waves");
    const Potential pot = make_potential(spec);
    HaloOptions opt;
    opt.sigma = c.sigma;
    opt.method = halo_method_from_string(method);
    if (coupling == "bargmann") opt.coupling = CouplingSource::bargmann;
    if (coupling == "numeric") opt.coupling = CouplingSource::numeric;
    if (coupling == "wkb") opt.coupling = CouplingSource::wkb;

    const int N = c.n_r + 1;
    const bool nucleon_core = spec.family == "wood-saxon" && spec.units == "nuclear" &&
                              spec.params.count("A") && opt.coupling == CouplingSource::automatic &&
                              opt.method == HaloMethod::automatic && N == 1;
    Json threshold;
    double E_H = 0.0;
    Json diag;
    diag["warnings"] = Json::array();
    if (nucleon_core) {
        // Rounded alpha = 1.9 A^{1/3}, matching the nucleon-core formula.
        const double A = spec.params.at("A");
        E_H = nuclear_threshold_energy(A, c.sigma);
        threshold["critical_coupling"] = to_json(wkb_wood_saxon(A, 1));
        threshold["h"] = nuclear_h(A, c.sigma);
        threshold["method"] = "nucleon-core";
    } else {
        const HaloThreshold t = halo_threshold(pot, N, opt);
        E_H = t.E_H;
        threshold["critical_coupling"] = to_json(t.gc);
        threshold["x0"] = number(t.x0);
        threshold["method"] = to_string(t.method);
    }
    threshold["E_H"] = number(E_H);
    threshold["energy_unit"] = pot.units().energy_unit;
    threshold["ratio_at_E_H"] = number(ratio_at_energy(pot, E_H, c.n_r, 0));

    Json state = nullptr;
    try {
        const RadialState s = solve_state(pot, c.n_r, 0);
        state = Json::object();
        state["energy"] = number(s.energy);
        const double r0 = classical_radius(pot, s.energy);
        state["classical_radius"] = number(r0);
        state["rms_radius"] = number(std::sqrt(s.msr));
        state["ratio"] = number(std::sqrt(s.msr) / r0);
        state["is_halo"] = std::sqrt(s.msr) / r0 >= c.sigma;
        state["beyond_threshold"] = s.energy > E_H;
        for (const auto& w : s.warnings) diag["warnings"].push_back(w);
    } catch (const StateAbsentError& e) {
        diag["warnings"].push_back(std::string("no state at the given strength: ") + e.what());
    }

    Json in = base_inputs("halo", spec, c);
    in["sigma"] = c.sigma;
    in["coupling"] = coupling;
    in["method"] = method;
    Json results;
    results["threshold"] = threshold;
    results["state"] = state;

    Json flat;
    flat["sigma"] = c.sigma;
    flat["E_H"] = number(E_H);
    flat["ratio_at_E_H"] = threshold["ratio_at_E_H"];
    flat["energy"] = state.is_null() ? Json(nullptr) : state["energy"];
    flat["ratio"] = state.is_null() ? Json(nullptr) : state["ratio"];
    flat["is_halo"] = state.is_null() ? Json(nullptr) : state["is_halo"];
    emit(c, render(make_document(in, results, diag), c, flat));
    return ok;
}

int run_reproduce(Common& c, const std::string& table, bool all, bool strict)
{
    if (all == !table.empty()) throw DomainError("give exactly one of --table or --all");
    ReproduceOptions opt;
    opt.strict = strict;
    std::vector<TableComparison> tables;
    if (all) {
        tables = reproduce_all(opt);
    } else {
        tables.push_back(reproduce(table, opt));
    }
    bool pass = true;
    for (const auto& t : tables) pass = pass && t.pass();

    if (c.format == "json") {
        Json in;
        in["subcommand"] = "reproduce";
        in["tables"] = Json::array();
        for (const auto& t : tables) in["tables"].push_back(t.id);
        in["strict"] = strict;
        Json results = Json::array();
        for (const auto& t : tables) results.push_back(to_json(t));
        Json diag;
        diag["pass"] = pass;
        emit(c, make_document(in, results, diag).dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (tables.size() > 1) os << (i ? "\n" : "") << "# table " << tables[i].id << "\n";
            write_csv(os, tables[i]);
        }
        emit(c, os.str());
    }
    return pass ? ok : reproduction_failed;
}

int run_scan(Common& c, int fig, double n_min, double n_max, double n_step, const std::vector<int>& Ns)
{
    if (fig != 1 && fig != 2) throw DomainError("--fig must be 1 or 2");
    if (!(n_step > 0.0)) throw DomainError("--n-step must be positive");
    std::vector<double> ns;
    for (int i = 0;; ++i) {
        const double n = n_min + i * n_step;
        if (n > n_max + 1e-9 * n_step) break;
        ns.push_back(n);
    }
    const std::vector<ScanRow> rows = fig == 1 ? scan_s(ns, Ns, c.sigma) : scan_t(ns, Ns, c.sigma);
    const std::string column = fig == 1 ? "s" : "t";
    if (c.format == "csv") {
        std::ostringstream os;
        write_csv(os, rows, column);
        emit(c, os.str());
        return ok;
    }
    Json in;
    in["subcommand"] = "scan";
    in["fig"] = fig;
    in["n"] = ns;
    in["N"] = Ns;
    in["sigma"] = c.sigma;
    Json results = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["n"] = r.n;
        j["N"] = r.N;
        j[column] = r.value;
        results.push_back(j);
    }
    emit(c, make_document(in, results, Json::object()).dump(2) + "\n");
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Radial bound states, mean-square-radius limits and halo criteria"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Common c;
    auto* solve = app.add_subcommand("solve", "solve one bound state");
    auto* bounds = app.add_subcommand("bounds", "evaluate every -E<r^2> limit for a state");
    auto* halo = app.add_subcommand("halo", "halo threshold and assessment for an S-wave state");
    auto* repro = app.add_subcommand("reproduce", "compare against the embedded reference tables");
    auto* scan = app.add_subcommand("scan", "threshold curves s(N, n) or t(N, n)");

    for (auto* cmd : {solve, bounds, halo}) {
        add_potential_flags(cmd, c);
        cmd->add_option("--n", c.n_r, "radial quantum number")->check(CLI::NonNegativeNumber);
        add_output_flags(cmd, c);
    }
    for (auto* cmd : {solve, bounds}) {
        cmd->add_option("--ell", c.ell, "orbital angular momentum")->check(CLI::NonNegativeNumber);
    }
    std::string coupling = "auto";
    std::string method = "automatic";
    halo->add_option("--sigma", c.sigma, "halo ratio threshold");
    halo->add_option("--coupling", coupling, "auto | bargmann | numeric | wkb")
        ->check(CLI::IsMember({"auto", "bargmann", "numeric", "wkb"}));
    halo->add_option("--method", method, "x0 solver (automatic, generic-numeric, ...)");

    std::string table;
    bool all = false;
    bool strict = false;
    repro->add_option("--table", table, "1-5 or anchors");
    repro->add_flag("--all", all, "every table and anchor");
    repro->add_flag("--strict", strict, "full tolerance on near-threshold rows");
    add_output_flags(repro, c);

    int fig = 1;
    double n_min = std::numeric_limits<double>::quiet_NaN();
    double n_max = 30.0;
    double n_step = 1.0;
    std::vector<int> Ns = {1, 2, 3};
    scan->add_option("--fig", fig, "1 for s(N, n), 2 for t(N, n)")->required();
    scan->add_option("--n-min", n_min, "first n (default 4 for fig 1, 5 for fig 2)");
    scan->add_option("--n-max", n_max, "last n");
    scan->add_option("--n-step", n_step, "step in n");
    scan->add_option("--N", Ns, "state indices")->delimiter(',')->check(CLI::PositiveNumber);
    scan->add_option("--sigma", c.sigma, "halo ratio threshold");
    add_output_flags(scan, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : invalid;
    }

    try {
        if (*solve) return run_solve(c);
        if (*bounds) return run_bounds(c);
        if (*halo) return run_halo(c, coupling, method);
        if (*repro) return run_reproduce(c, table, all, strict);
        if (*scan) {
            if (std::isnan(n_min)) n_min = fig == 2 ? 5.0 : 4.0;
            return run_scan(c, fig, n_min, n_max, n_step, Ns);
        }
    } catch (const StateAbsentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return state_absent;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return no_convergence;
    } catch (const std::runtime_error& e) {
        // Domain, inapplicable and no-root errors: the request cannot be met.
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}
