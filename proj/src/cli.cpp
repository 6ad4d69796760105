#include "wspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wspec/errors.hpp"
#include "wspec/numerov.hpp"
#include "wspec/solvable.hpp"
#include "wspec/spectrum.hpp"

namespace wspec::cli {

namespace {

using nlohmann::json;

enum class Format { text, csv, json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    Format format = Format::text;
    std::string output;
    std::optional<double> tail_tolerance;
    std::optional<std::size_t> term_cap;
    std::optional<double> energy_tolerance;
    std::optional<double> step;
    std::optional<double> e_min;
    std::optional<double> e_max;
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    cmd->add_option("--format", opts.format, "text, csv or json")->transform(CLI::CheckedTransformer(formats));
    cmd->add_option("-o,--output", opts.output, "write to a file instead of stdout");
    cmd->add_option("--tail-tol", opts.tail_tolerance, "relative tail tolerance of the gamma sums");
    cmd->add_option("--term-cap", opts.term_cap, "maximum terms per gamma sum");
    cmd->add_option("--energy-tol", opts.energy_tolerance, "root tolerance in E");
    cmd->add_option("--step", opts.step, "scan step in E");
    cmd->add_option("--emin", opts.e_min, "lower end of the scan window");
    cmd->add_option("--emax", opts.e_max, "upper end of the scan window");
}

SpectrumPolicy make_policy(const CommonOptions& opts)
{
    SpectrumPolicy p;
    if (opts.tail_tolerance) {
        if (!(*opts.tail_tolerance > 0.0)) {
            throw UsageError("--tail-tol must be positive");
        }
        p.quantization.tail.relative_tolerance = *opts.tail_tolerance;
    }
    if (opts.term_cap) {
        p.quantization.tail.term_cap = *opts.term_cap;
    }
    if (opts.energy_tolerance) {
        if (!(*opts.energy_tolerance > 0.0)) {
            throw UsageError("--energy-tol must be positive");
        }
        p.energy_tolerance = *opts.energy_tolerance;
    }
    if (opts.step) {
        if (!(*opts.step > 0.0)) {
            throw UsageError("--step must be positive");
        }
        p.step = *opts.step;
    }
    p.e_min = opts.e_min;
    p.e_max = opts.e_max;
    if (p.e_min && p.e_max && !(*p.e_min < *p.e_max)) {
        throw UsageError("--emin must be below --emax");
    }
    p.threads = thread_budget();
    return p;
}

double rounded(double x)
{
    return std::strtod(format_number(x).c_str(), nullptr);
}

json policy_json(const SpectrumPolicy& p)
{
    const auto& tail = p.quantization.tail;
    json j{
        {"tail_tolerance", rounded(tail.relative_tolerance)},
        {"consecutive_small", tail.consecutive_small},
        {"max_cancellation", rounded(tail.max_cancellation)},
        {"term_cap", tail.term_cap},
        {"energy_tolerance", rounded(p.energy_tolerance)},
        {"step", rounded(p.step)},
    };
    if (p.e_min) {
        j["e_min"] = rounded(*p.e_min);
    }
    if (p.e_max) {
        j["e_max"] = rounded(*p.e_max);
    }
    return j;
}

json eigenvalue_json(const Eigenvalue& e)
{
    return json{
        {"index", e.index},
        {"parity", parity_name(e.parity)},
        {"energy", rounded(e.energy)},
        {"residual", rounded(e.residual)},
        {"n_used", e.n_used},
        {"terms_used", e.terms_used},
    };
}

std::string text_energy(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", x);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + '"';
}

std::string levels_header(int levels)
{
    std::string h = "g";
    for (int l = 0; l < levels; ++l) {
        h += ",E" + std::to_string(l);
    }
    return h;
}

void write_row(std::ostream& os, Format format, const SweepRow& row, int levels, std::optional<int> N)
{
    if (format == Format::csv) {
        if (N) {
            os << *N << ',';
        }
        os << format_number(row.g);
        for (int l = 0; l < levels; ++l) {
            os << ',';
            if (l < static_cast<int>(row.eigenvalues.size())) {
                os << format_number(row.eigenvalues[static_cast<std::size_t>(l)].energy);
            }
        }
        os << '\n';
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%8g", row.g);
    os << buf;
    for (int l = 0; l < levels; ++l) {
        std::snprintf(buf, sizeof buf, " %14s",
                      l < static_cast<int>(row.eigenvalues.size())
                          ? text_energy(row.eigenvalues[static_cast<std::size_t>(l)].energy).c_str()
                          : "-");
        os << buf;
    }
    os << '\n';
}

json row_json(const SweepRow& row)
{
    json ev = json::array();
    for (const auto& e : row.eigenvalues) {
        ev.push_back(eigenvalue_json(e));
    }
    return json{{"g", rounded(row.g)}, {"eigenvalues", ev}};
}

void require_degree(int N)
{
    if (N < 4) {
        throw UsageError("--N must be at least 4");
    }
}

std::vector<int> parse_degrees(const std::vector<std::string>& items)
{
    std::vector<int> out;
    for (const auto& item : items) {
        const auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                if (lo > hi) {
                    throw UsageError("empty --N range " + item);
                }
                for (int n = lo; n <= hi; ++n) {
                    out.push_back(n);
                }
            }
        } catch (const std::logic_error&) {
            throw UsageError("bad --N value " + item);
        }
    }
    for (int N : out) {
        require_degree(N);
    }
    return out;
}

// Writes to the chosen file or to `out`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw Error("cannot open " + path);
            }
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

void emit_json(std::ostream& os, const json& doc)
{
    os << doc.dump(2) << '\n';
}

// solve

struct SolveArgs {
    CommonOptions common;
    int N = 0;
    double g = 0.0;
    std::string parity = "both";
    int count = 4;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err)
{
    require_degree(a.N);
    if (a.count < 1) {
        throw UsageError("--count must be at least 1");
    }
    SpectrumPolicy policy = make_policy(a.common);
    if (a.parity == "even") {
        policy.parity = Parity::even;
    } else if (a.parity == "odd") {
        policy.parity = Parity::odd;
    }
    const SpectrumResult r = lowest_eigenvalues({a.g, a.N}, a.count, policy);

    Sink sink(a.common.output, out);
    std::ostream& os = *sink;
    switch (a.common.format) {
    case Format::json: {
        json ev = json::array();
        for (const auto& e : r.eigenvalues) {
            ev.push_back(eigenvalue_json(e));
        }
        json pol = policy_json(policy);
        pol["window"] = {rounded(r.e_min), rounded(r.e_max)};
        emit_json(os, json{
                          {"model", "anharmonic"},
                          {"params", {{"N", a.N}, {"g", rounded(a.g)}, {"parity", a.parity}, {"count", a.count}}},
                          {"policies", pol},
                          {"eigenvalues", ev},
                      });
        break;
    }
    case Format::csv:
        os << "index,parity,energy,residual,n_used,terms_used\n";
        for (const auto& e : r.eigenvalues) {
            std::string terms;
            for (std::size_t i = 0; i < e.terms_used.size(); ++i) {
                terms += (i ? ";" : "") + std::to_string(e.terms_used[i]);
            }
            os << e.index << ',' << parity_name(e.parity) << ',' << format_number(e.energy) << ','
               << format_number(e.residual) << ',' << e.n_used << ',' << csv_field(terms) << '\n';
        }
        break;
    case Format::text:
        os << "N = " << a.N << ", g = " << format_number(a.g) << '\n';
        for (const auto& e : r.eigenvalues) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "E%-3d %-4s %16.8f  residual %.1e  n %d  terms %zu\n", e.index,
                          parity_name(e.parity), e.energy, e.residual, e.n_used,
                          e.terms_used.empty() ? std::size_t{0} : *std::max_element(e.terms_used.begin(), e.terms_used.end()));
            os << buf;
        }
        break;
    }
    if (r.shortfall) {
        err << "only " << r.eigenvalues.size() << " of " << a.count << " levels found below E = "
            << format_number(r.e_max) << '\n';
        return exit_partial;
    }
    return exit_ok;
}

// table and sweep

struct TableArgs {
    CommonOptions common;
    std::vector<std::string> degrees{"4"};
    std::vector<double> g = reference_couplings();
    int levels = 4;
};

int do_table(const TableArgs& a, std::ostream& out)
{
    const std::vector<int> degrees = parse_degrees(a.degrees);
    if (a.levels < 1) {
        throw UsageError("--levels must be at least 1");
    }
    if (a.g.empty()) {
        throw UsageError("--g needs at least one value");
    }
    const SpectrumPolicy policy = make_policy(a.common);
    const bool many = degrees.size() > 1;

    Sink sink(a.common.output, out);
    std::ostream& os = *sink;
    json tables = json::array();
    bool partial = false;
    if (a.common.format == Format::csv) {
        os << (many ? "N," : "") << levels_header(a.levels) << '\n';
    }
    for (int N : degrees) {
        const SweepResult sweep = reproduce_table(N, a.g, a.levels, policy);
        partial = partial || sweep.shortfall();
        if (a.common.format == Format::json) {
            json rows = json::array();
            for (const auto& row : sweep.rows) {
                rows.push_back(row_json(row));
            }
            tables.push_back({{"N", N}, {"rows", rows}});
            continue;
        }
        if (a.common.format == Format::text) {
            os << "N = " << N << '\n';
        }
        for (const auto& row : sweep.rows) {
            write_row(os, a.common.format, row, a.levels, many ? std::optional<int>(N) : std::nullopt);
        }
        os.flush();
    }
    if (a.common.format == Format::json) {
        json g = json::array();
        for (double v : a.g) {
            g.push_back(rounded(v));
        }
        emit_json(os, json{
                          {"model", "anharmonic"},
                          {"params", {{"N", degrees}, {"g", g}, {"levels", a.levels}}},
                          {"policies", policy_json(policy)},
                          {"tables", tables},
                      });
    }
    return partial ? exit_partial : exit_ok;
}

struct SweepArgs {
    CommonOptions common;
    int N = 0;
    double g_from = 0.0;
    double g_to = 0.0;
    double g_step = 0.0;
    int levels = 1;
};

int do_sweep(const SweepArgs& a, std::ostream& out)
{
    require_degree(a.N);
    if (!(a.g_step > 0.0)) {
        throw UsageError("--g-step must be positive");
    }
    if (a.g_from > a.g_to) {
        throw UsageError("empty sweep range: --g-from is above --g-to");
    }
    if (a.levels < 1) {
        throw UsageError("--levels must be at least 1");
    }
    const auto count = static_cast<std::size_t>(std::floor((a.g_to - a.g_from) / a.g_step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = rounded(a.g_from + static_cast<double>(i) * a.g_step);
    }
    const SpectrumPolicy policy = make_policy(a.common);

    Sink sink(a.common.output, out);
    std::ostream& os = *sink;
    if (a.common.format == Format::csv) {
        os << levels_header(a.levels) << '\n';
    }
    json rows = json::array();
    bool partial = false;
    // Batches of one row per worker keep the stream in grid order.
    const std::size_t batch = std::max(1u, policy.threads);
    for (std::size_t start = 0; start < count; start += batch) {
        const std::vector<double> chunk(grid.begin() + static_cast<std::ptrdiff_t>(start),
                                        grid.begin() + static_cast<std::ptrdiff_t>(std::min(count, start + batch)));
        const SweepResult part = reproduce_table(a.N, chunk, a.levels, policy);
        partial = partial || part.shortfall();
        for (const auto& row : part.rows) {
            if (a.common.format == Format::json) {
                rows.push_back(row_json(row));
            } else {
                write_row(os, a.common.format, row, a.levels, std::nullopt);
            }
        }
        os.flush();
    }
    if (a.common.format == Format::json) {
        emit_json(os, json{
                          {"model", "anharmonic"},
                          {"params",
                           {{"N", a.N},
                            {"g_from", rounded(a.g_from)},
                            {"g_to", rounded(a.g_to)},
                            {"g_step", rounded(a.g_step)},
                            {"levels", a.levels}}},
                          {"policies", policy_json(policy)},
                          {"rows", rows},
                      });
    }
    return partial ? exit_partial : exit_ok;
}

// validate

struct ValidateArgs {
    CommonOptions common;
    std::string model;
    double kappa = 2.0;
    double lambda = 3.0;
    double alpha = 0.3;
    double gamma = 5.5;
    std::string parity = "both";
    int count = 3;
    int N = 0;
    double g = 0.0;
    std::optional<double> tolerance;
    double x_max = 6.0;
    int steps = 3000;
};

struct Check {
    std::string label;
    std::optional<double> reference;
    std::optional<double> located;

    double gap() const { return reference && located ? std::abs(*located - *reference) : INFINITY; }
};

// Pairs references with located zeros, closest pairs first; leftovers on
// either side are reported unpaired.
std::vector<Check> pair_levels(const std::string& prefix, const std::vector<double>& reference,
                               const std::vector<double>& located)
{
    struct Candidate {
        double distance;
        std::size_t ref, loc;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        for (std::size_t j = 0; j < located.size(); ++j) {
            candidates.push_back({std::abs(reference[i] - located[j]), i, j});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });
    std::vector<std::optional<double>> match(reference.size());
    std::vector<bool> used(located.size(), false);
    for (const auto& c : candidates) {
        if (!match[c.ref] && !used[c.loc]) {
            match[c.ref] = located[c.loc];
            used[c.loc] = true;
        }
    }
    std::vector<Check> out;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        out.push_back({prefix + std::to_string(i), reference[i], match[i]});
    }
    for (std::size_t j = 0; j < located.size(); ++j) {
        if (!used[j]) {
            out.push_back({prefix + "extra", std::nullopt, located[j]});
        }
    }
    return out;
}

int do_validate(const ValidateArgs& a, std::ostream& out)
{
    json params;
    std::vector<Check> checks;
    double tolerance = 0.0;
    const bool want_even = a.parity != "odd";
    const bool want_odd = a.parity != "even";

    if (a.model == "poschl-teller") {
        const solvable::PoschlTellerSpec spec{a.kappa, a.lambda};
        if (a.count < 1) {
            throw UsageError("--count must be at least 1");
        }
        tolerance = a.tolerance.value_or(1e-8);
        params = {{"kappa", rounded(a.kappa)}, {"lambda", rounded(a.lambda)}, {"count", a.count}};
        checks = pair_levels("k2_", solvable::pt_exact_levels(spec, a.count), solvable::pt_located_levels(spec, a.count));
    } else if (a.model == "modified-pt") {
        tolerance = a.tolerance.value_or(1e-8);
        params = {{"lambda", rounded(a.lambda)}, {"parity", a.parity}};
        for (double mu : {0.0, 0.5}) {
            if ((mu == 0.0 && !want_even) || (mu == 0.5 && !want_odd)) {
                continue;
            }
            const solvable::ModifiedPTSpec spec{a.lambda, mu};
            auto part = pair_levels(mu == 0.0 ? "even_" : "odd_", solvable::mpt_exact_levels(spec),
                                    solvable::mpt_located_levels(spec));
            checks.insert(checks.end(), part.begin(), part.end());
        }
    } else if (a.model == "morse") {
        const solvable::MorseSpec spec{a.alpha, a.gamma};
        tolerance = a.tolerance.value_or(1e-3);
        params = {{"alpha", rounded(a.alpha)}, {"gamma_over_alpha", rounded(a.gamma)}, {"y0", rounded(spec.y0())}};
        checks = pair_levels("beta_", solvable::morse_reference_levels(spec), solvable::morse_located_levels(spec));
    } else if (a.model == "oracle") {
        require_degree(a.N);
        if (a.count < 1) {
            throw UsageError("--count must be at least 1");
        }
        tolerance = a.tolerance.value_or(1e-6);
        params = {{"N", a.N}, {"g", rounded(a.g)}, {"count", a.count}, {"x_max", rounded(a.x_max)}, {"steps", a.steps}};
        const SpectrumResult r = lowest_eigenvalues({a.g, a.N}, a.count, make_policy(a.common));
        const auto potential = numerov::EvenPolynomialPotential::anharmonic(a.g, a.N);
        int ordinal[2] = {0, 0};
        for (const auto& e : r.eigenvalues) {
            const int nu = parity_index(e.parity);
            const double oracle = numerov::richardson_eigenvalue(potential, ordinal[nu]++, nu, {a.x_max, a.steps}).extrapolated;
            checks.push_back({"E" + std::to_string(e.index), oracle, e.energy});
        }
        for (std::size_t i = r.eigenvalues.size(); i < static_cast<std::size_t>(a.count); ++i) {
            checks.push_back({"E" + std::to_string(i), std::nullopt, std::nullopt});
        }
    } else {
        throw UsageError("unknown model '" + a.model + "'");
    }

    bool passed = true;
    for (const auto& c : checks) {
        passed = passed && c.gap() <= tolerance;
    }

    Sink sink(a.common.output, out);
    std::ostream& os = *sink;
    const auto opt_number = [](const std::optional<double>& v) { return v ? json(rounded(*v)) : json(nullptr); };
    switch (a.common.format) {
    case Format::json: {
        json levels = json::array();
        for (const auto& c : checks) {
            levels.push_back({{"label", c.label},
                              {"reference", opt_number(c.reference)},
                              {"located", opt_number(c.located)},
                              {"gap", c.reference && c.located ? json(rounded(c.gap())) : json(nullptr)}});
        }
        emit_json(os, json{{"model", a.model},
                           {"params", params},
                           {"policies", {{"tolerance", rounded(tolerance)}}},
                           {"levels", levels},
                           {"passed", passed}});
        break;
    }
    case Format::csv:
        os << "label,reference,located,gap\n";
        for (const auto& c : checks) {
            os << csv_field(c.label) << ',' << (c.reference ? format_number(*c.reference) : "") << ','
               << (c.located ? format_number(*c.located) : "") << ','
               << (c.reference && c.located ? format_number(c.gap()) : "") << '\n';
        }
        break;
    case Format::text:
        for (const auto& c : checks) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-10s reference %16s  located %16s  gap %s\n", c.label.c_str(),
                          c.reference ? text_energy(*c.reference).c_str() : "-",
                          c.located ? text_energy(*c.located).c_str() : "-",
                          c.reference && c.located ? format_number(c.gap()).c_str() : "missing");
            os << buf;
        }
        os << (passed ? "PASS" : "FAIL") << " (tolerance " << format_number(tolerance) << ")\n";
        break;
    }
    return passed ? exit_ok : exit_error;
}

} // namespace

std::vector<std::string> merge_escaped_values(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        const bool long_flag = a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
        if (long_flag && i + 2 < args.size() && args[i + 1] == "--") {
            out.push_back(a + "=" + args[i + 2]);
            i += 2;
            continue;
        }
        out.push_back(a);
    }
    return out;
}

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

unsigned thread_budget()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPECTRA_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1) {
            n = std::min(n, static_cast<unsigned>(cap));
        }
    }
    return n;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Eigenvalues of g x^2 + x^(2N) from a convergent Wronskian series", "spectra"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* cmd_solve = app.add_subcommand("solve", "lowest eigenvalues of one oscillator");
    cmd_solve->add_option("--N", solve.N, "degree, potential x^(2N)")->required();
    cmd_solve->add_option("--g", solve.g, "coefficient of x^2")->required();
    cmd_solve->add_option("--parity", solve.parity)->check(CLI::IsMember({"even", "odd", "both"}));
    cmd_solve->add_option("--count", solve.count, "number of levels");
    add_common(cmd_solve, solve.common);

    TableArgs table;
    auto* cmd_table = app.add_subcommand("table", "lowest levels over a list of couplings");
    cmd_table->add_option("--N", table.degrees, "degrees, e.g. 4 5 or 4..7");
    cmd_table->add_option("--g", table.g, "couplings (default: the nine reference values)");
    cmd_table->add_option("--levels", table.levels);
    add_common(cmd_table, table.common);

    ValidateArgs validate;
    auto* cmd_validate = app.add_subcommand("validate", "compare against solvable models or the Numerov oracle");
    cmd_validate->add_option("--model", validate.model, "poschl-teller, modified-pt, morse or oracle")->required();
    cmd_validate->add_option("--kappa", validate.kappa);
    cmd_validate->add_option("--lambda", validate.lambda);
    cmd_validate->add_option("--alpha", validate.alpha);
    cmd_validate->add_option("--gamma", validate.gamma, "gamma/alpha for the Morse model");
    cmd_validate->add_option("--parity", validate.parity)->check(CLI::IsMember({"even", "odd", "both"}));
    cmd_validate->add_option("--count", validate.count);
    cmd_validate->add_option("--N", validate.N);
    cmd_validate->add_option("--g", validate.g);
    cmd_validate->add_option("--tolerance", validate.tolerance);
    cmd_validate->add_option("--x-max", validate.x_max, "Numerov grid extent");
    cmd_validate->add_option("--steps", validate.steps, "Numerov grid steps");
    add_common(cmd_validate, validate.common);

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "levels on a uniform coupling grid");
    cmd_sweep->add_option("--N", sweep.N)->required();
    cmd_sweep->add_option("--g-from", sweep.g_from)->required();
    cmd_sweep->add_option("--g-to", sweep.g_to)->required();
    cmd_sweep->add_option("--g-step", sweep.g_step)->required();
    cmd_sweep->add_option("--levels", sweep.levels);
    add_common(cmd_sweep, sweep.common);

    args = merge_escaped_values(args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (cmd_solve->parsed()) {
            return do_solve(solve, out, err);
        }
        if (cmd_table->parsed()) {
            return do_table(table, out);
        }
        if (cmd_sweep->parsed()) {
            return do_sweep(sweep, out);
        }
        return do_validate(validate, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace wspec::cli
