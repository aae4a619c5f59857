// Copyright 2026 The su2wigner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "su2w/closed_form.hpp"
#include "su2w/quasiprob.hpp"
#include "su2w/report.hpp"
#include "su2w/rindler.hpp"
#include "su2w/scan.hpp"
#include "su2w/states.hpp"

namespace su2w::cli {

namespace {

using nlohmann::json;
using std::numbers::pi;

class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::optional<double> nu;
    double r = 0.0;
    std::string accelerated_text = "0";
    std::vector<std::size_t> accelerated;
    std::string s = "w";
    std::size_t n_qubits = 3;
    std::size_t theta_steps = 91;
    std::size_t phi_steps = 181;
    std::size_t r_steps = 101;
    std::size_t nu_steps = 101;
    std::optional<double> theta;
    std::optional<double> phi;
    std::string output;
    std::string format = "csv";
    bool r_given = false;
};

DistributionKind parse_kind(const std::string& s) {
    if (s == "q") return DistributionKind::Q;
    if (s == "w") return DistributionKind::Wigner;
    if (s == "p") return DistributionKind::P;
    throw ArgumentError("--s must be one of q, w, p");
}

std::size_t parse_index(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw ArgumentError("--accelerated: '" + token + "' is not a non-negative integer");
    }
    return static_cast<std::size_t>(std::stoul(token));
}

// A bare integer k means the first k qubits; anything with a comma is an
// explicit index list ("0,2", or "2," for the single qubit 2).
std::vector<std::size_t> parse_accelerated(const std::string& text, std::size_t n_qubits) {
    std::vector<std::size_t> out;
    if (text.find(',') == std::string::npos) {
        const std::size_t k = parse_index(text);
        if (k > n_qubits) throw ArgumentError("--accelerated: count exceeds the number of qubits");
        return leading_qubits(k);
    }
    std::stringstream in(text);
    std::string token;
    std::vector<bool> seen(n_qubits, false);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        const std::size_t q = parse_index(token);
        if (q >= n_qubits) throw ArgumentError("--accelerated: qubit index " + token + " out of range");
        if (seen[q]) throw ArgumentError("--accelerated: qubit index " + token + " repeated");
        seen[q] = true;
        out.push_back(q);
    }
    if (out.empty()) throw ArgumentError("--accelerated: empty index list");
    return out;
}

void require_finite(const std::optional<double>& v, const char* name) {
    if (v && !std::isfinite(*v)) throw ArgumentError(std::string(name) + " must be finite");
}

void validate(RunConfig& c) {
    if (c.n_qubits < 1 || c.n_qubits > 7) throw ArgumentError("--n-qubits must be in 1..7");
    if (c.nu && !(*c.nu >= 0.0 && *c.nu <= 1.0)) throw ArgumentError("--nu must lie in [0, 1]");
    if (!(c.r >= 0.0 && c.r <= kMaxAcceleration + kAccelerationSlack)) {
        throw ArgumentError("--r must lie in [0, pi/4]");
    }
    require_finite(c.theta, "--theta");
    require_finite(c.phi, "--phi");
    parse_kind(c.s);
    if (c.format != "csv" && c.format != "json") throw ArgumentError("--format must be csv or json");
    if (c.theta_steps < 2 || c.phi_steps < 2) throw ArgumentError("--theta-steps and --phi-steps must be >= 2");
    if (c.r_steps < 2 || c.nu_steps < 2) throw ArgumentError("--r-steps and --nu-steps must be >= 2");
    c.accelerated = parse_accelerated(c.accelerated_text, c.n_qubits);
}

double round12(double v) { return std::strtod(format_value(v).c_str(), nullptr); }

struct Row {
    double theta, phi, nu, r;
    std::size_t k;
    int s;
    double w;
};

std::string render_csv(const std::vector<Row>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& row : rows) {
        out += format_value(row.theta) + ',' + format_value(row.phi) + ',' + format_value(row.nu) + ',' +
               format_value(row.r) + ',' + std::to_string(row.k) + ',' + std::to_string(row.s) + ',' +
               format_value(row.w) + '\n';
    }
    return out;
}

json config_echo(const RunConfig& c) {
    json meta;
    meta["command"] = c.command;
    meta["nu"] = c.nu ? json(*c.nu) : json(nullptr);
    meta["r"] = c.r;
    meta["accelerated"] = c.accelerated;
    meta["s"] = c.s;
    meta["n_qubits"] = c.n_qubits;
    meta["theta_steps"] = c.theta_steps;
    meta["phi_steps"] = c.phi_steps;
    meta["r_steps"] = c.r_steps;
    meta["nu_steps"] = c.nu_steps;
    meta["theta"] = c.theta ? json(*c.theta) : json(nullptr);
    meta["phi"] = c.phi ? json(*c.phi) : json(nullptr);
    meta["format"] = c.format;
    return meta;
}

std::string render_json(const RunConfig& c, const std::vector<Row>& rows, json extra_meta = json::object()) {
    json doc;
    doc["meta"] = config_echo(c);
    doc["meta"].update(extra_meta);
    json samples = json::array();
    for (const auto& row : rows) {
        samples.push_back({round12(row.theta), round12(row.phi), round12(row.nu), round12(row.r), row.k, row.s,
                           round12(row.w)});
    }
    doc["samples"] = std::move(samples);
    return doc.dump(2) + '\n';
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    file.flush();
    if (!file) throw IoError("failed writing " + path.string());
}

void emit(const RunConfig& c, const std::string& contents, std::ostream& out) {
    if (c.output.empty()) {
        out << contents;
    } else {
        write_file(c.output, contents);
    }
}

DensityMatrix build_state(double nu, double r, const std::vector<std::size_t>& accelerated, std::size_t n) {
    return accelerate(ghz_werner({nu, n}), {r, accelerated});
}

std::vector<Row> surface_rows(const DensityMatrix& rho, DistributionKind kind, const GridSpec& grid, double nu,
                              double r, std::size_t k) {
    const auto values = sample_grid(rho, kind, grid);
    std::vector<Row> rows;
    rows.reserve(values.size());
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        rows.push_back({grid.theta_at(idx / grid.phi_steps), grid.phi_at(idx % grid.phi_steps), nu, r, k,
                        s_value(kind), values[idx]});
    }
    return rows;
}

std::string render(const RunConfig& c, const std::vector<Row>& rows, json extra_meta = json::object()) {
    return c.format == "json" ? render_json(c, rows, std::move(extra_meta)) : render_csv(rows);
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
    if (!c.nu || !c.theta || !c.phi) throw ArgumentError("eval requires --nu, --theta and --phi");
    const auto rho = build_state(*c.nu, c.r, c.accelerated, c.n_qubits);
    const double w = evaluate_equal(rho, parse_kind(c.s), {*c.theta, *c.phi});
    out << format_value(w) << '\n';
    return kOk;
}

int cmd_grid(const RunConfig& c, std::ostream& out) {
    if (!c.nu) throw ArgumentError("grid requires --nu");
    const auto rho = build_state(*c.nu, c.r, c.accelerated, c.n_qubits);
    const GridSpec grid{c.theta_steps, c.phi_steps};
    const auto rows = surface_rows(rho, parse_kind(c.s), grid, *c.nu, c.r, c.accelerated.size());
    emit(c, render(c, rows), out);
    return kOk;
}

int cmd_scan_r(const RunConfig& c, std::ostream& out) {
    if (!c.nu) throw ArgumentError("scan-r requires --nu");
    const double theta = c.theta.value_or(pi / 2.0);
    const double phi = c.phi.value_or(pi);
    const auto kind = parse_kind(c.s);
    std::vector<Row> rows;
    for (double r : linspace(0.0, kMaxAcceleration, c.r_steps)) {
        const auto rho = build_state(*c.nu, r, c.accelerated, c.n_qubits);
        rows.push_back({theta, phi, *c.nu, r, c.accelerated.size(), s_value(kind),
                        evaluate_equal(rho, kind, {theta, phi})});
    }
    emit(c, render(c, rows), out);
    return kOk;
}

int cmd_scan_nu(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const double theta = c.theta.value_or(pi / 2.0);
    const double phi = c.phi.value_or(pi);
    const auto kind = parse_kind(c.s);
    std::vector<Row> rows;
    for (double nu : linspace(0.0, 1.0, c.nu_steps)) {
        const auto rho = build_state(nu, c.r, c.accelerated, c.n_qubits);
        rows.push_back({theta, phi, nu, c.r, c.accelerated.size(), s_value(kind),
                        evaluate_equal(rho, kind, {theta, phi})});
    }
    json extra = json::object();
    if (kind == DistributionKind::Wigner && c.n_qubits == 3) {
        // The GHZ-Werner state is permutation symmetric, so only the count matters.
        const auto t = negativity_threshold(c.accelerated.size(), c.r, theta, phi);
        extra["nu_star"] = t.sign_change ? json(t.nu_star) : json(nullptr);
        err << "nu_star=" << (t.sign_change ? format_value(t.nu_star) : std::string("none")) << '\n';
    }
    emit(c, render(c, rows, extra), out);
    return kOk;
}

json comparison_json(const ClosedFormComparison& cmp) {
    return {{"tag", cmp.tag},
            {"k", cmp.k},
            {"nu", cmp.nu},
            {"r", cmp.r},
            {"max_abs_diff", cmp.max_abs_diff},
            {"argmax", {{"theta", cmp.argmax.theta}, {"phi", cmp.argmax.phi}}},
            {"numeric_at_argmax", cmp.numeric_at_argmax},
            {"closed_form_at_argmax", cmp.closed_form_at_argmax},
            {"status", to_string(cmp.status)}};
}

json coefficient_json(const CoefficientReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        entries.push_back({{"label", e.label}, {"printed", e.printed}, {"numeric", e.numeric}, {"abs_diff", e.abs_diff}});
    }
    json subset = table_subset(rep.variant);
    return {{"variant", to_string(rep.variant)},
            {"nu", rep.nu},
            {"r", rep.r},
            {"accelerated", subset},
            {"max_abs_diff", rep.max_abs_diff},
            {"printed_trace", rep.printed_trace},
            {"numeric_trace", rep.numeric_trace},
            {"status", to_string(rep.status)},
            {"note", rep.note},
            {"entries", std::move(entries)}};
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const GridSpec grid{c.theta_steps, c.phi_steps};
    const std::vector<double> ghz_nus = c.nu ? std::vector<double>{*c.nu} : std::vector<double>{0, 0.2, 0.3, 0.5, 1};
    const std::vector<double> acc_nus = c.nu ? std::vector<double>{*c.nu} : std::vector<double>{0, 0.3, 0.7, 1};
    const std::vector<double> rs = c.r_given ? std::vector<double>{c.r} : std::vector<double>{0, 0.3, 0.6, pi / 4.0};

    json variants = json::array();
    json derived = json::array();
    for (double nu : ghz_nus) {
        variants.push_back(comparison_json(compare_closed_form(ClosedFormVariant::GHZ, nu, 0.0, grid)));
        derived.push_back(comparison_json(compare_derived_closed_form(0, nu, 0.0, grid)));
    }
    for (auto v : {ClosedFormVariant::ACC1, ClosedFormVariant::ACC2, ClosedFormVariant::ACC3}) {
        for (double nu : acc_nus) {
            for (double r : rs) {
                variants.push_back(comparison_json(compare_closed_form(v, nu, r, grid)));
                derived.push_back(comparison_json(compare_derived_closed_form(accelerated_count(v), nu, r, grid)));
            }
        }
    }
    json coefficients = json::array();
    for (auto v : {TableVariant::A, TableVariant::B, TableVariant::C}) {
        for (double nu : acc_nus) {
            for (double r : rs) coefficients.push_back(coefficient_json(coefficient_report(v, nu, r)));
        }
    }

    json doc;
    doc["grid"] = {{"theta_steps", grid.theta_steps}, {"phi_steps", grid.phi_steps}};
    doc["tolerance"] = kMatchTolerance;
    doc["variants"] = std::move(variants);
    doc["derived"] = std::move(derived);
    doc["coefficients"] = std::move(coefficients);
    emit(c, doc.dump(2) + '\n', out);
    return kOk;
}

int cmd_figures(const RunConfig& c) {
    namespace fs = std::filesystem;
    const fs::path dir = c.output.empty() ? fs::path("figures") : fs::path(c.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());

    const GridSpec grid{c.theta_steps, c.phi_steps};
    const auto wigner = DistributionKind::Wigner;
    const int s = s_value(wigner);
    const double fig_r = 0.6;
    const auto nus = linspace(0.0, 1.0, c.nu_steps);
    const auto rs = linspace(0.0, kMaxAcceleration, c.r_steps);
    const SphericalPoint negative_point{pi / 2.0, pi};

    auto surface = [&](double nu, double r, std::size_t k) {
        return render_csv(surface_rows(build_state(nu, r, leading_qubits(k), 3), wigner, grid, nu, r, k));
    };

    // fig1*: unaccelerated surfaces and the (nu, theta) plane at phi = pi.
    write_file(dir / "fig1a.csv", surface(1.0, 0.0, 0));
    write_file(dir / "fig1b.csv", surface(0.3, 0.0, 0));
    {
        std::vector<Row> rows;
        for (double nu : nus) {
            const auto rho = build_state(nu, 0.0, {}, 3);
            for (std::size_t i = 0; i < grid.theta_steps; ++i) {
                const double theta = grid.theta_at(i);
                rows.push_back({theta, pi, nu, 0.0, 0, s, evaluate_equal(rho, wigner, {theta, pi})});
            }
        }
        write_file(dir / "fig1c.csv", render_csv(rows));
    }

    // fig2* to fig4*: one to three accelerated qubits.
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::string stem = "fig" + std::to_string(k + 1);
        write_file(dir / (stem + "a.csv"), surface(1.0, fig_r, k));
        write_file(dir / (stem + "b.csv"), surface(0.3, fig_r, k));
        std::vector<Row> rows;
        for (double nu : nus) {
            for (const auto& pt : scan_vs_r(nu, k, rs, negative_point.theta, negative_point.phi)) {
                rows.push_back({negative_point.theta, negative_point.phi, nu, pt.x, k, s, pt.value});
            }
        }
        write_file(dir / (stem + "c.csv"), render_csv(rows));
    }

    // fig5*: W(pi/2, pi) against r for k = 1, 2, 3.
    const std::array<std::pair<const char*, double>, 4> panels{
        {{"fig5a.csv", 1.0}, {"fig5b.csv", 0.7}, {"fig5c.csv", 0.5}, {"fig5d.csv", 0.2}}};
    for (const auto& [name, nu] : panels) {
        std::vector<Row> rows;
        for (std::size_t k = 1; k <= 3; ++k) {
            for (const auto& pt : scan_vs_r(nu, k, rs, negative_point.theta, negative_point.phi)) {
                rows.push_back({negative_point.theta, negative_point.phi, nu, pt.x, k, s, pt.value});
            }
        }
        write_file(dir / name, render_csv(rows));
    }
    return kOk;
}

}  // namespace

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string out(buf);
    // Guard against a non-"C" numeric locale.
    for (auto& ch : out) {
        if (ch == ',') ch = '.';
    }
    if (out == "-0") out = "0";
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"s-parametrized SU(2) quasi-probability distributions of GHZ states"};
    app.require_subcommand(1);

    auto add_state_options = [&](CLI::App* sub) {
        sub->add_option("--nu", c.nu, "GHZ mixing parameter in [0, 1]");
        sub->add_option("--r", c.r, "acceleration parameter in [0, pi/4]");
        sub->add_option("--accelerated", c.accelerated_text,
                        "count k (first k qubits) or comma-separated qubit indices");
        sub->add_option("--s", c.s, "distribution: q (s=-1), w (s=0), p (s=+1)");
        sub->add_option("--n-qubits", c.n_qubits, "number of qubits (1..7)");
    };
    auto add_output = [&](CLI::App* sub, bool format) {
        sub->add_option("--output,-o", c.output, "output path (default: stdout)");
        if (format) sub->add_option("--format", c.format, "csv or json");
    };

    auto* eval = app.add_subcommand("eval", "evaluate at one point (same angles on every qubit)");
    add_state_options(eval);
    eval->add_option("--theta", c.theta);
    eval->add_option("--phi", c.phi);

    auto* grid = app.add_subcommand("grid", "sample a (theta, phi) surface");
    add_state_options(grid);
    grid->add_option("--theta-steps", c.theta_steps);
    grid->add_option("--phi-steps", c.phi_steps);
    add_output(grid, true);

    auto* scan_r = app.add_subcommand("scan-r", "value at a point against r in [0, pi/4]");
    add_state_options(scan_r);
    scan_r->add_option("--theta", c.theta, "default pi/2");
    scan_r->add_option("--phi", c.phi, "default pi");
    scan_r->add_option("--r-steps", c.r_steps);
    add_output(scan_r, true);

    auto* scan_nu = app.add_subcommand("scan-nu", "value at a point against nu in [0, 1]");
    add_state_options(scan_nu);
    scan_nu->add_option("--theta", c.theta, "default pi/2");
    scan_nu->add_option("--phi", c.phi, "default pi");
    scan_nu->add_option("--nu-steps", c.nu_steps);
    add_output(scan_nu, true);

    auto* verify = app.add_subcommand("verify", "compare published closed forms with the numeric pipeline");
    verify->add_option("--nu", c.nu, "restrict to one nu");
    auto* verify_r = verify->add_option("--r", c.r, "restrict to one r");
    auto* verify_theta = verify->add_option("--theta-steps", c.theta_steps, "default 50");
    auto* verify_phi = verify->add_option("--phi-steps", c.phi_steps, "default 50");
    add_output(verify, false);

    auto* figures = app.add_subcommand("figures", "write the CSV data behind every figure panel");
    figures->add_option("--output,-o", c.output, "output directory (default: figures)");
    figures->add_option("--theta-steps", c.theta_steps);
    figures->add_option("--phi-steps", c.phi_steps);
    figures->add_option("--r-steps", c.r_steps);
    figures->add_option("--nu-steps", c.nu_steps);

    // CLI11 wants argv order reversed when given a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        c.command = app.get_subcommands().front()->get_name();
        c.r_given = verify_r->count() > 0;
        if (c.command == "verify") {
            if (verify_theta->count() == 0) c.theta_steps = 50;
            if (verify_phi->count() == 0) c.phi_steps = 50;
        }
        validate(c);
        if (c.command == "eval") return cmd_eval(c, out);
        if (c.command == "grid") return cmd_grid(c, out);
        if (c.command == "scan-r") return cmd_scan_r(c, out);
        if (c.command == "scan-nu") return cmd_scan_nu(c, out, err);
        if (c.command == "verify") return cmd_verify(c, out);
        if (c.command == "figures") return cmd_figures(c);
        err << "error: unknown command " << c.command << '\n';
        return kBadArguments;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace su2w::cli
