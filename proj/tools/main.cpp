// Command-line front end: catalog demos, termwise inverses, operator
// construction, singularity scans, contour probes, and the local jet solve.
// Artifacts go to stdout or --out as JSON (schema 1, complex as [re, im])
// or CSV; identical config and seed produce byte-identical output.
//
// Exit codes: 0 success, 2 precondition violation, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadamard/catalog.hpp"
#include "hadamard/contour.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/euler_ode.hpp"
#include "hadamard/germ.hpp"
#include "hadamard/io.hpp"
#include "hadamard/pade.hpp"
#include "hadamard/singularity.hpp"
#include "hadamard/volterra.hpp"

namespace {

using hadamard::Complex;
using hadamard::TruncatedGerm;
using json = nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json cpx(Complex z) { return json::array({z.real(), z.imag()}); }

json cpx_list(const std::vector<Complex>& v) {
    json out = json::array();
    for (Complex z : v) out.push_back(cpx(z));
    return out;
}

json germ_json(const TruncatedGerm& f) { return cpx_list(f.coeffs()); }

struct Options {
    std::string germ = "delta";
    std::string with = "delta";
    std::size_t order = 64;
    double tol = 1e-10;
    unsigned long long seed = 12345;
    std::string out;
    std::string format = "json";
    std::string pair = "example1";
    int power = 1;
    double a_re = 1.0, a_im = 0.0;
    double b_re = 1.0, b_im = 0.0;
    double omega_re = 1.0, omega_im = 0.0;
    std::string f1 = "const:1";
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw hadamard::InvalidParameters("cli: cannot open output file " + opt.out);
    file << text;
}

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw hadamard::InvalidParameters("cli: cannot open germ file " + path);
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

bool is_json_path(const std::string& spec) {
    return spec.size() > 5 && spec.rfind(".json") == spec.size() - 5;
}

// Germs arrive either as a mini-language spec or as a rational-germ JSON file.
hadamard::CatalogGerm load_germ(const std::string& spec) {
    if (is_json_path(spec))
        return hadamard::CatalogGerm::from_rational(hadamard::rational_germ_from_json(slurp(spec)),
                                                    spec);
    return hadamard::parse_germ_spec(spec);
}

// The operator builder needs the pole data itself, not just coefficients.
hadamard::RationalGerm load_rational(const std::string& spec) {
    if (is_json_path(spec)) return hadamard::rational_germ_from_json(slurp(spec));
    if (spec == "example1")
        return hadamard::RationalGerm(Complex(1.0, 0.0), {Complex(0.0, 0.0), Complex(1.0, 0.0)});
    if (spec == "example2")
        return hadamard::RationalGerm(Complex(1.0, 0.0),
                                      {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0)});
    if (spec.rfind("pole", 0) == 0) {
        // reuse the catalog parser for validation, then rebuild the pole data
        hadamard::parse_germ_spec(spec);
        double re = 1.0, im = 0.0, j = 1.0;
        std::size_t colon = spec.find(':');
        if (colon != std::string::npos) {
            std::istringstream rest(spec.substr(colon + 1));
            std::string item;
            while (std::getline(rest, item, ',')) {
                std::size_t eq = item.find('=');
                std::string key = item.substr(0, eq);
                double value = std::stod(item.substr(eq + 1));
                if (key == "omega") re = value;
                if (key == "im") im = value;
                if (key == "j") j = value;
            }
        }
        std::vector<Complex> a(std::size_t(j), Complex(0.0, 0.0));
        a.back() = Complex(1.0, 0.0);
        return hadamard::RationalGerm(Complex(re, im), std::move(a));
    }
    throw hadamard::InvalidParameters(
        "cli: germ spec '" + spec +
        "' is not a single-pole rational germ (use example1, example2, pole:..., or a JSON file)");
}

std::string csv_coefficient_table(const std::vector<std::pair<std::string, const TruncatedGerm*>>&
                                      columns) {
    std::ostringstream out;
    out << "n";
    for (const auto& [name, germ] : columns) out << ',' << name << "_re," << name << "_im";
    out << '\n';
    std::size_t rows = columns.front().second->order();
    for (const auto& [name, germ] : columns) rows = std::min(rows, germ->order());
    for (std::size_t n = 0; n < rows; ++n) {
        out << n;
        for (const auto& [name, germ] : columns) {
            Complex z = (*germ)[n];
            out << ',' << fmt(z.real()) << ',' << fmt(z.imag());
        }
        out << '\n';
    }
    return out.str();
}

int cmd_inverse(const Options& opt) {
    hadamard::CatalogGerm germ = load_germ(opt.germ);
    TruncatedGerm f = germ.coefficients(opt.order);
    TruncatedGerm g = hadamard_inverse(f);
    if (opt.format == "csv") {
        emit(opt, csv_coefficient_table({{"f", &f}, {"g", &g}}));
    } else {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "inverse";
        doc["germ"] = germ.name();
        doc["order"] = opt.order;
        doc["coefficients"] = germ_json(f);
        doc["inverse"] = germ_json(g);
        emit(opt, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_ode(const Options& opt) {
    hadamard::RationalGerm f = load_rational(opt.germ);
    hadamard::EulerOperator op = hadamard::build_euler_operator(f);
    double max_residual = 0.0;
    for (double r : hadamard::verify_recurrence(op, f, opt.order))
        max_residual = std::max(max_residual, r);
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "k,c_re,c_im\n";
        for (std::size_t k = 0; k < op.coeffs.size(); ++k)
            out << k << ',' << fmt(op.coeffs[k].real()) << ',' << fmt(op.coeffs[k].imag()) << '\n';
        emit(opt, out.str());
    } else {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "ode";
        doc["operator"] = json::parse(hadamard::euler_operator_to_json(op));
        doc["singular_points"] = cpx_list(hadamard::singular_points(op));
        doc["max_residual"] = max_residual;
        doc["verified_to"] = opt.order;
        emit(opt, doc.dump(2) + "\n");
    }
    return max_residual <= opt.tol ? 0 : 3;
}

int cmd_hadamard(const Options& opt) {
    hadamard::CatalogGerm left = load_germ(opt.germ);
    hadamard::CatalogGerm right = load_germ(opt.with);
    TruncatedGerm f = left.coefficients(opt.order);
    TruncatedGerm g = right.coefficients(opt.order);
    TruncatedGerm fg = hadamard_product(f, g);
    if (opt.format == "csv") {
        emit(opt, csv_coefficient_table({{"f", &f}, {"g", &g}, {"fg", &fg}}));
    } else {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "hadamard";
        doc["left"] = left.name();
        doc["right"] = right.name();
        doc["order"] = opt.order;
        doc["product"] = germ_json(fg);
        emit(opt, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_scan(const Options& opt) {
    hadamard::CatalogGerm germ = load_germ(opt.germ);
    TruncatedGerm f = germ.coefficients(opt.order);
    hadamard::ScanConfig config;
    config.match_tol = opt.tol > 0 ? opt.tol : config.match_tol;
    hadamard::ScanReport report = hadamard::scan_report(f, config);
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "re,im,order_l,order_m,spurious\n";
        for (const hadamard::PoleSweep& sweep : report.sweeps)
            for (const hadamard::PadePole& pole : sweep.poles)
                out << fmt(pole.location.real()) << ',' << fmt(pole.location.imag()) << ','
                    << sweep.order_l << ',' << sweep.order_m << ',' << (pole.spurious ? 1 : 0)
                    << '\n';
        emit(opt, out.str());
    } else {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "scan";
        doc["germ"] = germ.name();
        doc["order"] = opt.order;
        doc["ratio_ok"] = report.ratio_ok;
        if (report.ratio_ok) {
            doc["ratio_location"] = cpx(report.ratio.locations.front());
            doc["ratio_residual"] = report.ratio.residuals.front();
            doc["ratio_oscillatory"] = report.ratio.oscillatory;
        } else {
            doc["ratio_error"] = report.ratio_error;
        }
        doc["radius"] = std::isfinite(report.radius) ? json(report.radius) : json("infinite");
        json stable = json::array();
        for (const hadamard::StablePole& pole : report.stable_poles) {
            json entry;
            entry["location"] = cpx(pole.location);
            entry["certificate"] = pole.certificate;
            entry["order"] = {pole.order_l, pole.order_m};
            stable.push_back(entry);
        }
        doc["stable_poles"] = stable;
        if (report.boundary_error.empty())
            doc["boundary_score"] = report.boundary_score;
        else
            doc["boundary_error"] = report.boundary_error;
        json sweeps = json::array();
        for (const hadamard::PoleSweep& sweep : report.sweeps) {
            json entry;
            entry["order"] = {sweep.order_l, sweep.order_m};
            if (!sweep.error.empty()) entry["error"] = sweep.error;
            entry["poles"] = json::array();
            for (const hadamard::PadePole& pole : sweep.poles) {
                json p;
                p["location"] = cpx(pole.location);
                p["certificate"] = pole.certificate;
                p["spurious"] = pole.spurious;
                entry["poles"].push_back(p);
            }
            sweeps.push_back(entry);
        }
        doc["sweeps"] = sweeps;
        doc["note"] = report.note;
        emit(opt, doc.dump(2) + "\n");
    }
    return 0;
}

// exp(z) log(1-z) / (2 pi i) as a coefficient list; entire-times-log model.
TruncatedGerm exp_log_coefficients(std::size_t order) {
    std::vector<Complex> e(order), l(order, Complex(0.0, 0.0));
    double fact = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        e[n] = Complex(1.0 / fact, 0.0);
        fact *= double(n + 1);
    }
    for (std::size_t n = 1; n < order; ++n) l[n] = Complex(-1.0 / double(n), 0.0);
    TruncatedGerm prod = cauchy_product(TruncatedGerm(std::move(e)), TruncatedGerm(std::move(l)));
    std::vector<Complex> out(order);
    const Complex scale(0.0, -1.0 / (2.0 * std::numbers::pi));
    for (std::size_t n = 0; n < order; ++n) out[n] = prod[n] * scale;
    return TruncatedGerm(std::move(out));
}

int cmd_probe(const Options& opt) {
    std::vector<hadamard::ProbeSample> samples;
    hadamard::ProbeConfig config;
    if (opt.pair == "example1") {
        // F and G multiply to the termwise unit, evaluated in closed form
        samples = hadamard::limit_probe(hadamard::delta_evaluator(), Complex(1.0, 0.0), opt.power,
                                        config);
    } else if (opt.pair == "entire-log") {
        // entire-times-log factor against a pure log factor, partial sums
        std::size_t order = std::max<std::size_t>(opt.order, 4096);
        TruncatedGerm f = exp_log_coefficients(order);
        std::vector<Complex> g(order, Complex(0.0, 0.0));
        for (std::size_t n = 1; n < order; ++n)
            g[n] = Complex(0.0, -1.0 / (2.0 * std::numbers::pi * double(n)));
        TruncatedGerm product = hadamard_product(f, TruncatedGerm(std::move(g)));
        samples = hadamard::limit_probe(product, Complex(1.0, 0.0), opt.power, config);
    } else {
        throw hadamard::InvalidParameters("cli: unknown probe pair '" + opt.pair +
                                          "' (use example1 or entire-log)");
    }
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "offset,re,im,scaled_abs\n";
        for (const hadamard::ProbeSample& s : samples)
            out << fmt(s.offset) << ',' << fmt(s.value.real()) << ',' << fmt(s.value.imag()) << ','
                << fmt(std::abs(s.scaled)) << '\n';
        emit(opt, out.str());
    } else {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "probe";
        doc["pair"] = opt.pair;
        doc["power"] = opt.power;
        json rows = json::array();
        for (const hadamard::ProbeSample& s : samples) {
            json row;
            row["offset"] = s.offset;
            row["value"] = cpx(s.value);
            row["scaled"] = cpx(s.scaled);
            rows.push_back(row);
        }
        doc["samples"] = rows;
        emit(opt, doc.dump(2) + "\n");
    }
    return 0;
}

hadamard::EntireFunctionJet parse_f1(const std::string& spec) {
    if (spec == "zero") return hadamard::EntireFunctionJet(TruncatedGerm({Complex(0.0, 0.0)}));
    if (spec.rfind("const:", 0) == 0)
        return hadamard::EntireFunctionJet(
            TruncatedGerm({Complex(std::stod(spec.substr(6)), 0.0)}));
    if (spec.rfind("poly:", 0) == 0) {
        std::vector<Complex> coeffs;
        std::istringstream rest(spec.substr(5));
        std::string item;
        while (std::getline(rest, item, ',')) coeffs.emplace_back(std::stod(item), 0.0);
        if (coeffs.empty())
            throw hadamard::InvalidParameters("cli: poly f1 spec needs at least one coefficient");
        return hadamard::EntireFunctionJet(TruncatedGerm(std::move(coeffs)));
    }
    throw hadamard::InvalidParameters("cli: unknown f1 spec '" + spec +
                                      "' (use zero, const:<v>, or poly:<c0,c1,...>)");
}

int cmd_volterra(const Options& opt) {
    const Complex a(opt.a_re, opt.a_im);
    const Complex b(opt.b_re, opt.b_im);
    const Complex omega(opt.omega_re, opt.omega_im);
    hadamard::EntireFunctionJet f1 = parse_f1(opt.f1);
    TruncatedGerm g1 = hadamard::solve_g1(a, b, f1, omega, opt.order);

    std::vector<Complex> zeros(opt.order, Complex(0.0, 0.0));
    std::vector<Complex> f1_padded(opt.order);
    for (std::size_t n = 0; n < opt.order; ++n) f1_padded[n] = f1.coeff(n);
    hadamard::SingularJet f_jet(omega, a, TruncatedGerm(std::move(f1_padded)),
                                TruncatedGerm(zeros));
    hadamard::SingularJet g_jet(omega, b, g1, TruncatedGerm(zeros));
    hadamard::ConditionReport report =
        hadamard::check_inverse_conditions(f_jet, g_jet, f1, opt.tol);

    if (opt.format == "csv") {
        emit(opt, csv_coefficient_table({{"g1", &g1}}));
    } else {
        json doc;
        doc["schema"] = 1;
        doc["command"] = "volterra";
        doc["A"] = cpx(a);
        doc["B"] = cpx(b);
        doc["omega"] = cpx(omega);
        doc["order"] = opt.order;
        doc["g1"] = germ_json(g1);
        doc["unit_residual"] = report.unit_residual;
        doc["variation_residual"] = report.variation_residual;
        doc["passed"] = report.passed;
        emit(opt, doc.dump(2) + "\n");
    }
    return report.variation_residual <= opt.tol ? 0 : 3;
}

int cmd_demo(const Options& opt) {
    std::ostringstream out;
    out << "termwise inverse walkthrough\n";

    TruncatedGerm ex1 = hadamard::pole_coefficients(Complex(1.0, 0.0), 2, 8);
    TruncatedGerm ex1_inv = hadamard_inverse(ex1);
    out << "\n(n+1) and its termwise inverse, first 8 coefficients:\n";
    for (std::size_t n = 0; n < 8; ++n)
        out << "  n=" << n << "  f=" << fmt(ex1[n].real()) << "  g=" << fmt(ex1_inv[n].real())
            << '\n';

    hadamard::RationalGerm ex2(Complex(1.0, 0.0),
                               {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0)});
    hadamard::EulerOperator op = hadamard::build_euler_operator(ex2);
    double residual = 0.0;
    for (double r : hadamard::verify_recurrence(op, ex2, 1000)) residual = std::max(residual, r);
    out << "\noperator for the double-plus-triple pole germ: c = [";
    for (std::size_t k = 0; k < op.coeffs.size(); ++k)
        out << (k ? ", " : "") << fmt(op.coeffs[k].real());
    out << "], recurrence residual to n<1000: " << fmt(residual) << '\n';

    TruncatedGerm ladder = hadamard::geometric_ladder_inverse(256);
    hadamard::ScanReport report = hadamard::scan_report(ladder, {});
    out << "\nladder inverse stable poles:";
    for (const hadamard::StablePole& pole : report.stable_poles)
        out << " (" << fmt(pole.location.real()) << ", " << fmt(pole.location.imag()) << ")";
    out << "\n";

    std::mt19937_64 rng(opt.seed);
    auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Complex> fc(32), gc(32);
        for (std::size_t n = 0; n < 32; ++n) {
            fc[n] = Complex(unit() * 2 - 1, unit() * 2 - 1);
            gc[n] = Complex(unit() * 2 - 1, unit() * 2 - 1);
        }
        TruncatedGerm f(fc), g(gc);
        std::size_t s = 1 + std::size_t(rng() % 3);
        TruncatedGerm lhs = hadamard_product(hadamard::derivative(f, s), g);
        TruncatedGerm rhs =
            hadamard_product(hadamard::coefficient_shift(f, s), hadamard::theta_power(g, s));
        for (std::size_t n = 0; n < lhs.order(); ++n)
            worst = std::max(worst, std::abs(lhs[n] - rhs[n]));
    }
    out << "\nderivative-shift identity on 5 random germs (seed " << opt.seed
        << "): worst deviation " << fmt(worst) << '\n';
    emit(opt, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Termwise (Hadamard) product and inverse calculus for holomorphic germs"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&opt](CLI::App* cmd, std::size_t default_order) {
        opt.order = default_order;
        cmd->add_option("-g,--germ", opt.germ, "catalog germ spec or rational-germ JSON path");
        cmd->add_option("-N,--order", opt.order, "truncation order")
            ->check(CLI::Range(std::size_t(8), std::size_t(1) << 20));
        cmd->add_option("--tol", opt.tol, "acceptance tolerance");
        cmd->add_option("--seed", opt.seed, "seed for randomized demos");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--format", opt.format, "artifact format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* inverse = app.add_subcommand("inverse", "termwise inverse coefficient table");
    add_common(inverse, 64);

    CLI::App* ode = app.add_subcommand("ode", "operator annihilating the termwise inverse");
    add_common(ode, 1000);

    CLI::App* had = app.add_subcommand("hadamard", "termwise product of two germs");
    add_common(had, 64);
    had->add_option("--with", opt.with, "second germ spec");

    CLI::App* scan = app.add_subcommand("scan", "singularity scan from coefficients");
    add_common(scan, 256);
    scan->get_option("--tol")->description("stable-pole match tolerance");

    CLI::App* probe = app.add_subcommand("probe", "scaled radial limit probe");
    add_common(probe, 4096);
    probe->add_option("--pair", opt.pair, "probe pair: example1 or entire-log");
    probe->add_option("--power", opt.power, "scaling power (zeta-1)^power")
        ->check(CLI::Range(1, 8));

    CLI::App* volterra = app.add_subcommand("volterra", "triangular solve for the variation jet");
    add_common(volterra, 32);
    volterra->add_option("--A", opt.a_re, "residue of F (real part)");
    volterra->add_option("--A-im", opt.a_im, "residue of F (imaginary part)");
    volterra->add_option("--B", opt.b_re, "residue of G (real part)");
    volterra->add_option("--B-im", opt.b_im, "residue of G (imaginary part)");
    volterra->add_option("--omega", opt.omega_re, "singular point (real part)");
    volterra->add_option("--omega-im", opt.omega_im, "singular point (imaginary part)");
    volterra->add_option("--f1", opt.f1, "entire factor jet: zero, const:<v>, poly:<c0,c1,...>");

    CLI::App* demo = app.add_subcommand("demo", "deterministic end-to-end walkthrough");
    add_common(demo, 64);

    // defaults differ per command, so reapply after parsing fills options
    opt.order = 0;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    auto order_default = [&opt](std::size_t fallback) {
        if (opt.order == 0) opt.order = fallback;
    };

    try {
        if (app.got_subcommand(inverse)) {
            order_default(64);
            return cmd_inverse(opt);
        }
        if (app.got_subcommand(ode)) {
            order_default(1000);
            return cmd_ode(opt);
        }
        if (app.got_subcommand(had)) {
            order_default(64);
            return cmd_hadamard(opt);
        }
        if (app.got_subcommand(scan)) {
            order_default(256);
            opt.tol = scan->get_option("--tol")->count() ? opt.tol : 0.01;
            return cmd_scan(opt);
        }
        if (app.got_subcommand(probe)) {
            order_default(4096);
            return cmd_probe(opt);
        }
        if (app.got_subcommand(volterra)) {
            order_default(32);
            return cmd_volterra(opt);
        }
        if (app.got_subcommand(demo)) {
            order_default(64);
            return cmd_demo(opt);
        }
    } catch (const hadamard::PreconditionError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const hadamard::NumericalError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }
    return 0;
}
