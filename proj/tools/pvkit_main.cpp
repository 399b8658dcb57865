// pvkit command-line frontend. Every computation is a subcommand emitting
// one machine-readable envelope (JSON by default, CSV on request).
//
// Exit codes: 0 success, 2 usage error, 3 expression parse error,
// 4 non-convergence, 5 evaluation error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvkit/approxid.hpp"
#include "pvkit/errors.hpp"
#include "pvkit/expr.hpp"
#include "pvkit/io.hpp"
#include "pvkit/path.hpp"
#include "pvkit/pv.hpp"
#include "pvkit/quad.hpp"
#include "pvkit/transforms.hpp"

namespace {

using pvkit::io::JsonValue;

struct CommonOpts {
    std::string format = "json";
    double tol = 1e-8;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", opts.tol, "Target tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--out", opts.out, "Write the result to FILE instead of stdout");
}

int emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.out.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file '" << opts.out << "'\n";
        return 5;
    }
    file << payload;
    return 0;
}

std::string envelope(const std::string& command, JsonValue inputs, JsonValue result,
                     JsonValue diagnostics) {
    JsonValue env = JsonValue::object();
    env.add("command", JsonValue::string(command));
    env.add("inputs", std::move(inputs));
    env.add("result", std::move(result));
    env.add("diagnostics", std::move(diagnostics));
    env.add("schema_version", JsonValue::string("1"));
    return env.dump();
}

pvkit::quad::QuadratureConfig quad_config(double tol) {
    pvkit::quad::QuadratureConfig cfg;
    cfg.abs_tol = std::min(1e-10, tol / 100.0);
    cfg.rel_tol = cfg.abs_tol;
    return cfg;
}

pvkit::pv::PVConfig pv_config(const CommonOpts& opts, double truncation, const std::string& tail,
                              const pvkit::expr::ExprAst& f, double w) {
    pvkit::pv::PVConfig cfg;
    cfg.truncation_R = truncation;
    cfg.target_tol = opts.tol;
    cfg.quad_cfg = quad_config(opts.tol);
    if (tail == "osc") {
        cfg.tail_strategy = pvkit::pv::TailStrategy::OscillatoryAcceleration;
    } else if (tail == "exp") {
        cfg.tail_strategy = pvkit::pv::TailStrategy::ExponentialBound;
    } else if (tail == "pow") {
        cfg.tail_strategy = pvkit::pv::TailStrategy::PowerEstimate;
    } else { // auto
        cfg.tail_strategy = pvkit::pv::choose_tail_strategy(f, w, cfg);
    }
    return cfg;
}

JsonValue notes_json(const std::vector<std::string>& notes) {
    JsonValue arr = JsonValue::array();
    for (const std::string& n : notes) arr.push(JsonValue::string(n));
    return arr;
}

// ---------------------------------------------------------------------- arc

struct ArcArgs {
    CommonOpts common;
    std::string expr;
    double w = 0.0;
    double theta1 = 0.0;
    double theta2 = M_PI;
    std::vector<double> radii = {0.4, 0.2, 0.1, 0.05, 0.025};
};

int run_arc(const ArcArgs& args) {
    pvkit::expr::ExprAst f = pvkit::expr::parse(args.expr);
    pvkit::approxid::ArcLimitReport report = pvkit::approxid::arc_limit_estimate(
        f, args.w, args.theta1, args.theta2, args.radii, quad_config(args.common.tol));

    if (args.common.format == "csv")
        return emit(args.common, pvkit::approxid::convergence_table_csv(report));

    JsonValue inputs = JsonValue::object();
    inputs.add("expr", JsonValue::string(args.expr));
    inputs.add("w", JsonValue::number(args.w));
    inputs.add("theta1", JsonValue::number(args.theta1));
    inputs.add("theta2", JsonValue::number(args.theta2));
    JsonValue radii = JsonValue::array();
    for (double r : args.radii) radii.push(JsonValue::number(r));
    inputs.add("radii", std::move(radii));

    JsonValue estimates = JsonValue::array();
    for (const auto& e : report.estimates) {
        JsonValue row = JsonValue::object();
        row.add("r", JsonValue::number(e.radius));
        row.add("re", JsonValue::number(e.value.real()));
        row.add("im", JsonValue::number(e.value.imag()));
        row.add("abs_deviation", JsonValue::number(e.deviation));
        estimates.push(std::move(row));
    }
    JsonValue result = JsonValue::object();
    result.add("closed_form", pvkit::io::complex_json(report.closed_form.real(),
                                                      report.closed_form.imag()));
    result.add("estimates", std::move(estimates));
    result.add("extrapolated", pvkit::io::complex_json(report.extrapolated.real(),
                                                       report.extrapolated.imag()));
    result.add("extrapolation_error", JsonValue::number(report.extrapolation_error));

    JsonValue diag = JsonValue::object();
    diag.add("converged", JsonValue::boolean(report.quadrature_converged));
    diag.add("deviations_monotone", JsonValue::boolean(report.deviations_monotone));
    diag.add("low_confidence", JsonValue::boolean(report.low_confidence));

    int rc = emit(args.common, envelope("arc", std::move(inputs), std::move(result), std::move(diag)));
    return rc != 0 ? rc : (report.quadrature_converged ? 0 : 4);
}

// ----------------------------------------------------------------------- pv

struct PvArgs {
    CommonOpts common;
    std::string expr;
    double w = 0.0;
    double truncation = 50.0;
    std::string tail = "auto";
};

JsonValue pv_diagnostics(const pvkit::pv::PVReport& report) {
    JsonValue diag = JsonValue::object();
    diag.add("value_re", JsonValue::number(report.value.real()));
    diag.add("value_im", JsonValue::number(report.value.imag()));
    diag.add("error_estimate", JsonValue::number(report.error_estimate));
    diag.add("core_value", pvkit::io::complex_json(report.core_value.real(),
                                                   report.core_value.imag()));
    diag.add("tail_value", pvkit::io::complex_json(report.tail_value.real(),
                                                   report.tail_value.imag()));
    diag.add("tail_strategy", JsonValue::string(pvkit::pv::to_string(report.tail_strategy)));
    diag.add("intervals_used", JsonValue::integer(report.intervals_used));
    diag.add("converged", JsonValue::boolean(report.converged));
    diag.add("notes", notes_json(report.notes));
    return diag;
}

int run_pv(const PvArgs& args) {
    pvkit::expr::ExprAst f = pvkit::expr::parse(args.expr);
    pvkit::pv::PVConfig cfg = pv_config(args.common, args.truncation, args.tail, f, args.w);
    pvkit::pv::PVReport report = pvkit::pv::pv_cauchy_report(f, args.w, cfg);

    if (!report.converged) {
        std::cerr << "error: principal value did not converge\n"
                  << pv_diagnostics(report).dump();
        return 4;
    }

    if (args.common.format == "csv") {
        std::string csv = "value_re,value_im,error_estimate,converged\n";
        csv += pvkit::io::format_double(report.value.real());
        csv += ',';
        csv += pvkit::io::format_double(report.value.imag());
        csv += ',';
        csv += pvkit::io::format_double(report.error_estimate);
        csv += ',';
        csv += report.converged ? "true" : "false";
        csv += '\n';
        return emit(args.common, csv);
    }

    JsonValue inputs = JsonValue::object();
    inputs.add("expr", JsonValue::string(args.expr));
    inputs.add("w", JsonValue::number(args.w));
    inputs.add("truncation", JsonValue::number(args.truncation));
    inputs.add("tail", JsonValue::string(args.tail));

    JsonValue result = pvkit::io::complex_json(report.value.real(), report.value.imag());
    return emit(args.common,
                envelope("pv", std::move(inputs), std::move(result), pv_diagnostics(report)));
}

// ------------------------------------------------------------------ hilbert

struct HilbertArgs {
    CommonOpts common;
    std::string expr;
    double w = 0.0;
    bool has_w = false;
    std::string grid;
};

int run_hilbert(const HilbertArgs& args) {
    pvkit::expr::ExprAst u = pvkit::expr::parse(args.expr);

    if (args.has_w) {
        pvkit::pv::PVConfig cfg = pv_config(args.common, 50.0, "auto", u, args.w);
        double value = pvkit::transforms::hilbert_point(u, args.w, cfg);
        if (args.common.format == "csv") {
            std::string csv = "w,value\n";
            csv += pvkit::io::format_double(args.w);
            csv += ',';
            csv += pvkit::io::format_double(value);
            csv += '\n';
            return emit(args.common, csv);
        }
        JsonValue inputs = JsonValue::object();
        inputs.add("expr", JsonValue::string(args.expr));
        inputs.add("w", JsonValue::number(args.w));
        JsonValue result = JsonValue::object();
        result.add("w", JsonValue::number(args.w));
        result.add("value", JsonValue::number(value));
        JsonValue diag = JsonValue::object();
        diag.add("converged", JsonValue::boolean(true));
        return emit(args.common,
                    envelope("hilbert", std::move(inputs), std::move(result), std::move(diag)));
    }

    // --grid START:STEP:COUNT
    double start = 0.0, step = 0.0;
    int count = 0;
    {
        size_t c1 = args.grid.find(':');
        size_t c2 = c1 == std::string::npos ? std::string::npos : args.grid.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw CLI::ValidationError("--grid expects START:STEP:COUNT");
        try {
            start = std::stod(args.grid.substr(0, c1));
            step = std::stod(args.grid.substr(c1 + 1, c2 - c1 - 1));
            count = std::stoi(args.grid.substr(c2 + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--grid expects numeric START:STEP:COUNT");
        }
        if (count < 1 || !(step > 0.0))
            throw CLI::ValidationError("--grid needs STEP > 0 and COUNT >= 1");
    }

    // Resolve the automatic tail choice across the grid: points where the
    // folded integrand vanishes by parity would otherwise decide for the
    // whole grid. Oscillation anywhere wins; zero-amplitude points take
    // the negligible-tail path regardless of strategy.
    pvkit::pv::PVConfig cfg = pv_config(args.common, 50.0, "osc", u, start);
    {
        pvkit::pv::TailStrategy vote = pvkit::pv::TailStrategy::ExponentialBound;
        bool oscillatory = false;
        const int probes = std::min(count, 16);
        for (int k = 0; k < probes && !oscillatory; ++k) {
            pvkit::pv::TailStrategy s =
                pvkit::pv::choose_tail_strategy(u, start + k * step, cfg);
            if (s == pvkit::pv::TailStrategy::OscillatoryAcceleration) oscillatory = true;
            if (s == pvkit::pv::TailStrategy::PowerEstimate)
                vote = pvkit::pv::TailStrategy::PowerEstimate;
        }
        cfg.tail_strategy =
            oscillatory ? pvkit::pv::TailStrategy::OscillatoryAcceleration : vote;
    }
    pvkit::transforms::GridSignal grid =
        pvkit::transforms::hilbert_grid(u, start, step, count, cfg);

    if (args.common.format == "csv") return emit(args.common, pvkit::transforms::to_csv(grid));

    JsonValue inputs = JsonValue::object();
    inputs.add("expr", JsonValue::string(args.expr));
    inputs.add("grid", JsonValue::string(args.grid));
    JsonValue result = JsonValue::object();
    result.add("x_start", JsonValue::number(grid.x_start));
    result.add("dx", JsonValue::number(grid.dx));
    JsonValue values = JsonValue::array();
    for (double v : grid.values) values.push(JsonValue::number(v));
    result.add("values", std::move(values));
    JsonValue diag = JsonValue::object();
    diag.add("converged", JsonValue::boolean(true));
    diag.add("points", JsonValue::integer(count));
    return emit(args.common,
                envelope("hilbert", std::move(inputs), std::move(result), std::move(diag)));
}

// ---------------------------------------------------------------- fourier1x

struct FourierArgs {
    CommonOpts common;
    double omega = 0.0;
    bool numeric = false;
};

int run_fourier(const FourierArgs& args) {
    pvkit::pv::PVConfig cfg;
    cfg.target_tol = args.common.tol;
    cfg.quad_cfg = quad_config(args.common.tol);
    pvkit::transforms::FourierResult r = pvkit::transforms::fourier_one_over_x(
        args.omega,
        args.numeric ? pvkit::transforms::FourierMode::Numeric
                     : pvkit::transforms::FourierMode::Analytic,
        cfg);

    if (args.common.format == "csv") {
        std::string csv = "omega,re,im\n";
        csv += pvkit::io::format_double(args.omega);
        csv += ',';
        csv += pvkit::io::format_double(r.value.real());
        csv += ',';
        csv += pvkit::io::format_double(r.value.imag());
        csv += '\n';
        return emit(args.common, csv);
    }

    JsonValue inputs = JsonValue::object();
    inputs.add("omega", JsonValue::number(args.omega));
    inputs.add("mode", JsonValue::string(args.numeric ? "numeric" : "analytic"));
    JsonValue result = pvkit::io::complex_json(r.value.real(), r.value.imag());
    JsonValue diag = JsonValue::object();
    diag.add("degenerate", JsonValue::boolean(r.degenerate));
    diag.add("converged", JsonValue::boolean(true));
    return emit(args.common,
                envelope("fourier1x", std::move(inputs), std::move(result), std::move(diag)));
}

// ------------------------------------------------------------------ goursat

struct GoursatArgs {
    CommonOpts common;
    std::string expr;
    std::string contour = "upper";
    double w = 0.0;
    double r = 0.5;
    double R = 3.0;
};

int run_goursat(const GoursatArgs& args) {
    pvkit::expr::ExprAst f = pvkit::expr::parse(args.expr);
    pvkit::path::ParametricPath contour = [&]() -> pvkit::path::ParametricPath {
        if (args.contour == "upper")
            return pvkit::path::upper_indented_contour(args.w, args.r, args.R);
        if (args.contour == "lower")
            return pvkit::path::lower_indented_contour(args.w, args.r, args.R);
        return pvkit::path::full_circle({args.w, 0.0}, args.r);
    }();

    pvkit::quad::IntegralResult integral =
        pvkit::quad::integrate_line(f, contour, quad_config(args.common.tol));
    double residual = std::abs(integral.value);

    if (args.common.format == "csv") {
        std::string csv = "residual\n";
        csv += pvkit::io::format_double(residual);
        csv += '\n';
        int rc = emit(args.common, csv);
        return rc != 0 ? rc : (integral.converged ? 0 : 4);
    }

    JsonValue inputs = JsonValue::object();
    inputs.add("expr", JsonValue::string(args.expr));
    inputs.add("contour", JsonValue::string(args.contour));
    inputs.add("w", JsonValue::number(args.w));
    inputs.add("r", JsonValue::number(args.r));
    inputs.add("R", JsonValue::number(args.R));
    JsonValue result = JsonValue::object();
    result.add("residual", JsonValue::number(residual));
    JsonValue diag = JsonValue::object();
    diag.add("error_estimate", JsonValue::number(integral.error_estimate));
    diag.add("panels_used", JsonValue::integer(integral.panels_used));
    diag.add("converged", JsonValue::boolean(integral.converged));
    int rc = emit(args.common,
                  envelope("goursat", std::move(inputs), std::move(result), std::move(diag)));
    return rc != 0 ? rc : (integral.converged ? 0 : 4);
}

// ---------------------------------------------------------------- dirichlet

struct DirichletArgs {
    CommonOpts common;
    double truncation = 50.0;
};

int run_dirichlet(const DirichletArgs& args) {
    pvkit::pv::PVConfig cfg;
    cfg.truncation_R = args.truncation;
    cfg.target_tol = args.common.tol;
    cfg.quad_cfg = quad_config(args.common.tol);
    double value = pvkit::transforms::dirichlet_integral(cfg);

    if (args.common.format == "csv") {
        std::string csv = "value\n";
        csv += pvkit::io::format_double(value);
        csv += '\n';
        return emit(args.common, csv);
    }

    JsonValue inputs = JsonValue::object();
    inputs.add("truncation", JsonValue::number(args.truncation));
    JsonValue result = JsonValue::object();
    result.add("value", JsonValue::number(value));
    JsonValue diag = JsonValue::object();
    diag.add("converged", JsonValue::boolean(true));
    return emit(args.common,
                envelope("dirichlet", std::move(inputs), std::move(result), std::move(diag)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pvkit: principal-value Cauchy integrals, Hilbert transforms, and contour checks"};
    app.require_subcommand(1);

    ArcArgs arc;
    CLI::App* arc_cmd = app.add_subcommand("arc", "Shrinking-arc limit of f(z)/(z-w)");
    arc_cmd->add_option("--expr", arc.expr, "Integrand f")->required();
    arc_cmd->add_option("--w", arc.w, "Arc center on the real axis")->required();
    arc_cmd->add_option("--theta1", arc.theta1, "Start angle (radians)")->required();
    arc_cmd->add_option("--theta2", arc.theta2, "End angle (radians)")->required();
    arc_cmd->add_option("--radii", arc.radii, "Comma-separated arc radii, decreasing")
        ->delimiter(',');
    add_common(arc_cmd, arc.common);

    PvArgs pv;
    CLI::App* pv_cmd = app.add_subcommand("pv", "PV integral of f(x)/(x-w) over the real line");
    pv_cmd->add_option("--expr", pv.expr, "Integrand f")->required();
    pv_cmd->add_option("--w", pv.w, "Pole location on the real axis")->required();
    pv_cmd->add_option("--truncation", pv.truncation, "Core truncation radius R")
        ->check(CLI::PositiveNumber);
    pv_cmd->add_option("--tail", pv.tail, "Tail strategy: auto, osc, exp, pow")
        ->check(CLI::IsMember({"auto", "osc", "exp", "pow"}));
    add_common(pv_cmd, pv.common);

    HilbertArgs hilbert;
    CLI::App* hil_cmd = app.add_subcommand("hilbert", "Hilbert transform of a real function");
    hil_cmd->add_option("--expr", hilbert.expr, "Real function u(x)")->required();
    CLI::Option* w_opt = hil_cmd->add_option("--w", hilbert.w, "Single evaluation point");
    CLI::Option* grid_opt =
        hil_cmd->add_option("--grid", hilbert.grid, "Uniform grid START:STEP:COUNT");
    w_opt->excludes(grid_opt);
    add_common(hil_cmd, hilbert.common);

    FourierArgs fourier;
    CLI::App* fx_cmd = app.add_subcommand("fourier1x", "PV Fourier transform of 1/x");
    fx_cmd->add_option("--omega", fourier.omega, "Frequency")->required();
    fx_cmd->add_flag("--numeric", fourier.numeric, "Evaluate the PV integral numerically");
    add_common(fx_cmd, fourier.common);

    GoursatArgs goursat;
    CLI::App* go_cmd = app.add_subcommand("goursat", "Residual of a closed-contour integral");
    go_cmd->add_option("--expr", goursat.expr, "Integrand f")->required();
    go_cmd->add_option("--contour", goursat.contour, "Contour shape: upper, lower, circle")
        ->check(CLI::IsMember({"upper", "lower", "circle"}));
    go_cmd->add_option("--w", goursat.w, "Contour center on the real axis")->required();
    go_cmd->add_option("--r", goursat.r, "Inner (or circle) radius")->check(CLI::PositiveNumber);
    go_cmd->add_option("--R", goursat.R, "Outer radius")->check(CLI::PositiveNumber);
    add_common(go_cmd, goursat.common);

    DirichletArgs dirichlet;
    CLI::App* di_cmd = app.add_subcommand("dirichlet", "Integral of sin(x)/x over the line");
    di_cmd->add_option("--truncation", dirichlet.truncation, "Core truncation radius R")
        ->check(CLI::PositiveNumber);
    add_common(di_cmd, dirichlet.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (arc_cmd->parsed()) return run_arc(arc);
        if (pv_cmd->parsed()) return run_pv(pv);
        if (hil_cmd->parsed()) {
            hilbert.has_w = w_opt->count() > 0;
            if (!hilbert.has_w && grid_opt->count() == 0) {
                std::cerr << "error: hilbert requires either --w or --grid\n";
                return 2;
            }
            return run_hilbert(hilbert);
        }
        if (fx_cmd->parsed()) return run_fourier(fourier);
        if (go_cmd->parsed()) return run_goursat(goursat);
        if (di_cmd->parsed()) return run_dirichlet(dirichlet);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const pvkit::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const pvkit::NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const pvkit::EvalError& e) {
        std::cerr << "error: evaluation failed: " << e.what() << '\n';
        return 5;
    } catch (const std::invalid_argument& e) {
        // bad flag values (radii ordering, r >= R, ...) are usage errors
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    }
}
