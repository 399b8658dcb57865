#include "pvkit/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "pvkit/io.hpp"

namespace pvkit::transforms {

std::string to_csv(const GridSignal& grid) {
    std::string out = "w,value\n";
    for (size_t k = 0; k < grid.values.size(); ++k) {
        out += io::format_double(grid.x_start + static_cast<double>(k) * grid.dx);
        out += ',';
        out += io::format_double(grid.values[k]);
        out += '\n';
    }
    return out;
}

std::string to_json(const GridSignal& grid) {
    io::JsonValue v = io::JsonValue::object();
    v.add("x_start", io::JsonValue::number(grid.x_start));
    v.add("dx", io::JsonValue::number(grid.dx));
    io::JsonValue values = io::JsonValue::array();
    for (double x : grid.values) values.push(io::JsonValue::number(x));
    v.add("values", std::move(values));
    return v.dump();
}

namespace {

// The transform applies to real boundary functions; a handful of samples
// around w guards against accidentally complex integrands.
void check_real_on_samples(const expr::ExprAst& u, double w) {
    static constexpr double kOffsets[] = {0.0, 0.5,  -0.5, 1.0,  -1.0, 2.0, -2.0,
                                          3.7, -3.7, 5.0,  -5.0, 8.0,  -8.0};
    for (double d : kOffsets) {
        try {
            Complex v = expr::eval(u, Complex(w + d, 0.0));
            if (std::abs(v.imag()) > 1e-12)
                throw Error("integrand is not real-valued on the real axis (at x = " +
                            io::format_double(w + d) + ")");
        } catch (const EvalError&) {
            // isolated evaluation failures (poles) are the PV engine's business
        }
    }
}

} // namespace

double hilbert_point(const expr::ExprAst& u, double w, const pv::PVConfig& cfg) {
    check_real_on_samples(u, w);
    pv::PVReport rep = pv::pv_cauchy_report(u, w, cfg);
    if (!rep.converged) {
        std::string msg = "Hilbert transform did not converge at w = " + io::format_double(w);
        for (const std::string& n : rep.notes) msg += "; " + n;
        throw NonConvergenceError(msg);
    }
    // H{u}(w) = (1/pi) PV int u/(w-x) = -(1/pi) PV int u/(x-w); the
    // imaginary residue of the PV value is numerical noise for real u.
    Complex h = -rep.value / M_PI;
    return h.real();
}

GridSignal hilbert_grid(const expr::ExprAst& u, double w_start, double dw, int count,
                        const pv::PVConfig& cfg) {
    if (count < 1) throw std::invalid_argument("grid needs count >= 1");
    if (!(dw > 0.0)) throw std::invalid_argument("grid needs dw > 0");
    GridSignal grid;
    grid.x_start = w_start;
    grid.dx = dw;
    grid.values.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        double w = w_start + k * dw;
        try {
            grid.values.push_back(hilbert_point(u, w, cfg));
        } catch (const NonConvergenceError& e) {
            throw NonConvergenceError("grid point w = " + io::format_double(w) + ": " + e.what());
        } catch (const EvalError& e) {
            throw EvalError(e.kind(), e.span_begin(), e.span_end(),
                            "grid point w = " + io::format_double(w) + ": " + e.what());
        }
    }
    return grid;
}

ConjugatePairReport conjugate_pair_check(const expr::ExprAst& u, const expr::ExprAst& v,
                                         std::span<const double> sample_points,
                                         const pv::PVConfig& cfg) {
    ConjugatePairReport report;
    report.sample_points.assign(sample_points.begin(), sample_points.end());
    if (sample_points.empty()) {
        report.degenerate = true;
        return report;
    }
    for (double w : sample_points) {
        double hu = hilbert_point(u, w, cfg);
        double hv = hilbert_point(v, w, cfg);
        double vw = expr::eval(v, Complex(w, 0.0)).real();
        double uw = expr::eval(u, Complex(w, 0.0)).real();
        report.residual_v = std::max(report.residual_v, std::abs(vw - hu));
        report.residual_u = std::max(report.residual_u, std::abs(uw + hv));
    }
    return report;
}

FourierResult fourier_one_over_x(double omega, FourierMode mode, const pv::PVConfig& cfg) {
    if (omega == 0.0) {
        // PV integral of 1/x vanishes by parity; the distributional value
        // at zero frequency is out of scope, so flag rather than fail.
        return FourierResult{Complex(0.0, 0.0), true};
    }
    if (mode == FourierMode::Analytic) {
        double sign = omega > 0.0 ? 1.0 : -1.0;
        return FourierResult{Complex(0.0, -M_PI * sign), false};
    }
    // numeric: PV integral of exp(-i*omega*x)/(x - 0)
    expr::ExprAst integrand = expr::build::call(
        expr::Func::Exp,
        expr::build::mul(expr::build::literal(Complex(0.0, -omega)), expr::build::variable()));
    quad::IntegralResult r = pv::pv_cauchy(integrand, 0.0, cfg);
    if (!r.converged)
        throw NonConvergenceError("numeric Fourier transform did not converge at omega = " +
                                  io::format_double(omega));
    return FourierResult{r.value, false};
}

double dirichlet_integral(const pv::PVConfig& cfg) {
    expr::ExprAst f = expr::build::call(
        expr::Func::Exp, expr::build::mul(expr::build::literal(Complex(0.0, 1.0)),
                                          expr::build::variable()));
    quad::IntegralResult r = pv::pv_cauchy(f, 0.0, cfg);
    if (!r.converged) throw NonConvergenceError("Dirichlet integral did not converge");
    return r.value.imag();
}

} // namespace pvkit::transforms
