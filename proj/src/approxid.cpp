#include "pvkit/approxid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pvkit/io.hpp"

namespace pvkit::approxid {

Complex arc_identity_value(const expr::ExprAst& f, double w, double theta1, double theta2) {
    Complex fw = expr::eval(f, Complex(w, 0.0));
    return Complex(0.0, theta2 - theta1) * fw;
}

Extrapolation richardson_extrapolate(std::span<const double> radii,
                                     std::span<const Complex> values) {
    if (radii.size() != values.size()) throw std::invalid_argument("radii/values size mismatch");
    if (radii.empty()) throw std::invalid_argument("extrapolation needs at least one sample");
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] > radii[i + 1]) || !(radii[i + 1] > 0.0))
            throw std::invalid_argument("radii must be strictly decreasing and positive");

    std::vector<double> rs(radii.begin(), radii.end());
    std::vector<Complex> vs(values.begin(), values.end());
    double scale = std::max(1.0, std::abs(vs.back()));
    Complex previous_order = vs.back();
    int orders = 0;

    // Each stage detects the leading error order p from the three smallest
    // radii and eliminates r^p pairwise, shrinking the table by one.
    while (vs.size() >= 3) {
        size_t n = vs.size();
        double d1 = std::abs(vs[n - 2] - vs[n - 3]);
        double d2 = std::abs(vs[n - 1] - vs[n - 2]);
        if (d2 <= 1e-14 * scale || d1 <= d2) break; // noise floor or no visible order
        double rho = rs[n - 3] / rs[n - 2];
        if (!(rho > 1.0)) break;
        double p_est = std::log(d1 / d2) / std::log(rho);
        if (!std::isfinite(p_est)) break;
        int p = std::clamp(static_cast<int>(std::lround(p_est)), 1, 16);

        std::vector<double> next_rs(n - 1);
        std::vector<Complex> next_vs(n - 1);
        for (size_t k = 0; k + 1 < n; ++k) {
            double factor = std::pow(rs[k] / rs[k + 1], p);
            next_vs[k] = (factor * vs[k + 1] - vs[k]) / (factor - 1.0);
            next_rs[k] = rs[k + 1];
        }
        previous_order = vs.back();
        rs = std::move(next_rs);
        vs = std::move(next_vs);
        ++orders;
    }

    // With only two samples no order can be detected; a single first-order
    // step is the best available.
    if (orders == 0 && vs.size() == 2) {
        double factor = rs[0] / rs[1];
        Complex first = (factor * vs[1] - vs[0]) / (factor - 1.0);
        previous_order = vs[1];
        vs = {first};
        orders = 1;
    }

    Extrapolation out;
    out.value = vs.back();
    out.orders_eliminated = orders;
    if (orders > 0) {
        out.error = std::abs(vs.back() - previous_order);
    } else if (vs.size() >= 2) {
        // nothing eliminated (noise floor or no visible order): the spread
        // of the raw estimates is the honest uncertainty
        out.error = std::abs(vs[vs.size() - 1] - vs[vs.size() - 2]);
    } else {
        out.error = 0.0;
    }
    return out;
}

ArcLimitReport arc_limit_estimate(const expr::ExprAst& f, double w, double theta1, double theta2,
                                  std::span<const double> radii,
                                  const quad::QuadratureConfig& cfg) {
    if (radii.empty()) throw std::invalid_argument("at least one radius is required");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw std::invalid_argument("radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw std::invalid_argument("radii must be strictly decreasing");
    }

    ArcLimitReport report;
    report.closed_form = arc_identity_value(f, w, theta1, theta2);

    // integrand f(z)/(z - w)
    expr::ExprAst integrand = expr::build::div(
        f, expr::build::sub(expr::build::variable(), expr::build::literal(Complex(w, 0.0))));

    bool all_converged = true;
    std::vector<double> rs;
    std::vector<Complex> vals;
    for (double r : radii) {
        path::ArcPath arc(Complex(w, 0.0), r, theta1, theta2);
        quad::IntegralResult res = quad::integrate_line(integrand, arc, cfg);
        all_converged = all_converged && res.converged;
        ArcEstimate est;
        est.radius = r;
        est.value = res.value;
        est.deviation = std::abs(res.value - report.closed_form);
        report.estimates.push_back(est);
        rs.push_back(r);
        vals.push_back(res.value);
    }

    Extrapolation ex = richardson_extrapolate(rs, vals);
    report.extrapolated = ex.value;
    report.extrapolation_error = ex.error;
    report.quadrature_converged = all_converged;

    // Monotone up to the quadrature noise floor.
    double floor = 100.0 * cfg.abs_tol;
    for (size_t i = 0; i + 1 < report.estimates.size(); ++i) {
        double a = report.estimates[i].deviation;
        double b = report.estimates[i + 1].deviation;
        if (!(b < a || (a < floor && b < floor))) {
            report.deviations_monotone = false;
            break;
        }
    }

    report.low_confidence =
        !all_converged ||
        report.extrapolation_error > 1e-6 * std::max(1.0, std::abs(report.extrapolated));
    return report;
}

std::string convergence_table(const ArcLimitReport& report) {
    std::string out = "         r                      re                      im           deviation\n";
    char line[160];
    for (const ArcEstimate& e : report.estimates) {
        std::snprintf(line, sizeof(line), "%10.6f  %22.15e  %22.15e  %16.9e\n", e.radius,
                      e.value.real(), e.value.imag(), e.deviation);
        out += line;
    }
    return out;
}

std::string convergence_table_csv(const ArcLimitReport& report) {
    std::string out = "r,re,im,abs_deviation\n";
    for (const ArcEstimate& e : report.estimates) {
        out += io::format_double(e.radius);
        out += ',';
        out += io::format_double(e.value.real());
        out += ',';
        out += io::format_double(e.value.imag());
        out += ',';
        out += io::format_double(e.deviation);
        out += '\n';
    }
    return out;
}

} // namespace pvkit::approxid
