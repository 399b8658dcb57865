#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pvkit/expr.hpp"
#include "pvkit/path.hpp"

namespace pvkit::quad {

using Complex = std::complex<double>;

struct QuadratureConfig {
    int nodes_per_panel = 16; // Gauss-Legendre order, >= 2
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

struct IntegralResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    int panels_used = 0;
    bool converged = false; // implies error_estimate <= max(abs_tol, rel_tol*|value|)
};

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre_rule(int n);

/// Adaptive panel integration of a complex-valued function of a real
/// parameter over [a, b] (b < a integrates backwards). The open
/// Gauss rule never evaluates at panel endpoints; the error estimate
/// compares each panel against its two halves.
IntegralResult integrate_parameter(const std::function<Complex(double)>& g, double a, double b,
                                   const QuadratureConfig& cfg);

/// Line integral of f(z) dz along a path, pulled back to the parameter
/// interval as f(gamma(t)) * gamma'(t) dt. Composite paths integrate
/// piecewise; the result is the exact sum over pieces.
IntegralResult integrate_line(const expr::ExprAst& f, const path::ParametricPath& p,
                              const QuadratureConfig& cfg);

/// Integral of f(x) dx over a real interval, as a complex value.
IntegralResult integrate_real_interval(const expr::ExprAst& f, double a, double b,
                                       const QuadratureConfig& cfg);

} // namespace pvkit::quad
