#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "pvkit/expr.hpp"
#include "pvkit/quad.hpp"

namespace pvkit::approxid {

using Complex = std::complex<double>;

struct ArcEstimate {
    double radius = 0.0;
    Complex value{0.0, 0.0};
    double deviation = 0.0; // |value - closed_form|
};

struct ArcLimitReport {
    Complex closed_form{0.0, 0.0}; // i * (theta2 - theta1) * f(w)
    std::vector<ArcEstimate> estimates; // radii strictly decreasing
    Complex extrapolated{0.0, 0.0};
    double extrapolation_error = 0.0; // difference between successive extrapolation orders
    bool deviations_monotone = true;
    bool low_confidence = false;
    bool quadrature_converged = true; // every per-radius arc integral converged
};

/// The shrinking-arc limit of f(z)/(z-w) around w: i*(theta2-theta1)*f(w).
/// One evaluation, no quadrature.
Complex arc_identity_value(const expr::ExprAst& f, double w, double theta1, double theta2);

/// Integrates f(z)/(z-w) over arcs of the given radii and extrapolates the
/// r -> 0 limit. Radii must be strictly decreasing and positive.
ArcLimitReport arc_limit_estimate(const expr::ExprAst& f, double w, double theta1, double theta2,
                                  std::span<const double> radii,
                                  const quad::QuadratureConfig& cfg);

/// Fixed-column text rendering of (r, Re, Im, deviation), header included.
std::string convergence_table(const ArcLimitReport& report);

/// CSV rendering, columns r,re,im,abs_deviation.
std::string convergence_table_csv(const ArcLimitReport& report);

struct Extrapolation {
    Complex value{0.0, 0.0};
    double error = 0.0;
    int orders_eliminated = 0;
};

/// Richardson extrapolation to r = 0 for values sampled at strictly
/// decreasing radii. The error expansion is assumed to hold in integer
/// powers of r; the leading order of each stage is detected from
/// successive differences (geometric radius schedules work best), so
/// expansions with missing powers are handled at full accuracy.
Extrapolation richardson_extrapolate(std::span<const double> radii,
                                     std::span<const Complex> values);

} // namespace pvkit::approxid
