#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "pvkit/expr.hpp"
#include "pvkit/pv.hpp"

namespace pvkit::transforms {

using Complex = std::complex<double>;

/// Uniform real sample grid; sample k sits at x_start + k*dx.
struct GridSignal {
    double x_start = 0.0;
    double dx = 1.0;
    std::vector<double> values;
};

std::string to_csv(const GridSignal& grid);  // columns: w,value
std::string to_json(const GridSignal& grid); // {x_start, dx, values}

struct ConjugatePairReport {
    std::vector<double> sample_points;
    double residual_v = 0.0; // max |v(w) - H{u}(w)|
    double residual_u = 0.0; // max |u(w) + H{v}(w)|
    bool degenerate = false; // empty sample list
};

/// Hilbert transform at one point: (1/pi) * PV integral of u(x)/(w - x).
/// u must be real-valued on the line (checked on samples). Throws
/// NonConvergenceError when the PV machinery cannot reach tolerance.
double hilbert_point(const expr::ExprAst& u, double w, const pv::PVConfig& cfg);

/// Pointwise transform on a uniform grid; any point failure aborts with
/// the failing abscissa reported.
GridSignal hilbert_grid(const expr::ExprAst& u, double w_start, double dw, int count,
                        const pv::PVConfig& cfg);

/// Checks the harmonic-conjugate identities v = H{u} and u = -H{v} on the
/// given sample points. The analytic extension hypothesis is the caller's.
ConjugatePairReport conjugate_pair_check(const expr::ExprAst& u, const expr::ExprAst& v,
                                         std::span<const double> sample_points,
                                         const pv::PVConfig& cfg);

enum class FourierMode { Analytic, Numeric };

struct FourierResult {
    Complex value{0.0, 0.0};
    bool degenerate = false; // omega == 0: the PV value 0 is returned, flagged
};

/// PV Fourier transform of 1/x at frequency omega: -i*pi*sign(omega).
/// Numeric mode evaluates PV integral of exp(-i*omega*x)/x instead.
FourierResult fourier_one_over_x(double omega, FourierMode mode, const pv::PVConfig& cfg);

/// Integral of sin(x)/x over the whole line, computed as the imaginary
/// part of the PV integral of exp(ix)/x.
double dirichlet_integral(const pv::PVConfig& cfg);

} // namespace pvkit::transforms
