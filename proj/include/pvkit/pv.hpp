#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "pvkit/expr.hpp"
#include "pvkit/path.hpp"
#include "pvkit/quad.hpp"

namespace pvkit::pv {

using Complex = std::complex<double>;

enum class TailStrategy {
    ExponentialBound,        // tail bounded, bound charged to the error estimate
    OscillatoryAcceleration, // between-zeros integrals + Euler transformation
    PowerEstimate,           // c/s^p fit, integrated; low confidence
};

const char* to_string(TailStrategy s);

struct PVConfig {
    double truncation_R = 50.0; // end of the directly integrated core interval
    TailStrategy tail_strategy = TailStrategy::OscillatoryAcceleration;
    int acceleration_terms = 24; // >= 4
    quad::QuadratureConfig quad_cfg{};
    double target_tol = 1e-8; // convergence is error_estimate <= target_tol
};

/// Full diagnostic report for one principal-value evaluation.
struct PVReport {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    Complex core_value{0.0, 0.0};
    Complex tail_value{0.0, 0.0};
    TailStrategy tail_strategy = TailStrategy::OscillatoryAcceleration;
    int intervals_used = 0; // between-zeros intervals consumed by the tail
    bool converged = false;
    int core_panels = 0;
    std::vector<std::string> notes;
};

/// PV integral of f(x)/(x - w) over the real line, computed with no
/// knowledge of any closed form. The singularity is removed analytically
/// by folding: PV = integral over s in (0, inf) of (f(w+s) - f(w-s))/s,
/// which extends continuously to s = 0 for f smooth at w (value 2 f'(w));
/// the open quadrature rule never samples s = 0. The core (0, R] is
/// integrated directly and the tail handled by cfg.tail_strategy.
quad::IntegralResult pv_cauchy(const expr::ExprAst& f, double w, const PVConfig& cfg);
PVReport pv_cauchy_report(const expr::ExprAst& f, double w, const PVConfig& cfg);

enum class HalfPlaneDecay { Upper, Lower, None, Unknown };
const char* to_string(HalfPlaneDecay c);

struct DecayWitnessRow {
    double radius = 0.0;
    double upper_max = 0.0; // max |f| sampled on the upper semicircle
    double lower_max = 0.0;
};

struct DecayClass {
    HalfPlaneDecay classification = HalfPlaneDecay::Unknown;
    std::vector<DecayWitnessRow> witness;
};

/// Samples |f| on expanding semicircles (angle endpoints excluded) and
/// classifies half-plane decay. Evaluation overflow is recorded as +inf
/// in the witness, never a failure. Requires >= 3 increasing radii and
/// samples_per_arc >= 16.
DecayClass classify_decay(const expr::ExprAst& f, std::span<const double> radii,
                          int samples_per_arc);

std::vector<double> default_decay_radii(); // {8, 16, 32, 64}
inline constexpr int kDefaultDecaySamples = 16;

/// The closed-form value i*pi*f(w) (upper decay) or -i*pi*f(w) (lower
/// decay). Throws Error when the decay hypothesis is not established.
Complex analytic_pv(const expr::ExprAst& f, double w, const DecayClass& decay);

/// |contour integral of f dz| on a closed contour; zero up to quadrature
/// error when f is analytic on and inside. Throws std::invalid_argument
/// for non-closed contours.
double verify_cauchy_goursat(const expr::ExprAst& f, const path::ParametricPath& contour,
                             const quad::QuadratureConfig& cfg);

/// Picks a tail strategy by probing the folded integrand beyond the
/// truncation radius: oscillation -> acceleration, otherwise whichever of
/// the exponential or power-law models fits the sampled decay better.
TailStrategy choose_tail_strategy(const expr::ExprAst& f, double w, const PVConfig& cfg);

} // namespace pvkit::pv
