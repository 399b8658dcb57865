#include "pvkit/pv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace pvkit::pv {

const char* to_string(TailStrategy s) {
    switch (s) {
        case TailStrategy::ExponentialBound: return "exponential_bound";
        case TailStrategy::OscillatoryAcceleration: return "oscillatory_acceleration";
        case TailStrategy::PowerEstimate: return "power_estimate";
    }
    return "?";
}

const char* to_string(HalfPlaneDecay c) {
    switch (c) {
        case HalfPlaneDecay::Upper: return "upper";
        case HalfPlaneDecay::Lower: return "lower";
        case HalfPlaneDecay::None: return "none";
        case HalfPlaneDecay::Unknown: return "unknown";
    }
    return "?";
}

namespace {

constexpr Complex kImagUnit{0.0, 1.0};

// Folded PV integrand (f(w+s) - f(w-s))/s; continuous at s = 0 for f
// smooth at w, but never evaluated there (open rule).
class Folded {
public:
    Folded(const expr::ExprAst& f, double w) : f_(f), w_(w) {}
    Complex operator()(double s) const {
        return (expr::eval(f_, Complex(w_ + s, 0.0)) - expr::eval(f_, Complex(w_ - s, 0.0))) / s;
    }

private:
    const expr::ExprAst& f_;
    double w_;
};

struct TailScan {
    std::vector<double> s;
    std::vector<Complex> g;
    double amplitude = 0.0;
    bool use_imag = false;
    int sign_changes = 0;
};

TailScan scan_tail(const Folded& g, double begin, double length, int samples) {
    TailScan scan;
    scan.s.resize(samples);
    scan.g.resize(samples);
    double max_re = 0.0, max_im = 0.0;
    for (int i = 0; i < samples; ++i) {
        double s = begin + length * (i + 0.5) / samples;
        Complex v = g(s);
        scan.s[i] = s;
        scan.g[i] = v;
        max_re = std::max(max_re, std::abs(v.real()));
        max_im = std::max(max_im, std::abs(v.imag()));
        scan.amplitude = std::max(scan.amplitude, std::abs(v));
    }
    scan.use_imag = max_im > max_re;
    for (int i = 0; i + 1 < samples; ++i) {
        double a = scan.use_imag ? scan.g[i].imag() : scan.g[i].real();
        double b = scan.use_imag ? scan.g[i + 1].imag() : scan.g[i + 1].real();
        if (a * b < 0.0) ++scan.sign_changes;
    }
    return scan;
}

double component(const Folded& g, double s, bool use_imag) {
    Complex v = g(s);
    return use_imag ? v.imag() : v.real();
}

// Bisection on a bracketing interval of the dominant component.
double refine_zero(const Folded& g, double lo, double hi, bool use_imag) {
    double flo = component(g, lo, use_imag);
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(hi))) return mid;
        double fm = component(g, mid, use_imag);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Zeros of the dominant oscillating component beyond `begin`, in order.
// Returns an empty vector when no oscillation is detected.
std::vector<double> locate_zeros(const Folded& g, double begin, size_t count) {
    std::vector<double> zeros;
    double length = std::max(begin, 1.0);
    bool use_imag = false;
    for (int attempt = 0; attempt < 4 && zeros.size() < 2; ++attempt) {
        TailScan scan = scan_tail(g, begin, length, 4096);
        use_imag = scan.use_imag;
        zeros.clear();
        for (size_t i = 0; i + 1 < scan.s.size(); ++i) {
            double a = use_imag ? scan.g[i].imag() : scan.g[i].real();
            double b = use_imag ? scan.g[i + 1].imag() : scan.g[i + 1].real();
            if (a == 0.0) {
                zeros.push_back(scan.s[i]);
            } else if (a * b < 0.0) {
                zeros.push_back(refine_zero(g, scan.s[i], scan.s[i + 1], use_imag));
            }
            if (zeros.size() >= count) break;
        }
        length *= 2.0;
    }
    if (zeros.size() < 2) return {};

    // March ahead one oscillation at a time using the observed spacing.
    while (zeros.size() < count) {
        size_t n = zeros.size();
        double period = (zeros[n - 1] - zeros[0]) / static_cast<double>(n - 1);
        double lo = zeros.back() + 0.25 * period;
        double hi = zeros.back() + 1.75 * period;
        const int probes = 96;
        double prev_s = lo;
        double prev_c = component(g, lo, use_imag);
        bool found = false;
        for (int i = 1; i <= probes; ++i) {
            double s = lo + (hi - lo) * i / probes;
            double c = component(g, s, use_imag);
            if (prev_c == 0.0) {
                zeros.push_back(prev_s);
                found = true;
                break;
            }
            if (prev_c * c < 0.0) {
                zeros.push_back(refine_zero(g, prev_s, s, use_imag));
                found = true;
                break;
            }
            prev_s = s;
            prev_c = c;
        }
        if (!found) return {}; // oscillation died out or is irregular
    }
    return zeros;
}

struct EulerSum {
    Complex value{0.0, 0.0};
    double error = 0.0;
};

// Repeated averaging of partial sums; geometric convergence for
// alternating-sign term sequences.
EulerSum euler_transform(const std::vector<Complex>& terms) {
    EulerSum out;
    if (terms.empty()) return out;
    std::vector<Complex> sums(terms.size());
    std::partial_sum(terms.begin(), terms.end(), sums.begin());
    Complex top = sums[0];
    out.error = std::abs(terms.back());
    while (sums.size() > 1) {
        for (size_t k = 0; k + 1 < sums.size(); ++k) sums[k] = 0.5 * (sums[k] + sums[k + 1]);
        sums.pop_back();
        out.error = std::abs(sums[0] - top);
        top = sums[0];
    }
    out.value = top;
    return out;
}

struct TailOutcome {
    Complex value{0.0, 0.0};
    double error = 0.0;
    int intervals = 0;
    bool ok = false;
    std::vector<std::string> notes;
};

TailOutcome oscillatory_tail(const Folded& g, const PVConfig& cfg) {
    TailOutcome out;
    const double R = cfg.truncation_R;
    const size_t zeros_needed = static_cast<size_t>(cfg.acceleration_terms) + 1;

    std::vector<double> zeros = locate_zeros(g, R, zeros_needed);
    if (zeros.size() < zeros_needed) {
        out.notes.push_back("no regular oscillation detected beyond truncation radius");
        return out;
    }

    quad::IntegralResult head = quad::integrate_parameter(
        [&g](double s) { return g(s); }, R, zeros.front(), cfg.quad_cfg);
    bool quad_ok = head.converged;
    double quad_err = head.error_estimate;

    std::vector<Complex> terms(zeros.size() - 1);
    for (size_t k = 0; k + 1 < zeros.size(); ++k) {
        quad::IntegralResult seg = quad::integrate_parameter(
            [&g](double s) { return g(s); }, zeros[k], zeros[k + 1], cfg.quad_cfg);
        quad_ok = quad_ok && seg.converged;
        quad_err += seg.error_estimate;
        terms[k] = seg.value;
    }

    EulerSum accelerated = euler_transform(terms);
    out.value = head.value + accelerated.value;
    out.error = quad_err + accelerated.error;
    out.intervals = static_cast<int>(terms.size());
    out.ok = quad_ok;
    if (!quad_ok) out.notes.push_back("quadrature on a tail interval did not converge");
    return out;
}

TailOutcome exponential_bound_tail(const Folded& g, const PVConfig& cfg) {
    TailOutcome out;
    const double R = cfg.truncation_R;
    const double s0 = R, s1 = 1.25 * R, s2 = 1.5 * R;
    double a0 = std::abs(g(s0)), a1 = std::abs(g(s1)), a2 = std::abs(g(s2));
    if (a0 == 0.0 && a1 == 0.0 && a2 == 0.0) {
        out.ok = true;
        return out;
    }
    double tiny = std::numeric_limits<double>::min();
    // least-squares slope of ln|g| against s
    double xs[3] = {s0, s1, s2};
    double ys[3] = {std::log(std::max(a0, tiny)), std::log(std::max(a1, tiny)),
                    std::log(std::max(a2, tiny))};
    double xm = (xs[0] + xs[1] + xs[2]) / 3.0, ym = (ys[0] + ys[1] + ys[2]) / 3.0;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < 3; ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ys[i] - ym);
    }
    double slope = sxy / sxx;
    if (!(slope < 0.0)) {
        out.notes.push_back("tail is not decaying; exponential bound unavailable");
        out.error = a0 * R; // what one more truncation length could contribute
        return out;
    }
    double decay_length = -1.0 / slope;
    out.error = a0 * decay_length; // bound charged to the error, not the value
    out.ok = true;
    return out;
}

TailOutcome power_estimate_tail(const Folded& g, const PVConfig& cfg) {
    TailOutcome out;
    out.notes.push_back("power-law tail fit (low confidence)");
    const double R = cfg.truncation_R;
    const int n = 4;
    double xs[n], ys[n];
    Complex gR = g(R);
    double tiny = std::numeric_limits<double>::min();
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
        double s = R * std::pow(1.25, i);
        double a = std::abs(g(s));
        all_zero = all_zero && a == 0.0;
        xs[i] = std::log(s);
        ys[i] = std::log(std::max(a, tiny));
    }
    if (all_zero) {
        out.ok = true;
        return out;
    }
    double xm = 0.0, ym = 0.0;
    for (int i = 0; i < n; ++i) {
        xm += xs[i];
        ym += ys[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ys[i] - ym);
    }
    double p = -sxy / sxx;
    double log_c = ym + p * xm;
    double residual = 0.0;
    for (int i = 0; i < n; ++i)
        residual = std::max(residual, std::abs(log_c - p * xs[i] - ys[i]));

    if (!(p > 1.05)) {
        out.notes.push_back("fitted tail exponent p <= 1; integral tail diverges or decays too slowly");
        out.error = std::abs(gR) * R;
        return out;
    }
    double magnitude = std::exp(log_c) * std::pow(R, 1.0 - p) / (p - 1.0);
    Complex phase = gR / std::abs(gR);
    out.value = phase * magnitude;
    // fit scatter plus a floor for model bias
    out.error = magnitude * std::min(1.0, 5.0 * (std::exp(residual) - 1.0) + 0.02);
    out.ok = true;
    return out;
}

} // namespace

PVReport pv_cauchy_report(const expr::ExprAst& f, double w, const PVConfig& cfg) {
    if (!(cfg.truncation_R > 0.0)) throw std::invalid_argument("truncation_R must be positive");
    if (cfg.acceleration_terms < 4)
        throw std::invalid_argument("acceleration_terms must be >= 4");
    if (!(cfg.target_tol > 0.0)) throw std::invalid_argument("target_tol must be positive");

    Folded g(f, w);
    PVReport report;
    report.tail_strategy = cfg.tail_strategy;

    quad::IntegralResult core =
        quad::integrate_parameter([&g](double s) { return g(s); }, 0.0, cfg.truncation_R, cfg.quad_cfg);
    report.core_value = core.value;
    report.core_panels = core.panels_used;

    // Scale of the folded integrand on the core, for the negligible-tail test.
    double core_scale = 0.0;
    for (int j = 1; j <= 64; ++j)
        core_scale = std::max(core_scale, std::abs(g(cfg.truncation_R * j / 64.0)));

    TailScan probe = scan_tail(g, cfg.truncation_R, cfg.truncation_R, 512);
    double floor = 1e-12 * std::max(1.0, core_scale);

    TailOutcome tail;
    if (probe.amplitude <= floor) {
        tail.ok = true;
        tail.error = probe.amplitude * cfg.truncation_R;
        tail.notes.push_back("tail negligible beyond truncation radius");
    } else {
        switch (cfg.tail_strategy) {
            case TailStrategy::OscillatoryAcceleration:
                tail = oscillatory_tail(g, cfg);
                if (!tail.ok && tail.intervals == 0) {
                    // keep the value untouched; fall back to bound-style error accounting
                    TailOutcome bound = exponential_bound_tail(g, cfg);
                    bound.notes.insert(bound.notes.begin(), tail.notes.begin(), tail.notes.end());
                    tail = bound;
                }
                break;
            case TailStrategy::ExponentialBound:
                tail = exponential_bound_tail(g, cfg);
                break;
            case TailStrategy::PowerEstimate:
                tail = power_estimate_tail(g, cfg);
                break;
        }
    }

    report.tail_value = tail.value;
    report.intervals_used = tail.intervals;
    report.value = core.value + tail.value;
    report.error_estimate = core.error_estimate + tail.error;
    report.notes = std::move(tail.notes);
    report.converged = core.converged && tail.ok && report.error_estimate <= cfg.target_tol;
    if (!core.converged) report.notes.push_back("core quadrature did not converge");
    return report;
}

quad::IntegralResult pv_cauchy(const expr::ExprAst& f, double w, const PVConfig& cfg) {
    PVReport report = pv_cauchy_report(f, w, cfg);
    quad::IntegralResult out;
    out.value = report.value;
    out.error_estimate = report.error_estimate;
    out.panels_used = report.core_panels + report.intervals_used;
    out.converged = report.converged;
    return out;
}

std::vector<double> default_decay_radii() { return {8.0, 16.0, 32.0, 64.0}; }

DecayClass classify_decay(const expr::ExprAst& f, std::span<const double> radii,
                          int samples_per_arc) {
    if (radii.size() < 3) throw std::invalid_argument("classification needs at least 3 radii");
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] > 0.0) || !(radii[i] < radii[i + 1]))
            throw std::invalid_argument("radii must be positive and increasing");
    if (samples_per_arc < 16) throw std::invalid_argument("samples_per_arc must be >= 16");

    DecayClass result;
    auto sample_max = [&](double R, bool upper) {
        double maxv = 0.0;
        for (int j = 1; j <= samples_per_arc; ++j) {
            // endpoints excluded: the hypothesis concerns the open arc
            double t = M_PI * j / (samples_per_arc + 1) + (upper ? 0.0 : M_PI);
            double m;
            try {
                m = std::abs(expr::eval(f, R * std::exp(kImagUnit * t)));
            } catch (const EvalError&) {
                m = std::numeric_limits<double>::infinity();
            }
            maxv = std::max(maxv, m);
        }
        return maxv;
    };

    for (double R : radii)
        result.witness.push_back({R, sample_max(R, true), sample_max(R, false)});

    auto strictly_decreasing = [&](bool upper) {
        for (size_t i = 0; i + 1 < result.witness.size(); ++i) {
            double a = upper ? result.witness[i].upper_max : result.witness[i].lower_max;
            double b = upper ? result.witness[i + 1].upper_max : result.witness[i + 1].lower_max;
            if (!(b < a)) return false;
        }
        return true;
    };
    constexpr double kDecayedThreshold = 1e-3;
    bool up_dec = strictly_decreasing(true);
    bool lo_dec = strictly_decreasing(false);
    bool up_ok = up_dec && result.witness.back().upper_max < kDecayedThreshold;
    bool lo_ok = lo_dec && result.witness.back().lower_max < kDecayedThreshold;

    if (up_ok)
        result.classification = HalfPlaneDecay::Upper;
    else if (lo_ok)
        result.classification = HalfPlaneDecay::Lower;
    else if (!up_dec && !lo_dec)
        result.classification = HalfPlaneDecay::None;
    else
        result.classification = HalfPlaneDecay::Unknown;
    return result;
}

Complex analytic_pv(const expr::ExprAst& f, double w, const DecayClass& decay) {
    switch (decay.classification) {
        case HalfPlaneDecay::Upper:
            return Complex(0.0, M_PI) * expr::eval(f, Complex(w, 0.0));
        case HalfPlaneDecay::Lower:
            return Complex(0.0, -M_PI) * expr::eval(f, Complex(w, 0.0));
        default:
            throw Error(std::string("decay hypothesis violated: classification is '") +
                        to_string(decay.classification) +
                        "', the closed form needs half-plane decay");
    }
}

double verify_cauchy_goursat(const expr::ExprAst& f, const path::ParametricPath& contour,
                             const quad::QuadratureConfig& cfg) {
    if (!path::is_closed(contour))
        throw std::invalid_argument("contour is not closed");
    quad::IntegralResult r = quad::integrate_line(f, contour, cfg);
    return std::abs(r.value);
}

TailStrategy choose_tail_strategy(const expr::ExprAst& f, double w, const PVConfig& cfg) {
    Folded g(f, w);
    const double R = cfg.truncation_R;
    TailScan probe = scan_tail(g, R, R, 2048);
    if (probe.amplitude == 0.0) return TailStrategy::ExponentialBound;
    if (probe.sign_changes >= 2) return TailStrategy::OscillatoryAcceleration;

    // no oscillation: compare exponential vs power-law decay models
    const int n = 4;
    double tiny = std::numeric_limits<double>::min();
    double s[n], y[n];
    for (int i = 0; i < n; ++i) {
        s[i] = R * std::pow(1.25, i);
        y[i] = std::log(std::max(std::abs(g(s[i])), tiny));
    }
    auto fit_residual = [&](bool log_abscissa) {
        double xs[n];
        for (int i = 0; i < n; ++i) xs[i] = log_abscissa ? std::log(s[i]) : s[i];
        double xm = 0.0, ym = 0.0;
        for (int i = 0; i < n; ++i) {
            xm += xs[i];
            ym += y[i];
        }
        xm /= n;
        ym /= n;
        double sxx = 0.0, sxy = 0.0;
        for (int i = 0; i < n; ++i) {
            sxx += (xs[i] - xm) * (xs[i] - xm);
            sxy += (xs[i] - xm) * (y[i] - ym);
        }
        double slope = sxy / sxx;
        double res = 0.0;
        for (int i = 0; i < n; ++i)
            res = std::max(res, std::abs(ym + slope * (xs[i] - xm) - y[i]));
        return res;
    };
    double exp_res = fit_residual(false);
    double pow_res = fit_residual(true);
    return exp_res <= pow_res ? TailStrategy::ExponentialBound : TailStrategy::PowerEstimate;
}

} // namespace pvkit::pv
