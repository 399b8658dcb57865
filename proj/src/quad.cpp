#include "pvkit/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace pvkit::quad {

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from Chebyshev-like initial guesses.
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[k] = -x;
        rule.weights[k] = w;
        rule.nodes[n - 1 - k] = x;
        rule.weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre_rule(int n) {
    if (n < 2) throw std::invalid_argument("Gauss-Legendre order must be >= 2");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

namespace {

Complex gauss_panel(const std::function<Complex(double)>& g, double a, double b,
                    const GaussLegendreRule& rule) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    Complex sum{0.0, 0.0};
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * g(mid + half * rule.nodes[i]);
    return half * sum;
}

struct Panel {
    double a, b;
    Complex left, right; // Gauss values on the two halves
    Complex whole;       // Gauss value on [a, b]
    Complex value() const { return left + right; }
    double error() const { return std::abs(whole - (left + right)); }
};

Panel make_panel(const std::function<Complex(double)>& g, double a, double b,
                 const GaussLegendreRule& rule, Complex whole) {
    double m = 0.5 * (a + b);
    return Panel{a, b, gauss_panel(g, a, m, rule), gauss_panel(g, m, b, rule), whole};
}

void validate(const QuadratureConfig& cfg) {
    if (cfg.nodes_per_panel < 2) throw std::invalid_argument("nodes_per_panel must be >= 2");
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (cfg.max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
}

} // namespace

IntegralResult integrate_parameter(const std::function<Complex(double)>& g, double a, double b,
                                   const QuadratureConfig& cfg) {
    validate(cfg);
    if (a == b) return IntegralResult{Complex{0.0, 0.0}, 0.0, 0, true};
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    const GaussLegendreRule& rule = gauss_legendre_rule(cfg.nodes_per_panel);

    std::vector<Panel> panels;
    panels.push_back(make_panel(g, a, b, rule, gauss_panel(g, a, b, rule)));

    int splits = 0;
    while (true) {
        Complex total{0.0, 0.0};
        double err = 0.0;
        for (const Panel& p : panels) {
            total += p.value();
            err += p.error();
        }
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        bool converged = err <= tol;
        if (converged || splits >= cfg.max_subdivisions)
            return IntegralResult{sign * total, err, static_cast<int>(panels.size()), converged};

        // Split the worst panel; ties resolve to the leftmost for
        // deterministic results.
        size_t worst = 0;
        double worst_err = -1.0;
        for (size_t i = 0; i < panels.size(); ++i) {
            double e = panels[i].error();
            if (e > worst_err) {
                worst_err = e;
                worst = i;
            }
        }
        Panel old = panels[worst];
        double m = 0.5 * (old.a + old.b);
        // Each child's whole-panel value is the parent's half.
        Panel lhs = make_panel(g, old.a, m, rule, old.left);
        Panel rhs = make_panel(g, m, old.b, rule, old.right);
        panels[worst] = lhs;
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, rhs);
        ++splits;
    }
}

namespace {

IntegralResult integrate_piece(const expr::ExprAst& f, const path::PathPiece& piece,
                               const QuadratureConfig& cfg) {
    auto [t0, t1] = path::parameter_interval(piece);
    auto g = [&f, &piece](double t) {
        return std::visit([&f, t](const auto& p) {
            return expr::eval(f, p.point(t)) * p.derivative(t);
        }, piece);
    };
    return integrate_parameter(g, t0, t1, cfg);
}

} // namespace

IntegralResult integrate_line(const expr::ExprAst& f, const path::ParametricPath& p,
                              const QuadratureConfig& cfg) {
    return std::visit([&](const auto& concrete) -> IntegralResult {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, path::CompositePath>) {
            IntegralResult total;
            total.converged = true;
            for (const path::PathPiece& piece : concrete.pieces()) {
                IntegralResult r = integrate_piece(f, piece, cfg);
                total.value += r.value;
                total.error_estimate += r.error_estimate;
                total.panels_used += r.panels_used;
                total.converged = total.converged && r.converged;
            }
            // summed piece errors must still honor the result contract
            total.converged = total.converged &&
                              total.error_estimate <=
                                  std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total.value));
            return total;
        } else {
            return integrate_piece(f, path::PathPiece(concrete), cfg);
        }
    }, p);
}

IntegralResult integrate_real_interval(const expr::ExprAst& f, double a, double b,
                                       const QuadratureConfig& cfg) {
    auto g = [&f](double x) { return expr::eval(f, Complex(x, 0.0)); };
    return integrate_parameter(g, a, b, cfg);
}

} // namespace pvkit::quad
