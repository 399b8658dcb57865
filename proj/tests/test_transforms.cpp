#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pvkit/expr.hpp"
#include "pvkit/pv.hpp"
#include "pvkit/transforms.hpp"

using namespace pvkit;
using namespace pvkit::transforms;
using Cx = std::complex<double>;

namespace {
pv::PVConfig default_cfg() { return pv::PVConfig{}; }
} // namespace

TEST_CASE("pointwise Hilbert transform of the conjugate pair") {
    auto cfg = default_cfg();
    CHECK(std::abs(hilbert_point(expr::parse("cos(x)"), M_PI / 6, cfg) - 0.5) < 1e-6);
    CHECK(std::abs(hilbert_point(expr::parse("sin(x)"), 0.0, cfg) - (-1.0)) < 1e-6);
    CHECK(std::abs(hilbert_point(expr::parse("cos(x - 3)"), 3.0, cfg)) < 1e-10);
}

TEST_CASE("grid transform reproduces sin and -cos") {
    auto cfg = default_cfg();
    const int count = 9;
    const double step = 2.0 * M_PI / (count - 1);

    GridSignal hcos = hilbert_grid(expr::parse("cos(x)"), 0.0, step, count, cfg);
    REQUIRE(hcos.values.size() == count);
    for (int k = 0; k < count; ++k) {
        double w = hcos.x_start + k * hcos.dx;
        CHECK(std::abs(hcos.values[k] - std::sin(w)) < 1e-5);
    }

    GridSignal hsin = hilbert_grid(expr::parse("sin(x)"), 0.0, step, count, cfg);
    for (int k = 0; k < count; ++k) {
        double w = hsin.x_start + k * hsin.dx;
        CHECK(std::abs(hsin.values[k] + std::cos(w)) < 1e-5);
    }
}

TEST_CASE("count=1 grid degenerates to the pointwise value") {
    auto cfg = default_cfg();
    GridSignal g = hilbert_grid(expr::parse("cos(x)"), 0.7, 1.0, 1, cfg);
    REQUIRE(g.values.size() == 1);
    CHECK(g.values[0] == hilbert_point(expr::parse("cos(x)"), 0.7, cfg));
}

TEST_CASE("grid argument validation") {
    auto cfg = default_cfg();
    CHECK_THROWS_AS(hilbert_grid(expr::parse("cos(x)"), 0.0, 1.0, 0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_grid(expr::parse("cos(x)"), 0.0, -1.0, 3, cfg), std::invalid_argument);
}

TEST_CASE("a failing grid point aborts with its abscissa reported") {
    // the power-law tail cannot reach the default 1e-8 target, so the
    // first point already fails and names itself
    auto cfg = default_cfg();
    cfg.tail_strategy = pv::TailStrategy::PowerEstimate;
    try {
        hilbert_grid(expr::parse("x/(1+x^2)"), 0.25, 0.5, 4, cfg);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(std::string(e.what()).find("w = 0.25") != std::string::npos);
    }
}

TEST_CASE("complex-valued integrand is rejected") {
    auto cfg = default_cfg();
    CHECK_THROWS_AS(hilbert_point(expr::parse("exp(i*x)"), 0.0, cfg), Error);
}

TEST_CASE("conjugate pair check validates (cos, sin) and rejects (cos, cos)") {
    auto cfg = default_cfg();
    std::vector<double> pts = {0.0, 1.0, 2.5};
    ConjugatePairReport good = conjugate_pair_check(expr::parse("cos(x)"), expr::parse("sin(x)"),
                                                    pts, cfg);
    CHECK_FALSE(good.degenerate);
    CHECK(good.residual_v < 1e-5);
    CHECK(good.residual_u < 1e-5);

    ConjugatePairReport bad = conjugate_pair_check(expr::parse("cos(x)"), expr::parse("cos(x)"),
                                                   pts, cfg);
    CHECK(bad.residual_v >= 0.4); // |cos 0 - H{cos}(0)| = |1 - 0|

    ConjugatePairReport empty =
        conjugate_pair_check(expr::parse("cos(x)"), expr::parse("sin(x)"), {}, cfg);
    CHECK(empty.degenerate);
    CHECK(empty.residual_v == 0.0);
    CHECK(empty.residual_u == 0.0);
}

TEST_CASE("Hilbert antisymmetry of the (cos, sin) pair at spread-out points") {
    auto cfg = default_cfg();
    std::vector<double> pts = {0.0, 0.7, 2.0, 4.5};
    ConjugatePairReport rep = conjugate_pair_check(expr::parse("cos(x)"), expr::parse("sin(x)"),
                                                   pts, cfg);
    CHECK(rep.residual_v < 1e-5);
    CHECK(rep.residual_u < 1e-5);
}

TEST_CASE("Hilbert transform is linear") {
    auto cfg = default_cfg();
    double alpha = 1.7;
    // u = alpha*cos + sin
    expr::ExprAst combo = expr::build::add(
        expr::build::mul(expr::build::literal(Cx(alpha, 0)), expr::parse("cos(x)")),
        expr::parse("sin(x)"));
    for (double w : {0.4, 2.0}) {
        double lhs = hilbert_point(combo, w, cfg);
        double rhs = alpha * hilbert_point(expr::parse("cos(x)"), w, cfg) +
                     hilbert_point(expr::parse("sin(x)"), w, cfg);
        CHECK(std::abs(lhs - rhs) < 1e-6);
    }
}

TEST_CASE("Fourier transform of 1/x: analytic sign split") {
    auto cfg = default_cfg();
    FourierResult plus = fourier_one_over_x(1.0, FourierMode::Analytic, cfg);
    CHECK_FALSE(plus.degenerate);
    CHECK(plus.value == Cx(0.0, -M_PI));

    FourierResult minus = fourier_one_over_x(-2.0, FourierMode::Analytic, cfg);
    CHECK(minus.value == Cx(0.0, M_PI));

    // odd in omega, purely imaginary
    for (double w : {0.5, 1.0, 3.0, 7.5}) {
        FourierResult a = fourier_one_over_x(w, FourierMode::Analytic, cfg);
        FourierResult b = fourier_one_over_x(-w, FourierMode::Analytic, cfg);
        CHECK(a.value == -b.value);
        CHECK(a.value.real() == 0.0);
    }
}

TEST_CASE("numeric Fourier mode agrees with the analytic branch") {
    auto cfg = default_cfg();
    for (double omega : {1.0, 3.0, -2.0}) {
        FourierResult numeric = fourier_one_over_x(omega, FourierMode::Numeric, cfg);
        FourierResult analytic = fourier_one_over_x(omega, FourierMode::Analytic, cfg);
        CHECK(std::abs(numeric.value - analytic.value) < 1e-5);
    }
}

TEST_CASE("omega = 0 returns the degenerate PV value 0") {
    auto cfg = default_cfg();
    FourierResult r = fourier_one_over_x(0.0, FourierMode::Analytic, cfg);
    CHECK(r.degenerate);
    CHECK(r.value == Cx(0, 0));
}

TEST_CASE("Dirichlet integral is pi, and the same PV is purely imaginary") {
    auto cfg = default_cfg();
    CHECK(std::abs(dirichlet_integral(cfg) - M_PI) < 1e-6);

    auto r = pv::pv_cauchy(expr::parse("exp(i*x)"), 0.0, cfg);
    CHECK(std::abs(r.value.real()) < 1e-6); // PV of cos(x)/x vanishes by parity

    // consistency chain: one number, three routes
    CHECK(std::abs(r.value.imag() - dirichlet_integral(cfg)) < 1e-9);
    CHECK(std::abs(r.value.imag() - M_PI) < 1e-6);
}

TEST_CASE("Dirichlet integral survives a halved truncation radius") {
    auto cfg = default_cfg();
    cfg.truncation_R = 25.0;
    CHECK(std::abs(dirichlet_integral(cfg) - M_PI) < 1e-5);
}

TEST_CASE("grid serialization round trip") {
    GridSignal g;
    g.x_start = -1.5;
    g.dx = 0.25;
    g.values = {0.5, -0.125, 3.0};

    std::string csv = to_csv(g);
    CHECK(csv == "w,value\n-1.5,0.5\n-1.25,-0.125\n-1,3\n");

    std::string json = to_json(g);
    CHECK(json.find("\"x_start\": -1.5") != std::string::npos);
    CHECK(json.find("\"dx\": 0.25") != std::string::npos);
    CHECK(json.find("-0.125") != std::string::npos);
}
