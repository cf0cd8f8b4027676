#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "icrates/numerics.hpp"
#include "test_rng.hpp"

using namespace icrates::numerics;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    return v;
}

}  // namespace

TEST_CASE("bracketed_root pinned roots") {
    const auto r1 = bracketed_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12);
    CHECK(std::fabs(r1.value - std::sqrt(2.0)) <= 1e-12);
    CHECK(r1.lo == 1.0);
    CHECK(r1.hi == 2.0);

    const auto r2 = bracketed_root([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-12);
    CHECK(std::fabs(r2.value - 1.0) <= 1e-12);

    // 0.22738573917171547: root of 100 a^3 + a^2 - a - 1, high-precision bisection
    const auto r3 = bracketed_root([](double a) { return fn_f(100.0, a); }, 0.01, 1.0, 1e-12);
    CHECK(std::fabs(r3.value - 0.22738573917171547) <= 1e-11);
}

TEST_CASE("bracketed_root accepts an exact endpoint root") {
    const auto r = bracketed_root([](double x) { return x - 2.0; }, 2.0, 3.0, 1e-12);
    CHECK(r.value == 2.0);
    CHECK(r.residual == 0.0);
}

TEST_CASE("bracketed_root error paths") {
    auto pos = [](double) { return 1.0; };
    CHECK_THROWS_AS(bracketed_root(pos, 0.0, 1.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(bracketed_root([](double x) { return x; }, 1.0, 0.0, 1e-12),
                    std::invalid_argument);
    CHECK_THROWS_AS(bracketed_root([](double x) { return x; }, -1.0, 1.0, 0.0),
                    std::invalid_argument);
    auto bad = [](double x) { return x < 0.5 ? -1.0 : std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(bracketed_root(bad, 0.0, 1.0, 1e-12), std::domain_error);
}

TEST_CASE("bracketed_root residual stays near zero at the returned point") {
    struct Case {
        double (*fn)(double);
        double lo, hi;
    };
    const Case cases[] = {
        {[](double x) { return std::cos(x); }, 1.0, 2.0},
        {[](double x) { return x * x * x - 5.0; }, 1.0, 3.0},
        {[](double x) { return std::exp(x) - 7.0; }, 0.0, 4.0},
    };
    for (const auto& c : cases) {
        const double tol = 1e-12;
        const auto r = bracketed_root(c.fn, c.lo, c.hi, tol);
        const double slope =
            std::fabs((c.fn(c.hi) - c.fn(c.lo)) / (c.hi - c.lo));  // secant scale
        CHECK(std::fabs(r.residual) < 10.0 * tol * std::max(1.0, slope));
    }
}

TEST_CASE("find_a0 pinned roots") {
    CHECK(std::fabs(find_a0(100.0) - 0.22738573917171547) <= 1e-11);
    CHECK(find_a0(1.0) == 1.0);  // f(1) = 0 exactly
    CHECK(std::fabs(find_a0(4.0) - 0.67313595296926078) <= 1e-11);
    // sign bracketing: f(0.67) < 0 < f(0.68) at snr 4
    CHECK(fn_f(4.0, 0.67) < 0.0);
    CHECK(fn_f(4.0, 0.68) > 0.0);
}

TEST_CASE("find_a0 sign structure across a wide snr grid") {
    for (double p : log_grid(0.01, 1e6, 40)) {
        const double a0 = find_a0(p);
        const double eps = 1e-6 * a0;
        CHECK(fn_f(p, a0 - eps) < 0.0);
        CHECK(fn_f(p, a0 + eps) > 0.0);
    }
}

TEST_CASE("a1_closed and a2_closed pinned values") {
    CHECK(a1_closed(4.0) == 0.25);  // 17*16+48+4 = 324 = 18^2, exact
    CHECK(std::fabs(a1_closed(100.0) - 0.22057987258561137) <= 1e-15);
    CHECK(std::fabs(a2_closed(1000.0) - 0.077897591064690410) <= 1e-15);
}

TEST_CASE("a1_closed and a2_closed satisfy their defining equations") {
    auto common_sum_rate = [](double p, double a) {
        return 0.5 * std::log2(1.0 + p + a * p) + 0.5 * std::log2(2.0 + 1.0 / a) - 1.0;
    };
    for (double p : log_grid(4.0, 1e6, 30)) {
        const double tdma = 0.5 * std::log2(1.0 + 2.0 * p);
        CHECK(std::fabs(common_sum_rate(p, a1_closed(p)) - tdma) <= 1e-10);
        CHECK(std::fabs(common_sum_rate(p, a2_closed(p)) - (tdma + 0.5)) <= 1e-10);
    }
}

TEST_CASE("noisy boundary and ian/tdma crossover") {
    CHECK(std::fabs(noisy_boundary(1.0) - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-15);
    CHECK(std::fabs(ian_tdma_crossover(100.0) - 0.065887234393789126) <= 1e-15);
    testutil::Rng rng(505);
    for (int i = 0; i < 1000; ++i) {
        const double p = rng.log_uniform(0.1, 1e6);
        CHECK(ian_tdma_crossover(p) < noisy_boundary(p));
        // the cubic evaluates to exactly -1 on the boundary
        CHECK(std::fabs(fn_f(p, noisy_boundary(p)) + 1.0) <= 1e-9);
    }
    CHECK(std::fabs(fn_f(7.0, noisy_boundary(7.0)) + 1.0) <= 1e-12);
}

TEST_CASE("snr thresholds for the weak-regime comparisons") {
    const double p_prime = compute_P_prime();
    const double p_doubleprime = compute_P_doubleprime();
    CHECK(p_prime > 100.0);
    CHECK(p_doubleprime > 1000.0);
    // frozen from a high-precision root find
    CHECK(std::fabs(p_prime - 109.36069317628432) <= 1e-5);
    CHECK(std::fabs(p_doubleprime - 2269.5425182703451) <= 1e-4);
    // the defining map changes sign across each threshold
    CHECK(fn_f(p_prime - 1.0, a1_closed(p_prime - 1.0)) < 0.0);
    CHECK(fn_f(p_prime + 1.0, a1_closed(p_prime + 1.0)) > 0.0);
    CHECK(fn_f(p_doubleprime - 1.0, a2_closed(p_doubleprime - 1.0)) < 0.0);
    CHECK(fn_f(p_doubleprime + 1.0, a2_closed(p_doubleprime + 1.0)) > 0.0);
    // exact arithmetic at the bracket start: f(a1(4)) = 4/64 + 1/16 - 1/4 - 1
    CHECK(fn_f(4.0, a1_closed(4.0)) == -1.125);
}

TEST_CASE("f(a1_closed) increases with snr") {
    double last = -std::numeric_limits<double>::infinity();
    for (double p : log_grid(4.0, 1e6, 60)) {
        const double v = fn_f(p, a1_closed(p));
        CHECK(v > last);
        last = v;
    }
}

TEST_CASE("g1_root pinned value and branch threshold") {
    CHECK(std::fabs(g1_root(10.0) - 0.81530801303729223) <= 1e-11);
    CHECK(fn_g1(10.0, 0.5) < 0.0);
    CHECK(fn_g1(10.0, 1.0) > 0.0);  // 80 - 8 - 27 - 9 = 36
    // g1(4/9) changes sign at snr = 142389/2048
    const double threshold = 142389.0 / 2048.0;
    CHECK(fn_g1(threshold - 0.01, 4.0 / 9.0) < 0.0);
    CHECK(fn_g1(threshold + 0.01, 4.0 / 9.0) > 0.0);
}

TEST_CASE("g2 at 4/9 matches its closed value") {
    testutil::Rng rng(606);
    for (int i = 0; i < 200; ++i) {
        const double p = rng.log_uniform(0.1, 1000.0);
        CHECK(std::fabs(fn_g2(p, 4.0 / 9.0) - (441.0 - 4.0 * p) / 81.0) <= 1e-12);
    }
}

TEST_CASE("named functions evaluate their formulas") {
    CHECK(fn_f(2.0, 1.0) == 1.0);                    // 2+1-1-1
    CHECK(fn_g(1.0, 0.5) == doctest::Approx(10.0));  // (1+1+0.5)*(2+2)
    CHECK(fn_h(1.0, 0.5) == doctest::Approx(3.5));   // 1+0.5+2
    CHECK(fn_f1(1.0, 1.0) == doctest::Approx(-2.0));
    CHECK(fn_f1_halfbit(1.0, 1.0) == doctest::Approx(-10.0));
    CHECK(fn_g3(2.0, 1.0) == doctest::Approx(4.0 / 3.0));
    // single interior minimum of the common-sum argument, at sqrt((1+P)/(2P))
    const double p = 3.0;
    const double amin = std::sqrt((1.0 + p) / (2.0 * p));
    CHECK(fn_g(p, amin) < fn_g(p, amin * 0.9));
    CHECK(fn_g(p, amin) < fn_g(p, amin * 1.1));
    const double hmin = std::sqrt(1.0 / p);
    CHECK(fn_h(p, hmin) < fn_h(p, hmin * 0.9));
    CHECK(fn_h(p, hmin) < fn_h(p, hmin * 1.1));
}
