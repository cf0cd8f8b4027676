#include "icrates/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace icrates::numerics {

namespace {

void require_snr(double snr) {
    if (!std::isfinite(snr) || snr <= 0.0) {
        throw std::domain_error("numerics: snr must be positive and finite");
    }
}

// Grows hi by doubling until fn(hi) >= 0; fn must start negative at 0.
double grow_positive_bracket(const std::function<double(double)>& fn, const char* who) {
    double hi = 1.0;
    for (int i = 0; i <= 64; ++i) {
        if (fn(hi) >= 0.0) return hi;
        hi *= 2.0;
    }
    throw std::runtime_error(std::string(who) + ": bracket growth failed after 64 doublings");
}

}  // namespace

RootResult bracketed_root(const std::function<double(double)>& fn, double lo, double hi,
                          double tol) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw std::invalid_argument("bracketed_root: requires finite lo < hi");
    }
    if (!(tol > 0.0)) throw std::invalid_argument("bracketed_root: tol must be > 0");
    double flo = fn(lo), fhi = fn(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi)) {
        throw std::domain_error("bracketed_root: non-finite evaluation at a bracket endpoint");
    }
    if (flo == 0.0) return {lo, lo, hi, 0.0, 0};
    if (fhi == 0.0) return {hi, lo, hi, 0.0, 0};
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw std::invalid_argument("bracketed_root: no sign change over [lo, hi]");
    }

    double a = lo, b = hi, fa = flo;
    int iters = 0;
    while (b - a > tol) {
        const double mid = a + 0.5 * (b - a);
        if (mid <= a || mid >= b) break;  // bracket at floating-point resolution
        const double fm = fn(mid);
        if (!std::isfinite(fm)) throw std::domain_error("bracketed_root: non-finite evaluation");
        ++iters;
        if (fm == 0.0) return {mid, lo, hi, 0.0, iters};
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    const double value = a + 0.5 * (b - a);
    return {value, lo, hi, fn(value), iters};
}

double fn_f(double snr, double a) { return snr * a * a * a + a * a - a - 1.0; }

double fn_g(double snr, double a) { return (1.0 + snr + a * snr) * (2.0 + 1.0 / a); }

double fn_h(double snr, double a) { return 1.0 + a * snr + 1.0 / a; }

double fn_f1(double snr, double a) {
    return 2.0 * snr * snr * a * a * a - 3.0 * snr * a * a - 2.0 * a + 1.0;
}

double fn_f1_halfbit(double snr, double a) {
    return 2.0 * snr * snr * a * a * a - 9.0 * snr * a * a - 6.0 * a + 3.0;
}

double fn_g1(double snr, double a) {
    return 8.0 * snr * a * a * a * a - 8.0 * a * a * a - 27.0 * a - 9.0;
}

double fn_g2(double snr, double a) {
    return 18.0 * snr * a * a * a - (6.0 * snr - 9.0) * a * a - (snr - 6.0) * a + 1.0;
}

double fn_g3(double snr, double a) { return (a * snr - 1.0) * (1.0 + 1.0 / (3.0 * a)); }

double find_a0(double snr) {
    require_snr(snr);
    auto f = [snr](double a) { return fn_f(snr, a); };
    // f(0) = -1; f(1) = snr - 1, so the bracket stops at 1 for snr >= 1 and
    // grows geometrically below that.
    const double hi = grow_positive_bracket(f, "find_a0");
    if (f(hi) == 0.0) return hi;
    return bracketed_root(f, 0.0, hi, 1e-12).value;
}

double a1_closed(double snr) {
    require_snr(snr);
    return (5.0 * snr + 2.0 - std::sqrt(17.0 * snr * snr + 12.0 * snr + 4.0)) / (4.0 * snr);
}

double a2_closed(double snr) {
    require_snr(snr);
    return (13.0 * snr + 6.0 - std::sqrt(161.0 * snr * snr + 148.0 * snr + 36.0)) / (4.0 * snr);
}

double noisy_boundary(double snr) {
    require_snr(snr);
    return 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * snr));
}

double ian_tdma_crossover(double snr) {
    require_snr(snr);
    return 1.0 / (1.0 + std::sqrt(1.0 + 2.0 * snr));
}

double compute_P_prime() {
    auto f_at_a1 = [](double snr) { return fn_f(snr, a1_closed(snr)); };
    const double value = bracketed_root(f_at_a1, 4.0, 1e6, 1e-9).value;
    if (!(value > 100.0)) {
        throw std::logic_error("compute_P_prime: threshold fell below 100, formula regression");
    }
    return value;
}

double compute_P_doubleprime() {
    auto f_at_a2 = [](double snr) { return fn_f(snr, a2_closed(snr)); };
    const double value = bracketed_root(f_at_a2, 100.0, 1e8, 1e-9).value;
    if (!(value > 1000.0)) {
        throw std::logic_error("compute_P_doubleprime: threshold fell below 1000, formula regression");
    }
    return value;
}

double g1_root(double snr) {
    require_snr(snr);
    auto g1 = [snr](double a) { return fn_g1(snr, a); };
    const double hi = grow_positive_bracket(g1, "g1_root");  // g1(0) = -9
    if (g1(hi) == 0.0) return hi;
    return bracketed_root(g1, 0.0, hi, 1e-12).value;
}

}  // namespace icrates::numerics
