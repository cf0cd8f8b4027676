#pragma once

// Root finding plus the named cubic/quartic analysis functions behind the
// rate-crossover thresholds. The defining quantities:
//
//   fn_f's unique positive root a0 is where the two terms inside the
//   two-user common/private-split rate minimization trade places;
//   a1_closed/a2_closed are the closed-form isr values where that scheme's
//   common-sum rate meets the TDMA rate (respectively TDMA + 0.5 bit); the
//   P' / P'' thresholds are the snr values up to which those crossings stay
//   below a0.
//
// All functions are pure and thread-safe.

#include <functional>

namespace icrates::numerics {

struct RootResult {
    double value;       // midpoint of the final bracket (or an exact endpoint root)
    double lo, hi;      // the bracket searched
    double residual;    // fn(value)
    int iterations;     // bisection steps taken
};

// Plain bisection of fn on [lo, hi] down to |hi-lo| <= tol. Requires a sign
// change across the bracket (an exact zero at an endpoint is returned
// directly). Throws std::invalid_argument on a bad bracket or tolerance and
// std::domain_error if fn evaluates non-finite.
RootResult bracketed_root(const std::function<double(double)>& fn, double lo, double hi,
                          double tol = 1e-12);

// Named analysis functions, each parameterized by snr and evaluated at isr a.
double fn_f(double snr, double a);           // P a^3 + a^2 - a - 1
double fn_g(double snr, double a);           // (1 + P + aP)(2 + 1/a)
double fn_h(double snr, double a);           // 1 + aP + 1/a
double fn_f1(double snr, double a);          // 2P^2 a^3 - 3P a^2 - 2a + 1
double fn_f1_halfbit(double snr, double a);  // 2P^2 a^3 - 9P a^2 - 6a + 3
double fn_g1(double snr, double a);          // 8P a^4 - 8a^3 - 27a - 9
double fn_g2(double snr, double a);          // 18P a^3 - (6P-9) a^2 - (P-6) a + 1
double fn_g3(double snr, double a);          // (aP - 1)(1 + 1/(3a))

// Unique positive root of fn_f(snr, .): the isr below which the individual
// common-message bound is the active term of the two-user split scheme and
// above which the common-sum bound takes over. fn_f is negative below the
// root and positive above. Exact at snr == 1 (root is 1).
double find_a0(double snr);

// Largest isr <= 1 solving "common-sum rate == TDMA rate":
// (5P + 2 - sqrt(17P^2 + 12P + 4)) / (4P).
double a1_closed(double snr);

// Same crossing against TDMA + 0.5 bit:
// (13P + 6 - sqrt(161P^2 + 148P + 36)) / (4P).
double a2_closed(double snr);

// Upper isr edge of the noisy regime, 2/(1 + sqrt(1+4P)) (the stable form of
// (-1+sqrt(1+4P))/(2P)). fn_f evaluates to exactly -1 here.
double noisy_boundary(double snr);

// isr where treating interference as noise and TDMA achieve the same
// symmetric rate, 1/(1 + sqrt(1+2P)); always below noisy_boundary.
double ian_tdma_crossover(double snr);

// snr threshold P' below which the p2p scheme beats the split scheme in the
// weak regime: the root of fn_f(P, a1_closed(P)) on [4, 1e6] (unique; the
// map is increasing in P there). Guaranteed > 100; throws std::logic_error
// if the formulas regress below that.
double compute_P_prime();

// Analogue with a2_closed on [100, 1e8]; the threshold for staying within
// half a bit. Guaranteed > 1000.
double compute_P_doubleprime();

// Unique positive root of fn_g1(snr, .): where the K=3 approximated
// common/private rate switches its active bound.
double g1_root(double snr);

}  // namespace icrates::numerics
