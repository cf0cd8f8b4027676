#pragma once

// Channel parameter types and interference-regime classification for the
// two-user symmetric, two-user asymmetric and K-user symmetric SISO Gaussian
// interference channels. All powers are linear ratios against unit-variance
// receiver noise: snr is the direct-link signal-to-noise ratio, isr the
// interference-to-signal ratio (so isr*snr is the interference-to-noise
// ratio seen at a receiver).
//
// Every function here is a pure function of its arguments; all of them are
// safe to call concurrently.

#include <stdexcept>
#include <string>

namespace icrates {

// Two-user symmetric channel: both direct links at snr, both cross links at
// isr*snr.
struct Channel2Sym {
    double snr;  // P > 0
    double isr;  // a > 0

    Channel2Sym(double snr_, double isr_);
};

// Two-user asymmetric channel. isr1 scales user 2's power at receiver 1
// (interference power at receiver 1 is isr1*snr2), and vice versa.
// Convention: snr1 >= snr2.
struct Channel2Asym {
    double snr1;  // P1
    double snr2;  // P2, 0 < P2 <= P1
    double isr1;  // a1 > 0
    double isr2;  // a2 > 0

    Channel2Asym(double snr1_, double snr2_, double isr1_, double isr2_);
};

// K-user symmetric channel: each receiver sees its own signal at snr and the
// other K-1 transmitters at isr*snr each.
struct ChannelKSym {
    int users;   // K >= 2
    double snr;  // P > 0
    double isr;  // a > 0

    ChannelKSym(int users_, double snr_, double isr_);
};

// Regimes ordered by interference strength; classify2sym never moves to a
// lower regime as isr grows at fixed snr.
enum class Regime2 { Noisy, Weak, Strong, VeryStrong };

enum class RegimeAsym { Noisy, Weak, MixedDirectLimited, MixedCrossLimited, Strong };

enum class RegimeK { Noisy, Weak, Strong, VeryStrong };

const char* to_string(Regime2 r);
const char* to_string(RegimeAsym r);
const char* to_string(RegimeK r);

// Gaussian mutual information log2(1 + signal_power/residual_power) in
// bits/channel use. Throws std::domain_error on non-finite input,
// signal_power < 0 or residual_power <= 0.
double mi_gaussian(double signal_power, double residual_power);

// Boundary conventions follow the defining inequalities: ties resolve to the
// lower regime wherever the condition is "<=", e.g. isr exactly at the noisy
// boundary is Noisy and isr == 1 is Weak.
Regime2 classify2sym(const Channel2Sym& ch);

// Noisy iff a_i*(1 + a_j*P_i) <= 1 for both orderings; Weak iff both a_i <= 1
// and some noisy condition fails; exactly one a_i > 1 is Mixed, split into
// direct-link-limited (a_i*(1 + a_j*P_i) >= 1 + P_i for that i) vs
// cross-link-limited; both a_i > 1 is Strong.
RegimeAsym classify2asym(const Channel2Asym& ch);

// Noisy iff (1+(K-1)aP+P)^(K-1) > (1+(K-1)aP)^K; Weak iff that fails and
// a < 1; VeryStrong iff 1+(K-1)aP+P >= (1+P)^K; otherwise Strong. The power
// comparisons run exactly while both sides stay below 2^900 and switch to
// log2 only where they would overflow, so small pinned boundary cases (such
// as equality at the very-strong threshold) compare exactly.
RegimeK classifyKsym(const ChannelKSym& ch);

}  // namespace icrates
