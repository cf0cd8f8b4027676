#include "icrates/channel.hpp"

#include <cmath>

#include "icrates/numerics.hpp"

namespace icrates {

namespace {

void require_positive_finite(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::domain_error(std::string(what) + " must be positive and finite");
    }
}

// base^n by binary exponentiation; exact whenever every intermediate product
// is exactly representable, which covers the pinned small-integer boundary
// cases.
double pow_n(double base, int n) {
    double r = 1.0, b = base;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// u^p > v^q without overflow: exact powers while both stay below 2^900,
// log2 comparison otherwise.
bool pow_greater(double u, int p, double v, int q) {
    const double bits_u = p * std::log2(u);
    const double bits_v = q * std::log2(v);
    if (bits_u < 900.0 && bits_v < 900.0) return pow_n(u, p) > pow_n(v, q);
    return bits_u > bits_v;
}

bool pow_geq(double u, int p, double v, int q) {
    const double bits_u = p * std::log2(u);
    const double bits_v = q * std::log2(v);
    if (bits_u < 900.0 && bits_v < 900.0) return pow_n(u, p) >= pow_n(v, q);
    return bits_u >= bits_v;
}

}  // namespace

Channel2Sym::Channel2Sym(double snr_, double isr_) : snr(snr_), isr(isr_) {
    require_positive_finite(snr, "Channel2Sym: snr");
    require_positive_finite(isr, "Channel2Sym: isr");
}

Channel2Asym::Channel2Asym(double snr1_, double snr2_, double isr1_, double isr2_)
    : snr1(snr1_), snr2(snr2_), isr1(isr1_), isr2(isr2_) {
    require_positive_finite(snr1, "Channel2Asym: snr1");
    require_positive_finite(snr2, "Channel2Asym: snr2");
    require_positive_finite(isr1, "Channel2Asym: isr1");
    require_positive_finite(isr2, "Channel2Asym: isr2");
    if (snr2 > snr1) throw std::domain_error("Channel2Asym: requires snr1 >= snr2");
}

ChannelKSym::ChannelKSym(int users_, double snr_, double isr_)
    : users(users_), snr(snr_), isr(isr_) {
    if (users < 2) throw std::domain_error("ChannelKSym: needs at least 2 users");
    require_positive_finite(snr, "ChannelKSym: snr");
    require_positive_finite(isr, "ChannelKSym: isr");
}

const char* to_string(Regime2 r) {
    switch (r) {
        case Regime2::Noisy: return "noisy";
        case Regime2::Weak: return "weak";
        case Regime2::Strong: return "strong";
        case Regime2::VeryStrong: return "very-strong";
    }
    return "?";
}

const char* to_string(RegimeAsym r) {
    switch (r) {
        case RegimeAsym::Noisy: return "noisy";
        case RegimeAsym::Weak: return "weak";
        case RegimeAsym::MixedDirectLimited: return "mixed-direct-limited";
        case RegimeAsym::MixedCrossLimited: return "mixed-cross-limited";
        case RegimeAsym::Strong: return "strong";
    }
    return "?";
}

const char* to_string(RegimeK r) {
    switch (r) {
        case RegimeK::Noisy: return "noisy";
        case RegimeK::Weak: return "weak";
        case RegimeK::Strong: return "strong";
        case RegimeK::VeryStrong: return "very-strong";
    }
    return "?";
}

double mi_gaussian(double signal_power, double residual_power) {
    if (!std::isfinite(signal_power) || signal_power < 0.0) {
        throw std::domain_error("mi_gaussian: signal_power must be finite and >= 0");
    }
    if (!std::isfinite(residual_power) || residual_power <= 0.0) {
        throw std::domain_error("mi_gaussian: residual_power must be finite and > 0");
    }
    return std::log2(1.0 + signal_power / residual_power);
}

Regime2 classify2sym(const Channel2Sym& ch) {
    if (ch.isr <= numerics::noisy_boundary(ch.snr)) return Regime2::Noisy;
    if (ch.isr <= 1.0) return Regime2::Weak;
    if (ch.isr <= 1.0 + ch.snr) return Regime2::Strong;
    return Regime2::VeryStrong;
}

RegimeAsym classify2asym(const Channel2Asym& ch) {
    const bool noisy1 = ch.isr1 * (1.0 + ch.isr2 * ch.snr1) <= 1.0;
    const bool noisy2 = ch.isr2 * (1.0 + ch.isr1 * ch.snr2) <= 1.0;
    if (noisy1 && noisy2) return RegimeAsym::Noisy;
    const bool strong1 = ch.isr1 > 1.0;
    const bool strong2 = ch.isr2 > 1.0;
    if (!strong1 && !strong2) return RegimeAsym::Weak;
    if (strong1 && strong2) return RegimeAsym::Strong;
    // Exactly one cross gain above 1: the receiver behind it sees the better
    // MAC; direct-limited when the weaker user's own link caps decoding.
    double cond, one_plus_p;
    if (strong1) {
        cond = ch.isr1 * (1.0 + ch.isr2 * ch.snr1);
        one_plus_p = 1.0 + ch.snr1;
    } else {
        cond = ch.isr2 * (1.0 + ch.isr1 * ch.snr2);
        one_plus_p = 1.0 + ch.snr2;
    }
    return cond >= one_plus_p ? RegimeAsym::MixedDirectLimited : RegimeAsym::MixedCrossLimited;
}

RegimeK classifyKsym(const ChannelKSym& ch) {
    const int k = ch.users;
    const double x = (k - 1) * ch.isr * ch.snr;  // total interference power
    if (pow_greater(1.0 + x + ch.snr, k - 1, 1.0 + x, k)) return RegimeK::Noisy;
    if (ch.isr < 1.0) return RegimeK::Weak;
    if (pow_geq(1.0 + x + ch.snr, 1, 1.0 + ch.snr, k)) return RegimeK::VeryStrong;
    return RegimeK::Strong;
}

}  // namespace icrates
