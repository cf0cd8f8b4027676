#include "icrates/rates2.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "icrates/numerics.hpp"

namespace icrates {

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::IAN: return "ian";
        case Scheme::TDMA: return "tdma";
        case Scheme::P2PCombined: return "p2p-combined";
        case Scheme::ETW: return "etw";
        case Scheme::JointCapacity: return "joint-capacity";
    }
    return "?";
}

const char* to_string(EtwBranch b) {
    switch (b) {
        case EtwBranch::AllPrivate: return "all-private";
        case EtwBranch::SumBound: return "sum-bound";
        case EtwBranch::IndividualBound: return "individual-bound";
    }
    return "?";
}

const char* to_string(Region2 r) {
    switch (r) {
        case Region2::C0: return "C0";
        case Region2::C1: return "C1";
        case Region2::C1Prime: return "C1prime";
        case Region2::Capacity: return "Capacity";
    }
    return "?";
}

Region2 parse_region2(const std::string& name) {
    std::string low(name);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (low == "c0") return Region2::C0;
    if (low == "c1") return Region2::C1;
    if (low == "c1prime" || low == "c1'") return Region2::C1Prime;
    if (low == "capacity") return Region2::Capacity;
    throw std::domain_error("unknown region '" + name + "' (expected C0, C1, C1prime or Capacity)");
}

RateResult rate_sym_ian(const Channel2Sym& ch) {
    return {mi_gaussian(ch.snr, 1.0 + ch.isr * ch.snr), Scheme::IAN, bound::ian_individual};
}

RateResult rate_sym_tdma2(double snr) {
    if (!std::isfinite(snr) || snr <= 0.0) {
        throw std::domain_error("rate_sym_tdma2: snr must be positive and finite");
    }
    return {0.5 * std::log2(1.0 + 2.0 * snr), Scheme::TDMA, bound::tdma};
}

RateResult rate_sym_p2p(const Channel2Sym& ch) {
    const double p = ch.snr;
    switch (classify2sym(ch)) {
        case Regime2::Noisy:
            // IAN wins up to the crossover, TDMA beyond (equal exactly there).
            if (ch.isr <= numerics::ian_tdma_crossover(p)) {
                return {rate_sym_ian(ch).value, Scheme::P2PCombined, bound::ian_individual};
            }
            return {rate_sym_tdma2(p).value, Scheme::P2PCombined, bound::tdma};
        case Regime2::Weak:
            // Half the joint sum bound never beats TDMA for isr <= 1.
            return {rate_sym_tdma2(p).value, Scheme::P2PCombined, bound::tdma};
        case Regime2::Strong: {
            const double individual = std::log2(1.0 + p);
            const double half_sum = 0.5 * std::log2(1.0 + p + ch.isr * p);
            if (half_sum <= individual) return {half_sum, Scheme::P2PCombined, bound::sum};
            return {individual, Scheme::P2PCombined, bound::individual};
        }
        case Regime2::VeryStrong:
            return {std::log2(1.0 + p), Scheme::P2PCombined, bound::individual};
    }
    throw std::logic_error("rate_sym_p2p: unreachable");
}

EtwBranch etw_branch(const Channel2Sym& ch) {
    if (ch.isr > 1.0) {
        throw std::domain_error(
            "etw_branch: the split scheme is stated for isr <= 1 (use rate_sym_p2p beyond)");
    }
    if (ch.isr * ch.snr <= 1.0) return EtwBranch::AllPrivate;
    return numerics::fn_f(ch.snr, ch.isr) > 0.0 ? EtwBranch::SumBound : EtwBranch::IndividualBound;
}

RateResult rate_sym_etw(const Channel2Sym& ch) {
    const double p = ch.snr, a = ch.isr;
    switch (etw_branch(ch)) {
        case EtwBranch::AllPrivate:
            return {mi_gaussian(p, 1.0 + a * p), Scheme::ETW, bound::etw_all_private};
        case EtwBranch::SumBound:
            return {0.5 * std::log2(1.0 + p + a * p) + 0.5 * std::log2(2.0 + 1.0 / a) - 1.0,
                    Scheme::ETW, bound::etw_common_sum};
        case EtwBranch::IndividualBound:
            return {std::log2(1.0 + a * p + 1.0 / a) - 1.0, Scheme::ETW,
                    bound::etw_common_individual};
    }
    throw std::logic_error("rate_sym_etw: unreachable");
}

RateResult sum_rate_p2p_asym(const Channel2Asym& ch) {
    const double p1 = ch.snr1, p2 = ch.snr2, a1 = ch.isr1, a2 = ch.isr2;
    switch (classify2asym(ch)) {
        case RegimeAsym::Noisy:
            return {mi_gaussian(p1, 1.0 + a1 * p2) + mi_gaussian(p2, 1.0 + a2 * p1),
                    Scheme::JointCapacity, bound::ian_sum};
        case RegimeAsym::Weak:
            // MAC sum bound at the better receiver.
            return {std::max(std::log2(1.0 + p1 + a1 * p2), std::log2(1.0 + a2 * p1 + p2)),
                    Scheme::JointCapacity, bound::mac_sum};
        case RegimeAsym::MixedCrossLimited: {
            const double v = ch.isr1 > 1.0 ? std::log2(1.0 + p1 + a1 * p2)
                                           : std::log2(1.0 + p2 + a2 * p1);
            return {v, Scheme::JointCapacity, bound::mac_sum};
        }
        case RegimeAsym::MixedDirectLimited: {
            // The weaker user decodes through interference on its own link;
            // the stronger user then gets a clean channel.
            const double v = ch.isr1 > 1.0 ? mi_gaussian(p2, 1.0 + a2 * p1) + std::log2(1.0 + p1)
                                           : mi_gaussian(p1, 1.0 + a1 * p2) + std::log2(1.0 + p2);
            return {v, Scheme::JointCapacity, bound::ian_plus_individual};
        }
        case RegimeAsym::Strong:
            throw std::domain_error(
                "sum_rate_p2p_asym: no closed-form sum rate in the strong regime");
    }
    throw std::logic_error("sum_rate_p2p_asym: unreachable");
}

namespace {

void push_unique(std::vector<RatePair>& v, double r1, double r2) {
    if (!v.empty() && v.back().r1 == r1 && v.back().r2 == r2) return;
    v.push_back({r1, r2});
}

std::vector<RatePair> square(double side) {
    return {{0.0, 0.0}, {side, 0.0}, {side, side}, {0.0, side}};
}

// Pentagon under individual bounds d and sum bound s (square once s >= 2d).
std::vector<RatePair> pentagon(double d, double s) {
    if (s >= 2.0 * d) return square(d);
    return {{0.0, 0.0}, {d, 0.0}, {d, s - d}, {s - d, d}, {0.0, d}};
}

}  // namespace

std::vector<RatePair> region_vertices(const Channel2Sym& ch, Region2 region) {
    const double p = ch.snr, a = ch.isr;
    const double c = mi_gaussian(p, 1.0 + a * p);     // IAN individual bound
    const double d = std::log2(1.0 + p);              // interference-free individual bound
    const double s = std::log2(1.0 + p + a * p);      // joint sum bound

    switch (region) {
        case Region2::C0: return square(c);
        case Region2::C1: return pentagon(d, s);
        case Region2::C1Prime: return square(d);
        case Region2::Capacity: break;
    }

    switch (classify2sym(ch)) {
        case Regime2::Noisy: {
            // Union of the IAN square and the joint pentagon: the square's
            // corner pokes through the sum bound (2c >= s in this regime),
            // leaving a non-convex outline.
            std::vector<RatePair> v;
            push_unique(v, 0.0, 0.0);
            push_unique(v, d, 0.0);
            push_unique(v, d, s - d);
            push_unique(v, c, s - c);
            push_unique(v, c, c);
            push_unique(v, s - c, c);
            push_unique(v, s - d, d);
            push_unique(v, 0.0, d);
            return v;
        }
        case Regime2::Weak:
        case Regime2::Strong: return pentagon(d, s);
        case Regime2::VeryStrong: return square(d);
    }
    throw std::logic_error("region_vertices: unreachable");
}

}  // namespace icrates
