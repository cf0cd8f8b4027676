#include "icrates/ratesk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace icrates {

namespace {

constexpr int kMaxOracleUsers = 20;

// Shared evaluator for the decode-subset bounds: decoded set {own} + t
// interferers at powers P and aP, the s-|T| conditioned interferers removed,
// the remaining K-1-s treated as noise.
double subset_term(const ChannelKSym& ch, int s, int t) {
    const double noise = 1.0 + (ch.users - 1 - s) * ch.isr * ch.snr;
    return std::log2(1.0 + (ch.snr + t * ch.isr * ch.snr) / noise) / (t + 1);
}

int validated_set_size(const ChannelKSym& ch, const std::vector<int>& decode_set) {
    std::uint32_t seen = 0;
    for (int idx : decode_set) {
        if (idx < 2 || idx > ch.users) {
            throw std::domain_error("decode set entries must lie in {2..K}");
        }
        const std::uint32_t bit = 1u << (idx - 2);
        if (seen & bit) throw std::domain_error("decode set entries must be distinct");
        seen |= bit;
    }
    return static_cast<int>(decode_set.size());
}

std::string decode_set_label(std::uint32_t mask, int users) {
    if (mask == 0) return "decode-none";
    if (mask == (1u << (users - 1)) - 1u) return "decode-all";
    std::string label = "decode-{";
    bool first = true;
    for (int i = 0; i < users - 1; ++i) {
        if (mask & (1u << i)) {
            if (!first) label += ',';
            label += std::to_string(i + 2);
            first = false;
        }
    }
    label += '}';
    return label;
}

}  // namespace

double rate_sym_subset(const ChannelKSym& ch, const std::vector<int>& decode_set) {
    const int s = validated_set_size(ch, decode_set);
    double best = std::numeric_limits<double>::infinity();
    // All 2^s sub-selections; the bound depends on the selection only
    // through its size, but this is the oracle so it enumerates anyway.
    for (std::uint32_t tmask = 0; tmask < (1u << s); ++tmask) {
        best = std::min(best, subset_term(ch, s, std::popcount(tmask)));
    }
    return best;
}

double rate_sym_subset_twobound(const ChannelKSym& ch, const std::vector<int>& decode_set) {
    const int s = validated_set_size(ch, decode_set);
    return std::min(subset_term(ch, s, 0), subset_term(ch, s, s));
}

P2pKOracle rate_sym_p2pK_oracle(const ChannelKSym& ch) {
    if (ch.users > kMaxOracleUsers) {
        throw std::length_error("rate_sym_p2pK_oracle: subset enumeration capped at 20 users");
    }
    const int n = ch.users - 1;
    double best = -std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 0;
    for (std::uint32_t smask = 0; smask < (1u << n); ++smask) {
        const int s = std::popcount(smask);
        double v = std::numeric_limits<double>::infinity();
        std::uint32_t tmask = smask;
        for (;;) {
            v = std::min(v, subset_term(ch, s, std::popcount(tmask)));
            if (tmask == 0) break;
            tmask = (tmask - 1) & smask;
        }
        if (v > best) {
            best = v;
            best_mask = smask;
        }
    }
    P2pKOracle out;
    out.rate = {best, Scheme::JointCapacity, decode_set_label(best_mask, ch.users)};
    for (int i = 0; i < n; ++i) {
        if (best_mask & (1u << i)) out.argmax_set.push_back(i + 2);
    }
    return out;
}

RateResult rate_sym_p2pK_closed(const ChannelKSym& ch) {
    const int k = ch.users;
    const double p = ch.snr;
    const double x = (k - 1) * ch.isr * p;
    switch (classifyKsym(ch)) {
        case RegimeK::Noisy:
            return {std::log2(1.0 + p / (1.0 + x)), Scheme::JointCapacity, bound::regime_noisy};
        case RegimeK::Weak:
            return {std::log2(1.0 + p + x) / k, Scheme::JointCapacity, bound::regime_weak};
        case RegimeK::Strong:
            return {std::log2(1.0 + p + x) / k, Scheme::JointCapacity, bound::regime_strong};
        case RegimeK::VeryStrong:
            return {std::log2(1.0 + p), Scheme::JointCapacity, bound::regime_very_strong};
    }
    throw std::logic_error("rate_sym_p2pK_closed: unreachable");
}

RateResult rate_sym_tdmaK(int users, double snr) {
    if (users < 2) throw std::domain_error("rate_sym_tdmaK: needs at least 2 users");
    if (!std::isfinite(snr) || snr <= 0.0) {
        throw std::domain_error("rate_sym_tdmaK: snr must be positive and finite");
    }
    return {std::log2(1.0 + users * snr) / users, Scheme::TDMA, bound::tdma};
}

RateResult rate_sym_p2p_combinedK(const ChannelKSym& ch) {
    const RateResult closed = rate_sym_p2pK_closed(ch);
    const RateResult tdma = rate_sym_tdmaK(ch.users, ch.snr);
    if (tdma.value > closed.value) return {tdma.value, Scheme::P2PCombined, bound::tdma};
    return {closed.value, Scheme::P2PCombined, closed.active_bound};
}

EtwKRate rate_sym_etwK_closed(const ChannelKSym& ch) {
    const int k = ch.users;
    const double p = ch.snr, a = ch.isr;
    const double inr = a * p;
    if (inr <= 1.0) {
        const double v = mi_gaussian(p, 1.0 + (k - 1) * inr);
        return {{v, Scheme::ETW, bound::etw_all_private}, {0.0, v}};
    }
    const double priv = std::log2(1.0 + 1.0 / (k * a));
    const double floor = k + 1.0 / a;  // noise floor for common decoding
    const double total = std::log2(1.0 + ((k - 1) * (inr - 1.0) + p - 1.0 / a) / floor) / k;
    const double other = a < 1.0
                             ? std::log2(1.0 + (k - 1) * (inr - 1.0) / floor) / (k - 1)
                             : std::log2(1.0 + (p - 1.0 / a) / floor);
    const double common = std::min(other, total);
    const char* which = total <= other ? bound::etw_common_sum : bound::etw_common_individual;
    return {{priv + common, Scheme::ETW, which}, {common, priv}};
}

double rate_sym_etwK_oracle(const ChannelKSym& ch) {
    const int k_users = ch.users;
    if (k_users > kMaxOracleUsers) {
        throw std::length_error("rate_sym_etwK_oracle: capped at 20 users");
    }
    const double p = ch.snr, a = ch.isr;
    if (a * p <= 1.0) {
        throw std::domain_error("rate_sym_etwK_oracle: needs isr*snr > 1 (no common messages)");
    }
    const double floor = k_users + 1.0 / a;
    const double w = a * p - 1.0;   // received common power per interferer
    const double u = p - 1.0 / a;   // received own common power
    // One constraint per cardinality suffices under symmetry.
    double common = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= k_users; ++k) {
        double b;
        if (k < k_users) {
            b = std::min(std::log2(1.0 + k * w / floor),
                         std::log2(1.0 + ((k - 1) * w + u) / floor));
        } else {
            b = std::log2(1.0 + ((k - 1) * w + u) / floor);
        }
        common = std::min(common, b / k);
    }
    return common + std::log2(1.0 + 1.0 / (k_users * a));
}

double approx_tdma(int users, double snr) {
    if (users < 2) throw std::domain_error("approx_tdma: needs at least 2 users");
    if (!std::isfinite(snr) || snr <= 0.0) {
        throw std::domain_error("approx_tdma: snr must be positive and finite");
    }
    return std::log2(users * snr) / users;
}

double approx_etwK(int users, double snr, double isr) {
    if (users < 2) throw std::domain_error("approx_etwK: needs at least 2 users");
    if (!std::isfinite(snr) || snr <= 0.0 || !std::isfinite(isr) || isr <= 0.0) {
        throw std::domain_error("approx_etwK: snr and isr must be positive and finite");
    }
    const double floor = users + 1.0 / isr;
    const double arg_cross = (users - 1) * (isr * snr - 1.0) / floor;
    const double arg_total = users * (snr - 1.0 / isr) / floor;
    if (!(arg_cross > 0.0) || !(arg_total > 0.0)) {
        throw std::domain_error("approx_etwK: approximation undefined unless isr*snr > 1");
    }
    return std::log2(1.0 + 1.0 / (users * isr)) +
           std::min(std::log2(arg_cross) / (users - 1), std::log2(arg_total) / users);
}

}  // namespace icrates
