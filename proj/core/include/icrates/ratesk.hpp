#pragma once

// K-user symmetric rate computations: the brute-force decode-subset oracle
// and its two-bound reduction, closed forms per regime, TDMA, the K-user
// common/private-split scheme (closed form and constraint-enumeration
// oracle), and the approximated rates used by the K=3 comparison.

#include <string>
#include <vector>

#include "icrates/channel.hpp"
#include "icrates/rates2.hpp"

namespace icrates {

// Symmetric rate when receiver 1 decodes the interferers in decode_set
// (indices from {2..K}) jointly with its own message and treats the rest as
// noise: min over T subset of decode_set of
//   (1/(|T|+1)) log2(1 + (P + |T| aP) / (1 + (K-1-|S|) aP)).
// Enumerates all 2^|S| subsets; oracle-grade, exponential in |S|.
// Invalid decode_set (out of range / duplicates) throws std::domain_error.
double rate_sym_subset(const ChannelKSym& ch, const std::vector<int>& decode_set);

// Two-term reduction of the same quantity: min of the T = empty and
// T = decode_set terms only.
double rate_sym_subset_twobound(const ChannelKSym& ch, const std::vector<int>& decode_set);

struct P2pKOracle {
    RateResult rate;
    std::vector<int> argmax_set;  // decode set attaining the max (first in mask order)
};

// max over all decode sets of rate_sym_subset. 2^(K-1) sets, each with a
// full subset enumeration; capped at K <= 20 (std::length_error beyond).
P2pKOracle rate_sym_p2pK_oracle(const ChannelKSym& ch);

// Closed form per regime: noisy log2(1+P/(1+(K-1)aP)); weak and strong
// (1/K) log2(1+P+(K-1)aP); very strong log2(1+P). active_bound records the
// regime.
RateResult rate_sym_p2pK_closed(const ChannelKSym& ch);

// (1/K) log2(1 + K P).
RateResult rate_sym_tdmaK(int users, double snr);

// max of rate_sym_p2pK_closed and rate_sym_tdmaK (ties go to the closed
// form).
RateResult rate_sym_p2p_combinedK(const ChannelKSym& ch);

// Per-user common/private rate split of the K-user split scheme.
struct EtwKSplit {
    double common_rate;
    double private_rate;
};

struct EtwKRate {
    RateResult rate;  // total = common + private
    EtwKSplit split;
};

// Closed-form symmetric rate of the K-user common/private-split scheme:
//   isr*snr <= 1: all private, log2(1+P/(1+(K-1)aP));
//   1 < isr*snr, isr < 1:  log2(1+1/(Ka)) + min{ (1/(K-1)) log2(1 + (K-1)(aP-1)/(K+1/a)),
//                                                (1/K) log2(1 + ((K-1)(aP-1)+P-1/a)/(K+1/a)) }
//   isr >= 1:              log2(1+1/(Ka)) + min{ log2(1 + (P-1/a)/(K+1/a)),
//                                                (1/K) log2(1 + ((K-1)(aP-1)+P-1/a)/(K+1/a)) }
EtwKRate rate_sym_etwK_closed(const ChannelKSym& ch);

// Constraint-enumeration oracle for the same rate: symmetric common rate is
// min over cardinality k in {1..K} of (1/k) times the cardinality-k bound
// (one constraint per cardinality suffices by symmetry), plus the private
// rate log2(1+1/(Ka)). Requires isr*snr > 1 (std::domain_error otherwise);
// capped at K <= 20.
double rate_sym_etwK_oracle(const ChannelKSym& ch);

// High-snr approximations used by the K=3 comparison:
//   approx_tdma: (1/K) log2(K P)
//   approx_etwK: log2(1+1/(Ka)) + min{ (1/(K-1)) log2((K-1)(aP-1)/(K+1/a)),
//                                      (1/K) log2(K(P-1/a)/(K+1/a)) }
// approx_etwK throws std::domain_error when a log argument is not positive
// (isr*snr <= 1).
double approx_tdma(int users, double snr);
double approx_etwK(int users, double snr, double isr);

}  // namespace icrates
