#pragma once

// Two-user rate computations: symmetric rates of the p2p scheme (treating
// interference as noise, TDMA, and their combination), the fixed
// common/private-split scheme, asymmetric maximum sum rates, and region
// vertex extraction for plotting.

#include <string>
#include <vector>

#include "icrates/channel.hpp"

namespace icrates {

enum class Scheme { IAN, TDMA, P2PCombined, ETW, JointCapacity };

const char* to_string(Scheme s);

// Fixed vocabulary for RateResult::active_bound (also the CSV `bound_*`
// cells). Stable contract; see the CLI help for the full list.
namespace bound {
inline constexpr const char* ian_individual = "ian-individual";
inline constexpr const char* tdma = "tdma";
inline constexpr const char* individual = "individual";
inline constexpr const char* sum = "sum";
inline constexpr const char* etw_all_private = "etw-all-private";
inline constexpr const char* etw_common_sum = "etw-common-sum";
inline constexpr const char* etw_common_individual = "etw-common-individual";
inline constexpr const char* ian_sum = "ian-sum";
inline constexpr const char* mac_sum = "mac-sum";
inline constexpr const char* ian_plus_individual = "ian-plus-individual";
inline constexpr const char* regime_noisy = "noisy";
inline constexpr const char* regime_weak = "weak";
inline constexpr const char* regime_strong = "strong";
inline constexpr const char* regime_very_strong = "very-strong";
}  // namespace bound

// A rate value in bits/channel use plus the scheme and the constraint that
// produced it.
struct RateResult {
    double value;
    Scheme scheme;
    std::string active_bound;
};

// log2(1 + P/(1+aP)): both users transmit, interference treated as noise.
RateResult rate_sym_ian(const Channel2Sym& ch);

// (1/2) log2(1 + 2P): each user transmits alone half the time at full power.
RateResult rate_sym_tdma2(double snr);

// Symmetric rate of the p2p scheme (capacity region of p2p codes combined
// with TDMA). Noisy regime: max of IAN and TDMA, switching at
// ian_tdma_crossover; weak: TDMA; strong: min of the interference-free
// individual bound and half the joint sum bound; very strong: the
// interference-free rate log2(1+P).
RateResult rate_sym_p2p(const Channel2Sym& ch);

// Which term of the common/private-split rate is active.
enum class EtwBranch {
    AllPrivate,       // isr*snr <= 1: no common message
    SumBound,         // fn_f(snr, isr) > 0: common-sum term active
    IndividualBound,  // fn_f(snr, isr) <= 0: common-individual term active
};

const char* to_string(EtwBranch b);

// Symmetric rate of the fixed common/private-split scheme, stated for
// isr <= 1 only (beyond that the p2p scheme is capacity-achieving);
// isr > 1 throws std::domain_error.
//   isr*snr <= 1:  log2(1 + P/(1+aP))
//   otherwise:     min{ (1/2)log2(1+P+aP) + (1/2)log2(2+1/a) - 1,
//                       log2(1+aP+1/a) - 1 }
// active_bound agrees with etw_branch.
RateResult rate_sym_etw(const Channel2Sym& ch);

// Branch selector for rate_sym_etw; throws std::domain_error for isr > 1.
EtwBranch etw_branch(const Channel2Sym& ch);

// Maximum sum rate of p2p-capacity-achieving codes on the asymmetric
// channel. Defined in the noisy, weak and mixed regimes; the strong regime
// throws std::domain_error (no closed-form sum rate there).
RateResult sum_rate_p2p_asym(const Channel2Asym& ch);

enum class Region2 { C0, C1, C1Prime, Capacity };

const char* to_string(Region2 r);
// Parses "C0" / "C1" / "C1prime" / "Capacity" (case-insensitive); throws
// std::domain_error on anything else.
Region2 parse_region2(const std::string& name);

struct RatePair {
    double r1;
    double r2;
};

// Boundary vertices of the closed region, counterclockwise from the origin.
//   C0       square of side log2(1+P/(1+aP))  (both receivers IAN)
//   C1       pentagon: individual bounds log2(1+P), sum bound log2(1+P+aP)
//            (joint decoding; degenerates to a square once the sum bound
//            goes slack at isr >= 1+snr)
//   C1prime  square of side log2(1+P) (sum bound dropped)
//   Capacity regime-appropriate region: C0 union C1 in the noisy regime
//            (non-convex), C1 in weak/strong, C1prime in very strong.
std::vector<RatePair> region_vertices(const Channel2Sym& ch, Region2 region);

}  // namespace icrates
