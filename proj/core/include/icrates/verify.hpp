#pragma once

// Grid- and sample-based numerical verification of the closed-form results,
// producing machine-readable pass/fail reports with worst-case margins and
// witness points.
//
// Margins are normalized so that positive means "claim satisfied with
// slack". Suites testing an inequality claim pass when the worst margin
// exceeds the suite threshold: -1e-12 for ">=" claims (rounding slack),
// +1e-12 for strictly-greater claims, and 0 for the root-identity suite
// whose sub-check margins are already tolerance-adjusted. Points rejected
// by a domain guard are skipped and counted; a suite fails if skips exceed
// 5% of the evaluated grid.
//
// Every suite is deterministic given its spec: sample draws are sequential
// from a fixed-seed generator, grid evaluation parallelizes over point
// indices, and the worst-margin reduction runs in fixed index order, so
// reports are identical for any thread count. The runtime field is the one
// exception (wall time); serializations can exclude it.

#include <cstdint>
#include <string>
#include <vector>

namespace icrates::verify {

struct Spec {
    int grid_p = 50;        // points along the snr axis
    int grid_a = 50;        // points along the isr axis
    int grid_rho = 10;      // points along the power-reduction axis
    double p_min = 0.0;     // <= 0 means the suite default
    double p_max = 0.0;
    long samples = 1000;    // draws for the sampled suites
    std::uint64_t seed = 0x1C5EEDF00DULL;
    int threads = 0;        // 0 = ICRATES_THREADS env or hardware default
};

struct VerifyReport {
    std::string suite;
    bool pass = false;
    double worst_margin = 0.0;
    std::string witness;       // parameters at the worst margin
    long points_checked = 0;
    long points_skipped = 0;
    double runtime_seconds = 0.0;
    std::vector<std::string> notes;  // extra values some suites expose (e.g. thresholds)

    // One-line record: name, pass, margin, witness, points, skipped
    // [, runtime]. Excluding runtime yields run-to-run identical bytes.
    std::string to_line(bool include_runtime = true) const;
    std::string to_csv_row(bool include_runtime = true) const;
    static std::string csv_header(bool include_runtime = true);
};

// Noisy regime, default grid snr in [0.1, 1e4] x isr spanning (0, boundary]:
// the split-scheme rate never beats treating interference as noise, and the
// p2p rate matches its two-case form exactly.
VerifyReport verify_thm1_noisy(const Spec& spec = {});

// Weak regime, snr capped at 100 (20 dB default p range [0.01, 100]):
// p2p strictly beats the split scheme at every grid point.
VerifyReport verify_cor_20db(const Spec& spec = {});

// Weak regime, snr capped at 1000: p2p stays within half a bit.
VerifyReport verify_cor_30db(const Spec& spec = {});

// Symmetric full power yields at least the sum rate of any reduced-power
// variant (snr, isr <= 1, reduction factor grid).
VerifyReport verify_power_reduction(const Spec& spec = {});

// K=3 approximated rates: TDMA strictly dominates the split-scheme
// approximation over the stated snr window, isr per-column in
// (max(1/P, 0.01), 1).
VerifyReport verify_k3_tdma_dominance(const Spec& spec = {});

// Random-sample equality of the decode-subset minimization with its
// two-bound reduction, for every decode set.
VerifyReport verify_lemma_kbound(const Spec& spec = {});

// Random-sample checks that the subset maximum is attained at one of the
// extremes (decode nothing / decode everything) and that the closed form
// equals the oracle.
VerifyReport verify_maxS(const Spec& spec = {});

// Random-sample equality of the K-user split-scheme closed form with the
// constraint-enumeration oracle (isr*snr > 1).
VerifyReport verify_etwk_oracle(const Spec& spec = {});

// Root identities: fn_f(noisy_boundary(P)) == -1, a1_closed(4) == 0.25,
// the P' / P'' thresholds clear 100 / 1000, and the closed g2(4/9) value.
// Notes carry the computed thresholds.
VerifyReport verify_roots(const Spec& spec = {});

// All suites above, fixed order. Suite ids: thm1, cor20, cor30, power, k3,
// kbound, maxS, etwk-oracle, roots.
std::vector<VerifyReport> verify_all(const Spec& spec = {});

// Runs one suite by id; throws std::domain_error for an unknown id.
VerifyReport run_suite(const std::string& id, const Spec& spec = {});

// The valid suite ids in verify_all order.
const std::vector<std::string>& suite_ids();

}  // namespace icrates::verify
