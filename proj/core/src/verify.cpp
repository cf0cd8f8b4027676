#include "icrates/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "icrates/channel.hpp"
#include "icrates/numerics.hpp"
#include "icrates/rates2.hpp"
#include "icrates/ratesk.hpp"
#include "parallel.hpp"

namespace icrates::verify {

namespace {

constexpr double kEqTol = 1e-12;                                  // ">=" claims
constexpr double kStrictTol = 1e-12;                              // strict ">" claims
constexpr double kAbsent = std::numeric_limits<double>::infinity();  // cell outside the grid

double nan_skip() { return std::numeric_limits<double>::quiet_NaN(); }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = hi;
        return v;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    }
    v.front() = lo;
    v.back() = hi;
    return v;
}

// j-th of n points in (lo, hi], the last exactly hi.
double open_left_point(double lo, double hi, int j, int n) {
    if (j + 1 == n) return hi;
    return lo + (hi - lo) * (j + 1) / n;
}

// j-th of n points strictly inside (lo, hi).
double open_point(double lo, double hi, int j, int n) {
    return lo + (hi - lo) * (j + 1) / (n + 1);
}

// Deterministic sample source: raw mt19937_64 draws mapped manually so the
// stream is identical everywhere.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double log_uniform(double lo, double hi) {
        return std::exp(std::log(lo) + unit() * (std::log(hi) - std::log(lo)));
    }
    int pick_users(int lo, int hi) {
        const int span = hi - lo + 1;
        int k = lo + static_cast<int>(unit() * span);
        return k > hi ? hi : k;
    }

  private:
    std::mt19937_64 gen_;
};

struct Reduction {
    double worst = std::numeric_limits<double>::infinity();
    long worst_index = -1;
    long checked = 0;
    long skipped = 0;
};

Reduction reduce_margins(const std::vector<double>& margins) {
    Reduction r;
    for (std::size_t i = 0; i < margins.size(); ++i) {
        const double m = margins[i];
        if (m == kAbsent) continue;
        if (std::isnan(m)) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (m < r.worst) {
            r.worst = m;
            r.worst_index = static_cast<long>(i);
        }
    }
    return r;
}

template <typename WitnessFn>
VerifyReport finish(const std::string& suite, const std::vector<double>& margins,
                    double threshold, const Timer& timer, WitnessFn&& witness_of) {
    const Reduction r = reduce_margins(margins);
    VerifyReport rep;
    rep.suite = suite;
    rep.points_checked = r.checked;
    rep.points_skipped = r.skipped;
    rep.worst_margin = r.checked > 0 ? r.worst : 0.0;
    rep.witness = r.worst_index >= 0 ? witness_of(r.worst_index) : std::string("none");
    const bool skips_ok = r.skipped * 20 <= r.checked + r.skipped;
    rep.pass = r.checked > 0 && skips_ok && rep.worst_margin > threshold;
    rep.runtime_seconds = timer.seconds();
    return rep;
}

double default_min(const Spec& s, double fallback) { return s.p_min > 0.0 ? s.p_min : fallback; }
double default_max(const Spec& s, double fallback) { return s.p_max > 0.0 ? s.p_max : fallback; }

// Shared body of the two weak-regime dominance suites; `offset` is added to
// the p2p-minus-split margin (0.5 for the half-bit claim).
VerifyReport weak_dominance_suite(const std::string& suite, const Spec& spec, double p_max_default,
                                  double offset) {
    Timer timer;
    const auto snrs = log_spaced(default_min(spec, 0.01), default_max(spec, p_max_default),
                                 spec.grid_p);
    const int na = spec.grid_a;
    std::vector<double> margins(snrs.size() * static_cast<std::size_t>(na));
    detail::parallel_for(static_cast<long>(margins.size()), spec.threads, [&](long idx) {
        const double p = snrs[static_cast<std::size_t>(idx / na)];
        const double b = numerics::noisy_boundary(p);
        const double a = open_left_point(b, 1.0, static_cast<int>(idx % na), na);
        const Channel2Sym ch(p, a);
        margins[static_cast<std::size_t>(idx)] =
            rate_sym_p2p(ch).value - rate_sym_etw(ch).value + offset;
    });
    return finish(suite, margins, kStrictTol, timer, [&](long idx) {
        const double p = snrs[static_cast<std::size_t>(idx / na)];
        const double b = numerics::noisy_boundary(p);
        const double a = open_left_point(b, 1.0, static_cast<int>(idx % na), na);
        return "P=" + fmt17(p) + " a=" + fmt17(a);
    });
}

struct KSample {
    int users;
    double snr;
    double isr;
};

std::vector<KSample> draw_k_samples(const Spec& spec) {
    SampleRng rng(spec.seed);
    std::vector<KSample> v(static_cast<std::size_t>(spec.samples));
    for (auto& s : v) {
        s.users = rng.pick_users(2, 6);
        s.snr = rng.log_uniform(0.01, 1e6);
        s.isr = rng.log_uniform(0.001, 10.0 * (1.0 + s.snr));
    }
    return v;
}

std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> set;
    for (int i = 0; mask >> i; ++i) {
        if (mask & (1u << i)) set.push_back(i + 2);
    }
    return set;
}

std::string k_witness(const KSample& s) {
    return "K=" + std::to_string(s.users) + " P=" + fmt17(s.snr) + " a=" + fmt17(s.isr);
}

}  // namespace

std::string VerifyReport::to_line(bool include_runtime) const {
    std::string line = suite;
    line += pass ? " pass=yes" : " pass=no";
    line += " worst_margin=" + fmt17(worst_margin);
    line += " witness=\"" + witness + "\"";
    line += " points=" + std::to_string(points_checked);
    line += " skipped=" + std::to_string(points_skipped);
    if (include_runtime) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " runtime=%.3fs", runtime_seconds);
        line += buf;
    }
    return line;
}

std::string VerifyReport::csv_header(bool include_runtime) {
    std::string h = "suite,pass,worst_margin,witness,points,skipped";
    if (include_runtime) h += ",runtime_seconds";
    return h;
}

std::string VerifyReport::to_csv_row(bool include_runtime) const {
    std::string row = suite;
    row += pass ? ",1" : ",0";
    row += "," + fmt17(worst_margin);
    row += ",\"" + witness + "\"";
    row += "," + std::to_string(points_checked);
    row += "," + std::to_string(points_skipped);
    if (include_runtime) {
        char buf[32];
        std::snprintf(buf, sizeof buf, ",%.3f", runtime_seconds);
        row += buf;
    }
    return row;
}

VerifyReport verify_thm1_noisy(const Spec& spec) {
    Timer timer;
    const auto snrs = log_spaced(default_min(spec, 0.1), default_max(spec, 1e4), spec.grid_p);
    const int na = spec.grid_a;
    std::vector<double> margins(snrs.size() * static_cast<std::size_t>(na));
    auto point = [&](long idx, double* p_out, double* a_out) {
        const double p = snrs[static_cast<std::size_t>(idx / na)];
        const double b = numerics::noisy_boundary(p);
        // (0, boundary]: the last point is the boundary itself.
        *p_out = p;
        *a_out = open_left_point(0.0, b, static_cast<int>(idx % na), na);
    };
    detail::parallel_for(static_cast<long>(margins.size()), spec.threads, [&](long idx) {
        double p, a;
        point(idx, &p, &a);
        const Channel2Sym ch(p, a);
        const double ian = std::log2(1.0 + p / (1.0 + a * p));
        const double dominance = ian - rate_sym_etw(ch).value;
        const double two_case =
            a <= numerics::ian_tdma_crossover(p) ? ian : 0.5 * std::log2(1.0 + 2.0 * p);
        const double closed_match = -std::fabs(rate_sym_p2p(ch).value - two_case);
        margins[static_cast<std::size_t>(idx)] = std::min(dominance, closed_match);
    });
    return finish("thm1", margins, -kEqTol, timer, [&](long idx) {
        double p, a;
        point(idx, &p, &a);
        return "P=" + fmt17(p) + " a=" + fmt17(a);
    });
}

VerifyReport verify_cor_20db(const Spec& spec) {
    return weak_dominance_suite("cor20", spec, 100.0, 0.0);
}

VerifyReport verify_cor_30db(const Spec& spec) {
    return weak_dominance_suite("cor30", spec, 1000.0, 0.5);
}

VerifyReport verify_power_reduction(const Spec& spec) {
    Timer timer;
    const auto snrs = log_spaced(default_min(spec, 0.01), default_max(spec, 1e4), spec.grid_p);
    const int na = spec.grid_a, nr = spec.grid_rho;
    auto point = [&](long idx, double* p, double* a, double* rho) {
        const long per_p = static_cast<long>(na) * nr;
        *p = snrs[static_cast<std::size_t>(idx / per_p)];
        *a = open_left_point(0.0, 1.0, static_cast<int>((idx % per_p) / nr), na);
        *rho = open_left_point(0.0, 1.0, static_cast<int>(idx % nr), nr);
    };
    std::vector<double> margins(snrs.size() * static_cast<std::size_t>(na) * nr);
    detail::parallel_for(static_cast<long>(margins.size()), spec.threads, [&](long idx) {
        double p, a, rho;
        point(idx, &p, &a, &rho);
        try {
            const double full = sum_rate_p2p_asym(Channel2Asym(p, p, a, a)).value;
            const double reduced = sum_rate_p2p_asym(Channel2Asym(p, rho * p, a, a)).value;
            margins[static_cast<std::size_t>(idx)] = full - reduced;
        } catch (const std::domain_error&) {
            margins[static_cast<std::size_t>(idx)] = nan_skip();
        }
    });
    return finish("power", margins, -kEqTol, timer, [&](long idx) {
        double p, a, rho;
        point(idx, &p, &a, &rho);
        return "P=" + fmt17(p) + " a=" + fmt17(a) + " rho=" + fmt17(rho);
    });
}

VerifyReport verify_k3_tdma_dominance(const Spec& spec) {
    Timer timer;
    // Open snr window of the K=3 comparison, slightly inside
    // ((-24+9*sqrt(10))/26, 142389/2048).
    const auto snrs = log_spaced(default_min(spec, 0.17175), default_max(spec, 69.52),
                                 spec.grid_p);
    const int na = spec.grid_a;
    auto point = [&](long idx, double* p, double* a, bool* present) {
        *p = snrs[static_cast<std::size_t>(idx / na)];
        const double lo = std::max(1.0 / *p, 0.01);
        *present = lo < 1.0;
        *a = *present ? open_point(lo, 1.0, static_cast<int>(idx % na), na) : 0.0;
    };
    std::vector<double> margins(snrs.size() * static_cast<std::size_t>(na));
    detail::parallel_for(static_cast<long>(margins.size()), spec.threads, [&](long idx) {
        double p, a;
        bool present;
        point(idx, &p, &a, &present);
        if (!present) {
            margins[static_cast<std::size_t>(idx)] = kAbsent;
            return;
        }
        try {
            margins[static_cast<std::size_t>(idx)] = approx_tdma(3, p) - approx_etwK(3, p, a);
        } catch (const std::domain_error&) {
            margins[static_cast<std::size_t>(idx)] = nan_skip();
        }
    });
    return finish("k3", margins, kStrictTol, timer, [&](long idx) {
        double p, a;
        bool present;
        point(idx, &p, &a, &present);
        return "P=" + fmt17(p) + " a=" + fmt17(a);
    });
}

VerifyReport verify_lemma_kbound(const Spec& spec) {
    Timer timer;
    const auto samples = draw_k_samples(spec);
    std::vector<double> margins(samples.size());
    detail::parallel_for(static_cast<long>(samples.size()), spec.threads, [&](long idx) {
        const KSample& s = samples[static_cast<std::size_t>(idx)];
        const ChannelKSym ch(s.users, s.snr, s.isr);
        double worst = 0.0;
        const std::uint32_t full = (1u << (s.users - 1)) - 1u;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            const auto set = mask_to_set(mask);
            worst = std::max(worst, std::fabs(rate_sym_subset(ch, set) -
                                              rate_sym_subset_twobound(ch, set)));
        }
        margins[static_cast<std::size_t>(idx)] = -worst;
    });
    return finish("kbound", margins, -kEqTol, timer,
                  [&](long idx) { return k_witness(samples[static_cast<std::size_t>(idx)]); });
}

VerifyReport verify_maxS(const Spec& spec) {
    Timer timer;
    const auto samples = draw_k_samples(spec);
    std::vector<double> margins(samples.size());
    detail::parallel_for(static_cast<long>(samples.size()), spec.threads, [&](long idx) {
        const KSample& s = samples[static_cast<std::size_t>(idx)];
        const ChannelKSym ch(s.users, s.snr, s.isr);
        const double oracle = rate_sym_p2pK_oracle(ch).rate.value;
        const double at_extremes =
            std::max(rate_sym_subset(ch, {}), rate_sym_subset(ch, mask_to_set((1u << (s.users - 1)) - 1u)));
        const double extremes_margin = at_extremes - oracle;  // <= 0, tiny iff max at an extreme
        const double closed_margin = -std::fabs(rate_sym_p2pK_closed(ch).value - oracle);
        margins[static_cast<std::size_t>(idx)] = std::min(extremes_margin, closed_margin);
    });
    return finish("maxS", margins, -kEqTol, timer,
                  [&](long idx) { return k_witness(samples[static_cast<std::size_t>(idx)]); });
}

VerifyReport verify_etwk_oracle(const Spec& spec) {
    Timer timer;
    SampleRng rng(spec.seed);
    std::vector<KSample> samples(static_cast<std::size_t>(spec.samples));
    for (auto& s : samples) {
        for (;;) {
            s.users = rng.pick_users(2, 6);
            s.snr = rng.log_uniform(0.01, 1e6);
            const double lo = std::max(0.001, (1.0 + 1e-9) / s.snr);
            const double hi = 10.0 * (1.0 + s.snr);
            if (lo >= hi) continue;  // no isr can clear inr > 1 here, redraw
            s.isr = rng.log_uniform(lo, hi);
            if (s.isr * s.snr > 1.0) break;
        }
    }
    std::vector<double> margins(samples.size());
    detail::parallel_for(static_cast<long>(samples.size()), spec.threads, [&](long idx) {
        const KSample& s = samples[static_cast<std::size_t>(idx)];
        const ChannelKSym ch(s.users, s.snr, s.isr);
        margins[static_cast<std::size_t>(idx)] =
            -std::fabs(rate_sym_etwK_closed(ch).rate.value - rate_sym_etwK_oracle(ch));
    });
    return finish("etwk-oracle", margins, -kEqTol, timer,
                  [&](long idx) { return k_witness(samples[static_cast<std::size_t>(idx)]); });
}

VerifyReport verify_roots(const Spec& spec) {
    Timer timer;
    SampleRng rng(spec.seed);
    std::vector<double> margins;
    std::vector<std::string> witnesses;
    auto add = [&](double margin, std::string witness) {
        margins.push_back(margin);
        witnesses.push_back(std::move(witness));
    };

    // fn_f evaluates to exactly -1 at the noisy boundary (1e-9 relative).
    for (long i = 0; i < spec.samples; ++i) {
        const double p = rng.log_uniform(0.1, 1e6);
        const double err = std::fabs(numerics::fn_f(p, numerics::noisy_boundary(p)) + 1.0);
        add(1e-9 - err, "f(noisy_boundary) P=" + fmt17(p));
    }

    add(1e-15 - std::fabs(numerics::a1_closed(4.0) - 0.25), "a1_closed(4)");

    const double p_prime = numerics::compute_P_prime();
    const double p_doubleprime = numerics::compute_P_doubleprime();
    add(p_prime - 100.0, "P' threshold");
    add(p_doubleprime - 1000.0, "P'' threshold");

    // Closed value of g2 at 4/9; snr capped at 1e3 where the double(4/9)
    // representation error stays inside the tolerance.
    for (int i = 0; i < 100; ++i) {
        const double p = rng.log_uniform(0.1, 1e3);
        const double err =
            std::fabs(numerics::fn_g2(p, 4.0 / 9.0) - (441.0 - 4.0 * p) / 81.0);
        add(1e-12 - err, "g2(4/9) P=" + fmt17(p));
    }

    VerifyReport rep =
        finish("roots", margins, 0.0, timer,
               [&](long idx) { return witnesses[static_cast<std::size_t>(idx)]; });
    rep.notes.push_back("P' = " + fmt17(p_prime) + " (> 100)");
    rep.notes.push_back("P'' = " + fmt17(p_doubleprime) + " (> 1000)");
    return rep;
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"thm1",   "cor20", "cor30",       "power", "k3",
                                                 "kbound", "maxS",  "etwk-oracle", "roots"};
    return ids;
}

VerifyReport run_suite(const std::string& id, const Spec& spec) {
    if (id == "thm1") return verify_thm1_noisy(spec);
    if (id == "cor20") return verify_cor_20db(spec);
    if (id == "cor30") return verify_cor_30db(spec);
    if (id == "power") return verify_power_reduction(spec);
    if (id == "k3") return verify_k3_tdma_dominance(spec);
    if (id == "kbound") return verify_lemma_kbound(spec);
    if (id == "maxS") return verify_maxS(spec);
    if (id == "etwk-oracle") return verify_etwk_oracle(spec);
    if (id == "roots") return verify_roots(spec);
    throw std::domain_error("unknown verification suite '" + id + "'");
}

std::vector<VerifyReport> verify_all(const Spec& spec) {
    std::vector<VerifyReport> reports;
    reports.reserve(suite_ids().size());
    for (const auto& id : suite_ids()) reports.push_back(run_suite(id, spec));
    return reports;
}

}  // namespace icrates::verify
