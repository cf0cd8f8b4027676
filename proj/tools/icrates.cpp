// icrates CLI: classification, single-point rates, parameter sweeps with CSV
// output, verification suites, root queries, and region/plot-script output
// for Gaussian interference channels.
//
// Exit codes: 0 success (all suites pass), 1 verification failure,
// 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icrates/channel.hpp"
#include "icrates/numerics.hpp"
#include "icrates/rates2.hpp"
#include "icrates/ratesk.hpp"
#include "icrates/sweep.hpp"
#include "icrates/verify.hpp"

namespace {

using namespace icrates;

constexpr const char* kBoundVocabulary =
    "active_bound vocabulary: ian-individual | tdma | individual | sum | etw-all-private | "
    "etw-common-sum | etw-common-individual | ian-sum | mac-sum | ian-plus-individual | "
    "noisy | weak | strong | very-strong";

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt5(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5g", v);
    return buf;
}

const char* display_regime(RegimeK r) {
    switch (r) {
        case RegimeK::Noisy: return "Noisy";
        case RegimeK::Weak: return "Weak";
        case RegimeK::Strong: return "Strong";
        case RegimeK::VeryStrong: return "VeryStrong";
    }
    return "?";
}

const char* display_regime(RegimeAsym r) {
    switch (r) {
        case RegimeAsym::Noisy: return "Noisy";
        case RegimeAsym::Weak: return "Weak";
        case RegimeAsym::MixedDirectLimited: return "MixedDirectLimited";
        case RegimeAsym::MixedCrossLimited: return "MixedCrossLimited";
        case RegimeAsym::Strong: return "Strong";
    }
    return "?";
}

struct ChannelArgs {
    int users = 0;
    int k_users = 0;
    double snr = 0.0, snr_db = 0.0, isr = 0.0;
    double snr2 = 0.0, snr2_db = 0.0, isr2 = 0.0;
    CLI::Option* users_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* snr_opt = nullptr;
    CLI::Option* snr_db_opt = nullptr;
    CLI::Option* isr_opt = nullptr;
    CLI::Option* snr2_opt = nullptr;
    CLI::Option* snr2_db_opt = nullptr;
    CLI::Option* isr2_opt = nullptr;

    void add_to(CLI::App& cmd, bool with_asym) {
        users_opt = cmd.add_option("--users", users, "two-user model (value must be 2)");
        k_opt = cmd.add_option("--k", k_users, "K-user symmetric model, K >= 2");
        users_opt->excludes(k_opt);
        k_opt->excludes(users_opt);
        snr_opt = cmd.add_option("--snr", snr, "direct-link SNR (linear)");
        snr_db_opt = cmd.add_option("--snr-db", snr_db, "direct-link SNR in dB");
        snr_opt->excludes(snr_db_opt);
        snr_db_opt->excludes(snr_opt);
        isr_opt = cmd.add_option("--isr", isr, "interference-to-signal ratio (linear)");
        if (with_asym) {
            snr2_opt = cmd.add_option("--snr2", snr2, "second user's SNR (asymmetric model)");
            snr2_db_opt = cmd.add_option("--snr2-db", snr2_db, "second user's SNR in dB");
            snr2_opt->excludes(snr2_db_opt);
            snr2_db_opt->excludes(snr2_opt);
            isr2_opt = cmd.add_option("--isr2", isr2, "second cross gain (asymmetric model)");
        }
    }

    double primary_snr() const {
        if (snr_opt->count()) return snr;
        if (snr_db_opt->count()) return std::pow(10.0, snr_db / 10.0);
        throw std::domain_error("missing --snr or --snr-db");
    }

    double secondary_snr() const {
        if (snr2_opt && snr2_opt->count()) return snr2;
        if (snr2_db_opt && snr2_db_opt->count()) return std::pow(10.0, snr2_db / 10.0);
        throw std::domain_error("missing --snr2 or --snr2-db");
    }

    bool is_k_model() const { return k_opt->count() > 0; }

    bool is_asym() const {
        return (snr2_opt && snr2_opt->count()) || (snr2_db_opt && snr2_db_opt->count()) ||
               (isr2_opt && isr2_opt->count());
    }

    void require_two_users() const {
        if (users_opt->count() && users != 2) {
            throw std::domain_error("--users supports only 2; use --k for more users");
        }
    }

    Channel2Sym two_sym() const {
        require_two_users();
        if (!isr_opt->count()) throw std::domain_error("missing --isr");
        return Channel2Sym(primary_snr(), isr);
    }

    Channel2Asym two_asym() const {
        require_two_users();
        if (!isr_opt->count() || !isr2_opt || !isr2_opt->count()) {
            throw std::domain_error("asymmetric model needs --isr and --isr2");
        }
        return Channel2Asym(primary_snr(), secondary_snr(), isr, isr2);
    }

    ChannelKSym k_sym() const {
        if (!isr_opt->count()) throw std::domain_error("missing --isr");
        return ChannelKSym(k_users, primary_snr(), isr);
    }
};

int cmd_classify(const ChannelArgs& args) {
    if (args.is_k_model()) {
        const ChannelKSym ch = args.k_sym();
        const RegimeK regime = classifyKsym(ch);
        // Numeric isr thresholds for this (K, P): noisy edge by bisection on
        // the defining comparison, very-strong edge in closed form.
        auto noisy_gap = [&](double a) {
            const double x = (ch.users - 1) * a * ch.snr;
            return (ch.users - 1) * std::log1p(x + ch.snr) - ch.users * std::log1p(x);
        };
        const double noisy_edge =
            numerics::bracketed_root(noisy_gap, 1e-12, 1e12, 1e-12).value;
        const double very_strong_edge =
            (std::pow(1.0 + ch.snr, ch.users) - 1.0 - ch.snr) / ((ch.users - 1) * ch.snr);
        std::printf("%s (noisy edge a = %s, weak/strong split a = 1, very-strong edge a = %s)\n",
                    display_regime(regime), fmt5(noisy_edge).c_str(),
                    fmt5(very_strong_edge).c_str());
        return 0;
    }
    if (args.is_asym()) {
        const Channel2Asym ch = args.two_asym();
        std::printf("%s (a1*(1+a2*P1) = %s, a2*(1+a1*P2) = %s; noisy iff both <= 1)\n",
                    display_regime(classify2asym(ch)),
                    fmt5(ch.isr1 * (1.0 + ch.isr2 * ch.snr1)).c_str(),
                    fmt5(ch.isr2 * (1.0 + ch.isr1 * ch.snr2)).c_str());
        return 0;
    }
    const Channel2Sym ch = args.two_sym();
    const double nb = numerics::noisy_boundary(ch.snr);
    switch (classify2sym(ch)) {
        case Regime2::Noisy: std::printf("Noisy (a <= %s)\n", fmt5(nb).c_str()); break;
        case Regime2::Weak: std::printf("Weak (%s < a <= 1)\n", fmt5(nb).c_str()); break;
        case Regime2::Strong:
            std::printf("Strong (1 < a <= %s)\n", fmt5(1.0 + ch.snr).c_str());
            break;
        case Regime2::VeryStrong:
            std::printf("VeryStrong (a > %s)\n", fmt5(1.0 + ch.snr).c_str());
            break;
    }
    return 0;
}

int cmd_rate(const ChannelArgs& args, const std::string& scheme) {
    RateResult r{0.0, Scheme::IAN, ""};
    if (args.is_k_model()) {
        const ChannelKSym ch = args.k_sym();
        if (scheme == "ian") r = {rate_sym_subset(ch, {}), Scheme::IAN, bound::ian_individual};
        else if (scheme == "tdma") r = rate_sym_tdmaK(ch.users, ch.snr);
        else if (scheme == "p2p") r = rate_sym_p2p_combinedK(ch);
        else if (scheme == "etw") r = rate_sym_etwK_closed(ch).rate;
        else if (scheme == "approx-tdma") r = {approx_tdma(ch.users, ch.snr), Scheme::TDMA, ""};
        else if (scheme == "approx-etw")
            r = {approx_etwK(ch.users, ch.snr, ch.isr), Scheme::ETW, ""};
        else throw std::domain_error("unknown scheme '" + scheme + "' for the K-user model");
    } else if (args.is_asym()) {
        if (scheme != "p2p") {
            throw std::domain_error("the asymmetric model supports only --scheme p2p (sum rate)");
        }
        r = sum_rate_p2p_asym(args.two_asym());
    } else {
        const Channel2Sym ch = args.two_sym();
        if (scheme == "ian") r = rate_sym_ian(ch);
        else if (scheme == "tdma") r = rate_sym_tdma2(ch.snr);
        else if (scheme == "p2p") r = rate_sym_p2p(ch);
        else if (scheme == "etw") r = rate_sym_etw(ch);
        else throw std::domain_error("unknown scheme '" + scheme + "' for the two-user model");
    }
    std::printf("%s bits/channel-use  scheme=%s  bound=%s\n", fmt12(r.value).c_str(),
                to_string(r.scheme), r.active_bound.empty() ? "-" : r.active_bound.c_str());
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path) {
    const sweep::SweepSpec spec = sweep::parse_sweep_config_file(config_path);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file '" + out_path + "'");
    const long rows = sweep::run_sweep(spec, out);
    out.close();
    if (!out) throw std::domain_error("write failed for '" + out_path + "'");
    std::printf("sweep: %ld rows, %zu scheme(s), swept %s over [%s, %s] (%s) -> %s\n", rows,
                spec.schemes.size(), spec.swept.c_str(), fmt12(spec.range.min).c_str(),
                fmt12(spec.range.max).c_str(), spec.range.log_spacing ? "log" : "linear",
                out_path.c_str());
    return 0;
}

int cmd_verify(const std::string& selector, const std::string& out_path) {
    std::vector<verify::VerifyReport> reports;
    if (selector == "all") {
        reports = verify::verify_all();
    } else {
        reports.push_back(verify::run_suite(selector));
    }
    bool all_pass = true;
    for (const auto& rep : reports) {
        std::printf("%s\n", rep.to_line().c_str());
        for (const auto& note : rep.notes) std::printf("  %s\n", note.c_str());
        all_pass = all_pass && rep.pass;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::domain_error("cannot open output file '" + out_path + "'");
        out << verify::VerifyReport::csv_header() << '\n';
        for (const auto& rep : reports) out << rep.to_csv_row() << '\n';
    }
    return all_pass ? 0 : 1;
}

int cmd_roots(double snr) {
    std::printf("noisy-boundary a = %s\n", fmt12(numerics::noisy_boundary(snr)).c_str());
    std::printf("ian-tdma-crossover a = %s\n", fmt12(numerics::ian_tdma_crossover(snr)).c_str());
    std::printf("a0 = %s  (split-scheme active-bound switch)\n",
                fmt12(numerics::find_a0(snr)).c_str());
    std::printf("a1 = %s  (common-sum rate meets tdma)\n",
                fmt12(numerics::a1_closed(snr)).c_str());
    std::printf("a2 = %s  (common-sum rate meets tdma + 0.5 bit)\n",
                fmt12(numerics::a2_closed(snr)).c_str());
    return 0;
}

void write_plot_script(const Channel2Sym& ch, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open script file '" + path + "'");
    out << "# gnuplot script: achievable-rate regions at snr=" << fmt12(ch.snr)
        << " isr=" << fmt12(ch.isr) << "\n";
    out << "set xlabel 'R1 (bits/channel use)'\nset ylabel 'R2 (bits/channel use)'\n";
    out << "set key left bottom\nset size square\n";
    const struct {
        Region2 region;
        const char* block;
        const char* title;
    } layers[] = {
        {Region2::C1Prime, "$c1prime", "individual bounds only"},
        {Region2::C1, "$c1", "joint decoding"},
        {Region2::C0, "$c0", "interference as noise"},
    };
    for (const auto& layer : layers) {
        const auto verts = region_vertices(ch, layer.region);
        out << layer.block << " << EOD\n";
        for (const auto& v : verts) out << fmt12(v.r1) << ' ' << fmt12(v.r2) << '\n';
        // close the outline
        out << fmt12(verts.front().r1) << ' ' << fmt12(verts.front().r2) << "\nEOD\n";
    }
    out << "plot $c1prime with lines lw 2 title 'individual bounds only', \\\n"
        << "     $c1 with lines lw 2 title 'joint decoding', \\\n"
        << "     $c0 with lines lw 2 title 'interference as noise'\n";
    out << "pause -1 'press enter'\n";
    if (!out) throw std::domain_error("write failed for '" + path + "'");
}

int cmd_region(const ChannelArgs& args, const std::string& which, const std::string& script) {
    const Channel2Sym ch = args.two_sym();
    const Region2 region = parse_region2(which);
    const auto verts = region_vertices(ch, region);
    std::printf("# region %s at snr=%s isr=%s (%zu vertices, counterclockwise)\n",
                to_string(region), fmt12(ch.snr).c_str(), fmt12(ch.isr).c_str(), verts.size());
    for (const auto& v : verts) {
        std::printf("%s %s\n", fmt12(v.r1).c_str(), fmt12(v.r2).c_str());
    }
    if (!script.empty()) {
        write_plot_script(ch, script);
        std::printf("# wrote plot script to %s\n", script.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"achievable rates of simple schemes over Gaussian interference channels"};
    app.require_subcommand(1);
    app.footer(std::string(kBoundVocabulary) +
               "\nICRATES_THREADS overrides the worker count (outputs do not depend on it).");

    auto* classify = app.add_subcommand("classify", "interference-regime classification");
    ChannelArgs classify_args;
    classify_args.add_to(*classify, true);

    auto* rate = app.add_subcommand("rate", "symmetric rate (or asymmetric sum rate) of a scheme");
    ChannelArgs rate_args;
    rate_args.add_to(*rate, true);
    std::string rate_scheme;
    rate->add_option("--scheme", rate_scheme,
                     "ian | tdma | p2p | etw | approx-etw | approx-tdma (approximations: K model)")
        ->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
    std::string config_path, sweep_out;
    sweep_cmd->add_option("--config", config_path, "sweep config file")->required();
    sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
    sweep_cmd->footer(
        "config schema (flat key = value lines, '#' comments):\n"
        "  model   = two-sym | two-asym | k-sym\n"
        "  <param> = <value>            fixed parameters: two-sym snr isr; two-asym snr1\n"
        "                               snr2 isr1 isr2; k-sym k snr isr. snr keys accept\n"
        "                               a -db variant (single conversion at parse time).\n"
        "  sweep   = <param>            swept parameter (not k, not also fixed)\n"
        "  range   = min max points spacing   with spacing linear | log, points >= 2\n"
        "  schemes = list               two-sym: ian tdma p2p etw; two-asym: p2p;\n"
        "                               k-sym: ian tdma p2p etw approx-etw approx-tdma\n"
        "CSV columns: model,K,P,a,P1,P2,a1,a2,regime then rate_<scheme>,bound_<scheme>\n"
        "per requested scheme; cells a model or domain does not use stay empty;\n"
        "numbers carry 17 significant digits. Example: tools/sweep-example.conf");

    auto* verify_cmd = app.add_subcommand("verify", "run numerical verification suites");
    std::string selector = "all";
    std::string verify_out;
    verify_cmd->add_option("selector", selector,
                           "all | thm1 | cor20 | cor30 | power | k3 | kbound | maxS | "
                           "etwk-oracle | roots");
    verify_cmd->add_option("--suite", selector, "suite selector (same as the positional)")
        ->excludes("selector");
    verify_cmd->add_option("--out", verify_out, "also write reports as CSV");

    auto* roots = app.add_subcommand("roots", "rate-crossover thresholds for a given snr");
    ChannelArgs roots_args;
    roots_args.add_to(*roots, false);

    auto* region = app.add_subcommand("region", "rate-region vertices (and optional plot script)");
    ChannelArgs region_args;
    region_args.add_to(*region, false);
    std::string which = "Capacity";
    std::string script_path;
    region->add_option("--which", which, "C0 | C1 | C1prime | Capacity");
    region->add_option("--script", script_path, "emit a self-contained gnuplot script here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(classify_args);
        if (rate->parsed()) return cmd_rate(rate_args, rate_scheme);
        if (sweep_cmd->parsed()) return cmd_sweep(config_path, sweep_out);
        if (verify_cmd->parsed()) return cmd_verify(selector, verify_out);
        if (roots->parsed()) return cmd_roots(roots_args.primary_snr());
        if (region->parsed()) return cmd_region(region_args, which, script_path);
    } catch (const sweep::ConfigError& e) {
        std::fprintf(stderr, "icrates: config error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "icrates: %s\n", e.what());
        return 2;
    } catch (const std::length_error& e) {
        std::fprintf(stderr, "icrates: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "icrates: %s\n", e.what());
        return 2;
    }
    return 2;
}
