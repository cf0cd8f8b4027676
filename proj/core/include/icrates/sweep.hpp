#pragma once

// Parameter sweeps with CSV output. A sweep is described by a flat
// key/value config file:
//
//     # two-user symmetric sweep over isr
//     model   = two-sym           # two-sym | two-asym | k-sym
//     snr     = 100               # fixed parameters (snr-db accepted too)
//     sweep   = isr               # swept parameter name
//     range   = 0.01 1 100 log    # min max points spacing(linear|log)
//     schemes = p2p etw           # space- or comma-separated
//
// Fixed-parameter keys per model: two-sym snr/isr; two-asym snr1 snr2 isr1
// isr2 (snr1-db/snr2-db accepted); k-sym k snr/isr. The swept parameter
// must be a real-valued parameter of the model and not also fixed.
//
// Valid schemes: two-sym ian|tdma|p2p|etw; two-asym p2p (maximum sum rate);
// k-sym ian|tdma|p2p|etw|approx-etw|approx-tdma.
//
// CSV schema: header row, then columns model,K,P,a,P1,P2,a1,a2,regime
// (cells not used by the model stay empty) followed by one
// rate_<scheme>,bound_<scheme> pair per requested scheme, in request order.
// Numbers carry 17 significant digits. A scheme whose domain excludes a
// grid point leaves both of its cells empty. Output bytes are identical
// across runs and thread counts.

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace icrates::sweep {

enum class SweepModel { TwoSym, TwoAsym, KSym };

const char* to_string(SweepModel m);

struct SweepRange {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    bool log_spacing = false;
};

struct SweepSpec {
    SweepModel model = SweepModel::TwoSym;
    std::map<std::string, double> fixed;  // validated fixed parameters by key
    std::string swept;                    // swept parameter key
    SweepRange range;
    std::vector<std::string> schemes;
    int threads = 0;  // 0 = ICRATES_THREADS env or hardware default

    // The swept grid, min/max included exactly.
    std::vector<double> grid() const;
};

// Config-file problem, carrying the offending line (0 = file level) and
// field name for diagnostics.
struct ConfigError : std::runtime_error {
    int line;
    std::string field;
    ConfigError(int line_, std::string field_, const std::string& what_)
        : std::runtime_error(what_), line(line_), field(std::move(field_)) {}
};

SweepSpec parse_sweep_config(std::istream& in);
SweepSpec parse_sweep_config_file(const std::string& path);

// Header plus one row per grid point, in sweep order.
std::string csv_header(const SweepSpec& spec);
std::vector<std::string> sweep_rows(const SweepSpec& spec);

// Writes header + rows to `out`; returns the row count.
long run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace icrates::sweep
