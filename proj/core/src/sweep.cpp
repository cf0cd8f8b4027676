#include "icrates/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "icrates/channel.hpp"
#include "icrates/rates2.hpp"
#include "icrates/ratesk.hpp"
#include "parallel.hpp"

namespace icrates::sweep {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

double parse_number(const std::string& tok, int line, const std::string& field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(line, field, "line " + std::to_string(line) + ", field '" + field +
                                           "': cannot parse number '" + tok + "'");
    }
}

const std::set<std::string>& fixed_keys_for(SweepModel m) {
    static const std::set<std::string> two_sym = {"snr", "isr"};
    static const std::set<std::string> two_asym = {"snr1", "snr2", "isr1", "isr2"};
    static const std::set<std::string> k_sym = {"k", "snr", "isr"};
    switch (m) {
        case SweepModel::TwoSym: return two_sym;
        case SweepModel::TwoAsym: return two_asym;
        case SweepModel::KSym: return k_sym;
    }
    throw std::logic_error("fixed_keys_for: unreachable");
}

const std::set<std::string>& schemes_for(SweepModel m) {
    static const std::set<std::string> two_sym = {"ian", "tdma", "p2p", "etw"};
    static const std::set<std::string> two_asym = {"p2p"};
    static const std::set<std::string> k_sym = {"ian",      "tdma",       "p2p",
                                                "etw",      "approx-etw", "approx-tdma"};
    switch (m) {
        case SweepModel::TwoSym: return two_sym;
        case SweepModel::TwoAsym: return two_asym;
        case SweepModel::KSym: return k_sym;
    }
    throw std::logic_error("schemes_for: unreachable");
}

void validate(SweepSpec& spec, int model_line) {
    const auto& params = fixed_keys_for(spec.model);
    if (spec.swept.empty()) throw ConfigError(0, "sweep", "missing 'sweep' key");
    if (spec.swept == "k" || !params.count(spec.swept)) {
        throw ConfigError(0, "sweep", "'" + spec.swept + "' is not sweepable for model " +
                                          to_string(spec.model));
    }
    if (spec.fixed.count(spec.swept)) {
        throw ConfigError(0, spec.swept, "swept parameter '" + spec.swept + "' is also fixed");
    }
    for (const auto& key : params) {
        if (key != spec.swept && !spec.fixed.count(key)) {
            throw ConfigError(0, key, "model " + std::string(to_string(spec.model)) +
                                          " needs parameter '" + key + "'");
        }
    }
    for (const auto& [key, value] : spec.fixed) {
        if (!params.count(key)) {
            throw ConfigError(model_line, key, "parameter '" + key + "' does not apply to model " +
                                                   to_string(spec.model));
        }
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw ConfigError(0, key, "parameter '" + key + "' must be positive");
        }
    }
    if (spec.fixed.count("k")) {
        const double k = spec.fixed.at("k");
        if (k < 2.0 || k != std::floor(k)) {
            throw ConfigError(0, "k", "'k' must be an integer >= 2");
        }
    }
    if (spec.range.points < 2) throw ConfigError(0, "range", "range needs at least 2 points");
    if (!(spec.range.min < spec.range.max)) {
        throw ConfigError(0, "range", "range needs min < max");
    }
    if (!(spec.range.min > 0.0)) {
        throw ConfigError(0, "range", "swept parameters are positive; range min must be > 0");
    }
    if (spec.schemes.empty()) throw ConfigError(0, "schemes", "at least one scheme required");
    std::set<std::string> seen;
    for (const auto& s : spec.schemes) {
        if (!schemes_for(spec.model).count(s)) {
            throw ConfigError(0, "schemes", "scheme '" + s + "' is not available for model " +
                                                to_string(spec.model));
        }
        if (!seen.insert(s).second) {
            throw ConfigError(0, "schemes", "scheme '" + s + "' listed twice");
        }
    }
}

struct Cells {
    std::string rate;
    std::string bound;
};

Cells cell_of(const RateResult& r) { return {fmt17(r.value), r.active_bound}; }

// One scheme evaluation; a domain error leaves the cells empty.
template <typename Fn>
Cells guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::domain_error&) {
        return {};
    }
}

std::string two_sym_row(const SweepSpec& spec, double p, double a) {
    std::string row = "two-sym,,";
    row += fmt17(p) + "," + fmt17(a) + ",,,,,";
    row += to_string(classify2sym(Channel2Sym(p, a)));
    for (const auto& s : spec.schemes) {
        Cells c;
        if (s == "ian") c = cell_of(rate_sym_ian(Channel2Sym(p, a)));
        else if (s == "tdma") c = cell_of(rate_sym_tdma2(p));
        else if (s == "p2p") c = cell_of(rate_sym_p2p(Channel2Sym(p, a)));
        else if (s == "etw") c = guarded([&] { return cell_of(rate_sym_etw(Channel2Sym(p, a))); });
        row += "," + c.rate + "," + c.bound;
    }
    return row;
}

std::string two_asym_row(const SweepSpec& spec, double p1, double p2, double a1, double a2) {
    std::string row = "two-asym,,,,";
    row += fmt17(p1) + "," + fmt17(p2) + "," + fmt17(a1) + "," + fmt17(a2) + ",";
    std::string regime;
    Cells sum;
    try {
        const Channel2Asym ch(p1, p2, a1, a2);
        regime = to_string(classify2asym(ch));
        for (const auto& s : spec.schemes) {
            if (s == "p2p") sum = guarded([&] { return cell_of(sum_rate_p2p_asym(ch)); });
        }
    } catch (const std::domain_error&) {
        // swept point violates snr1 >= snr2; parameters only
    }
    row += regime;
    for (std::size_t i = 0; i < spec.schemes.size(); ++i) row += "," + sum.rate + "," + sum.bound;
    return row;
}

std::string k_sym_row(const SweepSpec& spec, int k, double p, double a) {
    std::string row = "k-sym," + std::to_string(k) + ",";
    row += fmt17(p) + "," + fmt17(a) + ",,,,,";
    const ChannelKSym ch(k, p, a);
    row += to_string(classifyKsym(ch));
    for (const auto& s : spec.schemes) {
        Cells c;
        if (s == "ian") c = {fmt17(rate_sym_subset(ch, {})), bound::ian_individual};
        else if (s == "tdma") c = cell_of(rate_sym_tdmaK(k, p));
        else if (s == "p2p") c = cell_of(rate_sym_p2p_combinedK(ch));
        else if (s == "etw") c = cell_of(rate_sym_etwK_closed(ch).rate);
        else if (s == "approx-tdma") c = guarded([&] {
            return Cells{fmt17(approx_tdma(k, p)), ""};
        });
        else if (s == "approx-etw") c = guarded([&] {
            return Cells{fmt17(approx_etwK(k, p, a)), ""};
        });
        row += "," + c.rate + "," + c.bound;
    }
    return row;
}

}  // namespace

const char* to_string(SweepModel m) {
    switch (m) {
        case SweepModel::TwoSym: return "two-sym";
        case SweepModel::TwoAsym: return "two-asym";
        case SweepModel::KSym: return "k-sym";
    }
    return "?";
}

std::vector<double> SweepSpec::grid() const {
    std::vector<double> v(static_cast<std::size_t>(range.points));
    const int n = range.points;
    if (range.log_spacing) {
        const double llo = std::log(range.min), lhi = std::log(range.max);
        for (int i = 0; i < n; ++i) v[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    } else {
        for (int i = 0; i < n; ++i) v[i] = range.min + (range.max - range.min) * i / (n - 1);
    }
    v.front() = range.min;
    v.back() = range.max;
    return v;
}

SweepSpec parse_sweep_config(std::istream& in) {
    SweepSpec spec;
    bool have_model = false, have_range = false;
    int model_line = 0;
    std::set<std::string> seen_params;  // detects snr vs snr-db double definitions
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(lineno, "", "line " + std::to_string(lineno) +
                                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(lineno, key, "line " + std::to_string(lineno) + ": empty key or value");
        }

        if (key == "model") {
            if (value == "two-sym") spec.model = SweepModel::TwoSym;
            else if (value == "two-asym") spec.model = SweepModel::TwoAsym;
            else if (value == "k-sym") spec.model = SweepModel::KSym;
            else
                throw ConfigError(lineno, key, "line " + std::to_string(lineno) +
                                                   ": unknown model '" + value + "'");
            have_model = true;
            model_line = lineno;
        } else if (key == "sweep") {
            spec.swept = value;
        } else if (key == "range") {
            const auto toks = split_list(value);
            if (toks.size() != 4) {
                throw ConfigError(lineno, key,
                                  "line " + std::to_string(lineno) +
                                      ": range needs 'min max points spacing', got '" + value + "'");
            }
            spec.range.min = parse_number(toks[0], lineno, "range.min");
            spec.range.max = parse_number(toks[1], lineno, "range.max");
            spec.range.points = static_cast<int>(parse_number(toks[2], lineno, "range.points"));
            if (toks[3] == "log") spec.range.log_spacing = true;
            else if (toks[3] == "linear") spec.range.log_spacing = false;
            else
                throw ConfigError(lineno, key, "line " + std::to_string(lineno) +
                                                   ": spacing must be 'linear' or 'log'");
            have_range = true;
        } else if (key == "schemes") {
            spec.schemes = split_list(value);
        } else {
            // fixed parameter, possibly in dB
            std::string base = key;
            bool db = false;
            if (key.size() > 3 && key.substr(key.size() - 3) == "-db") {
                base = key.substr(0, key.size() - 3);
                db = true;
            }
            static const std::set<std::string> known = {"snr",  "isr",  "snr1", "snr2",
                                                        "isr1", "isr2", "k"};
            if (!known.count(base) || (db && base.substr(0, 3) != "snr")) {
                throw ConfigError(lineno, key,
                                  "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
            if (!seen_params.insert(base).second) {
                throw ConfigError(lineno, key, "line " + std::to_string(lineno) + ": parameter '" +
                                                   base + "' set twice");
            }
            const double v = parse_number(value, lineno, key);
            spec.fixed[base] = db ? std::pow(10.0, v / 10.0) : v;
        }
    }
    if (!have_model) throw ConfigError(0, "model", "missing 'model' key");
    if (!have_range) throw ConfigError(0, "range", "missing 'range' key");
    validate(spec, model_line);
    return spec;
}

SweepSpec parse_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "", "cannot open config file '" + path + "'");
    return parse_sweep_config(in);
}

std::string csv_header(const SweepSpec& spec) {
    std::string h = "model,K,P,a,P1,P2,a1,a2,regime";
    for (const auto& s : spec.schemes) h += ",rate_" + s + ",bound_" + s;
    return h;
}

std::vector<std::string> sweep_rows(const SweepSpec& spec) {
    const auto grid = spec.grid();
    std::vector<std::string> rows(grid.size());
    auto value_of = [&](const std::string& key, double swept_value) {
        return key == spec.swept ? swept_value : spec.fixed.at(key);
    };
    detail::parallel_for(static_cast<long>(grid.size()), spec.threads, [&](long i) {
        const double x = grid[static_cast<std::size_t>(i)];
        switch (spec.model) {
            case SweepModel::TwoSym:
                rows[i] = two_sym_row(spec, value_of("snr", x), value_of("isr", x));
                break;
            case SweepModel::TwoAsym:
                rows[i] = two_asym_row(spec, value_of("snr1", x), value_of("snr2", x),
                                       value_of("isr1", x), value_of("isr2", x));
                break;
            case SweepModel::KSym:
                rows[i] = k_sym_row(spec, static_cast<int>(spec.fixed.at("k")),
                                    value_of("snr", x), value_of("isr", x));
                break;
        }
    });
    return rows;
}

long run_sweep(const SweepSpec& spec, std::ostream& out) {
    out << csv_header(spec) << '\n';
    const auto rows = sweep_rows(spec);
    for (const auto& r : rows) out << r << '\n';
    return static_cast<long>(rows.size());
}

}  // namespace icrates::sweep
