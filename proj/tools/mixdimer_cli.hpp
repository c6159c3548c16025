#ifndef MIXDIMER_CLI_HPP
#define MIXDIMER_CLI_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mixdimer/mixdimer.hpp"

namespace mixdimer::cli {

enum ExitCode { kSuccess = 0, kValidationFailure = 1, kUsageError = 2 };

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string command;

    double j = 1.0;
    double delta = 1.0;
    double d_anis = 0.0;
    double g1 = 2.0;
    double g2 = 2.0;
    double mu = 1.0;
    double b = 0.0;
    double e = 0.0;
    std::vector<double> t{0.01};

    std::string b_range;
    std::string e_range;
    std::string t_range;
    std::string span_range;

    std::string format = "csv";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    std::optional<double> fixed_t2;

    std::string axis = "b";
    std::string mode = "b";
    std::string effect = "auto";
    std::vector<std::string> levels;
    std::size_t sample = 1000;
    std::size_t thermo_sample = 200;
    std::optional<double> tol;
    std::size_t threads = 0;

    ModelParams params() const { return {j, delta, d_anis, g1, g2, mu}; }
};

/// "lo:hi:n"
inline AxisRange parse_range(const std::string& text, const std::string& flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError(flag + " expects lo:hi:n, got '" + text + "'");
    AxisRange r;
    try {
        std::size_t used = 0;
        r.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        r.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        const long long n = std::stoll(parts[2], &used);
        if (used != parts[2].size() || n < 2) throw std::invalid_argument(parts[2]);
        r.n = static_cast<std::size_t>(n);
    } catch (const std::logic_error&) {
        throw UsageError(flag + " expects lo:hi:n with numeric bounds and n >= 2, got '" + text + "'");
    }
    if (!(r.hi > r.lo)) throw UsageError(flag + " needs hi > lo");
    return r;
}

inline AxisRange range_or(const std::string& text, const std::string& flag, AxisRange fallback) {
    return text.empty() ? fallback : parse_range(text, flag);
}

/// Numbers, or ln2 / ln3 / ln6 style tokens.
inline double parse_level(const std::string& token) {
    if (token.rfind("ln", 0) == 0) {
        try {
            std::size_t used = 0;
            const double arg = std::stod(token.substr(2), &used);
            if (used == token.size() - 2 && arg > 0.0) return std::log(arg);
        } catch (const std::logic_error&) {
        }
        throw UsageError("bad level '" + token + "'");
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used == token.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("bad level '" + token + "'");
}

inline std::vector<double> parse_levels(const std::vector<std::string>& tokens, std::vector<double> fallback) {
    if (tokens.empty()) return fallback;
    std::vector<double> out;
    for (const auto& t : tokens) out.push_back(parse_level(t));
    return out;
}

inline FieldAxis parse_axis(const std::string& s, const std::string& flag) {
    if (s == "b") return FieldAxis::Magnetic;
    if (s == "e") return FieldAxis::Electric;
    throw UsageError(flag + " must be b or e");
}

/// Values from a JSON object seed the config; command-line flags parsed
/// afterwards overwrite them.
inline void apply_json(RunConfig& c, const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    static const std::vector<std::string> known{
        "j",     "delta",      "d_anis", "g1",     "g2",    "mu",   "b",      "e",      "t",
        "b_range", "e_range",  "t_range", "span_range", "format", "out", "seed", "fixed_t2", "axis",
        "mode",  "effect",     "levels", "sample", "thermo_sample", "tol", "threads"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw UsageError("unknown config key '" + key + "'");
    try {
        const auto take = [&](const char* key, auto& field) {
            if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
        };
        take("j", c.j);
        take("delta", c.delta);
        take("d_anis", c.d_anis);
        take("g1", c.g1);
        take("g2", c.g2);
        take("mu", c.mu);
        take("b", c.b);
        take("e", c.e);
        if (j.contains("t")) {
            c.t = j.at("t").is_array() ? j.at("t").get<std::vector<double>>()
                                       : std::vector<double>{j.at("t").get<double>()};
        }
        take("b_range", c.b_range);
        take("e_range", c.e_range);
        take("t_range", c.t_range);
        take("span_range", c.span_range);
        take("format", c.format);
        take("out", c.out);
        take("seed", c.seed);
        if (j.contains("fixed_t2")) c.fixed_t2 = j.at("fixed_t2").get<double>();
        take("axis", c.axis);
        take("mode", c.mode);
        take("effect", c.effect);
        if (j.contains("levels")) {
            c.levels.clear();
            for (const auto& v : j.at("levels"))
                c.levels.push_back(v.is_string() ? v.get<std::string>() : format_number(v.get<double>()));
        }
        take("sample", c.sample);
        take("thermo_sample", c.thermo_sample);
        if (j.contains("tol")) c.tol = j.at("tol").get<double>();
        take("threads", c.threads);
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("config file: ") + ex.what());
    }
}

inline std::optional<std::string> config_path(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- output

struct Output {
    std::ostream& out;
    const RunConfig& config;

    void write(const std::string& text, const std::string& path) const {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file " + path);
        f << text;
    }

    void emit_table(const Table& t) const {
        if (config.format == "json") {
            write(to_json(t).dump(2) + "\n", config.out);
        } else {
            std::ostringstream s;
            write_csv(s, t);
            write(s.str(), config.out);
        }
    }

    void emit_json(const nlohmann::json& j) const { write(j.dump(2) + "\n", config.out); }

    /// <stem>.<suffix>.csv next to the main output.
    std::string sibling(const std::string& suffix) const {
        std::filesystem::path p(config.out);
        return (p.parent_path() / (p.stem().string() + "." + suffix + ".csv")).string();
    }
};

inline nlohmann::json polylines_json(const std::vector<Polyline>& lines) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : lines) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : l.points) pts.push_back({p.x, p.y});
        arr.push_back({{"level", l.level}, {"points", std::move(pts)}});
    }
    return arr;
}

// --------------------------------------------------------------- commands

inline int cmd_spectrum(const RunConfig& c, const Output& o) {
    if (c.format == "svg") throw UsageError("spectrum supports csv and json only");
    const Spectrum s = analytic_spectrum(c.params(), {c.b, c.e});
    const std::array<const char*, 6> state{"F+", "F-", "QF+", "QF+*", "QF-", "QF-*"};
    Table t{{"level", "state", "eps_over_J", "abs_c_plus", "abs_c_minus", "phi_rad"}, {}};
    for (std::size_t i = 0; i < 6; ++i) {
        double cp = 1.0, cm = 0.0, phi = 0.0;
        if (i == 2 || i == 3) cp = s.c1_plus, cm = s.c1_minus, phi = s.phi;
        if (i == 4 || i == 5) cp = s.c2_plus, cm = s.c2_minus, phi = s.phi;
        if (i == 3 || i == 5) std::swap(cp, cm);
        t.add_row({static_cast<double>(i + 1), std::string(state[i]), s.eps[i] / c.j, cp, cm, phi});
    }
    o.emit_table(t);
    return kSuccess;
}

inline int cmd_phase_diagram(const RunConfig& c, const Output& o) {
    const AxisRange er = range_or(c.e_range, "--e-range", {0.0, 4.0, 201});
    const AxisRange br = range_or(c.b_range, "--b-range", {0.0, 3.0, 201});
    const PhaseDiagram pd = phase_diagram(c.params(), er, br, c.threads);

    Table labels{{"e_over_J", "b_over_J", "phase"}, {}};
    for (std::size_t ib = 0; ib < pd.b_axis.size(); ++ib)
        for (std::size_t ie = 0; ie < pd.e_axis.size(); ++ie)
            labels.rows.push_back({pd.e_axis[ie], pd.b_axis[ib], pd.at(ie, ib).name()});
    Table bounds{{"boundary", "segment", "e_over_J", "b_over_J"}, {}};
    for (std::size_t k = 0; k < pd.boundaries.size(); ++k)
        for (const auto& [e, b] : pd.boundaries[k].samples)
            bounds.rows.push_back(
                {std::string(boundary_name(pd.boundaries[k].kind)), static_cast<double>(k), e, b});

    if (c.format == "svg") {
        o.write(svg::phase_map(pd), c.out);
    } else if (c.format == "json") {
        nlohmann::json j{{"labels", to_json(labels)},
                         {"boundaries", to_json(bounds)},
                         {"phases", pd.distinct_labels()}};
        o.emit_json(j);
    } else {
        std::ostringstream s;
        write_csv(s, labels);
        o.write(s.str(), c.out);
        if (!c.out.empty()) {
            std::ostringstream sb;
            write_csv(sb, bounds);
            o.write(sb.str(), o.sibling("boundaries"));
        }
    }
    return kSuccess;
}

inline int cmd_thermo(const RunConfig& c, const Output& o) {
    const FieldAxis axis = parse_axis(c.axis, "--axis");
    const AxisRange r = axis == FieldAxis::Magnetic ? range_or(c.b_range, "--b-range", {0.0, 3.0, kDefaultCurveResolution})
                                                    : range_or(c.e_range, "--e-range", {0.0, 3.0, kDefaultCurveResolution});
    if (c.t.empty()) throw UsageError("--t needs at least one temperature");
    const ModelParams p = c.params();
    const double fixed = axis == FieldAxis::Magnetic ? c.e : c.b;
    Table t{{"t_over_J", "b_over_J", "e_over_J", "m_over_ms", "p_over_mu", "s_over_kB"}, {}};
    std::vector<svg::Series> series;
    for (double temp : c.t) {
        if (!(temp > 0.0)) throw NonPositiveTemperature(temp);
        svg::Series m{"m/ms t=" + format_number(temp), {}}, pol{"P/mu t=" + format_number(temp), {}},
            s{"S t=" + format_number(temp), {}};
        for (double x : r.values()) {
            const Fields f = fields_along(axis, x, fixed);
            const ThermoPoint tp = thermo_point(p, f, temp);
            t.rows.push_back({temp, f.b, f.e, tp.m_over_ms, tp.p / p.mu, tp.s});
            m.points.push_back({x, tp.m_over_ms});
            pol.points.push_back({x, tp.p / p.mu});
            s.points.push_back({x, tp.s});
        }
        series.push_back(std::move(m));
        series.push_back(std::move(pol));
        series.push_back(std::move(s));
    }
    if (c.format == "svg")
        o.write(svg::line_plot(series, std::string(axis_name(axis)) + "_over_J", "value"), c.out);
    else
        o.emit_table(t);
    return kSuccess;
}

inline int emit_grid(const RunConfig& c, const Output& o, const Grid2D& g, const std::vector<double>& levels,
                     const std::vector<double>& highlight) {
    if (c.format == "csv") {
        o.emit_table(grid_table(g));
        return kSuccess;
    }
    const auto lines = extract_isolines(g, levels);
    if (c.format == "svg") {
        o.write(svg::heatmap(g, lines, highlight), c.out);
    } else {
        o.emit_json({{"grid", to_json(grid_table(g))}, {"isolines", polylines_json(lines)}});
    }
    return kSuccess;
}

inline int cmd_entropy_map(const RunConfig& c, const Output& o) {
    const FieldAxis axis = parse_axis(c.axis, "--axis");
    const AxisRange fr = axis == FieldAxis::Magnetic ? range_or(c.b_range, "--b-range", {0.0, 3.0, kDefaultMapResolution})
                                                     : range_or(c.e_range, "--e-range", {0.0, 3.0, kDefaultMapResolution});
    const AxisRange tr = range_or(c.t_range, "--t-range", {0.01, 3.0, kDefaultMapResolution});
    const double fixed = axis == FieldAxis::Magnetic ? c.e : c.b;
    const Grid2D g = entropy_map(c.params(), axis, fixed, fr, tr, c.threads);
    const auto levels = parse_levels(c.levels, {0.25, 0.5, std::numbers::ln2, 1.0, std::log(3.0), 1.25, 1.5});
    return emit_grid(c, o, g, levels, {std::numbers::ln2});
}

inline int cmd_delta_s(const RunConfig& c, const Output& o) {
    const FieldAxis mode = parse_axis(c.mode, "--mode");
    const AxisRange sr = range_or(c.span_range, "--span-range", {0.0, 3.0, kDefaultMapResolution});
    const AxisRange tr = range_or(c.t_range, "--t-range", {0.01, 3.0, kDefaultMapResolution});
    const double fixed = mode == FieldAxis::Magnetic ? c.e : c.b;
    const Grid2D g = delta_s_map(c.params(), mode, fixed, sr, tr, c.threads);
    const auto levels = parse_levels(c.levels, {0.0});
    return emit_grid(c, o, g, levels, {0.0});
}

inline int cmd_isentrope(const RunConfig& c, const Output& o) {
    const FieldAxis axis = parse_axis(c.axis, "--axis");
    const AxisRange r = axis == FieldAxis::Magnetic ? range_or(c.b_range, "--b-range", {0.0, 3.0, kDefaultCurveResolution + 1})
                                                    : range_or(c.e_range, "--e-range", {0.0, 3.0, kDefaultCurveResolution + 1});
    const auto targets = parse_levels(c.levels, {std::numbers::ln2});
    const double fixed = axis == FieldAxis::Magnetic ? c.e : c.b;
    const auto grid = r.values();
    const std::string field = std::string(axis_name(axis)) + "_over_J";
    Table t{{"s_over_kB", field, "t_over_J"}, {}};
    nlohmann::json gaps = nlohmann::json::object();
    std::vector<svg::Series> series;
    for (double target : targets) {
        const Isentrope is = isentrope(c.params(), axis, fixed, target, grid);
        svg::Series s{"S=" + format_number(target), {}};
        for (const auto& [x, temp] : is.samples) {
            t.rows.push_back({target, x, temp});
            s.points.push_back({x, temp});
        }
        gaps[format_number(target)] = is.gaps;
        series.push_back(std::move(s));
    }
    if (c.format == "svg")
        o.write(svg::line_plot(series, field, "t_over_J"), c.out);
    else if (c.format == "json")
        o.emit_json({{"isentropes", to_json(t)}, {"gaps", gaps}});
    else
        o.emit_table(t);
    return kSuccess;
}

inline int cmd_rc(const RunConfig& c, const Output& o) {
    const FieldAxis mode = parse_axis(c.mode, "--mode");
    const AxisRange sr = range_or(c.span_range, "--span-range", {0.5, 3.0, 11});
    const AxisRange tr = range_or(c.t_range, "--t-range", {0.005, 3.0, 600});
    if (!(tr.lo > 0.0)) throw NonPositiveTemperature(tr.lo);
    const double fixed = mode == FieldAxis::Magnetic ? c.e : c.b;
    std::optional<CaloricEffect> forced;
    if (c.effect == "conventional")
        forced = CaloricEffect::Conventional;
    else if (c.effect == "inverse")
        forced = CaloricEffect::Inverse;
    else if (c.effect != "auto")
        throw UsageError("--effect must be auto, conventional or inverse");

    const auto temps = tr.values();
    Table t{{std::string("d") + axis_name(mode) + "_over_J", "effect", "rc_abs", "t1_over_J", "t2_over_J",
             "clamped_t1", "clamped_t2", "peak_t_over_J", "peak_minus_ds"},
            {}};
    svg::Series series{"rc_abs", {}};
    for (double span : sr.values()) {
        const CaloricCurve curve = caloric_curve(c.params(), mode, fixed, span, temps);
        CaloricEffect effect = CaloricEffect::Conventional;
        if (forced) {
            effect = *forced;
        } else {
            double best = 0.0;
            for (const auto& [temp, v] : curve.samples)
                if (std::abs(v) > std::abs(best)) best = v;
            effect = best < 0.0 ? CaloricEffect::Inverse : CaloricEffect::Conventional;
        }
        try {
            const RcResult r = refrigerant_capacity(curve, effect, c.fixed_t2);
            t.rows.push_back({span, std::string(caloric_name(effect)), r.rc_abs, r.t1, r.t2,
                              r.clamped_t1 ? 1.0 : 0.0, r.clamped_t2 ? 1.0 : 0.0, r.peak_t, r.peak_value});
            series.points.push_back({span, r.rc_abs});
        } catch (const NoExtremumOfRequestedSign&) {
            const double nan = std::nan("");
            t.rows.push_back({span, std::string("null"), nan, nan, nan, nan, nan, nan, nan});
        }
    }
    if (c.format == "svg")
        o.write(svg::line_plot(std::vector<svg::Series>{series}, t.columns[0], "rc_abs"), c.out);
    else
        o.emit_table(t);
    return kSuccess;
}

inline int cmd_validate(const RunConfig& c, const Output& o) {
    if (c.format == "svg") throw UsageError("validate supports csv and json only");
    ValidationOptions opt;
    opt.seed = c.seed;
    opt.sample = c.sample;
    opt.thermo_sample = std::min(c.thermo_sample, c.sample);
    opt.tolerance = c.tol;
    opt.keep_deviations = c.sample <= 50;
    const ValidationReport report = run_validation(opt);

    if (c.format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& ch : report.checks) {
            nlohmann::json item{{"name", ch.name},
                                {"max_deviation", ch.max_deviation},
                                {"tolerance", ch.tolerance},
                                {"samples", ch.samples},
                                {"passed", ch.passed}};
            if (opt.keep_deviations) item["deviations"] = ch.deviations;
            checks.push_back(std::move(item));
        }
        o.emit_json({{"seed", report.seed}, {"passed", report.passed()}, {"checks", checks}, {"notes", report.notes}});
    } else {
        Table t{{"check", "max_deviation", "tolerance", "samples", "passed"}, {}};
        if (opt.keep_deviations) t.columns.push_back("deviations");
        for (const auto& ch : report.checks) {
            std::vector<Cell> row{ch.name, ch.max_deviation, ch.tolerance, static_cast<double>(ch.samples),
                                  std::string(ch.passed ? "pass" : "fail")};
            if (opt.keep_deviations) {
                std::string d;
                for (std::size_t i = 0; i < ch.deviations.size(); ++i)
                    d += (i ? ";" : "") + format_number(ch.deviations[i]);
                row.emplace_back(d);
            }
            t.rows.push_back(std::move(row));
        }
        o.emit_table(t);
    }
    return report.passed() ? kSuccess : kValidationFailure;
}

// ------------------------------------------------------------------ entry

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        if (const auto path = config_path(args)) {
            std::ifstream f(*path);
            if (!f) throw UsageError("cannot read config file " + *path);
            nlohmann::json j;
            try {
                f >> j;
            } catch (const nlohmann::json::exception& ex) {
                throw UsageError(std::string("config file: ") + ex.what());
            }
            apply_json(cfg, j);
        }
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    }

    CLI::App app{"Exact thermodynamics of a mixed spin-(1/2,1) Heisenberg dimer in magnetic and electric fields",
                 "mixdimer"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string config_file;
    app.add_option("--config", config_file, "JSON file with default values for any flag");
    app.add_option("--j", cfg.j, "exchange J");
    app.add_option("--delta", cfg.delta, "XXZ anisotropy");
    app.add_option("--d-anis", cfg.d_anis, "single-ion anisotropy D");
    app.add_option("--g1", cfg.g1, "Lande factor of the spin-1/2");
    app.add_option("--g2", cfg.g2, "Lande factor of the spin-1");
    app.add_option("--mu", cfg.mu, "electric dipole coupling");
    app.add_option("--b", cfg.b, "magnetic field mu_B B in units of J");
    app.add_option("--e", cfg.e, "electric field energy E in units of J");
    app.add_option("--t", cfg.t, "temperature(s) k_B T in units of J")->delimiter(',');
    app.add_option("--b-range", cfg.b_range, "lo:hi:n");
    app.add_option("--e-range", cfg.e_range, "lo:hi:n");
    app.add_option("--t-range", cfg.t_range, "lo:hi:n");
    app.add_option("--span-range", cfg.span_range, "lo:hi:n");
    app.add_option("--format", cfg.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--out", cfg.out, "output path (stdout if omitted)");
    app.add_option("--seed", cfg.seed, "random seed for validate");
    app.add_option("--fixed-t2", cfg.fixed_t2, "fixed upper temperature for rc");
    app.add_option("--axis", cfg.axis, "swept field: b or e");
    app.add_option("--mode", cfg.mode, "caloric mode: b (magnetic) or e (electric)");
    app.add_option("--effect", cfg.effect, "auto, conventional or inverse");
    app.add_option("--levels", cfg.levels, "isoline or isentrope levels, e.g. ln2,0.5")->delimiter(',');
    app.add_option("--target", cfg.levels, "alias of --levels")->delimiter(',');
    app.add_option("--sample", cfg.sample, "validate: random sample size");
    app.add_option("--thermo-sample", cfg.thermo_sample, "validate: tuples used for thermodynamic checks");
    app.add_option("--tol", cfg.tol, "validate: override every tolerance");
    app.add_option("--threads", cfg.threads, "worker threads for sweeps (0 = hardware)");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"spectrum", "six eigenvalues and mixing coefficients"},
        {"phase-diagram", "ground-state labels over (e, b) and boundary curves"},
        {"thermo", "m/m_s, P/mu and S along a field sweep"},
        {"entropy-map", "entropy over (field, T) with isolines"},
        {"delta-s", "isothermal entropy change over (span, T)"},
        {"isentrope", "T(field) at constant entropy"},
        {"rc", "refrigerant capacity versus field span"},
        {"validate", "cross-check closed forms against the numeric oracle"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        validate(cfg.params());
        validate(Fields{cfg.b, cfg.e});
        const Output o{out, cfg};
        if (cfg.command == "spectrum") return cmd_spectrum(cfg, o);
        if (cfg.command == "phase-diagram") return cmd_phase_diagram(cfg, o);
        if (cfg.command == "thermo") return cmd_thermo(cfg, o);
        if (cfg.command == "entropy-map") return cmd_entropy_map(cfg, o);
        if (cfg.command == "delta-s") return cmd_delta_s(cfg, o);
        if (cfg.command == "isentrope") return cmd_isentrope(cfg, o);
        if (cfg.command == "rc") return cmd_rc(cfg, o);
        if (cfg.command == "validate") return cmd_validate(cfg, o);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace mixdimer::cli

#endif
