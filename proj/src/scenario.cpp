#include "qdeph/scenario.hpp"

#include "qdeph/csv.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace qdeph {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

const json& require_object(const json& j, const std::string& field) {
    if (!j.is_object()) throw ConfigError(field, "expected an object");
    return j;
}

void reject_unknown_keys(const json& j, const std::string& field, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items()) {
        if (!keys.contains(k)) throw ConfigError(join(field, k), "unknown key");
    }
}

const json& member(const json& j, const std::string& field, const char* key) {
    if (!j.contains(key)) throw ConfigError(join(field, key), "missing");
    return j.at(key);
}

double number(const json& j, const std::string& field, const char* key) {
    const json& v = member(j, field, key);
    if (!v.is_number()) throw ConfigError(join(field, key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(join(field, key), "must be finite");
    return x;
}

std::string string_member(const json& j, const std::string& field, const char* key) {
    const json& v = member(j, field, key);
    if (!v.is_string()) throw ConfigError(join(field, key), "expected a string");
    return v.get<std::string>();
}

// Runs a module constructor and re-labels its validation failure with the field.
template <class F>
auto with_field(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ConfigError(field, e.what());
    }
}

BlochDirection parse_direction(const json& j, const std::string& field, double unit) {
    require_object(j, field);
    reject_unknown_keys(j, field, {"theta", "phi"});
    const double theta = number(j, field, "theta") * unit;
    const double phi = j.contains("phi") ? number(j, field, "phi") * unit : 0.0;
    return with_field(field, [&] { return BlochDirection(theta, phi); });
}

cplx parse_complex(const json& j, const std::string& field) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ConfigError(field, "expected a number or a [re, im] pair");
}

PreparationScheme parse_scheme(const json& j) {
    const std::string f = "scheme";
    require_object(j, f);
    const std::string kind = string_member(j, f, "kind");
    double unit = 1.0;
    if (j.contains("unit")) {
        const std::string u = string_member(j, f, "unit");
        if (u == "deg") unit = kPi / 180.0;
        else if (u != "rad") throw ConfigError(join(f, "unit"), "expected \"rad\" or \"deg\"");
    }
    auto dir = [&](const char* key) { return parse_direction(member(j, f, key), join(f, key), unit); };

    if (kind == "selective") {
        reject_unknown_keys(j, f, {"kind", "unit", "state", "amplitudes"});
        if (j.contains("state") == j.contains("amplitudes"))
            throw ConfigError(f, "selective scheme needs exactly one of 'state' or 'amplitudes'");
        if (j.contains("state")) return scheme::selective(dir("state"));
        const std::string fa = join(f, "amplitudes");
        const json& a = require_object(j.at("amplitudes"), fa);
        reject_unknown_keys(a, fa, {"c1", "c0"});
        const cplx c1 = parse_complex(member(a, fa, "c1"), join(fa, "c1"));
        const cplx c0 = parse_complex(member(a, fa, "c0"), join(fa, "c0"));
        return with_field(fa, [&] { return scheme::selective(QubitState(c1, c0)); });
    }
    if (kind == "i") {
        reject_unknown_keys(j, f, {"kind", "unit", "a"});
        return scheme::i(dir("a"));
    }
    if (kind == "ii" || kind == "iii" || kind == "iii_prime") {
        reject_unknown_keys(j, f, {"kind", "unit", "a", "b"});
        const BlochDirection a = dir("a");
        const BlochDirection b = dir("b");
        if (kind == "ii") return scheme::ii(a, b);
        if (kind == "iii") return scheme::iii(a, b);
        return scheme::iii_prime(a, b);
    }
    if (kind == "general") {
        reject_unknown_keys(j, f, {"kind", "unit", "a", "b1", "b2"});
        return scheme::general(dir("a"), dir("b1"), dir("b2"));
    }
    throw ConfigError(join(f, "kind"), "unknown scheme kind '" + kind +
                                           "' (expected selective, i, ii, iii, iii_prime, general)");
}

BathSpec parse_bath(const json& j) {
    const std::string f = "bath";
    require_object(j, f);
    const std::string kind = string_member(j, f, "kind");
    if (kind == "ohmic_family") {
        reject_unknown_keys(j, f, {"kind", "s", "lambda"});
        const double s = j.contains("s") ? number(j, f, "s") : 1.0;
        const double lambda = number(j, f, "lambda");
        if (!(s > 0.0)) throw ConfigError(join(f, "s"), "must be > 0");
        if (!(lambda >= 0.0)) throw ConfigError(join(f, "lambda"), "must be >= 0");
        return BathSpec::ohmic(s, lambda);
    }
    if (kind == "discrete") {
        reject_unknown_keys(j, f, {"kind", "modes"});
        const json& modes = member(j, f, "modes");
        if (!modes.is_array() || modes.empty()) throw ConfigError(join(f, "modes"), "expected a non-empty array");
        std::vector<DiscreteMode> out;
        for (std::size_t k = 0; k < modes.size(); ++k) {
            const std::string fm = join(f, "modes[" + std::to_string(k) + "]");
            require_object(modes[k], fm);
            reject_unknown_keys(modes[k], fm, {"omega", "g2"});
            const double w = number(modes[k], fm, "omega");
            const double g2 = number(modes[k], fm, "g2");
            if (!(w > 0.0)) throw ConfigError(join(fm, "omega"), "must be > 0");
            if (!(g2 >= 0.0)) throw ConfigError(join(fm, "g2"), "must be >= 0");
            out.push_back({w, g2});
        }
        return BathSpec::discrete(std::move(out));
    }
    throw ConfigError(join(f, "kind"), "unknown bath kind '" + kind + "' (expected ohmic_family, discrete)");
}

GridSpec parse_grid(const json& j) {
    const std::string f = "grid";
    require_object(j, f);
    reject_unknown_keys(j, f, {"t_max_omega_c", "n_points", "spacing", "t_min_omega_c"});
    GridSpec g;
    g.t_max = number(j, f, "t_max_omega_c");
    if (!(g.t_max > 0.0)) throw ConfigError(join(f, "t_max_omega_c"), "must be > 0");
    const json& n = member(j, f, "n_points");
    if (!n.is_number_integer() || n.get<long long>() < 2)
        throw ConfigError(join(f, "n_points"), "must be an integer >= 2");
    g.n_points = static_cast<int>(n.get<long long>());
    const std::string spacing = j.contains("spacing") ? string_member(j, f, "spacing") : "linear";
    if (spacing == "linear") {
        g.spacing = Spacing::Linear;
        if (j.contains("t_min_omega_c"))
            throw ConfigError(join(f, "t_min_omega_c"), "only meaningful with log spacing");
    } else if (spacing == "log") {
        g.spacing = Spacing::Log;
        g.t_min = j.contains("t_min_omega_c") ? number(j, f, "t_min_omega_c") : 1e-5 * g.t_max;
        if (!(g.t_min > 0.0 && g.t_min < g.t_max))
            throw ConfigError(join(f, "t_min_omega_c"), "must satisfy 0 < t_min < t_max");
    } else {
        throw ConfigError(join(f, "spacing"), "expected \"linear\" or \"log\"");
    }
    return g;
}

json direction_json(const BlochDirection& d) { return {{"theta", d.theta()}, {"phi", d.phi()}}; }

json scheme_json(const PreparationScheme& s) {
    if (const auto* sel = std::get_if<Selective>(&s)) {
        const cplx c1 = sel->psi.c1();
        const cplx c0 = sel->psi.c0();
        return {{"kind", "selective"},
                {"amplitudes", {{"c1", {c1.real(), c1.imag()}}, {"c0", {c0.real(), c0.imag()}}}}};
    }
    const auto& ns = std::get<NonSelective>(s);
    json j = {{"kind", std::string(to_string(ns.kind))}, {"unit", "rad"}, {"a", direction_json(ns.a)}};
    switch (ns.kind) {
        case SchemeKind::I: break;
        case SchemeKind::II:
        case SchemeKind::III:
        case SchemeKind::IIIPrime: j["b"] = direction_json(ns.b1); break;
        case SchemeKind::General:
            j["b1"] = direction_json(ns.b1);
            j["b2"] = direction_json(ns.b2);
            break;
    }
    return j;
}

json bath_json(const BathSpec& b) {
    if (const auto* o = std::get_if<OhmicFamily>(&b.model()))
        return {{"kind", "ohmic_family"}, {"s", o->s}, {"lambda", o->lambda}};
    json modes = json::array();
    for (const auto& m : std::get<DiscreteBath>(b.model()).modes) modes.push_back({{"omega", m.omega}, {"g2", m.g2}});
    return {{"kind", "discrete"}, {"modes", modes}};
}

void write_json_file(const std::filesystem::path& p, const json& j) {
    std::ofstream os(p);
    if (!os) throw ComputationError("cannot write " + p.string());
    os << j.dump(2) << '\n';
}

ScenarioConfig ohmic_curve(PreparationScheme s, double lambda, double beta_omega0, double ratio) {
    ScenarioConfig c;
    c.scheme = std::move(s);
    c.bath = BathSpec::ohmic(1.0, lambda);
    c.qubit = {beta_omega0, ratio};
    c.grid = default_figure_grid();
    return c;
}

// Shared by the entropy/purity pairs: theta_a = 0, theta_1 = pi/4, omega0/omega_c = 0.1.
std::vector<PresetCurve> purity_family(const std::vector<double>& lambdas, const std::vector<double>& betas,
                                       bool vary_lambda) {
    const BlochDirection a(0.0, 0.0);
    const BlochDirection b(kPi / 4.0, 0.0);
    std::vector<PresetCurve> curves;
    const auto& values = vary_lambda ? lambdas : betas;
    for (const char* kind : {"ii", "iii_prime"}) {
        for (const double v : values) {
            const double lambda = vary_lambda ? v : lambdas.front();
            const double beta = vary_lambda ? betas.front() : v;
            PreparationScheme s = std::string(kind) == "ii" ? scheme::ii(a, b) : scheme::iii_prime(a, b);
            const std::string label = std::string("scheme-") + (std::string(kind) == "ii" ? "ii" : "iii-prime") +
                                      (vary_lambda ? "_lambda-" : "_beta-omega0-") + format_short(v);
            curves.push_back({label, ohmic_curve(std::move(s), lambda, beta, 0.1)});
        }
    }
    return curves;
}

}  // namespace

std::vector<double> GridSpec::times() const {
    std::vector<double> t(static_cast<std::size_t>(n_points));
    if (spacing == Spacing::Linear) {
        for (int i = 0; i < n_points; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (n_points - 1);
        return t;
    }
    t[0] = 0.0;
    const int m = n_points - 1;
    const double lo = std::log(t_min);
    const double hi = std::log(t_max);
    for (int i = 0; i < m; ++i)
        t[static_cast<std::size_t>(i + 1)] = m == 1 ? t_max : std::exp(lo + (hi - lo) * i / (m - 1));
    if (m > 1) t[1] = t_min;
    t.back() = t_max;
    return t;
}

ScenarioConfig parse_config(const json& j) {
    require_object(j, "<root>");
    reject_unknown_keys(j, "", {"scheme", "bath", "temperature", "ratio", "grid"});
    ScenarioConfig c;
    c.scheme = parse_scheme(member(j, "", "scheme"));
    c.bath = parse_bath(member(j, "", "bath"));

    const json& temp = require_object(member(j, "", "temperature"), "temperature");
    reject_unknown_keys(temp, "temperature", {"beta_omega0"});
    c.qubit.beta_omega0 = number(temp, "temperature", "beta_omega0");
    if (!(c.qubit.beta_omega0 > 0.0)) throw ConfigError("temperature.beta_omega0", "must be > 0");

    const json& ratio = require_object(member(j, "", "ratio"), "ratio");
    reject_unknown_keys(ratio, "ratio", {"omega0_over_omegac"});
    c.qubit.omega0_over_omegac = number(ratio, "ratio", "omega0_over_omegac");
    if (!(c.qubit.omega0_over_omegac > 0.0)) throw ConfigError("ratio.omega0_over_omegac", "must be > 0");

    c.grid = parse_grid(member(j, "", "grid"));
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open config " + path.string());
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        throw ValidationError("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

json to_json(const ScenarioConfig& c) {
    json grid = {{"t_max_omega_c", c.grid.t_max},
                 {"n_points", c.grid.n_points},
                 {"spacing", c.grid.spacing == Spacing::Log ? "log" : "linear"}};
    if (c.grid.spacing == Spacing::Log) grid["t_min_omega_c"] = c.grid.t_min;
    return {{"scheme", scheme_json(c.scheme)},
            {"bath", bath_json(c.bath)},
            {"temperature", {{"beta_omega0", c.qubit.beta_omega0}}},
            {"ratio", {{"omega0_over_omegac", c.qubit.omega0_over_omegac}}},
            {"grid", grid}};
}

GridSpec default_figure_grid() { return {1e3, 400, Spacing::Log, 1e-2}; }

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5"}; }

FigurePreset figure_preset(const std::string& name) {
    if (name == "fig1") {
        // The reduced coherence of scheme ii does not depend on a, b; any non-degenerate pair will do.
        FigurePreset p{name, "reduced coherence, scheme ii, beta omega0 = 0.1, omega0/omega_c = 0.01", {}};
        for (const double lambda : {0.5, 1.0, 2.0}) {
            p.curves.push_back({"lambda-" + format_short(lambda),
                                ohmic_curve(scheme::ii(BlochDirection(0.0, 0.0), BlochDirection(kPi / 2.0, 0.0)),
                                            lambda, 0.1, 0.01)});
        }
        return p;
    }
    if (name == "fig2" || name == "fig3") {
        return {name,
                std::string(name == "fig2" ? "entropy" : "purity") +
                    " vs coupling, schemes ii and iii', beta omega0 = 1, omega0/omega_c = 0.1",
                purity_family({2.0, 4.0, 6.0}, {1.0}, true)};
    }
    if (name == "fig4" || name == "fig5") {
        return {name,
                std::string(name == "fig4" ? "entropy" : "purity") +
                    " vs temperature, schemes ii and iii', lambda = 6, omega0/omega_c = 0.1",
                purity_family({6.0}, {0.01, 0.1, 1.0}, false)};
    }
    std::string names;
    for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
    throw ValidationError("unknown preset '" + name + "' (available: " + names + ")");
}

DephasingTrajectory run_config(const ScenarioConfig& c) {
    const std::vector<double> grid = c.grid.times();
    return coherence_trajectory(c.scheme, c.bath, c.qubit, grid);
}

void run_trace(const std::filesystem::path& config_path, const std::filesystem::path& out_csv) {
    const ScenarioConfig c = load_config(config_path);
    const DephasingTrajectory traj = run_config(c);
    std::ofstream os(out_csv);
    if (!os) throw ComputationError("cannot write " + out_csv.string());
    write_trajectory_csv(os, traj);
}

std::vector<std::filesystem::path> run_figure(const std::string& preset, const std::filesystem::path& out_dir) {
    const FigurePreset p = figure_preset(preset);
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;
    for (const auto& curve : p.curves) {
        const DephasingTrajectory traj = run_config(curve.config);
        const auto path = out_dir / (p.name + "_" + curve.label + ".csv");
        std::ofstream os(path);
        if (!os) throw ComputationError("cannot write " + path.string());
        write_trajectory_csv(os, traj);
        written.push_back(path);
    }
    return written;
}

std::vector<std::filesystem::path> dump_figure_configs(const std::string& preset,
                                                       const std::filesystem::path& out_dir) {
    const FigurePreset p = figure_preset(preset);
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;
    for (const auto& curve : p.curves) {
        const auto path = out_dir / (p.name + "_" + curve.label + ".json");
        write_json_file(path, to_json(curve.config));
        written.push_back(path);
    }
    return written;
}

}  // namespace qdeph
