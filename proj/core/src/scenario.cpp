#include "qcorr/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace qcorr {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

double get_num(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
    if (!j.at(key).is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
    return j.at(key).get<double>();
}

double get_num_or(const json& j, const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

InitialStateSpec parse_state(const json& j) {
    require_keys(j, {"kind", "alpha", "c", "beta", "n"}, "initial_state");
    InitialStateSpec s;
    std::string kind = j.value("kind", "");
    if (kind == "werner") {
        s.kind = InitialStateKind::Werner;
        s.alpha = get_num(j, "alpha", "initial_state(werner)");
    } else if (kind == "bell_diagonal") {
        s.kind = InitialStateKind::BellDiagonal;
        auto c = j.value("c", std::vector<double>{});
        if (c.size() != 3) throw ConfigError("initial_state(bell_diagonal): 'c' must have 3 entries");
        s.bell_c = Vec3(c[0], c[1], c[2]);
    } else if (kind == "bell_beta") {
        s.kind = InitialStateKind::BellBeta;
        s.beta = get_num(j, "beta", "initial_state(bell_beta)");
    } else if (kind == "dqc1") {
        s.kind = InitialStateKind::DQC1;
    } else if (kind == "raw") {
        s.kind = InitialStateKind::Raw;
        auto n = j.value("n", std::vector<double>{});
        if (n.size() != 15) throw ConfigError("initial_state(raw): 'n' must have 15 entries");
        for (int k = 0; k < 15; ++k) s.raw.v[k] = n[k];
    } else {
        throw ConfigError("initial_state: unknown kind '" + kind + "'");
    }
    return s;
}

HamiltonianSpec parse_hamiltonian(const json& j) {
    require_keys(j, {"kind", "J", "J_xy", "J_yx", "B_z"}, "hamiltonian");
    std::string kind = j.value("kind", "");
    double bz = get_num_or(j, "B_z", 0.0);
    if (kind == "ising") return HamiltonianSpec::ising(get_num(j, "J", "hamiltonian(ising)"), bz);
    if (kind == "heisenberg") {
        if (bz != 0.0) throw ConfigError("hamiltonian(heisenberg): B_z not supported here");
        return HamiltonianSpec::heisenberg(get_num(j, "J", "hamiltonian(heisenberg)"));
    }
    if (kind == "xy")
        return HamiltonianSpec::xy(get_num(j, "J_xy", "hamiltonian(xy)"),
                                   get_num(j, "J_yx", "hamiltonian(xy)"), bz);
    if (kind == "xy_antisym")
        return HamiltonianSpec::xy_antisym(get_num(j, "J_yx", "hamiltonian(xy_antisym)"), bz);
    throw ConfigError("hamiltonian: unknown kind '" + kind + "'");
}

NoiseSpec parse_noise(const json& j) {
    require_keys(j, {"mode", "g_z", "gamma", "xi"}, "noise");
    NoiseSpec n;
    std::string mode = j.value("mode", "");
    if (mode == "single_on_a") n.mode = NoiseMode::SingleOnA;
    else if (mode == "two_uncorrelated") n.mode = NoiseMode::TwoUncorrelated;
    else if (mode == "correlated") n.mode = NoiseMode::Correlated;
    else throw ConfigError("noise: unknown mode '" + mode + "'");
    n.g_z = get_num(j, "g_z", "noise");
    n.gamma = get_num(j, "gamma", "noise");
    if (n.gamma <= 0) throw ConfigError("noise: gamma must be > 0");
    n.xi = get_num_or(j, "xi", 1.0);
    if (n.xi <= 0) throw ConfigError("noise: xi must be > 0");
    if (n.mode != NoiseMode::TwoUncorrelated && j.contains("xi"))
        throw ConfigError("noise: xi only applies to two_uncorrelated");
    return n;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config: invalid JSON");
    return j;
}

ScenarioConfig parse_scenario_json(const json& j) {
    require_keys(j, {"version", "seed", "initial_state", "hamiltonian", "noise", "time", "sweep"},
                 "config");
    if (!j.contains("version") || j.at("version") != 1)
        throw ConfigError("config: missing or unsupported schema version (expected 1)");
    ScenarioConfig cfg;
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (!j.contains("initial_state")) throw ConfigError("config: missing 'initial_state'");
    cfg.state = parse_state(j.at("initial_state"));
    if (!j.contains("hamiltonian")) throw ConfigError("config: missing 'hamiltonian'");
    cfg.hamiltonian = parse_hamiltonian(j.at("hamiltonian"));
    if (j.contains("noise")) cfg.noise = parse_noise(j.at("noise"));
    if (j.contains("time")) {
        const json& t = j.at("time");
        require_keys(t, {"horizon", "samples"}, "time");
        cfg.time.horizon = get_num(t, "horizon", "time");
        cfg.time.samples = int(get_num(t, "samples", "time"));
    }
    if (cfg.time.horizon <= 0 || cfg.time.samples < 16)
        throw ConfigError("time: horizon must be > 0 and samples >= 16");
    return cfg;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json zeros_json(const ZeroSet& z) {
    json out;
    out["intervals"] = json::array();
    for (const auto& iv : z.intervals) out["intervals"].push_back({iv.t_begin, iv.t_end});
    out["points"] = z.points;
    out["decay_tail"] = z.decay_tail;
    return out;
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& text) {
    json j = parse_text(text);
    if (j.contains("sweep")) throw ConfigError("config: 'sweep' key requires the sweep command");
    return parse_scenario_json(j);
}

InitialStateSpec parse_state_config(const std::string& text) {
    json j = parse_text(text);
    require_keys(j, {"version", "state"}, "config");
    if (!j.contains("version") || j.at("version") != 1)
        throw ConfigError("config: missing or unsupported schema version (expected 1)");
    if (!j.contains("state")) throw ConfigError("config: missing 'state'");
    return parse_state(j.at("state"));
}

Trajectory run_trajectory(const ScenarioConfig& cfg) {
    Trajectory traj;
    const int n = cfg.time.samples;
    const double dt = cfg.time.horizon / double(n - 1);
    traj.t.resize(n);
    traj.n.resize(n);

    BlochVector n0 = cfg.state.build();
    if (cfg.noise) {
        QuasiHamiltonian hq = build_quasi_hamiltonian(cfg.hamiltonian, *cfg.noise);
        Eigen::MatrixXd step = rtn_step_matrix(hq, dt);
        Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(step.rows(), step.cols());
        for (int k = 0; k < n; ++k) {
            traj.t[k] = k * dt;
            traj.n[k] = rtn_apply(acc, hq.fluctuator_states, n0);
            acc = step * acc;
        }
    } else {
        DensityMatrix H = build_hamiltonian(cfg.hamiltonian);
        for (int k = 0; k < n; ++k) {
            traj.t[k] = k * dt;
            traj.n[k] = unitary_propagate(H, n0, traj.t[k]);
        }
    }

    traj.discord.resize(n);
    traj.geometric.resize(n);
    traj.concurrence.resize(n);
    traj.norm.resize(n);
    for (int k = 0; k < n; ++k) {
        traj.discord[k] = quantum_discord_left(traj.n[k]).value;
        traj.geometric[k] = geometric_discord_left(traj.n[k]);
        traj.concurrence[k] = concurrence(traj.n[k]);
        traj.norm[k] = std::sqrt(traj.n[k].norm2());
    }
    return traj;
}

std::string trajectory_csv(const Trajectory& traj, bool with_norm) {
    std::ostringstream os;
    os << "t,N01,N02,N03,N10,N20,N30,N11,N12,N13,N21,N22,N23,N31,N32,N33,D,DG,C";
    if (with_norm) os << ",absN";
    os << "\n";
    for (size_t k = 0; k < traj.t.size(); ++k) {
        os << fmt17(traj.t[k]);
        for (int c = 0; c < 15; ++c) os << "," << fmt17(traj.n[k].v[c]);
        os << "," << fmt17(traj.discord[k]) << "," << fmt17(traj.geometric[k]) << ","
           << fmt17(traj.concurrence[k]);
        if (with_norm) os << "," << fmt17(traj.norm[k]);
        os << "\n";
    }
    return os.str();
}

std::string scenario_label(const ScenarioConfig& cfg) {
    std::ostringstream os;
    switch (cfg.hamiltonian.kind) {
        case HamiltonianKind::Ising: os << "ising"; break;
        case HamiltonianKind::Heisenberg: os << "heisenberg"; break;
        case HamiltonianKind::XY: os << "xy"; break;
        case HamiltonianKind::XYAntisym: os << "xy_antisym"; break;
    }
    switch (cfg.state.kind) {
        case InitialStateKind::Werner: os << "+werner(" << cfg.state.alpha << ")"; break;
        case InitialStateKind::BellDiagonal: os << "+bell_diagonal"; break;
        case InitialStateKind::BellBeta: os << "+bell_beta(" << cfg.state.beta << ")"; break;
        case InitialStateKind::DQC1: os << "+dqc1"; break;
        case InitialStateKind::Raw: os << "+raw"; break;
    }
    if (cfg.noise) {
        os << "+rtn(gz=" << cfg.noise->g_z << ",gamma=" << cfg.noise->gamma;
        if (cfg.noise->mode == NoiseMode::TwoUncorrelated) os << ",xi=" << cfg.noise->xi;
        if (cfg.noise->mode == NoiseMode::Correlated) os << ",correlated";
        os << ")";
    }
    return os.str();
}

static json config_echo(const ScenarioConfig& cfg) {
    json p;
    switch (cfg.state.kind) {
        case InitialStateKind::Werner:
            p["initial_state"] = {{"kind", "werner"}, {"alpha", cfg.state.alpha}};
            break;
        case InitialStateKind::BellDiagonal:
            p["initial_state"] = {{"kind", "bell_diagonal"},
                                  {"c", {cfg.state.bell_c[0], cfg.state.bell_c[1], cfg.state.bell_c[2]}}};
            break;
        case InitialStateKind::BellBeta:
            p["initial_state"] = {{"kind", "bell_beta"}, {"beta", cfg.state.beta}};
            break;
        case InitialStateKind::DQC1:
            p["initial_state"] = {{"kind", "dqc1"}};
            break;
        case InitialStateKind::Raw:
            p["initial_state"] = {{"kind", "raw"}};
            break;
    }
    json h;
    switch (cfg.hamiltonian.kind) {
        case HamiltonianKind::Ising: h = {{"kind", "ising"}, {"J", cfg.hamiltonian.J}}; break;
        case HamiltonianKind::Heisenberg:
            h = {{"kind", "heisenberg"}, {"J", cfg.hamiltonian.J}};
            break;
        case HamiltonianKind::XY:
            h = {{"kind", "xy"}, {"J_xy", cfg.hamiltonian.J_xy}, {"J_yx", cfg.hamiltonian.J_yx}};
            break;
        case HamiltonianKind::XYAntisym:
            h = {{"kind", "xy_antisym"}, {"J_yx", cfg.hamiltonian.J_yx}};
            break;
    }
    if (cfg.hamiltonian.B_z != 0.0) h["B_z"] = cfg.hamiltonian.B_z;
    p["hamiltonian"] = h;
    if (cfg.noise) {
        json nj;
        switch (cfg.noise->mode) {
            case NoiseMode::SingleOnA: nj["mode"] = "single_on_a"; break;
            case NoiseMode::TwoUncorrelated: nj["mode"] = "two_uncorrelated"; break;
            case NoiseMode::Correlated: nj["mode"] = "correlated"; break;
        }
        nj["g_z"] = cfg.noise->g_z;
        nj["gamma"] = cfg.noise->gamma;
        if (cfg.noise->mode == NoiseMode::TwoUncorrelated) nj["xi"] = cfg.noise->xi;
        auto mk = is_markovian(*cfg.noise);
        nj["markovian"] = mk.markovian;
        p["noise"] = nj;
    }
    p["time"] = {{"horizon", cfg.time.horizon}, {"samples", cfg.time.samples}};
    return p;
}

std::string verdict_json(const ScenarioConfig& cfg, const Trajectory& traj) {
    JointVerdict v = classify_joint(traj);
    auto frozen = detect_frozen(traj.discord, traj.t);

    json out;
    out["scenario"] = scenario_label(cfg);
    out["params"] = config_echo(cfg);
    out["category_C"] = std::string(1, category_letter(v.ent.category));
    out["category_D"] = std::string(1, category_letter(v.disc.category));
    out["category_C_name"] = to_string(v.ent.category);
    out["category_D_name"] = to_string(v.disc.category);
    out["discord_asymptotic_b_like"] = v.disc.asymptotic;
    out["entanglement_asymptotic_b_like"] = v.ent.asymptotic;
    out["joint"] = v.joint;
    out["table_member"] = v.table_member;
    out["degenerate"] = v.degenerate;
    out["invalid_combination"] = v.invalid_combination;
    out["zero_sets"] = {{"concurrence", zeros_json(v.ent.zeros)}, {"discord", zeros_json(v.disc.zeros)}};
    json fr = json::array();
    for (const auto& iv : frozen) fr.push_back({iv.t_begin, iv.t_end});
    out["frozen_intervals"] = fr;
    return out.dump();
}

std::string report_json(const CorrelationReport& r) {
    json out;
    out["discord"] = r.discord;
    out["geometric_discord"] = r.geometric;
    out["geometric_discord_right"] = r.geometric_right;
    out["concurrence"] = r.concurrence;
    out["mutual_information"] = r.mutual_information;
    out["classical_correlation"] = r.classical;
    out["k_max"] = r.k_max;
    out["measurement_axis"] = {r.optimal.axis[0], r.optimal.axis[1], r.optimal.axis[2]};
    return out.dump();
}

std::string integration_json(const IntegrationResult& r, const std::string& fn_name) {
    json out;
    out["fn"] = fn_name;
    out["estimate"] = r.estimate;
    out["stderr"] = r.stderr_;
    out["n"] = r.samples;
    out["seed"] = r.seed;
    return out.dump();
}

void run_sweep(const std::string& config_text, std::ostream& out) {
    json j = parse_text(config_text);
    if (!j.contains("sweep")) throw ConfigError("sweep: config is missing the 'sweep' key");
    json sw = j.at("sweep");
    require_keys(sw, {"path", "values"}, "sweep");
    if (!sw.contains("path") || !sw.contains("values"))
        throw ConfigError("sweep: need 'path' and 'values'");
    std::string path = sw.at("path").get<std::string>();
    json values = sw.at("values");
    if (!values.is_array() || values.empty()) throw ConfigError("sweep: 'values' must be a non-empty array");

    json base = j;
    base.erase("sweep");

    for (size_t idx = 0; idx < values.size(); ++idx) {
        json doc = base;
        // dotted-path override
        json* node = &doc;
        std::string rest = path;
        while (true) {
            auto dot = rest.find('.');
            std::string key = rest.substr(0, dot);
            if (dot == std::string::npos) {
                (*node)[key] = values[idx];
                break;
            }
            if (!node->contains(key)) (*node)[key] = json::object();
            node = &(*node)[key];
            rest = rest.substr(dot + 1);
        }
        ScenarioConfig cfg = parse_scenario_json(doc);
        Trajectory traj = run_trajectory(cfg);
        json line = json::parse(verdict_json(cfg, traj));
        line["sweep_index"] = idx;
        line["sweep_value"] = values[idx];
        out << line.dump() << "\n";
    }
}

}  // namespace qcorr
