#include "jcorams/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jcorams/csv.hpp"

namespace jcorams {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

double path_loss_gain(double d_km) {
    constexpr double kMinDistanceKm = 1e-3; // 1 m floor against collocated points
    const double d = std::max(d_km, kMinDistanceKm);
    const double pl_db = -140.7 - 36.7 * std::log10(d);
    return std::pow(10.0, pl_db / 10.0);
}

namespace {

void check_config(const ScenarioConfig& cfg) {
    auto fail = [](const std::string& msg) {
        throw std::invalid_argument("scenario config: " + msg);
    };
    if (cfg.servers < 1 || cfg.users < 1 || cfg.subchannels < 1)
        fail("M, N and S must all be at least 1");
    if (cfg.area_m <= 0.0) fail("area_m must be positive");
    if (cfg.bandwidth_hz <= 0.0) fail("bandwidth_hz must be positive");
    if (cfg.max_power_w <= 0.0) fail("p_max must be positive");
    if (cfg.input_bits <= 0.0) fail("alpha_bits must be positive");
    if (cfg.cpu_cycles <= 0.0) fail("beta_cycles must be positive");
    if (cfg.local_cpu_choices_hz.empty()) fail("f_local_choices must be nonempty");
    for (double f : cfg.local_cpu_choices_hz)
        if (f <= 0.0) fail("f_local_choices entries must be positive");
    if (cfg.server_cpu_hz <= 0.0) fail("f_server must be positive");
    if (cfg.energy_coeff < 0.0) fail("kappa must be nonnegative");
    if (cfg.time_weight < 0.0 || cfg.time_weight > 1.0)
        fail("lambda_t must lie in [0, 1]");
    if (cfg.amp_efficiency <= 0.0 || cfg.amp_efficiency > 1.0)
        fail("zeta must lie in (0, 1]");
    if (cfg.quota < 1) fail("quota must be at least 1");
    if (cfg.shadowing_sigma_db < 0.0) fail("shadowing_sigma_db must be nonnegative");
}

// Box-Muller from two raw uniforms; kept explicit so realizations stay
// identical across standard libraries.
double standard_normal(Rng& rng) {
    double u1 = rng.unit();
    while (u1 <= 0.0) u1 = rng.unit();
    const double u2 = rng.unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace

Scenario generate(const ScenarioConfig& cfg) {
    check_config(cfg);
    Rng rng(cfg.seed);

    Scenario scn;
    scn.subchannels = cfg.subchannels;
    scn.subchannel_bw_hz = cfg.bandwidth_hz;
    scn.noise_w = dbm_to_watt(cfg.noise_dbm);

    scn.servers.resize(cfg.servers);
    for (int m = 0; m < cfg.servers; ++m) {
        MecServer& srv = scn.servers[m];
        srv.id = m;
        srv.x_m = rng.uniform(0.0, cfg.area_m);
        srv.y_m = rng.uniform(0.0, cfg.area_m);
        srv.cpu_hz = cfg.server_cpu_hz;
        srv.quota = cfg.quota;
    }

    scn.users.resize(cfg.users);
    for (int n = 0; n < cfg.users; ++n) {
        MobileUser& u = scn.users[n];
        u.id = n;
        u.x_m = rng.uniform(0.0, cfg.area_m);
        u.y_m = rng.uniform(0.0, cfg.area_m);
        u.task = TaskProfile{cfg.input_bits, cfg.cpu_cycles, 0.0};
        u.energy_coeff = cfg.energy_coeff;
        u.max_power_w = cfg.max_power_w;
        u.amp_efficiency = cfg.amp_efficiency;
        u.time_weight = cfg.time_weight;
        u.energy_weight = 1.0 - cfg.time_weight;
    }
    for (int n = 0; n < cfg.users; ++n)
        scn.users[n].cpu_hz =
            cfg.local_cpu_choices_hz[rng.index(cfg.local_cpu_choices_hz.size())];

    scn.gains = ChannelGains(cfg.users, cfg.servers, cfg.subchannels);
    for (int n = 0; n < cfg.users; ++n) {
        for (int m = 0; m < cfg.servers; ++m) {
            const double dx = scn.users[n].x_m - scn.servers[m].x_m;
            const double dy = scn.users[n].y_m - scn.servers[m].y_m;
            double gain = path_loss_gain(std::hypot(dx, dy) / 1000.0);
            if (cfg.shadowing_sigma_db > 0.0)
                gain *= std::pow(10.0, cfg.shadowing_sigma_db * standard_normal(rng) / 10.0);
            for (int s = 0; s < cfg.subchannels; ++s)
                scn.gains(n, m, s) = gain;
        }
    }
    return scn;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse '" + value + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("config key '" + key + "': trailing junk in '" + value + "'");
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_number(key, trim(item)));
    return out;
}

} // namespace

ScenarioConfig parse_scenario_config(std::istream& in) {
    ScenarioConfig cfg;
    bool quota_set = false;
    bool pmax_w_set = false;
    bool pmax_dbm_set = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "M") cfg.servers = static_cast<int>(parse_number(key, value));
        else if (key == "N") cfg.users = static_cast<int>(parse_number(key, value));
        else if (key == "S") cfg.subchannels = static_cast<int>(parse_number(key, value));
        else if (key == "area_m") cfg.area_m = parse_number(key, value);
        else if (key == "bandwidth_hz") cfg.bandwidth_hz = parse_number(key, value);
        else if (key == "noise_dbm") cfg.noise_dbm = parse_number(key, value);
        else if (key == "p_max_w") { cfg.max_power_w = parse_number(key, value); pmax_w_set = true; }
        else if (key == "p_max_dbm") { cfg.max_power_w = dbm_to_watt(parse_number(key, value)); pmax_dbm_set = true; }
        else if (key == "alpha_bits") cfg.input_bits = parse_number(key, value);
        else if (key == "beta_cycles") cfg.cpu_cycles = parse_number(key, value);
        else if (key == "f_local_choices") cfg.local_cpu_choices_hz = parse_list(key, value);
        else if (key == "f_server") cfg.server_cpu_hz = parse_number(key, value);
        else if (key == "kappa") cfg.energy_coeff = parse_number(key, value);
        else if (key == "lambda_t") cfg.time_weight = parse_number(key, value);
        else if (key == "zeta") cfg.amp_efficiency = parse_number(key, value);
        else if (key == "quota") { cfg.quota = static_cast<int>(parse_number(key, value)); quota_set = true; }
        else if (key == "seed") cfg.seed = static_cast<uint64_t>(parse_number(key, value));
        else if (key == "shadowing_sigma_db") cfg.shadowing_sigma_db = parse_number(key, value);
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    if (pmax_w_set && pmax_dbm_set)
        throw std::invalid_argument("config: give either p_max_w or p_max_dbm, not both");
    if (!quota_set) cfg.quota = cfg.subchannels;
    check_config(cfg);
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_scenario_config(in);
}

void export_scenario_csv(const Scenario& scn, const std::string& dir) {
    std::filesystem::create_directories(dir);
    {
        CsvWriter csv(dir + "/scenario_nodes.csv");
        csv.row({"kind", "id", "x_m", "y_m", "cpu_hz", "quota_or_pmax"});
        for (const MecServer& m : scn.servers)
            csv.row({"server", std::to_string(m.id), format_sig(m.x_m), format_sig(m.y_m),
                     format_sig(m.cpu_hz), std::to_string(m.quota)});
        for (const MobileUser& u : scn.users)
            csv.row({"user", std::to_string(u.id), format_sig(u.x_m), format_sig(u.y_m),
                     format_sig(u.cpu_hz), format_sig(u.max_power_w)});
    }
    {
        CsvWriter csv(dir + "/scenario_gains.csv");
        csv.row({"user", "server", "gain"});
        for (int n = 0; n < scn.user_count(); ++n)
            for (int m = 0; m < scn.server_count(); ++m)
                csv.row({std::to_string(n), std::to_string(m), format_sig(scn.gains(n, m, 0))});
    }
}

} // namespace jcorams
