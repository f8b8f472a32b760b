#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "jcorams/model.hpp"

namespace jcorams {

// Seeded generator with a fixed, portable mapping from raw 64-bit draws
// to doubles: mt19937_64 output x becomes (x >> 11) * 2^-53 in [0,1).
// Avoids std::uniform_real_distribution, whose output differs across
// standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    double unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    // Uniform index in [0, n); tiny modulo bias is irrelevant for small n.
    size_t index(size_t n) { return static_cast<size_t>(gen_() % n); }

private:
    std::mt19937_64 gen_;
};

struct ScenarioConfig {
    int servers = 9;        // M
    int users = 36;         // N
    int subchannels = 4;    // S
    double area_m = 250.0;  // side of the square deployment area
    double bandwidth_hz = 5e6;
    double noise_dbm = -100.0;
    double max_power_w = 0.1;
    double input_bits = 3.36e6;  // 420 KB payload
    double cpu_cycles = 1e9;
    std::vector<double> local_cpu_choices_hz = {0.5e9, 0.8e9, 1.0e9};
    double server_cpu_hz = 4e9;
    double energy_coeff = 5e-27;
    double time_weight = 0.5;
    double amp_efficiency = 1.0;
    int quota = 4;
    uint64_t seed = 1;
    // Optional log-normal shadowing on top of path loss; 0 disables it.
    double shadowing_sigma_db = 0.0;
};

// dBm <-> Watt helpers used at the config boundary.
double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);

// Linear gain for the indoor path-loss model
// PL(dB) = -140.7 - 36.7*log10(d), d in kilometers.
// Distances below 1 m are clamped rather than rejected.
double path_loss_gain(double d_km);

// Draws a network realization: uniform placements over the square,
// per-user CPU speed from the configured choices, gains from path loss
// on the user-server distance (identical across subchannels).
//
// Draw order is fixed and part of the reproducibility contract:
// server positions (x,y per server), then user positions, then per-user
// CPU picks, then shadowing offsets per (user, server) when enabled.
Scenario generate(const ScenarioConfig& cfg);

// Flat key-value config file ("key = value", '#' comments). Unknown keys
// are rejected. Keys and units are documented in the README.
ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig load_scenario_config(const std::string& path);

// Writes positions and per-(user,server) gains as two CSV files under
// `dir` (scenario_nodes.csv, scenario_gains.csv).
void export_scenario_csv(const Scenario& scn, const std::string& dir);

} // namespace jcorams
