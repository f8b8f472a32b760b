#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jcorams {

// One computation task: input payload, CPU work, result size.
// The result size is carried for completeness but does not enter any
// overhead (result return is not modeled).
struct TaskProfile {
    double input_bits = 0.0;
    double cpu_cycles = 0.0;
    double output_bits = 0.0;
};

struct MobileUser {
    int id = -1;
    double x_m = 0.0;
    double y_m = 0.0;
    TaskProfile task;
    double cpu_hz = 0.0;         // local CPU speed, cycles/s
    double energy_coeff = 0.0;   // chip coefficient, J*s^2/cycle^3
    double max_power_w = 0.0;    // transmit power budget
    double amp_efficiency = 1.0; // power amplifier efficiency, (0,1]
    double time_weight = 0.5;    // weight on completion time
    double energy_weight = 0.5;  // weight on energy, time_weight + energy_weight = 1
};

struct MecServer {
    int id = -1;
    double x_m = 0.0;
    double y_m = 0.0;
    double cpu_hz = 0.0; // total compute budget, cycles/s
    int quota = 1;       // max users served at once
};

// Linear uplink channel gains h[user][server][subchannel].
class ChannelGains {
public:
    ChannelGains() = default;
    ChannelGains(int users, int servers, int subchannels, double fill = 0.0)
        : users_(users), servers_(servers), subchannels_(subchannels),
          h_(static_cast<size_t>(users) * servers * subchannels, fill) {}

    double operator()(int user, int server, int subch) const {
        return h_[idx(user, server, subch)];
    }
    double& operator()(int user, int server, int subch) {
        return h_[idx(user, server, subch)];
    }

    int users() const { return users_; }
    int servers() const { return servers_; }
    int subchannels() const { return subchannels_; }

private:
    size_t idx(int user, int server, int subch) const {
        return (static_cast<size_t>(user) * servers_ + server) * subchannels_ + subch;
    }
    int users_ = 0;
    int servers_ = 0;
    int subchannels_ = 0;
    std::vector<double> h_;
};

// Immutable network instance. All quantities in SI base units (bits, Hz,
// W, cycles, s, J); dB/dBm conversions happen at config parsing only.
struct Scenario {
    std::vector<MobileUser> users;
    std::vector<MecServer> servers;
    int subchannels = 0;
    double subchannel_bw_hz = 0.0;
    double noise_w = 0.0; // noise power per subchannel, linear
    ChannelGains gains;

    int user_count() const { return static_cast<int>(users.size()); }
    int server_count() const { return static_cast<int>(servers.size()); }
};

// Binary offloading decision. Each user holds at most one (server,
// subchannel) slot; -1/-1 means local execution. The per-user cap is
// structural; cross-user slot uniqueness and quotas are checked by
// validate().
class Assignment {
public:
    Assignment() = default;
    Assignment(int users, int servers, int subchannels)
        : servers_(servers), subchannels_(subchannels),
          server_of_(users, -1), subch_of_(users, -1) {}

    static Assignment all_local(const Scenario& scn) {
        return Assignment(scn.user_count(), scn.server_count(), scn.subchannels);
    }

    bool offloads(int user) const { return server_of_[user] >= 0; }
    int server_of(int user) const { return server_of_[user]; }
    int subch_of(int user) const { return subch_of_[user]; }
    bool a(int user, int server, int subch) const {
        return server_of_[user] == server && subch_of_[user] == subch;
    }

    void assign(int user, int server, int subch) {
        server_of_[user] = server;
        subch_of_[user] = subch;
    }
    void clear(int user) {
        server_of_[user] = -1;
        subch_of_[user] = -1;
    }

    int user_count() const { return static_cast<int>(server_of_.size()); }
    int server_count() const { return servers_; }
    int subchannel_count() const { return subchannels_; }
    int offloader_count() const;

    // Checks slot uniqueness per (server, subchannel) and server quotas.
    // Returns an empty string when valid, else a description of the first
    // violation.
    std::string validate(const Scenario& scn) const;

    bool operator==(const Assignment& other) const {
        return server_of_ == other.server_of_ && subch_of_ == other.subch_of_;
    }

private:
    int servers_ = 0;
    int subchannels_ = 0;
    std::vector<int> server_of_;
    std::vector<int> subch_of_;
};

// Transmit power per (user, subchannel), Watts. Nonzero only on a user's
// assigned subchannel.
class PowerAlloc {
public:
    PowerAlloc() = default;
    PowerAlloc(int users, int subchannels)
        : subchannels_(subchannels), p_(static_cast<size_t>(users) * subchannels, 0.0) {}

    double operator()(int user, int subch) const {
        return p_[static_cast<size_t>(user) * subchannels_ + subch];
    }
    double& operator()(int user, int subch) {
        return p_[static_cast<size_t>(user) * subchannels_ + subch];
    }
    // Total transmit power of one user (sum over subchannels).
    double total(int user) const;

private:
    int subchannels_ = 0;
    std::vector<double> p_;
};

// CPU share per (user, server), cycles/s.
class ComputeAlloc {
public:
    ComputeAlloc() = default;
    ComputeAlloc(int users, int servers)
        : servers_(servers), f_(static_cast<size_t>(users) * servers, 0.0) {}

    double operator()(int user, int server) const {
        return f_[static_cast<size_t>(user) * servers_ + server];
    }
    double& operator()(int user, int server) {
        return f_[static_cast<size_t>(user) * servers_ + server];
    }

private:
    int servers_ = 0;
    std::vector<double> f_;
};

struct LocalCost {
    double time_s = 0.0;
    double energy_j = 0.0;
    double overhead = 0.0; // time_weight*time + energy_weight*energy
};

struct RemoteCost {
    double offload_time_s = 0.0;
    double execute_time_s = 0.0;
    double offload_energy_j = 0.0;
    double overhead = 0.0;
};

// Completion time, energy and weighted overhead of executing the task on
// the device itself.
LocalCost local_overhead(const MobileUser& user);

// Uplink SINR of user n received at server m on subchannel s.
// Interference comes only from users assigned to other servers on the
// same subchannel. Set with_interference=false to score a solution as if
// cells were isolated.
double sinr(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
            int n, int m, int s, bool with_interference = true);

// Uplink rate in bits/s for an active offloader; throws if the user has
// no transmit power on the assigned subchannel.
double offload_rate(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
                    int n, int m, int s, bool with_interference = true);

// Offloading cost of one user given its achieved uplink rate, assigned
// server CPU share and total transmit power. A zero CPU share is accepted
// only for a pure-energy user (time_weight == 0), whose execution-time
// term vanishes.
RemoteCost remote_overhead(const MobileUser& user, double rate_bps,
                           double f_assigned_hz, double p_total_w);

// Weighted overhead of one user under the given solution tensors.
double user_overhead(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
                     const ComputeAlloc& cmp, int n, bool with_interference = true);

// System-wide objective: sum of per-user overheads.
double system_overhead(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
                       const ComputeAlloc& cmp, bool with_interference = true);

} // namespace jcorams
