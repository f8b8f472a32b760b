#include "jcorams/model.hpp"

#include <cmath>

namespace jcorams {

int Assignment::offloader_count() const {
    int count = 0;
    for (int s : server_of_)
        if (s >= 0) ++count;
    return count;
}

std::string Assignment::validate(const Scenario& scn) const {
    std::vector<int> slot_user(static_cast<size_t>(servers_) * subchannels_, -1);
    std::vector<int> per_server(servers_, 0);
    for (int n = 0; n < user_count(); ++n) {
        if (!offloads(n)) continue;
        const int m = server_of_[n];
        const int s = subch_of_[n];
        if (m >= servers_ || s < 0 || s >= subchannels_)
            return "user " + std::to_string(n) + " has an out-of-range slot";
        int& holder = slot_user[static_cast<size_t>(m) * subchannels_ + s];
        if (holder >= 0)
            return "slot (" + std::to_string(m) + "," + std::to_string(s) +
                   ") assigned to users " + std::to_string(holder) + " and " +
                   std::to_string(n);
        holder = n;
        if (++per_server[m] > scn.servers[m].quota)
            return "server " + std::to_string(m) + " exceeds quota " +
                   std::to_string(scn.servers[m].quota);
    }
    return {};
}

double PowerAlloc::total(int user) const {
    double sum = 0.0;
    for (int s = 0; s < subchannels_; ++s)
        sum += (*this)(user, s);
    return sum;
}

LocalCost local_overhead(const MobileUser& user) {
    LocalCost c;
    c.time_s = user.task.cpu_cycles / user.cpu_hz;
    c.energy_j = user.energy_coeff * user.task.cpu_cycles * user.cpu_hz * user.cpu_hz;
    c.overhead = user.time_weight * c.time_s + user.energy_weight * c.energy_j;
    return c;
}

double sinr(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
            int n, int m, int s, bool with_interference) {
    double interference = 0.0;
    if (with_interference) {
        for (int k = 0; k < scn.user_count(); ++k) {
            if (k == n) continue;
            if (asg.subch_of(k) != s) continue;
            const int other_server = asg.server_of(k);
            if (other_server < 0 || other_server == m) continue;
            interference += pw(k, s) * scn.gains(k, m, s);
        }
    }
    return pw(n, s) * scn.gains(n, m, s) / (scn.noise_w + interference);
}

double offload_rate(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
                    int n, int m, int s, bool with_interference) {
    if (pw(n, s) <= 0.0)
        throw std::invalid_argument("offload_rate: user " + std::to_string(n) +
                                    " is assigned subchannel " + std::to_string(s) +
                                    " but transmits no power");
    const double g = sinr(scn, asg, pw, n, m, s, with_interference);
    return scn.subchannel_bw_hz * std::log2(1.0 + g);
}

RemoteCost remote_overhead(const MobileUser& user, double rate_bps,
                           double f_assigned_hz, double p_total_w) {
    if (rate_bps <= 0.0)
        throw std::invalid_argument("remote_overhead: offloader has zero uplink rate");
    if (f_assigned_hz <= 0.0 && user.time_weight > 0.0)
        throw std::invalid_argument("remote_overhead: offloader received no compute share");

    RemoteCost c;
    c.offload_time_s = user.task.input_bits / rate_bps;
    c.execute_time_s = f_assigned_hz > 0.0
                           ? user.task.cpu_cycles / f_assigned_hz
                           : std::numeric_limits<double>::infinity();
    c.offload_energy_j = (p_total_w / user.amp_efficiency) * c.offload_time_s;
    // time_weight == 0 zeroes the whole time term even when f == 0 leaves
    // execute_time infinite.
    const double time_term =
        user.time_weight > 0.0 ? user.time_weight * (c.offload_time_s + c.execute_time_s)
                               : 0.0;
    c.overhead = time_term + user.energy_weight * c.offload_energy_j;
    return c;
}

double user_overhead(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
                     const ComputeAlloc& cmp, int n, bool with_interference) {
    const MobileUser& user = scn.users[n];
    if (!asg.offloads(n)) return local_overhead(user).overhead;
    const int m = asg.server_of(n);
    const int s = asg.subch_of(n);
    const double rate = offload_rate(scn, asg, pw, n, m, s, with_interference);
    return remote_overhead(user, rate, cmp(n, m), pw.total(n)).overhead;
}

double system_overhead(const Scenario& scn, const Assignment& asg, const PowerAlloc& pw,
                       const ComputeAlloc& cmp, bool with_interference) {
    double total = 0.0;
    for (int n = 0; n < scn.user_count(); ++n)
        total += user_overhead(scn, asg, pw, cmp, n, with_interference);
    return total;
}

} // namespace jcorams
