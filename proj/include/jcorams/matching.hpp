#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "jcorams/model.hpp"

namespace jcorams {

// Weights of the user-side association preference: rate term and compute
// term of the score.
struct UaWeights {
    double rate_weight = 8e6;   // multiplies alpha^-1 * log2(1 + sum SINR)
    double compute_weight = 0.2; // multiplies beta^-1 * f_share
};

// Weights of the channel-side subchannel preference: achievable rate
// minus a penalty on the interference the candidate would leak into
// neighbour cells.
struct CaWeights {
    double rate_weight = 1.0;
    double leakage_penalty = 0.1;
};

// Generic deferred acceptance with quotas. Proposers walk down their
// preference lists (higher proposer_score first); each acceptor keeps the
// best `quota` proposers seen so far (lower acceptor_key first). Ties
// break toward the lower index on both sides, which makes the outcome
// deterministic. Returns the acceptor of each proposer, -1 if rejected
// everywhere. Proposal rounds are bounded by proposers*acceptors.
std::vector<int> deferred_acceptance(
    int proposers, int acceptors, const std::vector<int>& quotas,
    const std::function<double(int, int)>& proposer_score,
    const std::function<double(int, int)>& acceptor_key);

// ---------------------------------------------------------------------
// User - server association (many-to-one)
// ---------------------------------------------------------------------

struct AssocMatching {
    std::vector<int> server_of;             // by scenario user id, -1 = unmatched
    std::vector<std::vector<int>> users_of; // by server id

    bool consistent(const Scenario& scn) const;
};

// Association preferences of one solver iteration, computed once and
// frozen while the matching runs. Scores assume the uniform split
// p = p_max/S on every subchannel and f = f_max/quota, with every other
// candidate treated as a worst-case interferer on all subchannels
// (subchannels are not assigned yet at this stage).
struct UaPrefs {
    std::vector<int> candidates;                 // scenario user ids
    std::vector<int> row_of;                     // user id -> row, -1 if absent
    std::vector<std::vector<double>> user_score; // [row][server], higher better
    std::vector<std::vector<double>> server_cost;// [server][row], lower better
};

UaPrefs build_ua_prefs(const Scenario& scn, const std::vector<int>& candidates,
                       const UaWeights& w);

// Score of server m from user n's point of view (row n of the tables).
double user_pref_ua(const Scenario& scn, const std::vector<int>& candidates,
                    int n, int m, const UaWeights& w);
// Estimated overhead of serving user n, from server m's point of view.
double server_pref_ua(const Scenario& scn, const std::vector<int>& candidates,
                      int m, int n);

AssocMatching match_users_servers(const Scenario& scn, const UaPrefs& prefs);

// Returns a (user, server) pair that would rather be matched with each
// other than stay as matched, or nullopt when the matching is stable.
// A server with spare quota blocks together with any user that strictly
// prefers it.
std::optional<std::pair<int, int>> find_blocking_pair(const Scenario& scn,
                                                      const UaPrefs& prefs,
                                                      const AssocMatching& matching);

// ---------------------------------------------------------------------
// User - subchannel assignment (one-to-one, per cell)
// ---------------------------------------------------------------------

// Cross-cell interference observed at server m per subchannel while its
// cell runs the subchannel matching. Users of other cells contribute at
// the uniform power on their tentative subchannel when they already hold
// one (tentative_subch_of[u] >= 0), otherwise on every subchannel.
std::vector<double> cross_cell_interference(const Scenario& scn, int m,
                                            const AssocMatching& assoc,
                                            const std::vector<int>& tentative_subch_of);

struct CaPrefs {
    int server = -1;
    std::vector<int> users;                        // cell members, scenario ids
    std::vector<std::vector<double>> user_score;   // [row][subch], higher better
    std::vector<std::vector<double>> channel_score;// [subch][row], higher better
};

CaPrefs build_ca_prefs(const Scenario& scn, int m, const std::vector<int>& users,
                       const CaWeights& w, const std::vector<double>& cross_interference_w);

// Rate of user n on subchannel s of its cell, at uniform power, under the
// given cross-cell interference.
double user_pref_ca(const Scenario& scn, int n, int m, int s,
                    const std::vector<double>& cross_interference_w);
// Channel-side score: weighted rate minus the interference the user would
// leak toward the other servers on that subchannel.
double subchannel_pref_ca(const Scenario& scn, int m, int s, int n, const CaWeights& w,
                          const std::vector<double>& cross_interference_w);

struct SubchMatching {
    int server = -1;
    std::vector<int> users;    // cell members, scenario ids (prefs row order)
    std::vector<int> subch_of; // parallel to users, -1 = unmatched
    std::vector<int> user_of;  // by subchannel, row index or -1

    bool consistent() const;
};

// Throws when the cell holds more users than subchannels (quota and S out
// of step in the configuration).
SubchMatching match_users_subchannels(const Scenario& scn, const CaPrefs& prefs);

// (user row, subchannel) blocking pair under the frozen tables, nullopt
// when stable.
std::optional<std::pair<int, int>> find_blocking_pair_ca(const CaPrefs& prefs,
                                                         const SubchMatching& matching);

} // namespace jcorams
