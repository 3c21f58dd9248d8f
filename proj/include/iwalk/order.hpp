#pragma once

#include <utility>
#include <vector>

#include "iwalk/partition.hpp"
#include "iwalk/rational.hpp"
#include "iwalk/spectrum.hpp"
#include "iwalk/walk.hpp"

namespace iwalk {

inline constexpr long kDefaultTMax = 64;

struct LikelihoodOrder {
    long t = 0;
    // Sorted by probability descending; exact ties broken cycle-lex
    // descending and recorded in `ties`.
    std::vector<std::pair<CycleType, Rat>> ranked;
    std::vector<std::vector<CycleType>> ties;
};

LikelihoodOrder likelihood_order(const WalkParams& params, long t, int cap = kDistCap);

// True iff cycle-lex is a valid likelihood order at this time: no pair with
// alpha >_CL beta but P(alpha) < P(beta) strictly.
bool order_is_cycle_lex(const LikelihoodOrder& order);

struct OrderLimitReport {
    long t_max = 0;
    bool found = false;       // some t* <= t_max with cycle-lex stable to t_max
    long t_star = -1;         // smallest such t*
    bool holds_at_all_t = false;  // every t in [1, t_max]
    // Pairs (a, b) with a >_CL b but P(a) < P(b) at every t in
    // [max(1, t_max/2), t_max].
    std::vector<std::pair<CycleType, CycleType>> persistent_violations;
};

OrderLimitReport limiting_order_check(const WalkParams& params, long t_max = kDefaultTMax,
                                      int cap = kDistCap);

struct DetectorRow {
    int i = 0;
    Rat psi_two_row;            // |psi_{[n-i,i]}|
    Partition argmax_detector;  // detector with the largest |psi|
    Rat max_detector_abs;
    bool pass = false;  // |psi_{[n-i,i]}| >= every detector's |psi|
};

struct DetectorReport {
    std::vector<DetectorRow> rows;
    bool all_pass = true;
};

// For each i, [n-i,i] should carry the largest eigenvalue magnitude among all
// i-cycle detecting partitions.
DetectorReport detector_dominance_check(const WalkParams& params, int cap = kTableCap);

struct HookIdentityRow {
    int i = 0;
    Rat recursion_sum;
    Rat charpoly_sum;
    Rat direct;
    bool equal = false;
};

struct HookIdentityReport {
    int n = 0;
    Rat p;
    std::vector<HookIdentityRow> rows;
    bool all_equal = true;
};

// Three-way exact equality for every hook [n-i,1^i], i in [1, n-1]:
// recursion path count = character-polynomial sum = direct eigenvalue.
HookIdentityReport hook_eigenvalue_identity_check(int n, const Rat& p);

struct SeparationConjecture {
    int n = 0;
    long t = 0;
    Rat value;  // exact: every term is rational at p = 1/2
    std::vector<Rat> terms;
    bool magnitudes_decreasing = false;
    double value_double() const { return to_double(value); }
};

// sum_{i=1}^{floor((n-1)/2)} (-1)^{i+1} C(n-i,i) (C(n/2-1,i)/C(n-1,i))^t,
// the conjectured p = 1/2 separation profile.
SeparationConjecture conjectured_separation(int n, long t);

}  // namespace iwalk
