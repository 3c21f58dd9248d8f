#pragma once

#include <map>
#include <optional>
#include <vector>

#include "iwalk/partition.hpp"
#include "iwalk/rational.hpp"

namespace iwalk {

// Full-table computations refuse above this size unless the caller overrides.
inline constexpr int kTableCap = 20;
// Single-partition eigenvalue queries through the CLI allow up to this n.
inline constexpr int kSingleQueryCap = 40;

struct WalkParams {
    int n;
    Rat p;
    WalkParams(int n_, Rat p_);
    int half() const { return n / 2; }
};

struct EigenvalueTable {
    int n = 0;
    Rat p;
    std::map<Partition, Rat> values;

    const Rat& at(const Partition& lambda) const;
};

// psi_lambda = sum_s p^{n/2-s} (1-p)^s C(n/2,s) chi_lambda(1^{n-2s},2^s) / d_lambda.
Rat eigenvalue_direct(const Partition& lambda, const WalkParams& params);

// The border-strip recursion: horizontal dominoes with weight 1, vertical
// with 2p-1, corner pairs with 2p, each scaled by d_rho/d_lambda, grounded at
// psi_empty = 1. Memoized per (lambda, p).
Rat eigenvalue_recursive(const Partition& lambda, const WalkParams& params);

// Closed forms for [n], [n-1,1], [n-2,2], [n-2,1,1], [1^n]
// and hooks [n-i,1^i]; absent for other shapes.
std::optional<Rat> eigenvalue_closed_form(const Partition& lambda, const WalkParams& params);

// Hook eigenvalue psi_{[n-i,1^i]} as the explicit two-base-case path count
// over the recursion (multinomial double sum).
Rat hook_psi_recursion_sum(int n, int i, const Rat& p);

// Hook eigenvalue via the character polynomial:
// (1/C(n-1,i)) sum_{k,l} C(n/2;k,l) (-1)^l p^{n/2-l-k} (1-p)^{k+l} C(n-2k-2l-1, i-2l),
// the trailing binomial continued to negative tops.
Rat hook_psi_charpoly_sum(int n, int i, const Rat& p);

// p = 1/2 shortcut: C(n/2-1, i)/C(n-1, i) for i < n/2, zero beyond.
Rat hook_psi_half(int n, int i);

// Sum of the recursion's coefficients; checked against
// p + (1-p) chi_lambda(tau)/d_lambda before returning.
Rat coefficient_sum(const Partition& lambda, const Rat& p);

struct BuildOptions {
    int cap = kTableCap;
    bool cross_check = false;  // also run the recursion and compare
};

EigenvalueTable build_table(const WalkParams& params, const BuildOptions& opts = {});

// E_{P^{*t}}(chi_lambda) = d_lambda psi_lambda^t.
Rat expected_character(const Partition& lambda, const WalkParams& params, long t);

struct MonotonicityViolation {
    Partition lambda;
    Partition reference;
    Rat psi_lambda;
    Rat psi_reference;
};

struct MonotonicityReport {
    // (a) psi_{[n-i,i]} weakly decreasing in i.
    bool deci_pass = true;
    std::vector<MonotonicityViolation> deci_violations;
    std::vector<std::pair<Partition, Rat>> two_row_chain;
    // (b) psi_lambda <= psi_{[n-i,i]} whenever lambda_1 = n-i.
    bool twopart_pass = true;
    std::vector<MonotonicityViolation> twopart_violations;
    // (c) psi_lambda <= psi_{[n/2,n/2]} whenever lambda_1' <= lambda_1 < n/2.
    bool n2bound_pass = true;
    std::vector<MonotonicityViolation> n2bound_violations;
};

// Reports, never throws on violations: the claims fail at n = 4 for part of
// the p range and the callers pin the expected pattern.
MonotonicityReport verify_monotonicity(const WalkParams& params, int cap = kTableCap);

}  // namespace iwalk
