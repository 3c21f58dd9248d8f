#pragma once

#include <map>
#include <string>
#include <vector>

#include "iwalk/rational.hpp"
#include "iwalk/spectrum.hpp"

namespace iwalk {

enum class BoundKind { DsUpper, AnalyticPsi, InvUp, WilsonLower, ParityLower };

std::string bound_kind_name(BoundKind kind);

// The bounds layer is the only float code in the library. Every comparison
// against an exact quantity happens on the exact form; the double `value` is
// for display.
struct BoundReport {
    BoundKind kind;
    double value = 0.0;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::vector<std::map<std::string, std::string>> witnesses;

    bool all_hypotheses_hold() const;
};

// (1/4) sum_{lambda != [n]} d_lambda^2 psi_lambda^{2t}, exact.
Rat ds_upper_bound_exact(const WalkParams& params, long t, int cap = kTableCap);
BoundReport ds_upper_bound(const WalkParams& params, long t, int cap = kTableCap);

// The simplified exponential bound on psi_{[n-i,i]}: for i < n/2
//   exp(-i log(2/(1+p)) + log(e^2 (i+1)/2^{5/2} ((n-i)/(n-2i))^{3/2})),
// and for i = n/2
//   exp(-(n/2) log(2/(1+p)) + log(n^{3/2} (n+2) e^2 / 8)).
double analytic_psi_bound(int n, int i, const Rat& p);

// Largest-term bound on sum_j (2p)^j C(n/2; j,(n-i-j)/2,(i-j)/2); requires
// i <= p sqrt(n-2i+2).
double small_i_sum_bound(int n, int i, const Rat& p);
// The same combined with the dimension-ratio prefactor
// C(n,i)^{-1} (n-i+1)/(n-2i+1), making it a bound on psi_{[n-i,i]}.
double small_i_psi_bound(int n, int i, const Rat& p);

// t = log_{2/(1+p)}(n) + c / log(2/(1+p)); value e^{-c/2} with the theorem's
// side conditions recorded as hypothesis flags (they fail at desk scale).
BoundReport upper_mixing_bound(const WalkParams& params, double c);

struct WilsonBound {
    Rat expectation;  // (n-1) psi_{[n-1,1]}^t
    Rat var_walk;     // second moment through the tensor-square decomposition
    Rat sigma_sq;     // (Var_P + Var_U)/2
    Rat r_sq;         // expectation^2 / sigma^2
    Rat value;        // r^2 / (4 + r^2)
    BoundReport report() const;
};

// Chebyshev-style lower bound from the first two moments of chi_{[n-1,1]},
// with exact (oracle-corrected) eigenvalues. Requires n >= 4.
WilsonBound wilson_lower_bound(const WalkParams& params, long t);

// (1/2)(1-2p)^{tn/2} for p <= 1/2, zero above; t must be even. The signed
// parity gap (2p-1)^{tn/2} rides along in the report.
Rat parity_lower_bound_exact(const WalkParams& params, long t);
BoundReport parity_lower_bound(const WalkParams& params, long t);

struct SeaworldReport {
    int n = 0;
    int i = 0;
    Rat p;
    Rat rhs;    // sum_j 2^j p^{-(n/2-j)} C(n/2; j,(n-i-j)/2,(i-j)/2)
    Rat lhs_a;  // trailing binomial C(n-2j1-2j2, i-2j2)
    Rat lhs_b;  // trailing binomial C(n-2j1-2j2, i-2j1-2j2)
    bool a_matches = false;
    bool b_matches = false;
};

// Evaluates both trailing-binomial variants of the splitting identity
// against the right-hand side. Requires 0 <= i <= n/2 and p > 0.
SeaworldReport verify_seaworld(int n, int i, const Rat& p);

}  // namespace iwalk
