#include "iwalk/bounds.hpp"

#include <cmath>

#include "iwalk/characters.hpp"
#include "iwalk/partition.hpp"

namespace iwalk {

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::DsUpper: return "ds-upper";
        case BoundKind::AnalyticPsi: return "analytic-psi";
        case BoundKind::InvUp: return "invup";
        case BoundKind::WilsonLower: return "wilson-lower";
        case BoundKind::ParityLower: return "parity-lower";
    }
    return "?";
}

bool BoundReport::all_hypotheses_hold() const {
    for (const auto& [name, satisfied] : hypotheses)
        if (!satisfied) return false;
    return true;
}

Rat ds_upper_bound_exact(const WalkParams& params, long t, int cap) {
    if (t < 0) throw std::invalid_argument("ds_upper_bound: t < 0");
    EigenvalueTable table = build_table(params, {.cap = cap});
    Rat sum = 0;
    Partition trivial({params.n});
    for (const auto& [lambda, psi] : table.values) {
        if (lambda == trivial) continue;
        Int d = dimension(lambda);
        sum += Rat(d * d) * rat_pow(psi, 2 * t);
    }
    sum /= 4;
    sum.canonicalize();
    return sum;
}

BoundReport ds_upper_bound(const WalkParams& params, long t, int cap) {
    Rat exact = ds_upper_bound_exact(params, t, cap);
    BoundReport report;
    report.kind = BoundKind::DsUpper;
    report.value = to_double(exact);
    report.hypotheses = {{"walk aperiodic and irreducible (0 < p < 1 or t parity unconstrained)", true}};
    report.witnesses.push_back({{"exact", rational_str(exact)},
                                {"n", std::to_string(params.n)},
                                {"t", std::to_string(t)}});
    return report;
}

double analytic_psi_bound(int n, int i, const Rat& p) {
    if (i < 1 || 2 * i > n)
        throw std::invalid_argument("analytic_psi_bound: need 1 <= i <= n/2");
    double pd = to_double(p);
    double rate = std::log(2.0 / (1.0 + pd));
    double e2 = std::exp(2.0);
    if (2 * i == n) {
        double nd = n;
        return std::exp(-(nd / 2.0) * rate + std::log(std::pow(nd, 1.5) * (nd + 2.0) * e2 / 8.0));
    }
    double id = i, nd = n;
    double prefactor = e2 * (id + 1.0) / std::pow(2.0, 2.5) *
                       std::pow((nd - id) / (nd - 2.0 * id), 1.5);
    return std::exp(-id * rate + std::log(prefactor));
}

double small_i_sum_bound(int n, int i, const Rat& p) {
    if (i < 1 || 2 * i > n)
        throw std::invalid_argument("small_i_sum_bound: need 1 <= i <= n/2");
    if (p == 0) throw std::invalid_argument("small_i_sum_bound: requires p > 0");
    // The largest-term argument needs the correction factor
    // 1 - i(i-1)/(2p^2(n-2i+2)) to stay positive; the stated i range
    // guarantees that, and positivity is the sharp form of the guard.
    Rat correction = 1 - Rat(i) * Rat(i - 1) / (2 * p * p * Rat(n - 2 * i + 2));
    correction.canonicalize();
    if (correction <= 0)
        throw std::invalid_argument("small_i_sum_bound: requires i(i-1) < 2p^2(n-2i+2)");
    double top = to_double(Rat(binomial(n / 2, i)));
    return std::pow(2.0 * to_double(p), i) * top / to_double(correction);
}

double small_i_psi_bound(int n, int i, const Rat& p) {
    Rat prefactor(Int(n - i + 1), binomial(n, i) * (n - 2 * i + 1));
    prefactor.canonicalize();
    return to_double(prefactor) * small_i_sum_bound(n, i, p);
}

BoundReport upper_mixing_bound(const WalkParams& params, double c) {
    BoundReport report;
    report.kind = BoundKind::InvUp;
    double pd = to_double(params.p);
    double nd = params.n;
    double rate = std::log(2.0 / (1.0 + pd));
    double t = std::log(nd) / rate + c / rate;
    report.value = std::exp(-c / 2.0);

    bool hyp_growth = 10.0 * std::log(nd + 2.0) / (std::sqrt((nd + 2.0) / 2.0) - 1.0) <= rate;
    bool hyp_size = nd - 1.0 > std::sqrt(nd / 2.0) * (1.0 + std::log(nd));
    // Case-2 internal assumption, at the largest i it is invoked for.
    bool hyp_case2 = true;
    int i_case2_max = static_cast<int>(std::floor(pd * std::sqrt((nd + 2.0) / 2.0) - 1.0));
    for (int i = 2; i <= i_case2_max; ++i) {
        if (2.0 / (nd - 2.0 * i + 1.0) > pd * pd * rate * rate) {
            hyp_case2 = false;
            break;
        }
    }
    report.hypotheses = {
        {"10 log(n+2)/(sqrt((n+2)/2)-1) <= log(2/(1+p))", hyp_growth},
        {"n-1 > sqrt(n/2)(1+log(n))", hyp_size},
        {"2/(n-2i+1) <= p^2 log(2/(1+p))^2 over case-2 range", hyp_case2},
    };
    report.witnesses.push_back({{"t", std::to_string(t)},
                                {"c", std::to_string(c)},
                                {"certified", report.all_hypotheses_hold() ? "yes" : "no"}});
    return report;
}

WilsonBound wilson_lower_bound(const WalkParams& params, long t) {
    if (params.n < 4) throw std::invalid_argument("wilson_lower_bound: need n >= 4");
    if (t < 0) throw std::invalid_argument("wilson_lower_bound: t < 0");
    int n = params.n;
    Partition fix_minus_one({n - 1, 1});
    Partition two_row({n - 2, 2});
    Partition hook({n - 2, 1, 1});

    Rat psi1 = eigenvalue_direct(fix_minus_one, params);
    Rat psi2 = eigenvalue_direct(two_row, params);
    Rat psi3 = eigenvalue_direct(hook, params);

    WilsonBound bound;
    bound.expectation = Rat(dimension(fix_minus_one)) * rat_pow(psi1, t);
    // chi_{[n-1,1]}^2 = 1 + chi_{[n-1,1]} + chi_{[n-2,2]} + chi_{[n-2,1,1]}
    Rat second_moment = 1 + bound.expectation +
                        Rat(dimension(two_row)) * rat_pow(psi2, t) +
                        Rat(dimension(hook)) * rat_pow(psi3, t);
    bound.var_walk = second_moment - bound.expectation * bound.expectation;
    bound.var_walk.canonicalize();
    bound.sigma_sq = (bound.var_walk + 1) / 2;
    bound.sigma_sq.canonicalize();
    if (bound.sigma_sq == 0) throw std::logic_error("wilson_lower_bound: zero sigma");
    bound.r_sq = bound.expectation * bound.expectation / bound.sigma_sq;
    bound.r_sq.canonicalize();
    bound.value = bound.r_sq / (4 + bound.r_sq);
    bound.value.canonicalize();
    return bound;
}

BoundReport WilsonBound::report() const {
    BoundReport report;
    report.kind = BoundKind::WilsonLower;
    report.value = to_double(value);
    report.hypotheses = {{"n >= 4", true}};
    report.witnesses.push_back({{"E", rational_str(expectation)},
                                {"Var_P", rational_str(var_walk)},
                                {"sigma^2", rational_str(sigma_sq)},
                                {"r^2", rational_str(r_sq)},
                                {"value", rational_str(value)}});
    return report;
}

Rat parity_lower_bound_exact(const WalkParams& params, long t) {
    if (t < 0 || t % 2 != 0)
        throw std::invalid_argument("parity_lower_bound: t must be even");
    if (params.p > Rat(1, 2)) return 0;
    Rat base = 1 - 2 * params.p;
    Rat value = rat_pow(base, t * params.half()) / 2;
    value.canonicalize();
    return value;
}

BoundReport parity_lower_bound(const WalkParams& params, long t) {
    Rat exact = parity_lower_bound_exact(params, t);
    Rat signed_gap = rat_pow(2 * params.p - 1, t * params.half());
    BoundReport report;
    report.kind = BoundKind::ParityLower;
    report.value = to_double(exact);
    report.hypotheses = {{"t even", true}, {"p <= 1/2", params.p <= Rat(1, 2)}};
    report.witnesses.push_back({{"bound", rational_str(exact)},
                                {"parity_gap", rational_str(signed_gap)}});
    return report;
}

SeaworldReport verify_seaworld(int n, int i, const Rat& p) {
    if (n < 2 || n % 2 != 0 || i < 0 || 2 * i > n)
        throw std::invalid_argument("verify_seaworld: need even n and 0 <= i <= n/2");
    if (p <= 0) throw std::invalid_argument("verify_seaworld: p must be positive");
    SeaworldReport report;
    report.n = n;
    report.i = i;
    report.p = p;
    int half = n / 2;

    Rat rhs = 0;
    for (int j = 0; j <= half; ++j) {
        if ((i - j) % 2 != 0 || i - j < 0) continue;
        if ((n - i - j) % 2 != 0 || n - i - j < 0) continue;
        Int ways = multinomial(half, {(long)j, (long)((n - i - j) / 2), (long)((i - j) / 2)});
        if (ways == 0) continue;
        rhs += Rat(Int(1) << j) * rat_pow(p, -(half - j)) * Rat(ways);
    }
    rhs.canonicalize();
    report.rhs = rhs;

    Rat ratio = (1 - p) / p;
    Rat lhs_a = 0, lhs_b = 0;
    for (int j1 = 0; j1 <= half; ++j1) {
        for (int j2 = 0; j1 + j2 <= half; ++j2) {
            Int ways = multinomial(half, {(long)j1, (long)j2});
            if (ways == 0) continue;
            Rat weight = rat_pow(ratio, j1 + j2) * Rat(ways);
            lhs_a += weight * Rat(binomial(n - 2 * j1 - 2 * j2, i - 2 * j2));
            lhs_b += weight * Rat(binomial(n - 2 * j1 - 2 * j2, i - 2 * j1 - 2 * j2));
        }
    }
    lhs_a.canonicalize();
    lhs_b.canonicalize();
    report.lhs_a = lhs_a;
    report.lhs_b = lhs_b;
    report.a_matches = (lhs_a == rhs);
    report.b_matches = (lhs_b == rhs);
    return report;
}

}  // namespace iwalk
