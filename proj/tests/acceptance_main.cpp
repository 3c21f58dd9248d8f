// Acceptance suite: every release criterion in one binary, one PASS/FAIL
// line per criterion, exit nonzero when anything fails. Exact quantities are
// compared in exact arithmetic; floats appear only in printed summaries.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "iwalk/bounds.hpp"
#include "iwalk/characters.hpp"
#include "iwalk/order.hpp"
#include "iwalk/partition.hpp"
#include "iwalk/spectrum.hpp"
#include "iwalk/walk.hpp"

using namespace iwalk;

namespace {

Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

struct Criterion {
    int id;
    std::string title;
    bool pass;
    double seconds;
    std::string detail;
};

std::vector<Criterion> results;

template <typename Fn>
void run(int id, const std::string& title, Fn&& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& err) {
        pass = false;
        detail = std::string("exception: ") + err.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back({id, title, pass, seconds, detail});
    std::printf("%s  criterion %2d  (%6.2fs)  %s%s%s\n", pass ? "PASS" : "FAIL", id, seconds,
                title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

CycleType n_cycle(int n) {
    std::vector<int> mults(n, 0);
    mults[n - 1] = 1;
    return CycleType(n, mults);
}

Partition hook_partition(int n, int i) {
    std::vector<int> parts{n - i};
    parts.insert(parts.end(), i, 1);
    return Partition(parts);
}

// 1. distribution_at_time == convolution_oracle, exact, n in {2,4,6},
//    t in [0,6], p in {0, 1/4, 1/2, 3/4}; under 10 s.
bool criterion_oracle(std::string& detail) {
    int cells = 0;
    for (int n : {2, 4, 6}) {
        for (const Rat& p : {frac(0, 1), frac(1, 4), frac(1, 2), frac(3, 4)}) {
            WalkParams params(n, p);
            for (long t = 0; t <= 6; ++t) {
                ClassDistribution fourier = distribution_at_time(params, t);
                ClassDistribution oracle = convolution_oracle(params, t);
                for (const CycleType& alpha : enumerate_classes(n)) {
                    if (fourier.at(alpha) != oracle.at(alpha)) {
                        detail = "mismatch at n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                 " class " + alpha.str();
                        return false;
                    }
                }
                ++cells;
            }
        }
    }
    detail = std::to_string(cells) + " (n,p,t) cells, all classes equal";
    return true;
}

// 2. direct = recursive (n <= 12) and closed form where defined (n <= 14),
//    p in {0, 1/4, 1/2, 2/3, 3/4, 1}; includes (2p-1)^{n/2} for [1^n] and the
//    p = 1/2 hook values C(n/2-1,i)/C(n-1,i).
bool criterion_triple(std::string& detail) {
    std::vector<Rat> grid = {frac(0, 1), frac(1, 4),  frac(1, 2),
                             frac(2, 3), frac(3, 4), frac(1, 1)};
    for (int n = 2; n <= 12; n += 2) {
        for (const Rat& p : grid) {
            WalkParams params(n, p);
            for (const Partition& lambda : enumerate_partitions(n)) {
                if (eigenvalue_direct(lambda, params) != eigenvalue_recursive(lambda, params)) {
                    detail = "direct != recursive at n=" + std::to_string(n) + " " + lambda.str();
                    return false;
                }
            }
        }
    }
    for (int n = 2; n <= 14; n += 2) {
        for (const Rat& p : grid) {
            WalkParams params(n, p);
            for (const Partition& lambda : enumerate_partitions(n)) {
                auto closed = eigenvalue_closed_form(lambda, params);
                if (closed && *closed != eigenvalue_direct(lambda, params)) {
                    detail = "closed form off at n=" + std::to_string(n) + " " + lambda.str();
                    return false;
                }
            }
            Partition sign_rep(std::vector<int>(n, 1));
            if (eigenvalue_direct(sign_rep, params) != rat_pow(2 * p - 1, n / 2)) {
                detail = "[1^n] formula failed";
                return false;
            }
        }
        WalkParams half(n, frac(1, 2));
        for (int i = 1; i <= n - 1; ++i) {
            if (eigenvalue_direct(hook_partition(n, i), half) != hook_psi_half(n, i)) {
                detail = "p=1/2 hook failed at i=" + std::to_string(i);
                return false;
            }
        }
    }
    detail = "n <= 12 full pairs, n <= 14 closed shapes, 6-point p grid";
    return true;
}

// 3. the [n-2,2] and [n-2,1,1] closed forms certified for n in {4..14};
//    the minus-sign [n-2,2] variant fails at n = 4 (witness 1/2 vs 0).
bool criterion_closed_form_signs(std::string& detail) {
    std::vector<Rat> grid = {frac(0, 1), frac(1, 4), frac(1, 2), frac(2, 3), frac(3, 4)};
    for (int n = 4; n <= 14; n += 2) {
        for (const Rat& p : grid) {
            WalkParams params(n, p);
            Rat q = 1 - p;
            Rat form_22 = p * p + q * q / (n - 3);
            form_22.canonicalize();
            if (eigenvalue_direct(Partition({n - 2, 2}), params) != form_22) {
                detail = "[n-2,2] closed form failed at n=" + std::to_string(n);
                return false;
            }
            Rat form_211 = p * p - (1 - p * p) / (n - 1);
            form_211.canonicalize();
            if (eigenvalue_direct(Partition({n - 2, 1, 1}), params) != form_211) {
                detail = "[n-2,1,1] closed form failed at n=" + std::to_string(n);
                return false;
            }
        }
    }
    // expected-fail fixture for the minus-sign variant
    WalkParams witness(4, frac(1, 2));
    Rat direct = eigenvalue_direct(Partition({2, 2}), witness);
    Rat minus_variant = witness.p * witness.p - (1 - witness.p) * (1 - witness.p) / 1;
    minus_variant.canonicalize();
    if (direct != frac(1, 2) || minus_variant != 0 || minus_variant == direct) {
        detail = "sign witness did not behave (want direct 1/2, minus variant 0)";
        return false;
    }
    detail = "closed forms exact on {4..14}; minus-sign variant fails at n=4 as required";
    return true;
}

// 4. MN = character polynomial on involution classes, even n <= 14; column
//    orthogonality exact for n <= 8; under 60 s.
bool criterion_characters(std::string& detail) {
    long pairs = 0;
    for (int n = 2; n <= 14; n += 2) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (int s = 0; 2 * s <= n; ++s) {
                if (character_involution(lambda, s) != character_involution_poly(lambda, s)) {
                    detail = "MN vs polynomial mismatch at " + lambda.str() +
                             " s=" + std::to_string(s);
                    return false;
                }
                ++pairs;
            }
        }
    }
    for (int n = 1; n <= 8; ++n) {
        auto classes = enumerate_classes(n);
        auto lambdas = enumerate_partitions(n);
        for (size_t a = 0; a < classes.size(); ++a) {
            for (size_t b = a; b < classes.size(); ++b) {
                Int sum = 0;
                for (const Partition& lambda : lambdas)
                    sum += character(lambda, classes[a]) * character(lambda, classes[b]);
                Int expected = (a == b) ? Int(factorial(n) / class_size(classes[a])) : Int(0);
                if (sum != expected) {
                    detail = "orthogonality failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    detail = std::to_string(pairs) + " (lambda,s) pairs dual-route equal; orthogonality n <= 8";
    return true;
}

// 5. (1/4) sum d^2 psi^{2t} >= TV^2 exactly for n <= 6, t <= 12; equality at
//    n = 2 for every t.
bool criterion_ds(std::string& detail) {
    for (int n : {2, 4, 6}) {
        for (const Rat& p : {frac(0, 1), frac(1, 4), frac(1, 2), frac(3, 4)}) {
            WalkParams params(n, p);
            for (long t = 0; t <= 12; ++t) {
                Rat bound = ds_upper_bound_exact(params, t);
                Rat tv = total_variation(distribution_at_time(params, t));
                if (bound < tv * tv) {
                    detail = "bound below TV^2 at n=" + std::to_string(n);
                    return false;
                }
                if (n == 2 && bound != tv * tv) {
                    detail = "n=2 equality failed at t=" + std::to_string(t);
                    return false;
                }
            }
        }
    }
    detail = "exact dominance on all cells, exact equality along n=2";
    return true;
}

// 6. wilson_lower_bound <= exact TV for n in {4,6}, t <= 8, p in {1/2,3/4};
//    the (n=4, p=1/2, t=1) cell is exactly 1/7 against TV 7/12.
bool criterion_wilson(std::string& detail) {
    for (int n : {4, 6}) {
        for (const Rat& p : {frac(1, 2), frac(3, 4)}) {
            WalkParams params(n, p);
            for (long t = 0; t <= 8; ++t) {
                Rat tv = total_variation(distribution_at_time(params, t));
                if (wilson_lower_bound(params, t).value > tv) {
                    detail = "bound above TV at n=" + std::to_string(n) + " t=" + std::to_string(t);
                    return false;
                }
            }
        }
    }
    WilsonBound cell = wilson_lower_bound(WalkParams(4, frac(1, 2)), 1);
    Rat tv = total_variation(distribution_at_time(WalkParams(4, frac(1, 2)), 1));
    if (cell.value != frac(1, 7) || tv != frac(7, 12)) {
        detail = "pinned cell wrong: value " + rational_str(cell.value) + ", tv " +
                 rational_str(tv);
        return false;
    }
    detail = "dominated by exact TV on the grid; pinned cell 1/7 vs 7/12";
    return true;
}

// 7. parity gap == (2p-1)^{tn/2} for n <= 6, t <= 10; parity lower bound
//    below exact TV for p in {0, 1/10, 1/4} at even t.
bool criterion_parity(std::string& detail) {
    for (int n : {2, 4, 6}) {
        for (const Rat& p : {frac(0, 1), frac(1, 10), frac(1, 4), frac(1, 2), frac(3, 4)}) {
            WalkParams params(n, p);
            for (long t = 0; t <= 10; ++t) {
                if (parity_gap(distribution_at_time(params, t)) !=
                    rat_pow(2 * p - 1, t * n / 2)) {
                    detail = "parity gap identity failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    for (int n : {2, 4, 6}) {
        for (const Rat& p : {frac(0, 1), frac(1, 10), frac(1, 4)}) {
            WalkParams params(n, p);
            for (long t = 2; t <= 10; t += 2) {
                Rat tv = total_variation(distribution_at_time(params, t));
                if (parity_lower_bound_exact(params, t) > tv) {
                    detail = "parity bound above TV at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    detail = "gap identity exact; parity bound dominated by TV at even t";
    return true;
}

// 8. SEAWORLD variant A equals the split RHS for all n <= 20, every i, p in
//    {1/4,1/2,3/4}; the (4,2,1/2) cell is 12 = 12 with variant B = 10.
bool criterion_seaworld(std::string& detail) {
    for (int n = 2; n <= 20; n += 2) {
        for (int i = 0; 2 * i <= n; ++i) {
            for (const Rat& p : {frac(1, 4), frac(1, 2), frac(3, 4)}) {
                SeaworldReport cell = verify_seaworld(n, i, p);
                if (!cell.a_matches) {
                    detail = "variant A failed at n=" + std::to_string(n) +
                             " i=" + std::to_string(i);
                    return false;
                }
            }
        }
    }
    SeaworldReport pinned = verify_seaworld(4, 2, frac(1, 2));
    if (pinned.rhs != 12 || pinned.lhs_a != 12 || pinned.lhs_b != 10 || pinned.b_matches) {
        detail = "pinned cell wrong: rhs " + rational_str(pinned.rhs) + ", A " +
                 rational_str(pinned.lhs_a) + ", B " + rational_str(pinned.lhs_b);
        return false;
    }
    detail = "variant A exact through n=20; variant B = 10 != 12 at the pinned cell";
    return true;
}

// 9. deci/twopart/n2bound and eigmaj cover monotonicity pass for even
//    n in [6,14], p in {1/2, 2/3, 3/4, 9/10}; the n = 4 deci anomaly
//    reproduces with crossover root 2/3 of 3p^2 - 5p + 2.
bool criterion_monotonicity(std::string& detail) {
    std::vector<Rat> grid = {frac(1, 2), frac(2, 3), frac(3, 4), frac(9, 10)};
    for (int n = 6; n <= 14; n += 2) {
        auto covers = majorization_covers(n);
        for (const Rat& p : grid) {
            MonotonicityReport mono = verify_monotonicity(WalkParams(n, p));
            if (!mono.deci_pass || !mono.twopart_pass || !mono.n2bound_pass) {
                detail = "monotonicity failed at n=" + std::to_string(n) + " p=" +
                         rational_str(p);
                return false;
            }
            for (const auto& [lo, hi] : covers) {
                if (coefficient_sum(lo, p) > coefficient_sum(hi, p)) {
                    detail = "cover monotonicity failed at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    // the documented n = 4 anomaly with its exact crossover
    bool fails_below = !verify_monotonicity(WalkParams(4, frac(1, 2))).deci_pass &&
                       !verify_monotonicity(WalkParams(4, frac(13, 20))).deci_pass;
    bool holds_from_root = verify_monotonicity(WalkParams(4, frac(2, 3))).deci_pass &&
                           verify_monotonicity(WalkParams(4, frac(3, 4))).deci_pass;
    Rat at_root_31 = eigenvalue_direct(Partition({3, 1}), WalkParams(4, frac(2, 3)));
    Rat at_root_22 = eigenvalue_direct(Partition({2, 2}), WalkParams(4, frac(2, 3)));
    if (!fails_below || !holds_from_root || at_root_31 != at_root_22) {
        detail = "n=4 anomaly pattern wrong (root of 3p^2-5p+2 must be 2/3)";
        return false;
    }
    detail = "lemmas hold on [6,14] grid; n=4 fails below 2/3 and ties exactly at 2/3";
    return true;
}

// 10. limiting order: finite t* <= 64 stable to 64 for n in {6,8},
//     p in {1/2,3/4}; the n = 4 non-cycle-lex limit reproduces; separation
//     argmax converges to the n-cycle where cycle-lex holds.
bool criterion_likelihood(std::string& detail) {
    // Required cells: every (n, p) below must reach a cycle-lex-stable tail
    // within t_max = 64. The (8, 1/2) cell cannot: psi_{[5,3]} = psi_{[4,4]}
    // = 3/14 exactly, and the tied leading terms combine to
    // 28(chi_{[5,3]}((5,3)) - chi_{[5,3]}((4,4))) + 14(chi_{[4,4]}((5,3)) -
    // chi_{[4,4]}((4,4))) = 28 - 42 < 0, so class (4,4) stays strictly more
    // likely than the cycle-lex-greater (5,3) at every large t. The suite
    // keeps the requirement as stated and reports the cell honestly.
    std::string cells;
    bool all_found = true;
    for (int n : {6, 8}) {
        for (const Rat& p : {frac(1, 2), frac(3, 4)}) {
            WalkParams params(n, p);
            OrderLimitReport report = limiting_order_check(params, 64);
            cells += "(" + std::to_string(n) + "," + rational_str(p) + "): ";
            if (!report.found || report.t_star > 64) {
                all_found = false;
                cells += "NO t*";
                for (const auto& [a, b] : report.persistent_violations)
                    cells += " [" + a.str() + " vs " + b.str() + "]";
                cells += "; ";
                continue;
            }
            cells += "t*=" + std::to_string(report.t_star) + "; ";
            auto [sep_value, argmax] = separation(distribution_at_time(params, 64));
            if (argmax != n_cycle(n)) {
                detail = "argmax at t=64 is " + argmax.str() + ", not the n-cycle";
                return false;
            }
        }
    }
    WalkParams anomaly(4, frac(1, 2));
    LikelihoodOrder order = likelihood_order(anomaly, 12);
    std::vector<std::string> expected = {"1:4", "2:2", "1:2,2:1", "4:1", "1:1,3:1"};
    for (size_t k = 0; k < expected.size(); ++k) {
        if (order.ranked[k].first.str() != expected[k]) {
            detail = "n=4 limit ranking differs at position " + std::to_string(k);
            return false;
        }
    }
    OrderLimitReport never = limiting_order_check(anomaly, 64);
    bool has_pair = false;
    for (const auto& [a, b] : never.persistent_violations)
        has_pair = has_pair || (a.str() == "1:1,3:1" && b.str() == "4:1");
    if (never.found || !has_pair) {
        detail = "n=4 anomaly not reproduced (expected persistent ((3,1),(4)) inversion)";
        return false;
    }
    detail = cells + "n=4 non-cycle-lex limit reproduced";
    return all_found;
}

// 11. conjectured separation equals the exact n-cycle deficiency for n = 4,
//     t in [2,20]; cells compared for n in {6,8} with discrepancies reported
//     (the conjectured binomial coefficients do not match there).
bool criterion_sep_conjecture(std::string& detail) {
    WalkParams four(4, frac(1, 2));
    for (long t = 2; t <= 20; ++t) {
        Rat exact = deficiency_at(distribution_at_time(four, t), n_cycle(4));
        if (conjectured_separation(4, t).value != exact) {
            detail = "n=4 mismatch at t=" + std::to_string(t);
            return false;
        }
    }
    std::string status;
    for (int n : {6, 8}) {
        WalkParams params(n, frac(1, 2));
        long t_lo = static_cast<long>(std::ceil(std::log2(n - 1)));
        long matches = 0, cells = 0;
        for (long t = t_lo; t <= 20; ++t) {
            Rat exact = deficiency_at(distribution_at_time(params, t), n_cycle(n));
            SeparationConjecture conj = conjectured_separation(n, t);
            if (!conj.magnitudes_decreasing) {
                detail = "terms not decreasing at n=" + std::to_string(n) +
                         " t=" + std::to_string(t);
                return false;
            }
            ++cells;
            if (conj.value == exact) ++matches;
        }
        status += "n=" + std::to_string(n) + ": " + std::to_string(matches) + "/" +
                  std::to_string(cells) + " cells match; ";
    }
    // Recorded, not assumed: with C(n-i,i) coefficients the alternating sum
    // does not reproduce the exact n-cycle deficiency beyond n = 4 (the
    // exact Fourier coefficient of the i-th hook term is C(n-1,i)).
    detail = "n=4 exact on [2,20]; " + status + "status recorded";
    return true;
}

// 12. Monte Carlo: 1e5 samples at (4,1/2,3) and (6,1/2,2) inside 4 sigma of
//     the exact class masses, bit-for-bit reproducible; under 30 s.
bool criterion_monte_carlo(std::string& detail) {
    struct Cell {
        int n;
        long t;
    };
    for (const Cell& cell : {Cell{4, 3}, Cell{6, 2}}) {
        WalkParams params(cell.n, frac(1, 2));
        const long samples = 100000;
        MonteCarloEstimate mc = monte_carlo_estimate(params, cell.t, samples, 20240817);
        MonteCarloEstimate again = monte_carlo_estimate(params, cell.t, samples, 20240817);
        if (mc.counts != again.counts) {
            detail = "not reproducible at n=" + std::to_string(cell.n);
            return false;
        }
        ClassDistribution exact = distribution_at_time(params, cell.t);
        for (const CycleType& alpha : enumerate_classes(cell.n)) {
            double mass = to_double(exact.class_mass(alpha));
            double sigma = std::sqrt(mass * (1.0 - mass) / samples);
            double freq = to_double(mc.frequency(alpha));
            if (std::abs(freq - mass) > 4.0 * sigma) {
                detail = "class " + alpha.str() + " off by more than 4 sigma at n=" +
                         std::to_string(cell.n);
                return false;
            }
        }
    }
    detail = "both cells inside 4 sigma, reproducible under the fixed seed";
    return true;
}

}  // namespace

int main() {
    run(1, "oracle equivalence (Fourier inversion == class-algebra convolution)",
        criterion_oracle);
    run(2, "eigenvalue triple agreement (direct/recursive/closed)", criterion_triple);
    run(3, "closed-form signs certified, minus-sign variant rejected",
        criterion_closed_form_signs);
    run(4, "character engine dual-route equality and orthogonality", criterion_characters);
    run(5, "upper bound validity (exact TV^2 dominance, n=2 equality)", criterion_ds);
    run(6, "lower bound validity (Chebyshev-style two-moment bound)", criterion_wilson);
    run(7, "parity identity and small-p parity lower bound", criterion_parity);
    run(8, "two-part splitting identity, variant A certified", criterion_seaworld);
    run(9, "eigenvalue monotonicity suite with the n=4 anomaly", criterion_monotonicity);
    run(10, "limiting likelihood order and separation argmax", criterion_likelihood);
    run(11, "separation conjecture comparison", criterion_sep_conjecture);
    run(12, "Monte Carlo consistency and reproducibility", criterion_monte_carlo);

    int failures = 0;
    double budget_violation = 0;
    for (const Criterion& criterion : results) {
        if (!criterion.pass) ++failures;
        if (criterion.id == 1 && criterion.seconds > 10.0) budget_violation = criterion.seconds;
        if (criterion.id == 4 && criterion.seconds > 60.0) budget_violation = criterion.seconds;
        if (criterion.id == 12 && criterion.seconds > 30.0) budget_violation = criterion.seconds;
    }
    if (budget_violation > 0) {
        std::printf("FAIL  runtime budget exceeded (%.2fs)\n", budget_violation);
        ++failures;
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
