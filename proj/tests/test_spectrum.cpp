#include <doctest.h>

#include "iwalk/spectrum.hpp"
#include "test_util.hpp"

using namespace iwalk;

namespace {

const std::vector<Rat> p_grid() {
    return {frac(0, 1), frac(1, 4), frac(1, 2), frac(2, 3), frac(3, 4), frac(1, 1)};
}

}  // namespace

TEST_CASE("walk params validation") {
    CHECK_THROWS_AS(WalkParams(3, frac(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(WalkParams(0, frac(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(WalkParams(4, frac(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(WalkParams(4, frac(-1, 2)), std::invalid_argument);
    CHECK_NOTHROW(WalkParams(2, frac(0, 1)));
}

TEST_CASE("n = 4 eigenvalue table at p = 1/2") {
    WalkParams params(4, frac(1, 2));
    CHECK(eigenvalue_direct(Partition({4}), params) == 1);
    CHECK(eigenvalue_direct(Partition({3, 1}), params) == frac(1, 3));
    CHECK(eigenvalue_direct(Partition({2, 2}), params) == frac(1, 2));
    CHECK(eigenvalue_direct(Partition({2, 1, 1}), params) == 0);
    CHECK(eigenvalue_direct(Partition({1, 1, 1, 1}), params) == 0);
}

TEST_CASE("sign representation eigenvalue is (2p-1)^{n/2}") {
    for (int n = 2; n <= 12; n += 2) {
        Partition sign_rep(std::vector<int>(n, 1));
        for (const Rat& p : p_grid()) {
            WalkParams params(n, p);
            CHECK(eigenvalue_direct(sign_rep, params) == rat_pow(2 * p - 1, n / 2));
        }
    }
}

TEST_CASE("recursive eigenvalue base cases and [2,2]") {
    for (const Rat& p : p_grid()) {
        WalkParams two(2, p);
        CHECK(eigenvalue_recursive(Partition({2}), two) == 1);
        CHECK(eigenvalue_recursive(Partition({1, 1}), two) == 2 * p - 1);
        WalkParams four(4, p);
        Rat expected = p * p + (1 - p) * (1 - p);
        expected.canonicalize();
        CHECK(eigenvalue_recursive(Partition({2, 2}), four) == expected);
    }
}

TEST_CASE("direct equals recursive for all partitions up to n = 10") {
    for (int n = 2; n <= 10; n += 2) {
        for (const Rat& p : p_grid()) {
            WalkParams params(n, p);
            for (const Partition& lambda : enumerate_partitions(n))
                CHECK(eigenvalue_direct(lambda, params) == eigenvalue_recursive(lambda, params));
        }
    }
}

TEST_CASE("closed forms agree with direct where defined") {
    for (int n = 2; n <= 12; n += 2) {
        for (const Rat& p : p_grid()) {
            WalkParams params(n, p);
            int defined = 0;
            for (const Partition& lambda : enumerate_partitions(n)) {
                auto closed = eigenvalue_closed_form(lambda, params);
                if (!closed) continue;
                ++defined;
                CHECK(*closed == eigenvalue_direct(lambda, params));
            }
            CHECK(defined >= std::min(n, 4));
        }
    }
    // spec-pinned cells
    CHECK(*eigenvalue_closed_form(Partition({3, 1}), WalkParams(4, frac(1, 2))) == frac(1, 3));
    CHECK(*eigenvalue_closed_form(Partition({4, 1, 1}), WalkParams(6, frac(1, 2))) ==
          frac(1, 10));
    CHECK(*eigenvalue_closed_form(Partition({2, 2}), WalkParams(4, frac(1, 2))) == frac(1, 2));
    CHECK_FALSE(eigenvalue_closed_form(Partition({3, 2, 1}), WalkParams(6, frac(1, 2))));
}

TEST_CASE("[n-2,2] closed form: plus sign right, minus sign wrong") {
    for (int n = 4; n <= 14; n += 2) {
        WalkParams params(n, frac(1, 2));
        Rat direct = eigenvalue_direct(Partition({n - 2, 2}), params);
        Rat q = 1 - params.p;
        Rat plus_form = params.p * params.p + q * q / (n - 3);
        plus_form.canonicalize();
        Rat minus_form = params.p * params.p - q * q / (n - 3);
        minus_form.canonicalize();
        CHECK(direct == plus_form);
        CHECK(direct != minus_form);
    }
    // the n = 4 witness: direct 1/2, minus variant 0
    WalkParams params(4, frac(1, 2));
    CHECK(eigenvalue_direct(Partition({2, 2}), params) == frac(1, 2));
}

TEST_CASE("hook formulas at p = 1/2") {
    for (int n = 4; n <= 12; n += 2) {
        WalkParams params(n, frac(1, 2));
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> parts{n - i};
            parts.insert(parts.end(), i, 1);
            Rat direct = eigenvalue_direct(Partition(parts), params);
            CHECK(direct == hook_psi_half(n, i));
            if (2 * i >= n) CHECK(direct == 0);
        }
    }
}

TEST_CASE("psi is 1 at p = 1 and bounded by 1 everywhere") {
    for (int n = 2; n <= 10; n += 2) {
        WalkParams lazy(n, frac(1, 1));
        for (const Partition& lambda : enumerate_partitions(n)) {
            CHECK(eigenvalue_direct(lambda, lazy) == 1);
            for (const Rat& p : p_grid()) {
                Rat psi = eigenvalue_direct(lambda, WalkParams(n, p));
                CHECK(psi <= 1);
                CHECK(psi >= -1);
            }
        }
    }
}

TEST_CASE("coefficient sums") {
    for (const Rat& p : p_grid()) {
        CHECK(coefficient_sum(Partition({6}), p) == 1);
        Rat sign_expected = 2 * p - 1;
        CHECK(coefficient_sum(Partition(std::vector<int>(6, 1)), p) == sign_expected);
        CHECK(coefficient_sum(Partition({2, 2}), p) == p);
    }
    // identity holds for everything up to n = 10 (throws internally if not)
    for (int n = 2; n <= 10; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            CHECK_NOTHROW(coefficient_sum(lambda, frac(2, 3)));
}

TEST_CASE("coefficient sum decreases down majorization covers") {
    for (int n = 2; n <= 10; ++n) {
        auto covers = majorization_covers(n);
        for (const Rat& p : {frac(1, 2), frac(2, 3), frac(3, 4), frac(1, 1)}) {
            for (const auto& [lo, hi] : covers)
                CHECK(coefficient_sum(lo, p) <= coefficient_sum(hi, p));
        }
    }
}

TEST_CASE("build_table") {
    WalkParams params(6, frac(1, 2));
    EigenvalueTable table = build_table(params, {.cap = kTableCap, .cross_check = true});
    CHECK(table.values.size() == 11);
    CHECK(table.at(Partition({6})) == 1);
    CHECK(table.at(Partition({5, 1})) == frac(2, 5));
    CHECK(table.at(Partition({4, 2})) == frac(1, 3));
    CHECK(table.at(Partition({3, 3})) == frac(1, 5));

    EigenvalueTable base = build_table(WalkParams(2, frac(1, 4)));
    CHECK(base.at(Partition({2})) == 1);
    CHECK(base.at(Partition({1, 1})) == frac(-1, 2));

    CHECK_THROWS_AS(build_table(WalkParams(22, frac(1, 2))), cap_exceeded);
}

TEST_CASE("expected character") {
    WalkParams params(4, frac(1, 2));
    CHECK(expected_character(Partition({3, 1}), params, 1) == 1);
    CHECK(expected_character(Partition({3, 1}), params, 0) == 3);
    for (int n = 4; n <= 8; n += 2) {
        WalkParams p34(n, frac(3, 4));
        Partition lambda({n - 1, 1});
        Rat psi = p34.p - (1 - p34.p) / (n - 1);
        psi.canonicalize();
        for (long t = 0; t <= 5; ++t)
            CHECK(expected_character(lambda, p34, t) == Rat(n - 1) * rat_pow(psi, t));
    }
}

TEST_CASE("monotonicity report: n = 6 passes, n = 4 fails below 2/3") {
    MonotonicityReport good = verify_monotonicity(WalkParams(6, frac(1, 2)));
    CHECK(good.deci_pass);
    CHECK(good.twopart_pass);
    CHECK(good.n2bound_pass);
    REQUIRE(good.two_row_chain.size() == 4);
    CHECK(good.two_row_chain[0].second == 1);
    CHECK(good.two_row_chain[1].second == frac(2, 5));
    CHECK(good.two_row_chain[2].second == frac(1, 3));
    CHECK(good.two_row_chain[3].second == frac(1, 5));

    MonotonicityReport bad = verify_monotonicity(WalkParams(4, frac(1, 2)));
    CHECK_FALSE(bad.deci_pass);
    REQUIRE(bad.deci_violations.size() == 1);
    CHECK(bad.deci_violations[0].lambda == Partition({2, 2}));
    CHECK(bad.deci_violations[0].psi_lambda == frac(1, 2));
    CHECK(bad.deci_violations[0].psi_reference == frac(1, 3));

    // crossover at the root p = 2/3 of 3p^2 - 5p + 2
    CHECK(verify_monotonicity(WalkParams(4, frac(2, 3))).deci_pass);  // equality
    CHECK_FALSE(verify_monotonicity(WalkParams(4, frac(13, 20))).deci_pass);
    CHECK(verify_monotonicity(WalkParams(4, frac(7, 10))).deci_pass);

    MonotonicityReport n8 = verify_monotonicity(WalkParams(8, frac(3, 4)));
    CHECK(n8.deci_pass);
    CHECK(n8.twopart_pass);
    CHECK(n8.n2bound_pass);  // includes [3,3,2] against [4,4]
}
