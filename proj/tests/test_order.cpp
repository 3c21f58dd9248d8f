#include <doctest.h>

#include <cmath>

#include "iwalk/order.hpp"
#include "test_util.hpp"

using namespace iwalk;

namespace {

bool contains_pair(const std::vector<std::pair<CycleType, CycleType>>& pairs,
                   const CycleType& a, const CycleType& b) {
    for (const auto& [x, y] : pairs)
        if (x == a && y == b) return true;
    return false;
}

}  // namespace

TEST_CASE("likelihood order at n = 4, p = 1/2, t = 12") {
    WalkParams params(4, frac(1, 2));
    LikelihoodOrder order = likelihood_order(params, 12);
    REQUIRE(order.ranked.size() == 5);
    CHECK(order.ranked[0].first == CycleType::parse(4, "1:4"));
    CHECK(order.ranked[1].first == CycleType::parse(4, "2:2"));
    CHECK(order.ranked[2].first == CycleType::parse(4, "1:2,2:1"));
    CHECK(order.ranked[3].first == CycleType::parse(4, "4:1"));
    CHECK(order.ranked[4].first == CycleType::parse(4, "1:1,3:1"));
    CHECK(order.ties.empty());
    CHECK_FALSE(order_is_cycle_lex(order));
}

TEST_CASE("lazy walk: identity uniquely most likely, rest tied at zero") {
    WalkParams params(4, frac(1, 1));
    LikelihoodOrder order = likelihood_order(params, 5);
    CHECK(order.ranked[0].first == CycleType::involution(4, 0));
    CHECK(order.ranked[0].second == 1);
    REQUIRE(order.ties.size() == 1);
    CHECK(order.ties[0].size() == 4);
    // ties are not violations: cycle-lex is still a valid linear extension
    CHECK(order_is_cycle_lex(order));
}

TEST_CASE("limiting order: n = 4, p = 1/2 never reaches cycle-lex") {
    WalkParams params(4, frac(1, 2));
    OrderLimitReport report = limiting_order_check(params, 64);
    CHECK_FALSE(report.found);
    CHECK_FALSE(report.holds_at_all_t);
    CHECK(contains_pair(report.persistent_violations, CycleType::parse(4, "1:1,3:1"),
                        CycleType::parse(4, "4:1")));
}

TEST_CASE("limiting order: n = 4, p = 3/4 reaches cycle-lex") {
    // psi_[3,1] = 2/3 > psi_[2,2] = 5/8 at p = 3/4
    WalkParams params(4, frac(3, 4));
    OrderLimitReport report = limiting_order_check(params, 64);
    CHECK(report.found);
    CHECK(report.t_star >= 1);
    CHECK(report.persistent_violations.empty());
}

TEST_CASE("limiting order: n = 6, p = 1/2 stabilizes") {
    WalkParams params(6, frac(1, 2));
    OrderLimitReport report = limiting_order_check(params, 64);
    CHECK(report.found);
    CHECK(report.t_star <= 64);
}

TEST_CASE("limiting order stabilizes at p = 2/3") {
    CHECK(limiting_order_check(WalkParams(6, frac(2, 3)), 64).found);
    CHECK(limiting_order_check(WalkParams(8, frac(2, 3)), 64).found);
}

TEST_CASE("limiting order: n = 8, p = 1/2 never reaches cycle-lex") {
    // psi_{[5,3]} and psi_{[4,4]} tie at exactly 3/14, and the tied leading
    // Fourier terms combine to 28*1 + 14*(-3) < 0: class (4,4) stays strictly
    // more likely than the cycle-lex-greater (5,3) at every large t.
    WalkParams params(8, frac(1, 2));
    CHECK(eigenvalue_direct(Partition({5, 3}), params) == frac(3, 14));
    CHECK(eigenvalue_direct(Partition({4, 4}), params) == frac(3, 14));
    OrderLimitReport report = limiting_order_check(params, 64);
    CHECK_FALSE(report.found);
    CHECK(contains_pair(report.persistent_violations, CycleType::parse(8, "3:1,5:1"),
                        CycleType::parse(8, "4:2")));
    ClassDistribution dist = distribution_at_time(params, 16);
    CHECK(dist.at(CycleType::parse(8, "3:1,5:1")) < dist.at(CycleType::parse(8, "4:2")));

    // the tie breaks at p = 3/4 and the order stabilizes
    OrderLimitReport fixed = limiting_order_check(WalkParams(8, frac(3, 4)), 64);
    CHECK(fixed.found);
    CHECK(eigenvalue_direct(Partition({5, 3}), WalkParams(8, frac(3, 4))) == frac(1, 2));
    CHECK(eigenvalue_direct(Partition({4, 4}), WalkParams(8, frac(3, 4))) == frac(15, 32));
}

TEST_CASE("detector dominance") {
    DetectorReport bad = detector_dominance_check(WalkParams(4, frac(1, 2)));
    CHECK_FALSE(bad.all_pass);
    REQUIRE(!bad.rows.empty());
    CHECK(bad.rows[0].i == 1);
    CHECK_FALSE(bad.rows[0].pass);
    CHECK(bad.rows[0].argmax_detector == Partition({2, 2}));
    CHECK(bad.rows[0].max_detector_abs == frac(1, 2));
    CHECK(bad.rows[0].psi_two_row == frac(1, 3));

    CHECK(detector_dominance_check(WalkParams(6, frac(1, 2))).all_pass);
    CHECK(detector_dominance_check(WalkParams(8, frac(3, 4))).all_pass);
    CHECK(detector_dominance_check(WalkParams(4, frac(3, 4))).all_pass);
}

TEST_CASE("hook eigenvalue identities, three ways") {
    for (int n : {4, 6, 8, 10, 12, 14, 16}) {
        for (const Rat& p : {frac(1, 4), frac(1, 2), frac(2, 3), frac(3, 4)}) {
            HookIdentityReport report = hook_eigenvalue_identity_check(n, p);
            CHECK(report.all_equal);
            CHECK(report.rows.size() == static_cast<size_t>(n - 1));
        }
    }
    // pinned cells
    HookIdentityReport n4 = hook_eigenvalue_identity_check(4, frac(1, 2));
    CHECK(n4.rows[0].direct == frac(1, 3));
    HookIdentityReport n6 = hook_eigenvalue_identity_check(6, frac(1, 2));
    CHECK(n6.rows[2].direct == 0);  // i = 3 >= n/2 vanishes at p = 1/2
    CHECK(n6.rows[3].direct == 0);
    CHECK(n6.rows[4].direct == 0);
}

TEST_CASE("conjectured separation") {
    SeparationConjecture n4 = conjectured_separation(4, 3);
    REQUIRE(n4.terms.size() == 1);
    CHECK(n4.value == Rat(3) * rat_pow(frac(1, 3), 3));

    SeparationConjecture n6 = conjectured_separation(6, 3);
    REQUIRE(n6.terms.size() == 2);
    CHECK(n6.value == Rat(5) * rat_pow(frac(2, 5), 3) - Rat(6) * rat_pow(frac(1, 10), 3));
    CHECK(n6.value_double() == doctest::Approx(0.314));

    // n = 4: equals the n-cycle deficiency exactly for t >= 1
    WalkParams params(4, frac(1, 2));
    for (long t = 1; t <= 20; ++t) {
        ClassDistribution dist = distribution_at_time(params, t);
        CHECK(conjectured_separation(4, t).value ==
              deficiency_at(dist, CycleType::parse(4, "4:1")));
    }
}

TEST_CASE("alternating terms decrease for t >= ceil(log2(n-1))") {
    for (int n = 4; n <= 20; n += 2) {
        long threshold = static_cast<long>(std::ceil(std::log2(n - 1)));
        for (long t = threshold; t <= threshold + 10; ++t)
            CHECK(conjectured_separation(n, t).magnitudes_decreasing);
    }
}

TEST_CASE("separation argmax converges to the n-cycle when cycle-lex holds") {
    for (int n : {6, 8}) {
        for (const Rat& p : {frac(1, 2), frac(3, 4)}) {
            WalkParams params(n, p);
            ClassDistribution dist = distribution_at_time(params, 64);
            auto [value, argmax] = separation(dist);
            std::vector<int> mults(n, 0);
            mults[n - 1] = 1;
            CHECK(argmax == CycleType(n, mults));
        }
    }
}
