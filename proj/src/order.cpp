#include "iwalk/order.hpp"

#include <algorithm>
#include <set>

namespace iwalk {

LikelihoodOrder likelihood_order(const WalkParams& params, long t, int cap) {
    ClassDistribution dist = distribution_at_time(params, t, cap);
    LikelihoodOrder order;
    order.t = t;
    for (const auto& [alpha, prob] : dist.probs) order.ranked.push_back({alpha, prob});
    std::sort(order.ranked.begin(), order.ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return cycle_lex_compare(a.first, b.first) > 0;
    });
    size_t start = 0;
    while (start < order.ranked.size()) {
        size_t stop = start + 1;
        while (stop < order.ranked.size() &&
               order.ranked[stop].second == order.ranked[start].second)
            ++stop;
        if (stop - start > 1) {
            std::vector<CycleType> group;
            for (size_t q = start; q < stop; ++q) group.push_back(order.ranked[q].first);
            order.ties.push_back(std::move(group));
        }
        start = stop;
    }
    return order;
}

namespace {

std::vector<std::pair<CycleType, CycleType>> cycle_lex_violations(const LikelihoodOrder& order) {
    // P is available per class; a violation is alpha >_CL beta with
    // P(alpha) < P(beta) strictly. Ties never violate: cycle-lex stays a
    // valid linear extension through them.
    std::vector<std::pair<CycleType, CycleType>> out;
    const auto& ranked = order.ranked;
    for (size_t a = 0; a < ranked.size(); ++a) {
        for (size_t b = 0; b < ranked.size(); ++b) {
            if (a == b) continue;
            if (cycle_lex_compare(ranked[a].first, ranked[b].first) > 0 &&
                ranked[a].second < ranked[b].second)
                out.push_back({ranked[a].first, ranked[b].first});
        }
    }
    return out;
}

}  // namespace

bool order_is_cycle_lex(const LikelihoodOrder& order) {
    return cycle_lex_violations(order).empty();
}

OrderLimitReport limiting_order_check(const WalkParams& params, long t_max, int cap) {
    OrderLimitReport report;
    report.t_max = t_max;
    std::vector<bool> ok(t_max + 1, false);
    std::set<std::pair<std::string, std::string>> persistent;
    bool persistent_initialized = false;
    long tail_start = std::max<long>(1, t_max / 2);
    std::vector<std::pair<CycleType, CycleType>> last_violations;

    for (long t = 1; t <= t_max; ++t) {
        LikelihoodOrder order = likelihood_order(params, t, cap);
        auto violations = cycle_lex_violations(order);
        ok[t] = violations.empty();
        if (t >= tail_start) {
            std::set<std::pair<std::string, std::string>> keys;
            for (const auto& [a, b] : violations) keys.insert({a.str(), b.str()});
            if (!persistent_initialized) {
                persistent = std::move(keys);
                persistent_initialized = true;
            } else {
                std::set<std::pair<std::string, std::string>> kept;
                for (const auto& key : persistent)
                    if (keys.count(key)) kept.insert(key);
                persistent = std::move(kept);
            }
            if (t == t_max) last_violations = violations;
        }
    }

    report.holds_at_all_t = true;
    for (long t = 1; t <= t_max; ++t)
        if (!ok[t]) report.holds_at_all_t = false;

    long t_star = -1;
    for (long t = t_max; t >= 1 && ok[t]; --t) t_star = t;
    report.found = (t_star != -1);
    report.t_star = t_star;

    for (const auto& [a, b] : last_violations)
        if (persistent.count({a.str(), b.str()}))
            report.persistent_violations.push_back({a, b});
    return report;
}

DetectorReport detector_dominance_check(const WalkParams& params, int cap) {
    EigenvalueTable table = build_table(params, {.cap = cap});
    DetectorReport report;
    int n = params.n;
    for (int i = 1; 2 * i <= n; ++i) {
        DetectorRow row;
        row.i = i;
        Partition two_row({n - i, i});
        Rat psi = table.at(two_row);
        row.psi_two_row = psi < 0 ? Rat(-psi) : psi;
        bool first = true;
        for (const auto& [lambda, value] : table.values) {
            if (!is_i_cycle_detector(lambda, i)) continue;
            Rat abs_value = value < 0 ? Rat(-value) : value;
            if (first || abs_value > row.max_detector_abs) {
                row.max_detector_abs = abs_value;
                row.argmax_detector = lambda;
                first = false;
            }
        }
        row.pass = first || row.psi_two_row >= row.max_detector_abs;
        if (!row.pass) report.all_pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

HookIdentityReport hook_eigenvalue_identity_check(int n, const Rat& p) {
    WalkParams params(n, p);
    HookIdentityReport report;
    report.n = n;
    report.p = p;
    for (int i = 1; i <= n - 1; ++i) {
        HookIdentityRow row;
        row.i = i;
        row.recursion_sum = hook_psi_recursion_sum(n, i, p);
        row.charpoly_sum = hook_psi_charpoly_sum(n, i, p);
        std::vector<int> parts{n - i};
        parts.insert(parts.end(), i, 1);
        row.direct = eigenvalue_direct(Partition(parts), params);
        row.equal = (row.recursion_sum == row.charpoly_sum && row.charpoly_sum == row.direct);
        if (row.equal && p == Rat(1, 2)) {
            // the p = 1/2 closed form rides along as a fourth route
            row.equal = (row.direct == hook_psi_half(n, i));
        }
        if (!row.equal) report.all_equal = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

SeparationConjecture conjectured_separation(int n, long t) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("conjectured_separation: n must be even");
    if (t < 0) throw std::invalid_argument("conjectured_separation: t < 0");
    SeparationConjecture result;
    result.n = n;
    result.t = t;
    result.value = 0;
    for (int i = 1; 2 * i <= n - 1; ++i) {
        Rat term = Rat(binomial(n - i, i)) * rat_pow(hook_psi_half(n, i), t);
        if (i % 2 == 0) term = -term;
        term.canonicalize();
        result.value += term;
        result.terms.push_back(term);
    }
    result.value.canonicalize();
    result.magnitudes_decreasing = true;
    for (size_t k = 0; k + 1 < result.terms.size(); ++k) {
        Rat a = result.terms[k] < 0 ? Rat(-result.terms[k]) : result.terms[k];
        Rat b = result.terms[k + 1] < 0 ? Rat(-result.terms[k + 1]) : result.terms[k + 1];
        if (a < b) result.magnitudes_decreasing = false;
    }
    return result;
}

}  // namespace iwalk
