#include "iwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "iwalk/characters.hpp"

namespace iwalk {

uint64_t SplitMix64::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return draw % bound;
}

bool SplitMix64::bernoulli(const Rat& probability) {
    if (probability < 0 || probability > 1)
        throw std::invalid_argument("bernoulli: probability outside [0,1]");
    if (!probability.get_den().fits_ulong_p() && !probability.get_den().fits_slong_p())
        throw std::invalid_argument("bernoulli: denominator too large to sample");
    uint64_t den = mpz_get_ui(probability.get_den().get_mpz_t());
    uint64_t num = mpz_get_ui(probability.get_num().get_mpz_t());
    return below(den) < num;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return mixer.next();
}

Rat ClassDistribution::at(const CycleType& alpha) const {
    auto it = probs.find(alpha);
    return it == probs.end() ? Rat(0) : it->second;
}

Rat ClassDistribution::class_mass(const CycleType& alpha) const {
    Rat mass = at(alpha) * Rat(class_size(alpha));
    mass.canonicalize();
    return mass;
}

Rat ClassDistribution::total_mass() const {
    Rat total = 0;
    for (const auto& [alpha, prob] : probs) total += prob * Rat(class_size(alpha));
    total.canonicalize();
    return total;
}

ClassDistribution generator_distribution(const WalkParams& params) {
    ClassDistribution dist;
    dist.n = params.n;
    int half = params.half();
    Rat q = 1 - params.p;
    for (int s = 0; s <= half; ++s) {
        Rat mass = Rat(binomial(half, s)) * rat_pow(params.p, half - s) * rat_pow(q, s);
        if (mass == 0) continue;
        CycleType alpha = CycleType::involution(params.n, s);
        Rat per_element = mass / Rat(class_size(alpha));
        per_element.canonicalize();
        dist.probs.emplace(std::move(alpha), std::move(per_element));
    }
    return dist;
}

Involution sample_generator(const WalkParams& params, SplitMix64& rng) {
    int n = params.n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i >= 1; --i) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    Involution inv;
    inv.n = n;
    Rat keep = 1 - params.p;
    for (int k = 0; k + 1 < n; k += 2) {
        if (rng.bernoulli(keep)) inv.pairs.push_back({order[k], order[k + 1]});
    }
    return inv;
}

std::vector<int> sample_walk(const WalkParams& params, long t, SplitMix64& rng) {
    int n = params.n;
    std::vector<int> position(n);
    std::iota(position.begin(), position.end(), 0);
    std::vector<int> step(n);
    for (long k = 0; k < t; ++k) {
        Involution inv = sample_generator(params, rng);
        std::iota(step.begin(), step.end(), 0);
        for (const auto& [a, b] : inv.pairs) std::swap(step[a - 1], step[b - 1]);
        for (int q = 0; q < n; ++q) position[q] = step[position[q]];
    }
    return position;
}

CycleType cycle_type_of(const std::vector<int>& permutation) {
    int n = static_cast<int>(permutation.size());
    std::vector<int> mults(n, 0);
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int q = start; !seen[q]; q = permutation[q]) {
            seen[q] = true;
            ++len;
        }
        ++mults[len - 1];
    }
    return CycleType(n, std::move(mults));
}

ClassDistribution distribution_at_time(const WalkParams& params, long t, int cap) {
    if (t < 0) throw std::invalid_argument("distribution_at_time: t < 0");
    if (params.n > cap)
        throw cap_exceeded("distribution_at_time: n = " + std::to_string(params.n) +
                           " exceeds exact-distribution cap " + std::to_string(cap));
    EigenvalueTable table = build_table(params, {.cap = cap});
    ClassDistribution dist;
    dist.n = params.n;
    Rat n_fact(factorial(params.n));
    for (const CycleType& alpha : enumerate_classes(params.n)) {
        Rat sum = 0;
        for (const auto& [lambda, psi] : table.values)
            sum += Rat(dimension(lambda)) * rat_pow(psi, t) * Rat(character(lambda, alpha));
        Rat prob = sum / n_fact;
        prob.canonicalize();
        dist.probs.emplace(alpha, std::move(prob));
    }
    return dist;
}

namespace {

// Structure constants of the class algebra of S_n:
//   K_A K_B = sum_C c_{AB}^C K_C,
// with c_{AB}^C = #{(a,b) in A x B : ab = c0} for a fixed representative c0.
struct ClassAlgebra {
    int n;
    std::vector<CycleType> classes;
    std::map<CycleType, int> index;
    std::vector<std::vector<std::vector<Int>>> constants;  // [A][B][C]
};

std::vector<int> class_representative(const CycleType& alpha) {
    std::vector<int> perm(alpha.n());
    int next = 0;
    for (int k = 1; k <= alpha.n(); ++k) {
        for (int c = 0; c < alpha.mult(k); ++c) {
            for (int q = 0; q < k; ++q)
                perm[next + q] = next + (q + 1) % k;
            next += k;
        }
    }
    return perm;
}

ClassAlgebra build_by_enumeration(int n) {
    ClassAlgebra algebra;
    algebra.n = n;
    algebra.classes = enumerate_classes(n);
    int num = static_cast<int>(algebra.classes.size());
    for (int c = 0; c < num; ++c) algebra.index[algebra.classes[c]] = c;
    algebra.constants.assign(num, std::vector<std::vector<Int>>(num, std::vector<Int>(num, 0)));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> inverse(n), product(n);
    for (int c = 0; c < num; ++c) {
        std::vector<int> rep = class_representative(algebra.classes[c]);
        for (const auto& g : all) {
            for (int q = 0; q < n; ++q) inverse[g[q]] = q;
            for (int q = 0; q < n; ++q) product[q] = rep[inverse[q]];  // g^{-1} then rep
            int a = algebra.index.at(cycle_type_of(g));
            int b = algebra.index.at(cycle_type_of(product));
            algebra.constants[a][b][c] += 1;
        }
    }
    return algebra;
}

ClassAlgebra build_by_characters(int n) {
    ClassAlgebra algebra;
    algebra.n = n;
    algebra.classes = enumerate_classes(n);
    int num = static_cast<int>(algebra.classes.size());
    for (int c = 0; c < num; ++c) algebra.index[algebra.classes[c]] = c;
    algebra.constants.assign(num, std::vector<std::vector<Int>>(num, std::vector<Int>(num, 0)));

    std::vector<Partition> lambdas = enumerate_partitions(n);
    std::vector<Int> sizes(num);
    for (int c = 0; c < num; ++c) sizes[c] = class_size(algebra.classes[c]);
    // chi[lambda][class]
    std::vector<std::vector<Int>> chi(lambdas.size(), std::vector<Int>(num));
    std::vector<Int> dims(lambdas.size());
    for (size_t l = 0; l < lambdas.size(); ++l) {
        dims[l] = dimension(lambdas[l]);
        for (int c = 0; c < num; ++c) chi[l][c] = character(lambdas[l], algebra.classes[c]);
    }
    Rat n_fact(factorial(n));
    for (int a = 0; a < num; ++a) {
        for (int b = 0; b < num; ++b) {
            for (int c = 0; c < num; ++c) {
                // Every class of S_n is self-inverse, so chi(C^{-1}) = chi(C).
                Rat sum = 0;
                for (size_t l = 0; l < lambdas.size(); ++l)
                    sum += Rat(chi[l][a] * chi[l][b] * chi[l][c], dims[l]);
                Rat value = Rat(sizes[a] * sizes[b]) * sum / n_fact;
                value.canonicalize();
                if (value.get_den() != 1 || value < 0)
                    throw std::logic_error("class algebra: non-integral structure constant");
                algebra.constants[a][b][c] = value.get_num();
            }
        }
    }
    return algebra;
}

const ClassAlgebra& class_algebra(int n, int cap) {
    if (n > cap || n > 8)
        throw cap_exceeded("convolution oracle: n = " + std::to_string(n) +
                           " exceeds oracle cap " + std::to_string(std::min(cap, 8)));
    static std::map<int, ClassAlgebra> cache;
    static std::mutex cache_mutex;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, n <= 6 ? build_by_enumeration(n) : build_by_characters(n)).first;
    return it->second;
}

}  // namespace

ClassDistribution convolution_oracle(const WalkParams& params, long t, int cap) {
    if (t < 0) throw std::invalid_argument("convolution_oracle: t < 0");
    const ClassAlgebra& algebra = class_algebra(params.n, cap);
    int num = static_cast<int>(algebra.classes.size());

    std::vector<Rat> current(num, Rat(0));
    current[algebra.index.at(CycleType::involution(params.n, 0))] = 1;

    ClassDistribution generator = generator_distribution(params);
    std::vector<Rat> step(num, Rat(0));
    for (const auto& [alpha, prob] : generator.probs) step[algebra.index.at(alpha)] = prob;

    for (long k = 0; k < t; ++k) {
        std::vector<Rat> next(num, Rat(0));
        for (int a = 0; a < num; ++a) {
            if (current[a] == 0) continue;
            for (int b = 0; b < num; ++b) {
                if (step[b] == 0) continue;
                Rat weight = current[a] * step[b];
                for (int c = 0; c < num; ++c) {
                    if (algebra.constants[a][b][c] != 0)
                        next[c] += weight * Rat(algebra.constants[a][b][c]);
                }
            }
        }
        for (Rat& value : next) value.canonicalize();
        current = std::move(next);
    }

    ClassDistribution dist;
    dist.n = params.n;
    for (int c = 0; c < num; ++c) dist.probs.emplace(algebra.classes[c], current[c]);
    return dist;
}

Rat total_variation(const ClassDistribution& dist) {
    Rat uniform(1, 1);
    uniform /= Rat(factorial(dist.n));
    Rat sum = 0;
    for (const CycleType& alpha : enumerate_classes(dist.n)) {
        Rat diff = dist.at(alpha) - uniform;
        if (diff < 0) diff = -diff;
        sum += Rat(class_size(alpha)) * diff;
    }
    sum /= 2;
    sum.canonicalize();
    return sum;
}

Rat deficiency_at(const ClassDistribution& dist, const CycleType& alpha) {
    Rat value = 1 - Rat(factorial(dist.n)) * dist.at(alpha);
    value.canonicalize();
    return value;
}

std::pair<Rat, CycleType> separation(const ClassDistribution& dist) {
    bool first = true;
    Rat best;
    CycleType argmax;
    for (const CycleType& alpha : enumerate_classes(dist.n)) {
        Rat value = deficiency_at(dist, alpha);
        if (first || value > best ||
            (value == best && cycle_lex_compare(alpha, argmax) < 0)) {
            best = value;
            argmax = alpha;
            first = false;
        }
    }
    return {best, argmax};
}

Rat parity_gap(const ClassDistribution& dist) {
    Rat gap = 0;
    for (const auto& [alpha, prob] : dist.probs) {
        Rat mass = prob * Rat(class_size(alpha));
        gap += alpha.sign() > 0 ? mass : -mass;
    }
    gap.canonicalize();
    return gap;
}

Rat distribution_expected_character(const ClassDistribution& dist, const Partition& lambda) {
    Rat sum = 0;
    for (const auto& [alpha, prob] : dist.probs)
        sum += prob * Rat(class_size(alpha) * character(lambda, alpha));
    sum.canonicalize();
    return sum;
}

Rat MonteCarloEstimate::frequency(const CycleType& alpha) const {
    auto it = counts.find(alpha);
    long count = it == counts.end() ? 0 : it->second;
    Rat freq(count, samples);
    freq.canonicalize();
    return freq;
}

double MonteCarloEstimate::standard_error(const CycleType& alpha) const {
    double f = to_double(frequency(alpha));
    return std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
}

MonteCarloEstimate monte_carlo_estimate(const WalkParams& params, long t, long samples,
                                        uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("monte_carlo_estimate: samples < 1");
    if (t < 0) throw std::invalid_argument("monte_carlo_estimate: t < 0");
    constexpr long kBlockSize = 4096;
    MonteCarloEstimate estimate;
    estimate.n = params.n;
    estimate.t = t;
    estimate.samples = samples;
    estimate.seed = seed;
    long done = 0;
    for (uint64_t block = 0; done < samples; ++block) {
        SplitMix64 rng(derive_seed(seed, block));
        long batch = std::min(kBlockSize, samples - done);
        for (long k = 0; k < batch; ++k)
            ++estimate.counts[cycle_type_of(sample_walk(params, t, rng))];
        done += batch;
    }
    return estimate;
}

}  // namespace iwalk
