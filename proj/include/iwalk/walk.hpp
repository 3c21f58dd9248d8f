#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "iwalk/partition.hpp"
#include "iwalk/rational.hpp"
#include "iwalk/rng.hpp"
#include "iwalk/spectrum.hpp"

namespace iwalk {

// Exact class-function distributions are computed up to this n by default.
inline constexpr int kDistCap = 8;
// The convolution oracle works in the class algebra of S_n for n up to this.
inline constexpr int kOracleCap = 8;

// Probability is stored PER ELEMENT: uniform is constantly 1/n!, and the
// class mass is probs[alpha] * class_size(alpha).
struct ClassDistribution {
    int n = 0;
    std::map<CycleType, Rat> probs;

    Rat at(const CycleType& alpha) const;   // 0 for absent classes
    Rat class_mass(const CycleType& alpha) const;
    Rat total_mass() const;
};

struct Involution {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // disjoint 2-cycles on 1..n
    int s() const { return static_cast<int>(pairs.size()); }
};

// One step of the walk: class (1^{n-2s},2^s) gets total mass
// C(n/2,s) p^{n/2-s} (1-p)^s.
ClassDistribution generator_distribution(const WalkParams& params);

// Uniform perfect matching, then each 2-cycle kept independently with
// probability 1-p.
Involution sample_generator(const WalkParams& params, SplitMix64& rng);

// Composes t sampled generators; returns the walk position as a permutation
// image array (0-indexed).
std::vector<int> sample_walk(const WalkParams& params, long t, SplitMix64& rng);

CycleType cycle_type_of(const std::vector<int>& permutation);

// Exact time-t distribution by Fourier inversion,
// P^{*t}(g) = (1/n!) sum_lambda d_lambda psi_lambda^t chi_lambda(g).
ClassDistribution distribution_at_time(const WalkParams& params, long t, int cap = kDistCap);

// Independent oracle: repeated convolution of the generator in the class
// algebra. Structure constants come from explicit enumeration of S_n for
// n <= 6 and from the character (Burnside) formula for n in {7, 8}; the
// latter uses class products only, never the walk eigenvalues.
ClassDistribution convolution_oracle(const WalkParams& params, long t, int cap = kOracleCap);

// (1/2) sum_alpha |alpha| |probs[alpha] - 1/n!|.
Rat total_variation(const ClassDistribution& dist);

// max over classes of 1 - n! P(g), with the argmax class; ties resolved to
// the cycle-lexicographically least class.
std::pair<Rat, CycleType> separation(const ClassDistribution& dist);

// 1 - n! * P(g) for one class.
Rat deficiency_at(const ClassDistribution& dist, const CycleType& alpha);

// sum over even classes minus sum over odd classes of class mass; equals
// (2p-1)^{tn/2} for the walk.
Rat parity_gap(const ClassDistribution& dist);

// E over the distribution of chi_lambda.
Rat distribution_expected_character(const ClassDistribution& dist, const Partition& lambda);

struct MonteCarloEstimate {
    int n = 0;
    long t = 0;
    long samples = 0;
    uint64_t seed = 0;
    std::map<CycleType, long> counts;

    Rat frequency(const CycleType& alpha) const;         // count/samples
    double standard_error(const CycleType& alpha) const; // sqrt(f(1-f)/samples)
};

// Reproducible given (seed, samples): sampling runs in fixed-size blocks with
// seeds derived from (seed, block index).
MonteCarloEstimate monte_carlo_estimate(const WalkParams& params, long t, long samples,
                                        uint64_t seed);

}  // namespace iwalk
