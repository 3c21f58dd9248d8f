#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace iwalk {

// Exact arithmetic used throughout the library. Partition parts and class
// multiplicities stay in machine integers; anything that can grow like n!
// (dimensions, class sizes, characters, probabilities) is arbitrary precision.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a request exceeds a configured size cap (full tables, exact
// distributions, the convolution oracle).
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

Int factorial(long n);

// binomial(n, k) = 0 unless 0 <= k <= n.
Int binomial(long n, long k);

// Falling-factorial binomial (x)_k / k! for any integer x, including
// negative x; 0 for k < 0. This is the polynomial continuation of C(x, k),
// e.g. falling_binomial(-1, 1) == -1.
Int falling_binomial(const Int& x, long k);

// n! / (parts[0]! * parts[1]! * ... * (n - sum)!). Zero when any part is
// negative or the parts overshoot n.
Int multinomial(long n, std::initializer_list<long> parts);

// base^e for e >= 0 (with 0^0 == 1); negative e inverts and requires a
// nonzero base.
Rat rat_pow(const Rat& base, long e);

// Accepts "num/den", plain integers, and decimal strings ("0.75" -> 3/4).
Rat parse_rational(std::string_view text);

// Canonical "num/den" form, denominator always present ("1/1", "-3/7").
std::string rational_str(const Rat& q);

double to_double(const Rat& q);

}  // namespace iwalk
