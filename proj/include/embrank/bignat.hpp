#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace embrank {

using BigNat = mpz_class;

// Decimal digits only; throws MalformedInput otherwise.
BigNat parse_bignat(const std::string& text);
std::string to_decimal(const BigNat& x);

BigNat factorial(std::uint64_t k);

// Uniform value in [0, bound) drawn from 64-bit words of rng (rejection sampling).
BigNat uniform_below(const BigNat& bound, std::mt19937_64& rng);

}  // namespace embrank
