#include "embrank/bignat.hpp"

#include "embrank/error.hpp"

namespace embrank {

BigNat parse_bignat(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::MalformedInput, "empty number");
  for (char ch : text)
    if (ch < '0' || ch > '9') throw Error(ErrorKind::MalformedInput, "not a decimal natural: '" + text + "'");
  return BigNat(text, 10);
}

std::string to_decimal(const BigNat& x) { return x.get_str(10); }

BigNat factorial(std::uint64_t k) {
  BigNat r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigNat uniform_below(const BigNat& bound, std::mt19937_64& rng) {
  if (bound <= 1) return 0;
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  std::size_t top_bits = bits - 64 * (words - 1);
  while (true) {
    BigNat x = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = rng();
      if (i == 0 && top_bits < 64) w &= (std::uint64_t{1} << top_bits) - 1;
      x <<= 64;
      // mpz_class has no direct uint64 ctor on every platform; split into halves.
      x += BigNat(static_cast<unsigned long>(w >> 32)) << 32;
      x += static_cast<unsigned long>(w & 0xffffffffu);
    }
    if (x < bound) return x;
  }
}

}  // namespace embrank
