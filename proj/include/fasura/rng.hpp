#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace fasura {

// All shared randomness (codebooks, trials) is derived from a master seed
// through the SplitMix64 finalizer, so streams are reproducible across runs
// and independent of thread scheduling. The raw engine is std::mt19937_64,
// whose output sequence is pinned by the C++ standard; distributions below
// are hand-rolled because the std:: distribution algorithms are not.

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over the label, mixed with the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return mix64(master ^ mix64(h));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // Uniform in [0, 1): 53 mantissa bits.
  double uniform() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1], safe for log().
  double uniform_pos() {
    return (static_cast<double>(u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform_pos();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // CN(0, var): real and imaginary parts each N(0, var/2).
  std::complex<double> cnormal(double var) {
    double s = std::sqrt(0.5 * var);
    double re = normal();
    double im = normal();
    return {s * re, s * im};
  }

  bool bit() { return next_bits(1) != 0; }

  // Two independent fair bits (used for 4-point alphabets).
  std::uint32_t bits2() { return static_cast<std::uint32_t>(next_bits(2)); }

  // Uniform integer in [0, m), rejection sampling so the result is exact.
  std::uint64_t bounded(std::uint64_t m) {
    std::uint64_t lim = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
    std::uint64_t x;
    do {
      x = u64();
    } while (x >= lim);
    return x % m;
  }

 private:
  // Doles out small bit chunks LSB-first from buffered u64 draws.
  std::uint64_t next_bits(int k) {
    if (bits_left_ < k) {
      buffer_ = u64();
      bits_left_ = 64;
    }
    std::uint64_t out = buffer_ & ((std::uint64_t{1} << k) - 1);
    buffer_ >>= k;
    bits_left_ -= k;
    return out;
  }

  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int bits_left_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace fasura
