#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fasura {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polar decoder LLR update kernels. The min-sum kernel is the supported
// default; the sum-product kernel is an experimental switch.
enum class PolarKernel { min_sum, sum_product };

// Dimensions and knobs shared by transmitter, channel and receiver.
// Derived quantities: B_s = B - B_f, B_c = B_s + B_crc, J = 2^B_f.
struct SystemConfig {
  int B = 100;         // message bits per user
  int B_f = 16;        // bits mapped to the pilot/spreading index
  int n = 3200;        // total complex channel uses
  int n_p = 896;       // pilot length
  int L = 9;           // spreading factor (chips per coded symbol)
  int n_c = 512;       // polar code length
  int T = 256;         // payload symbols, must equal n_c/2
  int B_crc = 0;       // CRC bits; 0 selects 12 for K <= 300, else 16
  int M = 50;          // receive antennas
  int K = 100;         // active users (known to the receiver)
  int n_L = 64;        // polar list size
  std::uint64_t seed = 1;
  int nopice_rounds = 1;    // 0 disables the re-estimation loop
  int max_sic_iters = 32;   // cap on outer SIC iterations
  bool symbol_prior_half = false;  // use 0.5*I instead of 2*I in the symbol MMSE
  PolarKernel kernel = PolarKernel::min_sum;
  bool allow_duplicate_messages = false;
  int threads = 1;     // compute threads inside one receiver/trial

  int B_s() const { return B - B_f; }
  int effective_crc() const {
    if (B_crc != 0) return B_crc;
    return K <= 300 ? 12 : 16;
  }
  int B_c() const { return B_s() + effective_crc(); }
  std::uint32_t J() const { return std::uint32_t{1} << B_f; }

  // Throws ConfigError when the dimension relations do not hold.
  void validate() const;

  // Canonical key=value serialization of the codebook-relevant fields,
  // used for the cache header hash.
  std::string codebook_key() const;
};

// Named parameter sets: "smoke" plus "paper-k100" .. "paper-k500".
SystemConfig preset_config(const std::string& name);

}  // namespace fasura
