#include "fasura/config.hpp"

#include <sstream>

namespace fasura {

namespace {

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

void SystemConfig::validate() const {
  std::ostringstream err;
  if (B <= 0 || B_f <= 0 || B_f >= B) {
    err << "need 0 < B_f < B, got B=" << B << " B_f=" << B_f;
  } else if (B_f > 26) {
    err << "B_f=" << B_f << " exceeds the supported codebook size (2^26)";
  } else if (!is_pow2(n_c)) {
    err << "n_c=" << n_c << " is not a power of two";
  } else if (T * 2 != n_c) {
    err << "T=" << T << " must be n_c/2=" << n_c / 2;
  } else if (n != n_p + T * L) {
    err << "n=" << n << " != n_p + T*L = " << n_p + T * L;
  } else if (n_p <= 0 || L <= 0) {
    err << "pilot length and spreading factor must be positive";
  } else if (effective_crc() != 12 && effective_crc() != 16) {
    err << "unsupported CRC length " << effective_crc();
  } else if (B_c() > n_c) {
    err << "B_c=" << B_c() << " exceeds n_c=" << n_c;
  } else if (M <= 0 || K <= 0) {
    err << "M and K must be positive";
  } else if (n_L <= 0) {
    err << "list size must be positive";
  } else if (nopice_rounds < 0 || max_sic_iters < 0) {
    err << "nopice_rounds and max_sic_iters must be non-negative";
  } else {
    return;
  }
  throw ConfigError("invalid config: " + err.str());
}

std::string SystemConfig::codebook_key() const {
  std::ostringstream os;
  os << "B_f=" << B_f << ";n=" << n << ";n_p=" << n_p << ";L=" << L
     << ";n_c=" << n_c << ";T=" << T << ";B_c=" << B_c()
     << ";seed=" << seed;
  return os.str();
}

SystemConfig preset_config(const std::string& name) {
  SystemConfig c;
  if (name == "smoke") {
    c.B = 100;
    c.B_f = 10;
    c.n_p = 64;
    c.L = 5;
    c.n_c = 128;
    c.T = 64;
    c.n = 64 + 64 * 5;
    c.M = 8;
    c.K = 8;
    c.n_L = 32;
    c.B_crc = 12;
    return c;
  }
  if (name.rfind("paper-k", 0) == 0) {
    int k = std::stoi(name.substr(7));
    if (k == 100 || k == 200 || k == 300 || k == 400 || k == 500) {
      c.K = k;  // defaults above carry the paper geometry; CRC auto-selects
      return c;
    }
  }
  throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace fasura
