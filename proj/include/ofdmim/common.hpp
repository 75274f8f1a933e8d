#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ofdmim {

using cx = std::complex<double>;
using BitVec = std::vector<std::uint8_t>;

/// Invalid system parameters (bad N/K/M combination, antenna counts, ...).
/// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller-contract violations (wrong vector length, index out of range).
inline void check_arg(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace ofdmim
