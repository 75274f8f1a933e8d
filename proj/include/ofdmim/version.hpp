#pragma once

namespace ofdmim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ofdmim
