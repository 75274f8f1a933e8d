#include "ofdmim/frame.hpp"

#include <cmath>

namespace ofdmim {

void FrameDims::validate() const {
  if (n_total < 1) throw ConfigError("n_total must be positive");
  if (n_cp < 0 || n_cp > n_total) throw ConfigError("n_cp must be in [0, n_total]");
  if (n_group < 1 || n_group > 64) throw ConfigError("group size must be in [1, 64]");
  if (n_total % n_group != 0) throw ConfigError("n_total must be a multiple of the group size");
  if (k_active < 1 || k_active > n_group) {
    throw ConfigError("active count must be in [1, group size]");
  }
}

double power_scale(int n_group, int k_active) {
  return std::sqrt(static_cast<double>(n_group) / static_cast<double>(k_active));
}

std::vector<cx> assemble_group(const Combination& active,
                               const std::vector<cx>& symbols, int n_group) {
  check_arg(active.size() == symbols.size(), "one symbol per active index");
  std::vector<cx> group(static_cast<std::size_t>(n_group), cx(0.0, 0.0));
  for (std::size_t i = 0; i < active.size(); ++i) {
    const int pos = active[i];
    check_arg(pos >= 1 && pos <= n_group, "active index out of range");
    group[static_cast<std::size_t>(pos - 1)] = symbols[i];
  }
  return group;
}

arma::cx_vec interleave_groups(const std::vector<std::vector<cx>>& groups) {
  check_arg(!groups.empty(), "need at least one group");
  const std::size_t g_count = groups.size();
  const std::size_t n_group = groups[0].size();
  arma::cx_vec block(g_count * n_group);
  for (std::size_t g = 0; g < g_count; ++g) {
    check_arg(groups[g].size() == n_group, "groups must have equal length");
    for (std::size_t m = 0; m < n_group; ++m) {
      block(g + m * g_count) = groups[g][m];
    }
  }
  return block;
}

std::vector<std::vector<cx>> deinterleave_block(const arma::cx_vec& block,
                                                int n_group) {
  check_arg(n_group >= 1 && block.n_elem % static_cast<arma::uword>(n_group) == 0,
            "block length must be a multiple of the group size");
  const std::size_t g_count = block.n_elem / static_cast<arma::uword>(n_group);
  std::vector<std::vector<cx>> groups(
      g_count, std::vector<cx>(static_cast<std::size_t>(n_group)));
  for (std::size_t g = 0; g < g_count; ++g) {
    for (std::size_t m = 0; m < static_cast<std::size_t>(n_group); ++m) {
      groups[g][m] = block(g + m * g_count);
    }
  }
  return groups;
}

arma::cx_vec to_time_domain(const arma::cx_vec& freq, int n_cp) {
  const arma::uword n = freq.n_elem;
  check_arg(n >= 1, "empty block");
  check_arg(n_cp >= 0 && static_cast<arma::uword>(n_cp) <= n, "bad prefix length");
  // Unitary transform: arma::ifft scales by 1/n, so multiply by sqrt(n).
  arma::cx_vec body = arma::ifft(freq) * std::sqrt(static_cast<double>(n));
  arma::cx_vec out(n + static_cast<arma::uword>(n_cp));
  if (n_cp > 0) {
    out.head(static_cast<arma::uword>(n_cp)) =
        body.tail(static_cast<arma::uword>(n_cp));
  }
  out.tail(n) = body;
  return out;
}

arma::cx_vec to_freq_domain(const arma::cx_vec& time, int n_total, int n_cp) {
  check_arg(n_total >= 1 && n_cp >= 0, "bad block geometry");
  check_arg(time.n_elem ==
                static_cast<arma::uword>(n_total) + static_cast<arma::uword>(n_cp),
            "time-domain length mismatch");
  arma::cx_vec body = time.tail(static_cast<arma::uword>(n_total));
  return arma::fft(body) / std::sqrt(static_cast<double>(n_total));
}

}  // namespace ofdmim
