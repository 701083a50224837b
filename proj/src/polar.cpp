// SPDX-License-Identifier: Apache-2.0
#include "pathmem/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pathmem {

unsigned log2_exact(std::uint64_t x) {
  if (!is_power_of_two(x)) throw std::invalid_argument("log2_exact: not a power of two");
  unsigned n = 0;
  while (x > 1) {
    x >>= 1;
    ++n;
  }
  return n;
}

BitVector kronecker_encode(BitVector u) {
  const std::size_t n = u.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("kronecker_encode: length not a power of two");
  auto& bits = u.raw();
  for (std::size_t inc = 1; inc < n; inc <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * inc) {
      for (std::size_t j = 0; j < inc; ++j) bits[i + j] ^= bits[i + j + inc];
    }
  }
  return u;
}

BitVector partial_sums(const BitVector& u_slice, unsigned lambda) {
  if (u_slice.size() != (std::size_t{1} << lambda))
    throw std::invalid_argument("partial_sums: slice length does not match stage");
  return kronecker_encode(u_slice);
}

std::vector<std::uint32_t> build_frozen_set(unsigned n, std::uint32_t K, double design_snr_db) {
  const std::uint64_t N = std::uint64_t{1} << n;
  if (K == 0 || K > N) throw std::invalid_argument("build_frozen_set: K out of range");

  std::vector<double> z{std::exp(-std::pow(10.0, design_snr_db / 10.0))};
  z.reserve(N);
  for (unsigned s = 0; s < n; ++s) {
    const std::size_t half = z.size();
    std::vector<double> next(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      next[i] = 2.0 * z[i] - z[i] * z[i];  // degraded channel, decoded first
      next[i + half] = z[i] * z[i];
    }
    z = std::move(next);
  }

  std::vector<std::uint32_t> order(N);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (z[a] != z[b]) return z[a] > z[b];
    return a < b;  // tie: freeze the lower index
  });

  std::vector<std::uint32_t> frozen(order.begin(), order.begin() + (N - K));
  std::sort(frozen.begin(), frozen.end());
  return frozen;
}

}  // namespace pathmem
