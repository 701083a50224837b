// SPDX-License-Identifier: Apache-2.0
#include "pathmem/config.hpp"

#include <stdexcept>

#include "pathmem/polar.hpp"

namespace pathmem {

PolarCodeConfig PolarCodeConfig::make(unsigned n, std::uint32_t K, unsigned p, std::uint32_t L,
                                      unsigned crc_len, double design_snr_db, const CrcPoly& poly) {
  if (n < 1 || n > 24) throw std::invalid_argument("config: n out of range");
  if (p < 1) throw std::invalid_argument("config: p must be at least 1 (P = 1 unsupported)");
  if (p + 1 > n) throw std::invalid_argument("config: P must not exceed N/2");
  if (L == 0 || !is_power_of_two(L)) throw std::invalid_argument("config: list size must be a power of two");
  const std::uint32_t N = 1u << n;
  if (K == 0 || K > N) throw std::invalid_argument("config: K out of range");
  if (crc_len > 0 && crc_len != poly.degree) throw std::invalid_argument("config: crc_len does not match polynomial");
  if (crc_len >= K) throw std::invalid_argument("config: crc_len must be smaller than K");

  PolarCodeConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.N = N;
  cfg.P = 1u << p;
  cfg.K = K;
  cfg.L = L;
  cfg.crc_len = crc_len;
  cfg.crc_poly = poly;
  cfg.design_snr_db = design_snr_db;

  cfg.frozen.assign(N, 0);
  for (std::uint32_t idx : build_frozen_set(n, K, design_snr_db)) cfg.frozen[idx] = 1;
  cfg.info_positions.reserve(K);
  for (std::uint32_t i = 0; i < N; ++i)
    if (!cfg.frozen[i]) cfg.info_positions.push_back(i);
  return cfg;
}

}  // namespace pathmem
