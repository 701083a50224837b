// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "pathmem/crc.hpp"

namespace pathmem {

/// Code and decoder geometry. N = 2^n is the code length, K the number of
/// information positions (CRC bits included), P = 2^p the computational
/// parallelism and L the list size. p >= 1 and P <= N/2; L is a power of
/// two. The frozen mask is fixed at construction from the Bhattacharyya
/// recursion at the configured design SNR.
struct PolarCodeConfig {
  unsigned n = 0;
  unsigned p = 0;
  std::uint32_t N = 0;
  std::uint32_t P = 0;
  std::uint32_t K = 0;
  std::uint32_t L = 1;
  unsigned crc_len = 0;
  CrcPoly crc_poly;
  double design_snr_db = 0.0;

  std::vector<std::uint8_t> frozen;           // N flags, 1 = frozen
  std::vector<std::uint32_t> info_positions;  // ascending non-frozen indices

  std::uint32_t payload_bits() const { return K - crc_len; }

  static PolarCodeConfig make(unsigned n, std::uint32_t K, unsigned p, std::uint32_t L,
                              unsigned crc_len = 16, double design_snr_db = 0.0,
                              const CrcPoly& poly = CrcPoly::ccitt16());
};

}  // namespace pathmem
