// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "pathmem/bitvec.hpp"

namespace pathmem {

/// Generator polynomial for the CRC. Coefficients are MSB-first with the
/// leading x^degree term implicit, e.g. CRC-16/CCITT is degree 16 with
/// coefficient word 0x1021. Division uses zero initial state and no final
/// XOR so that crc_check(word) is simply "word divisible by the polynomial".
struct CrcPoly {
  unsigned degree = 0;
  std::vector<std::uint8_t> coeffs;  // degree entries: x^(degree-1) .. x^0

  static CrcPoly from_bits(unsigned degree, std::uint64_t coeff_word);
  static CrcPoly ccitt16() { return from_bits(16, 0x1021); }
};

/// Appends the remainder of info * x^degree mod poly (MSB-first long
/// division) to the info word.
BitVector crc_attach(const BitVector& info, const CrcPoly& poly);

/// True when the word, interpreted MSB-first, is divisible by the polynomial.
bool crc_check(const BitVector& word, const CrcPoly& poly);

}  // namespace pathmem
