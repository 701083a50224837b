// SPDX-License-Identifier: Apache-2.0
#include "pathmem/crc.hpp"

#include <stdexcept>

namespace pathmem {

CrcPoly CrcPoly::from_bits(unsigned degree, std::uint64_t coeff_word) {
  if (degree == 0 || degree > 63) throw std::invalid_argument("CrcPoly: degenerate polynomial");
  if (coeff_word >> degree) throw std::invalid_argument("CrcPoly: coefficient word wider than degree");
  CrcPoly p;
  p.degree = degree;
  p.coeffs.resize(degree);
  for (unsigned j = 0; j < degree; ++j)
    p.coeffs[j] = static_cast<std::uint8_t>((coeff_word >> (degree - 1 - j)) & 1);
  return p;
}

namespace {
// Long division of (word || degree zeros is the caller's job); the register
// holds the running remainder over the scanned prefix.
std::vector<std::uint8_t> remainder_of(const std::vector<std::uint8_t>& padded, const CrcPoly& poly) {
  std::vector<std::uint8_t> reg = padded;
  const std::size_t msg = reg.size() - poly.degree;
  for (std::size_t i = 0; i < msg; ++i) {
    if (!reg[i]) continue;
    reg[i] = 0;  // leading term of the divisor
    for (unsigned j = 0; j < poly.degree; ++j) reg[i + 1 + j] ^= poly.coeffs[j];
  }
  return {reg.end() - poly.degree, reg.end()};
}
}  // namespace

BitVector crc_attach(const BitVector& info, const CrcPoly& poly) {
  if (poly.degree == 0) throw std::invalid_argument("crc_attach: degenerate polynomial");
  std::vector<std::uint8_t> padded = info.raw();
  padded.insert(padded.end(), poly.degree, 0);
  auto rem = remainder_of(padded, poly);
  BitVector out = info;
  for (std::uint8_t b : rem) out.push_back(b);
  return out;
}

bool crc_check(const BitVector& word, const CrcPoly& poly) {
  if (poly.degree == 0) throw std::invalid_argument("crc_check: degenerate polynomial");
  if (word.size() <= poly.degree) throw std::invalid_argument("crc_check: word shorter than polynomial");
  auto rem = remainder_of(word.raw(), poly);
  for (std::uint8_t b : rem)
    if (b) return false;
  return true;
}

}  // namespace pathmem
