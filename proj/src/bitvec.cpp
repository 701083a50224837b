// SPDX-License-Identifier: Apache-2.0
#include "pathmem/bitvec.hpp"

#include <stdexcept>

namespace pathmem {

namespace {
int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

BitVector::BitVector(std::initializer_list<int> init) {
  bits_.reserve(init.size());
  for (int v : init) {
    if (v != 0 && v != 1) throw std::invalid_argument("BitVector: symbol not in {0,1}");
    bits_.push_back(static_cast<std::uint8_t>(v));
  }
}

BitVector BitVector::from_string(const std::string& zeros_ones) {
  BitVector out;
  out.bits_.reserve(zeros_ones.size());
  for (char c : zeros_ones) {
    if (c != '0' && c != '1') throw std::invalid_argument("BitVector: bad character in bit string");
    out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

BitVector BitVector::from_hex(const std::string& hex, std::size_t n) {
  if (hex.size() != (n + 3) / 4) throw std::invalid_argument("BitVector: hex length mismatch");
  BitVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    int d = hex_digit(hex[i / 4]);
    if (d < 0) throw std::invalid_argument("BitVector: bad hex digit");
    out.bits_[i] = static_cast<std::uint8_t>((d >> (3 - (i % 4))) & 1);
  }
  return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > bits_.size()) throw std::invalid_argument("BitVector::slice out of range");
  BitVector out(len);
  for (std::size_t i = 0; i < len; ++i) out.bits_[i] = bits_[begin + i];
  return out;
}

void BitVector::append(const BitVector& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
}

void BitVector::xor_with(const BitVector& other) {
  if (other.size() != size()) throw std::invalid_argument("BitVector::xor_with size mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
}

void BitVector::overwrite(std::size_t pos, const BitVector& chunk) {
  if (pos + chunk.size() > bits_.size()) throw std::invalid_argument("BitVector::overwrite out of range");
  for (std::size_t i = 0; i < chunk.size(); ++i) bits_[pos + i] = chunk.bits_[i];
}

bool BitVector::all_zero() const {
  for (std::uint8_t b : bits_)
    if (b) return false;
  return true;
}

std::string BitVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::string BitVector::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s((bits_.size() + 3) / 4, '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      std::size_t nib = i / 4;
      s[nib] = digits[hex_digit(s[nib]) | (1 << (3 - (i % 4)))];
    }
  }
  return s;
}

}  // namespace pathmem
