// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pathmem {

/// Dense vector of GF(2) symbols, one byte per bit.
///
/// Hex serialization packs bit 0 into the MSB of the first nibble, so a
/// dump reads left to right in bit order. Length is not part of the hex
/// string; deserialization takes it explicitly.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : bits_(n, 0) {}
  BitVector(std::initializer_list<int> init);

  static BitVector from_string(const std::string& zeros_ones);
  static BitVector from_hex(const std::string& hex, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  std::uint8_t get(std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, std::uint8_t v) { bits_[i] = v & 1u; }
  void push_back(std::uint8_t v) { bits_.push_back(v & 1u); }
  void clear() { bits_.clear(); }

  BitVector slice(std::size_t begin, std::size_t len) const;
  void append(const BitVector& tail);
  /// Elementwise XOR with an equal-length vector.
  void xor_with(const BitVector& other);
  /// Copies `chunk` over positions [pos, pos + chunk.size()).
  void overwrite(std::size_t pos, const BitVector& chunk);

  bool all_zero() const;

  std::string to_string() const;
  std::string to_hex() const;

  bool operator==(const BitVector&) const = default;

  const std::vector<std::uint8_t>& raw() const { return bits_; }
  std::vector<std::uint8_t>& raw() { return bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace pathmem
