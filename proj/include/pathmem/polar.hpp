// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "pathmem/bitvec.hpp"

namespace pathmem {

constexpr bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

/// log2 of a power of two.
unsigned log2_exact(std::uint64_t x);

/// GF(2) polar transform x = u * F^{(x)m}, F = [[1,0],[1,1]], in natural bit
/// order (no bit-reversal). Length must be a power of two. The transform is
/// an involution: applying it twice gives back the input.
BitVector kronecker_encode(BitVector u);

/// Partial sums of a decoded slice per the stage-lambda re-encoding rule.
/// Identical to kronecker_encode restricted to length 2^lambda; the slice
/// length must match the stage.
BitVector partial_sums(const BitVector& u_slice, unsigned lambda);

/// Selects the N-K least reliable synthesized channels under the
/// Bhattacharyya parameter recursion (z_up = 2z - z^2 for the first half,
/// z_low = z^2 for the second, z0 = exp(-10^(snr_db/10))). Ties freeze the
/// lower index. Returns sorted indices.
std::vector<std::uint32_t> build_frozen_set(unsigned n, std::uint32_t K, double design_snr_db);

}  // namespace pathmem
