// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathmem/bitvec.hpp"
#include "pathmem/config.hpp"
#include "pathmem/path_memory.hpp"

namespace pathmem {

/// splitmix64 step; also the per-frame seed derivation
/// seed_frame = splitmix(master ^ golden * (frame + 1)), so frames are
/// independent streams and the reduction order cannot change results.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

/// Gaussian deviates via Box-Muller on explicitly constructed uniforms, so
/// sequences are pinned to the mt19937_64 output and never depend on the
/// standard library's normal_distribution algorithm.
class NormalSampler {
 public:
  explicit NormalSampler(std::mt19937_64& rng) : rng_(&rng) {}
  double next();

 private:
  std::mt19937_64* rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// BPSK over AWGN: bit b maps to 1-2b, noise of standard deviation sigma is
/// added, and the LLR 2y/sigma^2 is returned per position.
std::vector<double> bpsk_awgn(const BitVector& codeword, double sigma, NormalSampler& noise);

/// Noise standard deviation for an Eb/N0 operating point at the given rate.
double ebn0_to_sigma(double ebn0_db, double rate);

/// 95% Wilson score interval half-width for k errors in n trials.
double wilson_halfwidth(std::uint64_t errors, std::uint64_t frames);

struct ChannelConfig {
  double ebn0_db = 0.0;
  std::uint64_t rng_seed = 0;
};

struct FerPoint {
  double ebn0_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t errors = 0;
  double fer = 0.0;
  double ci_halfwidth = 0.0;
};

/// Monte Carlo frame error rate. Frames are independent work items with
/// derived seeds; the result is identical for any thread count. A frame
/// errors when the decoded info vector (CRC bits included) differs from the
/// transmitted one.
FerPoint fer_montecarlo(const PolarCodeConfig& cfg, MemoryKind kind, const ChannelConfig& ch,
                        std::uint64_t frames, unsigned threads = 1);

}  // namespace pathmem
