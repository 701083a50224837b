// SPDX-License-Identifier: Apache-2.0
#include "pathmem/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "pathmem/crc.hpp"
#include "pathmem/decoder.hpp"
#include "pathmem/polar.hpp"

namespace pathmem {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t state = master ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  return splitmix64(state);
}

double NormalSampler::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // uniforms in (0, 1]; 53-bit mantissa from the top of the generator word
  const double u1 = (static_cast<double>((*rng_)() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = (static_cast<double>((*rng_)() >> 11) + 1.0) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

std::vector<double> bpsk_awgn(const BitVector& codeword, double sigma, NormalSampler& noise) {
  if (sigma <= 0.0) throw std::invalid_argument("bpsk_awgn: sigma must be positive");
  std::vector<double> llrs(codeword.size());
  const double scale = 2.0 / (sigma * sigma);
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const double symbol = codeword.get(i) ? -1.0 : 1.0;
    const double y = symbol + sigma * noise.next();
    llrs[i] = scale * y;
  }
  return llrs;
}

double ebn0_to_sigma(double ebn0_db, double rate) {
  if (rate <= 0.0 || rate >= 1.0) throw std::invalid_argument("ebn0_to_sigma: rate out of range");
  const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
  return std::sqrt(1.0 / (2.0 * rate * ebn0));
}

double wilson_halfwidth(std::uint64_t errors, std::uint64_t frames) {
  if (frames == 0) return 0.0;
  const double z = 1.959963984540054;  // 95%
  const double n = static_cast<double>(frames);
  const double phat = static_cast<double>(errors) / n;
  const double z2 = z * z;
  return (z / (1.0 + z2 / n)) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
}

namespace {

// One frame end to end: payload draw, CRC attach, encode, channel, decode.
bool frame_errored(const PolarCodeConfig& cfg, MemoryKind kind, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitVector payload(cfg.payload_bits());
  for (std::uint32_t i = 0; i < payload.size(); ++i)
    payload.set(i, static_cast<std::uint8_t>(rng() >> 63));
  BitVector info = cfg.crc_len > 0 ? crc_attach(payload, cfg.crc_poly) : payload;

  BitVector u(cfg.N);
  for (std::uint32_t k = 0; k < cfg.K; ++k) u.set(cfg.info_positions[k], info.get(k));
  BitVector codeword = kronecker_encode(u);

  NormalSampler noise(rng);
  auto llrs = bpsk_awgn(codeword, sigma, noise);
  auto res = decode_frame(llrs, cfg, kind);
  return !(res.info_bits == info);
}

}  // namespace

FerPoint fer_montecarlo(const PolarCodeConfig& cfg, MemoryKind kind, const ChannelConfig& ch,
                        std::uint64_t frames, unsigned threads) {
  if (frames == 0) throw std::invalid_argument("fer_montecarlo: need at least one frame");
  const double rate = static_cast<double>(cfg.K) / static_cast<double>(cfg.N);
  const double sigma = ebn0_to_sigma(ch.ebn0_db, rate);

  std::uint64_t errors = 0;
  if (threads <= 1) {
    for (std::uint64_t f = 0; f < frames; ++f)
      if (frame_errored(cfg, kind, sigma, mix_seed(ch.rng_seed, f))) ++errors;
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        std::uint64_t local = 0;
        for (std::uint64_t f = t; f < frames; f += threads)
          if (frame_errored(cfg, kind, sigma, mix_seed(ch.rng_seed, f))) ++local;
        partial[t] = local;
      });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t e : partial) errors += e;
  }

  FerPoint pt;
  pt.ebn0_db = ch.ebn0_db;
  pt.frames = frames;
  pt.errors = errors;
  pt.fer = static_cast<double>(errors) / static_cast<double>(frames);
  pt.ci_halfwidth = wilson_halfwidth(errors, frames);
  return pt;
}

}  // namespace pathmem
