// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pathmem/bitvec.hpp"
#include "pathmem/config.hpp"
#include "pathmem/path_memory.hpp"
#include "pathmem/psn.hpp"
#include "pathmem/trace.hpp"

namespace pathmem {

/// Min-sum check-node update.
inline double f_function(double a, double b) {
  const double m = std::min(std::abs(a), std::abs(b));
  return ((a < 0) != (b < 0)) ? -m : m;
}

/// Variable-node update with the partial sum folded in.
inline double g_function(double a, double b, std::uint8_t s) { return s ? b - a : b + a; }

/// LLR-domain path metric: free when the decision follows the sign
/// (llr >= 0 decides 0), penalized by |llr| otherwise.
inline double path_metric_update(double metric, double llr, std::uint8_t decision) {
  const std::uint8_t follow = llr >= 0.0 ? 0 : 1;
  return decision == follow ? metric : metric + std::abs(llr);
}

/// Survivor selection for one decoded bit. Candidates are ordered by
/// (metric, parent path, decision); the best min(L, 2*active) survive and are
/// assigned to slots in that order. Frozen bits keep every path and append 0.
struct LmOutcome {
  std::vector<std::uint32_t> perm;     // survivor slot -> parent slot
  std::vector<std::uint8_t> bits;      // survivor slot -> appended bit
  std::vector<double> metrics;         // survivor slot -> updated metric
  std::uint32_t active_after = 0;
};

LmOutcome expand_and_prune(const std::vector<double>& leaf_llrs, const std::vector<double>& metrics,
                           std::uint32_t active, std::uint32_t L, bool is_frozen);

class ListDecoder;

struct DecodeOptions {
  bool collect_trace = false;
  /// Called after every decoded bit with the decoder in a consistent state.
  std::function<void(const ListDecoder&, std::uint32_t bit)> observer;
};

struct DecodeResult {
  BitVector info_bits;  // the K info positions (CRC bits included)
  bool crc_pass = false;
  std::uint32_t selected_path = 0;
  double selected_metric = 0.0;
  std::uint64_t total_cycles = 0;
  std::uint64_t node_cycles = 0;
  std::uint64_t stall_cycles = 0;
  ScheduleTrace trace;
};

/// CRC-aided list successive-cancellation decoder over a pluggable
/// path-memory model. The folded PSN supplies every partial sum consumed by
/// the G nodes; the memory model is the only source of decoded bits.
class ListDecoder {
 public:
  ListDecoder(const PolarCodeConfig& cfg, MemoryKind kind, DecodeOptions options = {});

  DecodeResult decode(std::span<const double> channel_llrs);

  const PolarCodeConfig& config() const { return cfg_; }
  MemoryKind kind() const { return kind_; }
  std::uint32_t active_paths() const { return active_; }
  double metric(std::uint32_t path) const { return metrics_[path]; }
  /// Partial decoded vector of a path as stored by the memory model.
  BitVector path_prefix(std::uint32_t path) const;
  /// Group-pointer counts, for the n-p+1 bound checks.
  std::uint32_t memory_group_count(std::uint32_t path) const { return mem_->group_count(path); }
  std::uint32_t psn_group_count(std::uint32_t path) const { return psn_.group_count(path); }

 private:
  void process(unsigned stage, std::uint32_t base);
  void compute_f(unsigned child_stage, std::uint32_t base);
  void compute_g(unsigned child_stage, std::uint32_t base);
  void leaf(std::uint32_t bit);
  void apply_perm(const std::vector<std::uint32_t>& perm, std::uint32_t active_after);
  double* stage_llrs(std::uint32_t path, unsigned stage);
  void tick(TraceOp op, unsigned stage, std::uint32_t word);

  PolarCodeConfig cfg_;
  MemoryKind kind_;
  DecodeOptions options_;
  ScheduleTrace trace_;
  FoldedPsn psn_;
  std::unique_ptr<PathMemoryModel> mem_;

  std::vector<double> channel_;
  // work_[path] is the concatenation of the stage arrays 0..n-1 (2^s values
  // at offset 2^s - 1); ping-pong buffer for survivor permutations.
  std::vector<std::vector<double>> work_, work_scratch_;
  std::vector<double> metrics_;
  std::uint32_t active_ = 1;
  std::uint32_t bit_cursor_ = 0;
};

DecodeResult decode_frame(std::span<const double> channel_llrs, const PolarCodeConfig& cfg,
                          MemoryKind kind, DecodeOptions options = {});

}  // namespace pathmem
