// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pathmem/bitvec.hpp"
#include "pathmem/config.hpp"
#include "pathmem/schedule.hpp"
#include "pathmem/trace.hpp"

namespace pathmem {

/// Raised when the partial-sum protocol is violated: generating a node whose
/// prerequisite groups are missing, or recovering a group that is not dead.
struct ProtocolError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class PsnMode { Plain, Merged };

/// Pure functional form of the decoded-bit recovery: applies the word-level
/// butterfly prescribed by recovery_schedule and the per-word P-bit encoder.
/// Input must be the stage-lambda partial sums of the bits to recover.
BitVector recover_bits(const BitVector& stage_lambda_psums, unsigned lambda, unsigned p);

/// Behavioral model of the folded partial-sum network for L paths.
///
/// Stage <= p partial sums of the trailing bits live in a per-path register
/// bank as the binary-decomposition groups of (bits decoded) mod P. Full
/// P-bit words are flushed to a per-path SRAM block; higher-stage groups are
/// produced word-serially by the generation schedule and stored back in
/// place of their constituents. After list management the register banks are
/// permuted through the crossbar while SRAM-resident groups are shared via
/// per-path block pointers.
///
/// In merged mode the SRAM holds N bits (the stage n-1 group included) and
/// decoded bits are recovered in place from dead groups; in plain mode the
/// SRAM holds N/2 bits and addresses wrap modulo N/2, reusing the first
/// half's storage once it is dead.
class FoldedPsn {
 public:
  struct GroupView {
    std::uint32_t base;
    unsigned lambda;
    std::uint32_t block;
    bool dead;
  };

  FoldedPsn(const PolarCodeConfig& cfg, PsnMode mode, ScheduleTrace& trace);

  PsnMode mode() const { return mode_; }
  std::uint32_t filled() const { return filled_; }

  /// List-management crossbar pass: register banks move by value, SRAM
  /// groups by pointer-table copy.
  void permute(const std::vector<std::uint32_t>& perm, std::uint32_t active);

  /// Appends one decoded bit per active path and runs the parallel
  /// partial-sum update; flushes the register word to SRAM when full.
  void append_bits(const std::vector<std::uint8_t>& bits, std::uint32_t active);

  /// Stage-lambda (< p) partial sums of [base, base + 2^lambda) from the
  /// register bank.
  BitVector register_group(std::uint32_t path, std::uint32_t base, unsigned lambda) const;

  /// Word-serial generation of one node's partial sums (lambda >= p).
  /// The caller drives one step per node cycle so the trace lines up.
  class Generation {
   public:
    void step(std::uint32_t cycle_index);
    std::uint32_t word_at(std::uint32_t cycle_index) const { return steps_[cycle_index].out_word; }
    std::uint32_t cycles() const { return static_cast<std::uint32_t>(steps_.size()); }
    /// Applies group-table updates and returns the per-path psum vectors.
    std::vector<BitVector> finish();

   private:
    friend class FoldedPsn;
    FoldedPsn* psn_ = nullptr;
    unsigned lambda_ = 0;
    std::uint32_t base_ = 0;
    std::uint32_t active_ = 0;
    bool store_ = true;
    std::vector<GenStep> steps_;
    std::vector<std::vector<BitVector>> buf_;  // [path][word]
    std::vector<std::vector<std::uint32_t>> src_block_;  // [path][word]
    std::uint32_t done_ = 0;
  };

  Generation begin_generation(unsigned lambda, std::uint32_t base, std::uint32_t active);

  // ---- merged-mode recovery ----

  bool recovery_active() const { return job_.has_value(); }

  /// Drains an unfinished recovery job, advancing the trace cycle counter as
  /// decoder stalls. Returns the number of stall cycles inserted.
  std::uint64_t finish_pending_recovery();

  /// Marks the group [base, base + 2^lambda) dead on every active path and
  /// schedules its recovery. The previous job must already be drained.
  void trigger_recovery(unsigned lambda, std::uint32_t base, std::uint32_t active);

  /// Runs one recovery step; call once per node cycle below stage p.
  void recovery_tick();

  /// Decoded prefix [0, upto) of one path, merged mode only. Scheduled
  /// recovery results are memoized; groups not yet recovered are decoded on
  /// demand from their current storage state.
  BitVector read_decoded_prefix(std::uint32_t path, std::uint32_t upto);

  // ---- introspection ----
  std::uint32_t group_count(std::uint32_t path) const;
  std::vector<GroupView> groups(std::uint32_t path) const;

 private:
  struct PhysGroup {
    std::uint32_t block;
    std::uint32_t base;
    unsigned lambda;
    bool dead = false;
    std::size_t steps_done = 0;  // recovery butterfly progress
    bool decoded_valid = false;
    BitVector decoded;
  };
  using GroupPtr = std::shared_ptr<PhysGroup>;

  struct RecoveryJob {
    unsigned lambda;
    std::uint32_t base;
    std::vector<RecoveryStep> steps;
    std::size_t next = 0;
    std::vector<GroupPtr> targets;
  };

  std::uint32_t word_addr(std::uint32_t bit) const;
  BitVector read_word(std::uint32_t block, std::uint32_t addr) const;
  void write_word(std::uint32_t block, std::uint32_t addr, const BitVector& w);
  GroupPtr find_group(std::uint32_t path, std::uint32_t bit) const;
  void decode_group(PhysGroup& g);

  unsigned n_, p_;
  std::uint32_t N_, P_, L_;
  PsnMode mode_;
  ScheduleTrace* trace_;
  std::uint32_t filled_ = 0;
  std::uint32_t capacity_bits_;

  std::vector<std::vector<std::uint8_t>> sram_;                      // [block][bit]
  std::vector<std::vector<std::pair<unsigned, BitVector>>> regs_;    // trailing groups
  std::vector<std::vector<GroupPtr>> groups_;                        // per path, ascending base
  std::optional<RecoveryJob> job_;
};

}  // namespace pathmem
