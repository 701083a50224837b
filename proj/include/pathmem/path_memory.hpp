// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pathmem/bitvec.hpp"
#include "pathmem/config.hpp"
#include "pathmem/psn.hpp"
#include "pathmem/trace.hpp"

namespace pathmem {

enum class MemoryKind { Traditional, Folded, Merged };

const char* memory_kind_name(MemoryKind k);

/// Uniform update-and-read contract over the three path-memory
/// architectures. The decoder drives one permute_and_append per decoded bit
/// (the list-management slot) and one on_generation_cycle per partial-sum
/// generation cycle; read_path returns the partial decoded vector.
class PathMemoryModel {
 public:
  virtual ~PathMemoryModel() = default;
  virtual MemoryKind kind() const = 0;
  virtual void permute_and_append(const std::vector<std::uint32_t>& perm,
                                  const std::vector<std::uint8_t>& bits, std::uint32_t active) = 0;
  virtual void on_generation_cycle(unsigned lambda, std::uint32_t base, std::uint32_t word,
                                   std::uint32_t active) {}
  virtual BitVector read_path(std::uint32_t path) = 0;
  virtual std::uint32_t group_count(std::uint32_t path) const { return 0; }
};

/// L vectors of N register bits behind a full-width crossbar: the whole
/// partial decoded vector moves on every update.
class TraditionalPathMemory : public PathMemoryModel {
 public:
  TraditionalPathMemory(const PolarCodeConfig& cfg, ScheduleTrace& trace);
  MemoryKind kind() const override { return MemoryKind::Traditional; }
  void permute_and_append(const std::vector<std::uint32_t>& perm,
                          const std::vector<std::uint8_t>& bits, std::uint32_t active) override;
  BitVector read_path(std::uint32_t path) override;

 private:
  std::uint32_t N_, L_;
  ScheduleTrace* trace_;
  std::uint32_t filled_ = 0;
  std::vector<BitVector> vectors_;
};

/// P-bit head register banks behind a P-bit crossbar, per-path SRAM blocks
/// shared through block-index pointers, and decoded-bit co-permutation that
/// compacts the pointer groups while the PSN generates the matching partial
/// sums. At most n-p+1 group pointers per path.
class FoldedPathMemory : public PathMemoryModel {
 public:
  FoldedPathMemory(const PolarCodeConfig& cfg, ScheduleTrace& trace);
  MemoryKind kind() const override { return MemoryKind::Folded; }
  void permute_and_append(const std::vector<std::uint32_t>& perm,
                          const std::vector<std::uint8_t>& bits, std::uint32_t active) override;
  void on_generation_cycle(unsigned lambda, std::uint32_t base, std::uint32_t word,
                           std::uint32_t active) override;
  BitVector read_path(std::uint32_t path) override;
  std::uint32_t group_count(std::uint32_t path) const override;

 private:
  struct BitGroup {
    std::uint32_t base;
    std::uint32_t len;
    std::uint32_t block;
  };
  BitVector read_span(std::uint32_t block, std::uint32_t base, std::uint32_t len) const;

  unsigned p_;
  std::uint32_t N_, P_, L_;
  ScheduleTrace* trace_;
  std::uint32_t filled_ = 0;
  std::vector<BitVector> heads_;
  std::vector<std::vector<std::uint8_t>> sram_;
  std::vector<std::vector<BitGroup>> groups_;
};

/// The merged memory is the folded PSN itself: decoded bits are read back by
/// recovering them from stored partial sums, so updates are entirely the
/// PSN's business and this adapter only answers reads.
class MergedPathMemory : public PathMemoryModel {
 public:
  explicit MergedPathMemory(FoldedPsn& psn) : psn_(&psn) {}
  MemoryKind kind() const override { return MemoryKind::Merged; }
  void permute_and_append(const std::vector<std::uint32_t>&, const std::vector<std::uint8_t>&,
                          std::uint32_t) override {
    ++filled_;
  }
  BitVector read_path(std::uint32_t path) override { return psn_->read_decoded_prefix(path, filled_); }
  std::uint32_t group_count(std::uint32_t path) const override { return psn_->group_count(path); }

 private:
  FoldedPsn* psn_;
  std::uint32_t filled_ = 0;
};

std::unique_ptr<PathMemoryModel> make_path_memory(MemoryKind kind, const PolarCodeConfig& cfg,
                                                  FoldedPsn& psn, ScheduleTrace& trace);

}  // namespace pathmem
