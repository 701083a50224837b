// SPDX-License-Identifier: Apache-2.0
#include "pathmem/path_memory.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathmem {

const char* memory_kind_name(MemoryKind k) {
  switch (k) {
    case MemoryKind::Traditional: return "traditional";
    case MemoryKind::Folded: return "folded";
    case MemoryKind::Merged: return "merged";
  }
  return "?";
}

TraditionalPathMemory::TraditionalPathMemory(const PolarCodeConfig& cfg, ScheduleTrace& trace)
    : N_(cfg.N), L_(cfg.L), trace_(&trace), vectors_(cfg.L, BitVector(cfg.N)) {}

void TraditionalPathMemory::permute_and_append(const std::vector<std::uint32_t>& perm,
                                               const std::vector<std::uint8_t>& bits,
                                               std::uint32_t active) {
  if (filled_ >= N_) throw std::invalid_argument("TraditionalPathMemory: append past code length");
  bool identity = true;
  for (std::uint32_t l = 0; l < active; ++l) identity &= perm[l] == l;
  if (!identity) {
    // Full-width crossbar: the whole partial vector moves per path.
    std::vector<BitVector> next(L_);
    for (std::uint32_t l = 0; l < active; ++l) next[l] = vectors_[perm[l]];
    for (std::uint32_t l = active; l < L_; ++l) next[l] = std::move(vectors_[l]);
    vectors_ = std::move(next);
  }
  for (std::uint32_t l = 0; l < active; ++l) {
    trace_->log(TraceUnit::Xbar, TraceOp::Permute, l, perm[l], 0, filled_);
    vectors_[l].set(filled_, bits[l]);
    trace_->log(TraceUnit::PathReg, TraceOp::Append, l, filled_, 0, 1);
  }
  ++filled_;
}

BitVector TraditionalPathMemory::read_path(std::uint32_t path) {
  if (path >= L_) throw std::invalid_argument("read_path: bad path index");
  return vectors_[path].slice(0, filled_);
}

FoldedPathMemory::FoldedPathMemory(const PolarCodeConfig& cfg, ScheduleTrace& trace)
    : p_(cfg.p),
      N_(cfg.N),
      P_(cfg.P),
      L_(cfg.L),
      trace_(&trace),
      heads_(cfg.L),
      sram_(cfg.L, std::vector<std::uint8_t>(cfg.N, 0)),
      groups_(cfg.L) {}

void FoldedPathMemory::permute_and_append(const std::vector<std::uint32_t>& perm,
                                          const std::vector<std::uint8_t>& bits,
                                          std::uint32_t active) {
  if (filled_ >= N_) throw std::invalid_argument("FoldedPathMemory: append past code length");
  bool identity = true;
  for (std::uint32_t l = 0; l < active; ++l) identity &= perm[l] == l;
  if (!identity) {
    std::vector<BitVector> next_heads(L_);
    std::vector<std::vector<BitGroup>> next_groups(L_);
    for (std::uint32_t l = 0; l < active; ++l) {
      next_heads[l] = heads_[perm[l]];
      next_groups[l] = groups_[perm[l]];  // pointer table copy, no data moves
    }
    for (std::uint32_t l = active; l < L_; ++l) {
      next_heads[l] = std::move(heads_[l]);
      next_groups[l] = std::move(groups_[l]);
    }
    heads_ = std::move(next_heads);
    groups_ = std::move(next_groups);
  }
  for (std::uint32_t l = 0; l < active; ++l) {
    trace_->log(TraceUnit::Xbar, TraceOp::Permute, l, perm[l], 0,
                static_cast<std::uint32_t>(heads_[l].size()));
    heads_[l].push_back(bits[l]);
    trace_->log(TraceUnit::PathReg, TraceOp::Append, l, filled_, 0, 1);
    if (heads_[l].size() == P_) {
      const std::uint32_t base = filled_ + 1 - P_;
      const std::uint32_t addr = base / P_;
      for (std::uint32_t i = 0; i < P_; ++i) sram_[l][base + i] = heads_[l].get(i);
      trace_->log(TraceUnit::PathSram, TraceOp::Flush, l, l, addr, P_,
                  trace_->collecting() ? heads_[l].to_hex() : std::string());
      groups_[l].push_back({base, P_, l});
      heads_[l].clear();
    }
  }
  ++filled_;
}

void FoldedPathMemory::on_generation_cycle(unsigned lambda, std::uint32_t base, std::uint32_t word,
                                           std::uint32_t active) {
  if (lambda <= p_) return;  // bits this small never left the head banks' granularity
  const std::uint32_t len = 1u << lambda;
  const std::uint32_t bit = base + word * P_;
  const std::uint32_t addr = bit / P_;
  // Reads complete before writes: a path refilling its own block must not
  // disturb another path still gathering the old word from it.
  std::vector<BitVector> vals(active);
  for (std::uint32_t l = 0; l < active; ++l) {
    auto it = std::find_if(groups_[l].begin(), groups_[l].end(), [&](const BitGroup& g) {
      return bit >= g.base && bit < g.base + g.len;
    });
    if (it == groups_[l].end()) throw ProtocolError("FoldedPathMemory: decoded group missing");
    BitVector w(P_);
    for (std::uint32_t i = 0; i < P_; ++i) w.set(i, sram_[it->block][bit + i]);
    trace_->log(TraceUnit::PathSram, TraceOp::Read, l, it->block, addr, P_,
                trace_->collecting() ? w.to_hex() : std::string());
    trace_->log(TraceUnit::Xbar, TraceOp::CoPermute, l, it->block, addr, P_);
    vals[l] = std::move(w);
  }
  for (std::uint32_t l = 0; l < active; ++l) {
    for (std::uint32_t i = 0; i < P_; ++i) sram_[l][bit + i] = vals[l].get(i);
    trace_->log(TraceUnit::PathSram, TraceOp::Write, l, l, addr, P_,
                trace_->collecting() ? vals[l].to_hex() : std::string());
  }
  if (word == 0) {
    // Last cycle of the node: compact the gathered groups into one pointer.
    for (std::uint32_t l = 0; l < active; ++l) {
      auto& tbl = groups_[l];
      std::erase_if(tbl, [&](const BitGroup& g) { return g.base >= base && g.base < base + len; });
      tbl.push_back({base, len, l});
      std::sort(tbl.begin(), tbl.end(),
                [](const BitGroup& a, const BitGroup& b) { return a.base < b.base; });
    }
  }
}

BitVector FoldedPathMemory::read_span(std::uint32_t block, std::uint32_t base,
                                      std::uint32_t len) const {
  BitVector out(len);
  for (std::uint32_t i = 0; i < len; ++i) out.set(i, sram_[block][base + i]);
  return out;
}

BitVector FoldedPathMemory::read_path(std::uint32_t path) {
  if (path >= L_) throw std::invalid_argument("read_path: bad path index");
  BitVector out;
  for (const auto& g : groups_[path]) out.append(read_span(g.block, g.base, g.len));
  out.append(heads_[path]);
  if (out.size() != filled_) throw ProtocolError("FoldedPathMemory: prefix incomplete");
  return out;
}

std::uint32_t FoldedPathMemory::group_count(std::uint32_t path) const {
  return static_cast<std::uint32_t>(groups_[path].size());
}

std::unique_ptr<PathMemoryModel> make_path_memory(MemoryKind kind, const PolarCodeConfig& cfg,
                                                  FoldedPsn& psn, ScheduleTrace& trace) {
  switch (kind) {
    case MemoryKind::Traditional: return std::make_unique<TraditionalPathMemory>(cfg, trace);
    case MemoryKind::Folded: return std::make_unique<FoldedPathMemory>(cfg, trace);
    case MemoryKind::Merged: return std::make_unique<MergedPathMemory>(psn);
  }
  throw std::invalid_argument("make_path_memory: bad kind");
}

}  // namespace pathmem
