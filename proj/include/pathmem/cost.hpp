// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathmem {

/// Clock cycles for one scheduling-tree node at the given stage: one full
/// P-wide word per cycle, minimum one cycle.
std::uint64_t node_cycles(unsigned lambda, unsigned p);

/// Cycles to recover Lambda decoded bits from their partial sums:
/// (Lambda/2P) * log2(Lambda/P), the XOR-node count of a (Lambda/P)-bit
/// encoding signal-flow graph split across P-wide words. Lambda >= P.
std::uint64_t recovery_latency(std::uint64_t lambda_bits, std::uint64_t P);

/// SRAM-idle cycles available before the next group's recovery begins:
/// Lambda * (1 - 1/P).
std::uint64_t idle_budget(std::uint64_t lambda_bits, std::uint64_t P);

enum class BoundFit { FitsStrictly, FitsExactly, Stalls };

struct BoundCheck {
  BoundFit fit = BoundFit::FitsStrictly;
  std::uint64_t latency = 0;
  std::uint64_t budget = 0;
  std::uint64_t stall_cycles = 0;  // max(0, latency - budget)
  bool strict_inequality_holds = false;  // Lambda < P * 2^(2P-2)
};

/// Compares recovery latency against the idle budget and evaluates the
/// closed-form strict bound separately; the two disagree exactly on the
/// boundary, which is reported rather than hidden.
BoundCheck bound_check(std::uint64_t lambda_bits, std::uint64_t P);

struct ArchCost {
  std::uint64_t sram_port_width_bits = 0;
  std::uint64_t sram_size_bits = 0;  // per path block
  std::uint64_t register_bits = 0;   // total over L paths
  std::uint64_t crossbar_lane_width_bits = 0;
  std::uint64_t pointer_count_per_path = 0;
};

struct MemoryCostReport {
  unsigned n = 0, p = 0;
  std::uint64_t N = 0, P = 0, L = 0;
  ArchCost traditional;
  ArchCost folded_psn;
  ArchCost folded_path;
  ArchCost merged;
};

MemoryCostReport memory_report(unsigned n, unsigned p, std::uint32_t L);

struct GroupCycles {
  unsigned lambda = 0;
  std::uint64_t length = 0;
  std::uint64_t latency = 0;
  std::uint64_t budget = 0;
  std::uint64_t stall = 0;
};

/// Recovery placement for the n-p+1 decoded-bit groups of a full code:
/// lengths N/2, N/4, ..., 2P, P, P, each recovered in the idle window before
/// the next group's recovery starts.
std::vector<GroupCycles> merged_schedule(unsigned n, unsigned p);

struct CycleReport {
  unsigned n = 0, p = 0;
  bool with_recovery = false;
  std::uint64_t base_cycles = 0;   // sum of node_cycles over the scheduling tree
  std::uint64_t stall_cycles = 0;  // added by recovery when with_recovery
  std::uint64_t total_cycles = 0;
  std::uint64_t recovery_cycles_hidden = 0;
  std::vector<GroupCycles> groups;
};

CycleReport total_decode_cycles(unsigned n, unsigned p, bool with_recovery);

const char* bound_fit_name(BoundFit fit);

// Renderers used by the CLI; the manifest line echoes the parameters.
std::string render_report_text(const MemoryCostReport& mem, const CycleReport& cycles);
std::string render_report_json(const MemoryCostReport& mem, const CycleReport& cycles,
                               const std::string& manifest);

}  // namespace pathmem
