// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathmem {

enum class TraceUnit : std::uint8_t {
  Node,       // F/G processing-element activity
  PsnReg,     // parallel partial-sum register bank
  PsnSram,    // folded PSN / merged memory SRAM
  PsnGenBuf,  // generation pipeline buffer (already generated words)
  PathReg,    // path memory registers (traditional vector or head bank)
  PathSram,   // folded path memory SRAM
  Xbar,       // list-management crossbar traffic
  Recovery,   // decoded-bit recovery datapath
  Stall,      // decoder wait cycles
};

enum class TraceOp : std::uint8_t {
  F,
  G,
  Read,
  Write,
  Append,
  Permute,     // head/register/vector permutation after list management
  CoPermute,   // decoded-bit gathering during partial-sum generation
  Flush,
  Update,
  Xor,
  Encode,
  Wait,
};

/// One trace record. `path` is the path slot the event belongs to (or the
/// destination slot for crossbar moves), `a`/`b` are unit-specific address
/// fields (block and word address for SRAM ops, source slot for crossbar
/// moves, stage and node for PE activity). `bits` is the payload width used
/// by the crossbar discipline check.
struct TraceEvent {
  std::uint64_t cycle = 0;
  TraceUnit unit = TraceUnit::Node;
  TraceOp op = TraceOp::F;
  std::uint32_t path = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t bits = 0;
  std::string data;  // hex payload, empty unless collection is enabled
};

const char* trace_unit_name(TraceUnit u);
const char* trace_op_name(TraceOp o);

/// Cycle counter plus optional event log. Cycle advancement is always
/// tracked; events are stored only when collection is on, so large runs can
/// count cycles without the memory cost. Serializes line-oriented
/// `cycle,unit,op,addr,data` with addr = path:a:b.
class ScheduleTrace {
 public:
  explicit ScheduleTrace(bool collect = false) : collect_(collect) {}

  bool collecting() const { return collect_; }
  std::uint64_t cycle() const { return cycle_; }
  std::uint64_t node_cycles() const { return node_cycles_; }
  std::uint64_t stall_cycles() const { return stall_cycles_; }

  /// Advances to the next cycle and logs the PE activity for it.
  void tick_node(TraceOp op, std::uint32_t stage, std::uint32_t node);
  /// Advances to the next cycle as a decoder stall.
  void tick_stall(std::uint32_t stage);

  void log(TraceUnit unit, TraceOp op, std::uint32_t path, std::uint32_t a, std::uint32_t b,
           std::uint32_t bits, std::string data = {});

  const std::vector<TraceEvent>& events() const { return events_; }
  std::string serialize() const;

 private:
  bool collect_;
  std::uint64_t cycle_ = 0;
  std::uint64_t node_cycles_ = 0;
  std::uint64_t stall_cycles_ = 0;
  std::vector<TraceEvent> events_;
};

}  // namespace pathmem
