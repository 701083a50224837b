// SPDX-License-Identifier: Apache-2.0
#include "pathmem/trace.hpp"

#include <sstream>

namespace pathmem {

const char* trace_unit_name(TraceUnit u) {
  switch (u) {
    case TraceUnit::Node: return "node";
    case TraceUnit::PsnReg: return "psn_reg";
    case TraceUnit::PsnSram: return "psn_sram";
    case TraceUnit::PsnGenBuf: return "psn_gen_buf";
    case TraceUnit::PathReg: return "path_reg";
    case TraceUnit::PathSram: return "path_sram";
    case TraceUnit::Xbar: return "xbar";
    case TraceUnit::Recovery: return "recovery";
    case TraceUnit::Stall: return "stall";
  }
  return "?";
}

const char* trace_op_name(TraceOp o) {
  switch (o) {
    case TraceOp::F: return "f";
    case TraceOp::G: return "g";
    case TraceOp::Read: return "read";
    case TraceOp::Write: return "write";
    case TraceOp::Append: return "append";
    case TraceOp::Permute: return "permute";
    case TraceOp::CoPermute: return "copermute";
    case TraceOp::Flush: return "flush";
    case TraceOp::Update: return "update";
    case TraceOp::Xor: return "xor";
    case TraceOp::Encode: return "encode";
    case TraceOp::Wait: return "wait";
  }
  return "?";
}

void ScheduleTrace::tick_node(TraceOp op, std::uint32_t stage, std::uint32_t node) {
  ++cycle_;
  ++node_cycles_;
  log(TraceUnit::Node, op, 0, stage, node, 0);
}

void ScheduleTrace::tick_stall(std::uint32_t stage) {
  ++cycle_;
  ++stall_cycles_;
  log(TraceUnit::Stall, TraceOp::Wait, 0, stage, 0, 0);
}

void ScheduleTrace::log(TraceUnit unit, TraceOp op, std::uint32_t path, std::uint32_t a,
                        std::uint32_t b, std::uint32_t bits, std::string data) {
  if (!collect_) return;
  events_.push_back({cycle_, unit, op, path, a, b, bits, std::move(data)});
}

std::string ScheduleTrace::serialize() const {
  std::ostringstream os;
  for (const auto& e : events_) {
    os << e.cycle << ',' << trace_unit_name(e.unit) << ',' << trace_op_name(e.op) << ','
       << e.path << ':' << e.a << ':' << e.b << ',' << e.data << '\n';
  }
  return os.str();
}

}  // namespace pathmem
