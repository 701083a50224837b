// SPDX-License-Identifier: Apache-2.0
#include "pathmem/cost.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pathmem/polar.hpp"

namespace pathmem {

std::uint64_t node_cycles(unsigned lambda, unsigned p) {
  return lambda >= p ? (std::uint64_t{1} << (lambda - p)) : 1;
}

std::uint64_t recovery_latency(std::uint64_t lambda_bits, std::uint64_t P) {
  if (!is_power_of_two(lambda_bits) || !is_power_of_two(P))
    throw std::invalid_argument("recovery_latency: arguments must be powers of two");
  if (lambda_bits < P) throw std::invalid_argument("recovery_latency: Lambda smaller than P");
  const unsigned levels = log2_exact(lambda_bits / P);
  return (lambda_bits / (2 * P)) * levels;
}

std::uint64_t idle_budget(std::uint64_t lambda_bits, std::uint64_t P) {
  if (!is_power_of_two(lambda_bits) || !is_power_of_two(P))
    throw std::invalid_argument("idle_budget: arguments must be powers of two");
  if (lambda_bits < P) throw std::invalid_argument("idle_budget: Lambda smaller than P");
  return lambda_bits - lambda_bits / P;
}

BoundCheck bound_check(std::uint64_t lambda_bits, std::uint64_t P) {
  BoundCheck bc;
  bc.latency = recovery_latency(lambda_bits, P);
  bc.budget = idle_budget(lambda_bits, P);
  if (bc.latency < bc.budget) {
    bc.fit = BoundFit::FitsStrictly;
  } else if (bc.latency == bc.budget) {
    bc.fit = BoundFit::FitsExactly;
  } else {
    bc.fit = BoundFit::Stalls;
    bc.stall_cycles = bc.latency - bc.budget;
  }
  // log-domain form of Lambda < P * 2^(2P-2); the right side overflows any
  // integer width for practical P.
  bc.strict_inequality_holds = log2_exact(lambda_bits) < log2_exact(P) + 2 * P - 2;
  return bc;
}

MemoryCostReport memory_report(unsigned n, unsigned p, std::uint32_t L) {
  if (p < 1 || p + 1 > n) throw std::invalid_argument("memory_report: bad geometry");
  if (!is_power_of_two(L)) throw std::invalid_argument("memory_report: L must be a power of two");
  MemoryCostReport r;
  r.n = n;
  r.p = p;
  r.N = std::uint64_t{1} << n;
  r.P = std::uint64_t{1} << p;
  r.L = L;
  const std::uint64_t pointers = n - p + 1;

  r.traditional = {0, 0, r.L * r.N, r.N, 0};
  r.folded_psn = {2 * r.P, r.N / 2, r.L * r.P, r.P, pointers};
  r.folded_path = {r.P, r.N, r.L * r.P, r.P, pointers};
  r.merged = {2 * r.P, r.N, r.L * r.P, r.P, pointers};
  return r;
}

std::vector<GroupCycles> merged_schedule(unsigned n, unsigned p) {
  if (p < 1 || p + 1 > n) throw std::invalid_argument("merged_schedule: bad geometry");
  const std::uint64_t P = std::uint64_t{1} << p;
  std::vector<GroupCycles> groups;
  for (unsigned lambda = n - 1; lambda + 1 > p; --lambda) {
    const std::uint64_t len = std::uint64_t{1} << lambda;
    groups.push_back({lambda, len, recovery_latency(len, P), idle_budget(len, P), 0});
    if (lambda == p) break;
  }
  // the final word has no consumer window; its recovery latency is zero
  groups.push_back({p, P, 0, 0, 0});
  for (auto& g : groups) g.stall = g.latency > g.budget ? g.latency - g.budget : 0;
  return groups;
}

CycleReport total_decode_cycles(unsigned n, unsigned p, bool with_recovery) {
  if (p < 1 || p + 1 > n) throw std::invalid_argument("total_decode_cycles: bad geometry");
  CycleReport rep;
  rep.n = n;
  rep.p = p;
  rep.with_recovery = with_recovery;
  for (unsigned s = 0; s < n; ++s) {
    const std::uint64_t nodes_at_stage = std::uint64_t{1} << (n - s);
    rep.base_cycles += nodes_at_stage * node_cycles(s, p);
  }
  rep.groups = merged_schedule(n, p);
  for (const auto& g : rep.groups) {
    if (with_recovery) rep.stall_cycles += g.stall;
    rep.recovery_cycles_hidden += std::min(g.latency, g.budget);
  }
  rep.total_cycles = rep.base_cycles + rep.stall_cycles;
  return rep;
}

const char* bound_fit_name(BoundFit fit) {
  switch (fit) {
    case BoundFit::FitsStrictly: return "fits_strictly";
    case BoundFit::FitsExactly: return "fits_exactly";
    case BoundFit::Stalls: return "stalls";
  }
  return "?";
}

namespace {
void arch_row(std::ostringstream& os, const char* name, const ArchCost& c) {
  os << "  " << name << ": port=" << c.sram_port_width_bits << "b sram=" << c.sram_size_bits
     << "b regs=" << c.register_bits << "b xbar_lane=" << c.crossbar_lane_width_bits
     << "b pointers/path=" << c.pointer_count_per_path << "\n";
}

nlohmann::json arch_json(const ArchCost& c) {
  return {{"sram_port_width_bits", c.sram_port_width_bits},
          {"sram_size_bits", c.sram_size_bits},
          {"register_bits", c.register_bits},
          {"crossbar_lane_width_bits", c.crossbar_lane_width_bits},
          {"pointer_count_per_path", c.pointer_count_per_path}};
}
}  // namespace

std::string render_report_text(const MemoryCostReport& mem, const CycleReport& cycles) {
  std::ostringstream os;
  os << "memory report (N=" << mem.N << " P=" << mem.P << " L=" << mem.L << ")\n";
  arch_row(os, "traditional path memory", mem.traditional);
  arch_row(os, "folded PSN             ", mem.folded_psn);
  arch_row(os, "folded path memory     ", mem.folded_path);
  arch_row(os, "merged memory          ", mem.merged);
  os << "cycle report\n";
  os << "  node cycles: " << cycles.base_cycles << "\n";
  os << "  stall cycles: " << cycles.stall_cycles << "\n";
  os << "  total (with recovery): " << cycles.total_cycles << "\n";
  os << "  recovery cycles hidden: " << cycles.recovery_cycles_hidden << "\n";
  os << "  groups (lambda, length, latency, budget, stall):\n";
  for (const auto& g : cycles.groups) {
    os << "    " << g.lambda << ", " << g.length << ", " << g.latency << ", " << g.budget << ", "
       << g.stall << "\n";
  }
  return os.str();
}

std::string render_report_json(const MemoryCostReport& mem, const CycleReport& cycles,
                               const std::string& manifest) {
  nlohmann::json j;
  j["manifest"] = manifest;
  j["params"] = {{"n", mem.n}, {"p", mem.p}, {"N", mem.N}, {"P", mem.P}, {"L", mem.L}};
  j["memory"] = {{"traditional", arch_json(mem.traditional)},
                 {"folded_psn", arch_json(mem.folded_psn)},
                 {"folded_path", arch_json(mem.folded_path)},
                 {"merged", arch_json(mem.merged)}};
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : cycles.groups) {
    groups.push_back({{"lambda", g.lambda},
                      {"length", g.length},
                      {"latency", g.latency},
                      {"budget", g.budget},
                      {"stall", g.stall}});
  }
  j["cycles"] = {{"base_cycles", cycles.base_cycles},
                 {"stall_cycles", cycles.stall_cycles},
                 {"total_cycles", cycles.total_cycles},
                 {"recovery_cycles_hidden", cycles.recovery_cycles_hidden},
                 {"groups", groups}};
  return j.dump(2) + "\n";
}

}  // namespace pathmem
