// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathmem/trace.hpp"

namespace pathmem {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failure details

  bool passed() const { return failures == 0; }
  void fail(const std::string& msg) {
    ++failures;
    if (messages.size() < 16) messages.push_back(msg);
  }
};

/// Random-vector recovery round trips over a grid of (lambda, p), exhaustive
/// at tiny sizes. The encoding butterfly is the oracle.
SuiteResult recovery_roundtrip_suite(std::uint64_t seed);

/// Randomized decodes of one code under all three memory models, comparing
/// every per-bit survivor prefix and the final outputs, and checking the
/// pointer-count bound. Trial 0 also runs with trace collection and applies
/// the crossbar-discipline and dead-group checks.
SuiteResult cross_model_suite(unsigned n, unsigned p, std::uint32_t L, std::uint32_t trials,
                              std::uint64_t seed);

/// Folded/merged traces only: no path moves more than P bits through the
/// crossbar in one cycle, and the two crossbar uses (list-management
/// permute, decoded-bit co-permute) never share a cycle.
bool check_crossbar_discipline(const ScheduleTrace& trace, std::uint32_t P, std::string* error);

/// Merged traces: no SRAM word read by the recovery datapath is written by a
/// later partial-sum flush or generation.
bool check_dead_group_safety(const ScheduleTrace& trace, std::string* error);

std::string render_verify_text(const std::vector<SuiteResult>& suites);
std::string render_verify_json(const std::vector<SuiteResult>& suites, const std::string& manifest);

}  // namespace pathmem
