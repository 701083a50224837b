// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathmem {

/// One cycle of folded partial-sum generation for a stage-lambda node.
/// Output words are produced in descending index order; a word in the first
/// half of its enclosing recursion level is the XOR of a stored lower-stage
/// word (input 0) and an already generated word (input 1), the trailing
/// word is a direct read.
struct GenStep {
  std::uint32_t cycle = 0;
  std::uint32_t out_word = 0;       // P-bit word index within the Lambda block
  std::uint32_t input0_stage = 0;   // stage label of the stored constituent
  std::uint32_t input0_word = 0;    // same word index as out_word
  bool has_input1 = false;
  std::uint32_t input1_word = 0;    // previously generated word (stage lambda)
};

/// One cycle of decoded-bit recovery: a word-level butterfly step. The word
/// at xor_word receives xor_word ^ pass_word; pass_word keeps its value and
/// is relabeled one stage down.
struct RecoveryStep {
  std::uint32_t cycle = 0;
  std::uint32_t stage_from = 0;  // inputs carry this stage label, outputs stage_from - 1
  std::uint32_t xor_word = 0;
  std::uint32_t pass_word = 0;
};

/// Cycle-by-cycle plan for generating the 2^lambda partial sums of one node
/// with parallelism 2^p. Requires lambda >= p; 2^(lambda-p) cycles.
std::vector<GenStep> psn_generation_schedule(unsigned lambda, unsigned p);

/// Cycle-by-cycle plan for recovering 2^lambda decoded bits from their
/// stage-lambda partial sums, processing levels from the widest block down
/// and word pairs in ascending index order within each level. Requires
/// lambda >= p; (Lambda/2P)*log2(Lambda/P) cycles, empty when lambda == p.
std::vector<RecoveryStep> recovery_schedule(unsigned lambda, unsigned p);

/// Paper-style tables for the two schedules. Cells label partial sums as
/// s<bit>^<stage>; generation cells list bits in descending order, recovery
/// cells in ascending order. CSV rows: cycle,in0,in1,out for the generator
/// and cycle,in0,in1,xor,pass for recovery.
std::string render_psn_table(unsigned lambda, unsigned p, bool csv);
std::string render_recovery_table(unsigned lambda, unsigned p, bool csv);

}  // namespace pathmem
