// SPDX-License-Identifier: Apache-2.0
#include "pathmem/psn.hpp"

#include <algorithm>
#include <cassert>

#include "pathmem/polar.hpp"

namespace pathmem {

namespace {
std::vector<BitVector> to_words(const BitVector& v, std::uint32_t P) {
  std::vector<BitVector> words(v.size() / P);
  for (std::size_t w = 0; w < words.size(); ++w) words[w] = v.slice(w * P, P);
  return words;
}
}  // namespace

BitVector recover_bits(const BitVector& stage_lambda_psums, unsigned lambda, unsigned p) {
  if (stage_lambda_psums.size() != (std::size_t{1} << lambda))
    throw std::invalid_argument("recover_bits: length does not match stage");
  const std::uint32_t P = 1u << p;
  auto words = to_words(stage_lambda_psums, P);
  for (const auto& st : recovery_schedule(lambda, p)) words[st.xor_word].xor_with(words[st.pass_word]);
  BitVector out;
  for (auto& w : words) out.append(kronecker_encode(w));
  return out;
}

FoldedPsn::FoldedPsn(const PolarCodeConfig& cfg, PsnMode mode, ScheduleTrace& trace)
    : n_(cfg.n),
      p_(cfg.p),
      N_(cfg.N),
      P_(cfg.P),
      L_(cfg.L),
      mode_(mode),
      trace_(&trace),
      capacity_bits_(mode == PsnMode::Merged ? cfg.N : cfg.N / 2) {
  sram_.assign(L_, std::vector<std::uint8_t>(capacity_bits_, 0));
  regs_.assign(L_, {});
  groups_.assign(L_, {});
}

std::uint32_t FoldedPsn::word_addr(std::uint32_t bit) const {
  // Plain mode wraps into the first half's storage, which is dead by the
  // time any second-half group lands on it.
  const std::uint32_t eff = mode_ == PsnMode::Merged ? bit : bit % (N_ / 2);
  return eff / P_;
}

BitVector FoldedPsn::read_word(std::uint32_t block, std::uint32_t addr) const {
  BitVector w(P_);
  for (std::uint32_t i = 0; i < P_; ++i) w.set(i, sram_[block][addr * P_ + i]);
  return w;
}

void FoldedPsn::write_word(std::uint32_t block, std::uint32_t addr, const BitVector& w) {
  assert((addr + 1) * P_ <= capacity_bits_);
  for (std::uint32_t i = 0; i < P_; ++i) sram_[block][addr * P_ + i] = w.get(i);
}

FoldedPsn::GroupPtr FoldedPsn::find_group(std::uint32_t path, std::uint32_t bit) const {
  for (const auto& g : groups_[path]) {
    if (bit >= g->base && bit < g->base + (1u << g->lambda)) return g;
  }
  return nullptr;
}

void FoldedPsn::permute(const std::vector<std::uint32_t>& perm, std::uint32_t active) {
  bool identity = true;
  for (std::uint32_t l = 0; l < active; ++l) identity &= perm[l] == l;
  if (trace_->collecting()) {
    for (std::uint32_t l = 0; l < active; ++l) {
      std::uint32_t bits = 0;
      for (const auto& [lam, v] : regs_[perm[l]]) bits += static_cast<std::uint32_t>(v.size());
      trace_->log(TraceUnit::Xbar, TraceOp::Permute, l, perm[l], 0, bits);
    }
  }
  if (identity) return;
  std::vector<std::vector<std::pair<unsigned, BitVector>>> new_regs(L_);
  std::vector<std::vector<GroupPtr>> new_groups(L_);
  for (std::uint32_t l = 0; l < active; ++l) {
    new_regs[l] = regs_[perm[l]];
    new_groups[l] = groups_[perm[l]];
  }
  for (std::uint32_t l = active; l < L_; ++l) {
    new_regs[l] = std::move(regs_[l]);
    new_groups[l] = std::move(groups_[l]);
  }
  regs_ = std::move(new_regs);
  groups_ = std::move(new_groups);
}

void FoldedPsn::append_bits(const std::vector<std::uint8_t>& bits, std::uint32_t active) {
  if (filled_ >= N_) throw std::invalid_argument("FoldedPsn: append past code length");
  const std::uint32_t bit_index = filled_;
  for (std::uint32_t l = 0; l < active; ++l) {
    auto& reg = regs_[l];
    reg.emplace_back(0u, BitVector{static_cast<int>(bits[l] & 1)});
    // Parallel PSN: fold equal-length trailing groups, binary-counter style.
    while (reg.size() >= 2 && reg[reg.size() - 1].first == reg[reg.size() - 2].first) {
      auto lo = std::move(reg.back());
      reg.pop_back();
      auto hi = std::move(reg.back());
      reg.pop_back();
      BitVector merged = hi.second;
      merged.xor_with(lo.second);
      merged.append(lo.second);
      reg.emplace_back(hi.first + 1, std::move(merged));
    }
    trace_->log(TraceUnit::PsnReg, TraceOp::Update, l, bit_index, 0,
                static_cast<std::uint32_t>((bit_index % P_) + 1));
    if ((bit_index + 1) % P_ == 0) {
      // Register word complete: one stage-p group, flushed to the own block.
      assert(reg.size() == 1 && reg[0].first == p_);
      const std::uint32_t base = bit_index + 1 - P_;
      const std::uint32_t addr = word_addr(base);
      write_word(l, addr, reg[0].second);
      trace_->log(TraceUnit::PsnSram, TraceOp::Flush, l, l, addr, P_,
                  trace_->collecting() ? reg[0].second.to_hex() : std::string());
      groups_[l].push_back(std::make_shared<PhysGroup>(PhysGroup{l, base, p_}));
      reg.clear();
    }
  }
  ++filled_;
}

BitVector FoldedPsn::register_group(std::uint32_t path, std::uint32_t base, unsigned lambda) const {
  std::uint32_t tail_bits = 0;
  for (const auto& [lam, v] : regs_[path]) tail_bits += static_cast<std::uint32_t>(v.size());
  std::uint32_t pos = filled_ - tail_bits;
  for (const auto& [lam, v] : regs_[path]) {
    if (pos == base && lam == lambda) return v;
    pos += static_cast<std::uint32_t>(v.size());
  }
  throw ProtocolError("FoldedPsn: register group not present");
}

FoldedPsn::Generation FoldedPsn::begin_generation(unsigned lambda, std::uint32_t base,
                                                  std::uint32_t active) {
  if (lambda < p_ || lambda > n_ - 1) throw ProtocolError("FoldedPsn: generation stage out of range");
  const std::uint32_t len = 1u << lambda;
  if (base % (2 * len) != 0) throw ProtocolError("FoldedPsn: misaligned generation base");
  if (base + len > filled_) throw ProtocolError("FoldedPsn: generation before bits are decoded");

  Generation gen;
  gen.psn_ = this;
  gen.lambda_ = lambda;
  gen.base_ = base;
  gen.active_ = active;
  // The top-stage group is consumed on the fly in plain mode; there is no
  // stage-n generation left to feed.
  gen.store_ = !(mode_ == PsnMode::Plain && lambda == n_ - 1) && lambda > p_;
  gen.steps_ = psn_generation_schedule(lambda, p_);
  const std::uint32_t words = len / P_;
  gen.buf_.assign(active, std::vector<BitVector>(words));
  gen.src_block_.assign(active, std::vector<std::uint32_t>(words));
  for (std::uint32_t l = 0; l < active; ++l) {
    for (const auto& st : gen.steps_) {
      const std::uint32_t bit = base + st.out_word * P_;
      auto g = find_group(l, bit);
      if (!g || g->dead || g->lambda != st.input0_stage)
        throw ProtocolError("FoldedPsn: prerequisite partial-sum group missing");
      gen.src_block_[l][st.out_word] = g->block;
    }
  }
  return gen;
}

void FoldedPsn::Generation::step(std::uint32_t cycle_index) {
  const auto& st = steps_.at(cycle_index);
  auto* psn = psn_;
  const std::uint32_t addr = psn->word_addr(base_ + st.out_word * psn->P_);
  // All reads land before any write so a path overwriting its own block in
  // this cycle cannot disturb another path reading the dying word.
  for (std::uint32_t l = 0; l < active_; ++l) {
    const std::uint32_t src = src_block_[l][st.out_word];
    BitVector val = psn->read_word(src, addr);
    psn->trace_->log(TraceUnit::PsnSram, TraceOp::Read, l, src, addr, psn->P_,
                     psn->trace_->collecting() ? val.to_hex() : std::string());
    if (st.has_input1) {
      val.xor_with(buf_[l][st.input1_word]);
      psn->trace_->log(TraceUnit::PsnGenBuf, TraceOp::Read, l, st.input1_word, 0, psn->P_);
    }
    buf_[l][st.out_word] = std::move(val);
  }
  if (store_) {
    for (std::uint32_t l = 0; l < active_; ++l) {
      psn->write_word(l, addr, buf_[l][st.out_word]);
      psn->trace_->log(TraceUnit::PsnSram, TraceOp::Write, l, l, addr, psn->P_,
                       psn->trace_->collecting() ? buf_[l][st.out_word].to_hex() : std::string());
    }
  }
  ++done_;
}

std::vector<BitVector> FoldedPsn::Generation::finish() {
  if (done_ != steps_.size()) throw ProtocolError("FoldedPsn: generation not fully stepped");
  auto* psn = psn_;
  const std::uint32_t len = 1u << lambda_;
  if (lambda_ > psn->p_) {
    // Constituents are dead; the freshly generated group replaces them in
    // each path's pointer table (or nothing, when not stored).
    for (std::uint32_t l = 0; l < active_; ++l) {
      auto& tbl = psn->groups_[l];
      for (auto& g : tbl) {
        if (g->base >= base_ && g->base < base_ + len) g->dead = true;
      }
      std::erase_if(tbl, [&](const GroupPtr& g) { return g->base >= base_ && g->base < base_ + len; });
      if (store_) tbl.push_back(std::make_shared<PhysGroup>(PhysGroup{l, base_, lambda_}));
      std::sort(tbl.begin(), tbl.end(),
                [](const GroupPtr& a, const GroupPtr& b) { return a->base < b->base; });
    }
  }
  std::vector<BitVector> out(active_);
  for (std::uint32_t l = 0; l < active_; ++l) {
    BitVector v;
    for (auto& w : buf_[l]) v.append(w);
    out[l] = std::move(v);
  }
  return out;
}

std::uint64_t FoldedPsn::finish_pending_recovery() {
  std::uint64_t stalls = 0;
  while (job_) {
    trace_->tick_stall(job_->lambda);
    ++stalls;
    recovery_tick();
  }
  return stalls;
}

void FoldedPsn::trigger_recovery(unsigned lambda, std::uint32_t base, std::uint32_t active) {
  if (mode_ != PsnMode::Merged) throw ProtocolError("FoldedPsn: recovery unsupported in plain mode");
  if (job_) throw ProtocolError("FoldedPsn: previous recovery still running");
  RecoveryJob job;
  job.lambda = lambda;
  job.base = base;
  job.steps = recovery_schedule(lambda, p_);
  for (std::uint32_t l = 0; l < active; ++l) {
    auto g = find_group(l, base);
    if (!g || g->base != base || g->lambda != lambda)
      throw ProtocolError("FoldedPsn: recovery group missing");
    g->dead = true;  // never read for partial-sum generation again
    if (std::find(job.targets.begin(), job.targets.end(), g) == job.targets.end())
      job.targets.push_back(g);
  }
  if (!job.steps.empty()) job_ = std::move(job);
}

void FoldedPsn::recovery_tick() {
  if (!job_) return;
  const auto& st = job_->steps[job_->next];
  for (const auto& g : job_->targets) {
    const std::uint32_t a1 = word_addr(job_->base + st.xor_word * P_);
    const std::uint32_t a2 = word_addr(job_->base + st.pass_word * P_);
    BitVector w = read_word(g->block, a1);
    BitVector w2 = read_word(g->block, a2);
    trace_->log(TraceUnit::Recovery, TraceOp::Read, g->block, g->block, a1, P_);
    trace_->log(TraceUnit::Recovery, TraceOp::Read, g->block, g->block, a2, P_);
    w.xor_with(w2);
    write_word(g->block, a1, w);
    trace_->log(TraceUnit::Recovery, TraceOp::Write, g->block, g->block, a1, P_,
                trace_->collecting() ? w.to_hex() : std::string());
    ++g->steps_done;
  }
  if (++job_->next == job_->steps.size()) job_.reset();
}

void FoldedPsn::decode_group(PhysGroup& g) {
  if (g.decoded_valid) return;
  const std::uint32_t words = (1u << g.lambda) / P_;
  std::vector<BitVector> w(words);
  for (std::uint32_t i = 0; i < words; ++i) w[i] = read_word(g.block, word_addr(g.base + i * P_));
  const auto steps = recovery_schedule(g.lambda, p_);
  for (std::size_t s = g.steps_done; s < steps.size(); ++s) w[steps[s].xor_word].xor_with(w[steps[s].pass_word]);
  g.decoded.clear();
  for (auto& word : w) g.decoded.append(kronecker_encode(word));
  g.decoded_valid = true;
}

BitVector FoldedPsn::read_decoded_prefix(std::uint32_t path, std::uint32_t upto) {
  if (mode_ != PsnMode::Merged)
    throw ProtocolError("FoldedPsn: decoded bits are only recoverable in merged mode");
  BitVector out;
  for (const auto& g : groups_[path]) {
    if (g->base >= upto) break;
    decode_group(*g);
    const std::uint32_t len = std::min<std::uint32_t>(1u << g->lambda, upto - g->base);
    out.append(g->decoded.slice(0, len));
  }
  // Trailing register groups hold stage <= p partial sums of the newest bits;
  // the P-bit encoder inverts them directly.
  for (const auto& [lam, v] : regs_[path]) {
    if (out.size() >= upto) break;
    auto u = kronecker_encode(v);
    const std::uint32_t len = std::min<std::uint32_t>(static_cast<std::uint32_t>(u.size()),
                                                      upto - static_cast<std::uint32_t>(out.size()));
    out.append(u.slice(0, len));
  }
  if (out.size() != upto) throw ProtocolError("FoldedPsn: decoded prefix incomplete");
  return out;
}

std::uint32_t FoldedPsn::group_count(std::uint32_t path) const {
  return static_cast<std::uint32_t>(groups_[path].size());
}

std::vector<FoldedPsn::GroupView> FoldedPsn::groups(std::uint32_t path) const {
  std::vector<GroupView> out;
  out.reserve(groups_[path].size());
  for (const auto& g : groups_[path]) out.push_back({g->base, g->lambda, g->block, g->dead});
  return out;
}

}  // namespace pathmem
