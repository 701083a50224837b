// SPDX-License-Identifier: Apache-2.0
#include "pathmem/decoder.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pathmem/cost.hpp"
#include "pathmem/crc.hpp"

namespace pathmem {

LmOutcome expand_and_prune(const std::vector<double>& leaf_llrs, const std::vector<double>& metrics,
                           std::uint32_t active, std::uint32_t L, bool is_frozen) {
  LmOutcome out;
  out.perm.resize(L);
  out.bits.assign(L, 0);
  out.metrics.assign(L, std::numeric_limits<double>::infinity());
  std::iota(out.perm.begin(), out.perm.end(), 0u);

  if (is_frozen) {
    for (std::uint32_t l = 0; l < active; ++l)
      out.metrics[l] = path_metric_update(metrics[l], leaf_llrs[l], 0);
    out.active_after = active;
    return out;
  }

  struct Cand {
    double metric;
    std::uint32_t parent;
    std::uint8_t bit;
  };
  std::vector<Cand> cands;
  cands.reserve(2 * active);
  for (std::uint32_t l = 0; l < active; ++l) {
    for (std::uint8_t d = 0; d < 2; ++d)
      cands.push_back({path_metric_update(metrics[l], leaf_llrs[l], d), l, d});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.metric != b.metric) return a.metric < b.metric;
    if (a.parent != b.parent) return a.parent < b.parent;
    return a.bit < b.bit;
  });
  out.active_after = std::min<std::uint32_t>(L, 2 * active);
  for (std::uint32_t k = 0; k < out.active_after; ++k) {
    out.perm[k] = cands[k].parent;
    out.bits[k] = cands[k].bit;
    out.metrics[k] = cands[k].metric;
  }
  return out;
}

ListDecoder::ListDecoder(const PolarCodeConfig& cfg, MemoryKind kind, DecodeOptions options)
    : cfg_(cfg),
      kind_(kind),
      options_(std::move(options)),
      trace_(options_.collect_trace),
      psn_(cfg, kind == MemoryKind::Merged ? PsnMode::Merged : PsnMode::Plain, trace_),
      mem_(make_path_memory(kind, cfg, psn_, trace_)),
      metrics_(cfg.L, 0.0) {
  const std::size_t work_len = (std::size_t{1} << cfg_.n) - 1;
  work_.assign(cfg_.L, std::vector<double>(work_len, 0.0));
  work_scratch_.assign(cfg_.L, std::vector<double>(work_len, 0.0));
}

double* ListDecoder::stage_llrs(std::uint32_t path, unsigned stage) {
  if (stage == cfg_.n) return channel_.data();
  return work_[path].data() + ((std::size_t{1} << stage) - 1);
}

void ListDecoder::tick(TraceOp op, unsigned stage, std::uint32_t word) {
  trace_.tick_node(op, stage, word);
}

void ListDecoder::compute_f(unsigned child_stage, std::uint32_t base) {
  const std::uint32_t half = 1u << child_stage;
  const std::uint64_t cycles = node_cycles(child_stage, cfg_.p);
  for (std::uint64_t c = 0; c < cycles; ++c) {
    tick(TraceOp::F, child_stage, static_cast<std::uint32_t>(c));
    if (child_stage < cfg_.p && kind_ == MemoryKind::Merged) psn_.recovery_tick();
  }
  for (std::uint32_t l = 0; l < active_; ++l) {
    const double* parent = stage_llrs(l, child_stage + 1);
    double* child = stage_llrs(l, child_stage);
    for (std::uint32_t i = 0; i < half; ++i) child[i] = f_function(parent[i], parent[i + half]);
  }
}

void ListDecoder::compute_g(unsigned child_stage, std::uint32_t base) {
  const std::uint32_t half = 1u << child_stage;
  std::vector<BitVector> psums;
  if (child_stage >= cfg_.p) {
    auto gen = psn_.begin_generation(child_stage, base, active_);
    for (std::uint32_t c = 0; c < gen.cycles(); ++c) {
      tick(TraceOp::G, child_stage, c);
      gen.step(c);
      mem_->on_generation_cycle(child_stage, base, gen.word_at(c), active_);
    }
    psums = gen.finish();
  } else {
    tick(TraceOp::G, child_stage, 0);
    if (kind_ == MemoryKind::Merged) psn_.recovery_tick();
    psums.reserve(active_);
    for (std::uint32_t l = 0; l < active_; ++l)
      psums.push_back(psn_.register_group(l, base, child_stage));
  }
  for (std::uint32_t l = 0; l < active_; ++l) {
    const double* parent = stage_llrs(l, child_stage + 1);
    double* child = stage_llrs(l, child_stage);
    for (std::uint32_t i = 0; i < half; ++i)
      child[i] = g_function(parent[i], parent[i + half], psums[l].get(i));
  }
}

void ListDecoder::apply_perm(const std::vector<std::uint32_t>& perm, std::uint32_t active_after) {
  bool identity = true;
  for (std::uint32_t l = 0; l < active_after; ++l) identity &= perm[l] == l;
  if (identity) return;
  for (std::uint32_t l = 0; l < active_after; ++l) work_scratch_[l] = work_[perm[l]];
  for (std::uint32_t l = 0; l < active_after; ++l) std::swap(work_[l], work_scratch_[l]);
}

void ListDecoder::leaf(std::uint32_t bit) {
  const bool frozen = cfg_.frozen[bit] != 0;
  std::vector<double> leaf_llrs(active_);
  for (std::uint32_t l = 0; l < active_; ++l) leaf_llrs[l] = work_[l][0];

  auto outcome = expand_and_prune(leaf_llrs, metrics_, active_, cfg_.L, frozen);
  apply_perm(outcome.perm, outcome.active_after);
  metrics_ = outcome.metrics;
  active_ = outcome.active_after;

  psn_.permute(outcome.perm, active_);
  psn_.append_bits(outcome.bits, active_);
  mem_->permute_and_append(outcome.perm, outcome.bits, active_);
  ++bit_cursor_;
  if (options_.observer) options_.observer(*this, bit);
}

void ListDecoder::process(unsigned stage, std::uint32_t base) {
  if (stage == 0) {
    leaf(base);
    return;
  }
  const unsigned child = stage - 1;
  compute_f(child, base);
  process(child, base);
  compute_g(child, base);
  if (kind_ == MemoryKind::Merged && child >= cfg_.p && base + (1u << stage) == cfg_.N) {
    // The rightmost G-node at `child` has consumed this group; it is dead
    // and its decoded bits can be recovered from here on.
    psn_.finish_pending_recovery();
    psn_.trigger_recovery(child, base, active_);
  }
  process(child, base + (1u << child));
}

BitVector ListDecoder::path_prefix(std::uint32_t path) const { return mem_->read_path(path); }

DecodeResult ListDecoder::decode(std::span<const double> channel_llrs) {
  if (channel_llrs.size() != cfg_.N) throw std::invalid_argument("decode: LLR vector length mismatch");
  if (bit_cursor_ != 0) throw std::logic_error("decode: decoder instances are single use");
  channel_.assign(channel_llrs.begin(), channel_llrs.end());

  process(cfg_.n, 0);
  if (kind_ == MemoryKind::Merged) psn_.finish_pending_recovery();

  std::vector<std::uint32_t> order(active_);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (metrics_[a] != metrics_[b]) return metrics_[a] < metrics_[b];
    return a < b;
  });

  auto extract_info = [&](const BitVector& u) {
    BitVector info(cfg_.K);
    for (std::uint32_t k = 0; k < cfg_.K; ++k) info.set(k, u.get(cfg_.info_positions[k]));
    return info;
  };

  DecodeResult res;
  res.selected_path = order[0];
  bool chosen = false;
  if (cfg_.crc_len > 0) {
    for (std::uint32_t l : order) {
      BitVector info = extract_info(mem_->read_path(l));
      if (crc_check(info, cfg_.crc_poly)) {
        res.info_bits = std::move(info);
        res.selected_path = l;
        res.crc_pass = true;
        chosen = true;
        break;
      }
    }
  }
  if (!chosen) {
    res.info_bits = extract_info(mem_->read_path(order[0]));
    res.selected_path = order[0];
    res.crc_pass = false;
  }
  res.selected_metric = metrics_[res.selected_path];
  res.node_cycles = trace_.node_cycles();
  res.stall_cycles = trace_.stall_cycles();
  res.total_cycles = trace_.cycle();
  res.trace = std::move(trace_);
  return res;
}

DecodeResult decode_frame(std::span<const double> channel_llrs, const PolarCodeConfig& cfg,
                          MemoryKind kind, DecodeOptions options) {
  ListDecoder dec(cfg, kind, std::move(options));
  return dec.decode(channel_llrs);
}

}  // namespace pathmem
