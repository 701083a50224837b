// SPDX-License-Identifier: Apache-2.0
#include "pathmem/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pathmem/channel.hpp"
#include "pathmem/crc.hpp"
#include "pathmem/decoder.hpp"
#include "pathmem/polar.hpp"
#include "pathmem/psn.hpp"

namespace pathmem {

SuiteResult recovery_roundtrip_suite(std::uint64_t seed) {
  SuiteResult res{"recovery_roundtrip"};
  std::mt19937_64 rng(mix_seed(seed, 0x7ec0));
  for (unsigned lambda = 1; lambda <= 12; ++lambda) {
    for (unsigned p = 1; p <= lambda; ++p) {
      const std::uint32_t len = 1u << lambda;
      const std::uint32_t cases = lambda <= 4 ? (1u << len) : 0;
      if (cases) {
        for (std::uint32_t v = 0; v < cases; ++v) {
          BitVector u(len);
          for (std::uint32_t i = 0; i < len; ++i) u.set(i, (v >> i) & 1);
          ++res.checks;
          if (!(recover_bits(partial_sums(u, lambda), lambda, p) == u))
            res.fail("exhaustive mismatch lambda=" + std::to_string(lambda) + " p=" + std::to_string(p));
        }
      } else {
        for (int t = 0; t < 200; ++t) {
          BitVector u(len);
          for (std::uint32_t i = 0; i < len; ++i) u.set(i, static_cast<std::uint8_t>(rng() >> 63));
          ++res.checks;
          if (!(recover_bits(partial_sums(u, lambda), lambda, p) == u))
            res.fail("random mismatch lambda=" + std::to_string(lambda) + " p=" + std::to_string(p));
        }
      }
    }
  }
  return res;
}

bool check_crossbar_discipline(const ScheduleTrace& trace, std::uint32_t P, std::string* error) {
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint32_t> bits_per_path;
  std::map<std::uint64_t, std::uint32_t> uses;  // bit 0: permute, bit 1: copermute
  for (const auto& e : trace.events()) {
    if (e.unit != TraceUnit::Xbar) continue;
    bits_per_path[{e.cycle, e.path}] += e.bits;
    if (e.op == TraceOp::Permute) uses[e.cycle] |= 1;
    if (e.op == TraceOp::CoPermute) uses[e.cycle] |= 2;
  }
  for (const auto& [key, bits] : bits_per_path) {
    if (bits > P) {
      if (error)
        *error = "crossbar moved " + std::to_string(bits) + " bits for path " +
                 std::to_string(key.second) + " in cycle " + std::to_string(key.first);
      return false;
    }
  }
  for (const auto& [cycle, mask] : uses) {
    if (mask == 3) {
      if (error) *error = "both crossbar uses requested in cycle " + std::to_string(cycle);
      return false;
    }
  }
  return true;
}

bool check_dead_group_safety(const ScheduleTrace& trace, std::string* error) {
  // last sequence index at which the recovery datapath read each SRAM word
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> last_recovery_read;
  const auto& ev = trace.events();
  for (std::size_t s = 0; s < ev.size(); ++s) {
    const auto& e = ev[s];
    if (e.unit == TraceUnit::Recovery && e.op == TraceOp::Read)
      last_recovery_read[{e.a, e.b}] = s;
  }
  for (std::size_t s = 0; s < ev.size(); ++s) {
    const auto& e = ev[s];
    if (e.unit != TraceUnit::PsnSram) continue;
    if (e.op != TraceOp::Write && e.op != TraceOp::Flush) continue;
    auto it = last_recovery_read.find({e.a, e.b});
    if (it != last_recovery_read.end() && it->second > s) {
      if (error)
        *error = "partial-sum write at block " + std::to_string(e.a) + " word " +
                 std::to_string(e.b) + " precedes a recovery read of the same word";
      return false;
    }
  }
  return true;
}

namespace {

struct TrialSetup {
  PolarCodeConfig cfg;
  std::vector<double> llrs;
};

TrialSetup make_trial(unsigned n, unsigned p, std::uint32_t L, std::uint64_t seed) {
  const std::uint32_t N = 1u << n;
  const std::uint32_t K = N / 2;
  const unsigned crc = K > 20 ? 16u : 0u;
  TrialSetup t{PolarCodeConfig::make(n, K, p, L, crc), {}};

  std::mt19937_64 rng(seed);
  BitVector payload(t.cfg.payload_bits());
  for (std::uint32_t i = 0; i < payload.size(); ++i)
    payload.set(i, static_cast<std::uint8_t>(rng() >> 63));
  BitVector info = crc ? crc_attach(payload, t.cfg.crc_poly) : payload;
  BitVector u(N);
  for (std::uint32_t k = 0; k < K; ++k) u.set(t.cfg.info_positions[k], info.get(k));
  NormalSampler noise(rng);
  t.llrs = bpsk_awgn(kronecker_encode(u), ebn0_to_sigma(2.0, 0.5), noise);
  return t;
}

}  // namespace

SuiteResult cross_model_suite(unsigned n, unsigned p, std::uint32_t L, std::uint32_t trials,
                              std::uint64_t seed) {
  SuiteResult res{"cross_model_equivalence"};
  const unsigned pointer_bound = n - p + 1;
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    auto setup = make_trial(n, p, L, mix_seed(seed, trial));
    const bool with_trace = trial == 0;

    // reference run: traditional memory, recording per-bit prefixes
    std::vector<std::vector<BitVector>> snapshots(setup.cfg.N);
    DecodeOptions ref_opts;
    ref_opts.observer = [&](const ListDecoder& d, std::uint32_t bit) {
      auto& snap = snapshots[bit];
      snap.reserve(d.active_paths());
      for (std::uint32_t l = 0; l < d.active_paths(); ++l) snap.push_back(d.path_prefix(l));
    };
    auto ref = decode_frame(setup.llrs, setup.cfg, MemoryKind::Traditional, ref_opts);

    for (MemoryKind kind : {MemoryKind::Folded, MemoryKind::Merged}) {
      DecodeOptions opts;
      opts.collect_trace = with_trace;
      bool prefixes_ok = true;
      bool bound_ok = true;
      opts.observer = [&](const ListDecoder& d, std::uint32_t bit) {
        const auto& snap = snapshots[bit];
        if (snap.size() != d.active_paths()) {
          prefixes_ok = false;
          return;
        }
        for (std::uint32_t l = 0; l < d.active_paths(); ++l) {
          if (!(d.path_prefix(l) == snap[l])) prefixes_ok = false;
          if (d.memory_group_count(l) > pointer_bound) bound_ok = false;
          if (d.psn_group_count(l) > pointer_bound) bound_ok = false;
        }
      };
      auto got = decode_frame(setup.llrs, setup.cfg, kind, opts);
      ++res.checks;
      if (!prefixes_ok)
        res.fail(std::string("per-bit prefixes diverged (") + memory_kind_name(kind) + ", trial " +
                 std::to_string(trial) + ")");
      ++res.checks;
      if (!(got.info_bits == ref.info_bits) || got.crc_pass != ref.crc_pass ||
          got.selected_path != ref.selected_path)
        res.fail(std::string("final output diverged (") + memory_kind_name(kind) + ", trial " +
                 std::to_string(trial) + ")");
      ++res.checks;
      if (!bound_ok)
        res.fail(std::string("pointer bound exceeded (") + memory_kind_name(kind) + ", trial " +
                 std::to_string(trial) + ")");
      if (with_trace) {
        std::string err;
        ++res.checks;
        if (!check_crossbar_discipline(got.trace, setup.cfg.P, &err))
          res.fail("crossbar discipline: " + err);
        if (kind == MemoryKind::Merged) {
          ++res.checks;
          if (!check_dead_group_safety(got.trace, &err)) res.fail("dead groups: " + err);
        }
      }
    }
  }
  return res;
}

std::string render_verify_text(const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  for (const auto& s : suites) {
    os << (s.passed() ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.checks << " checks, "
       << s.failures << " failures)\n";
    for (const auto& m : s.messages) os << "      " << m << "\n";
  }
  return os.str();
}

std::string render_verify_json(const std::vector<SuiteResult>& suites, const std::string& manifest) {
  nlohmann::json j;
  j["manifest"] = manifest;
  auto arr = nlohmann::json::array();
  for (const auto& s : suites) {
    arr.push_back({{"name", s.name},
                   {"checks", s.checks},
                   {"failures", s.failures},
                   {"passed", s.passed()},
                   {"messages", s.messages}});
  }
  j["suites"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace pathmem
