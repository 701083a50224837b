// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the pathmem C API.
//
// Subcommands: verify, schedule, report, fer. Exit codes: 0 success,
// 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pathmem/capi.h"

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) return usage_error("cannot open output file " + out_path);
  f << text;
  return 0;
}

unsigned default_threads() {
  if (const char* env = std::getenv("PATHMEM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

struct Owned {
  char* s = nullptr;
  ~Owned() { pathmem_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar-code LSCD path-memory architecture toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  unsigned n = 7, p = 2, list_size = 4, k = 0, crc_len = 16, trials = 100, threads = default_threads();
  unsigned lambda = 3;
  std::uint64_t seed = 1, frames = 1000;
  double design_snr = 0.0;
  std::string kind_str = "merged", sched_kind = "psn", out_path;
  std::vector<double> ebn0;
  bool json = false, csv = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "run the equivalence and round-trip suites");
  verify->add_option("--n", n, "log2 code length")->required();
  verify->add_option("--p", p, "log2 parallelism")->required();
  verify->add_option("--list", list_size, "list size")->required();
  verify->add_option("--trials", trials, "random frames per suite");
  verify->add_option("--seed", seed, "master seed");
  verify->add_flag("--json", json, "JSON output");
  add_common(verify);

  auto* schedule = app.add_subcommand("schedule", "print a per-cycle schedule table");
  schedule->add_option("--kind", sched_kind, "psn or recovery")->required();
  schedule->add_option("--lambda", lambda, "log2 group length")->required();
  schedule->add_option("--p", p, "log2 parallelism")->required();
  schedule->add_flag("--csv", csv, "CSV output");
  add_common(schedule);

  auto* report = app.add_subcommand("report", "memory-cost and cycle report");
  report->add_option("--n", n, "log2 code length")->required();
  report->add_option("--p", p, "log2 parallelism")->required();
  report->add_option("--list", list_size, "list size")->required();
  report->add_flag("--json", json, "JSON output");
  add_common(report);

  auto* fer = app.add_subcommand("fer", "Monte Carlo frame error rate (CSV)");
  fer->add_option("--n", n, "log2 code length")->required();
  fer->add_option("--K", k, "info bits including CRC (default N/2)");
  fer->add_option("--p", p, "log2 parallelism")->required();
  fer->add_option("--list", list_size, "list size")->required();
  fer->add_option("--crc", crc_len, "CRC length (0 disables)");
  fer->add_option("--ebn0", ebn0, "Eb/N0 points in dB")->required()->expected(-1);
  fer->add_option("--frames", frames, "frames per point");
  fer->add_option("--seed", seed, "master seed");
  fer->add_option("--memory", kind_str, "traditional, folded or merged");
  fer->add_option("--threads", threads, "worker threads (default $PATHMEM_THREADS or 1)");
  fer->add_option("--design-snr", design_snr, "construction design SNR in dB");
  add_common(fer);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  pathmem_memory_kind kind = PATHMEM_MEMORY_MERGED;
  if (kind_str == "traditional") kind = PATHMEM_MEMORY_TRADITIONAL;
  else if (kind_str == "folded") kind = PATHMEM_MEMORY_FOLDED;
  else if (kind_str == "merged") kind = PATHMEM_MEMORY_MERGED;
  else return usage_error("unknown memory kind: " + kind_str);

  if (verify->parsed()) {
    Owned text;
    unsigned failures = 0;
    const auto st = pathmem_verify(n, p, list_size, trials, seed,
                                   json ? PATHMEM_FORMAT_JSON : PATHMEM_FORMAT_TEXT, &text.s,
                                   &failures);
    if (st != PATHMEM_OK) return usage_error(pathmem_last_error());
    if (int rc = emit(text.s, out_path)) return rc;
    return failures == 0 ? 0 : 1;
  }

  if (schedule->parsed()) {
    pathmem_schedule_kind sk;
    if (sched_kind == "psn") sk = PATHMEM_SCHEDULE_PSN;
    else if (sched_kind == "recovery") sk = PATHMEM_SCHEDULE_RECOVERY;
    else return usage_error("unknown schedule kind: " + sched_kind);
    Owned text;
    const auto st = pathmem_schedule_table(sk, lambda, p, csv ? PATHMEM_FORMAT_CSV : PATHMEM_FORMAT_TEXT,
                                           &text.s);
    if (st != PATHMEM_OK) return usage_error(pathmem_last_error());
    return emit(text.s, out_path);
  }

  if (report->parsed()) {
    Owned text;
    const auto st =
        pathmem_report(n, p, list_size, json ? PATHMEM_FORMAT_JSON : PATHMEM_FORMAT_TEXT, &text.s);
    if (st != PATHMEM_OK) return usage_error(pathmem_last_error());
    return emit(text.s, out_path);
  }

  if (fer->parsed()) {
    if (k == 0) k = (1u << n) / 2;
    pathmem_config* cfg = nullptr;
    if (pathmem_config_create(n, k, p, list_size, crc_len, design_snr, &cfg) != PATHMEM_OK)
      return usage_error(pathmem_last_error());
    Owned text;
    const auto st = pathmem_fer(cfg, kind, ebn0.data(), ebn0.size(), frames, seed, threads, &text.s);
    pathmem_config_destroy(cfg);
    if (st != PATHMEM_OK) return usage_error(pathmem_last_error());
    return emit(text.s, out_path);
  }

  return usage_error("no subcommand");
}
