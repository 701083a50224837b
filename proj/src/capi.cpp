// SPDX-License-Identifier: Apache-2.0
#include "pathmem/capi.h"

#include <cstring>
#include <sstream>
#include <string>

#include "pathmem/channel.hpp"
#include "pathmem/config.hpp"
#include "pathmem/cost.hpp"
#include "pathmem/decoder.hpp"
#include "pathmem/psn.hpp"
#include "pathmem/schedule.hpp"
#include "pathmem/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pathmem_status fail(pathmem_status st, const char* what) {
  g_last_error = what ? what : "unknown error";
  return st;
}

template <typename Fn>
pathmem_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const pathmem::ProtocolError& e) {
    return fail(PATHMEM_ERR_STATE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PATHMEM_ERR_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(PATHMEM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PATHMEM_ERR_INTERNAL, "unknown exception");
  }
}

pathmem::MemoryKind to_kind(pathmem_memory_kind k) {
  switch (k) {
    case PATHMEM_MEMORY_TRADITIONAL: return pathmem::MemoryKind::Traditional;
    case PATHMEM_MEMORY_FOLDED: return pathmem::MemoryKind::Folded;
    case PATHMEM_MEMORY_MERGED: return pathmem::MemoryKind::Merged;
  }
  throw std::invalid_argument("bad memory kind");
}

std::string manifest_line(const std::string& cmd, const std::string& params) {
  std::ostringstream os;
  os << "pathmem " << pathmem_version() << " cmd=" << cmd << ' ' << params;
  return os.str();
}

}  // namespace

struct pathmem_config {
  pathmem::PolarCodeConfig cfg;
};

extern "C" {

const char* pathmem_version(void) { return "0.1.0"; }

const char* pathmem_last_error(void) { return g_last_error.c_str(); }

void pathmem_string_free(char* s) { ::free(s); }

pathmem_status pathmem_config_create(unsigned n, unsigned k, unsigned p, unsigned list_size,
                                     unsigned crc_len, double design_snr_db, pathmem_config** out) {
  if (!out) return fail(PATHMEM_ERR_ARG, "out pointer is null");
  *out = nullptr;
  return guarded([&] {
    auto cfg = pathmem::PolarCodeConfig::make(n, k, p, list_size, crc_len, design_snr_db);
    *out = new pathmem_config{std::move(cfg)};
    return PATHMEM_OK;
  });
}

void pathmem_config_destroy(pathmem_config* cfg) { delete cfg; }

pathmem_status pathmem_decode_frame(const pathmem_config* cfg, const double* llrs, size_t llr_count,
                                    pathmem_memory_kind kind, uint8_t* info_out, int* crc_pass_out,
                                    uint64_t* cycles_out) {
  if (!cfg || !llrs || !info_out) return fail(PATHMEM_ERR_ARG, "null pointer argument");
  return guarded([&] {
    auto res = pathmem::decode_frame({llrs, llr_count}, cfg->cfg, to_kind(kind));
    for (std::uint32_t i = 0; i < cfg->cfg.K; ++i) info_out[i] = res.info_bits.get(i);
    if (crc_pass_out) *crc_pass_out = res.crc_pass ? 1 : 0;
    if (cycles_out) *cycles_out = res.total_cycles;
    return PATHMEM_OK;
  });
}

pathmem_status pathmem_schedule_table(pathmem_schedule_kind kind, unsigned lambda, unsigned p,
                                      pathmem_format format, char** out) {
  if (!out) return fail(PATHMEM_ERR_ARG, "out pointer is null");
  *out = nullptr;
  if (format == PATHMEM_FORMAT_JSON) return fail(PATHMEM_ERR_ARG, "schedule tables are text or csv");
  return guarded([&] {
    const bool csv = format == PATHMEM_FORMAT_CSV;
    std::string table = kind == PATHMEM_SCHEDULE_PSN
                            ? pathmem::render_psn_table(lambda, p, csv)
                            : pathmem::render_recovery_table(lambda, p, csv);
    *out = dup_string(table);
    return *out ? PATHMEM_OK : fail(PATHMEM_ERR_INTERNAL, "allocation failed");
  });
}

pathmem_status pathmem_report(unsigned n, unsigned p, unsigned list_size, pathmem_format format,
                              char** out) {
  if (!out) return fail(PATHMEM_ERR_ARG, "out pointer is null");
  *out = nullptr;
  if (format == PATHMEM_FORMAT_CSV) return fail(PATHMEM_ERR_ARG, "reports are text or json");
  return guarded([&] {
    auto mem = pathmem::memory_report(n, p, list_size);
    auto cycles = pathmem::total_decode_cycles(n, p, true);
    std::ostringstream params;
    params << "n=" << n << " p=" << p << " L=" << list_size;
    std::string text = format == PATHMEM_FORMAT_JSON
                           ? pathmem::render_report_json(mem, cycles, manifest_line("report", params.str()))
                           : "# " + manifest_line("report", params.str()) + "\n" +
                                 pathmem::render_report_text(mem, cycles);
    *out = dup_string(text);
    return *out ? PATHMEM_OK : fail(PATHMEM_ERR_INTERNAL, "allocation failed");
  });
}

pathmem_status pathmem_verify(unsigned n, unsigned p, unsigned list_size, unsigned trials,
                              uint64_t seed, pathmem_format format, char** out,
                              unsigned* failures_out) {
  if (!out) return fail(PATHMEM_ERR_ARG, "out pointer is null");
  *out = nullptr;
  if (format == PATHMEM_FORMAT_CSV) return fail(PATHMEM_ERR_ARG, "verify output is text or json");
  return guarded([&] {
    std::vector<pathmem::SuiteResult> suites;
    suites.push_back(pathmem::recovery_roundtrip_suite(seed));
    suites.push_back(pathmem::cross_model_suite(n, p, list_size, trials, seed));
    unsigned failures = 0;
    for (const auto& s : suites) failures += static_cast<unsigned>(s.failures);
    if (failures_out) *failures_out = failures;
    std::ostringstream params;
    params << "n=" << n << " p=" << p << " L=" << list_size << " trials=" << trials
           << " seed=" << seed;
    std::string text = format == PATHMEM_FORMAT_JSON
                           ? pathmem::render_verify_json(suites, manifest_line("verify", params.str()))
                           : "# " + manifest_line("verify", params.str()) + "\n" +
                                 pathmem::render_verify_text(suites);
    *out = dup_string(text);
    return *out ? PATHMEM_OK : fail(PATHMEM_ERR_INTERNAL, "allocation failed");
  });
}

pathmem_status pathmem_fer(const pathmem_config* cfg, pathmem_memory_kind kind, const double* ebn0_db,
                           size_t point_count, uint64_t frames, uint64_t seed, unsigned threads,
                           char** csv_out) {
  if (!cfg || !ebn0_db || !csv_out) return fail(PATHMEM_ERR_ARG, "null pointer argument");
  *csv_out = nullptr;
  if (point_count == 0) return fail(PATHMEM_ERR_ARG, "need at least one Eb/N0 point");
  return guarded([&] {
    std::ostringstream os;
    std::ostringstream params;
    params << "n=" << cfg->cfg.n << " K=" << cfg->cfg.K << " p=" << cfg->cfg.p << " L=" << cfg->cfg.L
           << " crc=" << cfg->cfg.crc_len << " memory=" << pathmem::memory_kind_name(to_kind(kind))
           << " frames=" << frames << " seed=" << seed;
    os << "# " << manifest_line("fer", params.str()) << "\n";
    os << "ebn0_db,frames,errors,fer,ci_halfwidth\n";
    for (size_t i = 0; i < point_count; ++i) {
      pathmem::ChannelConfig ch{ebn0_db[i], seed};
      auto pt = pathmem::fer_montecarlo(cfg->cfg, to_kind(kind), ch, frames, threads ? threads : 1);
      os << pt.ebn0_db << ',' << pt.frames << ',' << pt.errors << ',' << pt.fer << ','
         << pt.ci_halfwidth << '\n';
    }
    *csv_out = dup_string(os.str());
    return *csv_out ? PATHMEM_OK : fail(PATHMEM_ERR_INTERNAL, "allocation failed");
  });
}

}  // extern "C"
