/* SPDX-License-Identifier: Apache-2.0 */
#ifndef PATHMEM_CAPI_H
#define PATHMEM_CAPI_H

/*
 * C API for the pathmem library: polar-code list decoding with behavioral
 * path-memory architecture models, schedule tables, cost reports and Monte
 * Carlo frame-error-rate runs.
 *
 * All functions return pathmem_status; PATHMEM_OK is 0. Rendered outputs
 * come back as heap strings owned by the library; release them with
 * pathmem_string_free. On failure pathmem_last_error() describes the most
 * recent error in the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#ifndef PATHMEM_API
#define PATHMEM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pathmem_config pathmem_config; /* opaque */

typedef enum pathmem_status {
  PATHMEM_OK = 0,
  PATHMEM_ERR_ARG = 1,      /* invalid argument or configuration */
  PATHMEM_ERR_STATE = 2,    /* protocol violation inside the models */
  PATHMEM_ERR_INTERNAL = 3, /* anything else */
} pathmem_status;

typedef enum pathmem_memory_kind {
  PATHMEM_MEMORY_TRADITIONAL = 0,
  PATHMEM_MEMORY_FOLDED = 1,
  PATHMEM_MEMORY_MERGED = 2,
} pathmem_memory_kind;

typedef enum pathmem_schedule_kind {
  PATHMEM_SCHEDULE_PSN = 0,
  PATHMEM_SCHEDULE_RECOVERY = 1,
} pathmem_schedule_kind;

typedef enum pathmem_format {
  PATHMEM_FORMAT_TEXT = 0,
  PATHMEM_FORMAT_JSON = 1,
  PATHMEM_FORMAT_CSV = 2,
} pathmem_format;

PATHMEM_API const char* pathmem_version(void);
PATHMEM_API const char* pathmem_last_error(void);
PATHMEM_API void pathmem_string_free(char* s);

/* crc_len of 0 disables the CRC; otherwise CRC-16/CCITT (0x1021) is used. */
PATHMEM_API pathmem_status pathmem_config_create(unsigned n, unsigned k, unsigned p, unsigned list_size,
                                                 unsigned crc_len, double design_snr_db,
                                                 pathmem_config** out);
PATHMEM_API void pathmem_config_destroy(pathmem_config* cfg);

/* Decodes one frame of N channel LLRs. info_out must hold K bytes (one bit
 * per byte, CRC bits included); crc_pass_out and cycles_out are optional. */
PATHMEM_API pathmem_status pathmem_decode_frame(const pathmem_config* cfg, const double* llrs,
                                                size_t llr_count, pathmem_memory_kind kind,
                                                uint8_t* info_out, int* crc_pass_out,
                                                uint64_t* cycles_out);

/* Per-cycle schedule table for partial-sum generation or decoded-bit
 * recovery of a 2^lambda-bit group at parallelism 2^p. TEXT or CSV. */
PATHMEM_API pathmem_status pathmem_schedule_table(pathmem_schedule_kind kind, unsigned lambda,
                                                  unsigned p, pathmem_format format, char** out);

/* Memory-cost and cycle report for the given geometry. TEXT or JSON. */
PATHMEM_API pathmem_status pathmem_report(unsigned n, unsigned p, unsigned list_size,
                                          pathmem_format format, char** out);

/* Runs the cross-model equivalence and recovery round-trip suites.
 * failures_out receives the total failure count. TEXT or JSON. */
PATHMEM_API pathmem_status pathmem_verify(unsigned n, unsigned p, unsigned list_size, unsigned trials,
                                          uint64_t seed, pathmem_format format, char** out,
                                          unsigned* failures_out);

/* Monte Carlo FER sweep; emits CSV rows ebn0_db,frames,errors,fer,ci_halfwidth. */
PATHMEM_API pathmem_status pathmem_fer(const pathmem_config* cfg, pathmem_memory_kind kind,
                                       const double* ebn0_db, size_t point_count, uint64_t frames,
                                       uint64_t seed, unsigned threads, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* PATHMEM_CAPI_H */
