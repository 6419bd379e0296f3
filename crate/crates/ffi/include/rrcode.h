/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef RRCODE_H
#define RRCODE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RrDirection {
  RR_DIRECTION_HORIZONTAL = 0,
  RR_DIRECTION_VERTICAL = 1,
  RR_DIRECTION_BOTH = 2,
} RrDirection;

typedef enum RrScheme {
  RR_SCHEME_UNCODED = 0,
  RR_SCHEME_RR1D_WORDLINE = 1,
  RR_SCHEME_RR1D_BITLINE = 2,
  RR_SCHEME_RR2D = 3,
  RR_SCHEME_RLL_INTERLEAVED = 4,
} RrScheme;

typedef enum RrStatus {
  RR_STATUS_OK = 0,
  RR_STATUS_NULL_POINTER = 1,
  RR_STATUS_INVALID_ARGUMENT = 2,
  // Input data is not a valid codeword, stream or grid.
  RR_STATUS_CODEC_ERROR = 3,
  RR_STATUS_BUFFER_TOO_SMALL = 4,
  RR_STATUS_PANIC = 5,
} RrStatus;

// Opaque Gray mapping handle.
typedef struct RrGrayMap RrGrayMap;

// Opaque LOCO code handle.
typedef struct RrLocoCode RrLocoCode;

// Opaque forbidden-pattern set handle.
typedef struct RrPatternSet RrPatternSet;

// Opaque RLL(0,1) block code handle.
typedef struct RrRllCode RrRllCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or NULL. The pointer stays
// valid until the next failing call on the same thread.
const char *rr_last_error(void);

// Library version as a static NUL-terminated string.
const char *rr_version(void);

enum RrStatus rr_loco_new(size_t m, struct RrLocoCode **out);

void rr_loco_free(struct RrLocoCode *code);

// Message bits per codeword (`s`), or 0 for a NULL handle.
size_t rr_loco_message_length(const struct RrLocoCode *code);

// Page bits per codeword including the bridge, or 0 for a NULL handle.
size_t rr_loco_block_length(const struct RrLocoCode *code);

// `N(m)` if it fits in 64 bits.
enum RrStatus rr_loco_cardinality(const struct RrLocoCode *code, uint64_t *out);

// Writes the `m` bits of codeword `index`, leftmost first.
enum RrStatus rr_loco_encode_codeword(const struct RrLocoCode *code,
                                      uint64_t index,
                                      uint8_t *out,
                                      size_t cap,
                                      size_t *out_len);

enum RrStatus rr_loco_decode_codeword(const struct RrLocoCode *code,
                                      const uint8_t *bits,
                                      size_t len,
                                      uint64_t *out);

// Page bits produced for `data_bits` message bits.
size_t rr_loco_page_bits_for(const struct RrLocoCode *code, size_t data_bits);

enum RrStatus rr_loco_encode_stream(const struct RrLocoCode *code,
                                    const uint8_t *data,
                                    size_t data_len,
                                    uint8_t *out,
                                    size_t cap,
                                    size_t *out_len);

// Decodes a page; the output includes tail padding.
enum RrStatus rr_loco_decode_stream(const struct RrLocoCode *code,
                                    const uint8_t *page,
                                    size_t page_len,
                                    uint8_t *out,
                                    size_t cap,
                                    size_t *out_len);

enum RrStatus rr_rll_new(size_t n, size_t k, struct RrRllCode **out);

void rr_rll_free(struct RrRllCode *code);

// Writes the `n` bits of the codeword for a `k`-bit message.
enum RrStatus rr_rll_encode_block(const struct RrRllCode *code,
                                  uint64_t msg,
                                  uint8_t *out,
                                  size_t cap,
                                  size_t *out_len);

enum RrStatus rr_rll_decode_block(const struct RrRllCode *code,
                                  const uint8_t *bits,
                                  size_t len,
                                  uint64_t *out);

enum RrStatus rr_rll_encode_stream(const struct RrRllCode *code,
                                   const uint8_t *data,
                                   size_t data_len,
                                   uint8_t *out,
                                   size_t cap,
                                   size_t *out_len);

enum RrStatus rr_rll_decode_stream(const struct RrRllCode *code,
                                   const uint8_t *page,
                                   size_t page_len,
                                   uint8_t *out,
                                   size_t cap,
                                   size_t *out_len);

enum RrStatus rr_gray_new(uint32_t q, struct RrGrayMap **out);

void rr_gray_free(struct RrGrayMap *map);

// Pages per cell, or 0 for a NULL handle.
size_t rr_gray_pages(const struct RrGrayMap *map);

// Writes the label of `level`, left-most page first.
enum RrStatus rr_gray_level_to_bits(const struct RrGrayMap *map,
                                    uint8_t level,
                                    uint8_t *out,
                                    size_t cap,
                                    size_t *out_len);

// Inverse of [`rr_gray_level_to_bits`].
enum RrStatus rr_gray_bits_to_level(const struct RrGrayMap *map,
                                    const uint8_t *bits,
                                    size_t len,
                                    uint8_t *out);

enum RrStatus rr_patterns_new(uint32_t q, struct RrPatternSet **out);

void rr_patterns_free(struct RrPatternSet *set);

// Number of forbidden triples, or 0 for a NULL handle.
size_t rr_patterns_len(const struct RrPatternSet *set);

// Start positions of forbidden windows in a level sequence.
enum RrStatus rr_patterns_scan(const struct RrPatternSet *set,
                               const uint8_t *levels,
                               size_t len,
                               size_t *out,
                               size_t cap,
                               size_t *out_len);

// Counts forbidden windows along rows and columns of a row-major grid.
// `direction` is an `RrDirection` value.
enum RrStatus rr_patterns_scan_grid(const struct RrPatternSet *set,
                                    const uint8_t *levels,
                                    size_t rows,
                                    size_t cols,
                                    uint32_t direction,
                                    size_t *horizontal,
                                    size_t *vertical);

// Payload bits carried by a `rows x cols` grid under `scheme`, an
// `RrScheme` value. `m` is used by the rr1d schemes only.
enum RrStatus rr_grid_capacity(uint32_t scheme,
                               uint32_t q,
                               size_t m,
                               size_t rows,
                               size_t cols,
                               size_t *out);

// Encodes exactly `rr_grid_capacity` payload bits into `rows * cols` levels.
enum RrStatus rr_grid_encode(uint32_t scheme,
                             uint32_t q,
                             size_t m,
                             size_t rows,
                             size_t cols,
                             const uint8_t *payload,
                             size_t payload_len,
                             uint8_t *out,
                             size_t cap,
                             size_t *out_len);

enum RrStatus rr_grid_decode(uint32_t scheme,
                             uint32_t q,
                             size_t m,
                             size_t rows,
                             size_t cols,
                             const uint8_t *levels,
                             uint8_t *out,
                             size_t cap,
                             size_t *out_len);

enum RrStatus rr_capacity_1d_lq(uint32_t q, double *out);

enum RrStatus rr_capacity_1d_rr(uint64_t q, double *out);

enum RrStatus rr_capacity_2d_rr(uint64_t q, double *out);

enum RrStatus rr_rate_1d_rr(uint64_t q, size_t m, double *out);

enum RrStatus rr_rate_2d_rr(uint64_t q, double *out);

enum RrStatus rr_error_prop(uint64_t q, size_t m, double *e1d, double *e2d);

enum RrStatus rr_symbol_probs(double *p0, double *p1);

// Writes the `q` per-level probabilities of the coded grid.
enum RrStatus rr_level_probs(uint32_t q, double *out, size_t cap, size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RRCODE_H */
