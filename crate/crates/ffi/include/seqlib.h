#ifndef SEQLIB_H
#define SEQLIB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum SeqlibStatus {
  SEQLIB_STATUS_OK = 0,
  SEQLIB_STATUS_NULL_POINTER = 1,
  SEQLIB_STATUS_INVALID_ARGUMENT = 2,
  SEQLIB_STATUS_SYMBOL_NOT_IN_ALPHABET = 3,
  SEQLIB_STATUS_PATTERN_TOO_LONG = 4,
  SEQLIB_STATUS_EMPTY_PATTERN = 5,
  SEQLIB_STATUS_BUFFER_TOO_SMALL = 6,
  SEQLIB_STATUS_OUT_OF_BOUNDS = 7,
  SEQLIB_STATUS_IO = 8,
  SEQLIB_STATUS_FORMAT = 9,
  SEQLIB_STATUS_INTERNAL = 10,
  SEQLIB_STATUS_PANIC = 11,
} SeqlibStatus;

typedef enum SeqlibAlgorithm {
  SEQLIB_ALGORITHM_NAIVE = 0,
  SEQLIB_ALGORITHM_KMP = 1,
  SEQLIB_ALGORITHM_HORSPOOL = 2,
  SEQLIB_ALGORITHM_BNDM = 3,
  SEQLIB_ALGORITHM_BOM = 4,
  SEQLIB_ALGORITHM_SHIFT_AND = 5,
} SeqlibAlgorithm;

typedef enum SeqlibAlignMode {
  SEQLIB_ALIGN_MODE_GLOBAL = 0,
  SEQLIB_ALIGN_MODE_SEMIGLOBAL = 1,
  SEQLIB_ALIGN_MODE_LOCAL = 2,
} SeqlibAlignMode;

/**
 * FM-index over a text together with its suffix array.
 */
typedef struct SeqlibFmIndex SeqlibFmIndex;

/**
 * FMD-index over a DNA text and its reverse complement.
 */
typedef struct SeqlibFmdIndex SeqlibFmdIndex;

/**
 * An exact matcher preprocessed for one pattern.
 */
typedef struct SeqlibMatcher SeqlibMatcher;

/**
 * A supermaximal exact match `pattern[pattern_start..pattern_end)` and its
 * number of occurrences on both strands.
 */
typedef struct SeqlibSmem {
  size_t pattern_start;
  size_t pattern_end;
  size_t occurrences;
} SeqlibSmem;

/**
 * A text end position (inclusive) where the pattern matches within `distance` edits.
 */
typedef struct SeqlibApproxHit {
  size_t end;
  size_t distance;
} SeqlibApproxHit;

/**
 * Affine gap scoring; a gap of length `l` scores `gap_open + l * gap_extend`.
 * Gap penalties must be ≤ 0.
 */
typedef struct SeqlibScoring {
  int32_t gap_open;
  int32_t gap_extend;
  int32_t match_score;
  int32_t mismatch_score;
} SeqlibScoring;

/**
 * Optimal score and half-open aligned spans of both sequences.
 */
typedef struct SeqlibAlignment {
  int32_t score;
  size_t x_start;
  size_t x_end;
  size_t y_start;
  size_t y_end;
} SeqlibAlignment;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *seqlib_status_message(int32_t status);

/**
 * Build an FM-index over `text`, which must not contain `$` (used as the
 * sentinel). `sampling_rate` is the occurrence table sampling rate (≥ 1).
 *
 * # Safety
 * `text` must point to `text_len` readable bytes (or be NULL with length 0);
 * `out` must be a valid pointer to store the handle in.
 */
enum SeqlibStatus seqlib_fm_index_new(const uint8_t *text,
                                      size_t text_len,
                                      size_t sampling_rate,
                                      struct SeqlibFmIndex **out);

/**
 * Number of occurrences of `pattern`. The empty pattern occurs `text_len + 1` times.
 *
 * # Safety
 * `index` must be a live handle from `seqlib_fm_index_new`; `pattern` must
 * point to `pattern_len` bytes; `out_count` must be valid for writing.
 */
enum SeqlibStatus seqlib_fm_index_count(const struct SeqlibFmIndex *index,
                                        const uint8_t *pattern,
                                        size_t pattern_len,
                                        size_t *out_count);

/**
 * Start positions of `pattern` in ascending order.
 *
 * # Safety
 * As for `seqlib_fm_index_count`; `out_positions` must have room for
 * `capacity` elements and `out_len` must be valid for writing.
 */
enum SeqlibStatus seqlib_fm_index_locate(const struct SeqlibFmIndex *index,
                                         const uint8_t *pattern,
                                         size_t pattern_len,
                                         size_t *out_positions,
                                         size_t capacity,
                                         size_t *out_len);

/**
 * Release an FM-index. NULL is ignored.
 *
 * # Safety
 * `index` must be NULL or a handle from `seqlib_fm_index_new` not freed before.
 */
void seqlib_fm_index_free(struct SeqlibFmIndex *index);

/**
 * Build an FMD-index over a text of `A`, `C`, `G`, `T` and `N`.
 *
 * # Safety
 * `text` must point to `text_len` readable bytes; `out` must be valid for writing.
 */
enum SeqlibStatus seqlib_fmd_index_new(const uint8_t *text,
                                       size_t text_len,
                                       struct SeqlibFmdIndex **out);

/**
 * All SMEMs of `pattern`, ordered by start position.
 *
 * # Safety
 * `index` must be a live handle; `pattern` must point to `pattern_len`
 * bytes; `out` must have room for `capacity` elements; `out_len` must be
 * valid for writing.
 */
enum SeqlibStatus seqlib_fmd_index_smems(const struct SeqlibFmdIndex *index,
                                         const uint8_t *pattern,
                                         size_t pattern_len,
                                         struct SeqlibSmem *out,
                                         size_t capacity,
                                         size_t *out_len);

/**
 * Release an FMD-index. NULL is ignored.
 *
 * # Safety
 * `index` must be NULL or a handle from `seqlib_fmd_index_new` not freed before.
 */
void seqlib_fmd_index_free(struct SeqlibFmdIndex *index);

/**
 * Preprocess `pattern` for `algorithm` (given as a `SeqlibAlgorithm` value).
 * BNDM and Shift-And accept patterns of at most 64 bytes.
 *
 * # Safety
 * `pattern` must point to `pattern_len` bytes; `out` must be valid for writing.
 */
enum SeqlibStatus seqlib_matcher_new(int32_t algorithm,
                                     const uint8_t *pattern,
                                     size_t pattern_len,
                                     struct SeqlibMatcher **out);

/**
 * Start positions of all (possibly overlapping) occurrences, ascending.
 *
 * # Safety
 * `matcher` must be a live handle; `text` must point to `text_len` bytes;
 * `out_positions` must have room for `capacity` elements; `out_len` must be
 * valid for writing.
 */
enum SeqlibStatus seqlib_matcher_find_all(const struct SeqlibMatcher *matcher,
                                          const uint8_t *text,
                                          size_t text_len,
                                          size_t *out_positions,
                                          size_t capacity,
                                          size_t *out_len);

/**
 * Release a matcher. NULL is ignored.
 *
 * # Safety
 * `matcher` must be NULL or a handle from `seqlib_matcher_new` not freed before.
 */
void seqlib_matcher_free(struct SeqlibMatcher *matcher);

/**
 * All end positions where `pattern` matches a substring of `text` with at
 * most `k` edits, ascending. Uses the bit-parallel algorithm for patterns of
 * up to 64 bytes and the cutoff dynamic program otherwise.
 *
 * # Safety
 * `pattern` and `text` must point to readable buffers of the given lengths;
 * `out` must have room for `capacity` elements; `out_len` must be valid for writing.
 */
enum SeqlibStatus seqlib_approx_find(const uint8_t *pattern,
                                     size_t pattern_len,
                                     const uint8_t *text,
                                     size_t text_len,
                                     size_t k,
                                     struct SeqlibApproxHit *out,
                                     size_t capacity,
                                     size_t *out_len);

/**
 * Align `x` against `y`. If `ops` is non-NULL, the traceback is written as
 * one byte per column: `M` match, `X` substitution, `D` gap in `y`
 * (consumes `x`), `I` gap in `x` (consumes `y`); `*ops_len` receives its
 * length. `ops` may be NULL (then `ops_capacity` and `ops_len` are ignored).
 *
 * # Safety
 * `x`, `y` must point to readable buffers of the given lengths; `scoring`
 * and `out` must be valid pointers; if `ops` is non-NULL it must have room
 * for `ops_capacity` bytes and `ops_len` must be valid for writing.
 */
enum SeqlibStatus seqlib_align(const uint8_t *x,
                               size_t x_len,
                               const uint8_t *y,
                               size_t y_len,
                               const struct SeqlibScoring *scoring,
                               int32_t mode,
                               struct SeqlibAlignment *out,
                               uint8_t *ops,
                               size_t ops_capacity,
                               size_t *ops_len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *seqlib_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEQLIB_H */
