#ifndef MONODISK_H
#define MONODISK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MdChirality {
  MD_CHIRALITY_A = 0,
  MD_CHIRALITY_B = 1,
} MdChirality;

typedef enum MdCountFamily {
  MD_COUNT_FAMILY_C = 0,
  MD_COUNT_FAMILY_CTILDE = 1,
  MD_COUNT_FAMILY_D = 2,
  // Family D with the groove at its critical length (n = 3 only).
  MD_COUNT_FAMILY_D_CRITICAL = 3,
} MdCountFamily;

typedef enum MdFamily {
  // `n` straight radial sectors.
  MD_FAMILY_SYMRADIAL = 0,
  // `n` sectors bounded by a fixed s-curve.
  MD_FAMILY_RADGEN = 1,
  MD_FAMILY_D = 2,
  // The sporadic twelve-tile member for n = 3.
  MD_FAMILY_D31 = 3,
  MD_FAMILY_C = 4,
  MD_FAMILY_CTILDE = 5,
} MdFamily;

typedef enum MdPivot {
  MD_PIVOT_ABOUT_P = 0,
  MD_PIVOT_ABOUT_Q = 1,
} MdPivot;

// Result of every fallible call.
typedef enum MdStatus {
  MD_STATUS_OK = 0,
  // A required pointer argument was NULL.
  MD_STATUS_NULL_POINTER = 1,
  // Parameters outside the domain of the requested operation.
  MD_STATUS_INVALID_ARGUMENT = 2,
  // A geometric construction failed.
  MD_STATUS_GEOMETRY = 3,
  // A tiling document could not be parsed.
  MD_STATUS_DOCUMENT = 4,
  // A string argument was not valid UTF-8.
  MD_STATUS_INVALID_UTF8 = 5,
  // The library panicked; the message describes where.
  MD_STATUS_PANIC = 6,
} MdStatus;

typedef enum MdSvgStyle {
  MD_SVG_STYLE_STROKE = 0,
  // Fill tiles by orientation.
  MD_SVG_STYLE_COLORED = 1,
} MdSvgStyle;

// Opaque tiling handle.
typedef struct MdTiling MdTiling;

// Parameters for [`md_tiling_build`]. Fields a family does not use are
// ignored; `word` may be NULL, meaning the all-short word.
typedef struct MdBuildParams {
  enum MdFamily family;
  uint32_t n;
  uint32_t k;
  double t;
  const char *word;
  enum MdChirality chirality;
  enum MdPivot pivot;
} MdBuildParams;

// Summary of [`md_tiling_validate`]. Use [`md_tiling_validate_json`] for the
// individual failure messages.
typedef struct MdReport {
  bool valid;
  bool monohedral;
  size_t tile_count;
  size_t center_touch_count;
  size_t boundary_touch_count;
  size_t cyclic_symmetry_order;
  bool has_mirror_symmetry;
  double area_relative_error;
  size_t uncovered_samples;
  size_t multiply_covered_samples;
  size_t failure_count;
} MdReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string. Do not free.
const char *md_version(void);

// Message describing the last failed call on this thread, or NULL if the
// last call succeeded. Valid until the next library call on this thread.
const char *md_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void md_string_free(char *s);

// Builds a tiling. On success `*out` receives a new handle.
//
// # Safety
// `params` and `out` must be valid pointers; `params->word` must be NULL or
// a NUL-terminated string.
enum MdStatus md_tiling_build(const struct MdBuildParams *params, struct MdTiling **out);

// Parses a tiling document of `len` bytes.
//
// # Safety
// `json` must be valid for `len` bytes and `out` must be a valid pointer.
enum MdStatus md_tiling_load(const uint8_t *json, size_t len, struct MdTiling **out);

// Serializes a tiling to a JSON document; free `*out` with
// [`md_string_free`].
//
// # Safety
// `tiling` must be a live handle and `out` a valid pointer.
enum MdStatus md_tiling_save(const struct MdTiling *tiling, char **out);

// Renders a tiling as SVG; free `*out` with [`md_string_free`].
//
// # Safety
// `tiling` must be a live handle and `out` a valid pointer.
enum MdStatus md_tiling_svg(const struct MdTiling *tiling,
                            enum MdSvgStyle style,
                            uint32_t size_px,
                            char **out);

// Number of tiles, or 0 for NULL.
//
// # Safety
// `tiling` must be NULL or a live handle.
size_t md_tiling_tile_count(const struct MdTiling *tiling);

// Validates a tiling with `samples` Monte Carlo points drawn from `seed`.
//
// # Safety
// `tiling` must be a live handle and `out` a valid pointer.
enum MdStatus md_tiling_validate(const struct MdTiling *tiling,
                                 size_t samples,
                                 uint64_t seed,
                                 struct MdReport *out);

// Like [`md_tiling_validate`] but returns the full report as JSON.
//
// # Safety
// `tiling` must be a live handle and `out` a valid pointer.
enum MdStatus md_tiling_validate_json(const struct MdTiling *tiling,
                                      size_t samples,
                                      uint64_t seed,
                                      char **out);

// Sets `*out` to whether the two tilings agree up to rotation about the
// disk center.
//
// # Safety
// `a` and `b` must be live handles and `out` a valid pointer.
enum MdStatus md_tiling_same(const struct MdTiling *a, const struct MdTiling *b, bool *out);

// Releases a tiling handle. NULL is ignored.
//
// # Safety
// `tiling` must come from this library and not have been freed already.
void md_tiling_free(struct MdTiling *tiling);

// Counts the members of a family as a decimal string; free `*out` with
// [`md_string_free`]. `k` is ignored for the D families.
//
// # Safety
// `out` must be a valid pointer.
enum MdStatus md_count(enum MdCountFamily family, uint32_t n, uint32_t k, char **out);

// Number of binary necklaces with `a` beads of one colour and `b` of the
// other, as a decimal string; free `*out` with [`md_string_free`].
//
// # Safety
// `out` must be a valid pointer.
enum MdStatus md_necklace(uint32_t a, uint32_t b, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONODISK_H */
