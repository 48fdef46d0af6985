#ifndef VINCMEAN_H
#define VINCMEAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every fallible function.
 */
typedef enum VmStatus {
  VM_STATUS_OK = 0,
  VM_STATUS_NULL_POINTER = 1,
  VM_STATUS_INVALID_UTF8 = 2,
  VM_STATUS_PARSE_ERROR = 3,
  VM_STATUS_INVALID_ARGUMENT = 4,
  VM_STATUS_SIZE_MISMATCH = 5,
  VM_STATUS_OUT_OF_RANGE = 6,
  VM_STATUS_PANIC = 7,
} VmStatus;

/*
 A character expansion `Σ a_λ χ^λ` of a class function on `S_n`.
 */
typedef struct VmCombination VmCombination;

/*
 A parsed vincular 3-pattern.
 */
typedef struct VmPattern VmPattern;

/*
 A statistic: a pattern, `peak`, `des`, `asc`, or a weighted sum of them.
 */
typedef struct VmStatistic VmStatistic;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread, or NULL. The pointer
 stays valid until the next call into this library on the same thread.
 */
const char *vm_last_error_message(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *vm_version(void);

/*
 Frees a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not have been freed already.
 */
void vm_string_free(char *s);

/*
 Parses a pattern such as `"(1-23]"`.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum VmStatus vm_pattern_parse(const char *text, struct VmPattern **out);

/*
 # Safety
 `p` must be NULL or a handle from [`vm_pattern_parse`].
 */
void vm_pattern_free(struct VmPattern *p);

/*
 Canonical text of a pattern, freed with [`vm_string_free`].

 # Safety
 `p` must be a valid handle.
 */
char *vm_pattern_to_string(const struct VmPattern *p);

/*
 Number of occurrences of the pattern in the permutation given by the
 one-line word `word[0..n]` (values 1..=n).

 # Safety
 `word` must point to `n` readable values; `out` must be writable.
 */
enum VmStatus vm_pattern_count(const struct VmPattern *p,
                               const size_t *word,
                               size_t n,
                               uint64_t *out);

/*
 Parses a statistic such as `"peak"` or `"2*(1-2-3);-1/2*des"`.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum VmStatus vm_statistic_parse(const char *text, struct VmStatistic **out);

/*
 Wraps a pattern as a statistic. The pattern handle stays owned by the caller.

 # Safety
 `p` must be a valid handle; `out` must be writable.
 */
enum VmStatus vm_statistic_from_pattern(const struct VmPattern *p, struct VmStatistic **out);

/*
 # Safety
 `s` must be NULL or a statistic handle.
 */
void vm_statistic_free(struct VmStatistic *s);

/*
 Character coefficients of the statistic's mean over each conjugacy class of `S_n`.

 # Safety
 `s` must be a valid handle; `out` must be writable.
 */
enum VmStatus vm_mean_coefficients(const struct VmStatistic *s,
                                   size_t n,
                                   struct VmCombination **out);

/*
 # Safety
 `c` must be NULL or a combination handle.
 */
void vm_combination_free(struct VmCombination *c);

/*
 Number of nonzero terms; 0 for NULL.

 # Safety
 `c` must be NULL or a valid handle.
 */
size_t vm_combination_len(const struct VmCombination *c);

/*
 Term `index` as newly allocated strings: the partition (`"6,1,1"`) and
 its coefficient (`"p/q"`). Terms are ordered with `(n)` first.

 # Safety
 `c` must be a valid handle; both output pointers must be writable.
 */
enum VmStatus vm_combination_term(const struct VmCombination *c,
                                  size_t index,
                                  char **partition,
                                  char **coefficient);

/*
 Value of the combination at the conjugacy class `mu` (e.g. `"2,1^4"`),
 written to `out` as a newly allocated rational string.

 # Safety
 `c` must be a valid handle; `mu` a NUL-terminated string; `out` writable.
 */
enum VmStatus vm_combination_evaluate(const struct VmCombination *c, const char *mu, char **out);

/*
 Exact expected value of the statistic after `t` steps drawn uniformly
 from the conjugacy class `gamma` of `S_n`, as a newly allocated string.

 # Safety
 `s` must be a valid handle; `gamma` a NUL-terminated string; `out` writable.
 */
enum VmStatus vm_expected_value(const struct VmStatistic *s,
                                size_t n,
                                const char *gamma,
                                uint32_t t,
                                char **out);

/*
 Expected values for `t = 0..=t_max` as doubles written to
 `values[0..=t_max]`. Use [`vm_expected_value`] for exact results.

 # Safety
 `values` must have room for `t_max + 1` doubles.
 */
enum VmStatus vm_expected_series_f64(const struct VmStatistic *s,
                                     size_t n,
                                     const char *gamma,
                                     uint32_t t_max,
                                     double *values);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VINCMEAN_H */
