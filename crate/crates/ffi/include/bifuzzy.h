#ifndef BIFUZZY_H
#define BIFUZZY_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BfzFamily {
  BFZ_FAMILY_CHOQUET = 0,
  BFZ_FAMILY_SHILKRET = 1,
  BFZ_FAMILY_SHILKRET_NEGATIVE = 2,
  BFZ_FAMILY_SUGENO = 3,
  BFZ_FAMILY_BIPOLAR_CHOQUET = 4,
  BFZ_FAMILY_BIPOLAR_SHILKRET = 5,
  BFZ_FAMILY_BIPOLAR_SUGENO = 6,
} BfzFamily;

typedef enum BfzStatus {
  BFZ_STATUS_OK = 0,
  BFZ_STATUS_NULL_POINTER = 1,
  BFZ_STATUS_INVALID_ARGUMENT = 2,
  BFZ_STATUS_PARSE = 3,
  BFZ_STATUS_INVALID = 4,
  BFZ_STATUS_DIMENSION = 5,
  BFZ_STATUS_SCALE = 6,
  BFZ_STATUS_LINK = 7,
  BFZ_STATUS_PANIC = 8,
} BfzStatus;

typedef enum BfzVariant {
  BFZ_VARIANT_NEUTRAL = 0,
  BFZ_VARIANT_RIGHT = 1,
  BFZ_VARIANT_LEFT = 2,
} BfzVariant;

/**
 * Opaque bi-capacity on the disjoint pairs of `{1, ..., n}`.
 */
typedef struct BfzBiCapacity BfzBiCapacity;

/**
 * Opaque capacity on the subsets of `{1, ..., n}`.
 */
typedef struct BfzCapacity BfzCapacity;

/**
 * Outcome of a characterization suite run.
 */
typedef struct BfzSuiteResult {
  bool passed;
  bool roundtrip_exact;
  /**
   * Number of axioms in the bundle.
   */
  size_t axioms;
  /**
   * Number of axioms with at least one violation.
   */
  size_t failed_axioms;
  uint64_t violations;
} BfzSuiteResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL after a success.
 *
 * The pointer stays valid until the next `bfz_*` call on the same thread.
 */
const char *bfz_last_error(void);

/**
 * Build a capacity from `len = 2^n` values indexed by coalition bit mask
 * (bit `i - 1` set when criterion `i` belongs to the coalition).
 *
 * # Safety
 * `table` must point to `len` readable doubles and `out` must be writable.
 */
enum BfzStatus bfz_capacity_new(size_t n,
                                const double *table,
                                size_t len,
                                struct BfzCapacity **out);

/**
 * Parse a capacity from carrier JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` must be writable.
 */
enum BfzStatus bfz_capacity_from_json(const char *json, struct BfzCapacity **out);

/**
 * Number of criteria, 0 for NULL.
 *
 * # Safety
 * `mu` must be NULL or a live handle.
 */
size_t bfz_capacity_n(const struct BfzCapacity *mu);

/**
 * Value at the coalition with bit mask `mask`.
 *
 * # Safety
 * `mu` must be a live handle and `out` writable.
 */
enum BfzStatus bfz_capacity_value(const struct BfzCapacity *mu, uint32_t mask, double *out);

/**
 * # Safety
 * `mu` must be NULL or a handle not yet freed.
 */
void bfz_capacity_free(struct BfzCapacity *mu);

/**
 * Build a bi-capacity from `len = 3^n` values in ternary order: digit
 * `i - 1` of the index is 1 when criterion `i` is positive, 2 when negative.
 *
 * # Safety
 * `table` must point to `len` readable doubles and `out` must be writable.
 */
enum BfzStatus bfz_bicapacity_new(size_t n,
                                  const double *table,
                                  size_t len,
                                  struct BfzBiCapacity **out);

/**
 * Parse a bi-capacity from carrier JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` must be writable.
 */
enum BfzStatus bfz_bicapacity_from_json(const char *json, struct BfzBiCapacity **out);

/**
 * Number of criteria, 0 for NULL.
 *
 * # Safety
 * `mb` must be NULL or a live handle.
 */
size_t bfz_bicapacity_n(const struct BfzBiCapacity *mb);

/**
 * Value at the pair with positive mask `pos` and negative mask `neg`.
 *
 * # Safety
 * `mb` must be a live handle and `out` writable.
 */
enum BfzStatus bfz_bicapacity_value(const struct BfzBiCapacity *mb,
                                    uint32_t pos,
                                    uint32_t neg,
                                    double *out);

/**
 * # Safety
 * `mb` must be NULL or a handle not yet freed.
 */
void bfz_bicapacity_free(struct BfzBiCapacity *mb);

/**
 * Choquet integral of `x` (any finite reals).
 *
 * # Safety
 * `mu` must be a live handle, `x` must point to `len` doubles, `out` writable.
 */
enum BfzStatus bfz_choquet(const struct BfzCapacity *mu, const double *x, size_t len, double *out);

/**
 * Shilkret integral of `x`.
 *
 * # Safety
 * As for [`bfz_choquet`].
 */
enum BfzStatus bfz_shilkret(const struct BfzCapacity *mu, const double *x, size_t len, double *out);

/**
 * Negative Shilkret integral; every score must be `<= 0`.
 *
 * # Safety
 * As for [`bfz_choquet`].
 */
enum BfzStatus bfz_shilkret_negative(const struct BfzCapacity *mu,
                                     const double *x,
                                     size_t len,
                                     double *out);

/**
 * Symmetric Shilkret integral of `x`.
 *
 * # Safety
 * As for [`bfz_choquet`].
 */
enum BfzStatus bfz_shilkret_symmetric(const struct BfzCapacity *mu,
                                      const double *x,
                                      size_t len,
                                      double *out);

/**
 * Sugeno integral of `x` in `[0, 1]^n`.
 *
 * # Safety
 * As for [`bfz_choquet`].
 */
enum BfzStatus bfz_sugeno(const struct BfzCapacity *mu, const double *x, size_t len, double *out);

/**
 * Negative Sugeno integral of `x` in `[-1, 0]^n`.
 *
 * # Safety
 * As for [`bfz_choquet`].
 */
enum BfzStatus bfz_sugeno_negative(const struct BfzCapacity *mu,
                                   const double *x,
                                   size_t len,
                                   double *out);

/**
 * Symmetric Sugeno integral of `x` in `[-1, 1]^n`.
 *
 * # Safety
 * As for [`bfz_choquet`].
 */
enum BfzStatus bfz_sugeno_symmetric(const struct BfzCapacity *mu,
                                    const double *x,
                                    size_t len,
                                    double *out);

/**
 * Bipolar Choquet integral of `x` in `[-1, 1]^n`.
 *
 * # Safety
 * `mb` must be a live handle, `x` must point to `len` doubles, `out` writable.
 */
enum BfzStatus bfz_bipolar_choquet(const struct BfzBiCapacity *mb,
                                   const double *x,
                                   size_t len,
                                   double *out);

/**
 * Bipolar Shilkret integral of `x` in `[-1, 1]^n`.
 *
 * # Safety
 * As for [`bfz_bipolar_choquet`].
 */
enum BfzStatus bfz_bipolar_shilkret(const struct BfzBiCapacity *mb,
                                    const double *x,
                                    size_t len,
                                    enum BfzVariant variant,
                                    double *out);

/**
 * Bipolar Sugeno integral of `x` in `[-1, 1]^n`.
 *
 * # Safety
 * As for [`bfz_bipolar_choquet`].
 */
enum BfzStatus bfz_bipolar_sugeno(const struct BfzBiCapacity *mb,
                                  const double *x,
                                  size_t len,
                                  enum BfzVariant variant,
                                  double *out);

/**
 * Bipolar maximum of `len >= 1` finite reals.
 *
 * # Safety
 * `xs` must point to `len` doubles and `out` must be writable.
 */
enum BfzStatus bfz_bipolar_max(const double *xs, size_t len, enum BfzVariant variant, double *out);

/**
 * Run the characterization suite of a unipolar family on `mu`.
 * `variant` is ignored by families without one.
 *
 * # Safety
 * `mu` must be a live handle and `out` writable.
 */
enum BfzStatus bfz_capacity_suite(const struct BfzCapacity *mu,
                                  enum BfzFamily family,
                                  enum BfzVariant variant,
                                  uint64_t trials,
                                  uint64_t seed,
                                  double eps,
                                  struct BfzSuiteResult *out);

/**
 * Run the characterization suite of a bipolar family on `mb`.
 *
 * # Safety
 * `mb` must be a live handle and `out` writable.
 */
enum BfzStatus bfz_bicapacity_suite(const struct BfzBiCapacity *mb,
                                    enum BfzFamily family,
                                    enum BfzVariant variant,
                                    uint64_t trials,
                                    uint64_t seed,
                                    double eps,
                                    struct BfzSuiteResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIFUZZY_H */
