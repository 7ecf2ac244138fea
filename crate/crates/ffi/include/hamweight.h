/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef HAMWEIGHT_H
#define HAMWEIGHT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HwStatus {
  HW_STATUS_OK = 0,
  HW_STATUS_NULL_POINTER = 1,
  HW_STATUS_INVALID_ARGUMENT = 2,
  // `gcd(m, q-1) != 1` for an operation that requires it.
  HW_STATUS_GCD_PRECONDITION = 3,
  // A work bound or size guard was exceeded.
  HW_STATUS_WORK_BOUND = 4,
  // An exactness check inside the computation failed.
  HW_STATUS_ARITHMETIC = 5,
  // Value does not fit the requested integer type.
  HW_STATUS_OVERFLOW = 6,
  HW_STATUS_PANIC = 7,
} HwStatus;

// Weight distribution of a linear code.
typedef struct HwDistribution HwDistribution;

// Field tower `F_p ⊂ F_q ⊂ F_{q^m}`.
typedef struct HwTower HwTower;

typedef struct HwTowerInfo {
  uint64_t p;
  uint32_t r;
  uint32_t m;
  uint64_t q;
  // Number of elements of the big field.
  uint64_t size;
  // `(q^m - 1)/(q - 1)`.
  uint64_t n;
} HwTowerInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next failing call on the same thread; do not free.
const char *hw_last_error_message(void);

void hw_string_free(char *s);

// Tower with `q = p^r` and big field `F_{q^m}`.
enum HwStatus hw_tower_new(uint64_t p, uint32_t r, uint32_t m, struct HwTower **out);

// Tower for the code `H(m, q)`, `q` a prime power.
enum HwStatus hw_tower_for_code(uint64_t q, uint32_t m, struct HwTower **out);

void hw_tower_free(struct HwTower *t);

enum HwStatus hw_tower_info(const struct HwTower *t, struct HwTowerInfo *out);

// Packed element `gamma^e`. Elements are base-`p` integers whose least
// significant digit is the constant coefficient.
enum HwStatus hw_tower_gamma_pow(const struct HwTower *t, uint64_t e, uint32_t *out);

enum HwStatus hw_tower_add(const struct HwTower *t, uint32_t a, uint32_t b, uint32_t *out);

enum HwStatus hw_tower_mul(const struct HwTower *t, uint32_t a, uint32_t b, uint32_t *out);

enum HwStatus hw_tower_inv(const struct HwTower *t, uint32_t a, uint32_t *out);

// Relative trace `F_{q^m} → F_q`.
enum HwStatus hw_tower_trace(const struct HwTower *t, uint32_t a, uint32_t *out);

// Norm `F_{q^m}^* → F_q^*`.
enum HwStatus hw_tower_norm(const struct HwTower *t, uint32_t a, uint32_t *out);

// Distribution of `H(m, q)` from the power-moment recursion with default limits.
enum HwStatus hw_weights_recursive(uint64_t q, uint32_t m, struct HwDistribution **out);

// As [`hw_weights_recursive`] with an explicit length limit; `ignore_gcd`
// runs outside the coprime case and the result is then unverified.
enum HwStatus hw_weights_recursive_ex(uint64_t q,
                                      uint32_t m,
                                      uint64_t max_n,
                                      bool ignore_gcd,
                                      struct HwDistribution **out);

// Distribution of the binary Hamming code of redundancy `m` from the three-term recurrence.
enum HwStatus hw_weights_binary(uint32_t m, struct HwDistribution **out);

// Distribution of the dual of `H(m, q)` by enumerating the trace code.
// `guard` caps the number of codewords visited; 0 means the default.
enum HwStatus hw_dual_distribution(uint64_t q,
                                   uint32_t m,
                                   uint64_t guard,
                                   struct HwDistribution **out);

// Distribution of the dual code.
enum HwStatus hw_macwilliams(const struct HwDistribution *d, struct HwDistribution **out);

void hw_distribution_free(struct HwDistribution *d);

// Code length `n`; the distribution has `n + 1` entries. 0 for a null handle.
size_t hw_distribution_length(const struct HwDistribution *d);

// Code dimension `k`. 0 for a null handle.
size_t hw_distribution_dimension(const struct HwDistribution *d);

// Count of codewords of the given weight as a decimal string.
enum HwStatus hw_distribution_count(const struct HwDistribution *d, size_t weight, char **out);

// Count of codewords of the given weight; `HW_STATUS_OVERFLOW` if it exceeds 64 bits.
enum HwStatus hw_distribution_count_u64(const struct HwDistribution *d,
                                        size_t weight,
                                        uint64_t *out);

enum HwStatus hw_distribution_equal(const struct HwDistribution *a,
                                    const struct HwDistribution *b,
                                    bool *out);

// `C_h` of `H(m, q)` from the closed forms, `3 <= h <= 10`, as a decimal string.
enum HwStatus hw_closed_form_count(uint32_t h, uint64_t q, uint32_t m, char **out);

// Runs a verification suite by name (`"all"` or null for every applicable
// suite) and returns the reports as a JSON array. `work_bound` of 0 means the
// default. `passed` is set when every report passed and none was skipped.
enum HwStatus hw_verify_json(uint64_t q,
                             uint32_t m,
                             const char *suite,
                             uint64_t work_bound,
                             char **out,
                             bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAMWEIGHT_H */
