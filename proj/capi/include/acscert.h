/* acscert — C API for the ACS negativity certificate library.
 *
 * All functions that can fail return acs_status_t; on failure the thread-local
 * message from acs_last_error() describes the problem. Certificates are opaque
 * handles owned by the caller and released with acs_certificate_free().
 * Strings returned by acs_certificate_json/text stay valid until the handle is
 * freed; strings returned by the catalog listing are released with
 * acs_string_free().
 */

#ifndef ACSCERT_H
#define ACSCERT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct acs_certificate acs_certificate;

typedef enum acs_status {
    ACS_OK = 0,
    ACS_ERR_INVALID_ARGUMENT = 1,
    ACS_ERR_DOMAIN = 2,
    ACS_ERR_NUMERICAL = 3,
    ACS_ERR_INTERNAL = 4
} acs_status;

typedef enum acs_verdict {
    ACS_VERDICT_CERTIFIED_NEGATIVE = 0,
    ACS_VERDICT_CERTIFIED_NONPOSITIVE = 1,
    ACS_VERDICT_POSITIVE_WITNESS_FOUND = 2,
    ACS_VERDICT_INCONCLUSIVE = 3,
    ACS_VERDICT_UPPER_BOUND_ONLY = 4
} acs_verdict;

typedef struct acs_options {
    uint64_t seed;            /* PRNG seed for sampling sweeps */
    long long samples;        /* sweep size; 0 disables sampling */
    int with_grid_oracle;     /* cross-check the QP against the brute-force grid */
    double grid_step;         /* grid resolution for the oracle */
    int threads;              /* 0 = honor ACS_CERT_THREADS / hardware */
    int strict_trace;         /* enforce the full quaternionic trace constraint */
} acs_options;

/* Fills defaults: seed 0, samples 10000, oracle off, grid_step 0.01. */
void acs_options_init(acs_options* opt);

/* Verification runs. A null options pointer means defaults. */
acs_status acs_verify_isoparametric(int m1, int m2, int focal, const acs_options* opt,
                                    acs_certificate** out);
acs_status acs_verify_group(const char* kind /* "su" | "sp" */, int n, const acs_options* opt,
                            acs_certificate** out);
acs_status acs_verify_grassmannian(int d, int n, const acs_options* opt, acs_certificate** out);
/* family: homogeneous-real | homogeneous-complex | homogeneous-quaternionic |
 * e6 | fkm. k is required for homogeneous families, (m, k) for fkm. */
acs_status acs_verify_catalog_entry(const char* family, int k, int m, int focal,
                                    const acs_options* opt, acs_certificate** out);
acs_status acs_verify_clifford(int m, int k, const acs_options* opt, acs_certificate** out);
acs_status acs_index_constants(long long dim, acs_certificate** out);

/* Accessors. */
const char* acs_certificate_json(const acs_certificate* cert);
const char* acs_certificate_text(const acs_certificate* cert);
acs_verdict acs_certificate_verdict(const acs_certificate* cert);
/* 0 certified-negative/nonpositive, 2 positive witness, 3 no conclusion. */
int acs_verdict_exit_code(acs_verdict verdict);
void acs_certificate_free(acs_certificate* cert);

/* Catalog summary over the built-in parameter ranges; family may be null or a
 * family tag filter. format: 0 = text, 1 = JSON. */
acs_status acs_catalog_listing(const char* family, int format, char** out);
void acs_string_free(char* s);

/* Thread-local message for the most recent failure in this thread. */
const char* acs_last_error(void);

const char* acs_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ACSCERT_H */
