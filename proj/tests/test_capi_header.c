/* Compiled as C99: proves the public header and the exported surface are
 * consumable without a C++ toolchain. */

#include <stdio.h>
#include <string.h>

#include "acscert.h"

static int failures = 0;

static void check(int ok, const char* what) {
    if (!ok) {
        ++failures;
        fprintf(stderr, "FAIL: %s\n", what);
    }
}

int main(void) {
    acs_options opt;
    acs_options_init(&opt);
    check(opt.samples == 10000, "default sample count");
    opt.samples = 10;
    opt.threads = 1;

    acs_certificate* cert = NULL;
    check(acs_verify_isoparametric(6, 9, 0, &opt, &cert) == ACS_OK, "isoparametric run");
    check(cert != NULL, "certificate handle");
    check(acs_certificate_verdict(cert) == ACS_VERDICT_CERTIFIED_NEGATIVE, "verdict");
    check(acs_verdict_exit_code(acs_certificate_verdict(cert)) == 0, "exit code");
    check(strstr(acs_certificate_json(cert), "\"family\"") != NULL, "json payload");
    acs_certificate_free(cert);
    cert = NULL;

    check(acs_verify_isoparametric(0, 0, 0, &opt, &cert) == ACS_ERR_INVALID_ARGUMENT,
          "invalid argument status");
    check(strlen(acs_last_error()) > 0, "error message");

    check(acs_index_constants(4, &cert) == ACS_OK, "constants run");
    check(strstr(acs_certificate_json(cert), "1/91") != NULL, "robust constant");
    acs_certificate_free(cert);

    char* listing = NULL;
    check(acs_catalog_listing("fkm", 1, &listing) == ACS_OK, "catalog listing");
    check(listing != NULL && strstr(listing, "fkm") != NULL, "listing content");
    acs_string_free(listing);

    check(strlen(acs_version()) > 0, "version string");

    if (failures == 0) {
        printf("c header consumption: all checks passed\n");
        return 0;
    }
    return 1;
}
