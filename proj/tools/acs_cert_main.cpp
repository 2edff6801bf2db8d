// acs-cert: command-line front end for the ACS negativity certificates.
// Parses flags, drives the C API, prints one certificate (text or JSON), and
// exits 0 for certified-negative/nonpositive, 2 for a positive witness,
// 3 when no conclusion was reached, 1 on usage errors.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "acscert.h"

namespace {

int fail(acs_status status) {
    std::fprintf(stderr, "acs-cert: %s\n", acs_last_error());
    (void)status;
    return 1;
}

int print_certificate(acs_certificate* cert, bool json) {
    std::fputs(json ? acs_certificate_json(cert) : acs_certificate_text(cert), stdout);
    const int code = acs_verdict_exit_code(acs_certificate_verdict(cert));
    acs_certificate_free(cert);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACS negativity certificates for isoparametric hypersurfaces, focal "
                 "manifolds, FKM families, and equivariant group/Grassmannian embeddings"};
    app.set_version_flag("--version", std::string(acs_version()));
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit the certificate as JSON instead of text");

    acs_options opt;
    acs_options_init(&opt);

    // isoparametric
    auto* iso = app.add_subcommand("isoparametric",
                                   "minimal isoparametric hypersurface (or its focal manifold) "
                                   "with multiplicities (m1, m2)");
    int m1 = 0, m2 = 0;
    bool focal = false, oracle = false;
    iso->add_option("--m1", m1, "smaller multiplicity")->required();
    iso->add_option("--m2", m2, "larger multiplicity")->required();
    iso->add_flag("--focal", focal, "certify the codimension-(1+m1) focal manifold");
    iso->add_flag("--oracle", oracle, "cross-check the QP against the brute-force grid");
    iso->add_option("--grid-step", opt.grid_step, "grid resolution for --oracle (default 0.01)");

    // group
    auto* group = app.add_subcommand("group", "SU(n) or Sp(n) with the Killing metric");
    std::string kind;
    int group_n = 0;
    group->add_option("--kind", kind, "su or sp")->required()->check(CLI::IsMember({"su", "sp"}));
    group->add_option("--n", group_n, "matrix size")->required();
    group->add_option("--samples", opt.samples, "sampling sweep size (default 10000, 0 = off)");
    group->add_option("--seed", opt.seed, "sweep seed (default 0)");

    // grassmannian
    auto* grass = app.add_subcommand("grassmannian", "quaternionic Grassmannian of d-planes in H^n");
    int gr_d = 0, gr_n = 0;
    grass->add_option("--d", gr_d, "plane dimension")->required();
    grass->add_option("--n", gr_n, "ambient quaternionic dimension")->required();
    grass->add_option("--samples", opt.samples, "sampling sweep size (default 10000, 0 = off)");
    grass->add_option("--seed", opt.seed, "sweep seed (default 0)");
    bool strict_trace = false;
    grass->add_flag("--strict-trace", strict_trace,
                    "enforce the full quaternionic trace orthogonality when sampling");

    // catalog
    auto* catalog = app.add_subcommand(
        "catalog", "example catalog; bare = summary table, --family = one certificate");
    std::string family;
    int cat_k = 0, cat_m = 0;
    bool cat_focal = false;
    catalog->add_option("--family", family,
                        "homogeneous-real | homogeneous-complex | homogeneous-quaternionic | "
                        "e6 | fkm");
    catalog->add_option("--k", cat_k, "family parameter k");
    catalog->add_option("--m", cat_m, "FKM parameter m");
    catalog->add_flag("--focal", cat_focal, "certify the focal leaf");

    // clifford
    auto* clifford = app.add_subcommand(
        "clifford", "construct and verify a Clifford system, certify its FKM focal leaf");
    int cl_m = 0, cl_k = 0;
    clifford->add_option("--m", cl_m, "number of involutions minus one")->required();
    clifford->add_option("--k", cl_k, "multiple of the irreducible module")->required();

    // constants
    auto* constants =
        app.add_subcommand("constants", "index-bound constants for an ambient dimension");
    long long dim = 0;
    constants->add_option("--dim", dim, "ambient Euclidean dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    opt.with_grid_oracle = oracle ? 1 : 0;
    opt.strict_trace = strict_trace ? 1 : 0;

    acs_certificate* cert = nullptr;
    acs_status status = ACS_OK;

    if (iso->parsed()) {
        status = acs_verify_isoparametric(m1, m2, focal ? 1 : 0, &opt, &cert);
    } else if (group->parsed()) {
        status = acs_verify_group(kind.c_str(), group_n, &opt, &cert);
    } else if (grass->parsed()) {
        status = acs_verify_grassmannian(gr_d, gr_n, &opt, &cert);
    } else if (catalog->parsed()) {
        if (family.empty()) {
            char* listing = nullptr;
            status = acs_catalog_listing(nullptr, json ? 1 : 0, &listing);
            if (status != ACS_OK) return fail(status);
            std::fputs(listing, stdout);
            acs_string_free(listing);
            return 0;
        }
        status = acs_verify_catalog_entry(family.c_str(), cat_k, cat_m, cat_focal ? 1 : 0, &opt,
                                          &cert);
    } else if (clifford->parsed()) {
        status = acs_verify_clifford(cl_m, cl_k, &opt, &cert);
    } else if (constants->parsed()) {
        status = acs_index_constants(dim, &cert);
    }

    if (status != ACS_OK) return fail(status);
    return print_certificate(cert, json);
}
