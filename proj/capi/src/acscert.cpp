#include "acscert.h"

#include <cstring>
#include <new>
#include <string>

#include "acs/error.hpp"
#include "acs/runner.hpp"
#include "acs/version.hpp"

struct acs_certificate {
    acs::AcsCertificate cert;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

acs::RunOptions convert(const acs_options* opt) {
    acs::RunOptions ro;
    if (opt) {
        ro.seed = opt->seed;
        ro.samples = opt->samples;
        ro.with_grid_oracle = opt->with_grid_oracle != 0;
        ro.grid_step = opt->grid_step;
        ro.threads = opt->threads;
        ro.strict_trace = opt->strict_trace != 0;
    }
    return ro;
}

acs_status finish(acs::AcsCertificate cert, acs_certificate** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return ACS_ERR_INVALID_ARGUMENT;
    }
    auto* handle = new (std::nothrow) acs_certificate;
    if (!handle) {
        g_last_error = "allocation failure";
        return ACS_ERR_INTERNAL;
    }
    handle->cert = std::move(cert);
    handle->json = acs::emit_json(handle->cert);
    handle->text = acs::emit_text(handle->cert);
    *out = handle;
    return ACS_OK;
}

template <class Fn>
acs_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const acs::InvalidArgument& e) {
        g_last_error = e.what();
        return ACS_ERR_INVALID_ARGUMENT;
    } catch (const acs::DomainError& e) {
        g_last_error = e.what();
        return ACS_ERR_DOMAIN;
    } catch (const acs::NumericalError& e) {
        g_last_error = e.what();
        return ACS_ERR_NUMERICAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ACS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return ACS_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

void acs_options_init(acs_options* opt) {
    if (!opt) return;
    opt->seed = 0;
    opt->samples = 10000;
    opt->with_grid_oracle = 0;
    opt->grid_step = 0.01;
    opt->threads = 0;
    opt->strict_trace = 0;
}

acs_status acs_verify_isoparametric(int m1, int m2, int focal, const acs_options* opt,
                                    acs_certificate** out) {
    return guarded([&] {
        return finish(acs::verify_isoparametric(m1, m2, focal != 0, convert(opt)), out);
    });
}

acs_status acs_verify_group(const char* kind, int n, const acs_options* opt,
                            acs_certificate** out) {
    return guarded([&]() -> acs_status {
        if (!kind) {
            g_last_error = "group kind must be \"su\" or \"sp\"";
            return ACS_ERR_INVALID_ARGUMENT;
        }
        acs::GroupKind gk;
        if (std::strcmp(kind, "su") == 0) gk = acs::GroupKind::SU;
        else if (std::strcmp(kind, "sp") == 0) gk = acs::GroupKind::Sp;
        else {
            g_last_error = "group kind must be \"su\" or \"sp\"";
            return ACS_ERR_INVALID_ARGUMENT;
        }
        return finish(acs::verify_group(gk, n, convert(opt)), out);
    });
}

acs_status acs_verify_grassmannian(int d, int n, const acs_options* opt, acs_certificate** out) {
    return guarded([&] { return finish(acs::verify_grassmannian(d, n, convert(opt)), out); });
}

acs_status acs_verify_catalog_entry(const char* family, int k, int m, int focal,
                                    const acs_options* opt, acs_certificate** out) {
    return guarded([&]() -> acs_status {
        if (!family) {
            g_last_error = "family tag required";
            return ACS_ERR_INVALID_ARGUMENT;
        }
        acs::ExampleFamily ef;
        const std::string tag(family);
        if (tag == "homogeneous-real") ef.kind = acs::FamilyKind::HomogeneousReal;
        else if (tag == "homogeneous-complex") ef.kind = acs::FamilyKind::HomogeneousComplex;
        else if (tag == "homogeneous-quaternionic")
            ef.kind = acs::FamilyKind::HomogeneousQuaternionic;
        else if (tag == "e6") ef.kind = acs::FamilyKind::E6Isolated;
        else if (tag == "fkm") ef.kind = acs::FamilyKind::Fkm;
        else {
            g_last_error = "unknown family tag: " + tag;
            return ACS_ERR_INVALID_ARGUMENT;
        }
        ef.k = k;
        ef.m = m;
        ef.leaf = focal != 0 ? acs::LeafKind::FocalMPlus : acs::LeafKind::RegularMinimal;
        return finish(acs::verify_catalog_entry(ef, convert(opt)), out);
    });
}

acs_status acs_verify_clifford(int m, int k, const acs_options* opt, acs_certificate** out) {
    return guarded([&] { return finish(acs::verify_clifford(m, k, convert(opt)), out); });
}

acs_status acs_index_constants(long long dim, acs_certificate** out) {
    return guarded([&] { return finish(acs::index_constants_certificate(dim), out); });
}

const char* acs_certificate_json(const acs_certificate* cert) {
    return cert ? cert->json.c_str() : nullptr;
}

const char* acs_certificate_text(const acs_certificate* cert) {
    return cert ? cert->text.c_str() : nullptr;
}

acs_verdict acs_certificate_verdict(const acs_certificate* cert) {
    if (!cert) return ACS_VERDICT_INCONCLUSIVE;
    switch (cert->cert.verdict) {
        case acs::Verdict::CertifiedNegative: return ACS_VERDICT_CERTIFIED_NEGATIVE;
        case acs::Verdict::CertifiedNonpositive: return ACS_VERDICT_CERTIFIED_NONPOSITIVE;
        case acs::Verdict::PositiveWitnessFound: return ACS_VERDICT_POSITIVE_WITNESS_FOUND;
        case acs::Verdict::Inconclusive: return ACS_VERDICT_INCONCLUSIVE;
        case acs::Verdict::UpperBoundOnly: return ACS_VERDICT_UPPER_BOUND_ONLY;
    }
    return ACS_VERDICT_INCONCLUSIVE;
}

int acs_verdict_exit_code(acs_verdict verdict) {
    switch (verdict) {
        case ACS_VERDICT_CERTIFIED_NEGATIVE:
        case ACS_VERDICT_CERTIFIED_NONPOSITIVE: return 0;
        case ACS_VERDICT_POSITIVE_WITNESS_FOUND: return 2;
        case ACS_VERDICT_INCONCLUSIVE:
        case ACS_VERDICT_UPPER_BOUND_ONLY: return 3;
    }
    return 1;
}

void acs_certificate_free(acs_certificate* cert) { delete cert; }

acs_status acs_catalog_listing(const char* family, int format, char** out) {
    return guarded([&]() -> acs_status {
        if (!out) {
            g_last_error = "null output pointer";
            return ACS_ERR_INVALID_ARGUMENT;
        }
        std::optional<std::string> filter;
        if (family && *family) filter = std::string(family);
        const std::string s = format == 1 ? acs::catalog_listing_json(filter)
                                          : acs::catalog_listing_text(filter);
        char* buf = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
        if (!buf) {
            g_last_error = "allocation failure";
            return ACS_ERR_INTERNAL;
        }
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *out = buf;
        return ACS_OK;
    });
}

void acs_string_free(char* s) { ::operator delete(s); }

const char* acs_last_error(void) { return g_last_error.c_str(); }

const char* acs_version(void) { return acs::version(); }

}  // extern "C"
