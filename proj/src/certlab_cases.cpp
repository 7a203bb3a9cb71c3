#include "barker/certlab.hpp"

#include <omp.h>

#include <stdexcept>

namespace barker::cert {

namespace {

// Keeps p^2 and 2n well inside int64.
constexpr std::int64_t kMaxCertificateN = std::int64_t{1} << 31;

std::int64_t block_of(std::int64_t i, std::int64_t p) { return (i - 1) / p; }

IndexWitness index_witness(std::int64_t n, std::int64_t p, std::int64_t first_lower) {
    IndexWitness w;
    w.m = (n - 1) / 2;
    w.bound = n - p - 1;
    for (std::size_t i = 0; i < 3; ++i) {
        w.lower[i] = first_lower + static_cast<std::int64_t>(i);
        w.upper[i] = n + 1 - w.lower[i];
    }
    w.lower_block = block_of(w.lower[0], p);
    for (std::size_t i = 0; i + 1 < 3; ++i) {
        if (block_of(w.upper[i], p) == block_of(w.upper[i + 1], p)) {
            w.pair = {w.upper[i], w.upper[i + 1]};
            w.pair_block = block_of(w.upper[i], p);
            return w;
        }
    }
    throw std::logic_error("index_witness: no consecutive upper pair inside one block");
}

}  // namespace

std::string_view case_tag(CaseId id) {
    switch (id) {
        case CaseId::EvenPReject: return "EVEN_P_REJECT";
        case CaseId::Case1: return "CASE1";
        case CaseId::Case2: return "CASE2";
        case CaseId::Case3: return "CASE3";
        case CaseId::Case4: return "CASE4";
        case CaseId::Case5: return "CASE5";
        case CaseId::Residual: return "RESIDUAL";
    }
    return "?";
}

std::optional<CaseId> case_from_tag(std::string_view tag) {
    for (auto id : {CaseId::EvenPReject, CaseId::Case1, CaseId::Case2, CaseId::Case3, CaseId::Case4,
                    CaseId::Case5, CaseId::Residual}) {
        if (case_tag(id) == tag) return id;
    }
    return std::nullopt;
}

CaseRecord case_classify(std::int64_t n, std::int64_t p) {
    if (n <= 13) throw std::domain_error("case_classify: n = " + std::to_string(n) + " is out of theorem scope (n <= 13)");
    if (n % 2 == 0) throw std::domain_error("case_classify: n must be odd");
    if (n > kMaxCertificateN) throw std::domain_error("case_classify: n too large");
    if (p % 2 == 0) throw std::invalid_argument("case_classify: even p is excluded at certificate level");
    if (p < 3 || p > n) throw std::invalid_argument("case_classify: p outside [3, n]");

    CaseRecord rec;
    rec.p = p;
    rec.u = n / p;
    rec.r = n % p;
    const auto u = rec.u;
    const auto r = rec.r;

    if (u >= 3 && p >= 5) {
        rec.case_id = CaseId::Case1;
        rec.witness = index_witness(n, p, p + 2);
    } else if (u >= 3 && p == 3) {
        rec.case_id = CaseId::Case2;
        rec.witness = index_witness(n, p, p + 4);
    } else if (u == 2 && p >= 5 && r >= 4) {
        rec.case_id = CaseId::Case3;
        auto w = index_witness(n, p, p + 2);
        w.lower_value = -1;
        rec.witness = w;
    } else if (u == 2 && p >= 7 && r <= 3) {
        rec.case_id = CaseId::Case4;
        rec.witness = InequalityWitness{2 * u * p + 5, 2 * n - 1, p * p - 4 * p - 5, std::string(kCase4Note)};
    } else if (u == 1 && p >= 7) {
        rec.case_id = CaseId::Case5;
        rec.witness = InequalityWitness{4 * p - 3, 2 * n - 1, p * p - 6 * p + 4, {}};
    } else {
        rec.case_id = CaseId::Residual;
        rec.witness = ResidualWitness{13, u * p + r};
    }
    return rec;
}

NonexistenceCertificate nonexistence_certificate(std::int64_t n) {
    if (n % 2 == 0) throw std::domain_error("nonexistence_certificate: even-length case not covered");
    if (n <= 13) throw std::domain_error("nonexistence_certificate: n = " + std::to_string(n) + " is out of theorem scope (n <= 13)");
    NonexistenceCertificate cert;
    cert.n = n;
    cert.even_p_exclusion = std::string(kEvenPExclusion);
    cert.conclusion = std::string(kConclusion);
    cert.records.reserve(static_cast<std::size_t>((n - 1) / 2));
    for (std::int64_t p = 3; p <= n; p += 2) cert.records.push_back(case_classify(n, p));
    return cert;
}

std::vector<RangeSummaryRow> certify_range(std::int64_t lo, std::int64_t hi, int workers) {
    if (lo > hi) throw std::invalid_argument("certify_range: empty range");
    if (lo % 2 == 0) ++lo;
    if (lo <= 13) throw std::domain_error("certify_range: range must start above 13");
    const std::int64_t count = hi >= lo ? (hi - lo) / 2 + 1 : 0;
    std::vector<RangeSummaryRow> rows(static_cast<std::size_t>(count));
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t n = lo + 2 * i;
        const auto cert = nonexistence_certificate(n);
        rows[static_cast<std::size_t>(i)] = {n, cert.records.size(), verify_certificate(cert)};
    }
    return rows;
}

}  // namespace barker::cert
