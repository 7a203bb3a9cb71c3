// Independent re-check of nonexistence certificates. Nothing here calls the
// classifier; every quantity is recomputed from n and p.

#include "barker/certlab.hpp"

#include <algorithm>
#include <sstream>

namespace barker::cert {

namespace {

constexpr std::int64_t kMaxVerifiableN = std::int64_t{1} << 31;

struct Failure {
    std::string message;
};

class Checker {
public:
    explicit Checker(std::int64_t n) : n_(n), m_((n - 1) / 2) {}

    std::optional<Failure> record(const CaseRecord& rec) const {
        const auto p = rec.p;
        auto fail = [p](const std::string& what) { return Failure{"p = " + std::to_string(p) + ": " + what}; };

        if (rec.u < 0 || rec.u > n_ || rec.r < 0 || rec.r >= p || rec.u * p + rec.r != n_) {
            return fail("n != u p + r with 0 <= r < p");
        }
        const CaseId expected = expected_case(p, rec.u, rec.r);
        if (rec.case_id != expected) {
            return fail("case is " + std::string(case_tag(rec.case_id)) + ", expected " +
                        std::string(case_tag(expected)));
        }
        switch (rec.case_id) {
            case CaseId::Case1:
            case CaseId::Case2:
            case CaseId::Case3: {
                const auto* w = std::get_if<IndexWitness>(&rec.witness);
                if (!w) return fail("index witness expected");
                return index_case(rec, *w, fail);
            }
            case CaseId::Case4:
            case CaseId::Case5: {
                const auto* w = std::get_if<InequalityWitness>(&rec.witness);
                if (!w) return fail("inequality witness expected");
                return inequality_case(rec, *w, fail);
            }
            case CaseId::Residual:
                return fail("residual class forces u p + r <= 13, contradicting n = " + std::to_string(n_));
            case CaseId::EvenPReject:
                return fail("even p cannot appear as a record");
        }
        return fail("unknown case");
    }

private:
    static CaseId expected_case(std::int64_t p, std::int64_t u, std::int64_t r) {
        if (u >= 3) return p == 3 ? CaseId::Case2 : CaseId::Case1;
        if (u == 2) {
            if (p >= 5 && r >= 4) return CaseId::Case3;
            if (p >= 7) return CaseId::Case4;
            return CaseId::Residual;
        }
        if (u == 1 && p >= 7) return CaseId::Case5;
        return CaseId::Residual;
    }

    template <class Fail>
    std::optional<Failure> index_case(const CaseRecord& rec, const IndexWitness& w, Fail fail) const {
        const auto p = rec.p;
        auto block = [p](std::int64_t i) { return (i - 1) / p; };
        const std::int64_t bound = n_ - p - 1;
        const std::int64_t first = rec.case_id == CaseId::Case2 ? p + 4 : p + 2;

        if (w.m != m_) return fail("m mismatch");
        if (w.bound != bound) return fail("bound != n - p - 1");
        for (std::size_t i = 0; i < 3; ++i) {
            if (w.lower[i] != first + static_cast<std::int64_t>(i)) return fail("lower triple mismatch");
            if (w.upper[i] != n_ + 1 - w.lower[i]) return fail("upper triple is not the mirror of the lower triple");
            if (w.lower[i] < 1 || w.lower[i] > bound) return fail("lower index outside [1, n - p - 1]");
            if (w.upper[i] < 1 || w.upper[i] > bound) return fail("upper index outside [1, n - p - 1]");
            if (block(w.lower[i]) != w.lower_block) return fail("lower triple not inside one block");
        }

        const bool wants_value = rec.case_id == CaseId::Case3;
        if (wants_value != w.lower_value.has_value()) return fail("lower value presence mismatch");
        if (wants_value) {
            // a_{p+1} = -1 by definition of p and shares the lower block.
            if (*w.lower_value != -1) return fail("lower value must be -1");
            if (block(p + 1) != w.lower_block || p + 1 > bound) return fail("a_{p+1} not in the lower block");
        }

        // First consecutive upper pair inside one block.
        std::optional<std::array<std::int64_t, 2>> expected_pair;
        for (std::size_t i = 0; i + 1 < 3 && !expected_pair; ++i) {
            if (block(w.upper[i]) == block(w.upper[i + 1])) expected_pair = {w.upper[i], w.upper[i + 1]};
        }
        if (!expected_pair || w.pair != *expected_pair) return fail("contradiction pair mismatch");
        if (w.pair[0] != w.pair[1] + 1) return fail("pair is not consecutive");
        if (block(w.pair[0]) != w.pair_block || block(w.pair[1]) != w.pair_block) {
            return fail("pair not inside one block");
        }
        // a_i = (-1)^{m + n - i} a_{n+1-i}; the two exponents must differ in parity
        // so that equal mirrors force a sign flip across the pair.
        const std::int64_t e0 = m_ + n_ - w.pair[0];
        const std::int64_t e1 = m_ + n_ - w.pair[1];
        if ((e0 + e1) % 2 == 0) return fail("skew relation does not flip the pair");
        return std::nullopt;
    }

    template <class Fail>
    std::optional<Failure> inequality_case(const CaseRecord& rec, const InequalityWitness& w, Fail fail) const {
        const auto p = rec.p;
        if (w.two_n_minus_1 != 2 * n_ - 1) return fail("2n - 1 mismatch");
        if (rec.case_id == CaseId::Case4) {
            if (w.lhs != 2 * rec.u * p + 5) return fail("lhs != 2up + 5");
            if (w.quadratic != p * p - 4 * p - 5) return fail("quadratic != p^2 - 4p - 5");
            if (w.note != kCase4Note) return fail("case 4 note mismatch");
        } else {
            if (w.lhs != 4 * p - 3) return fail("lhs != 4p - 3");
            if (w.lhs < 2 * (p + rec.r) - 1) return fail("4p - 3 < 2(p + r) - 1");
            if (w.quadratic != p * p - 6 * p + 4) return fail("quadratic != p^2 - 6p + 4");
            if (!w.note.empty()) return fail("unexpected note");
        }
        if (w.lhs < w.two_n_minus_1) return fail("upper bound below 2n - 1");
        if (w.quadratic <= 0) return fail("quadratic is not positive");
        return std::nullopt;
    }

    std::int64_t n_;
    std::int64_t m_;
};

std::optional<Failure> check(const NonexistenceCertificate& cert) {
    const auto n = cert.n;
    if (n <= 13) return Failure{"n <= 13 is out of theorem scope"};
    if (n % 2 == 0) return Failure{"n is even"};
    if (n > kMaxVerifiableN) return Failure{"n too large"};
    if (cert.even_p_exclusion != kEvenPExclusion) return Failure{"even-p exclusion text mismatch"};
    if (cert.conclusion != kConclusion) return Failure{"conclusion mismatch"};

    const auto expected_records = static_cast<std::size_t>((n - 1) / 2);
    if (cert.records.size() != expected_records) {
        return Failure{"expected " + std::to_string(expected_records) + " records, found " +
                       std::to_string(cert.records.size())};
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    const Checker checker(n);
    for (const auto& rec : cert.records) {
        if (rec.p < 3 || rec.p > n || rec.p % 2 == 0) return Failure{"record p = " + std::to_string(rec.p) + " outside odd [3, n]"};
        if (seen[static_cast<std::size_t>(rec.p)]) return Failure{"duplicate record p = " + std::to_string(rec.p)};
        seen[static_cast<std::size_t>(rec.p)] = true;
        if (auto f = checker.record(rec)) return f;
    }
    for (std::int64_t p = 3; p <= n; p += 2) {
        if (!seen[static_cast<std::size_t>(p)]) return Failure{"missing record p = " + std::to_string(p)};
    }
    return std::nullopt;
}

}  // namespace

bool verify_certificate(const NonexistenceCertificate& cert) { return !check(cert).has_value(); }

std::string certificate_diagnostic(const NonexistenceCertificate& cert) {
    auto f = check(cert);
    return f ? f->message : std::string{};
}

}  // namespace barker::cert
