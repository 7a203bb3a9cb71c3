#pragma once

// Prefix-run lemmas replayed on concrete sequences, and machine-checkable
// nonexistence certificates for odd lengths n > 13.
//
// A certificate holds one record per odd prefix run p in [3, n]. Each record
// carries the arithmetic that contradicts the existence of a Barker sequence
// of length n = u p + r whose leading run of +1 entries has length exactly p.
// Even p and p = 1 are excluded globally (see kEvenPExclusion).

#include "barker/newton.hpp"
#include "barker/seqcore.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace barker::cert {

// Length of the leading run of entries equal to a_1.
std::size_t prefix_run(const LittlewoodSeq& seq);

struct StarSwapResult {
    LittlewoodSeq seq;
    bool swap_applied = false;
};

// Negates to a_1 = +1, then reverses (and renormalizes) if the leading run is
// shorter than 3. Throws std::domain_error for even n or if neither
// orientation has a run >= 3.
StarSwapResult star_swap_normalize(const LittlewoodSeq& seq);

struct BlockCheckReport {
    std::size_t p = 0;
    std::size_t bound = 0;  // n - p - 1
    bool swap_applied = false;
    std::optional<std::pair<std::size_t, std::size_t>> violation;  // 1-based (i, i+1)
    bool ok() const noexcept { return !violation.has_value(); }
};

// Within each block {u'p+1, ..., u'p+p} cut at n-p-1, all entries agree.
BlockCheckReport lemma3_block_check(const LittlewoodSeq& seq);

struct ResidueStep {
    std::size_t mu = 0;          // even, mu + 1 <= 2m - 1 - p
    bool divisible_case = false; // mu = vp - 1
    BigInt s_mu;
    BigInt s_shifted;            // s_{mu+p+1}
    std::uint64_t relation_residue = 0;  // s_{mu+p+1} - 2 s_{mu+1} + s_mu mod p
    bool ok = false;
};

struct ResidueReplayReport {
    std::size_t p = 0;
    long range_end = 0;  // 2m - 1 - p, may be <= 0 (vacuous)
    bool swap_applied = false;
    std::vector<std::uint64_t> residues;  // s_mu mod p, mu = 1..range_end
    std::vector<ResidueStep> steps;
    bool residues_ok = true;
    bool steps_ok = true;
    bool ok() const noexcept { return residues_ok && steps_ok; }
};

ResidueReplayReport lemma12_residue_replay(const LittlewoodSeq& seq);

enum class CaseId { EvenPReject, Case1, Case2, Case3, Case4, Case5, Residual };

std::string_view case_tag(CaseId id);
std::optional<CaseId> case_from_tag(std::string_view tag);

// CASE1-3: the lower triple sits in one p-block below n - p - 1, so
// its entries agree. The upper triple mirrors it under the skew relation,
// which makes consecutive upper entries differ; `pair` is a consecutive upper
// pair inside one block below the bound, where they must agree instead.
struct IndexWitness {
    std::int64_t m = 0;
    std::array<std::int64_t, 3> lower{};
    std::array<std::int64_t, 3> upper{};
    std::int64_t bound = 0;
    std::int64_t lower_block = 0;
    std::array<std::int64_t, 2> pair{};
    std::int64_t pair_block = 0;
    std::optional<std::int64_t> lower_value;  // CASE3: -1

    bool operator==(const IndexWitness&) const = default;
};

// CASE4: lhs = 2up + 5 >= 2n - 1 >= p^2, quadratic = p^2 - 4p - 5 > 0.
// CASE5: lhs = 4p - 3 >= 2n - 1 >= (p-1)^2, quadratic = p^2 - 6p + 4 > 0.
struct InequalityWitness {
    std::int64_t lhs = 0;
    std::int64_t two_n_minus_1 = 0;
    std::int64_t quadratic = 0;
    std::string note;  // CASE4 only

    bool operator==(const InequalityWitness&) const = default;
};

struct ResidualWitness {
    std::int64_t max_n = 13;
    std::int64_t up_plus_r = 0;

    bool operator==(const ResidualWitness&) const = default;
};

using Witness = std::variant<IndexWitness, InequalityWitness, ResidualWitness>;

struct CaseRecord {
    std::int64_t p = 0;
    std::int64_t u = 0;
    std::int64_t r = 0;
    CaseId case_id = CaseId::Residual;
    Witness witness;

    bool operator==(const CaseRecord&) const = default;
};

inline constexpr std::string_view kEvenPExclusion =
    "a_k a_{k+1} = a_{2k} a_{2k+1} (k = 1..m-1) forces the leading run p of +1 entries to be odd; "
    "p = 1 is mapped to p >= 3 by passing to the reciprocal polynomial P*";
inline constexpr std::string_view kConclusion = "no Barker sequence of this length exists";
inline constexpr std::string_view kCase4Note =
    "P(1) >= p - 4 >= 3 gives Q(1) >= 9, hence m is even and P(1) >= p";

struct NonexistenceCertificate {
    std::int64_t n = 0;
    std::string even_p_exclusion;
    std::vector<CaseRecord> records;
    std::string conclusion;

    bool operator==(const NonexistenceCertificate&) const = default;
};

// n > 13 odd, p odd in [3, n].
CaseRecord case_classify(std::int64_t n, std::int64_t p);

NonexistenceCertificate nonexistence_certificate(std::int64_t n);

// Recomputes everything from n and p; never trusts stored fields.
bool verify_certificate(const NonexistenceCertificate& cert);

// Explains the first failure, empty if the certificate verifies.
std::string certificate_diagnostic(const NonexistenceCertificate& cert);

std::string to_json(const NonexistenceCertificate& cert, int indent = -1);
// Throws std::invalid_argument on structurally malformed input.
NonexistenceCertificate certificate_from_json(std::string_view text);

struct RangeSummaryRow {
    std::int64_t n = 0;
    std::size_t records = 0;
    bool valid = false;
};

// Generates and verifies every odd n in [lo, hi] (lo > 13), fanned out over
// workers; rows are ordered by n.
std::vector<RangeSummaryRow> certify_range(std::int64_t lo, std::int64_t hi, int workers = 0);

}  // namespace barker::cert
