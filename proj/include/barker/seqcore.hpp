#pragma once

// Exact +-1 sequences, aperiodic autocorrelation and the identities that hold
// for every sequence or for odd-length Barker sequences.
//
// Storage is 0-based. Every index that appears in a report or an error
// message is 1-based: a_1 is the first entry, c_k is the lag-k correlation.

#include <boost/rational.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace barker {

using Sign = std::int8_t;

class LittlewoodSeq {
public:
    // Throws std::invalid_argument if empty or any entry is not -1/+1.
    explicit LittlewoodSeq(std::vector<Sign> entries);

    std::size_t size() const noexcept { return entries_.size(); }

    // 1-based access, a_j for j in [1, n].
    Sign a(std::size_t j) const { return entries_.at(j - 1); }

    std::span<const Sign> entries() const noexcept { return entries_; }

    bool operator==(const LittlewoodSeq&) const = default;
    // Lexicographic with -1 < +1.
    auto operator<=>(const LittlewoodSeq& o) const { return entries_ <=> o.entries_; }

    LittlewoodSeq negated() const;
    LittlewoodSeq reversed() const;
    // a_j -> (-1)^j a_j
    LittlewoodSeq alternated() const;

    std::string to_string() const;  // "+" / "-" characters

private:
    std::vector<Sign> entries_;
};

class AutocorrProfile {
public:
    explicit AutocorrProfile(std::vector<std::int64_t> values);

    std::size_t length() const noexcept { return values_.size(); }
    std::int64_t c(std::size_t k) const { return values_.at(k); }
    std::span<const std::int64_t> values() const noexcept { return values_; }

    // max_{k>=1} |c_k|, 0 for n = 1.
    std::int64_t peak_sidelobe() const noexcept;

    std::string to_json() const;
    std::string to_csv() const;

    bool operator==(const AutocorrProfile&) const = default;

private:
    std::vector<std::int64_t> values_;
};

// Accepts "+-" sign strings, "10" binary strings (1 -> +1, 0 -> -1) or
// comma separated integers from {-1, 1}. Whitespace is ignored.
LittlewoodSeq parse_sequence(std::string_view text);

AutocorrProfile autocorrelation(const LittlewoodSeq& seq);

bool is_barker(const LittlewoodSeq& seq);

// prod_{j=1}^{n-k} a_j a_{j+k} == (-1)^{(n-k-c_k)/2}. Holds for all sequences.
bool parity_identity_check(const LittlewoodSeq& seq, std::size_t k);

// c_k + c_{n-k} == n (mod 4) for k = 1..n-1. Holds for all sequences, n >= 2.
bool mod4_fold_check(const LittlewoodSeq& seq);

struct LagCheck {
    std::size_t k;
    std::int64_t value;
    bool ok;
};

struct OddStructureReport {
    std::size_t m;
    std::vector<LagCheck> odd_lags;   // c_{2j-1}, expected 0 mod 4
    std::vector<LagCheck> even_lags;  // c_{2j},   expected (-1)^m
    bool ok;
};

// Requires odd n and a Barker sequence.
OddStructureReport barker_odd_structure(const LittlewoodSeq& seq);

// a_{k+1} a_{n-k} == (-1)^{m+k} for k = 0..n-1. Requires odd n.
bool skew_check(const LittlewoodSeq& seq);

struct IdentityTerm {
    std::size_t k;
    std::int64_t lhs;
    std::int64_t rhs;
    bool ok() const noexcept { return lhs == rhs; }
};

// Per-k terms of the alternating partial sum identity, k = 0..m-1:
// sum_{i=1}^k a_i a_{2k+2-i} (-1)^{i+1} == (1 + (-1)^{k+1}) / 2.
std::vector<IdentityTerm> eq3_terms(const LittlewoodSeq& seq);
bool eq3_check(const LittlewoodSeq& seq);

// a_k a_{k+1} == a_{2k} a_{2k+1} for k = 1..m-1.
std::vector<IdentityTerm> eq4_terms(const LittlewoodSeq& seq);
bool eq4_check(const LittlewoodSeq& seq);

// Lexicographically least image under negation, reversal and alternating
// negation (a group of order 8).
LittlewoodSeq canonicalize(const LittlewoodSeq& seq);

// All 8 images, possibly with repeats.
std::vector<LittlewoodSeq> symmetry_orbit(const LittlewoodSeq& seq);

using Rational = boost::rational<std::int64_t>;

// n^2 / (2 sum_{k>=1} c_k^2). Requires n >= 2.
Rational merit_factor(const LittlewoodSeq& seq);

}  // namespace barker
