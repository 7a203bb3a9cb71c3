#pragma once

// Power sums of polynomial roots from coefficients alone (Newton's
// identities). Roots are never computed.

#include "barker/polycore.hpp"

#include <string>
#include <vector>

namespace barker {

enum class PowerSumSource {
    Q,  // S_mu, roots +-alpha_j of Q
    P,  // s_mu, roots alpha_j of P
};

class PowerSumSeries {
public:
    PowerSumSeries(PowerSumSource source, std::vector<BigInt> values);

    PowerSumSource source() const noexcept { return source_; }
    std::size_t count() const noexcept { return values_.size(); }
    // mu is 1-based.
    const BigInt& at(std::size_t mu) const;
    const std::vector<BigInt>& values() const noexcept { return values_; }

    // {"source":"S"|"s","values":["..",..]}
    std::string to_json() const;

private:
    PowerSumSource source_;
    std::vector<BigInt> values_;
};

// Monic p: sum_{j=1}^{mu} a_j s_{mu+1-j} + mu a_{mu+1} = 0 with a_1 = 1,
// where a_j is the coefficient of z^{deg-j+1}, zero beyond the constant term.
PowerSumSeries power_sums_monic(const IntPolynomial& p, std::size_t count);

// Leading coefficient +-1: c_1 S_mu + ... + c_mu S_1 + mu c_{mu+1} = 0,
// solved for S_mu by multiplying with c_1 (its own inverse). Kept integral.
PowerSumSeries power_sums_q(const IntPolynomial& q, std::size_t count);

std::vector<std::uint64_t> residues_mod(const PowerSumSeries& series, std::uint64_t p);

struct SPatternReport {
    std::size_t m = 0;
    PowerSumSeries S{PowerSumSource::Q, {}};  // S_1 .. S_{2m}
    bool even_ok = true;   // S_{2k} = -2, k = 1..m-1
    bool odd_ok = true;    // S_mu = 0 for odd mu <= 2m
    bool ok() const noexcept { return even_ok && odd_ok; }
};

// Odd n = 2m + 1, m >= 2, Barker.
SPatternReport verify_S_pattern(const LittlewoodSeq& seq);

struct SmallSPatternReport {
    std::size_t m = 0;
    bool negated = false;  // a_1 was -1 and the sequence was negated first
    PowerSumSeries s{PowerSumSource::P, {}};  // s_1 .. s_{2m}
    BigInt s1;
    bool even_ok = true;     // s_{2k} = -1, k = 1..m-1
    bool doubling_ok = true; // 2 s_{2k} = S_{2k}
    bool s1_ok = true;       // s_1 = -1 whenever a_2 = +1 after normalization
    bool ok() const noexcept { return even_ok && doubling_ok && s1_ok; }
};

SmallSPatternReport verify_s_pattern(const LittlewoodSeq& seq);

// The sequence with a_1 = +1 (negated if needed) and whether negation applied.
std::pair<LittlewoodSeq, bool> normalize_leading(const LittlewoodSeq& seq);

}  // namespace barker
