#pragma once

// Exact integer polynomials and the P / P* / Q constructions built from a
// +-1 sequence.

#include "barker/seqcore.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace barker {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient i is the coefficient of z^i. Trailing zeros are trimmed, so the
// zero polynomial has an empty coefficient list and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Zero for i beyond the degree.
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const IntPolynomial&) const = default;

    std::string to_string() const;
    // Little-endian array of decimal strings.
    std::string to_json() const;
    static IntPolynomial from_json(const std::string& text);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// P(z) = sum_{j=1}^n a_j z^{n-j}.
IntPolynomial from_sequence(const LittlewoodSeq& seq);

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial scale(const IntPolynomial& p, const BigInt& factor);

// z^d p(1/z); the window d is explicit so vanishing trailing coefficients
// are still reflected. Throws if degree(p) > d.
IntPolynomial reciprocal(const IntPolynomial& p, long d);

// p(-z)
IntPolynomial negate_variable(const IntPolynomial& p);

// Q = P P* for odd n = 2m + 1; degree 4m, coefficient of z^{2m +- k} is c_k.
IntPolynomial build_Q(const LittlewoodSeq& seq);

struct QStructureReport {
    std::size_t m = 0;
    bool odd_coeffs_vanish = true;            // b_j = 0 for odd j
    bool even_coeffs_match = true;            // b_{2j} = (-1)^m
    bool palindromic = true;                  // coefficient of z^{2m-j} == z^{2m+j}
    bool center_is_n = true;                  // coefficient of z^{2m} == n
    bool q_equals_signed_p_p_neg = true;      // Q == (-1)^m P(z) P(-z)
    bool star_equals_signed_p_neg = true;     // P* == (-1)^m P(-z)
    std::optional<std::size_t> first_offending_j;
    std::vector<BigInt> b;                    // b_1 .. b_{2m}

    bool ok() const noexcept {
        return odd_coeffs_vanish && even_coeffs_match && palindromic && center_is_n &&
               q_equals_signed_p_p_neg && star_equals_signed_p_neg;
    }
};

// Requires odd n and a sequence passing skew_check.
QStructureReport q_structure_check(const LittlewoodSeq& seq);

BigInt eval_at_one(const IntPolynomial& p);

}  // namespace barker
