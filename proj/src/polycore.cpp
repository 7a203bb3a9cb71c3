#include "barker/polycore.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace barker {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("IntPolynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << 'z';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::string IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.str());
    return arr.dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("IntPolynomial::from_json: expected array");
    std::vector<BigInt> coeffs;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument("IntPolynomial::from_json: expected decimal strings");
        coeffs.emplace_back(e.get<std::string>());
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial from_sequence(const LittlewoodSeq& seq) {
    const std::size_t n = seq.size();
    std::vector<BigInt> coeffs(n);
    for (std::size_t j = 1; j <= n; ++j) coeffs[n - j] = seq.a(j);
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial scale(const IntPolynomial& p, const BigInt& factor) {
    std::vector<BigInt> out = p.coeffs();
    for (auto& c : out) c *= factor;
    return IntPolynomial(std::move(out));
}

IntPolynomial reciprocal(const IntPolynomial& p, long d) {
    if (p.degree() > d) {
        throw std::invalid_argument("reciprocal: degree " + std::to_string(p.degree()) +
                                    " exceeds window " + std::to_string(d));
    }
    if (d < 0) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) out[static_cast<std::size_t>(d - i)] = p.coeff(static_cast<std::size_t>(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial negate_variable(const IntPolynomial& p) {
    std::vector<BigInt> out = p.coeffs();
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial build_Q(const LittlewoodSeq& seq) {
    if (seq.size() % 2 == 0) {
        throw std::domain_error("build_Q: requires odd length, got n = " + std::to_string(seq.size()));
    }
    const auto p = from_sequence(seq);
    return multiply(p, reciprocal(p, static_cast<long>(seq.size()) - 1));
}

QStructureReport q_structure_check(const LittlewoodSeq& seq) {
    if (seq.size() % 2 == 0) throw std::domain_error("q_structure_check: requires odd length");
    if (!skew_check(seq)) throw std::domain_error("q_structure_check: sequence fails the skew relation");

    const std::size_t n = seq.size();
    const std::size_t m = (n - 1) / 2;
    const BigInt sign = (m % 2 == 0) ? 1 : -1;
    const auto p = from_sequence(seq);
    const auto q = build_Q(seq);

    QStructureReport rep;
    rep.m = m;
    rep.center_is_n = q.coeff(2 * m) == BigInt(n);
    auto offend = [&rep](std::size_t j) {
        if (!rep.first_offending_j) rep.first_offending_j = j;
    };
    for (std::size_t j = 1; j <= 2 * m; ++j) {
        const BigInt up = q.coeff(2 * m + j);
        const BigInt down = q.coeff(2 * m - j);
        rep.b.push_back(up);
        if (up != down) {
            rep.palindromic = false;
            offend(j);
        }
        if (j % 2 == 1 && up != 0) {
            rep.odd_coeffs_vanish = false;
            offend(j);
        }
        if (j % 2 == 0 && up != sign) {
            rep.even_coeffs_match = false;
            offend(j);
        }
    }
    const auto p_neg = negate_variable(p);
    rep.q_equals_signed_p_p_neg = q == scale(multiply(p, p_neg), sign);
    rep.star_equals_signed_p_neg = reciprocal(p, static_cast<long>(2 * m)) == scale(p_neg, sign);
    return rep;
}

BigInt eval_at_one(const IntPolynomial& p) {
    BigInt sum = 0;
    for (const auto& c : p.coeffs()) sum += c;
    return sum;
}

}  // namespace barker
