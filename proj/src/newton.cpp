#include "barker/newton.hpp"

#include <json.hpp>

#include <stdexcept>

namespace barker {

namespace {

// j-th coefficient counted from the top, 1-based: top(p, 1) is the leading one.
BigInt top(const IntPolynomial& p, std::size_t j) {
    const auto deg = static_cast<std::size_t>(p.degree());
    if (j - 1 > deg) return 0;
    return p.coeff(deg - (j - 1));
}

void check_barker_odd(const LittlewoodSeq& seq, const char* op) {
    const std::size_t n = seq.size();
    if (n % 2 == 0) throw std::domain_error(std::string(op) + ": requires odd length");
    if ((n - 1) / 2 < 2) throw std::domain_error(std::string(op) + ": requires n >= 5");
    if (!is_barker(seq)) throw std::domain_error(std::string(op) + ": sequence is not Barker");
}

}  // namespace

PowerSumSeries::PowerSumSeries(PowerSumSource source, std::vector<BigInt> values)
    : source_(source), values_(std::move(values)) {}

const BigInt& PowerSumSeries::at(std::size_t mu) const {
    if (mu < 1 || mu > values_.size()) {
        throw std::out_of_range("PowerSumSeries: index " + std::to_string(mu) + " outside [1, " +
                                std::to_string(values_.size()) + "]");
    }
    return values_[mu - 1];
}

std::string PowerSumSeries::to_json() const {
    nlohmann::json j;
    j["source"] = source_ == PowerSumSource::Q ? "S" : "s";
    auto arr = nlohmann::json::array();
    for (const auto& v : values_) arr.push_back(v.str());
    j["values"] = arr;
    return j.dump();
}

PowerSumSeries power_sums_monic(const IntPolynomial& p, std::size_t count) {
    if (count < 1) throw std::invalid_argument("power_sums_monic: count must be >= 1");
    if (p.is_zero() || p.leading() != 1) throw std::invalid_argument("power_sums_monic: polynomial is not monic");
    std::vector<BigInt> s;
    s.reserve(count);
    for (std::size_t mu = 1; mu <= count; ++mu) {
        BigInt acc = BigInt(mu) * top(p, mu + 1);
        for (std::size_t j = 2; j <= mu; ++j) acc += top(p, j) * s[mu - j];
        s.push_back(-acc);
    }
    return PowerSumSeries(PowerSumSource::P, std::move(s));
}

PowerSumSeries power_sums_q(const IntPolynomial& q, std::size_t count) {
    if (count < 1) throw std::invalid_argument("power_sums_q: count must be >= 1");
    if (q.is_zero() || (q.leading() != 1 && q.leading() != -1)) {
        throw std::invalid_argument("power_sums_q: leading coefficient must be +-1");
    }
    const BigInt lead = q.leading();
    std::vector<BigInt> S;
    S.reserve(count);
    for (std::size_t mu = 1; mu <= count; ++mu) {
        BigInt acc = BigInt(mu) * top(q, mu + 1);
        for (std::size_t j = 2; j <= mu; ++j) acc += top(q, j) * S[mu - j];
        S.push_back(-acc * lead);
    }
    return PowerSumSeries(PowerSumSource::Q, std::move(S));
}

std::vector<std::uint64_t> residues_mod(const PowerSumSeries& series, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("residues_mod: modulus must be >= 2");
    const BigInt mod = p;
    std::vector<std::uint64_t> out;
    out.reserve(series.count());
    for (const auto& v : series.values()) {
        BigInt r = v % mod;
        if (r < 0) r += mod;
        out.push_back(r.convert_to<std::uint64_t>());
    }
    return out;
}

std::pair<LittlewoodSeq, bool> normalize_leading(const LittlewoodSeq& seq) {
    if (seq.a(1) == 1) return {seq, false};
    return {seq.negated(), true};
}

SPatternReport verify_S_pattern(const LittlewoodSeq& seq) {
    check_barker_odd(seq, "verify_S_pattern");
    const std::size_t m = (seq.size() - 1) / 2;
    SPatternReport rep;
    rep.m = m;
    rep.S = power_sums_q(build_Q(seq), 2 * m);
    for (std::size_t mu = 1; mu <= 2 * m; ++mu) {
        if (mu % 2 == 1 && rep.S.at(mu) != 0) rep.odd_ok = false;
        if (mu % 2 == 0 && mu <= 2 * m - 2 && rep.S.at(mu) != -2) rep.even_ok = false;
    }
    return rep;
}

SmallSPatternReport verify_s_pattern(const LittlewoodSeq& seq) {
    check_barker_odd(seq, "verify_s_pattern");
    const std::size_t m = (seq.size() - 1) / 2;
    auto [norm, negated] = normalize_leading(seq);

    SmallSPatternReport rep;
    rep.m = m;
    rep.negated = negated;
    rep.s = power_sums_monic(from_sequence(norm), 2 * m);
    const auto S = power_sums_q(build_Q(norm), 2 * m);
    rep.s1 = rep.s.at(1);
    for (std::size_t k = 1; k <= m - 1; ++k) {
        if (rep.s.at(2 * k) != -1) rep.even_ok = false;
        if (2 * rep.s.at(2 * k) != S.at(2 * k)) rep.doubling_ok = false;
    }
    if (norm.a(2) == 1 && rep.s1 != -1) rep.s1_ok = false;
    return rep;
}

}  // namespace barker
