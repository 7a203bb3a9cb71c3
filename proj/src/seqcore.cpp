#include "barker/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace barker {

namespace {

int pow_neg_one(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

std::size_t require_odd(const LittlewoodSeq& seq, const char* op) {
    if (seq.size() % 2 == 0) {
        throw std::domain_error(std::string(op) + ": requires odd length, got n = " +
                                std::to_string(seq.size()));
    }
    return (seq.size() - 1) / 2;
}

std::string strip_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    }
    return out;
}

// U+2212 MINUS SIGN is accepted as '-'.
std::string fold_unicode_minus(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

LittlewoodSeq parse_csv(const std::string& s) {
    std::vector<Sign> entries;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(start, end - start);
        if (tok == "1" || tok == "+1") {
            entries.push_back(1);
        } else if (tok == "-1") {
            entries.push_back(-1);
        } else if (tok.empty()) {
            throw std::invalid_argument("parse_sequence: empty field in comma separated input");
        } else {
            throw std::invalid_argument("parse_sequence: invalid entry '" + tok +
                                        "' (expected -1 or 1)");
        }
        start = end + 1;
    }
    return LittlewoodSeq(std::move(entries));
}

}  // namespace

LittlewoodSeq::LittlewoodSeq(std::vector<Sign> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("LittlewoodSeq: length must be >= 1");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != 1 && entries_[i] != -1) {
            throw std::invalid_argument("LittlewoodSeq: entry a_" + std::to_string(i + 1) +
                                        " is not -1 or +1");
        }
    }
}

LittlewoodSeq LittlewoodSeq::negated() const {
    auto e = entries_;
    for (auto& x : e) x = static_cast<Sign>(-x);
    return LittlewoodSeq(std::move(e));
}

LittlewoodSeq LittlewoodSeq::reversed() const {
    return LittlewoodSeq(std::vector<Sign>(entries_.rbegin(), entries_.rend()));
}

LittlewoodSeq LittlewoodSeq::alternated() const {
    auto e = entries_;
    // 0-based i holds a_{i+1}; (-1)^{i+1} flips even 0-based positions.
    for (std::size_t i = 0; i < e.size(); i += 2) e[i] = static_cast<Sign>(-e[i]);
    return LittlewoodSeq(std::move(e));
}

std::string LittlewoodSeq::to_string() const {
    std::string s;
    s.reserve(entries_.size());
    for (auto x : entries_) s.push_back(x > 0 ? '+' : '-');
    return s;
}

AutocorrProfile::AutocorrProfile(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("AutocorrProfile: empty");
}

std::int64_t AutocorrProfile::peak_sidelobe() const noexcept {
    std::int64_t peak = 0;
    for (std::size_t k = 1; k < values_.size(); ++k) peak = std::max(peak, std::abs(values_[k]));
    return peak;
}

std::string AutocorrProfile::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) os << ',';
        os << values_[k];
    }
    os << ']';
    return os.str();
}

std::string AutocorrProfile::to_csv() const {
    std::ostringstream os;
    os << "k,c_k\n";
    for (std::size_t k = 0; k < values_.size(); ++k) os << k << ',' << values_[k] << '\n';
    return os.str();
}

LittlewoodSeq parse_sequence(std::string_view text) {
    const std::string s = fold_unicode_minus(strip_whitespace(text));
    if (s.empty()) throw std::invalid_argument("parse_sequence: empty input");

    if (s.find(',') != std::string::npos || s == "-1" || s == "+1") return parse_csv(s);

    bool has_sign = false;
    bool has_bit = false;
    for (char ch : s) {
        if (ch == '+' || ch == '-') {
            has_sign = true;
        } else if (ch == '0' || ch == '1') {
            has_bit = true;
        } else {
            throw std::invalid_argument(std::string("parse_sequence: invalid character '") + ch +
                                        "'");
        }
    }
    if (has_sign && has_bit) throw std::invalid_argument("parse_sequence: mixed formats");

    std::vector<Sign> entries;
    entries.reserve(s.size());
    for (char ch : s) entries.push_back((ch == '+' || ch == '1') ? 1 : -1);
    return LittlewoodSeq(std::move(entries));
}

AutocorrProfile autocorrelation(const LittlewoodSeq& seq) {
    const auto a = seq.entries();
    const std::size_t n = a.size();
    if (n > static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max())) {
        throw std::overflow_error("autocorrelation: length exceeds int64 range");
    }
    std::vector<std::int64_t> c(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j + k < n; ++j) sum += a[j] * a[j + k];
        c[k] = sum;
    }
    return AutocorrProfile(std::move(c));
}

bool is_barker(const LittlewoodSeq& seq) { return autocorrelation(seq).peak_sidelobe() <= 1; }

bool parity_identity_check(const LittlewoodSeq& seq, std::size_t k) {
    const std::size_t n = seq.size();
    if (k >= n) {
        throw std::out_of_range("parity_identity_check: k = " + std::to_string(k) +
                                " outside [0, " + std::to_string(n - 1) + "]");
    }
    int product = 1;
    for (std::size_t j = 1; j + k <= n; ++j) product *= seq.a(j) * seq.a(j + k);
    const std::int64_t ck = autocorrelation(seq).c(k);
    const std::int64_t twice = static_cast<std::int64_t>(n - k) - ck;
    if (twice % 2 != 0) return false;
    return product == pow_neg_one(twice / 2);
}

bool mod4_fold_check(const LittlewoodSeq& seq) {
    const std::size_t n = seq.size();
    if (n < 2) throw std::domain_error("mod4_fold_check: requires n >= 2");
    const auto prof = autocorrelation(seq);
    const auto nn = static_cast<std::int64_t>(n);
    for (std::size_t k = 1; k < n; ++k) {
        const std::int64_t diff = prof.c(k) + prof.c(n - k) - nn;
        if (((diff % 4) + 4) % 4 != 0) return false;
    }
    return true;
}

OddStructureReport barker_odd_structure(const LittlewoodSeq& seq) {
    const std::size_t m = require_odd(seq, "barker_odd_structure");
    if (!is_barker(seq)) throw std::domain_error("barker_odd_structure: sequence is not Barker");
    const auto prof = autocorrelation(seq);
    OddStructureReport rep{m, {}, {}, true};
    const int even_target = pow_neg_one(static_cast<std::int64_t>(m));
    for (std::size_t j = 1; j <= m; ++j) {
        const auto odd = prof.c(2 * j - 1);
        const auto even = prof.c(2 * j);
        rep.odd_lags.push_back({2 * j - 1, odd, odd % 4 == 0});
        rep.even_lags.push_back({2 * j, even, even == even_target});
        rep.ok = rep.ok && rep.odd_lags.back().ok && rep.even_lags.back().ok;
    }
    return rep;
}

bool skew_check(const LittlewoodSeq& seq) {
    const std::size_t m = require_odd(seq, "skew_check");
    const std::size_t n = seq.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (seq.a(k + 1) * seq.a(n - k) != pow_neg_one(static_cast<std::int64_t>(m + k))) {
            return false;
        }
    }
    return true;
}

std::vector<IdentityTerm> eq3_terms(const LittlewoodSeq& seq) {
    const std::size_t m = require_odd(seq, "eq3_check");
    std::vector<IdentityTerm> terms;
    for (std::size_t k = 0; k < m; ++k) {
        std::int64_t lhs = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            lhs += seq.a(i) * seq.a(2 * k + 2 - i) * pow_neg_one(static_cast<std::int64_t>(i + 1));
        }
        const std::int64_t rhs = (1 + pow_neg_one(static_cast<std::int64_t>(k + 1))) / 2;
        terms.push_back({k, lhs, rhs});
    }
    return terms;
}

bool eq3_check(const LittlewoodSeq& seq) {
    const auto terms = eq3_terms(seq);
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.ok(); });
}

std::vector<IdentityTerm> eq4_terms(const LittlewoodSeq& seq) {
    const std::size_t m = require_odd(seq, "eq4_check");
    std::vector<IdentityTerm> terms;
    for (std::size_t k = 1; k < m; ++k) {
        terms.push_back({k, seq.a(k) * seq.a(k + 1), seq.a(2 * k) * seq.a(2 * k + 1)});
    }
    return terms;
}

bool eq4_check(const LittlewoodSeq& seq) {
    const auto terms = eq4_terms(seq);
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.ok(); });
}

std::vector<LittlewoodSeq> symmetry_orbit(const LittlewoodSeq& seq) {
    std::vector<LittlewoodSeq> orbit;
    orbit.reserve(8);
    for (const auto& r : {seq, seq.reversed()}) {
        for (const auto& al : {r, r.alternated()}) {
            orbit.push_back(al);
            orbit.push_back(al.negated());
        }
    }
    return orbit;
}

LittlewoodSeq canonicalize(const LittlewoodSeq& seq) {
    const auto orbit = symmetry_orbit(seq);
    return *std::min_element(orbit.begin(), orbit.end());
}

Rational merit_factor(const LittlewoodSeq& seq) {
    const std::size_t n = seq.size();
    if (n < 2) throw std::domain_error("merit_factor: requires n >= 2");
    const auto prof = autocorrelation(seq);
    std::int64_t energy = 0;
    for (std::size_t k = 1; k < n; ++k) energy += prof.c(k) * prof.c(k);
    // c_{n-1} = a_1 a_n != 0, so energy > 0.
    const auto nn = static_cast<std::int64_t>(n);
    return Rational(nn * nn, 2 * energy);
}

}  // namespace barker
