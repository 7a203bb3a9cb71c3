#pragma once

// Independent brute-force oracles used by the tests. Nothing here calls the
// library code it is checking.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Signs = std::vector<int>;

inline Signs from_string(const std::string& s) {
    Signs a;
    for (char ch : s) a.push_back(ch == '+' ? 1 : -1);
    return a;
}

inline std::string to_string(const Signs& a) {
    std::string s;
    for (int x : a) s.push_back(x > 0 ? '+' : '-');
    return s;
}

// c_k = sum_{j=1}^{n-k} a_j a_{j+k}, straight from the definition.
inline std::vector<long long> autocorr(const Signs& a) {
    const std::size_t n = a.size();
    std::vector<long long> c(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (j + k < n) c[k] += a[j] * a[j + k];
    return c;
}

inline bool barker(const Signs& a) {
    const auto c = autocorr(a);
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] > 1 || c[k] < -1) return false;
    return true;
}

inline Signs from_bits(std::uint64_t bits, int n) {
    Signs a(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = ((bits >> (n - 1 - j)) & 1u) ? 1 : -1;
    return a;
}

// Every Barker sequence of length n as "+-" strings, ascending with - < +.
inline std::vector<std::string> all_barker(int n) {
    std::vector<std::string> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        auto a = from_bits(x, n);
        if (barker(a)) out.push_back(to_string(a));
    }
    return out;
}

// The 8 images under negation, reversal and a_j -> (-1)^j a_j, listed
// explicitly rather than generated.
inline std::vector<Signs> orbit(const Signs& a) {
    const std::size_t n = a.size();
    auto neg = [](Signs s) { for (auto& x : s) x = -x; return s; };
    auto rev = [n](const Signs& s) { Signs r(n); for (std::size_t i = 0; i < n; ++i) r[i] = s[n - 1 - i]; return r; };
    auto alt = [](Signs s) { for (std::size_t i = 0; i < s.size(); ++i) if ((i + 1) % 2 == 0) s[i] = -s[i]; return s; };
    return {a, neg(a), rev(a), neg(rev(a)), alt(a), neg(alt(a)), alt(rev(a)), neg(alt(rev(a)))};
}

inline std::vector<long long> schoolbook(const std::vector<long long>& p, const std::vector<long long>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<long long> out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Little-endian coefficients of prod (z - r).
inline std::vector<BigInt> poly_from_roots(const std::vector<long long>& roots) {
    std::vector<BigInt> c{1};
    for (long long r : roots) {
        std::vector<BigInt> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return c;
}

inline BigInt root_power_sum(const std::vector<long long>& roots, unsigned mu) {
    BigInt sum = 0;
    for (long long r : roots) sum += boost::multiprecision::pow(BigInt(r), mu);
    return sum;
}

inline Signs random_signs(std::mt19937_64& rng, std::size_t n) {
    Signs a(n);
    for (auto& x : a) x = (rng() & 1u) ? 1 : -1;
    return a;
}

// One representative of each odd-length Barker class used by the lemma and
// pattern tests, as returned (canonical) by the searches.
inline const std::vector<std::string>& canonical_barker() {
    static const std::vector<std::string> seqs{"-", "--", "--+", "---+", "---+-", "---++-+", "---+++-++-+",
                                               "-----++--+-+-"};
    return seqs;
}

}  // namespace oracle
