#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modzero {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long long lcm_ll(long long a, long long b) {
    return a / gcd_ll(a, b) * b;
}

// exact integer k-th root, or nullopt if v is not a perfect k-th power
inline std::optional<Int> iroot(const Int& v, unsigned k) {
    if (v < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = iroot(-v, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (v == 0 || v == 1) return v;
    Int lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, k) < v) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) < v) lo = mid + 1; else hi = mid;
    }
    return boost::multiprecision::pow(lo, k) == v ? std::optional<Int>(lo) : std::nullopt;
}

// c^(p/q) for exact rational c; requires c to be an exact q-th power
inline std::optional<Rat> rat_root_pow(const Rat& c, long p, unsigned q) {
    auto rn = iroot(num(c), q);
    auto rd = iroot(den(c), q);
    if (!rn || !rd) return std::nullopt;
    Rat base(*rn, *rd);
    Rat r = 1;
    Rat b = p < 0 ? Rat(1) / base : base;
    long e = p < 0 ? -p : p;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// Bernoulli numbers B_0..B_n via the defining recurrence (cached)
inline const std::vector<Rat>& bernoulli_upto(std::size_t n) {
    static std::vector<Rat> cache{Rat(1)};
    if (cache.size() <= n) {
        std::vector<Int> binom(n + 2, 0);
        for (std::size_t m = cache.size(); m <= n; ++m) {
            // sum_{j<m} C(m+1, j) B_j = -(m+1) B_m  ... rearranged
            Rat s = 0;
            Int c = 1;  // C(m+1, 0)
            for (std::size_t j = 0; j < m; ++j) {
                s += Rat(c) * cache[j];
                c = c * Int(m + 1 - j) / Int(j + 1);
            }
            cache.push_back(-s / Rat(Int(m) + 1));
        }
    }
    return cache;
}

inline Rat bernoulli(unsigned k) { return bernoulli_upto(k)[k]; }

inline Int sigma_pow(unsigned k, long n) {
    Int s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += boost::multiprecision::pow(Int(d), k);
        long e = n / d;
        if (e != d) s += boost::multiprecision::pow(Int(e), k);
    }
    return s;
}

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace modzero
