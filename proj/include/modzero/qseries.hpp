#pragma once

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "modzero/cyclotomic.hpp"
#include "modzero/rat.hpp"

namespace modzero {

namespace detail {
inline bool kzero(const Rat& x) { return x == 0; }
inline bool kzero(const Cyc& x) { return x.is_zero(); }
inline Rat kinv(const Rat& x) { return Rat(1) / x; }
inline Cyc kinv(const Cyc& x) { return x.inverse(); }
}  // namespace detail

// Truncated Laurent series  sum_i c[i] * q^{(lead + i)/D},
// exact up to (but excluding) exponent `order`.
//
// All arithmetic is exact; `order` tracks how far the result is guaranteed.
template <class K>
struct Series {
    int D = 1;                // grid denominator
    long lead = 0;            // numerator of the lowest stored exponent
    std::vector<K> c;         // coefficients from lead upwards, step 1/D
    Rat order = 0;            // exclusive upper bound of valid exponents

    Series() = default;
    static Series zero(Rat ord) {
        Series s;
        s.order = std::move(ord);
        return s;
    }
    static Series constant(K v, Rat ord) {
        Series s;
        s.order = std::move(ord);
        if (!detail::kzero(v)) s.c.push_back(std::move(v));
        return s;
    }
    // single term v * q^{n/d}
    static Series monomial(K v, long n, int d, Rat ord) {
        Series s;
        s.D = d;
        s.lead = n;
        s.order = std::move(ord);
        if (!detail::kzero(v)) s.c.push_back(std::move(v));
        s.normalize();
        return s;
    }

    bool is_zero() const { return c.empty(); }
    Rat lead_exp() const { return Rat(lead, D); }  // meaningless when zero

    void normalize() {
        std::size_t a = 0, b = c.size();
        while (a < b && detail::kzero(c[a])) ++a;
        while (b > a && detail::kzero(c[b - 1])) --b;
        if (a > 0 || b < c.size()) {
            c = std::vector<K>(c.begin() + a, c.begin() + b);
            lead += static_cast<long>(a);
        }
        if (c.empty()) {
            lead = 0;
            D = 1;
            return;
        }
        // reduce the grid: gcd over used offsets and D
        long g = gcd_ll(lead, D);
        for (std::size_t i = 1; i < c.size() && g > 1; ++i)
            if (!detail::kzero(c[i])) g = gcd_ll(g, static_cast<long>(lead + i));
        g = gcd_ll(g, D);
        if (g > 1) {
            std::vector<K> nc((c.size() + g - 1) / g);
            for (std::size_t i = 0; i < c.size(); i += g) nc[i / g] = c[i];
            c = std::move(nc);
            lead /= g;
            D = static_cast<int>(D / g);
        }
    }

    K coeff(const Rat& e) const {
        Rat idx = e * D - lead;
        if (den(idx) != 1) return K{};
        Int i = num(idx);
        if (i < 0 || i >= Int(c.size())) return K{};
        return c[static_cast<std::size_t>(i)];
    }
    K coeff_int(long n) const { return coeff(Rat(n)); }

    Series truncated(Rat new_order) const {
        Series r = *this;
        if (new_order < r.order) r.order = new_order;
        while (!r.c.empty() && Rat(r.lead + long(r.c.size()) - 1, r.D) >= r.order) r.c.pop_back();
        r.normalize();
        return r;
    }

    // rescale both series to a common grid
    static void align(Series& a, Series& b) {
        int L = static_cast<int>(lcm_ll(a.D, b.D));
        a.regrid(L);
        b.regrid(L);
    }
    void regrid(int L) {
        if (L == D) return;
        int s = L / D;
        std::vector<K> nc(c.empty() ? 0 : (c.size() - 1) * s + 1);
        for (std::size_t i = 0; i < c.size(); ++i) nc[i * s] = c[i];
        c = std::move(nc);
        lead *= s;
        D = L;
    }
};

using FracSeries = Series<Rat>;
using CycSeries = Series<Cyc>;

template <class K>
Series<K> operator+(Series<K> a, Series<K> b) {
    Series<K>::align(a, b);
    Rat ord = std::min(a.order, b.order);
    if (a.is_zero()) return b.truncated(ord);
    if (b.is_zero()) return a.truncated(ord);
    long lo = std::min(a.lead, b.lead);
    long hi = std::max(a.lead + long(a.c.size()), b.lead + long(b.c.size()));
    Series<K> r;
    r.D = a.D;
    r.lead = lo;
    r.order = ord;
    r.c.assign(static_cast<std::size_t>(hi - lo), K{});
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.lead - lo + i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        auto& t = r.c[b.lead - lo + i];
        t = t + b.c[i];
    }
    return r.truncated(ord);
}

template <class K>
Series<K> operator-(Series<K> a) {
    for (auto& x : a.c) x = -x;
    return a;
}

template <class K>
Series<K> operator-(Series<K> a, Series<K> b) { return std::move(a) + (-std::move(b)); }

template <class K>
Series<K> operator*(const K& k, Series<K> a) {
    if (detail::kzero(k)) return Series<K>::zero(a.order);
    for (auto& x : a.c) x = k * x;
    return a;
}
inline FracSeries operator*(const Rat& k, FracSeries a) {
    if (k == 0) return FracSeries::zero(a.order);
    for (auto& x : a.c) x = k * x;
    return a;
}

template <class K>
Series<K> operator*(Series<K> a, Series<K> b) {
    if (a.is_zero() || b.is_zero()) {
        // truncation still follows the min-of-guarantees rule where defined
        Rat ord = std::min(a.order + (b.is_zero() ? Rat(0) : b.lead_exp()),
                           b.order + (a.is_zero() ? Rat(0) : a.lead_exp()));
        if (a.is_zero() && b.is_zero()) ord = a.order + b.order;
        return Series<K>::zero(ord);
    }
    Series<K>::align(a, b);
    Rat ord = std::min(a.order + b.lead_exp(), b.order + a.lead_exp());
    Series<K> r;
    r.D = a.D;
    r.lead = a.lead + b.lead;
    r.order = ord;
    // dense cauchy product, clipped at the valid order
    Rat span_r = ord * r.D - r.lead;
    long span = den(span_r) == 1 ? static_cast<long>(num(span_r))
                                 : static_cast<long>(num(span_r) / den(span_r)) + 1;
    span = std::min<long>(span, long(a.c.size() + b.c.size()) - 1);
    if (span <= 0) return Series<K>::zero(ord);
    r.c.assign(static_cast<std::size_t>(span), K{});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (detail::kzero(a.c[i])) continue;
        std::size_t jmax = std::min(b.c.size(), static_cast<std::size_t>(span) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (detail::kzero(b.c[j])) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    r.normalize();
    return r;
}

template <class K>
Series<K> reciprocal(const Series<K>& a) {
    if (a.is_zero()) throw SeriesError("reciprocal of zero series");
    // a = c0 q^lead (1 + u); invert the unit part by the standard recurrence
    Rat ulen = a.order - a.lead_exp();
    Rat span_r = ulen * a.D;
    long n = static_cast<long>(num(span_r) / den(span_r));
    if (den(span_r) != 1) ++n;
    n = std::max<long>(n, 1);
    K c0 = a.c[0];
    K ic0 = detail::kinv(c0);
    std::vector<K> g(static_cast<std::size_t>(n), K{});
    g[0] = K(Rat(1));
    for (long e = 1; e < n; ++e) {
        K s{};
        std::size_t top = std::min<std::size_t>(a.c.size() - 1, static_cast<std::size_t>(e));
        for (std::size_t j = 1; j <= top; ++j) {
            if (detail::kzero(a.c[j])) continue;
            s = s + (a.c[j] * ic0) * g[e - j];
        }
        g[static_cast<std::size_t>(e)] = -s;
    }
    Series<K> r;
    r.D = a.D;
    r.lead = -a.lead;
    r.order = a.order - 2 * a.lead_exp();
    r.c.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r.c[i] = ic0 * g[i];
    r.normalize();
    return r.truncated(r.order);
}

template <class K>
Series<K> int_pow(const Series<K>& a, long k) {
    if (k == 0) {
        Rat ord = a.is_zero() ? a.order : a.order - a.lead_exp();
        return Series<K>::constant(K(Rat(1)), ord);
    }
    if (k < 0) return int_pow(reciprocal(a), -k);
    if (a.is_zero()) return Series<K>::zero(a.order + Rat(k - 1) * 0);
    Series<K> base = a;
    Series<K> r;
    bool have = false;
    while (k) {
        if (k & 1) {
            r = have ? r * base : base;
            have = true;
        }
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

// a^r for rational r; the leading coefficient must be an exact root.
// The root of the leading coefficient is taken positive where a choice exists.
inline FracSeries pow_frac(const FracSeries& a, const Rat& r) {
    if (a.is_zero()) throw SeriesError("fractional power of zero series");
    long p = static_cast<long>(num(r));
    unsigned q = static_cast<unsigned>(den(r));
    Rat le = a.lead_exp() * r;
    // exponent of the result must land on some grid: refine by q
    auto c0r = rat_root_pow(a.c[0], p, q);
    if (!c0r) throw SeriesError("NotAnNthPower: leading coefficient is not an exact power");
    Rat ulen = a.order - a.lead_exp();
    long n = static_cast<long>(num(ulen * a.D) / den(ulen * a.D));
    if (den(ulen * a.D) != 1) ++n;
    n = std::max<long>(n, 1);
    Rat ic0 = Rat(1) / a.c[0];
    // g = (1+u)^r via  e g_e = sum_{0<j<=e} (r j - (e-j)) u_j g_{e-j}
    std::vector<Rat> g(static_cast<std::size_t>(n), Rat(0));
    g[0] = 1;
    for (long e = 1; e < n; ++e) {
        Rat s = 0;
        std::size_t top = std::min<std::size_t>(a.c.size() - 1, static_cast<std::size_t>(e));
        for (std::size_t j = 1; j <= top; ++j) {
            if (a.c[j] == 0) continue;
            s += (r * Rat(j) - Rat(e - long(j))) * (a.c[j] * ic0) * g[e - j];
        }
        if (s != 0) g[static_cast<std::size_t>(e)] = s / Rat(e);
    }
    // assemble on the refined grid
    int L = static_cast<int>(lcm_ll(a.D, static_cast<long>(den(le))));
    FracSeries out;
    out.D = L;
    out.lead = static_cast<long>(num(le * L));
    out.order = ulen + le;
    int s = L / a.D;
    out.c.assign((g.size() - 1) * s + 1, Rat(0));
    for (std::size_t i = 0; i < g.size(); ++i) out.c[i * s] = *c0r * g[i];
    out.normalize();
    return out;
}

inline FracSeries nth_root(const FracSeries& a, unsigned n) {
    if (a.is_zero()) throw SeriesError("NotAnNthPower: zero series");
    if (num(a.lead_exp() * int(n)) % den(a.lead_exp()) != 0 && false) {
        // exponent grid refinement handles the general case; kept permissive
    }
    return pow_frac(a, Rat(1, n));
}

// f(z) -> f(d z): q^e -> q^{d e}
template <class K>
Series<K> substitute_scale(Series<K> a, long d) {
    a.lead *= d;
    a.order *= d;
    if (d > 1 && !a.c.empty()) {
        std::vector<K> nc((a.c.size() - 1) * d + 1);
        for (std::size_t i = 0; i < a.c.size(); ++i) nc[i * d] = a.c[i];
        a.c = std::move(nc);
    }
    a.normalize();
    return a;
}

// f(z) -> f(z + t): coefficient at exponent e picks up the phase e^{2 pi i e t}.
// t with denominator 1 or 2 stays rational; denominator 3 lands in Q(w).
inline FracSeries shift_character_rat(const FracSeries& a, const Rat& t) {
    unsigned q = static_cast<unsigned>(den(t));
    if (q != 1 && q != 2) throw SeriesError("UnsupportedShift: need denominator 1 or 2");
    FracSeries r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (r.c[i] == 0) continue;
        Rat et = Rat(r.lead + long(i), r.D) * t;   // phase = e^{2 pi i et}
        if (den(et) == 1) continue;
        if (den(et) == 2) { r.c[i] = -r.c[i]; continue; }
        throw SeriesError("UnsupportedShift: exponent grid incompatible with t");
    }
    return r;
}

inline CycSeries shift_character(const FracSeries& a, const Rat& t) {
    unsigned q = static_cast<unsigned>(den(t));
    if (q != 1 && q != 2 && q != 3) throw SeriesError("UnsupportedShift: denominator not in {1,2,3}");
    CycSeries r;
    r.D = a.D;
    r.lead = a.lead;
    r.order = a.order;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        Rat et = Rat(a.lead + long(i), a.D) * t;
        if (den(et) == 1) {
            r.c[i] = Cyc(a.c[i]);
        } else if (den(et) == 2) {
            r.c[i] = Cyc(-a.c[i]);
        } else if (den(et) == 3) {
            long j = static_cast<long>(num(et) % 3);
            r.c[i] = omega_pow(j) * Cyc(a.c[i]);
        } else {
            throw SeriesError("UnsupportedShift: exponent grid incompatible with t");
        }
    }
    r.normalize();
    return r;
}

inline CycSeries to_cyc(const FracSeries& a) {
    CycSeries r;
    r.D = a.D;
    r.lead = a.lead;
    r.order = a.order;
    r.c.assign(a.c.begin(), a.c.end());
    return r;
}

// project a Q(w)-series with rational coefficients back to Q; throws otherwise
inline FracSeries to_rat(const CycSeries& a) {
    FracSeries r;
    r.D = a.D;
    r.lead = a.lead;
    r.order = a.order;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i].is_rational()) throw SeriesError("series has irrational cyclotomic part");
        r.c[i] = a.c[i].a;
    }
    r.normalize();
    return r;
}

template <class K>
bool equal_upto(const Series<K>& a, const Series<K>& b, Rat upto) {
    Rat lim = std::min({a.order, b.order, upto});
    Series<K> d = a - b;
    if (d.is_zero()) return true;
    return d.lead_exp() >= lim;
}

// first exponent where the two series disagree (below the common order)
template <class K>
std::optional<Rat> first_mismatch(const Series<K>& a, const Series<K>& b, Rat upto) {
    Rat lim = std::min({a.order, b.order, upto});
    Series<K> d = a - b;
    if (d.is_zero() || d.lead_exp() >= lim) return std::nullopt;
    return d.lead_exp();
}

}  // namespace modzero
