#pragma once

#include <cmath>
#include <complex>

#include "modzero/rat.hpp"

namespace modzero {

// Exact number x + y*sqrt(m), m a fixed squarefree positive integer.
// m = 1 encodes plain rationals; mixed-radical arithmetic only combines
// values whose radical parts agree (or vanish).
struct Quad {
    Rat x = 0, y = 0;
    int m = 1;

    Quad() = default;
    Quad(Rat v) : x(std::move(v)) {}                       // NOLINT: implicit by design
    Quad(Rat a, Rat b, int mm) : x(std::move(a)), y(std::move(b)), m(mm) {
        if (m == 1) { x += y; y = 0; }
        if (y == 0) m = 1;
    }

    bool is_rational() const { return y == 0; }

    static int merge_m(const Quad& a, const Quad& b) {
        if (a.y == 0) return b.m;
        if (b.y == 0) return a.m;
        if (a.m != b.m) throw SeriesError("mixed radicals in surd arithmetic");
        return a.m;
    }

    friend Quad operator+(const Quad& a, const Quad& b) {
        int mm = merge_m(a, b);
        return {a.x + b.x, a.y + b.y, mm};
    }
    friend Quad operator-(const Quad& a, const Quad& b) {
        int mm = merge_m(a, b);
        return {a.x - b.x, a.y - b.y, mm};
    }
    friend Quad operator-(const Quad& a) { return {-a.x, -a.y, a.m}; }
    friend Quad operator*(const Quad& a, const Quad& b) {
        int mm = merge_m(a, b);
        return {a.x * b.x + Rat(mm) * a.y * b.y, a.x * b.y + a.y * b.x, mm};
    }
    friend bool operator==(const Quad& a, const Quad& b) {
        return a.x == b.x && a.y == b.y && (a.y == 0 || a.m == b.m);
    }
    Quad inverse() const {
        Rat n = x * x - Rat(m) * y * y;
        if (n == 0) throw SeriesError("surd division by zero");
        return {x / n, -y / n, m};
    }
    friend Quad operator/(const Quad& a, const Quad& b) { return a * b.inverse(); }

    double value() const {
        return static_cast<double>(x) + static_cast<double>(y) * std::sqrt(double(m));
    }
};

// 2x2 matrix over Quad with determinant 1 (checked on demand)
struct Matrix2 {
    Quad a, b, c, d;

    Matrix2() : a(Rat(1)), b(Rat(0)), c(Rat(0)), d(Rat(1)) {}
    Matrix2(Quad aa, Quad bb, Quad cc, Quad dd)
        : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {}
    static Matrix2 ints(long aa, long bb, long cc, long dd) {
        return {Quad(Rat(aa)), Quad(Rat(bb)), Quad(Rat(cc)), Quad(Rat(dd))};
    }

    Quad det() const { return a * d - b * c; }
    Matrix2 inverse() const { return {d, -b, -c, a}; }  // valid when det = 1

    friend Matrix2 operator*(const Matrix2& A, const Matrix2& B) {
        return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
                A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
    }

    std::complex<double> apply(std::complex<double> z) const {
        std::complex<double> numv = a.value() * z + b.value();
        std::complex<double> denv = c.value() * z + d.value();
        return numv / denv;
    }
    std::complex<double> j_factor(std::complex<double> z) const {
        return c.value() * z + d.value();
    }
};

inline std::complex<double> apply_mobius(const Matrix2& g, std::complex<double> z) {
    auto d = g.j_factor(z);
    if (std::abs(d) == 0.0) throw SeriesError("PoleAtPoint");
    return g.apply(z);
}

}  // namespace modzero
