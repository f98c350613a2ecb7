#pragma once

#include "modzero/rat.hpp"

namespace modzero {

// Element a + b*w of Q(w), w = exp(2 pi i/3), w^2 = -1 - w.
// Only what shift_character and the level-9 products need.
struct Cyc {
    Rat a, b;

    Cyc() : a(0), b(0) {}
    Cyc(Rat x) : a(std::move(x)), b(0) {}          // NOLINT: implicit by design
    Cyc(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend Cyc operator+(const Cyc& x, const Cyc& y) { return {x.a + y.a, x.b + y.b}; }
    friend Cyc operator-(const Cyc& x, const Cyc& y) { return {x.a - y.a, x.b - y.b}; }
    friend Cyc operator-(const Cyc& x) { return {-x.a, -x.b}; }
    friend Cyc operator*(const Cyc& x, const Cyc& y) {
        if (x.b == 0 && y.b == 0) return Cyc(x.a * y.a);
        Rat bb = x.b * y.b;
        return {x.a * y.a - bb, x.a * y.b + x.b * y.a - bb};
    }
    friend bool operator==(const Cyc& x, const Cyc& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

    Cyc conj() const { return {a - b, -b}; }  // complex conjugation: w -> w^2
    Rat norm() const { return a * a - a * b + b * b; }

    Cyc inverse() const {
        Rat n = norm();
        if (n == 0) throw SeriesError("division by zero in Q(w)");
        Cyc c = conj();
        return {c.a / n, c.b / n};
    }
    friend Cyc operator/(const Cyc& x, const Cyc& y) { return x * y.inverse(); }
};

// w^j for integer j
inline Cyc omega_pow(long j) {
    switch (((j % 3) + 3) % 3) {
        case 0: return Cyc(Rat(1));
        case 1: return Cyc(Rat(0), Rat(1));
        default: return Cyc(Rat(-1), Rat(-1));
    }
}

}  // namespace modzero
