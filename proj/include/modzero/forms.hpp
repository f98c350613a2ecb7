#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modzero/catalog.hpp"
#include "modzero/qseries.hpp"

namespace modzero {

// one term coeff * E_k(d z) of a cusp Eisenstein combination
struct EisTerm {
    long d;
    Rat coeff;
};
struct EisCombo {
    std::vector<EisTerm> terms;
    Rat den;
};

// E_{k,G}^kappa as an exact combination of level-one series.  k even >= 4.
inline std::optional<EisCombo> eisenstein_combo(const std::string& g, unsigned k,
                                                const std::string& cusp) {
    auto P = [&](int b, int e) { return boost::multiprecision::pow(Int(b), e); };
    int h = static_cast<int>(k) / 2;
    Int t2 = P(2, k), t3 = P(3, k), t5 = P(5, k), t7 = P(7, k), t11 = P(11, k);
    Int h2 = P(2, h), h3 = P(3, h), h5 = P(5, h), h6 = P(6, h), h7 = P(7, h), h10 = P(10, h),
        h11 = P(11, h);
    auto C = [](std::vector<EisTerm> t, Int d) { return EisCombo{std::move(t), Rat(d)}; };

    if (g == "1" && cusp == "inf") return C({{1, Rat(1)}}, 1);
    if (g == "2+" && cusp == "inf") return C({{2, Rat(h2)}, {1, Rat(1)}}, h2 + 1);
    if (g == "2") {
        if (cusp == "inf") return C({{2, Rat(t2)}, {1, Rat(-1)}}, t2 - 1);
        if (cusp == "0") return C({{2, Rat(-h2)}, {1, Rat(h2)}}, t2 - 1);
    }
    if (g == "3+" && cusp == "inf") return C({{3, Rat(h3)}, {1, Rat(1)}}, h3 + 1);
    if (g == "3") {
        if (cusp == "inf") return C({{3, Rat(t3)}, {1, Rat(-1)}}, t3 - 1);
        if (cusp == "0") return C({{3, Rat(-h3)}, {1, Rat(h3)}}, t3 - 1);
    }
    if (g == "4+4") {
        if (cusp == "inf") return C({{4, Rat(t2)}, {2, Rat(-2)}, {1, Rat(1)}}, t2 - 1);
        if (cusp == "-1/2")
            return C({{4, Rat(-h2 * t2)}, {2, Rat(h2 * (t2 + 1))}, {1, Rat(-h2)}}, t2 - 1);
    }
    if (g == "4") {
        if (cusp == "inf") return C({{4, Rat(t2)}, {2, Rat(-1)}}, t2 - 1);
        if (cusp == "0") return C({{2, Rat(-1)}, {1, Rat(1)}}, t2 - 1);
        if (cusp == "-1/2") return C({{4, Rat(-t2)}, {2, Rat(t2 + 1)}, {1, Rat(-1)}}, t2 - 1);
    }
    if (g == "5+" && cusp == "inf") return C({{5, Rat(h5)}, {1, Rat(1)}}, h5 + 1);
    if (g == "5") {
        if (cusp == "inf") return C({{5, Rat(t5)}, {1, Rat(-1)}}, t5 - 1);
        if (cusp == "0") return C({{5, Rat(-h5)}, {1, Rat(h5)}}, t5 - 1);
    }
    Int d32 = (t3 - 1) * (t2 - 1);
    if (g == "6+" && cusp == "inf")
        return C({{6, Rat(h6)}, {3, Rat(h3)}, {2, Rat(h2)}, {1, Rat(1)}}, (h3 + 1) * (h2 + 1));
    if (g == "6+6") {
        if (cusp == "inf")
            return C({{6, Rat((h6 + 1) * h6)}, {1, Rat(h6 + 1)},
                      {3, Rat(-(h3 + h2) * h3)}, {2, Rat(-(h3 + h2) * h2)}}, d32);
        if (cusp == "-1/2")
            return C({{6, Rat(-(h3 + h2) * h6)}, {1, Rat(-(h3 + h2))},
                      {3, Rat((h6 + 1) * h3)}, {2, Rat((h6 + 1) * h2)}}, d32);
    }
    if (g == "6+3") {
        if (cusp == "inf")
            return C({{6, Rat(t2 * h3)}, {3, Rat(-h3)}, {2, Rat(t2)}, {1, Rat(-1)}},
                     (h3 + 1) * (t2 - 1));
        if (cusp == "0")
            return C({{6, Rat(-h2 * h3)}, {3, Rat(h2 * h3)}, {2, Rat(-h2)}, {1, Rat(h2)}},
                     (h3 + 1) * (t2 - 1));
    }
    if (g == "6+2") {
        if (cusp == "inf")
            return C({{6, Rat(h2 * t3)}, {3, Rat(t3)}, {2, Rat(-h2)}, {1, Rat(-1)}},
                     (t3 - 1) * (h2 + 1));
        if (cusp == "0")
            return C({{6, Rat(-h3 * h2)}, {3, Rat(-h3)}, {2, Rat(h3 * h2)}, {1, Rat(h3)}},
                     (t3 - 1) * (h2 + 1));
    }
    if (g == "6") {
        if (cusp == "inf")
            return C({{6, Rat(t2 * t3)}, {3, Rat(-t3)}, {2, Rat(-t2)}, {1, Rat(1)}}, d32);
        if (cusp == "0")
            return C({{6, Rat(h6)}, {3, Rat(-h6)}, {2, Rat(-h6)}, {1, Rat(h6)}}, d32);
        if (cusp == "-1/2")
            return C({{6, Rat(-h3 * t2)}, {3, Rat(h3)}, {2, Rat(h3 * t2)}, {1, Rat(-h3)}}, d32);
        if (cusp == "-1/3")
            return C({{6, Rat(-h2 * t3)}, {3, Rat(h2 * t3)}, {2, Rat(h2)}, {1, Rat(-h2)}}, d32);
    }
    if (g == "7+" && cusp == "inf") return C({{7, Rat(h7)}, {1, Rat(1)}}, h7 + 1);
    if (g == "7") {
        if (cusp == "inf") return C({{7, Rat(t7)}, {1, Rat(-1)}}, t7 - 1);
        if (cusp == "0") return C({{7, Rat(-h7)}, {1, Rat(h7)}}, t7 - 1);
    }
    if (g == "8+8") {
        if (cusp == "inf")
            return C({{8, Rat(h2 * t2)}, {4, Rat(-h2)}, {2, Rat(-1)}, {1, Rat(1)}}, h2 * (t2 - 1));
        if (cusp == "-1/2")
            return C({{8, Rat(-h2 * t2)}, {4, Rat(h2 * (t2 - h2 + 1))},
                      {2, Rat(t2 - h2 + 1)}, {1, Rat(-1)}}, h2 * (t2 - 1));
    }
    if (g == "8") {
        if (cusp == "inf") return C({{8, Rat(t2)}, {4, Rat(-1)}}, t2 - 1);
        if (cusp == "0") return C({{2, Rat(-1)}, {1, Rat(1)}}, h2 * (t2 - 1));
        if (cusp == "-1/2") return C({{4, Rat(-t2)}, {2, Rat(t2 + 1)}, {1, Rat(-1)}}, h2 * (t2 - 1));
        if (cusp == "-1/4") return C({{8, Rat(-t2)}, {4, Rat(t2 + 1)}, {2, Rat(-1)}}, t2 - 1);
    }
    if (g == "9+9") {
        if (cusp == "inf") return C({{9, Rat(t3)}, {3, Rat(-2)}, {1, Rat(1)}}, t3 - 1);
        if (cusp == "-1/3") return C({{9, Rat(-t3)}, {3, Rat(t3 + 1)}, {1, Rat(-1)}}, t3 - 1);
    }
    if (g == "9") {
        if (cusp == "inf") return C({{9, Rat(t3)}, {3, Rat(-1)}}, t3 - 1);
        if (cusp == "0") return C({{3, Rat(-1)}, {1, Rat(1)}}, t3 - 1);
    }
    Int d52 = (t5 - 1) * (t2 - 1);
    if (g == "10+" && cusp == "inf")
        return C({{10, Rat(h10)}, {5, Rat(h5)}, {2, Rat(h2)}, {1, Rat(1)}}, (h5 + 1) * (h2 + 1));
    if (g == "10+10") {
        if (cusp == "inf")
            return C({{10, Rat((h10 + 1) * h10)}, {1, Rat(h10 + 1)},
                      {5, Rat(-(h5 + h2) * h5)}, {2, Rat(-(h5 + h2) * h2)}}, d52);
        if (cusp == "-1/2")
            return C({{10, Rat(-(h5 + h2) * h10)}, {1, Rat(-(h5 + h2))},
                      {5, Rat((h10 + 1) * h5)}, {2, Rat((h10 + 1) * h2)}}, d52);
    }
    if (g == "10+5") {
        if (cusp == "inf")
            return C({{10, Rat(t2 * h5)}, {5, Rat(-h5)}, {2, Rat(t2)}, {1, Rat(-1)}},
                     (h5 + 1) * (t2 - 1));
        if (cusp == "0")
            return C({{10, Rat(-h2 * h5)}, {5, Rat(h2 * h5)}, {2, Rat(-h2)}, {1, Rat(h2)}},
                     (h5 + 1) * (t2 - 1));
    }
    if (g == "10+2") {
        if (cusp == "inf")
            return C({{10, Rat(h2 * t5)}, {5, Rat(t5)}, {2, Rat(-h2)}, {1, Rat(-1)}},
                     (t5 - 1) * (h2 + 1));
        if (cusp == "0")
            return C({{10, Rat(-h5 * h2)}, {5, Rat(-h5)}, {2, Rat(h5 * h2)}, {1, Rat(h5)}},
                     (t5 - 1) * (h2 + 1));
    }
    if (g == "10") {
        if (cusp == "inf")
            return C({{10, Rat(t2 * t5)}, {5, Rat(-t5)}, {2, Rat(-t2)}, {1, Rat(1)}}, d52);
        if (cusp == "0")
            return C({{10, Rat(h10)}, {5, Rat(-h10)}, {2, Rat(-h10)}, {1, Rat(h10)}}, d52);
        if (cusp == "-1/2")
            return C({{10, Rat(-h5 * t2)}, {5, Rat(h5)}, {2, Rat(h5 * t2)}, {1, Rat(-h5)}}, d52);
        if (cusp == "-1/5")
            return C({{10, Rat(-h2 * t5)}, {5, Rat(h2 * t5)}, {2, Rat(h2)}, {1, Rat(-h2)}}, d52);
    }
    if (g == "11+" && cusp == "inf") return C({{11, Rat(h11)}, {1, Rat(1)}}, h11 + 1);
    if (g == "11") {
        if (cusp == "inf") return C({{11, Rat(t11)}, {1, Rat(-1)}}, t11 - 1);
        if (cusp == "0") return C({{11, Rat(-h11)}, {1, Rat(h11)}}, t11 - 1);
    }
    if (g == "12+") {
        if (cusp == "inf")
            return C({{12, Rat(t2 * h3)}, {6, Rat(-2 * h3)}, {4, Rat(t2)},
                      {3, Rat(h3)}, {2, Rat(-2)}, {1, Rat(1)}}, (h3 + 1) * (t2 - 1));
        if (cusp == "-1/2")
            return C({{12, Rat(-2 * h2 * t2 * h3)}, {6, Rat(2 * h2 * h3 * (t2 + 1))},
                      {4, Rat(-2 * h2 * t2)}, {3, Rat(-2 * h2 * h3)},
                      {2, Rat(2 * h2 * (t2 + 1))}, {1, Rat(-2 * h2)}}, (h3 + 1) * (t2 - 1));
    }
    if (g == "12+12") {
        // coset average of E_{k,12}^inf under the level-12 Fricke involution
        if (cusp == "inf")
            return C({{12, Rat(t2 * t3)}, {6, Rat(h3 - t3)}, {4, Rat(-t2)},
                      {3, Rat(-h3)}, {2, Rat(1 - h3)}, {1, Rat(h3)}}, d32);
        if (cusp == "-1/3")
            return C({{12, Rat(-t2 * h3)}, {6, Rat(-h3 * (h3 - 1))}, {4, Rat(t2 * h3)},
                      {3, Rat(t3)}, {2, Rat(-(h3 - 1))}, {1, Rat(-1)}}, d32);
        if (cusp == "-1/2")
            return C({{12, Rat(-t2 * h3)}, {6, Rat(h3 * (t2 + 1))}, {4, Rat(-t2)},
                      {3, Rat(-h3)}, {2, Rat(t2 + 1)}, {1, Rat(-1)}}, (h3 + 1) * (t2 - 1));
    }
    if (g == "12+4") {
        // E_{k,6}^inf conjugated by the half-integer translation
        if (cusp == "inf")
            return C({{12, Rat(t2 * t3)}, {6, Rat(-2 * t3)}, {4, Rat(-t2)},
                      {3, Rat(t3)}, {2, Rat(2)}, {1, Rat(-1)}}, d32);
        if (cusp == "0")
            return C({{12, Rat(h3 * t2)}, {6, Rat(-2 * h3)}, {4, Rat(-h3 * t2)},
                      {3, Rat(h3)}, {2, Rat(2 * h3)}, {1, Rat(-h3)}}, d32);
        if (cusp == "-1/2")
            return C({{12, Rat(2 * h6 * t2 * t3)}, {6, Rat(-2 * h6 * t3 * (t2 + 1))},
                      {4, Rat(-2 * h6 * t2)}, {3, Rat(2 * h6 * t3)},
                      {2, Rat(2 * h6 * (t2 + 1))}, {1, Rat(-2 * h6)}}, d32);
        if (cusp == "-1/6")
            return C({{12, Rat(-2 * h2 * t2 * h3)}, {6, Rat(2 * h2 * h3 * (t2 + 1))},
                      {4, Rat(-2 * h2 * t2)}, {3, Rat(-2 * h2 * h3)},
                      {2, Rat(2 * h2 * (t2 + 1))}, {1, Rat(-2 * h2)}}, d32);
    }
    if (g == "12+3") {
        if (cusp == "inf")
            return C({{12, Rat(t2 * h3)}, {6, Rat(-h3)}, {4, Rat(t2)}, {2, Rat(-1)}},
                     (h3 + 1) * (t2 - 1));
        if (cusp == "0")
            return C({{6, Rat(-h3)}, {3, Rat(h3)}, {2, Rat(-1)}, {1, Rat(1)}},
                     (h3 + 1) * (t2 - 1));
        if (cusp == "-1/2")
            return C({{12, Rat(-t2 * h3)}, {6, Rat(h3 * (t2 + 1))}, {4, Rat(-t2)},
                      {3, Rat(-h3)}, {2, Rat(t2 + 1)}, {1, Rat(-1)}}, (h3 + 1) * (t2 - 1));
    }
    if (g == "12") {
        if (cusp == "inf")
            return C({{12, Rat(t2 * t3)}, {6, Rat(-t3)}, {4, Rat(-t2)}, {2, Rat(1)}}, d32);
        if (cusp == "0")
            return C({{6, Rat(h3)}, {3, Rat(-h3)}, {2, Rat(-h3)}, {1, Rat(h3)}}, d32);
        if (cusp == "-1/3")
            return C({{6, Rat(-t3)}, {3, Rat(t3)}, {2, Rat(1)}, {1, Rat(-1)}}, d32);
        if (cusp == "-1/4")
            return C({{12, Rat(-h3 * t2)}, {6, Rat(h3)}, {4, Rat(h3 * t2)}, {2, Rat(-h3)}}, d32);
        if (cusp == "-1/2")
            return C({{12, Rat(h3 * t2 * t3)}, {6, Rat(-h3 * t3 * (t2 + 1))}, {4, Rat(-h3 * t2)},
                      {3, Rat(h3 * t3)}, {2, Rat(h3 * (t2 + 1))}, {1, Rat(-h3)}}, d32);
        if (cusp == "-1/6")
            return C({{12, Rat(-t2 * h3)}, {6, Rat(h3 * (t2 + 1))}, {4, Rat(-t2)},
                      {3, Rat(-h3)}, {2, Rat(t2 + 1)}, {1, Rat(-1)}}, d32);
    }
    return std::nullopt;
}

// weight-two combinations (quasi-modular building blocks),一per variant label
inline std::optional<std::pair<std::vector<EisTerm>, Rat>> e2_combo(const std::string& variant) {
    using V = std::vector<EisTerm>;
    static const std::map<std::string, std::pair<V, Rat>> table = {
        {"2", {{{2, Rat(2)}, {1, Rat(-1)}}, Rat(1)}},
        {"3", {{{3, Rat(3)}, {1, Rat(-1)}}, Rat(2)}},
        {"4", {{{4, Rat(2)}, {2, Rat(-1)}}, Rat(1)}},
        {"4+4", {{{4, Rat(4)}, {2, Rat(-4)}, {1, Rat(1)}}, Rat(1)}},
        {"5", {{{5, Rat(5)}, {1, Rat(-1)}}, Rat(4)}},
        {"6+6", {{{6, Rat(6)}, {3, Rat(-3)}, {2, Rat(-2)}, {1, Rat(1)}}, Rat(2)}},
        {"6+3", {{{6, Rat(6)}, {3, Rat(-3)}, {2, Rat(2)}, {1, Rat(-1)}}, Rat(4)}},
        {"6+2", {{{6, Rat(6)}, {3, Rat(3)}, {2, Rat(-2)}, {1, Rat(-1)}}, Rat(6)}},
        {"7", {{{7, Rat(7)}, {1, Rat(-1)}}, Rat(6)}},
        {"8", {{{8, Rat(2)}, {4, Rat(-1)}}, Rat(1)}},
        {"8+8", {{{8, Rat(8)}, {4, Rat(-4)}, {2, Rat(-2)}, {1, Rat(1)}}, Rat(3)}},
        {"9", {{{9, Rat(3)}, {3, Rat(-1)}}, Rat(2)}},
        {"9+9", {{{9, Rat(9)}, {3, Rat(-6)}, {1, Rat(1)}}, Rat(3)}},
        {"10+10", {{{10, Rat(10)}, {5, Rat(-5)}, {2, Rat(-2)}, {1, Rat(1)}}, Rat(4)}},
        {"10+5", {{{10, Rat(10)}, {5, Rat(-5)}, {2, Rat(2)}, {1, Rat(-1)}}, Rat(6)}},
        {"10+2", {{{10, Rat(10)}, {5, Rat(5)}, {2, Rat(-2)}, {1, Rat(-1)}}, Rat(12)}},
        {"11", {{{11, Rat(11)}, {1, Rat(-1)}}, Rat(10)}},
        {"12+", {{{12, Rat(12)}, {6, Rat(-12)}, {4, Rat(4)}, {3, Rat(3)}, {2, Rat(-4)}, {1, Rat(1)}},
                 Rat(4)}},
        // squares of the two rooted weight-one forms
        {"sq:1,12+12", {{{12, Rat(-12)}, {6, Rat(18)}, {4, Rat(4)}, {3, Rat(-3)}, {2, Rat(-6)}, {1, Rat(1)}},
                        Rat(2)}},
        {"sq:1,12+3", {{{6, Rat(3)}, {1, Rat(-1)}}, Rat(2)}},
    };
    auto it = table.find(variant);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// eta-quotient forms of the hauptmoduls (corrected where the source misprints)
inline std::optional<std::vector<std::pair<int, int>>> hauptmodul_eta_quotient(
    const std::string& g) {
    using VV = std::vector<std::pair<int, int>>;
    static const std::map<std::string, VV> table = {
        {"2", {{1, 24}, {2, -24}}},
        {"3", {{1, 12}, {3, -12}}},
        {"4+4", {{2, 48}, {1, -24}, {4, -24}}},
        {"4", {{1, 8}, {4, -8}}},
        {"5", {{1, 6}, {5, -6}}},
        {"6+6", {{1, -12}, {2, 12}, {3, 12}, {6, -12}}},
        {"6+3", {{1, 6}, {2, -6}, {3, 6}, {6, -6}}},
        {"6+2", {{1, 4}, {2, 4}, {3, -4}, {6, -4}}},
        {"6", {{1, 5}, {2, -1}, {3, 1}, {6, -5}}},
        {"7", {{1, 4}, {7, -4}}},
        {"8+8", {{1, -8}, {2, 8}, {4, 8}, {8, -8}}},
        {"8", {{1, 4}, {2, -2}, {4, 2}, {8, -4}}},
        {"9+9", {{3, 12}, {1, -6}, {9, -6}}},
        {"9", {{1, 3}, {9, -3}}},
        {"10+10", {{1, -6}, {2, 6}, {5, 6}, {10, -6}}},
        {"10+5", {{1, 4}, {2, -4}, {5, 4}, {10, -4}}},
        {"10+2", {{1, 2}, {2, 2}, {5, -2}, {10, -2}}},
        {"10", {{1, 3}, {2, -1}, {5, 1}, {10, -3}}},
        {"12+", {{1, -6}, {2, 12}, {3, -6}, {4, -6}, {6, 12}, {12, -6}}},
        {"12+12", {{1, -4}, {3, 4}, {4, 4}, {12, -4}}},
        {"12+4", {{1, 4}, {2, -4}, {3, -4}, {4, 4}, {6, 4}, {12, -4}}},
        {"12+3", {{1, 2}, {3, 2}, {4, -2}, {12, -2}}},
        {"12", {{1, 3}, {2, -2}, {3, -1}, {4, 1}, {6, 2}, {12, -3}}},
    };
    auto it = table.find(g);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// Named-form workshop with memoized exact expansions at a fixed order.
class FormBook {
  public:
    explicit FormBook(long order = 64) : order_(order) {}

    long order() const { return order_; }

    // prod_{n>=1} (1 - q^{dn}) below the book order (pentagonal numbers)
    FracSeries eta_unit(long d) {
        return memo("etaU:" + std::to_string(d), [&] {
            FracSeries s;
            s.D = 1;
            s.lead = 0;
            s.order = Rat(order_);
            s.c.assign(static_cast<std::size_t>(order_), Rat(0));
            s.c[0] = 1;
            for (long kk = 1;; ++kk) {
                long e1 = d * kk * (3 * kk - 1) / 2;
                long e2 = d * kk * (3 * kk + 1) / 2;
                if (e1 >= order_ && e2 >= order_) break;
                Rat sgn = (kk % 2) ? Rat(-1) : Rat(1);
                if (e1 < order_) s.c[static_cast<std::size_t>(e1)] += sgn;
                if (e2 < order_) s.c[static_cast<std::size_t>(e2)] += sgn;
            }
            s.normalize();
            return s;
        });
    }

    // eta(d z), with the q^{d/24} prefactor
    FracSeries eta(long d) {
        return memo("eta:" + std::to_string(d), [&] {
            FracSeries u = eta_unit(d).truncated(Rat(order_) - Rat(d, 24));
            u.regrid(static_cast<int>(lcm_ll(u.D, 24)));
            u.lead += d * (u.D / 24);
            u.order += Rat(d, 24);
            u.normalize();
            return u;
        });
    }

    // prod eta(d z)^{r} with exact rational exponents r
    FracSeries eta_quotient(const std::vector<std::pair<long, Rat>>& factors) {
        Rat lead = 0;
        for (auto& [d, r] : factors) lead += Rat(d) * r / 24;
        FracSeries res = FracSeries::constant(Rat(1), Rat(order_) - lead);
        for (auto& [d, r] : factors) {
            FracSeries u = eta_unit(d).truncated(res.order);
            FracSeries p = (den(r) == 1) ? int_pow(u, static_cast<long>(num(r))) : pow_frac(u, r);
            res = (res * p).truncated(Rat(order_) - lead);
        }
        // attach q^lead
        int L = static_cast<int>(lcm_ll(res.D, static_cast<long>(den(lead))));
        res.regrid(L);
        res.lead += static_cast<long>(num(lead * L));
        res.order += lead;
        res.normalize();
        return res;
    }

    FracSeries eta_quotient_int(const std::vector<std::pair<int, int>>& factors) {
        std::vector<std::pair<long, Rat>> f;
        for (auto& [d, r] : factors) f.push_back({d, Rat(r)});
        return eta_quotient(f);
    }

    // E_k(d z); k even >= 2
    FracSeries Ek(unsigned k, long d = 1) {
        if (k < 2 || k % 2) throw SeriesError("BadWeight: k must be even and >= 2");
        return memo("E" + std::to_string(k) + ":" + std::to_string(d), [&] {
            FracSeries s;
            s.D = 1;
            s.lead = 0;
            s.order = Rat(order_);
            s.c.assign(static_cast<std::size_t>(order_), Rat(0));
            s.c[0] = 1;
            Rat fac = Rat(-2 * static_cast<long>(k)) / bernoulli(k);
            for (long n = 1; d * n < order_; ++n)
                s.c[static_cast<std::size_t>(d * n)] = fac * Rat(sigma_pow(k - 1, n));
            s.normalize();
            return s;
        });
    }

    FracSeries combo_series(const EisCombo& cb, unsigned k) {
        FracSeries acc = FracSeries::zero(Rat(order_));
        for (auto& t : cb.terms) acc = acc + t.coeff * Ek(k, t.d);
        return (Rat(1) / cb.den) * acc;
    }

    FracSeries group_eisenstein(const std::string& g, unsigned k, const std::string& cusp) {
        if (k < 4 || k % 2) throw SeriesError("BadWeight: k must be even and >= 4");
        auto cb = eisenstein_combo(g, k, cusp);
        if (!cb) throw SeriesError("NoFormula: no Eisenstein series for " + g + " cusp " + cusp);
        return memo("EIS:" + g + ":" + std::to_string(k) + ":" + cusp,
                    [&] { return combo_series(*cb, k); });
    }

    FracSeries e2_prime(const std::string& variant) {
        auto cb = e2_combo(variant);
        if (!cb) throw SeriesError("NoFormula: no weight-two combination " + variant);
        return memo("E2p:" + variant, [&] {
            FracSeries acc = FracSeries::zero(Rat(order_));
            for (auto& t : cb->first) acc = acc + t.coeff * Ek(2, t.d);
            return (Rat(1) / cb->second) * acc;
        });
    }

    // named Delta-forms and rooted forms, keyed as in the reference notes
    FracSeries form(const std::string& name) {
        auto it = cache_.find(key(name));
        if (it != cache_.end()) return it->second;
        FracSeries s = build_form(name);
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(key(name), s);
        return s;
    }

    FracSeries hauptmodul(const std::string& g) {
        return memo("J:" + g, [&] { return build_hauptmodul(g); });
    }

    FracSeries ratio(const FracSeries& a, const FracSeries& b) { return a * reciprocal(b); }

    // level-9 shifted factors, Q(w) coefficients
    CycSeries delta9_shift(int sign) {
        FracSeries d9o = form("D9o");
        return shift_character(d9o, Rat(sign, 3));
    }
    CycSeries e2_prime_9p3() {
        // (3 E2(3z) - E2(z + 1/3)) / 2
        CycSeries a = to_cyc(Rat(3) * Ek(2, 3));
        CycSeries b = shift_character(Ek(2, 1), Rat(1, 3));
        return Cyc(Rat(1, 2)) * (a - b);
    }
    CycSeries group_eisenstein_9_third(unsigned k, int sign) {
        // E_{k,9}^{-sign/3} = -(E_k(3z) - E_k(z + sign/3)) / (3^k - 1)
        Int t3 = boost::multiprecision::pow(Int(3), k);
        CycSeries a = to_cyc(Ek(k, 3));
        CycSeries b = shift_character(Ek(k, 1), Rat(sign, 3));
        return Cyc(Rat(-1) / Rat(t3 - 1)) * (a - b);
    }

  private:
    std::string key(const std::string& name) const { return name; }

    template <class F>
    FracSeries memo(const std::string& k, F&& fn) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(k);
            if (it != cache_.end()) return it->second;
        }
        FracSeries s = fn();
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(k, s);
        return s;
    }

    FracSeries build_form(const std::string& n);
    FracSeries build_hauptmodul(const std::string& g);

    long order_;
    std::mutex mu_;
    std::map<std::string, FracSeries> cache_;
};

inline FracSeries FormBook::build_form(const std::string& n) {
    auto EQ = [&](std::vector<std::pair<long, Rat>> f) { return eta_quotient(f); };
    auto R = [](long p, long q = 1) { return Rat(p, q); };

    // level 2..6 eta forms
    if (n == "D2i") return EQ({{2, R(16)}, {1, R(-8)}});
    if (n == "D2o") return EQ({{1, R(16)}, {2, R(-8)}});
    if (n == "D2") return form("D2i") * form("D2o");
    if (n == "D3i") return EQ({{3, R(9)}, {1, R(-3)}});
    if (n == "D3o") return EQ({{1, R(9)}, {3, R(-3)}});
    if (n == "D3") return form("D3i") * form("D3o");
    if (n == "D4i") return EQ({{4, R(8)}, {2, R(-4)}});
    if (n == "D4o") return EQ({{1, R(8)}, {2, R(-4)}});
    if (n == "D4h") return EQ({{2, R(20)}, {1, R(-8)}, {4, R(-8)}});
    if (n == "D4") return form("D4i") * form("D4o") * form("D4h");
    if (n == "D44") return form("D4") * form("D4h");
    if (n == "D44i") return form("D4i") * form("D4o");
    if (n == "D44h") return int_pow(form("D4h"), 2);
    if (n == "D5i") return EQ({{5, R(5)}, {1, R(-1)}});
    if (n == "D5o") return EQ({{1, R(5)}, {5, R(-1)}});
    if (n == "D5") return form("D5i") * form("D5o");
    if (n == "D6i") return EQ({{1, R(1)}, {2, R(-2)}, {3, R(-3)}, {6, R(6)}});
    if (n == "D6o") return EQ({{1, R(6)}, {2, R(-3)}, {3, R(-2)}, {6, R(1)}});
    if (n == "D6h2") return EQ({{1, R(-3)}, {2, R(6)}, {3, R(1)}, {6, R(-2)}});
    if (n == "D6h3") return EQ({{1, R(-2)}, {2, R(1)}, {3, R(6)}, {6, R(-3)}});
    if (n == "D6") return form("D6i") * form("D6o") * form("D6h2") * form("D6h3");
    if (n == "D66i") return form("D6i") * form("D6o");
    if (n == "D66h") return form("D6h2") * form("D6h3");
    if (n == "D63i") return form("D6i") * form("D6h2");
    if (n == "D63o") return form("D6o") * form("D6h3");
    if (n == "D62i") return form("D6i") * form("D6h3");
    if (n == "D62o") return form("D6o") * form("D6h2");
    // level 7: square roots
    if (n == "D7i") return pow_frac(EQ({{7, R(7)}, {1, R(-1)}}), R(1, 2));
    if (n == "D7o") return pow_frac(EQ({{1, R(7)}, {7, R(-1)}}), R(1, 2));
    if (n == "D7") return EQ({{1, R(3)}, {7, R(3)}});
    if (n == "E17p") return pow_frac(e2_prime("7"), R(1, 2));
    if (n == "D47") return R(5, 16) * (int_pow(e2_prime("7"), 2) - group_eisenstein("7+", 4, "inf"));
    if (n == "D1007p") {
        FracSeries e4 = group_eisenstein("7+", 4, "inf");
        FracSeries e6 = group_eisenstein("7+", 6, "inf");
        FracSeries e10 = group_eisenstein("7+", 10, "inf");
        return R(559, 690) * (R(41065, 137592) * (e4 * e6 - e10) - e6 * form("D47"));
    }
    if (n == "E37p") return ratio(form("D1007p"), form("D47") * form("D7"));
    // level 8
    if (n == "D8i") return EQ({{8, R(4)}, {4, R(-2)}});
    if (n == "D8o") return EQ({{1, R(4)}, {2, R(-2)}});
    if (n == "D8h2") return EQ({{2, R(10)}, {1, R(-4)}, {4, R(-4)}});
    if (n == "D8h4") return EQ({{4, R(10)}, {2, R(-4)}, {8, R(-4)}});
    if (n == "D8") return EQ({{2, R(4)}, {4, R(4)}});
    if (n == "D88i") return form("D8i") * form("D8o");
    if (n == "D88h") return form("D8h2") * form("D8h4");
    // level 9: the shifted pair enters only through its product
    if (n == "D9i") return EQ({{9, R(3)}, {3, R(-1)}});
    if (n == "D9o") return EQ({{1, R(3)}, {3, R(-1)}});
    if (n == "P93") return EQ({{3, R(10)}, {1, R(-3)}, {9, R(-3)}});
    if (n == "D9") return form("D9i") * form("D9o") * form("P93");
    if (n == "D99i") return form("D9i") * form("D9o");
    if (n == "D99h3") return form("P93");
    // level 10: cube roots
    if (n == "D10i") return pow_frac(EQ({{1, R(1)}, {2, R(-2)}, {5, R(-5)}, {10, R(10)}}), R(1, 3));
    if (n == "D10o") return pow_frac(EQ({{1, R(10)}, {2, R(-5)}, {5, R(-2)}, {10, R(1)}}), R(1, 3));
    if (n == "D10h2") return pow_frac(EQ({{1, R(-5)}, {2, R(10)}, {5, R(1)}, {10, R(-2)}}), R(1, 3));
    if (n == "D10h5") return pow_frac(EQ({{1, R(-2)}, {2, R(1)}, {5, R(10)}, {10, R(-5)}}), R(1, 3));
    if (n == "D10") return pow_frac(EQ({{1, R(4)}, {2, R(4)}, {5, R(4)}, {10, R(4)}}), R(1, 3));
    if (n == "E23_10") return pow_frac(e2_prime("10+2"), R(1, 3));
    if (n == "E83_10")
        return ratio(e2_prime("10+10") * e2_prime("10+5"), int_pow(form("E23_10"), 2));
    if (n == "D1010i") return form("D10i") * form("D10o");
    if (n == "D1010h") return form("D10h2") * form("D10h5");
    if (n == "D105i") return form("D10i") * form("D10h2");
    if (n == "D105o") return form("D10o") * form("D10h5");
    if (n == "D102i") return form("D10i") * form("D10h5");
    if (n == "D102o") return form("D10o") * form("D10h2");
    // level 11: fifth roots
    if (n == "D11i") return pow_frac(EQ({{11, R(11)}, {1, R(-1)}}), R(1, 5));
    if (n == "D11o") return pow_frac(EQ({{1, R(11)}, {11, R(-1)}}), R(1, 5));
    if (n == "D11") return EQ({{1, R(2)}, {11, R(2)}});
    if (n == "E411q") {
        FracSeries e2 = e2_prime("11");
        FracSeries d11 = form("D11");
        FracSeries e4 = group_eisenstein("11", 4, "inf");
        return R(1, 1525) * (R(-1525) * int_pow(e2, 2) + R(4320) * (e2 * d11)
                             + R(2016) * int_pow(d11, 2) + R(3050) * e4);
    }
    // level 12: square roots (the -1/6 factor uses the corrected exponents)
    if (n == "D12i") return pow_frac(EQ({{2, R(1)}, {4, R(-2)}, {6, R(-3)}, {12, R(6)}}), R(1, 2));
    if (n == "D12o") return pow_frac(EQ({{1, R(6)}, {2, R(-3)}, {3, R(-2)}, {6, R(1)}}), R(1, 2));
    if (n == "D12h3") return pow_frac(EQ({{1, R(-2)}, {2, R(1)}, {3, R(6)}, {6, R(-3)}}), R(1, 2));
    if (n == "D12h4") return pow_frac(EQ({{2, R(-3)}, {4, R(6)}, {6, R(1)}, {12, R(-2)}}), R(1, 2));
    if (n == "D12h2")
        return pow_frac(EQ({{1, R(-6)}, {2, R(15)}, {3, R(2)}, {4, R(-6)}, {6, R(-5)}, {12, R(2)}}),
                        R(1, 2));
    if (n == "D12h6")
        return pow_frac(EQ({{1, R(2)}, {2, R(-5)}, {3, R(-6)}, {4, R(2)}, {6, R(15)}, {12, R(-6)}}),
                        R(1, 2));
    if (n == "D12")
        return form("D12i") * form("D12o") * form("D12h3") * form("D12h4") * form("D12h2") *
               form("D12h6");
    if (n == "D12p") return form("D12") * form("D12h2") * form("D12h6");
    if (n == "E11212") return pow_frac(e2_prime("sq:1,12+12"), R(1, 2));
    if (n == "E1123") return pow_frac(e2_prime("sq:1,12+3"), R(1, 2));
    if (n == "D12pi") return form("D12i") * form("D12o") * form("D12h3") * form("D12h4");
    if (n == "D12ph") return int_pow(form("D12h2") * form("D12h6"), 2);
    if (n == "D1212i") return form("D12i") * form("D12o");
    if (n == "D1212h3") return form("D12h3") * form("D12h4");
    if (n == "D1212h2") return form("D12h2") * form("D12h6");
    if (n == "D124i") return form("D12i") * form("D12h3");
    if (n == "D124o") return form("D12o") * form("D12h4");
    if (n == "D123i") return form("D12i") * form("D12h4");
    if (n == "D123o") return form("D12o") * form("D12h3");
    // level 1
    if (n == "Delta")
        return R(1, 1728) * (int_pow(Ek(4), 3) - int_pow(Ek(6), 2));
    if (n == "eta24") return EQ({{1, R(24)}});
    // second-root forms for level 3
    if (n == "E13p") return pow_frac(e2_prime("3"), R(1, 2));
    if (n == "E43q") return ratio(group_eisenstein("3+", 6, "inf"), e2_prime("3"));
    throw SeriesError("unknown form " + n);
}

inline FracSeries FormBook::build_hauptmodul(const std::string& g) {
    const GroupDescriptor& gd = get_group(g);
    if (gd.genus != 0) throw SeriesError("NotGenusZero: " + g);
    if (g == "1") return ratio(int_pow(Ek(4), 3), form("Delta"));
    if (g == "2+") return ratio(int_pow(group_eisenstein("2+", 4, "inf"), 2), form("D2"));
    if (g == "2") return ratio(form("D2o"), form("D2i"));
    if (g == "3+") return ratio(int_pow(e2_prime("3"), 3), form("D3"));
    if (g == "3") return ratio(form("D3o"), form("D3i"));
    if (g == "4+4") return ratio(form("D44h"), form("D44i"));
    if (g == "4") return ratio(form("D4o"), form("D4i"));
    if (g == "5+") return ratio(int_pow(e2_prime("5"), 2), form("D5"));
    if (g == "5") return ratio(form("D5o"), form("D5i"));
    if (g == "6+") return ratio(int_pow(e2_prime("6+2"), 2), form("D6"));
    if (g == "6+6") return ratio(form("D66h"), form("D66i"));
    if (g == "6+3") return ratio(form("D63o"), form("D63i"));
    if (g == "6+2") return ratio(form("D62o"), form("D62i"));
    if (g == "6") return ratio(form("D6o"), form("D6i"));
    if (g == "7+") return ratio(int_pow(form("E17p"), 3), form("D7"));
    if (g == "7") return ratio(form("D7o"), form("D7i"));
    if (g == "8+8") return ratio(form("D88h"), form("D88i"));
    if (g == "8") return ratio(form("D8o"), form("D8i"));
    if (g == "9+9") return ratio(form("D99h3"), form("D99i"));
    if (g == "9") return ratio(form("D9o"), form("D9i"));
    if (g == "10+") return ratio(int_pow(form("E23_10"), 4), form("D10"));
    if (g == "10+10") return ratio(form("D1010h"), form("D1010i"));
    if (g == "10+5") return ratio(form("D105o"), form("D105i"));
    if (g == "10+2") return ratio(form("D102o"), form("D102i"));
    if (g == "10") return ratio(form("D10o"), form("D10i"));
    if (g == "11+") return ratio(e2_prime("11"), form("D11"));
    if (g == "12+") return ratio(form("D12ph"), form("D12pi"));
    if (g == "12+12") return ratio(form("D1212h3"), form("D1212i"));
    if (g == "12+4") return ratio(form("D124o"), form("D124i"));
    if (g == "12+3") return ratio(form("D123o"), form("D123i"));
    if (g == "12") return ratio(form("D12o"), form("D12i"));
    throw SeriesError("NotGenusZero: " + g);
}

}  // namespace modzero
