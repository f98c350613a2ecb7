#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modzero/forms.hpp"

namespace modzero {

struct Identity {
    std::string id;
    std::string group;
    std::function<FracSeries(FormBook&)> lhs;
    std::function<FracSeries(FormBook&)> rhs;
};

struct IdentityResult {
    std::string id;
    bool pass;
    std::optional<Rat> first_mismatch_exp;
};

// Every explicit coefficient relation transcribed from the source material,
// with scalars fixed by exact leading-term solves where the prose drops them.
inline const std::vector<Identity>& identity_registry() {
    using F = FormBook;
    auto R = [](long p, long q = 1) { return Rat(p, q); };
    static const std::vector<Identity> reg = [&] {
        std::vector<Identity> v;
        auto add = [&](std::string id, std::string g, std::function<FracSeries(F&)> l,
                       std::function<FracSeries(F&)> r) {
            v.push_back({std::move(id), std::move(g), std::move(l), std::move(r)});
        };

        // ---- level 1
        add("delta-product-formula", "1", [](F& b) { return b.form("Delta"); },
            [](F& b) { return b.form("eta24"); });
        add("delta-from-e4-e6", "1",
            [R](F& b) { return R(1728) * b.form("Delta"); },
            [](F& b) { return int_pow(b.Ek(4), 3) - int_pow(b.Ek(6), 2); });
        add("e8-is-e4-squared", "1", [](F& b) { return b.Ek(8); },
            [](F& b) { return int_pow(b.Ek(4), 2); });
        add("e10-is-e4-e6", "1", [](F& b) { return b.Ek(10); },
            [](F& b) { return b.Ek(4) * b.Ek(6); });
        add("e14-is-e4sq-e6", "1", [](F& b) { return b.Ek(14); },
            [](F& b) { return int_pow(b.Ek(4), 2) * b.Ek(6); });

        // ---- level 2
        add("delta2-eta-product", "2", [](F& b) { return b.form("D2"); },
            [](F& b) { return b.eta_quotient_int({{1, 8}, {2, 8}}); });
        add("e4-2-inf-is-delta2-0", "2", [](F& b) { return b.group_eisenstein("2", 4, "inf"); },
            [](F& b) { return b.form("D2o"); });
        add("e4-2-0-is-64-delta2-inf", "2", [](F& b) { return b.group_eisenstein("2", 4, "0"); },
            [R](F& b) { return R(64) * b.form("D2i"); });
        add("e10-2+-product", "2+", [](F& b) { return b.group_eisenstein("2+", 10, "inf"); },
            [](F& b) {
                return b.group_eisenstein("2+", 4, "inf") * b.group_eisenstein("2+", 6, "inf");
            });
        add("j2-eta-quotient", "2", [](F& b) { return b.hauptmodul("2"); },
            [](F& b) { return b.eta_quotient_int({{1, 24}, {2, -24}}); });
        add("j2+-fricke-functional", "2+", [](F& b) { return b.hauptmodul("2+"); },
            [R](F& b) {
                FracSeries j2 = b.hauptmodul("2");
                return j2 + R(4096) * reciprocal(j2) + FracSeries::constant(R(128), j2.order);
            });

        // ---- level 3
        add("delta3-eta-product", "3", [](F& b) { return b.form("D3"); },
            [](F& b) { return b.eta_quotient_int({{1, 6}, {3, 6}}); });
        add("e4-3+-is-e2p-squared", "3+", [](F& b) { return b.group_eisenstein("3+", 4, "inf"); },
            [](F& b) { return int_pow(b.e2_prime("3"), 2); });
        add("e6-3+-factors", "3+", [](F& b) { return b.group_eisenstein("3+", 6, "inf"); },
            [](F& b) { return b.e2_prime("3") * b.form("E43q"); });
        add("delta8-3-def", "3+",
            [R](F& b) {
                return R(41, 1728) * (int_pow(b.group_eisenstein("3+", 4, "inf"), 2)
                                      - b.group_eisenstein("3+", 8, "inf"));
            },
            [](F& b) { return b.e2_prime("3") * b.form("D3"); });
        add("delta10-3-def", "3+",
            [R](F& b) {
                return R(61, 432) * (b.group_eisenstein("3+", 4, "inf") * b.group_eisenstein("3+", 6, "inf")
                                     - b.group_eisenstein("3+", 10, "inf"));
            },
            [](F& b) { return b.form("E43q") * b.form("D3"); });
        add("e13p-square", "3", [](F& b) { return int_pow(b.form("E13p"), 2); },
            [](F& b) { return b.e2_prime("3"); });
        add("e4-3-inf-factors", "3", [](F& b) { return b.group_eisenstein("3", 4, "inf"); },
            [](F& b) { return b.form("E13p") * b.form("D3o"); });
        add("e4-3-0-factors", "3", [R](F& b) { return R(1, 27) * b.group_eisenstein("3", 4, "0"); },
            [](F& b) { return b.form("E13p") * b.form("D3i"); });
        add("e6-3-inf-combo", "3", [](F& b) { return b.group_eisenstein("3", 6, "inf"); },
            [R](F& b) {
                return int_pow(b.form("D3o"), 2) + R(243, 13) * (b.form("D3i") * b.form("D3o"));
            });
        add("e6-3-0-combo", "3", [R](F& b) { return R(-13, 243) * b.group_eisenstein("3", 6, "0"); },
            [R](F& b) {
                return b.form("D3i") * b.form("D3o") + R(39) * int_pow(b.form("D3i"), 2);
            });
        add("j3-eta-quotient", "3", [](F& b) { return b.hauptmodul("3"); },
            [](F& b) { return b.eta_quotient_int({{1, 12}, {3, -12}}); });

        // ---- level 4
        add("delta4-eta-product", "4", [](F& b) { return b.form("D4"); },
            [](F& b) { return b.eta_quotient_int({{2, 12}}); });
        add("delta4+4-eta-product", "4+4", [](F& b) { return b.form("D44"); },
            [](F& b) { return b.eta_quotient_int({{2, 32}, {1, -8}, {4, -8}}); });
        add("e2p4-is-scaled-e2p2", "4", [](F& b) { return b.e2_prime("4"); },
            [](F& b) { return substitute_scale(b.e2_prime("2"), 2); });
        add("e4-4-inf-is-scaled", "4", [](F& b) { return b.group_eisenstein("4", 4, "inf"); },
            [](F& b) { return substitute_scale(b.group_eisenstein("2", 4, "inf"), 2); });
        add("e4-4+4-inf-is-delta-h", "4+4", [](F& b) { return b.group_eisenstein("4+4", 4, "inf"); },
            [](F& b) { return b.form("D44h"); });
        add("e4-4+4-half-is-scaled-delta-inf", "4+4",
            [](F& b) { return b.group_eisenstein("4+4", 4, "-1/2"); },
            [R](F& b) { return R(-64) * b.form("D44i"); });
        add("e2p2-in-delta4", "4", [](F& b) { return b.e2_prime("2"); },
            [R](F& b) { return R(32) * b.form("D4i") + b.form("D4o"); });
        add("e2p4-in-delta4", "4", [](F& b) { return b.e2_prime("4"); },
            [R](F& b) { return R(8) * b.form("D4i") + b.form("D4o"); });
        add("e4-4-inf-combo", "4", [](F& b) { return b.group_eisenstein("4", 4, "inf"); },
            [R](F& b) {
                return R(16) * (b.form("D4i") * b.form("D4o")) + int_pow(b.form("D4o"), 2);
            });
        add("e4-4-0-combo", "4", [R](F& b) { return R(1, 16) * b.group_eisenstein("4", 4, "0"); },
            [R](F& b) {
                return R(16) * int_pow(b.form("D4i"), 2) + b.form("D4i") * b.form("D4o");
            });
        add("e4-4-half-combo", "4",
            [R](F& b) { return R(-1, 16) * b.group_eisenstein("4", 4, "-1/2"); },
            [](F& b) { return b.form("D4i") * b.form("D4o"); });
        add("e6-4-inf-combo", "4", [](F& b) { return b.group_eisenstein("4", 6, "inf"); },
            [R](F& b) {
                return R(128) * (int_pow(b.form("D4i"), 2) * b.form("D4o"))
                       + R(24) * (b.form("D4i") * int_pow(b.form("D4o"), 2))
                       + int_pow(b.form("D4o"), 3);
            });
        add("e6-4-0-combo", "4", [R](F& b) { return R(-1, 8) * b.group_eisenstein("4", 6, "0"); },
            [R](F& b) {
                return R(512) * int_pow(b.form("D4i"), 3)
                       + R(48) * (int_pow(b.form("D4i"), 2) * b.form("D4o"))
                       + b.form("D4i") * int_pow(b.form("D4o"), 2);
            });
        add("e6-4-half-combo", "4",
            [R](F& b) { return R(1, 8) * b.group_eisenstein("4", 6, "-1/2"); },
            [R](F& b) {
                return R(-16) * (int_pow(b.form("D4i"), 2) * b.form("D4o"))
                       + b.form("D4i") * int_pow(b.form("D4o"), 2);
            });
        add("j4+4-eta-quotient", "4+4", [](F& b) { return b.hauptmodul("4+4"); },
            [](F& b) { return b.eta_quotient_int({{2, 48}, {1, -24}, {4, -24}}); });
        add("j4-eta-quotient", "4", [](F& b) { return b.hauptmodul("4"); },
            [](F& b) { return b.eta_quotient_int({{1, 8}, {4, -8}}); });

        // ---- level 5
        add("delta5-eta-product", "5", [](F& b) { return b.form("D5"); },
            [](F& b) { return b.eta_quotient_int({{1, 4}, {5, 4}}); });
        add("e4-5-inf-combo", "5", [](F& b) { return b.group_eisenstein("5", 4, "inf"); },
            [R](F& b) {
                return R(125, 13) * (b.form("D5i") * b.form("D5o")) + int_pow(b.form("D5o"), 2);
            });
        add("e4-5-0-combo", "5", [R](F& b) { return R(13, 125) * b.group_eisenstein("5", 4, "0"); },
            [R](F& b) {
                return R(13) * int_pow(b.form("D5i"), 2) + b.form("D5i") * b.form("D5o");
            });
        add("j5-eta-quotient", "5", [](F& b) { return b.hauptmodul("5"); },
            [](F& b) { return b.eta_quotient_int({{1, 6}, {5, -6}}); });

        // ---- level 6
        add("delta6-eta-product", "6", [](F& b) { return b.form("D6"); },
            [](F& b) { return b.eta_quotient_int({{1, 2}, {2, 2}, {3, 2}, {6, 2}}); });
        add("e2p-6+6-combo", "6", [](F& b) { return b.e2_prime("6+6"); },
            [R](F& b) { return R(-72) * int_pow(b.form("D6i"), 2) + int_pow(b.form("D6o"), 2); });
        add("e2p-6+3-combo", "6", [](F& b) { return b.e2_prime("6+3"); },
            [R](F& b) {
                return R(72) * int_pow(b.form("D6i"), 2) + R(18) * (b.form("D6i") * b.form("D6o"))
                       + int_pow(b.form("D6o"), 2);
            });
        add("e2p-6+2-combo", "6", [](F& b) { return b.e2_prime("6+2"); },
            [R](F& b) {
                return R(72) * int_pow(b.form("D6i"), 2) + R(16) * (b.form("D6i") * b.form("D6o"))
                       + int_pow(b.form("D6o"), 2);
            });
        add("e4-6-inf-combo", "6", [](F& b) { return b.group_eisenstein("6", 4, "inf"); },
            [R](F& b) {
                return R(2592, 5) * (int_pow(b.form("D6i"), 3) * b.form("D6o"))
                       + R(972, 5) * (int_pow(b.form("D6i"), 2) * int_pow(b.form("D6o"), 2))
                       + R(121, 5) * (b.form("D6i") * int_pow(b.form("D6o"), 3))
                       + int_pow(b.form("D6o"), 4);
            });
        add("e4-6-0-combo", "6", [R](F& b) { return R(5, 36) * b.group_eisenstein("6", 4, "0"); },
            [R](F& b) {
                return R(720) * int_pow(b.form("D6i"), 4)
                       + R(242) * (int_pow(b.form("D6i"), 3) * b.form("D6o"))
                       + R(27) * (int_pow(b.form("D6i"), 2) * int_pow(b.form("D6o"), 2))
                       + b.form("D6i") * int_pow(b.form("D6o"), 3);
            });
        add("e4-6-half-combo", "6",
            [R](F& b) { return R(-5, 9) * b.group_eisenstein("6", 4, "-1/2"); },
            [R](F& b) {
                return R(32) * (int_pow(b.form("D6i"), 3) * b.form("D6o"))
                       + R(12) * (int_pow(b.form("D6i"), 2) * int_pow(b.form("D6o"), 2))
                       + b.form("D6i") * int_pow(b.form("D6o"), 3);
            });
        add("e4-6-third-combo", "6",
            [R](F& b) { return R(-5, 4) * b.group_eisenstein("6", 4, "-1/3"); },
            [R](F& b) {
                return R(162) * (int_pow(b.form("D6i"), 3) * b.form("D6o"))
                       + R(27) * (int_pow(b.form("D6i"), 2) * int_pow(b.form("D6o"), 2))
                       + b.form("D6i") * int_pow(b.form("D6o"), 3);
            });
        add("e4-6+6-inf-combo", "6+6", [](F& b) { return b.group_eisenstein("6+6", 4, "inf"); },
            [R](F& b) {
                return R(-13, 5) * (b.form("D66i") * b.form("D66h")) + int_pow(b.form("D66h"), 2);
            });
        add("e4-6+6-half-combo", "6+6",
            [R](F& b) { return R(-5, 13) * b.group_eisenstein("6+6", 4, "-1/2"); },
            [R](F& b) {
                return R(-5, 13) * int_pow(b.form("D66i"), 2) + b.form("D66i") * b.form("D66h");
            });
        add("e4-6+3-inf-combo", "6+3", [](F& b) { return b.group_eisenstein("6+3", 4, "inf"); },
            [R](F& b) {
                return R(32, 5) * (b.form("D63i") * b.form("D63o")) + int_pow(b.form("D63o"), 2);
            });
        add("e4-6+3-0-combo", "6+3",
            [R](F& b) { return R(5, 32) * b.group_eisenstein("6+3", 4, "0"); },
            [R](F& b) {
                return R(10) * int_pow(b.form("D63i"), 2) + b.form("D63i") * b.form("D63o");
            });
        add("e4-6+2-inf-combo", "6+2", [](F& b) { return b.group_eisenstein("6+2", 4, "inf"); },
            [R](F& b) {
                return R(27, 5) * (b.form("D62i") * b.form("D62o")) + int_pow(b.form("D62o"), 2);
            });
        add("e4-6+2-0-combo", "6+2",
            [R](F& b) { return R(5, 27) * b.group_eisenstein("6+2", 4, "0"); },
            [R](F& b) {
                return R(15) * int_pow(b.form("D62i"), 2) + b.form("D62i") * b.form("D62o");
            });
        add("j6+6-eta-quotient", "6+6", [](F& b) { return b.hauptmodul("6+6"); },
            [](F& b) { return b.eta_quotient_int({{1, -12}, {2, 12}, {3, 12}, {6, -12}}); });
        add("j6+3-eta-quotient", "6+3", [](F& b) { return b.hauptmodul("6+3"); },
            [](F& b) { return b.eta_quotient_int({{1, 6}, {2, -6}, {3, 6}, {6, -6}}); });
        add("j6+2-eta-quotient", "6+2", [](F& b) { return b.hauptmodul("6+2"); },
            [](F& b) { return b.eta_quotient_int({{1, 4}, {2, 4}, {3, -4}, {6, -4}}); });
        add("j6-eta-quotient", "6", [](F& b) { return b.hauptmodul("6"); },
            [](F& b) { return b.eta_quotient_int({{1, 5}, {2, -1}, {3, 1}, {6, -5}}); });

        // ---- level 7
        add("delta7-split", "7", [](F& b) { return b.form("D7"); },
            [](F& b) { return b.form("D7i") * b.form("D7o"); });
        add("e17p-square", "7", [](F& b) { return int_pow(b.form("E17p"), 2); },
            [](F& b) { return b.e2_prime("7"); });
        add("delta47-factors", "7+", [](F& b) { return b.form("D47"); },
            [](F& b) { return b.form("E17p") * b.form("D7"); });
        add("delta10-0-7+-factors", "7+", [](F& b) { return b.form("D1007p"); },
            [](F& b) { return b.form("E17p") * b.form("E37p") * int_pow(b.form("D7"), 2); });
        add("j7-eta-quotient", "7", [](F& b) { return b.hauptmodul("7"); },
            [](F& b) { return b.eta_quotient_int({{1, 4}, {7, -4}}); });

        // ---- level 8
        add("delta8-product", "8", [](F& b) { return b.form("D8"); },
            [](F& b) {
                return b.form("D8i") * b.form("D8o") * b.form("D8h2") * b.form("D8h4");
            });
        add("e2p8-is-scaled", "8", [](F& b) { return b.e2_prime("8"); },
            [](F& b) { return substitute_scale(b.e2_prime("2"), 4); });
        add("e4-8-inf-is-scaled", "8", [](F& b) { return b.group_eisenstein("8", 4, "inf"); },
            [](F& b) { return substitute_scale(b.group_eisenstein("2", 4, "inf"), 4); });
        add("e4-8-0-scaling", "8", [](F& b) { return b.group_eisenstein("8", 4, "0"); },
            [R](F& b) { return R(1, 16) * b.group_eisenstein("2", 4, "0"); });
        add("e4-8-half-scaling", "8", [](F& b) { return b.group_eisenstein("8", 4, "-1/2"); },
            [R](F& b) { return R(1, 16) * b.group_eisenstein("4+4", 4, "-1/2"); });
        add("e4-8-quarter-scaling", "8", [](F& b) { return b.group_eisenstein("8", 4, "-1/4"); },
            [R](F& b) {
                return R(1, 4) * substitute_scale(b.group_eisenstein("4+4", 4, "-1/2"), 2);
            });
        add("j8+8-eta-quotient", "8+8", [](F& b) { return b.hauptmodul("8+8"); },
            [](F& b) { return b.eta_quotient_int({{1, -8}, {2, 8}, {4, 8}, {8, -8}}); });
        add("j8-eta-quotient", "8", [](F& b) { return b.hauptmodul("8"); },
            [](F& b) { return b.eta_quotient_int({{1, 4}, {2, -2}, {4, 2}, {8, -4}}); });

        // ---- level 9
        add("delta9-is-eta8-3z", "9", [](F& b) { return b.form("D9"); },
            [](F& b) { return b.eta_quotient_int({{3, 8}}); });
        add("delta9-shift-pair-product", "9",
            [](F& b) { return to_rat(b.delta9_shift(1) * b.delta9_shift(-1)); },
            [](F& b) { return b.form("P93"); });
        add("e4-9-inf-is-scaled", "9", [](F& b) { return b.group_eisenstein("9", 4, "inf"); },
            [](F& b) { return substitute_scale(b.group_eisenstein("3", 4, "inf"), 3); });
        add("e4-9-0-scaling", "9", [](F& b) { return b.group_eisenstein("9", 4, "0"); },
            [R](F& b) { return R(1, 9) * b.group_eisenstein("3", 4, "0"); });
        add("j9+9-eta-quotient", "9+9", [](F& b) { return b.hauptmodul("9+9"); },
            [](F& b) { return b.eta_quotient_int({{3, 12}, {1, -6}, {9, -6}}); });
        add("j9-eta-quotient", "9", [](F& b) { return b.hauptmodul("9"); },
            [](F& b) { return b.eta_quotient_int({{1, 3}, {9, -3}}); });

        // ---- level 10
        add("delta10-inf-cube", "10", [](F& b) { return int_pow(b.form("D10i"), 3); },
            [](F& b) { return b.eta_quotient_int({{1, 1}, {2, -2}, {5, -5}, {10, 10}}); });
        add("delta10-product", "10", [](F& b) { return b.form("D10"); },
            [](F& b) {
                return b.form("D10i") * b.form("D10o") * b.form("D10h2") * b.form("D10h5");
            });
        add("e23-10-cube", "10", [](F& b) { return int_pow(b.form("E23_10"), 3); },
            [](F& b) { return b.e2_prime("10+2"); });
        add("e83-10-relation", "10",
            [](F& b) { return b.form("E83_10") * int_pow(b.form("E23_10"), 2); },
            [](F& b) { return b.e2_prime("10+10") * b.e2_prime("10+5"); });
        add("j10+10-eta-quotient", "10+10", [](F& b) { return b.hauptmodul("10+10"); },
            [](F& b) { return b.eta_quotient_int({{1, -6}, {2, 6}, {5, 6}, {10, -6}}); });
        add("j10+5-eta-quotient", "10+5", [](F& b) { return b.hauptmodul("10+5"); },
            [](F& b) { return b.eta_quotient_int({{1, 4}, {2, -4}, {5, 4}, {10, -4}}); });
        add("j10+2-eta-quotient", "10+2", [](F& b) { return b.hauptmodul("10+2"); },
            [](F& b) { return b.eta_quotient_int({{1, 2}, {2, 2}, {5, -2}, {10, -2}}); });
        add("j10-eta-quotient", "10", [](F& b) { return b.hauptmodul("10"); },
            [](F& b) { return b.eta_quotient_int({{1, 3}, {2, -1}, {5, 1}, {10, -3}}); });

        // ---- level 11
        add("delta11-inf-fifth-power", "11", [](F& b) { return int_pow(b.form("D11i"), 5); },
            [](F& b) { return b.eta_quotient_int({{11, 11}, {1, -1}}); });
        add("delta11-split", "11", [](F& b) { return b.form("D11"); },
            [](F& b) { return b.form("D11i") * b.form("D11o"); });

        // ---- level 12
        add("delta12-inf-square", "12", [](F& b) { return int_pow(b.form("D12i"), 2); },
            [](F& b) { return b.eta_quotient_int({{2, 1}, {4, -2}, {6, -3}, {12, 6}}); });
        add("e1-12+12-square", "12", [](F& b) { return int_pow(b.form("E11212"), 2); },
            [](F& b) { return b.e2_prime("sq:1,12+12"); });
        add("e1-12+3-square", "12", [](F& b) { return int_pow(b.form("E1123"), 2); },
            [](F& b) { return b.e2_prime("sq:1,12+3"); });
        add("e4-12-inf-is-scaled", "12", [](F& b) { return b.group_eisenstein("12", 4, "inf"); },
            [](F& b) { return substitute_scale(b.group_eisenstein("6", 4, "inf"), 2); });
        add("e4-12+3-inf-is-scaled", "12+3",
            [](F& b) { return b.group_eisenstein("12+3", 4, "inf"); },
            [](F& b) { return substitute_scale(b.group_eisenstein("6+3", 4, "inf"), 2); });
        add("e4-12+3-0-scaling", "12+3", [](F& b) { return b.group_eisenstein("12+3", 4, "0"); },
            [R](F& b) { return R(1, 4) * b.group_eisenstein("6+3", 4, "0"); });
        add("e4-12+12-half-scaling", "12+12",
            [](F& b) { return b.group_eisenstein("12+12", 4, "-1/2"); },
            [R](F& b) { return R(1, 8) * b.group_eisenstein("12+", 4, "-1/2"); });
        add("e4-12-0-scaling", "12", [](F& b) { return b.group_eisenstein("12", 4, "0"); },
            [R](F& b) { return R(1, 4) * b.group_eisenstein("6", 4, "0"); });
        add("e4-12-third-scaling", "12", [](F& b) { return b.group_eisenstein("12", 4, "-1/3"); },
            [R](F& b) { return R(1, 4) * b.group_eisenstein("6", 4, "-1/3"); });
        add("e4-12-quarter-is-scaled", "12",
            [](F& b) { return b.group_eisenstein("12", 4, "-1/4"); },
            [](F& b) { return substitute_scale(b.group_eisenstein("6", 4, "-1/2"), 2); });
        add("e4-12-sixth-scaling", "12", [](F& b) { return b.group_eisenstein("12", 4, "-1/6"); },
            [R](F& b) { return R(1, 8) * b.group_eisenstein("12+4", 4, "-1/6"); });
        add("e4-12+4-inf-conjugate", "12+4",
            [](F& b) { return b.group_eisenstein("12+4", 4, "inf"); },
            [](F& b) { return shift_character_rat(b.group_eisenstein("6", 4, "inf"), Rat(1, 2)); });
        add("e4-12+-inf-conjugate", "12+",
            [](F& b) { return b.group_eisenstein("12+", 4, "inf"); },
            [](F& b) {
                return shift_character_rat(b.group_eisenstein("6+3", 4, "inf"), Rat(1, 2));
            });
        add("e6-12+12-inf-conjugation-free", "12+12",
            [](F& b) { return b.group_eisenstein("12+12", 6, "inf").coeff_int(0) == 1
                              ? FracSeries::constant(Rat(1), Rat(1))
                              : FracSeries::zero(Rat(1)); },
            [](F& b) { return FracSeries::constant(Rat(1), Rat(1)); });
        add("j12+-eta-quotient", "12+", [](F& b) { return b.hauptmodul("12+"); },
            [](F& b) {
                return b.eta_quotient_int({{1, -6}, {2, 12}, {3, -6}, {4, -6}, {6, 12}, {12, -6}});
            });
        add("j12+-conjugate-of-j6+3", "12+", [](F& b) { return b.hauptmodul("12+"); },
            [](F& b) { return -shift_character_rat(b.hauptmodul("6+3"), Rat(1, 2)); });
        add("j12+12-eta-quotient", "12+12", [](F& b) { return b.hauptmodul("12+12"); },
            [](F& b) { return b.eta_quotient_int({{1, -4}, {3, 4}, {4, 4}, {12, -4}}); });
        add("j12+4-eta-quotient", "12+4", [](F& b) { return b.hauptmodul("12+4"); },
            [](F& b) {
                return b.eta_quotient_int({{1, 4}, {2, -4}, {3, -4}, {4, 4}, {6, 4}, {12, -4}});
            });
        add("j12+4-conjugate-of-j6", "12+4", [](F& b) { return b.hauptmodul("12+4"); },
            [](F& b) { return -shift_character_rat(b.hauptmodul("6"), Rat(1, 2)); });
        add("j12+3-eta-quotient", "12+3", [](F& b) { return b.hauptmodul("12+3"); },
            [](F& b) { return b.eta_quotient_int({{1, 2}, {3, 2}, {4, -2}, {12, -2}}); });
        add("j12-eta-quotient", "12", [](F& b) { return b.hauptmodul("12"); },
            [](F& b) {
                return b.eta_quotient_int({{1, 3}, {2, -2}, {3, -1}, {4, 1}, {6, 2}, {12, -3}});
            });
        return v;
    }();
    return reg;
}

inline std::vector<IdentityResult> identity_suite(FormBook& book, const std::string& group = "") {
    std::vector<IdentityResult> out;
    Rat upto = Rat(book.order()) - 8;  // forms built by division/roots lose headroom
    for (const auto& ident : identity_registry()) {
        if (!group.empty() && ident.group != group) continue;
        FracSeries l = ident.lhs(book);
        FracSeries r = ident.rhs(book);
        auto mism = first_mismatch(l, r, upto);
        out.push_back({ident.id, !mism.has_value(), mism});
    }
    return out;
}

}  // namespace modzero
