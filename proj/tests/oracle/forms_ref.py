"""Exact reference constructions for all named forms, level by level.

Used to validate transcribed data (expansions, identities, scalars) before it
is frozen into the C++ catalog and test goldens.
"""

from fractions import Fraction as Fr
from qexact import QS, const, eta_quotient, Ek

ORDER = Fr(32)


def EQ(*factors):
    return eta_quotient(list(factors), ORDER)


def E(k, d=1):
    return Ek(k, d, ORDER)


def E2(d=1):
    return Ek(2, d, ORDER)


def combo(pairs, den):
    """pairs: list of (coeff, series); returns sum/den."""
    r = None
    for c, s in pairs:
        t = Fr(c) * s
        r = t if r is None else r + t
    return Fr(1, Fr(den).numerator) * r if den == 1 else (Fr(1) / Fr(den)) * r


def build():
    F = {}
    # ---------------- level 1
    F["E4"] = E(4)
    F["E6"] = E(6)
    F["Delta"] = Fr(1, 1728) * (F["E4"].pow_int(3) - F["E6"].pow_int(2))
    F["eta24"] = EQ((1, 24))
    F["J:1"] = F["E4"].pow_int(3) * F["Delta"].recip()

    # ---------------- level 2
    F["D2i"] = EQ((2, 16), (1, -8))
    F["D2o"] = EQ((1, 16), (2, -8))
    F["D2"] = F["D2i"] * F["D2o"]
    F["E22p"] = combo([(2, E2(2)), (-1, E2(1))], 1)
    for k in (4, 6, 8, 10):
        F["E%d2p" % k] = combo([(2 ** (k // 2), E(k, 2)), (1, E(k, 1))], 2 ** (k // 2) + 1)
        F["E%d2inf" % k] = combo([(2 ** k, E(k, 2)), (-1, E(k, 1))], 2 ** k - 1)
        F["E%d20" % k] = combo([(-2 ** (k // 2), E(k, 2)), (2 ** (k // 2), E(k, 1))], 2 ** k - 1)
    F["J:2+"] = F["E42p"].pow_int(2) * F["D2"].recip()
    F["J:2"] = F["D2o"] * F["D2i"].recip()

    # ---------------- level 3
    F["D3i"] = EQ((3, 9), (1, -3))
    F["D3o"] = EQ((1, 9), (3, -3))
    F["D3"] = F["D3i"] * F["D3o"]
    F["E23p"] = combo([(3, E2(3)), (-1, E2(1))], 2)
    for k in (4, 6, 8, 10):
        F["E%d3p" % k] = combo([(3 ** (k // 2), E(k, 3)), (1, E(k, 1))], 3 ** (k // 2) + 1)
        F["E%d3inf" % k] = combo([(3 ** k, E(k, 3)), (-1, E(k, 1))], 3 ** k - 1)
        F["E%d30" % k] = combo([(-3 ** (k // 2), E(k, 3)), (3 ** (k // 2), E(k, 1))], 3 ** k - 1)
    F["E13p"] = F["E23p"].pow_frac(Fr(1, 2))
    F["E43q"] = F["E63p"] * F["E23p"].recip()   # second-root form E'_{4,3}
    F["J:3+"] = F["E23p"].pow_int(3) * F["D3"].recip()
    F["J:3"] = F["D3o"] * F["D3i"].recip()

    # ---------------- level 4
    F["D4i"] = EQ((4, 8), (2, -4))
    F["D4o"] = EQ((1, 8), (2, -4))
    F["D4h"] = EQ((2, 20), (1, -8), (4, -8))
    F["D4"] = F["D4i"] * F["D4o"] * F["D4h"]
    F["D44"] = F["D4"] * F["D4h"]
    F["E24p"] = combo([(2, E2(4)), (-1, E2(2))], 1)
    F["E244p"] = combo([(4, E2(4)), (-4, E2(2)), (1, E2(1))], 1)
    for k in (4, 6):
        F["E%d44inf" % k] = combo([(2 ** k, E(k, 4)), (-2, E(k, 2)), (1, E(k, 1))], 2 ** k - 1)
        F["E%d44h" % k] = combo([(-2 ** (k // 2) * 2 ** k, E(k, 4)), (2 ** (k // 2) * (2 ** k + 1), E(k, 2)), (-2 ** (k // 2), E(k, 1))], 2 ** k - 1)
        F["E%d4inf" % k] = combo([(2 ** k, E(k, 4)), (-1, E(k, 2))], 2 ** k - 1)
        F["E%d40" % k] = combo([(-1, E(k, 2)), (1, E(k, 1))], 2 ** k - 1)
        F["E%d4h" % k] = combo([(-2 ** k, E(k, 4)), (2 ** k + 1, E(k, 2)), (-1, E(k, 1))], 2 ** k - 1)
    F["D44i"] = F["D4i"] * F["D4o"]
    F["D44h"] = F["D4h"].pow_int(2)
    F["J:4+4"] = F["D44h"] * F["D44i"].recip()
    F["J:4"] = F["D4o"] * F["D4i"].recip()

    # ---------------- level 5
    F["D5i"] = EQ((5, 5), (1, -1))
    F["D5o"] = EQ((1, 5), (5, -1))
    F["D5"] = F["D5i"] * F["D5o"]
    F["E25p"] = combo([(5, E2(5)), (-1, E2(1))], 4)
    for k in (4, 6):
        F["E%d5p" % k] = combo([(5 ** (k // 2), E(k, 5)), (1, E(k, 1))], 5 ** (k // 2) + 1)
        F["E%d5inf" % k] = combo([(5 ** k, E(k, 5)), (-1, E(k, 1))], 5 ** k - 1)
        F["E%d50" % k] = combo([(-5 ** (k // 2), E(k, 5)), (5 ** (k // 2), E(k, 1))], 5 ** k - 1)
    F["J:5+"] = F["E25p"].pow_int(2) * F["D5"].recip()
    F["J:5"] = F["D5o"] * F["D5i"].recip()

    # ---------------- level 6
    F["D6i"] = EQ((1, 1), (2, -2), (3, -3), (6, 6))
    F["D6o"] = EQ((1, 6), (2, -3), (3, -2), (6, 1))
    F["D6h2"] = EQ((1, -3), (2, 6), (3, 1), (6, -2))
    F["D6h3"] = EQ((1, -2), (2, 1), (3, 6), (6, -3))
    F["D6"] = F["D6i"] * F["D6o"] * F["D6h2"] * F["D6h3"]
    F["E26p6"] = combo([(6, E2(6)), (-3, E2(3)), (-2, E2(2)), (1, E2(1))], 2)
    F["E26p3"] = combo([(6, E2(6)), (-3, E2(3)), (2, E2(2)), (-1, E2(1))], 4)
    F["E26p2"] = combo([(6, E2(6)), (3, E2(3)), (-2, E2(2)), (-1, E2(1))], 6)
    for k in (4, 6):
        h = k // 2
        F["E%d6p" % k] = combo([(6 ** h, E(k, 6)), (3 ** h, E(k, 3)), (2 ** h, E(k, 2)), (1, E(k, 1))],
                               (3 ** h + 1) * (2 ** h + 1))
        F["E%d66inf" % k] = combo([((6 ** h + 1) * 6 ** h, E(k, 6)), (6 ** h + 1, E(k, 1)),
                                   (-(3 ** h + 2 ** h) * 3 ** h, E(k, 3)), (-(3 ** h + 2 ** h) * 2 ** h, E(k, 2))],
                                  (3 ** k - 1) * (2 ** k - 1))
        F["E%d66h" % k] = combo([(-(3 ** h + 2 ** h) * 6 ** h, E(k, 6)), (-(3 ** h + 2 ** h), E(k, 1)),
                                 ((6 ** h + 1) * 3 ** h, E(k, 3)), ((6 ** h + 1) * 2 ** h, E(k, 2))],
                                (3 ** k - 1) * (2 ** k - 1))
        F["E%d63inf" % k] = combo([(2 ** k * 3 ** h, E(k, 6)), (-3 ** h, E(k, 3)), (2 ** k, E(k, 2)), (-1, E(k, 1))],
                                  (3 ** h + 1) * (2 ** k - 1))
        F["E%d630" % k] = combo([(-2 ** h * 3 ** h, E(k, 6)), (2 ** h * 3 ** h, E(k, 3)), (-2 ** h, E(k, 2)), (2 ** h, E(k, 1))],
                                (3 ** h + 1) * (2 ** k - 1))
        F["E%d62inf" % k] = combo([(2 ** h * 3 ** k, E(k, 6)), (3 ** k, E(k, 3)), (-2 ** h, E(k, 2)), (-1, E(k, 1))],
                                  (3 ** k - 1) * (2 ** h + 1))
        F["E%d620" % k] = combo([(-3 ** h * 2 ** h, E(k, 6)), (-3 ** h, E(k, 3)), (3 ** h * 2 ** h, E(k, 2)), (3 ** h, E(k, 1))],
                                (3 ** k - 1) * (2 ** h + 1))
        F["E%d6inf" % k] = combo([(6 ** k, E(k, 6)), (-3 ** k, E(k, 3)), (-2 ** k, E(k, 2)), (1, E(k, 1))],
                                 (3 ** k - 1) * (2 ** k - 1))
        F["E%d60" % k] = combo([(6 ** h, E(k, 6)), (-6 ** h, E(k, 3)), (-6 ** h, E(k, 2)), (6 ** h, E(k, 1))],
                               (3 ** k - 1) * (2 ** k - 1))
        F["E%d6h2" % k] = combo([(-3 ** h * 2 ** k, E(k, 6)), (3 ** h, E(k, 3)), (3 ** h * 2 ** k, E(k, 2)), (-3 ** h, E(k, 1))],
                                (3 ** k - 1) * (2 ** k - 1))
        F["E%d6h3" % k] = combo([(-2 ** h * 3 ** k, E(k, 6)), (2 ** h * 3 ** k, E(k, 3)), (2 ** h, E(k, 2)), (-2 ** h, E(k, 1))],
                                (3 ** k - 1) * (2 ** k - 1))
    F["D66i"] = F["D6i"] * F["D6o"]
    F["D66h"] = F["D6h2"] * F["D6h3"]
    F["D63i"] = F["D6i"] * F["D6h2"]
    F["D63o"] = F["D6o"] * F["D6h3"]
    F["D62i"] = F["D6i"] * F["D6h3"]
    F["D62o"] = F["D6o"] * F["D6h2"]
    F["J:6+"] = F["E26p2"].pow_int(2) * F["D6"].recip()
    F["J:6+6"] = F["D66h"] * F["D66i"].recip()
    F["J:6+3"] = F["D63o"] * F["D63i"].recip()
    F["J:6+2"] = F["D62o"] * F["D62i"].recip()
    F["J:6"] = F["D6o"] * F["D6i"].recip()

    # ---------------- level 7
    F["D7i"] = EQ((7, 7), (1, -1)).pow_frac(Fr(1, 2))
    F["D7o"] = EQ((1, 7), (7, -1)).pow_frac(Fr(1, 2))
    F["D7"] = EQ((1, 3), (7, 3))
    F["E27p"] = combo([(7, E2(7)), (-1, E2(1))], 6)
    F["E17p"] = F["E27p"].pow_frac(Fr(1, 2))
    for k in (4, 6, 10):
        F["E%d7p" % k] = combo([(7 ** (k // 2), E(k, 7)), (1, E(k, 1))], 7 ** (k // 2) + 1)
    for k in (4, 6):
        F["E%d7inf" % k] = combo([(7 ** k, E(k, 7)), (-1, E(k, 1))], 7 ** k - 1)
        F["E%d70" % k] = combo([(-7 ** (k // 2), E(k, 7)), (7 ** (k // 2), E(k, 1))], 7 ** k - 1)
    F["D47"] = Fr(5, 16) * (F["E27p"].pow_int(2) - F["E47p"])
    F["D1007p"] = Fr(559, 690) * (Fr(41065, 137592) * (F["E47p"] * F["E67p"] - F["E107p"]) - F["E67p"] * F["D47"])
    F["E37p"] = F["D1007p"] * (F["D47"] * F["D7"]).recip()
    F["J:7+"] = F["E17p"].pow_int(3) * F["D7"].recip()
    F["J:7"] = F["D7o"] * F["D7i"].recip()

    # ---------------- level 8
    F["D8i"] = EQ((8, 4), (4, -2))
    F["D8o"] = EQ((1, 4), (2, -2))
    F["D8h2"] = EQ((2, 10), (1, -4), (4, -4))
    F["D8h4"] = EQ((4, 10), (2, -4), (8, -4))
    F["D8"] = EQ((2, 4), (4, 4))
    F["E28p"] = combo([(2, E2(8)), (-1, E2(4))], 1)
    F["E288p"] = combo([(8, E2(8)), (-4, E2(4)), (-2, E2(2)), (1, E2(1))], 3)
    for k in (4, 6):
        h = k // 2
        F["E%d88inf" % k] = combo([(2 ** (3 * h), E(k, 8)), (-2 ** h, E(k, 4)), (-1, E(k, 2)), (1, E(k, 1))],
                                  2 ** h * (2 ** k - 1))
        F["E%d88h" % k] = combo([(-2 ** (3 * h), E(k, 8)), (2 ** h * (2 ** k - 2 ** h + 1), E(k, 4)),
                                 (2 ** k - 2 ** h + 1, E(k, 2)), (-1, E(k, 1))], 2 ** h * (2 ** k - 1))
        F["E%d8inf" % k] = combo([(2 ** k, E(k, 8)), (-1, E(k, 4))], 2 ** k - 1)
        F["E%d80" % k] = combo([(-1, E(k, 2)), (1, E(k, 1))], 2 ** h * (2 ** k - 1))
        F["E%d8h2" % k] = combo([(-2 ** k, E(k, 4)), (2 ** k + 1, E(k, 2)), (-1, E(k, 1))], 2 ** h * (2 ** k - 1))
        F["E%d8h4" % k] = combo([(-2 ** k, E(k, 8)), (2 ** k + 1, E(k, 4)), (-1, E(k, 2))], 2 ** k - 1)
    F["D88i"] = F["D8i"] * F["D8o"]
    F["D88h"] = F["D8h2"] * F["D8h4"]
    F["J:8+8"] = F["D88h"] * F["D88i"].recip()
    F["J:8"] = F["D8o"] * F["D8i"].recip()

    # ---------------- level 9 (shifted factors handled via their pair product)
    F["D9i"] = EQ((9, 3), (3, -1))
    F["D9o"] = EQ((1, 3), (3, -1))
    F["P93"] = EQ((3, 10), (1, -3), (9, -3))      # D9^{-1/3} * D9^{1/3}
    F["D9"] = F["D9i"] * F["D9o"] * F["P93"]
    F["D99i"] = F["D9i"] * F["D9o"]
    F["D99h3"] = F["P93"]
    F["E29"] = combo([(3, E2(9)), (-1, E2(3))], 2)
    F["E299"] = combo([(9, E2(9)), (-6, E2(3)), (1, E2(1))], 3)
    for k in (4, 6):
        F["E%d99inf" % k] = combo([(3 ** k, E(k, 9)), (-2, E(k, 3)), (1, E(k, 1))], 3 ** k - 1)
        F["E%d99h3" % k] = combo([(-3 ** k, E(k, 9)), (3 ** k + 1, E(k, 3)), (-1, E(k, 1))], 3 ** k - 1)
        F["E%d9inf" % k] = combo([(3 ** k, E(k, 9)), (-1, E(k, 3))], 3 ** k - 1)
        F["E%d90" % k] = combo([(-1, E(k, 3)), (1, E(k, 1))], 3 ** k - 1)
    F["J:9+9"] = F["D99h3"] * F["D99i"].recip()
    F["J:9"] = F["D9o"] * F["D9i"].recip()

    # ---------------- level 10
    F["D10i"] = EQ((1, 1), (2, -2), (5, -5), (10, 10)).pow_frac(Fr(1, 3))
    F["D10o"] = EQ((1, 10), (2, -5), (5, -2), (10, 1)).pow_frac(Fr(1, 3))
    F["D10h2"] = EQ((1, -5), (2, 10), (5, 1), (10, -2)).pow_frac(Fr(1, 3))
    F["D10h5"] = EQ((1, -2), (2, 1), (5, 10), (10, -5)).pow_frac(Fr(1, 3))
    F["D10"] = EQ((1, 4), (2, 4), (5, 4), (10, 4)).pow_frac(Fr(1, 3))
    F["E210p10"] = combo([(10, E2(10)), (-5, E2(5)), (-2, E2(2)), (1, E2(1))], 4)
    F["E210p5"] = combo([(10, E2(10)), (-5, E2(5)), (2, E2(2)), (-1, E2(1))], 6)
    F["E210p2"] = combo([(10, E2(10)), (5, E2(5)), (-2, E2(2)), (-1, E2(1))], 12)
    F["E23_10"] = F["E210p2"].pow_frac(Fr(1, 3))
    F["E83_10"] = F["E210p10"] * F["E210p5"] * F["E23_10"].pow_int(2).recip()
    for k in (4, 6):
        h = k // 2
        F["E%d10p" % k] = combo([(10 ** h, E(k, 10)), (5 ** h, E(k, 5)), (2 ** h, E(k, 2)), (1, E(k, 1))],
                                (5 ** h + 1) * (2 ** h + 1))
        F["E%d1010inf" % k] = combo([((10 ** h + 1) * 10 ** h, E(k, 10)), (10 ** h + 1, E(k, 1)),
                                     (-(5 ** h + 2 ** h) * 5 ** h, E(k, 5)), (-(5 ** h + 2 ** h) * 2 ** h, E(k, 2))],
                                    (5 ** k - 1) * (2 ** k - 1))
        F["E%d1010h" % k] = combo([(-(5 ** h + 2 ** h) * 10 ** h, E(k, 10)), (-(5 ** h + 2 ** h), E(k, 1)),
                                   ((10 ** h + 1) * 5 ** h, E(k, 5)), ((10 ** h + 1) * 2 ** h, E(k, 2))],
                                  (5 ** k - 1) * (2 ** k - 1))
        F["E%d105inf" % k] = combo([(2 ** k * 5 ** h, E(k, 10)), (-5 ** h, E(k, 5)), (2 ** k, E(k, 2)), (-1, E(k, 1))],
                                   (5 ** h + 1) * (2 ** k - 1))
        F["E%d1050" % k] = combo([(-2 ** h * 5 ** h, E(k, 10)), (2 ** h * 5 ** h, E(k, 5)), (-2 ** h, E(k, 2)), (2 ** h, E(k, 1))],
                                 (5 ** h + 1) * (2 ** k - 1))
        F["E%d102inf" % k] = combo([(2 ** h * 5 ** k, E(k, 10)), (5 ** k, E(k, 5)), (-2 ** h, E(k, 2)), (-1, E(k, 1))],
                                   (5 ** k - 1) * (2 ** h + 1))
        F["E%d1020" % k] = combo([(-5 ** h * 2 ** h, E(k, 10)), (-5 ** h, E(k, 5)), (5 ** h * 2 ** h, E(k, 2)), (5 ** h, E(k, 1))],
                                 (5 ** k - 1) * (2 ** h + 1))
        F["E%d10inf" % k] = combo([(10 ** k, E(k, 10)), (-5 ** k, E(k, 5)), (-2 ** k, E(k, 2)), (1, E(k, 1))],
                                  (5 ** k - 1) * (2 ** k - 1))
        F["E%d100" % k] = combo([(10 ** h, E(k, 10)), (-10 ** h, E(k, 5)), (-10 ** h, E(k, 2)), (10 ** h, E(k, 1))],
                                (5 ** k - 1) * (2 ** k - 1))
        F["E%d10h2" % k] = combo([(-5 ** h * 2 ** k, E(k, 10)), (5 ** h, E(k, 5)), (5 ** h * 2 ** k, E(k, 2)), (-5 ** h, E(k, 1))],
                                 (5 ** k - 1) * (2 ** k - 1))
        F["E%d10h5" % k] = combo([(-2 ** h * 5 ** k, E(k, 10)), (2 ** h * 5 ** k, E(k, 5)), (2 ** h, E(k, 2)), (-2 ** h, E(k, 1))],
                                 (5 ** k - 1) * (2 ** k - 1))
    F["D1010i"] = F["D10i"] * F["D10o"]
    F["D1010h"] = F["D10h2"] * F["D10h5"]
    F["D105i"] = F["D10i"] * F["D10h2"]
    F["D105o"] = F["D10o"] * F["D10h5"]
    F["D102i"] = F["D10i"] * F["D10h5"]
    F["D102o"] = F["D10o"] * F["D10h2"]
    F["J:10+"] = F["E23_10"].pow_int(4) * F["D10"].recip()
    F["J:10+10"] = F["D1010h"] * F["D1010i"].recip()
    F["J:10+5"] = F["D105o"] * F["D105i"].recip()
    F["J:10+2"] = F["D102o"] * F["D102i"].recip()
    F["J:10"] = F["D10o"] * F["D10i"].recip()

    # ---------------- level 11
    F["D11i"] = EQ((11, 11), (1, -1)).pow_frac(Fr(1, 5))
    F["D11o"] = EQ((1, 11), (11, -1)).pow_frac(Fr(1, 5))
    F["D11"] = EQ((1, 2), (11, 2))
    F["E211"] = combo([(11, E2(11)), (-1, E2(1))], 10)
    for k in (4,):
        F["E%d11p" % k] = combo([(11 ** (k // 2), E(k, 11)), (1, E(k, 1))], 11 ** (k // 2) + 1)
        F["E%d11inf" % k] = combo([(11 ** k, E(k, 11)), (-1, E(k, 1))], 11 ** k - 1)
        F["E%d110" % k] = combo([(-11 ** (k // 2), E(k, 11)), (11 ** (k // 2), E(k, 1))], 11 ** k - 1)
    F["E411q"] = Fr(1, 1525) * (Fr(-1525) * F["E211"].pow_int(2) + Fr(4320) * F["E211"] * F["D11"]
                                + Fr(2016) * F["D11"].pow_int(2) + Fr(3050) * F["E411inf"])
    F["J:11+"] = F["E211"] * F["D11"].recip()

    # ---------------- level 12
    F["D12i"] = EQ((2, 1), (4, -2), (6, -3), (12, 6)).pow_frac(Fr(1, 2))
    F["D12o"] = EQ((1, 6), (2, -3), (3, -2), (6, 1)).pow_frac(Fr(1, 2))
    F["D12h3"] = EQ((1, -2), (2, 1), (3, 6), (6, -3)).pow_frac(Fr(1, 2))
    F["D12h4"] = EQ((2, -3), (4, 6), (6, 1), (12, -2)).pow_frac(Fr(1, 2))
    F["D12h2"] = EQ((1, -6), (2, 15), (3, 2), (4, -6), (6, -5), (12, 2)).pow_frac(Fr(1, 2))
    # (12, -6) here: the printed (12, -2) is inconsistent in weight and with J12+
    F["D12h6"] = EQ((1, 2), (2, -5), (3, -6), (4, 2), (6, 15), (12, -6)).pow_frac(Fr(1, 2))
    F["D12"] = F["D12i"] * F["D12o"] * F["D12h3"] * F["D12h4"] * F["D12h2"] * F["D12h6"]
    F["D12p"] = F["D12"] * F["D12h2"] * F["D12h6"]
    F["E212p"] = combo([(12, E2(12)), (-12, E2(6)), (4, E2(4)), (3, E2(3)), (-4, E2(2)), (1, E2(1))], 4)
    F["C11212"] = combo([(-12, E2(12)), (18, E2(6)), (4, E2(4)), (-3, E2(3)), (-6, E2(2)), (1, E2(1))], 2)
    F["E11212"] = F["C11212"].pow_frac(Fr(1, 2))
    F["C1123"] = combo([(3, E2(6)), (-1, E2(1))], 2)
    F["E1123"] = F["C1123"].pow_frac(Fr(1, 2))
    for k in (4, 6):
        h = k // 2
        F["E%d12pinf" % k] = combo([(2 ** k * 3 ** h, E(k, 12)), (-2 * 3 ** h, E(k, 6)), (2 ** k, E(k, 4)),
                                    (3 ** h, E(k, 3)), (-2, E(k, 2)), (1, E(k, 1))], (3 ** h + 1) * (2 ** k - 1))
        F["E%d12ph" % k] = combo([(-2 * 2 ** h * 2 ** k * 3 ** h, E(k, 12)), (2 * 2 ** h * 3 ** h * (2 ** k + 1), E(k, 6)),
                                  (-2 * 2 ** h * 2 ** k, E(k, 4)), (-2 * 2 ** h * 3 ** h, E(k, 3)),
                                  (2 * 2 ** h * (2 ** k + 1), E(k, 2)), (-2 * 2 ** h, E(k, 1))], (3 ** h + 1) * (2 ** k - 1))
        F["E%d1212inf" % k] = combo([(2 ** k * 3 ** k, E(k, 12)), (3 ** h * (3 ** h - 1), E(k, 6)),
                                     (-2 ** k * 3 ** h, E(k, 4)), (-3 ** k, E(k, 3)),
                                     (-(3 ** h - 1), E(k, 2)), (1, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
        F["E%d1212h3" % k] = combo([(-2 ** k * 3 ** h, E(k, 12)), (-3 ** h * (3 ** h - 1), E(k, 6)),
                                    (2 ** k * 3 ** h, E(k, 4)), (3 ** k, E(k, 3)),
                                    (-(3 ** h - 1), E(k, 2)), (-1, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
        F["E%d1212h2" % k] = combo([(-2 ** k * 3 ** h, E(k, 12)), (3 ** h * (2 ** k + 1), E(k, 6)),
                                    (-2 ** k, E(k, 4)), (-3 ** h, E(k, 3)), (2 ** k + 1, E(k, 2)), (-1, E(k, 1))],
                                   (3 ** h + 1) * (2 ** k - 1))
        F["E%d124inf" % k] = combo([(2 ** k * 3 ** k, E(k, 12)), (-2 * 3 ** k, E(k, 6)), (-2 ** k, E(k, 4)),
                                    (3 ** k, E(k, 3)), (1, E(k, 2)), (-1, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
        F["E%d1240" % k] = combo([(3 ** h * 2 ** k, E(k, 12)), (-2 * 3 ** h, E(k, 6)), (-3 ** h * 2 ** k, E(k, 4)),
                                  (3 ** h, E(k, 3)), (2 * 3 ** h, E(k, 2)), (-3 ** h, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
        F["E%d124h2" % k] = combo([(2 * 2 ** h * 3 ** h * 2 ** k * 3 ** k, E(k, 12)), (-2 * 2 ** h * 3 ** h * 3 ** k * (2 ** k + 1), E(k, 6)),
                                   (-2 * 2 ** h * 3 ** h * 2 ** k, E(k, 4)), (2 * 2 ** h * 3 ** h * 3 ** k, E(k, 3)),
                                   (2 * 2 ** h * 3 ** h * (2 ** k + 1), E(k, 2)), (-2 * 2 ** h * 3 ** h, E(k, 1))],
                                  (3 ** k - 1) * (2 ** k - 1))
        F["E%d124h6" % k] = combo([(-2 * 2 ** h * 2 ** k * 3 ** h, E(k, 12)), (2 * 2 ** h * 3 ** h * (2 ** k + 1), E(k, 6)),
                                   (-2 * 2 ** h * 2 ** k, E(k, 4)), (-2 * 2 ** h * 3 ** h, E(k, 3)),
                                   (2 * 2 ** h * (2 ** k + 1), E(k, 2)), (-2 * 2 ** h, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
        F["E%d123inf" % k] = combo([(2 ** k * 3 ** h, E(k, 12)), (-3 ** h, E(k, 6)), (2 ** k, E(k, 4)), (-1, E(k, 2))],
                                   (3 ** h + 1) * (2 ** k - 1))
        F["E%d1230" % k] = combo([(-3 ** h, E(k, 6)), (3 ** h, E(k, 3)), (-1, E(k, 2)), (1, E(k, 1))],
                                 (3 ** h + 1) * (2 ** k - 1))
        F["E%d12inf" % k] = combo([(2 ** k * 3 ** k, E(k, 12)), (-3 ** k, E(k, 6)), (-2 ** k, E(k, 4)), (1, E(k, 2))],
                                  (3 ** k - 1) * (2 ** k - 1))
        F["E%d120" % k] = combo([(3 ** h, E(k, 6)), (-3 ** h, E(k, 3)), (-3 ** h, E(k, 2)), (3 ** h, E(k, 1))],
                                (3 ** k - 1) * (2 ** k - 1))
        F["E%d12h3" % k] = combo([(-3 ** k, E(k, 6)), (3 ** k, E(k, 3)), (1, E(k, 2)), (-1, E(k, 1))],
                                 (3 ** k - 1) * (2 ** k - 1))
        F["E%d12h4" % k] = combo([(-3 ** h * 2 ** k, E(k, 12)), (3 ** h, E(k, 6)), (3 ** h * 2 ** k, E(k, 4)), (-3 ** h, E(k, 2))],
                                 (3 ** k - 1) * (2 ** k - 1))
        F["E%d12h2" % k] = combo([(3 ** h * 2 ** k * 3 ** k, E(k, 12)), (-3 ** h * 3 ** k * (2 ** k + 1), E(k, 6)),
                                  (-3 ** h * 2 ** k, E(k, 4)), (3 ** h * 3 ** k, E(k, 3)),
                                  (3 ** h * (2 ** k + 1), E(k, 2)), (-3 ** h, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
        F["E%d12h6" % k] = combo([(-2 ** k * 3 ** h, E(k, 12)), (3 ** h * (2 ** k + 1), E(k, 6)), (-2 ** k, E(k, 4)),
                                  (-3 ** h, E(k, 3)), (2 ** k + 1, E(k, 2)), (-1, E(k, 1))], (3 ** k - 1) * (2 ** k - 1))
    F["D12pi"] = F["D12i"] * F["D12o"] * F["D12h3"] * F["D12h4"]
    F["D12ph"] = (F["D12h2"] * F["D12h6"]).pow_int(2)
    F["D1212i"] = F["D12i"] * F["D12o"]
    F["D1212h3"] = F["D12h3"] * F["D12h4"]
    F["D1212h2"] = F["D12h2"] * F["D12h6"]
    F["D124i"] = F["D12i"] * F["D12h3"]
    F["D124o"] = F["D12o"] * F["D12h4"]
    F["D124h2"] = F["D12h2"].pow_int(2)
    F["D124h6"] = F["D12h6"].pow_int(2)
    F["D123i"] = F["D12i"] * F["D12h4"]
    F["D123o"] = F["D12o"] * F["D12h3"]
    F["D123h"] = F["D12h2"] * F["D12h6"]
    F["J:12+"] = F["D12ph"] * F["D12pi"].recip()
    F["J:12+12"] = F["D1212h3"] * F["D1212i"].recip()
    F["J:12+4"] = F["D124o"] * F["D124i"].recip()
    F["J:12+3"] = F["D123o"] * F["D123i"].recip()
    F["J:12"] = F["D12o"] * F["D12i"].recip()
    return F
