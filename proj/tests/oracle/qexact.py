"""Exact q-expansion arithmetic over Fractions.

Independent reference implementation used to cross-check the C++ library and
to freeze golden test data.  Everything here is brute force and slow on
purpose: correctness over speed.
"""

from fractions import Fraction as Fr
from math import gcd


class QS:
    """Truncated Laurent series sum c_e * q^e with rational exponents e.

    terms: dict exponent(Fr) -> coeff(Fr), order: exclusive upper bound (Fr).
    """

    def __init__(self, terms=None, order=Fr(0)):
        self.t = {e: c for e, c in (terms or {}).items() if c != 0}
        self.order = Fr(order)

    def copy(self):
        return QS(dict(self.t), self.order)

    def lead(self):
        if not self.t:
            return None
        return min(self.t)

    def coeff(self, e):
        return self.t.get(Fr(e), Fr(0))

    def __add__(self, o):
        if isinstance(o, (int, Fr)):
            o = const(Fr(o), self.order)
        r = dict(self.t)
        for e, c in o.t.items():
            r[e] = r.get(e, Fr(0)) + c
        return QS(r, min(self.order, o.order))

    def __neg__(self):
        return QS({e: -c for e, c in self.t.items()}, self.order)

    def __sub__(self, o):
        if isinstance(o, (int, Fr)):
            o = const(Fr(o), self.order)
        return self + (-o)

    def __rmul__(self, k):
        k = Fr(k)
        return QS({e: k * c for e, c in self.t.items()}, self.order)

    def __mul__(self, o):
        if isinstance(o, (int, Fr)):
            return self.__rmul__(o)
        la, lb = self.lead(), o.lead()
        if la is None or lb is None:
            return QS({}, min(self.order + (lb or 0), o.order + (la or 0)) if (la is not None or lb is not None) else min(self.order, o.order))
        order = min(self.order + lb, o.order + la)
        r = {}
        for ea, ca in self.t.items():
            for eb, cb in o.t.items():
                e = ea + eb
                if e < order:
                    r[e] = r.get(e, Fr(0)) + ca * cb
        return QS(r, order)

    def shift_exp(self, s):
        s = Fr(s)
        return QS({e + s: c for e, c in self.t.items()}, self.order + s)

    def scale_exp(self, d):
        d = Fr(d)
        return QS({e * d: c for e, c in self.t.items()}, self.order * d)

    def recip(self):
        la = self.lead()
        assert la is not None, "reciprocal of zero series"
        c0 = self.t[la]
        u = QS({e - la: c / c0 for e, c in self.t.items()}, self.order - la)
        # invert 1 + v by Newton-free direct recurrence on the exponent grid
        exps = sorted(u.t)
        n = u.order
        inv = {Fr(0): Fr(1)}
        # collect candidate exponents: all sums of exponents of u below order
        grid = _grid(exps + [n])
        res = {Fr(0): Fr(1)}
        k = grid
        e = grid
        while e < n:
            s = Fr(0)
            for eu, cu in u.t.items():
                if eu == 0 or eu > e:
                    continue
                s += cu * res.get(e - eu, Fr(0))
            if s != 0:
                res[e] = -s
            e += grid
        out = QS({e - la: c / c0 for e, c in res.items()}, n - la)
        return out

    def pow_int(self, k):
        if k == 0:
            return const(Fr(1), self.order - (self.lead() or 0))
        if k < 0:
            return self.recip().pow_int(-k)
        r = None
        b = self
        while k:
            if k & 1:
                r = b if r is None else r * b
            k >>= 1
            if k:
                b = b * b
        return r

    def pow_frac(self, r):
        """self**r for rational r; leading coeff must be rational r-th power."""
        r = Fr(r)
        la = self.lead()
        c0 = self.t[la]
        c0r = _frac_root_pow(c0, r)
        u = QS({e - la: c / c0 for e, c in self.t.items()}, self.order - la)
        n = u.order
        grid = _grid(sorted(u.t) + [n])
        # g = (1+v)^r via  e*g_e = sum_{0<eu<=e} (r*eu - (e-eu)) v_eu g_{e-eu}
        g = {Fr(0): Fr(1)}
        e = grid
        while e < n:
            s = Fr(0)
            for eu, cu in u.t.items():
                if eu == 0 or eu > e:
                    continue
                s += (r * eu - (e - eu)) * cu * g.get(e - eu, Fr(0))
            if s != 0:
                g[e] = s / e
            e += grid
        return QS({e + la * r: c0r * c for e, c in g.items()}, n + la * r)

    def trunc(self, order):
        order = Fr(order)
        return QS({e: c for e, c in self.t.items() if e < order}, min(order, self.order))

    def eq(self, o, upto=None):
        lim = min(self.order, o.order)
        if upto is not None:
            lim = min(lim, Fr(upto))
        es = set(self.t) | set(o.t)
        for e in es:
            if e < lim and self.coeff(e) != o.coeff(e):
                return False
        return True

    def first_terms(self, k=8):
        return [(e, self.coeff(e)) for e in sorted(self.t)[:k]]

    def __repr__(self):
        items = ["%s*q^%s" % (c, e) for e, c in sorted(self.t.items())[:10]]
        return " + ".join(items) + " + O(q^%s)" % self.order


def const(c, order):
    return QS({Fr(0): Fr(c)}, order)


def _grid(exps):
    den = 1
    for e in exps:
        den = den * e.denominator // gcd(den, e.denominator)
    g = None
    for e in exps:
        v = int(e * den)
        if v:
            g = v if g is None else gcd(g, v)
    return Fr(g or 1, den)


def _frac_root_pow(c, r):
    """c**r for Fraction c, rational r; c must be an exact power."""
    if c == 1:
        return Fr(1)
    num, den = c.numerator, c.denominator
    q = r.denominator

    def iroot(v, k):
        if v < 0:
            assert k % 2 == 1
            return -iroot(-v, k)
        x = round(v ** (1.0 / k))
        for cand in (x - 1, x, x + 1):
            if cand >= 0 and cand ** k == v:
                return cand
        raise AssertionError("not an exact %d-th power: %s" % (k, v))

    rn = iroot(num, q)
    rd = iroot(den, q)
    return Fr(rn, rd) ** r.numerator


# ---------------------------------------------------------------- eta & Ek

def eta_unit(d, order):
    """prod_{n>=1} (1 - q^{dn}) truncated below `order` (pentagonal sparse)."""
    order = Fr(order)
    t = {Fr(0): Fr(1)}
    k = 1
    while True:
        e1 = d * Fr(k * (3 * k - 1), 2)
        e2 = d * Fr(k * (3 * k + 1), 2)
        if e1 >= order and e2 >= order:
            break
        s = Fr(-1) ** k
        if e1 < order:
            t[Fr(e1)] = t.get(Fr(e1), Fr(0)) + s
        if e2 < order:
            t[Fr(e2)] = t.get(Fr(e2), Fr(0)) + s
        k += 1
    return QS(t, order)


def eta(d, order):
    """eta(d z) as series in q = e^{2 pi i z}, truncated below order."""
    return eta_unit(d, Fr(order) - Fr(d, 24)).shift_exp(Fr(d, 24))


def eta_quotient(factors, order):
    """factors: list of (d, r) meaning eta(d z)^r with rational r."""
    order = Fr(order)
    lead = sum(Fr(d) * Fr(r) / 24 for d, r in factors)
    res = const(Fr(1), order - lead)
    for d, r in factors:
        r = Fr(r)
        u = eta_unit(d, res.order)
        res = res * (u.pow_int(int(r)) if r.denominator == 1 else u.pow_frac(r))
        res = res.trunc(order - lead)
    return res.shift_exp(lead)


_BERN = {}


def bernoulli(k):
    if k in _BERN:
        return _BERN[k]
    from math import comb
    B = [Fr(0)] * (k + 1)
    B[0] = Fr(1)
    for m in range(1, k + 1):
        s = Fr(0)
        for j in range(m):
            s += comb(m + 1, j) * B[j]
        B[m] = -s / (m + 1)
    for i, b in enumerate(B):
        _BERN[i] = b
    return _BERN[k]


def sigma(k, n):
    s = 0
    for d in range(1, n + 1):
        if n % d == 0:
            s += d ** k
    return s


def Ek(k, d, order):
    """E_k(d z); k even >= 2."""
    order = Fr(order)
    t = {Fr(0): Fr(1)}
    fac = Fr(-2 * k) / bernoulli(k)
    n = 1
    while Fr(d * n) < order:
        t[Fr(d * n)] = fac * sigma(k - 1, n)
        n += 1
    return QS(t, order)
