"""Exact scalars: polynomials over the centers Q[C] and Q[Z2, Z3].

Every coefficient in the package is a fractions.Fraction; a center polynomial
is a sparse dict mapping exponent tuples to nonzero rationals.  Arity 1 is the
sl2 center (one symbol C), arity 2 the sl3 center (Z2, Z3).  The term order is
graded lex with Z2 ranked above Z3; "leading coefficient" always refers to this
order, and it fixes the sign conventions used by kernel and certificate
normalization downstream.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from math import lcm as _ilcm

Rat = Fraction


def as_rat(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected a rational scalar, got {type(c).__name__}")


def grlex_key(exps):
    return (sum(exps), exps)


class CenterPoly:
    """Immutable-by-convention polynomial in 1 or 2 commuting center symbols."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        assert arity in (1, 2)
        self.arity = arity
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            assert len(exps) == arity and all(e >= 0 for e in exps)
            c = as_rat(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, arity):
        return cls(arity, {})

    @classmethod
    def const(cls, arity, c):
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity, idx=0):
        exps = [0] * arity
        exps[idx] = 1
        return cls(arity, {tuple(exps): 1})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(sum(e) == 0 for e in self.terms)

    def const_value(self):
        assert self.is_const()
        return self.terms.get((0,) * self.arity, Fraction(0))

    def degree(self):
        # total degree; -1 for the zero polynomial
        return max((sum(e) for e in self.terms), default=-1)

    def leading(self):
        """(exponents, coefficient) of the graded-lex largest term."""
        assert self.terms, "zero polynomial has no leading term"
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def sort_key(self):
        """Canonical total order on polynomials of one arity (used for pivot ties)."""
        return tuple((e, c.numerator, c.denominator) for e, c in self.sorted_terms())

    def __add__(self, other):
        if not isinstance(other, CenterPoly):
            return NotImplemented
        assert self.arity == other.arity
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return CenterPoly(self.arity, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CenterPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rat(other)
            return CenterPoly(self.arity, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, CenterPoly):
            return NotImplemented
        assert self.arity == other.arity
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, Fraction(0)) + ca * cb
        return CenterPoly(self.arity, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = CenterPoly.const(self.arity, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CenterPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"CenterPoly({self.arity}, {self.terms!r})"


def poly_eval(p, point):
    """Evaluate p at a tuple of rationals, one per center symbol."""
    point = tuple(as_rat(x) for x in point)
    assert len(point) == p.arity
    total = Fraction(0)
    for exps, c in p.terms.items():
        v = c
        for x, e in zip(point, exps):
            if e:
                v *= x**e
        total += v
    return total


def divexact(a, b):
    """Exact quotient a/b in Q[center]; ValueError if b does not divide a."""
    assert isinstance(a, CenterPoly) and isinstance(b, CenterPoly)
    assert a.arity == b.arity
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quot = {}
    rem = dict(a.terms)
    be, bc = b.leading()
    while rem:
        re = max(rem, key=grlex_key)
        qe = tuple(x - y for x, y in zip(re, be))
        if any(e < 0 for e in qe):
            raise ValueError("not an exact quotient")
        qc = rem[re] / bc
        quot[qe] = quot.get(qe, Fraction(0)) + qc
        for ce, cc in b.terms.items():
            te = tuple(x + y for x, y in zip(qe, ce))
            nv = rem.get(te, Fraction(0)) - qc * cc
            if nv:
                rem[te] = nv
            else:
                rem.pop(te, None)
    return CenterPoly(a.arity, quot)


def zprimitive_scale(p):
    """The positive rational lam with lam*p having coprime integer coefficients."""
    assert not p.is_zero()
    dens = [c.denominator for c in p.terms.values()]
    big = _ilcm(*dens)
    nums = [abs(c.numerator) * (big // c.denominator) for c in p.terms.values()]
    return Fraction(big, _igcd(*nums))


# ---------------------------------------------------------------------------
# gcd of center polynomials.  Univariate: Euclid over Q[C].  Bivariate:
# primitive polynomial remainder sequence with Z2 as the main variable and
# univariate contents in Z3.  Results are scaled to integer-primitive form
# with positive leading coefficient, so gcd output is canonical.

def _uni_divmod(a, b):
    # dense-free dicts {exp: Fraction}; b nonzero
    q = {}
    r = dict(a)
    db = max(b)
    lb = b[db]
    while r and max(r) >= db:
        dr = max(r)
        c = r[dr] / lb
        q[dr - db] = q.get(dr - db, Fraction(0)) + c
        for e, bc in b.items():
            ne = dr - db + e
            nv = r.get(ne, Fraction(0)) - c * bc
            if nv:
                r[ne] = nv
            else:
                r.pop(ne, None)
    return q, r


def _uni_gcd(a, b):
    while b:
        _, a, b = None, b, _uni_divmod(a, b)[1]
    return a


def _uni_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            nv = out.get(e, Fraction(0)) + ca * cb
            if nv:
                out[e] = nv
            else:
                out.pop(e, None)
    return out


def _uni_sub(a, b):
    out = dict(a)
    for e, c in b.items():
        nv = out.get(e, Fraction(0)) - c
        if nv:
            out[e] = nv
        else:
            out.pop(e, None)
    return out


def _biv_split(p):
    # {(e2, e3): c} -> {e2: {e3: c}}
    rec = {}
    for (e2, e3), c in p.terms.items():
        rec.setdefault(e2, {})[e3] = c
    return rec


def _biv_join(rec, arity=2):
    terms = {}
    for e2, u in rec.items():
        for e3, c in u.items():
            terms[(e2, e3)] = c
    return CenterPoly(arity, terms)


def _biv_cont(rec):
    # univariate content in Z3 of a bivariate poly written by Z2 exponent
    g = {}
    for u in rec.values():
        g = _uni_gcd(g, u) if g else dict(u)
    return g


def _biv_primitive(rec):
    cont = _biv_cont(rec)
    out = {}
    for e2, u in rec.items():
        q, r = _uni_divmod(u, cont)
        assert not r
        out[e2] = q
    return out, cont


def _biv_prem(A, B):
    # pseudo-remainder in the main variable; degree in Z2 strictly drops
    dB = max(B)
    lB = B[dB]
    R = {e: dict(u) for e, u in A.items()}
    while R and max(R) >= dB:
        dR = max(R)
        lR = R[dR]
        nxt = {}
        for e, u in R.items():
            if e != dR:
                nxt[e] = _uni_mul(u, lB)
        for e, u in B.items():
            if e != dB:
                at = e + dR - dB
                nxt[at] = _uni_sub(nxt.get(at, {}), _uni_mul(u, lR))
        R = {e: u for e, u in nxt.items() if u}
    return R


def _biv_gcd(a, b):
    A, ca = _biv_primitive(_biv_split(a))
    B, cb = _biv_primitive(_biv_split(b))
    if max(A) < max(B):
        A, B = B, A
    while True:
        R = _biv_prem(A, B)
        if not R:
            break
        A, B = B, _biv_primitive(R)[0]
    cont = _uni_gcd(ca, cb)
    rec = {e2: _uni_mul(u, cont) for e2, u in B.items()}
    return _biv_join(rec)


def poly_gcd(a, b):
    """Canonical gcd: integer-primitive with positive leading coefficient."""
    assert a.arity == b.arity
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero() or b.is_zero():
        g = b if a.is_zero() else a
    elif a.arity == 1:
        g = CenterPoly(1, {(e,): c for e, c in _uni_gcd(
            {e[0]: c for e, c in a.terms.items()},
            {e[0]: c for e, c in b.terms.items()}).items()})
    else:
        g = _biv_gcd(a, b)
    lam = zprimitive_scale(g)
    if g.leading()[1] < 0:
        lam = -lam
    return g * lam


def gcd_many(polys):
    nz = [p for p in polys if not p.is_zero()]
    if not nz:
        raise ValueError("gcd of an all-zero family is undefined")
    g = nz[0]
    for p in nz[1:]:
        if g.is_const():
            break
        g = poly_gcd(g, p)
    lam = zprimitive_scale(g)
    if g.leading()[1] < 0:
        lam = -lam
    return g * lam


def content_normalize(vs):
    """Canonical representative of a nonzero vector up to Q[center]-scaling.

    Divides out the polynomial gcd of the entries, then rescales so the first
    nonzero entry has coprime integer coefficients and a positive leading
    coefficient.  Idempotent; rejects the all-zero vector.
    """
    vs = list(vs)
    g = gcd_many(vs)
    out = [v if v.is_zero() else divexact(v, g) for v in vs]
    first = next(v for v in out if not v.is_zero())
    lam = zprimitive_scale(first)
    if first.leading()[1] < 0:
        lam = -lam
    return tuple(v * lam for v in out)
