"""Finite-dimensional representations and exact element evaluation.

Covers the sl2 irreducibles rho_k, symmetric powers of block sums of the
defining representation, the graded witness pair used for independence
certificates, and the distinguished 0/1 vector whose monomial images realize
full rank.  All matrices are dense tuples of Fractions.

Center coefficients of a PBW element are evaluated at the representation's
center point (its Casimir scalars) unless an explicit point is passed; asking
for a center value on a representation that has none is an error, not a
silent zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import FreeElement, PBWElement, sl2, sl3
from .centerpoly import as_rat, poly_eval


def c_scalar(k):
    """Casimir eigenvalue on the k-dimensional sl2 irreducible."""
    assert k >= 1
    return Fraction(k * k - 1, 2)


def d2_scalar(m1, m2):
    return Fraction(m1 * m1 + m1 * m2 + m2 * m2 + 3 * m1 + 3 * m2)


def d3_scalar(m1, m2):
    return Fraction((m1 + 2 * m2) * (6 + 2 * m1 + m2) * (m1 - m2 - 3), 9)


def casimir_scalars(label):
    """Center point for an irreducible label: rho_k or pi_m1_m2."""
    parts = label.split("_")
    try:
        if parts[0] == "rho" and len(parts) == 2:
            k = int(parts[1])
            if k >= 1:
                return (c_scalar(k),)
        if parts[0] == "pi" and len(parts) == 3:
            m1, m2 = int(parts[1]), int(parts[2])
            if m1 >= 0 and m2 >= 0:
                return (d2_scalar(m1, m2), d3_scalar(m1, m2))
    except ValueError:
        pass
    raise ValueError(f"not an irreducible label: {label!r}")


# -- small dense matrix helpers over Q --------------------------------------

def mat_zero(n, m=None):
    m = n if m is None else m
    return tuple((Fraction(0),) * m for _ in range(n))


def mat_identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                 for i in range(n))


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def blockdiag(blocks):
    dims = [len(b) for b in blocks]
    total = sum(dims)
    out = [[Fraction(0)] * total for _ in range(total)]
    at = 0
    for b, d in zip(blocks, dims):
        for i in range(d):
            for j in range(d):
                if b[i][j]:
                    out[at + i][at + j] = as_rat(b[i][j])
        at += d
    return tuple(tuple(r) for r in out)


class RepMatrices:
    """One exact matrix per generator, plus evaluation caches.

    center_point carries the Casimir scalars when the representation is
    irreducible; basis_meta records construction data (the admitted index
    triples for sl3 irreducibles).
    """

    __slots__ = ("algebra", "dim", "mats", "label", "center_point",
                 "basis_meta", "_mono_mats", "_gen_pows", "_fast_eval",
                 "_model")

    def __init__(self, algebra, dim, mats, label, center_point=None,
                 basis_meta=None):
        assert set(mats) == set(algebra.gens)
        fixed = {}
        for g, m in mats.items():
            m = tuple(tuple(as_rat(x) for x in row) for row in m)
            assert len(m) == dim and all(len(row) == dim for row in m)
            fixed[g] = m
        self.algebra = algebra
        self.dim = dim
        self.mats = fixed
        self.label = label
        self.center_point = None if center_point is None else tuple(
            as_rat(x) for x in center_point)
        self.basis_meta = basis_meta
        self._mono_mats = {}
        self._gen_pows = {}
        self._fast_eval = None
        self._model = None

    def matrix(self, name):
        return self.mats[name]

    def gen_power(self, name, e):
        if e == 0:
            return mat_identity(self.dim)
        hit = self._gen_pows.get((name, e))
        if hit is None:
            hit = mat_mul(self.gen_power(name, e - 1), self.mats[name])
            self._gen_pows[(name, e)] = hit
        return hit

    def mono_matrix(self, exps):
        hit = self._mono_mats.get(exps)
        if hit is None:
            hit = mat_identity(self.dim)
            for g, e in zip(self.algebra.gens, exps):
                if e:
                    hit = mat_mul(hit, self.gen_power(g, e))
            self._mono_mats[exps] = hit
        return hit

    def bracket_defect(self, a, b):
        """pi[a]pi[b] - pi[b]pi[a] minus the bracket expansion; zero matrix
        exactly when the defining relations hold in this representation."""
        A = self.algebra
        ia, ib = A.index[a], A.index[b]
        comm = mat_add(mat_mul(self.mats[a], self.mats[b]),
                       mat_scale(mat_mul(self.mats[b], self.mats[a]), -1))
        for k, c in A.bracket_table.get((ia, ib), ()):
            comm = mat_add(comm, mat_scale(self.mats[A.gens[k]], -c))
        return comm

    def __repr__(self):
        return f"RepMatrices({self.label}, dim={self.dim})"


def _coeff_value(p, R, center_point):
    if p.is_const():
        return p.const_value()
    point = center_point if center_point is not None else R.center_point
    if point is None:
        raise ValueError(
            f"{R.label} has no center point; cannot evaluate center coefficients")
    return poly_eval(p, point)


def _center_values(R, center_point):
    point = center_point if center_point is not None else R.center_point
    if point is None:
        raise ValueError(
            f"{R.label} has no center point; cannot evaluate center symbols")
    return point


def eval_element(elem, R, center_point=None):
    """Exact matrix of a PBW or free element under R."""
    if isinstance(elem, FreeElement):
        assert elem.algebra is R.algebra
        A = R.algebra
        out = mat_zero(R.dim)
        for word, coeff in elem.terms.items():
            scalar = coeff
            m = mat_identity(R.dim)
            for letter in word:
                if letter < A.ngens:
                    m = mat_mul(m, R.mats[A.gens[letter]])
                else:
                    scalar *= _center_values(R, center_point)[letter - A.ngens]
            if scalar:
                out = mat_add(out, mat_scale(m, scalar))
        return out
    assert isinstance(elem, PBWElement) and elem.algebra is R.algebra
    if R._fast_eval is not None:
        return R._fast_eval(elem, center_point)
    out = mat_zero(R.dim)
    for exps, p in elem.terms.items():
        c = _coeff_value(p, R, center_point)
        if c:
            out = mat_add(out, mat_scale(R.mono_matrix(exps), c))
    return out


def apply_to_vector(elem, R, vec, center_point=None):
    """R(elem) applied to a vector, without forming monomial matrices."""
    assert isinstance(elem, PBWElement) and elem.algebra is R.algebra
    A = R.algebra
    out = [Fraction(0)] * R.dim
    for exps, p in elem.terms.items():
        c = _coeff_value(p, R, center_point)
        if not c:
            continue
        w = [as_rat(x) for x in vec]
        for gi in range(A.ngens - 1, -1, -1):
            for _ in range(exps[gi]):
                w = mat_vec(R.mats[A.gens[gi]], w)
        for i in range(R.dim):
            if w[i]:
                out[i] += c * w[i]
    return out


@lru_cache(maxsize=None)
def sl2_irrep(k):
    """The k-dimensional irreducible of sl2 in its standard weight basis."""
    assert k >= 1
    X = [[Fraction(0)] * k for _ in range(k)]
    Y = [[Fraction(0)] * k for _ in range(k)]
    H = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k - 1):
        X[i][i + 1] = Fraction(k - 1 - i)
        Y[i + 1][i] = Fraction(i + 1)
    for i in range(k):
        H[i][i] = Fraction(k - 1 - 2 * i)
    return RepMatrices(sl2(), k, {"X": X, "Y": Y, "H": H}, f"rho_{k}",
                       center_point=(c_scalar(k),))


def mono_exps(nvars, deg):
    """Degree-deg multi-indices in descending lex order."""
    if nvars == 1:
        return [(deg,)]
    out = []
    for d in range(deg, -1, -1):
        for rest in mono_exps(nvars - 1, deg - d):
            out.append((d,) + rest)
    return out


def derivation_matrices(base, nvars, deg):
    """Action on degree-deg monomials induced by matrices on the variables.

    The variable span carries the representation x_j -> sum_i M_ij x_i; the
    derivation sum M_ij x_i d/dx_j extends it to each graded piece.
    """
    monos = mono_exps(nvars, deg)
    index = {m: i for i, m in enumerate(monos)}
    dim = len(monos)
    out = {}
    for g, M in base.items():
        D = [[Fraction(0)] * dim for _ in range(dim)]
        for s, alpha in enumerate(monos):
            for j in range(nvars):
                if not alpha[j]:
                    continue
                for i in range(nvars):
                    if not M[i][j]:
                        continue
                    beta = list(alpha)
                    beta[j] -= 1
                    beta[i] += 1
                    D[index[tuple(beta)]][s] += alpha[j] * as_rat(M[i][j])
        out[g] = D
    return out, monos


def sym_power_rep(n, k):
    """k-th symmetric power of n block copies of the defining representation."""
    assert n in (2, 3) and k >= 1
    A = sl2() if n == 2 else sl3()
    base = {g: blockdiag([A.mats[g]] * n) for g in A.gens}
    mats, monos = derivation_matrices(base, n * n, k)
    return RepMatrices(A, len(monos), mats, f"sym{k}_pi{n}")


def theorem1_witness(n, d):
    """Block sum of the symmetric powers 1..d together with its witness vector.

    Ordered generator monomials of degree at most d applied to the vector are
    linearly independent.  The vector is the tuple of powers of a sum of one
    basis vector per block copy; in monomial coordinates its entries are
    multinomial counts on the diagonal support.
    """
    assert d >= 1
    blocks = [sym_power_rep(n, k) for k in range(1, d + 1)]
    A = blocks[0].algebra
    mats = {g: blockdiag([B.mats[g] for B in blocks]) for g in A.gens}
    dim = sum(B.dim for B in blocks)
    diag = {i * n + i for i in range(n)}
    vec = []
    for k in range(1, d + 1):
        for alpha in mono_exps(n * n, k):
            if all(a == 0 or j in diag for j, a in enumerate(alpha)):
                m = factorial(k)
                for a in alpha:
                    m //= factorial(a)
                vec.append(Fraction(m))
            else:
                vec.append(Fraction(0))
    assert len(vec) == dim
    return RepMatrices(A, dim, mats, f"symblock_{n}_{d}"), vec


def prop32_vector(d, t=0):
    """0/1 vector in dimension (d+1)^2 + t whose ordered monomial images at
    the irreducible of that dimension are independent through degree d."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    assert t >= 0
    positions = [d + 1]
    for k in range(1, d + 1):
        positions.append(positions[-1] + 2 * (d - k + 1))
    assert positions[-1] == (d + 1) ** 2
    vec = [Fraction(0)] * ((d + 1) ** 2 + t)
    for p in positions:
        vec[p - 1] = Fraction(1)
    return vec
