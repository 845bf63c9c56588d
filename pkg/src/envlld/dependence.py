"""Deciders for linear dependence over the center, with certificates.

Three exact layers, each backed by a different kind of evidence:

- dependence with scalar coefficients: rational kernel of the PBW coordinate
  matrix;
- dependence with center coefficients: fraction-free kernel of the matrix of
  decomposition coordinates, a nonzero kernel vector being a certificate
  that recomposes to an exact identity;
- membership of q in the span after localizing the center: a fraction-field
  solve returning (z0, z) with z0 * q = sum z_i p_i, plus a check whether
  the denominator z0 vanishes on an irreducible where q survives.

The empirical layer evaluates families at chosen irreducibles and reports
per-representation ranks or span membership; the witness layer produces an
explicit dimension and vector making the monomial images independent, which
certifies independence without sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
import random

from .algebra import PBWElement, get_algebra, sl2, sl3
from .center import decompose, verify_identity
from .centerpoly import CenterPoly, grlex_key, poly_eval
from .linalg import PolyMatrix, RatEchelon, ff_rank_kernel, solve_fraction_field
from .reps import (RepMatrices, apply_to_vector, c_scalar, casimir_scalars,
                   d2_scalar, d3_scalar, eval_element, prop32_vector, sl2_irrep)
from .sl3reps import sl3_irrep


@dataclass(frozen=True)
class Certificate:
    """Center-polynomial coefficients witnessing a dependence or a span
    membership; z0 is the localizing denominator when one is involved."""
    z: tuple
    z0: object = None


@dataclass(frozen=True)
class Verdict:
    kind: str                      # "dependent" | "independent"
    certificate: object = None
    evidence: dict = field(default_factory=dict)


def _check_family(ps):
    assert ps, "need at least one element"
    A = ps[0].algebra
    for p in ps:
        assert isinstance(p, PBWElement) and p.algebra is A
    return A


def decide_c_dependence(ps):
    """Dependence with plain rational coefficients.  Inputs must be center
    free; the coordinate matrix over the PBW monomials decides exactly."""
    A = _check_family(ps)
    for p in ps:
        for poly in p.terms.values():
            if not poly.is_const():
                raise ValueError("scalar dependence is for center-free inputs")
    monos = sorted({e for p in ps for e in p.terms}, key=grlex_key)
    arity = A.center_arity
    entries = [[CenterPoly.const(arity, p.coeff(m).const_value()) for p in ps]
               for m in monos]
    res = ff_rank_kernel(PolyMatrix(arity, len(monos), len(ps), entries))
    ev = {"rank": res.rank, "count": len(ps), "monomials": len(monos)}
    if res.kernel_basis:
        return Verdict("dependent", Certificate(_coprime_ints(res.kernel_basis[0])), ev)
    return Verdict("independent", None, ev)


def _coprime_ints(vec):
    # all-constant kernel vectors print as coprime integers, first one positive
    from math import gcd, lcm
    vals = [x.const_value() for x in vec]
    nz = [v for v in vals if v]
    scale = Fraction(lcm(*(v.denominator for v in nz)) if len(nz) > 1
                     else nz[0].denominator,
                     gcd(*(abs(v.numerator) for v in nz)) if len(nz) > 1
                     else abs(nz[0].numerator))
    if nz[0] * scale < 0:
        scale = -scale
    return tuple(x * scale for x in vec)


def _coordinate_matrix(decs, arity):
    monos = sorted({m for d in decs for m in d.terms}, key=grlex_key)
    zero = CenterPoly.zero(arity)
    entries = [[d.terms.get(m, zero) for d in decs] for m in monos]
    return monos, PolyMatrix(arity, len(monos), len(decs), entries)


def decide_center_dependence(ps):
    """Dependence with coefficients in the center, decided exactly.

    The kernel of the decomposition-coordinate matrix is computed fraction
    free; a nonzero kernel vector is returned as a certificate and checked
    against the defining identity before being reported.
    """
    A = _check_family(ps)
    decs = [decompose(p) for p in ps]
    monos, M = _coordinate_matrix(decs, A.center_arity)
    res = ff_rank_kernel(M)
    ev = {"rank": res.rank, "count": len(ps), "monomials": len(monos)}
    if res.kernel_basis:
        z = res.kernel_basis[0]
        assert verify_identity(list(z), ps), "certificate failed recomposition"
        return Verdict("dependent", Certificate(z), ev)
    return Verdict("independent", None, ev)


def loc_span_solve(q, ps):
    """Certificate (z0, z) with z0 q = sum z_i p_i over the center, or None."""
    A = _check_family(ps)
    assert q.algebra is A
    decs = [decompose(p) for p in ps]
    dq = decompose(q)
    arity = A.center_arity
    monos = sorted({m for d in [dq, *decs] for m in d.terms}, key=grlex_key)
    zero = CenterPoly.zero(arity)
    M = PolyMatrix(arity, len(monos), len(decs),
                   [[d.terms.get(m, zero) for d in decs] for m in monos])
    b = [dq.terms.get(m, zero) for m in monos]
    sol = solve_fraction_field(M, b)
    if sol is None:
        return None
    z0, z = sol
    assert verify_identity([z0, *(-zi for zi in z)], [q, *ps]), \
        "localization certificate failed recomposition"
    return Certificate(z, z0)


def sl2_denominator_roots(z0, cap=1000):
    """Dimensions n with z0(c_n) = 0, found exactly via a root bound."""
    assert z0.arity == 1 and not z0.is_zero()
    if z0.is_const():
        return []
    deg = z0.degree()
    lead = z0.terms[(deg,)]
    bound = 1 + max((abs(c / lead) for e, c in z0.terms.items() if e != (deg,)),
                    default=Fraction(0))
    # c_n = (n^2 - 1)/2 <= bound constrains n
    nmax = isqrt(int(2 * bound) + 1) + 1
    if nmax > cap:
        raise ValueError(f"denominator root bound {nmax} exceeds cap {cap}")
    return [n for n in range(1, nmax + 1) if poly_eval(z0, (c_scalar(n),)) == 0]


def condition1_check(cert, q):
    """True when the denominator certificate survives every irreducible:
    z0 may only vanish at dimensions where q itself acts as zero."""
    assert q.algebra.name == "sl2", "the denominator check is an sl2 notion"
    z0 = cert.z0
    assert z0 is not None and not z0.is_zero()
    for n in sl2_denominator_roots(z0):
        M = eval_element(q, sl2_irrep(n))
        if any(x for row in M for x in row):
            return False
    return True


def resolve_rep(item, A=None, max_entries=20000):
    """A representation from an int (sl2 dimension), a weight pair (sl3), a
    label string, or a ready RepMatrices instance."""
    if isinstance(item, RepMatrices):
        R = item
    elif isinstance(item, int):
        if item * item > max_entries:
            raise ValueError(f"dimension {item} exceeds the matrix entry cap")
        R = sl2_irrep(item)
    elif isinstance(item, (tuple, list)) and len(item) == 2:
        R = sl3_irrep(tuple(item), max_entries)
    elif isinstance(item, str):
        point = casimir_scalars(item)  # validates the label shape
        parts = item.split("_")
        if parts[0] == "rho":
            R = resolve_rep(int(parts[1]), A, max_entries)
        else:
            R = sl3_irrep((int(parts[1]), int(parts[2])), max_entries)
        assert R.center_point == point
    else:
        raise ValueError(f"cannot resolve a representation from {item!r}")
    if A is not None:
        assert R.algebra is A, "representation does not match the algebra"
    return R


def _flat(mat):
    return [x for row in mat for x in row]


def empirical_lld(ps, rep_range, q=None):
    """Per-representation ranks of a family, or span membership of q.

    Exact evaluation at each listed irreducible; center coefficients take the
    representation's Casimir values.  Returns one report dict per entry, in
    the given order.
    """
    A = _check_family(ps)
    out = []
    for item in rep_range:
        R = resolve_rep(item, A)
        ech = RatEchelon(R.dim * R.dim)
        for p in ps:
            ech.add(_flat(eval_element(p, R)))
        entry = {"label": R.label, "dim": R.dim, "count": len(ps),
                 "rank": ech.rank}
        if q is None:
            entry["dependent"] = ech.rank < len(ps)
        else:
            assert q.algebra is A
            entry["in_span"] = ech.contains(_flat(eval_element(q, R)))
        out.append(entry)
    return out


def empirical_ref(q, ps, rep, samples=20, seed=0):
    """Search for a vector v with q v outside span{p_i v} at one irreducible.

    Tries the standard basis first, then seeded random rational vectors.
    Stops at the first counterexample; otherwise reports that none was found.
    """
    A = _check_family(ps)
    assert q.algebra is A
    R = resolve_rep(rep, A)
    rng = random.Random(seed)
    report = {"label": R.label, "dim": R.dim, "samples": samples,
              "seed": seed, "checked": 0, "counterexample": None}

    def trial(vec, kind, idx):
        ech = RatEchelon(R.dim)
        for p in ps:
            ech.add(apply_to_vector(p, R, vec))
        if not ech.contains(apply_to_vector(q, R, vec)):
            report["counterexample"] = {
                "kind": kind, "index": idx,
                "vector": [str(x) for x in vec]}
            return True
        return False

    for i in range(R.dim):
        vec = [Fraction(1 if j == i else 0) for j in range(R.dim)]
        report["checked"] += 1
        if trial(vec, "basis", i):
            return report
    for s in range(samples):
        vec = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
               for _ in range(R.dim)]
        report["checked"] += 1
        if trial(vec, "random", s):
            return report
    report["note"] = "no counterexample found"
    return report


@dataclass(frozen=True)
class WitnessResult:
    n: int
    vector: tuple
    evidence: dict


class WitnessScanExceeded(RuntimeError):
    """Raised when no witness dimension is found within the scan cap."""


def witness_independence(ps, max_shift=50):
    """Explicit (n, v) certifying independence of an sl2 family over the
    center: the images rho_n(p_i) v are linearly independent.

    Scans n = (d+1)^2 + t for t = 0..max_shift where d is the top degree of
    the decomposition monomials; accepts n once the coordinate matrix keeps
    full rank at c_n and the distinguished vector realizes independent
    monomial images.  Exceeding the cap raises, never returns quietly.
    """
    A = _check_family(ps)
    assert A.name == "sl2"
    decs = [decompose(p) for p in ps]
    monos, M = _coordinate_matrix(decs, 1)
    k = len(ps)
    d = max((sum(m) for m in monos), default=0)

    def rank_at(n):
        ech = RatEchelon(len(monos))
        for j in range(k):
            ech.add([poly_eval(M.entries[i][j], (c_scalar(n),))
                     for i in range(len(monos))])
        return ech.rank

    for t in range(max_shift + 1):
        if d == 0:
            n = 1 + t
            vec = [Fraction(1)] + [Fraction(0)] * t
        else:
            n = (d + 1) ** 2 + t
            vec = prop32_vector(d, t)
        if rank_at(n) < k:
            continue
        R = sl2_irrep(n)
        if d > 0:
            ech = RatEchelon(n)
            full = 0
            for s in range(d + 1):
                for c in range(s + 1):
                    rest = s - c
                    shapes = [(rest, 0, c)] if rest == 0 else [(rest, 0, c), (0, rest, c)]
                    for e in shapes:
                        full += 1
                        ech.add(apply_to_vector(A.pbw_mono(e), R, vec))
            assert full == (d + 1) ** 2
            if ech.rank < full:
                continue
        final = RatEchelon(n)
        for p in ps:
            final.add(apply_to_vector(p, R, vec))
        assert final.rank == k, "witness images lost rank unexpectedly"
        ev = {"n": n, "t": t, "degree": d, "rank": final.rank, "count": k}
        return WitnessResult(n, tuple(vec), ev)
    raise WitnessScanExceeded(
        f"no witness dimension found with shift up to {max_shift}")


def sl3_weight_scan(cert, bound):
    """Least d <= bound such that no weight (m1, m2) with d <= m1, m2 <= bound
    zeroes every certificate entry; None when the scan stays inconclusive."""
    zs = [z for z in cert.z]
    assert zs and all(z.arity == 2 for z in zs)
    points = {}
    for m1 in range(1, bound + 1):
        for m2 in range(1, bound + 1):
            points[(m1, m2)] = (d2_scalar(m1, m2), d3_scalar(m1, m2))
    for d in range(1, bound + 1):
        killed = False
        for m1 in range(d, bound + 1):
            for m2 in range(d, bound + 1):
                if all(poly_eval(z, points[(m1, m2)]) == 0 for z in zs):
                    killed = True
                    break
            if killed:
                break
        if not killed:
            return d
    return None


def trace_pairing_complement(mats, dim):
    """Basis of the matrices B with tr(M B) = 0 for every listed M."""
    rows = []
    for M in mats:
        rows.append([CenterPoly.const(1, M[b][a])
                     for a in range(dim) for b in range(dim)])
    res = ff_rank_kernel(PolyMatrix(1, len(rows), dim * dim, rows))
    out = []
    for v in res.kernel_basis:
        vals = [x.const_value() for x in v]
        out.append(tuple(tuple(vals[a * dim + b] for b in range(dim))
                         for a in range(dim)))
    return out


def duality_check(q, ps, rep, center_point=None):
    """Span membership versus annihilation by the trace-orthogonal complement.

    The two sides agree for any finite family; the report carries both bits
    so disagreement is visible immediately.
    """
    A = _check_family(ps)
    R = resolve_rep(rep, A)
    pmats = [eval_element(p, R, center_point) for p in ps]
    qmat = eval_element(q, R, center_point)
    ech = RatEchelon(R.dim * R.dim)
    for M in pmats:
        ech.add(_flat(M))
    member = ech.contains(_flat(qmat))
    comp = trace_pairing_complement(pmats, R.dim)
    tzero = all(
        sum(qmat[a][b] * B[b][a] for a in range(R.dim) for b in range(R.dim)) == 0
        for B in comp)
    return {"label": R.label, "member": member, "trace_zero": tzero,
            "agrees": member == tzero, "complement_dim": len(comp)}
