"""Frobenius traces at every place of a given degree in one pass.

Per-place enumeration costs q^d for each of roughly q^d/d places. Here the
residue field F_{q^d} is built once; the places of degree d are the
Frobenius orbits of its elements of exact degree d. For a =/= 0 the curve
y^2 = x^3 + a x + b is isomorphic to one with a in a fixed set of
representatives of F^*/(F^*)^4, and for fixed a the character sums

    S_a(b) = sum_x chi(x^3 + a x + b)

for all b at once form a correlation over the additive group (Z/p)^k,
computed with a k-dimensional FFT and rounded back to integers.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from ..fields import FqPoly, Place, ResidueField, is_irreducible
from .model import EllipticSurfaceModel
from .reduction import ReductionData, ReductionType, reduction_at


def first_irreducible(F, d: int) -> FqPoly:
    q = F.order
    for code in range(q**d, 2 * q**d):
        f = FqPoly.from_code(F, code)
        if (d == 1 or f.coeffs[0]) and is_irreducible(f):
            return f
    raise AssertionError("no irreducible polynomial found")


class _TraceTables:
    """S_a(b) for a in {0} and the quartic-class representatives g^j."""

    def __init__(self, T):
        self.T = T
        self.shape = (T.p,) * T.k
        self.axes = tuple(range(T.k))
        self.xs = np.arange(T.order, dtype=np.int64)
        self.negated = T.neg(self.xs)
        self._chi_hat = np.fft.rfftn(T.chi2.astype(np.float64).reshape(self.shape))
        self._cache: dict[int, np.ndarray] = {}
        self.classes = gcd(4, T.M)

    def sums(self, a: int) -> np.ndarray:
        if a not in self._cache:
            T = self.T
            xs = self.xs
            vals = T.add(T.mul(T.mul(xs, xs), xs), T.scale(a, xs))
            h = np.bincount(vals, minlength=T.order).astype(np.float64)
            h = h[self.negated]  # correlation -> convolution
            conv = np.fft.irfftn(np.fft.rfftn(h.reshape(self.shape)) * self._chi_hat, s=self.shape, axes=self.axes)
            conv = conv.reshape(-1)
            rounded = np.rint(conv)
            if np.abs(conv - rounded).max() > 0.25:
                raise AssertionError("FFT character sums are not numerically integral")
            self._cache[a] = rounded.astype(np.int64)
        return self._cache[a]

    def traces(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """a(E) = -sum_x chi(x^3 + A x + B) for each pair (A, B)."""
        T = self.T
        M = T.M
        out = np.empty(A.shape, dtype=np.int64)
        zero = A == 0
        if zero.any():
            out[zero] = -self.sums(0)[B[zero]]
        nz = ~zero
        if nz.any():
            g4 = self.classes
            la = T.log[A[nz]]
            j = la % g4
            # u^4 = a / g^j  <=>  4 k = log a - j  (mod M)
            m = M // g4
            inv = pow(4 // g4, -1, m) if m > 1 else 0
            k = ((la - j) // g4) * inv % m
            b = B[nz]
            lb = T.log[b]
            scaled = np.where(b == 0, 0, T.exp[(lb - 6 * k) % M])
            res = np.empty(la.shape, dtype=np.int64)
            for r in range(g4):
                sel = j == r
                if sel.any():
                    res[sel] = -self.sums(int(T.exp[r]))[scaled[sel]]
            out[nz] = res
        return out


def _orbit_representatives(T, q: int, d: int) -> np.ndarray:
    """Log of the smallest element in each Frobenius orbit of exact size d."""
    M = T.M
    L = np.arange(M, dtype=np.int64)
    keep = np.ones(M, dtype=bool)
    cur = L.copy()
    for _ in range(1, d):
        cur = cur * q % M
        keep &= cur > L
    return L[keep]


def _minimal_polynomials(T, roots: np.ndarray, q: int, d: int) -> np.ndarray:
    """Coefficients (lowest first, monic) of prod_i (X - r^(q^i)) for each root r."""
    n = roots.shape[0]
    coeffs = np.zeros((d + 1, n), dtype=np.int64)
    coeffs[0] = 1
    conj = roots
    for i in range(d):
        minus = T.neg(conj)
        new = np.zeros_like(coeffs)
        new[1 : i + 2] = coeffs[: i + 1]
        for j in range(i + 1):
            new[j] = T.add(new[j], T.mul(minus, coeffs[j]))
        coeffs = new
        conj = T.power(conj, q)
    return coeffs


def _base_ops(F):
    """Vectorised (add, mul, neg) on base-field codes."""
    if F.k == 1:
        p = F.p
        return (lambda a, b: (a + b) % p), (lambda a, b: a * b % p), (lambda a: -a % p)
    T = F.tables()
    return T.add, T.mul, T.neg


def residues_mod(F, polys: np.ndarray, m: FqPoly) -> np.ndarray:
    """Codes of the rows of ``polys`` (coefficients lowest first) reduced mod the monic m."""
    e = m.degree
    rows = polys.copy()
    if rows.shape[1] < e:
        rows = np.pad(rows, ((0, 0), (0, e - rows.shape[1])))
    add, mul, neg = _base_ops(F)
    for i in range(rows.shape[1] - 1, e - 1, -1):
        lead = rows[:, i]
        if not lead.any():
            continue
        for j, c in enumerate(m.coeffs[:e]):
            if c:
                rows[:, i - e + j] = add(rows[:, i - e + j], neg(mul(lead, np.int64(c))))
        rows[:, i] = 0
    q = F.order
    w = np.array([q**j for j in range(e)], dtype=np.int64)
    return rows[:, :e] @ w


def _sorted_rows(polys: np.ndarray, q: int) -> np.ndarray:
    d = polys.shape[1] - 1
    order = np.argsort(polys[:, :d] @ np.array([q**j for j in range(d)], dtype=np.int64), kind="stable")
    return order


def _degree_field(F, d: int):
    q = F.order
    T = ResidueField(F, first_irreducible(F, d)).tables()
    reps = T.exp[_orbit_representatives(T, q, d)]
    if d == 1:
        reps = np.concatenate([np.zeros(1, dtype=np.int64), reps])
    return T, reps


def place_polynomials(F, d: int) -> np.ndarray:
    """Coefficient rows of every monic irreducible of degree d, sorted by code."""
    T, reps = _degree_field(F, d)
    polys = _minimal_polynomials(T, reps, F.order, d).T.copy()
    return polys[_sorted_rows(polys, F.order)]


class TraceBatch:
    """Reduction data at all finite places of one degree, stored as arrays.

    ``polys[i]`` holds the coefficients (lowest first) of the i-th place,
    ``good[i]`` its reduction, ``a_v[i]`` its trace; bad places also carry
    full :class:`ReductionData` records in ``bad``.
    """

    def __init__(self, field, degree: int, polys: np.ndarray, good: np.ndarray, a_v: np.ndarray, bad: dict):
        self.field = field
        self.degree = degree
        self.q_v = field.order**degree
        self.polys = polys
        self.good = good
        self.a_v = a_v
        self.bad = bad

    def __len__(self):
        return self.polys.shape[0]

    def codes(self) -> np.ndarray:
        q = self.field.order
        w = np.array([q**j for j in range(self.degree + 1)], dtype=np.int64)
        return self.polys @ w

    def residues(self, m: FqPoly) -> np.ndarray:
        """Code of each place polynomial reduced mod m."""
        return residues_mod(self.field, self.polys, m)

    def place(self, i: int) -> Place:
        return Place(FqPoly._raw(self.field, tuple(int(c) for c in self.polys[i])))

    def to_dict(self) -> dict[Place, ReductionData]:
        Q = self.q_v
        out: dict[Place, ReductionData] = {}
        F = self.field
        for coeffs, is_good, a in zip(self.polys.tolist(), self.good.tolist(), self.a_v.tolist()):
            v = Place(FqPoly._raw(F, tuple(coeffs)))
            out[v] = ReductionData(v, ReductionType.GOOD, a, Q, Q + 1 - a) if is_good else self.bad[v]
        return out


def trace_batch(model: EllipticSurfaceModel, d: int) -> TraceBatch:
    """Traces at every finite place of degree d via whole-field tables."""
    F = model.field
    q = F.order
    T, reps = _degree_field(F, d)
    A = T.evaluate(model.A.coeffs, reps)
    B = T.evaluate(model.B.coeffs, reps)
    core = T.add(T.scale(4 % F.p, T.power(A, 3)), T.scale(27 % F.p, T.power(B, 2)))
    good = core != 0

    a_vals = np.zeros(reps.shape, dtype=np.int64)
    a_vals[good] = _TraceTables(T).traces(A[good], B[good])

    polys = _minimal_polynomials(T, reps, q, d).T.copy()
    if (polys >= q).any():
        raise AssertionError("minimal polynomial left the base field")
    order = _sorted_rows(polys, q)
    polys, good, a_vals = polys[order], good[order], a_vals[order]
    bad = {}
    for i in np.flatnonzero(~good).tolist():
        v = Place(FqPoly._raw(F, tuple(int(c) for c in polys[i])))
        bad[v] = reduction_at(model, v)
        a_vals[i] = bad[v].a_v
    return TraceBatch(F, d, polys, good, a_vals, bad)


def batch_reduction_data(model: EllipticSurfaceModel, d: int) -> dict[Place, ReductionData]:
    """Reduction data at every finite place of degree d."""
    return trace_batch(model, d).to_dict()


def naive_reduction_data(model: EllipticSurfaceModel, d: int) -> dict[Place, ReductionData]:
    from ..fields import enumerate_monic_irreducibles

    return {Place(f): reduction_at(model, Place(f)) for f in enumerate_monic_irreducibles(model.field, d)}


def local_reduction_data(
    model: EllipticSurfaceModel, max_degree: int, include_infinity: bool = False, method: str = "auto"
) -> dict[Place, ReductionData]:
    """Reduction data at all places of degree <= max_degree, in place order."""
    out: dict[Place, ReductionData] = {}
    for d in range(1, max_degree + 1):
        use = method
        if use == "auto":
            use = "naive" if model.field.order**d <= 125 else "batch"
        if use == "naive":
            out.update(naive_reduction_data(model, d))
        elif use == "batch":
            out.update(batch_reduction_data(model, d))
        else:
            raise ValueError(f"unknown method {method!r}")
    if include_infinity and max_degree >= 1:
        out[Place.infinity()] = reduction_at(model, Place.infinity())
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))
