"""Local data censuses and the L-series of the supported objects.

Every place is reduced to a *local class*: its degree, the reduction type
and trace of the curve (or nothing, for the trivial representation) and its
residue modulo the character's modulus. A character only sees this class,
so twisted factors, their conjugates and the local equivariance check all
run over classes rather than places.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..algebra.cyclotomic import CyclotomicNumber
from ..characters import DirichletCharacter, is_primitive
from ..curves import EllipticSurfaceModel, ReductionType, reduction_at
from ..curves.batch import place_polynomials, residues_mod, trace_batch
from ..errors import ImprimitiveCharacter, UnsupportedRamificationOverlap
from ..fields import FqPoly, Place, enumerate_monic_irreducibles, necklace_count
from .assembly import LocalFactors, LSeries, assemble_l_series
from .factors import EulerFactor, curve_factor_poly, euler_factor_trivial, twist_poly

@dataclass(frozen=True)
class LocalClass:
    degree: int
    kind: ReductionType | None
    a_v: int
    q_v: int
    residue: int | None  # code mod m; None at infinity
    count: int
    place: Place | None  # set when the class is a single place

    @property
    def is_infinity(self) -> bool:
        return self.residue is None


@lru_cache(maxsize=64)
def _degree_classes(F, rho: EllipticSurfaceModel | None, m: FqPoly | None, d: int, explicit: bool) -> tuple[LocalClass, ...]:
    q_v = F.order**d
    out: list[LocalClass] = []
    if explicit:
        for f in enumerate_monic_irreducibles(F, d):
            v = Place(f)
            r = 0 if m is None else (f % m).code
            if rho is None:
                out.append(LocalClass(d, None, 0, q_v, r, 1, v))
            else:
                red = reduction_at(rho, v)
                out.append(LocalClass(d, red.type, red.a_v, q_v, r, 1, v))
        return tuple(out)
    if rho is None and m is None:
        # every place carries the same factor; only the count matters
        return (LocalClass(d, None, 0, q_v, 0, necklace_count(F.order, d), None),)
    if rho is None:
        polys = place_polynomials(F, d)
        res = np.zeros(len(polys), dtype=np.int64) if m is None else residues_mod(F, polys, m)
        codes, counts = np.unique(res, return_counts=True)
        return tuple(LocalClass(d, None, 0, q_v, int(c), int(k), None) for c, k in zip(codes, counts))
    batch = trace_batch(rho, d)
    res = np.zeros(len(batch), dtype=np.int64) if m is None else batch.residues(m)
    good = batch.good
    width = (F.order ** m.degree) if m is not None else 1
    offset = int(2 * np.sqrt(q_v)) + 2
    keys = (batch.a_v[good] + offset) * width + res[good]
    uniq, counts = np.unique(keys, return_counts=True)
    for key, k in zip(uniq.tolist(), counts.tolist()):
        a, r = divmod(key, width)
        out.append(LocalClass(d, ReductionType.GOOD, a - offset, q_v, r, k, None))
    for v, red in sorted(batch.bad.items(), key=lambda kv: kv[0].sort_key()):
        r = 0 if m is None else (v.poly % m).code
        out.append(LocalClass(d, red.type, red.a_v, q_v, r, 1, v))
    return tuple(out)


def local_classes(
    F, rho: EllipticSurfaceModel | None, m: FqPoly | None, N: int, include_infinity: bool, explicit: bool = False
) -> list[LocalClass]:
    """Classes covering every place of degree <= N (and infinity when flagged).

    ``explicit`` keeps one class per place, as the divisor-sum oracle needs.
    """
    out: list[LocalClass] = []
    for d in range(1, N + 1):
        out.extend(_degree_classes(F, rho, m, d, explicit))
    if include_infinity and N >= 1:
        v = Place.infinity()
        if rho is None:
            out.append(LocalClass(1, None, 0, F.order, None, 1, v))
        else:
            red = reduction_at(rho, v)
            out.append(LocalClass(1, red.type, red.a_v, F.order, None, 1, v))
    return out


def class_factor(c: LocalClass, chi: DirichletCharacter | None):
    """Euler factor polynomial of rho (x) chi for every place in the class."""
    n = 1 if chi is None else chi.n
    if chi is None:
        if c.kind is None:
            return euler_factor_trivial(Place.infinity()).poly
        return EulerFactor(Place.infinity(), curve_factor_poly(c.kind, c.a_v, c.q_v)).poly
    if c.is_infinity:
        u = None if chi.infinity == "ramified" else CyclotomicNumber.zeta(n, chi.infinity)
    else:
        k = chi.exponent_of_code(c.residue)
        u = None if k is None else CyclotomicNumber.zeta(n, k)
    try:
        return twist_poly(c.kind, c.a_v, c.q_v, u, n)
    except UnsupportedRamificationOverlap:
        where = "infinity" if c.is_infinity else (c.place if c.place is not None else f"a place of degree {c.degree}")
        raise UnsupportedRamificationOverlap(
            f"character ramified at {where}, where the curve has {c.kind.value} reduction"
        ) from None


def factors_from_classes(F, classes: list[LocalClass], chi: DirichletCharacter | None, N: int, include_infinity: bool) -> LocalFactors:
    n = 1 if chi is None else chi.n
    keep = all(c.place is not None for c in classes)
    local = LocalFactors(F, N, include_infinity, n, keep_places=keep)
    seen: dict[tuple, object] = {}
    for c in classes:
        key = (c.degree, c.kind, c.a_v, c.residue)
        poly = seen.get(key)
        if poly is None:
            poly = seen[key] = class_factor(c, chi)
        if c.place is not None:
            local.add(EulerFactor(c.place, poly))
        else:
            local.add_group(c.degree, poly, c.count)
    return local


# ---------------------------------------------------------------------------
# the L-series of each supported object


def _require_primitive(chi: DirichletCharacter) -> None:
    if not is_primitive(chi):
        raise ImprimitiveCharacter(f"{chi} is not primitive")


def zeta_factors(F, N: int, include_infinity: bool, explicit: bool = False) -> LocalFactors:
    return factors_from_classes(F, local_classes(F, None, None, N, include_infinity, explicit), None, N, include_infinity)


def dirichlet_factors(chi: DirichletCharacter, N: int, include_infinity: bool, explicit: bool = False) -> LocalFactors:
    """1 - chi(v) X away from the modulus; imprimitive characters are allowed."""
    F = chi.modulus.field
    classes = local_classes(F, None, chi.modulus, N, include_infinity, explicit)
    return factors_from_classes(F, classes, chi, N, include_infinity)


def curve_factors(E: EllipticSurfaceModel, N: int, include_infinity: bool, explicit: bool = False) -> LocalFactors:
    classes = local_classes(E.field, E, None, N, include_infinity, explicit)
    return factors_from_classes(E.field, classes, None, N, include_infinity)


def twist_factors(
    E: EllipticSurfaceModel | None, chi: DirichletCharacter, N: int, include_infinity: bool, explicit: bool = False
) -> LocalFactors:
    _require_primitive(chi)
    F = chi.modulus.field
    classes = local_classes(F, E, chi.modulus, N, include_infinity, explicit)
    return factors_from_classes(F, classes, chi, N, include_infinity)


def zeta_l(F, N: int, include_infinity: bool = False) -> LSeries:
    L = assemble_l_series(zeta_factors(F, N, include_infinity), N, include_infinity, description={"kind": "zeta"})
    return L


def dirichlet_l(chi: DirichletCharacter, N: int, include_infinity: bool = False) -> LSeries:
    desc = {"kind": "dirichlet", "character": chi.to_json()}
    L = assemble_l_series(dirichlet_factors(chi, N, include_infinity), N, include_infinity, description=desc)
    L.provenance["default_dnum"] = chi.modulus.degree
    return L


def curve_l(E: EllipticSurfaceModel, N: int, include_infinity: bool = False) -> LSeries:
    desc = {"kind": "curve", "curve": E.to_json()}
    L = assemble_l_series(curve_factors(E, N, include_infinity), N, include_infinity, description=desc)
    L.provenance["default_dnum"] = 2 * E.disc.degree + 4
    return L


def twist_l(E: EllipticSurfaceModel | None, chi: DirichletCharacter, N: int, include_infinity: bool = False) -> LSeries:
    desc = {"kind": "twist", "character": chi.to_json()}
    if E is not None:
        desc["curve"] = E.to_json()
    L = assemble_l_series(twist_factors(E, chi, N, include_infinity), N, include_infinity, description=desc)
    L.provenance["default_dnum"] = 2 * E.disc.degree + 4 if E is not None else chi.modulus.degree
    return L
