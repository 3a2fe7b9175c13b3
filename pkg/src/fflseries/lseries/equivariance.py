"""Exact Galois equivariance of twisted L-data: series, local factors and centre values."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.cyclotomic import GaloisAutomorphism, cyclo_automorphism
from ..algebra.series import series_automorphism
from ..characters import DirichletCharacter, character_conjugate
from ..curves import EllipticSurfaceModel
from ..errors import IncomparableSeries, PoleAtCenter, ReconstructionFailed
from .assembly import LSeries, assemble_l_series
from .builders import _require_primitive, class_factor, factors_from_classes, local_classes
from .values import evaluate_leading, reconstruct


@dataclass
class EquivarianceVerdict:
    sigma: int
    n: int
    series_ok: bool
    local_ok: bool
    values_ok: bool | None  # None when a reconstruction or evaluation was unavailable
    first_discrepancy: dict | None = None
    notes: list[str] = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.series_ok and self.local_ok and self.values_ok is not False

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma,
            "n": self.n,
            "series": self.series_ok,
            "local": self.local_ok,
            "values": self.values_ok,
            "passed": self.passed,
            "first_discrepancy": self.first_discrepancy,
            "notes": list(self.notes),
            "A": self.values,
        }


def compare_series(L1: LSeries, L2: LSeries, sigma: GaloisAutomorphism) -> int | None:
    """First index where sigma(L1) and L2 differ, or None."""
    if (L1.q, L1.N, L1.place_set()) != (L2.q, L2.N, L2.place_set()):
        raise IncomparableSeries("the two series were built over different place sets")
    return series_automorphism(L1.series, sigma).first_difference(L2.series)


def _values(L: LSeries, k: int, dnum, dden):
    try:
        R = reconstruct(L, dnum, dden)
        return evaluate_leading(R, k), None
    except ReconstructionFailed as exc:
        return None, f"reconstruction failed: {exc}"
    except PoleAtCenter as exc:
        return None, f"pole of order {exc.order} at the centre"


def equivariance_check(
    rho: EllipticSurfaceModel | None,
    chi: DirichletCharacter,
    sigma: GaloisAutomorphism,
    N: int,
    k: int,
    include_infinity: bool = False,
    dnum: int | None = None,
    dden: int | None = None,
) -> EquivarianceVerdict:
    _require_primitive(chi)
    chi_s = character_conjugate(chi, sigma)
    F = chi.modulus.field
    classes = local_classes(F, rho, chi.modulus, N, include_infinity)
    verdict = EquivarianceVerdict(sigma.a, sigma.n, True, True, None)

    for c in classes:
        lhs = class_factor(c, chi).map(lambda x: cyclo_automorphism(x, sigma))
        rhs = class_factor(c, chi_s)
        if lhs != rhs:
            verdict.local_ok = False
            where = c.place.to_json() if c.place is not None else {"degree": c.degree, "residue": c.residue}
            verdict.first_discrepancy = {"check": "local", "place": where}
            break

    desc = lambda x: {"character": x.to_json(), "curve": rho.to_json() if rho is not None else None}  # noqa: E731
    L1 = assemble_l_series(factors_from_classes(F, classes, chi, N, include_infinity), N, include_infinity, description=desc(chi))
    L2 = assemble_l_series(factors_from_classes(F, classes, chi_s, N, include_infinity), N, include_infinity, description=desc(chi_s))
    default = 2 * rho.disc.degree + 4 if rho is not None else chi.modulus.degree
    L1.provenance["default_dnum"] = L2.provenance["default_dnum"] = default
    idx = compare_series(L1, L2, sigma)
    if idx is not None:
        verdict.series_ok = False
        if verdict.first_discrepancy is None:
            verdict.first_discrepancy = {"check": "series", "index": idx}

    r1, why1 = _values(L1, k, dnum, dden)
    r2, why2 = _values(L2, k, dnum, dden)
    if r1 is None or r2 is None:
        verdict.notes.extend(w for w in (why1, why2) if w)
        return verdict
    verdict.values = {"chi": [a.to_json() for a in r1.values], "chi_sigma": [a.to_json() for a in r2.values]}
    verdict.values_ok = r1.order == r2.order
    for j, (a, b) in enumerate(zip(r1.values, r2.values)):
        if cyclo_automorphism(a, sigma) != b:
            verdict.values_ok = False
            if verdict.first_discrepancy is None:
                verdict.first_discrepancy = {"check": "values", "index": j}
            break
    return verdict
