"""Reduction types and Frobenius traces at the places of F_q(t)."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ..errors import BadReductionPlace, NotMinimal
from ..fields import FqPoly, Place, residue_field
from .model import EllipticSurfaceModel, infinite_place_model, minimal_model_at


class ReductionType(enum.Enum):
    GOOD = "good"
    SPLIT = "split_multiplicative"
    NONSPLIT = "nonsplit_multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True, slots=True)
class ReductionData:
    place: Place
    type: ReductionType
    a_v: int
    q_v: int
    count: int | None = None

    def __post_init__(self):
        if self.type is ReductionType.GOOD and self.a_v * self.a_v > 4 * self.q_v:
            raise AssertionError(f"Hasse bound violated at {self.place}: a_v = {self.a_v}")
        expected = {ReductionType.SPLIT: 1, ReductionType.NONSPLIT: -1, ReductionType.ADDITIVE: 0}
        if self.type in expected and self.a_v != expected[self.type]:
            raise AssertionError(f"inconsistent trace {self.a_v} for {self.type.value}")

    @property
    def is_good(self) -> bool:
        return self.type is ReductionType.GOOD

    def to_json(self) -> dict:
        return {"place": self.place.to_json(), "type": self.type.value, "a_v": self.a_v, "q_v": self.q_v}


def _residue_curve(model: EllipticSurfaceModel, v: Place):
    R = residue_field(v)
    return R, R.element(model.A), R.element(model.B)


def count_points_over(R, a: int, b: int) -> int:
    """#E(R) for y^2 = x^3 + a x + b, enumerating every x of the field R."""
    T = R.tables()
    xs = np.arange(R.order, dtype=np.int64)
    x2 = T.mul(xs, xs)
    f = T.add(T.mul(x2, xs), T.scale(a, xs))
    if b:
        f = T.add_scalar(f, b)
    return R.order + 1 + int(T.chi2[f].astype(np.int64).sum())


def point_count(model: EllipticSurfaceModel, v: Place) -> tuple[int, int]:
    """(#E(F_v), a_v) for a place of good reduction, by enumerating x in the residue field."""
    if v.is_infinity:
        inf_model, _ = infinite_place_model(model)
        return point_count(inf_model, Place(FqPoly.t(model.field)))
    local = minimal_model_at(model, v)
    if local.disc.valuation(v.poly) != 0:
        raise BadReductionPlace(f"{v} is a place of bad reduction")
    R, a, b = _residue_curve(local, v)
    count = count_points_over(R, a, b)
    return count, R.order + 1 - count


def reduction_type(model: EllipticSurfaceModel, v: Place, count: bool = True) -> ReductionData:
    """Classify the reduction of a locally minimal model at a finite place."""
    if v.is_infinity:
        raise ValueError("use reduction_at for the infinite place")
    pi = v.poly
    if model.A.valuation(pi) >= 4 and model.B.valuation(pi) >= 6:
        raise NotMinimal(f"model is not minimal at {v}")
    R = residue_field(v)
    if model.disc.valuation(pi) == 0:
        if not count:
            return ReductionData(v, ReductionType.GOOD, 0, R.order)
        n, a_v = point_count(model, v)
        return ReductionData(v, ReductionType.GOOD, a_v, R.order, n)
    if model.c4.valuation(pi) == 0:
        minus_c6 = R.neg(R.element(model.c6))
        if R.is_square(minus_c6):
            return ReductionData(v, ReductionType.SPLIT, 1, R.order)
        return ReductionData(v, ReductionType.NONSPLIT, -1, R.order)
    return ReductionData(v, ReductionType.ADDITIVE, 0, R.order)


def reduction_at(model: EllipticSurfaceModel, v: Place, count: bool = True) -> ReductionData:
    """Reduction data at any place, minimalising first (infinity via s = 1/t)."""
    if v.is_infinity:
        inf_model, _ = infinite_place_model(model)
        s = Place(FqPoly.t(model.field))
        data = reduction_type(minimal_model_at(inf_model, s), s, count)
        return ReductionData(v, data.type, data.a_v, data.q_v, data.count)
    return reduction_type(minimal_model_at(model, v), v, count)
