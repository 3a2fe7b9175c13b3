"""Short Weierstrass models y^2 = x^3 + A(t) x + B(t) over F_q[t]."""

from __future__ import annotations

from ..errors import SingularModel, UnsupportedCharacteristic
from ..fields import FqPoly, Place


def _const(F, c: int) -> int:
    """Image of the integer c in F (prime-field elements are the codes 0..p-1)."""
    return c % F.p


class EllipticSurfaceModel:
    """An elliptic curve over F_q(t) given by polynomial coefficients A, B."""

    __slots__ = ("field", "A", "B", "disc", "c4", "c6")

    def __init__(self, field, A: FqPoly, B: FqPoly, check: bool = True):
        self.field = field
        self.A = A if isinstance(A, FqPoly) else FqPoly(field, A)
        self.B = B if isinstance(B, FqPoly) else FqPoly(field, B)
        self.disc = self.c4 = self.c6 = None
        if check:
            validate(self)

    @classmethod
    def from_coefficients(cls, field, A, B) -> EllipticSurfaceModel:
        return cls(field, FqPoly(field, [a % field.order if isinstance(a, int) else a for a in A]),
                   FqPoly(field, [b % field.order if isinstance(b, int) else b for b in B]))

    def __eq__(self, other):
        return isinstance(other, EllipticSurfaceModel) and (self.A, self.B) == (other.A, other.B)

    def __hash__(self):
        return hash((self.A, self.B))

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json()}

    def __repr__(self):
        return f"y^2 = x^3 + ({self.A})*x + ({self.B})"


def validate(model: EllipticSurfaceModel) -> EllipticSurfaceModel:
    """Check p >= 5 and a nonzero discriminant; cache disc, c4 and c6."""
    F = model.field
    if F.p < 5:
        raise UnsupportedCharacteristic(f"characteristic {F.p} < 5 is not supported")
    A, B = model.A, model.B
    core = (A * A * A).scale(_const(F, 4)) + (B * B).scale(_const(F, 27))
    disc = core.scale(_const(F, -16))
    if not disc:
        raise SingularModel(f"discriminant of {model} vanishes identically")
    model.disc = disc
    model.c4 = A.scale(_const(F, -48))
    model.c6 = B.scale(_const(F, -864))
    return model


def minimal_model_at(model: EllipticSurfaceModel, v: Place) -> EllipticSurfaceModel:
    """Divide out pi^4, pi^6 while both valuations allow it."""
    if v.is_infinity:
        raise ValueError("minimal_model_at expects a finite place; see infinite_place_model")
    pi = v.poly
    A, B = model.A, model.B
    changed = False
    while A.valuation(pi) >= 4 and B.valuation(pi) >= 6:
        A = A // (pi * pi * pi * pi)
        B = B // (pi * pi * pi * pi * pi * pi)
        changed = True
    if not changed:
        return model
    return EllipticSurfaceModel(model.field, A, B)


def _reverse_to(f: FqPoly, total: int) -> FqPoly:
    """s^total * f(1/s)."""
    out = [0] * (total + 1)
    for i, c in enumerate(f.coeffs):
        out[total - i] = c
    return FqPoly(f.field, out)


def infinite_place_model(model: EllipticSurfaceModel) -> tuple[EllipticSurfaceModel, int]:
    """Model in s = 1/t, with the smallest k making (s^4k A(1/s), s^6k B(1/s)) polynomial.

    The infinite place of K is the place s = 0 of the returned model.
    """
    dA = model.A.degree if model.A else 0
    dB = model.B.degree if model.B else 0
    k = max(-(-dA // 4), -(-dB // 6), 0)
    if k == 0:
        return model, 0
    A = _reverse_to(model.A, 4 * k) if model.A else model.A
    B = _reverse_to(model.B, 6 * k) if model.B else model.B
    return EllipticSurfaceModel(model.field, A, B), k
