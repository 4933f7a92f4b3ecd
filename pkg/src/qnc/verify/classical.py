"""Classical limit of the commutation rules: at ``q = 1`` every exchange is a plain swap."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..coeff import GaussianRational, scalar_eval
from ..ncalg import AlgebraPresentation, algebra
from ..tensor import Space

_ONE = GaussianRational(Fraction(1), Fraction(0))
_ZERO = GaussianRational(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Defect:
    rule: str  # "xx", "dd", "dx", "l"
    key: tuple
    term: tuple
    value: GaussianRational


def _swap_defects(rule: str, key: tuple, lin: dict, q0) -> list[Defect]:
    # classical term of a pair (a, b) is the swapped pair (b, a) with coefficient 1
    a, b = key
    out = []
    for term in set(lin) | {(b, a)}:
        got = scalar_eval(lin[term], q0) if term in lin else _ZERO
        want = _ONE if term == (b, a) else _ZERO
        if got != want:
            out.append(Defect(rule, key, term, got))
    return out


def classical_defects(alg: AlgebraPresentation, q0=1) -> list[Defect]:
    """Terms of the rewrite rules that do not reduce to the commutative ones at ``q = q0``."""
    out: list[Defect] = []
    for rule, table in (("xx", alg.xx), ("dd", alg.dd)):
        for key, lin in table.items():
            out += _swap_defects(rule, key, lin, q0)
    for key, (_, lin) in alg.dx.items():
        out += _swap_defects("dx", key, lin, q0)
    q0 = Fraction(q0)
    for kind, w in (("x", alg.ell_x), ("d", alg.ell_d)):
        val = GaussianRational(q0 ** w, Fraction(0))
        if val != _ONE:
            out.append(Defect("l", (kind,), (w,), val))
    return out


def classical_limit_ok(space: "Space | str", q0=1) -> bool:
    return not classical_defects(algebra(space), q0)
