"""Small helpers shared by the algebra identity catalogs."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..coeff import ONE, I, const
from ..elements import element_value, vector
from ..ncalg import NCPoly, algebra
from ..tensor import Tensor

HALF_I = I * const(1) / const(2)  # i/2


@lru_cache(maxsize=None)
def alg_of(space: str):
    return algebra(space)


def el(space: str, name: str) -> NCPoly:
    return element_value(alg_of(space), name)


def vec(space: str, stem: str) -> tuple[NCPoly, ...]:
    return vector(space, stem, alg_of(space))


def total(alg, polys) -> NCPoly:
    out = alg.zero()
    for p in polys:
        out = out + p
    return out


def bilinear(t: Tensor, left: Sequence[NCPoly], right: Sequence[NCPoly], alg, swap: bool = False) -> dict:
    """``out[a, b] = t^{ab}_{cd} left^c right^d`` (``left^d right^c`` when ``swap``)."""
    out: dict = {}
    cache: dict = {}
    for (a, b, c, d), v in t.entries.items():
        key = (d, c) if swap else (c, d)
        if key not in cache:
            cache[key] = left[key[0]] * right[key[1]]
        out[(a, b)] = out.get((a, b), alg.zero()) + cache[key].scale(v)
    n = len(left)
    return {(a, b): out.get((a, b), alg.zero()) for a in range(n) for b in range(n)}


def lower(t_metric: Tensor, v: Sequence[NCPoly], alg) -> tuple[NCPoly, ...]:
    """``v_a = metric_{ab} v^b``."""
    out = [alg.zero() for _ in v]
    for (a, b), c in t_metric.entries.items():
        out[a] = out[a] + v[b].scale(c)
    return tuple(out)


def dot(t_metric: Tensor, u: Sequence[NCPoly], v: Sequence[NCPoly], alg) -> NCPoly:
    return total(alg, ((u[a] * v[b]).scale(c) for (a, b), c in t_metric.entries.items()))


def commutes(a: NCPoly, b: NCPoly):
    return a * b, b * a


def scalar_poly(alg, c=ONE) -> NCPoly:
    return alg.scalar(c)
