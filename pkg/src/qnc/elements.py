"""Derived phase-space elements realized in the coordinate/derivative algebras.

Every element is an :class:`NCPoly` that may carry powers of ``l`` (the square
root of the scaling element).  :class:`ElementDef` additionally exposes the
decomposition ``value = l^ell_offset * avatar`` with an l-free avatar, obtained
by replacing ``l^(2j)`` with powers of the scaling polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .coeff import ONE, I, QScalar, S, const, qpow
from .ncalg import AlgebraError, AlgebraPresentation, NCPoly, algebra
from .tensor import Space, build_tensor, tensor_parts

__all__ = [
    "ElementDef",
    "ElementError",
    "element",
    "element_names",
    "vector",
    "lambda_grade",
    "avatar_of",
]


class ElementError(KeyError):
    pass


@dataclass(frozen=True)
class ElementDef:
    space: Space
    name: str
    value: NCPoly = field(repr=False)
    ell_offset: int
    avatar: NCPoly = field(repr=False)
    # number of tau^-1/2 factors multiplied on the left to obtain ``value``
    # (nonzero only for the T generators, which contain tau^1/2)
    tau_clearing: int = 0

    @property
    def parts(self) -> dict[int, NCPoly]:
        """Graded pieces of ``value`` keyed by l-exponent."""
        return self.value.graded_parts()


def avatar_of(p: NCPoly) -> tuple[int, NCPoly]:
    """Split ``p = l^k * avatar`` with an l-free avatar.

    All l-exponents of ``p`` must share one parity; lower ones are absorbed
    by writing ``l^(k + 2j) = l^k Lambda^j``.
    """
    alg = p.alg
    if p.is_zero():
        return 0, p
    ks = p.ell_exponents()
    if len({k % 2 for k in ks}) > 1:
        raise AlgebraError(f"mixed l-parity {sorted(ks)}: no single avatar")
    kmin = min(ks)
    out = alg.zero()
    for k in sorted(ks):
        # l^k m = l^kmin l^(k - kmin) m
        piece = NCPoly(alg, {(0, m[1], m[2]): c for m, c in p.terms.items() if m[0] == k})
        out = out + alg.lambda_power((k - kmin) // 2) * piece
    return kmin, out


def lambda_grade(p: NCPoly) -> int:
    """Net grade ``D-degree - X-degree`` of a grade-homogeneous element."""
    grades = p.grades()
    if not grades:
        return 0
    if len(grades) > 1:
        raise AlgebraError(f"element is not grade-homogeneous; grades found: {sorted(grades)}")
    return next(iter(grades))


# ---------------------------------------------------------------------------
# builders


def _eps_contract(alg: AlgebraPresentation, left, right, scale: QScalar = ONE) -> tuple[NCPoly, ...]:
    """``Z^A = left^C right^D eps_{DC}^A``."""
    eps = build_tensor("eps3")
    out = [alg.zero() for _ in range(3)]
    for (d, c, a), v in eps.entries.items():
        out[a] = out[a] + (left[c] * right[d]).scale(v * scale)
    return tuple(out)


def _lower3(alg: AlgebraPresentation, v) -> tuple[NCPoly, ...]:
    g = build_tensor("g")
    out = [alg.zero() for _ in range(3)]
    for (a, b), c in g.entries.items():
        out[a] = out[a] + v[b].scale(c)
    return tuple(out)


def _euclid_builders(alg: AlgebraPresentation) -> dict[str, Callable[[], NCPoly]]:
    labs = alg.basis.labels
    q = qpow
    X, D = alg.X, alg.D
    dbar = tuple(alg.ell(-2) * av for av in alg.conj_derivative_avatars)
    half_i = -I * const(1) / const(2)  # -i/2

    def w_hat():
        return alg.one() + alg.dot(X, D).scale(q(2) * (q(2) - 1))

    def l_hat():
        return _eps_contract(alg, X, alg.conj_derivative_avatars, q(4))

    def tau_hat():
        return w_hat() + l_hat()[1].scale(q(2) * (ONE - q(2)))

    b: dict[str, Callable[[], NCPoly]] = {"Lambda": lambda: alg.lambda_poly}
    for i, a in enumerate(labs):
        b[f"Dbar{a}"] = (lambda i=i: dbar[i])
        b[f"P{a}"] = (lambda i=i: (D[i] - dbar[i]).scale(half_i))
        b[f"L{a}"] = (lambda i=i: alg.ell(-1) * l_hat()[i])
    b["W"] = lambda: alg.ell(-1) * w_hat()
    b["tau"] = lambda: alg.ell(-1) * tau_hat()

    eps_up = tensor_parts(Space.EUCLID3)["eps3_up"]  # eps^{ABF}

    def m_entry(i, j):
        ls = _lower3(alg, [alg.ell(-1) * x for x in l_hat()])
        out = alg.zero()
        for (a, bb, f), v in eps_up.entries.items():
            if a == i and bb == j:
                out = out + ls[f].scale(v)
        return out

    for i, a in enumerate(labs):
        for j, c in enumerate(labs):
            b[f"M{a}{c}"] = (lambda i=i, j=j: m_entry(i, j))
    return b


def _mink_builders(alg: AlgebraPresentation) -> dict[str, Callable[[], NCPoly]]:
    labs = alg.basis.labels
    q = qpow
    X, D = alg.X, alg.D
    dhat_avatar = alg.conj_derivative_avatars
    dhat = tuple(alg.ell(-2) * av for av in dhat_avatar)
    half_i = -I * const(1) / const(2)
    pa = build_tensor("PA")
    parts = tensor_parts(Space.MINK4)
    pplus, pminus = parts["Pplus"], parts["Pminus"]
    zero_idx = alg.basis.index("0")

    def u():
        k = q(2) * (q(2) - 1) / (q(2) + 1)
        return alg.ell(1) * (alg.one() + alg.dot(X, dhat).scale(k))

    def v_entry(i, j):
        out = alg.zero()
        for (a, bb, c, d), val in pa.entries.items():
            if a == i and bb == j:
                out = out + (X[c] * dhat[d]).scale(val)
        return alg.ell(1) * out

    vcache: dict = {}

    def v(i, j):
        if (i, j) not in vcache:
            vcache[(i, j)] = v_entry(i, j)
        return vcache[(i, j)]

    def proj_row(proj, a_idx, scale):
        out = alg.zero()
        for (a, bb, c, d), val in proj.entries.items():
            if a == a_idx and bb == zero_idx:
                out = out + v(c, d).scale(val * scale)
        return out

    b: dict[str, Callable[[], NCPoly]] = {"Lambda": lambda: alg.lambda_poly, "U": u}
    for i, a in enumerate(labs):
        b[f"Dhat{a}"] = (lambda i=i: dhat[i])
        b[f"P{a}"] = (lambda i=i: (D[i] + dhat[i].scale(q(4))).scale(half_i))
        for j, c in enumerate(labs):
            b[f"V{a}{c}"] = (lambda i=i, j=j: v(i, j))
        if a != "0":
            b[f"R{a}"] = (lambda i=i: proj_row(pplus, i, ONE))
            b[f"S{a}"] = (lambda i=i: proj_row(pminus, i, q(-2)))
    i3 = alg.basis.index("3")
    b["rho"] = lambda: proj_row(pplus, i3, ONE).scale(q(4) - 1) + u()
    b["sigma"] = lambda: proj_row(pminus, i3, q(-2)).scale(q(4) - 1) - u()
    return b


def _builders(alg: AlgebraPresentation) -> dict[str, Callable[[], NCPoly]]:
    cache = alg.__dict__.get("_element_builders")
    if cache is None:
        cache = _euclid_builders(alg) if alg.space is Space.EUCLID3 else _mink_builders(alg)
        alg.__dict__["_element_builders"] = cache
    return cache


def element_names(space: "Space | str") -> tuple[str, ...]:
    return tuple(_builders(algebra(space)))


def element_value(alg: AlgebraPresentation, name: str) -> NCPoly:
    """Realized value of ``name`` in ``alg`` (cached per algebra)."""
    values = alg.__dict__.setdefault("_element_values", {})
    hit = values.get(name)
    if hit is not None:
        return hit
    builders = _builders(alg)
    if name not in builders:
        raise ElementError(f"unknown element {name!r} for {alg.space.value}")
    val = builders[name]()
    values[name] = val
    return val


def element(space: "Space | str", name: str, alg: Optional[AlgebraPresentation] = None) -> ElementDef:
    """Catalog lookup; ``alg`` overrides the default presentation of ``space``."""
    sp = Space.parse(space)
    alg = alg or algebra(sp)
    val = element_value(alg, name)
    k, av = avatar_of(val)
    return ElementDef(sp, name, val, k, av)


def vector(space: "Space | str", stem: str, alg: Optional[AlgebraPresentation] = None) -> tuple[NCPoly, ...]:
    """Components ``stem+label`` in basis order, e.g. ``vector('Euclid3', 'L')``."""
    alg = alg or algebra(space)
    labs = alg.basis.labels
    if stem in ("R", "S"):
        labs = tuple(l for l in labs if l != "0")
    if stem == "X":
        return alg.X
    if stem == "D":
        return alg.D
    return tuple(element_value(alg, f"{stem}{l}") for l in labs)


def sqrt_factor() -> QScalar:
    """The adjoined square root ``s = sqrt(1 + q^2)``."""
    return S
