"""Normal ordering in the coordinate/derivative algebras with an invertible
scaling generator ``l`` adjoined.

A normal monomial is ``l^k X^alpha D^beta``: the ``l`` power first, then
coordinates, then derivatives, each block in basis order.  It is stored as
the tuple ``(k, alpha, beta)`` of an integer and two exponent tuples.

``l`` only ever moves by q-power exchange rules.  The identification
``l^2 = Lambda`` (the scaling polynomial) is not a rewrite rule; it is used
by :func:`clear_and_equal` alone.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional, Sequence, Union

from .coeff import ONE, ZERO, QScalar, qpow
from .tensor import IndexBasis, Space, Tensor, basis_of, build_tensor, tensor_parts

Mono = tuple  # (k, alpha, beta)
Terms = dict  # Mono -> QScalar
Scalarish = Union[QScalar, int]


class AlgebraError(ValueError):
    pass


def _add_into(acc: dict, key, c: QScalar) -> None:
    old = acc.get(key)
    if old is None:
        acc[key] = c
    else:
        v = old + c
        if v.is_zero():
            del acc[key]
        else:
            acc[key] = v


def _solve_quadratic_rules(equations: Sequence[Mapping[tuple[int, int], QScalar]],
                           n: int) -> dict[tuple[int, int], dict[tuple[int, int], QScalar]]:
    """Row-reduce homogeneous quadratic relations so every out-of-order word
    ``(a, b)`` with ``a > b`` is expressed through ordered words."""
    bad = [(a, b) for a in range(n) for b in range(n) if a > b]
    good = [(a, b) for a in range(n) for b in range(n) if a <= b]
    cols = bad + good
    rows = [[eq.get(c, ZERO) for c in cols] for eq in equations]
    pivots = []
    r = 0
    for ci in range(len(cols)):
        pr = next((i for i in range(r, len(rows)) if not rows[i][ci].is_zero()), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][ci].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][ci].is_zero():
                f = rows[i][ci]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(ci)
        r += 1
    if pivots[:len(bad)] != list(range(len(bad))) or len(pivots) != len(bad):
        raise AlgebraError("relations do not determine an ordering rule for every out-of-order word")
    rules = {}
    for i, w in enumerate(bad):
        rules[w] = {cols[j]: -rows[i][j] for j in range(len(bad), len(cols)) if not rows[i][j].is_zero()}
    return rules


@dataclass(eq=False)
class AlgebraPresentation:
    """Rewrite system for one space.

    ``xx``/``dd`` map an out-of-order pair ``(a, b)``, ``a > b``, to a
    combination of ordered pairs.  ``dx`` maps ``(a, b)`` to
    ``(constant, {(c, d): coeff})`` for ``D^a X^b = constant + sum coeff X^c D^d``.
    ``l X = q^ell_x X l`` and ``l D = q^ell_d D l``.
    """

    space: Space
    xx: dict
    dd: dict
    dx: dict
    ell_x: int
    ell_d: int
    name: str = ""
    _x_cache: dict = field(default_factory=dict, repr=False)
    _d_cache: dict = field(default_factory=dict, repr=False)
    _gm_cache: dict = field(default_factory=dict, repr=False)
    _mm_cache: dict = field(default_factory=dict, repr=False)

    @property
    def basis(self) -> IndexBasis:
        return basis_of(self.space)

    @property
    def dim(self) -> int:
        return self.basis.dim

    @cached_property
    def generator_names(self) -> tuple[str, ...]:
        labs = self.basis.labels
        return tuple(f"X{l}" for l in labs) + tuple(f"D{l}" for l in labs) + ("l", "l^-1")

    def parse_generator(self, name: str) -> tuple[str, int]:
        if name == "l":
            return ("l", 1)
        if name in ("l^-1", "linv"):
            return ("l", -1)
        if len(name) == 2 and name[0] in "XD" and name[1] in self.basis.labels:
            return (name[0].lower(), self.basis.index(name[1]))
        raise AlgebraError(f"generator {name!r} does not belong to the {self.space.value} algebra")

    def generator_label(self, kind: str, i: int) -> str:
        return ("X" if kind == "x" else "D") + self.basis.labels[i]

    def with_rules(self, xx=None, dd=None, dx=None, name: str = "") -> "AlgebraPresentation":
        """Copy with some rule tables replaced (fresh caches)."""
        out = AlgebraPresentation(self.space, self.xx if xx is None else xx, self.dd if dd is None else dd,
                                  self.dx if dx is None else dx, self.ell_x, self.ell_d, name or self.name)
        out.hat_coeff = self.hat_coeff
        return out

    # ------------------------------------------------------------------
    # core multiplication

    def weight(self, mono: Mono) -> int:
        """Exponent ``w`` with ``l m = q^w m l`` for the l-free part of ``mono``."""
        _, a, b = mono
        return self.ell_x * sum(a) + self.ell_d * sum(b)

    def _insert(self, kind: str, a: int, exps: tuple) -> dict:
        cache = self._x_cache if kind == "x" else self._d_cache
        key = (a, exps)
        hit = cache.get(key)
        if hit is not None:
            return hit
        rules = self.xx if kind == "x" else self.dd
        first = next((i for i, e in enumerate(exps) if e), None)
        if first is None or a <= first:
            e = list(exps)
            e[a] += 1
            out = {tuple(e): ONE}
        else:
            rest = list(exps)
            rest[first] -= 1
            rest = tuple(rest)
            out: dict = {}
            for (c, d), coef in rules[(a, first)].items():
                for t1, c1 in self._insert(kind, d, rest).items():
                    for t2, c2 in self._insert(kind, c, t1).items():
                        _add_into(out, t2, coef * c1 * c2)
        cache[key] = out
        return out

    def gen_times(self, kind: str, a: int, alpha: tuple, beta: tuple) -> dict:
        """``generator * X^alpha D^beta`` as a dict ``(alpha', beta') -> coeff``."""
        key = (kind, a, alpha, beta)
        hit = self._gm_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        if kind == "x":
            for al, c in self._insert("x", a, alpha).items():
                out[(al, beta)] = c
        else:
            first = next((i for i, e in enumerate(alpha) if e), None)
            if first is None:
                for be, c in self._insert("d", a, beta).items():
                    out[(alpha, be)] = c
            else:
                rest = list(alpha)
                rest[first] -= 1
                rest = tuple(rest)
                const_term, lin = self.dx[(a, first)]
                if not const_term.is_zero():
                    _add_into(out, (rest, beta), const_term)
                for (c, d), coef in lin.items():
                    for (al1, be1), c1 in self.gen_times("d", d, rest, beta).items():
                        for al2, c2 in self._insert("x", c, al1).items():
                            _add_into(out, (al2, be1), coef * c1 * c2)
        self._gm_cache[key] = out
        return out

    def mono_times(self, m1: tuple, m2: tuple) -> dict:
        """Product of l-free normal monomials ``(alpha, beta)``."""
        key = (m1, m2)
        hit = self._mm_cache.get(key)
        if hit is not None:
            return hit
        a1, b1 = m1
        cur = {m2: ONE}
        for kind, exps in (("d", b1), ("x", a1)):
            for i in reversed(range(self.dim)):
                for _ in range(exps[i]):
                    nxt: dict = {}
                    for (al, be), c in cur.items():
                        for t, c2 in self.gen_times(kind, i, al, be).items():
                            _add_into(nxt, t, c * c2)
                    cur = nxt
        self._mm_cache[key] = cur
        return cur

    # ------------------------------------------------------------------
    # constructors for elements of this algebra

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return self.scalar(ONE)

    def scalar(self, c: Scalarish) -> "NCPoly":
        c = QScalar.of(c)
        z = (0,) * self.dim
        return NCPoly(self, {} if c.is_zero() else {(0, z, z): c})

    def ell(self, k: int = 1) -> "NCPoly":
        z = (0,) * self.dim
        return NCPoly(self, {(k, z, z): ONE})

    def x(self, label: "str | int") -> "NCPoly":
        i = self.basis.index(label) if isinstance(label, str) else label
        e = [0] * self.dim
        e[i] = 1
        return NCPoly(self, {(0, tuple(e), (0,) * self.dim): ONE})

    def d(self, label: "str | int") -> "NCPoly":
        i = self.basis.index(label) if isinstance(label, str) else label
        e = [0] * self.dim
        e[i] = 1
        return NCPoly(self, {(0, (0,) * self.dim, tuple(e)): ONE})

    def gen(self, name: str) -> "NCPoly":
        kind, i = self.parse_generator(name)
        if kind == "l":
            return self.ell(i)
        return self.x(i) if kind == "x" else self.d(i)

    def word(self, names: Sequence[str], coeff: Scalarish = 1) -> "NCPoly":
        out = self.scalar(coeff)
        for n in names:
            out = out * self.gen(n)
        return out

    # ------------------------------------------------------------------
    # metric helpers

    @cached_property
    def metric(self) -> Tensor:
        return build_tensor("g" if self.space is Space.EUCLID3 else "eta")

    @cached_property
    def metric_inv(self) -> Tensor:
        return build_tensor("g_inv" if self.space is Space.EUCLID3 else "eta_inv")

    def dot(self, u: Sequence["NCPoly"], v: Sequence["NCPoly"]) -> "NCPoly":
        """``u o v = metric_{ab} u^a v^b``."""
        out = self.zero()
        for (a, b), c in self.metric.entries.items():
            out = out + (u[a] * v[b]).scale(c)
        return out

    @cached_property
    def X(self) -> tuple["NCPoly", ...]:
        return tuple(self.x(i) for i in range(self.dim))

    @cached_property
    def D(self) -> tuple["NCPoly", ...]:
        return tuple(self.d(i) for i in range(self.dim))

    def lower(self, v: Sequence["NCPoly"]) -> tuple["NCPoly", ...]:
        """``v_a = metric_{ab} v^b``."""
        out = [self.zero() for _ in range(self.dim)]
        for (a, b), c in self.metric.entries.items():
            out[a] = out[a] + v[b].scale(c)
        return tuple(out)

    def raise_(self, v: Sequence["NCPoly"]) -> tuple["NCPoly", ...]:
        out = [self.zero() for _ in range(self.dim)]
        for (a, b), c in self.metric_inv.entries.items():
            out[a] = out[a] + v[b].scale(c)
        return tuple(out)

    # ------------------------------------------------------------------
    # scaling polynomial and conjugation data

    @cached_property
    def lambda_poly(self) -> "NCPoly":
        """The scaling element as an l-free polynomial."""
        X, D = self.X, self.D
        xd = self.dot(X, D)
        xxdd = self.dot(X, X) * self.dot(D, D)
        q = qpow
        if self.space is Space.EUCLID3:
            return self.one() + xd.scale(q(4) - 1) + xxdd.scale(q(2) * (q(2) - 1) ** 2)
        return self.one() + xd.scale(q(-2) * (ONE - q(2))) + \
            xxdd.scale(q(-2) * (q(2) - 1) ** 2 / (q(2) + 1) ** 2)

    def lambda_power(self, n: int) -> "NCPoly":
        cache = self.__dict__.setdefault("_lambda_powers", {0: self.one(), 1: self.lambda_poly})
        if n not in cache:
            cache[n] = self.lambda_power(n - 1) * self.lambda_poly
        return cache[n]

    hat_coeff: Optional[QScalar] = None

    @cached_property
    def conj_derivative_avatars(self) -> tuple["NCPoly", ...]:
        """Polynomial parts ``Dbar^a`` with ``conj-derivative^a = l^-2 Dbar^a``.

        Euclid3: ``-q^-6 [D^a + q^2 (q^2 - 1) X^a (D o D)]``.
        Mink4: ``D^a + c X^a (D o D)`` with ``c = hat_coeff``.
        """
        X, D = self.X, self.D
        dd = self.dot(D, D)
        q = qpow
        if self.space is Space.EUCLID3:
            return tuple((D[a] + (X[a] * dd).scale(q(2) * (q(2) - 1))).scale(-q(-6)) for a in range(self.dim))
        c = self.hat_coeff if self.hat_coeff is not None else default_hat_coeff()
        return tuple(D[a] + (X[a] * dd).scale(c) for a in range(self.dim))

    @cached_property
    def conj_metric(self) -> dict:
        """Index map of the conjugation: ``g`` on spatial labels, identity on time."""
        g = build_tensor("g").entries
        if self.space is Space.EUCLID3:
            return dict(g)
        out = {(0, 0): ONE}
        out.update({(r + 1, b + 1): c for (r, b), c in g.items()})
        return out

    @cached_property
    def _conj_images(self) -> dict:
        q = qpow
        cm = self.conj_metric
        imgs = {}
        for a in range(self.dim):
            imgs[("x", a)] = sum((self.x(b).scale(c) for (r, b), c in cm.items() if r == a), self.zero())
        inv2 = self.ell(-2)
        cd = [inv2 * av for av in self.conj_derivative_avatars]
        factor = ONE if self.space is Space.EUCLID3 else -q(4)
        for a in range(self.dim):
            img = sum((cd[b].scale(c) for (r, b), c in cm.items() if r == a), self.zero())
            imgs[("d", a)] = img.scale(factor)
        lbar = q(-6) if self.space is Space.EUCLID3 else q(4)
        imgs[("l", 1)] = self.ell(-1).scale(lbar)
        imgs[("l", -1)] = self.ell(1).scale(lbar.inverse())
        return imgs

    def conj_mono(self, mono: Mono) -> "NCPoly":
        cache = self.__dict__.setdefault("_conj_cache", {})
        hit = cache.get(mono)
        if hit is not None:
            return hit
        k, alpha, beta = mono
        imgs = self._conj_images
        out = self.one()
        # bar(l^k X^alpha D^beta) = bar(D^beta)^rev bar(X^alpha)^rev bar(l)^k
        for i in reversed(range(self.dim)):
            for _ in range(beta[i]):
                out = out * imgs[("d", i)]
        for i in reversed(range(self.dim)):
            for _ in range(alpha[i]):
                out = out * imgs[("x", i)]
        lk = imgs[("l", 1 if k > 0 else -1)]
        for _ in range(abs(k)):
            out = out * lk
        cache[mono] = out
        return out


def default_hat_coeff() -> QScalar:
    """Presumed coefficient ``q^-2 (1 - q^2)/(1 + q^2)`` of the Minkowski conjugate derivative."""
    return qpow(-2) * (ONE - qpow(2)) / (ONE + qpow(2))


class NCPoly:
    """Finite sum of coefficient times normal monomial in one algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: AlgebraPresentation, terms: Terms):
        self.alg = alg
        self.terms = terms

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "NCPoly") -> None:
        if other.alg is not self.alg:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            other = self.alg.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, c)
        return NCPoly(self.alg, out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "NCPoly":
        return self.alg.scalar(other) - self

    def scale(self, c: Scalarish) -> "NCPoly":
        c = QScalar.of(c)
        if c.is_zero():
            return self.alg.zero()
        return NCPoly(self.alg, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            return self.scale(other)
        return nc_mul(self, other)

    def __rmul__(self, c) -> "NCPoly":
        return self.scale(c)

    def __pow__(self, n: int) -> "NCPoly":
        if n < 0:
            if len(self.terms) == 1:
                (m, c), = self.terms.items()
                if not any(m[1]) and not any(m[2]):
                    z = m[1]
                    return NCPoly(self.alg, {(-m[0], z, z): c.inverse()})
            raise AlgebraError("negative powers exist only for scalar multiples of l")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QScalar)):
            other = self.alg.scalar(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.alg is other.alg and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def conjugate(self) -> "NCPoly":
        return nc_conjugate(self)

    # -- structure -----------------------------------------------------
    def ell_exponents(self) -> set[int]:
        return {m[0] for m in self.terms}

    def ell_part(self, k: int) -> "NCPoly":
        """Terms with l-exponent ``k`` (the l factor kept)."""
        return NCPoly(self.alg, {m: c for m, c in self.terms.items() if m[0] == k})

    def graded_parts(self) -> dict[int, "NCPoly"]:
        return {k: self.ell_part(k) for k in sorted(self.ell_exponents())}

    def grades(self) -> set[int]:
        """Set of net grades ``D-degree - X-degree`` over the terms."""
        return {sum(m[2]) - sum(m[1]) for m in self.terms}

    def max_degree(self) -> int:
        return max((sum(m[1]) + sum(m[2]) for m in self.terms), default=0)

    def coefficients(self) -> list[QScalar]:
        return list(self.terms.values())

    def sorted_terms(self) -> list[tuple[Mono, QScalar]]:
        def key(item):
            (k, a, b), _ = item
            return (k, sum(a) + sum(b), tuple(-x for x in a), tuple(-x for x in b))
        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"NCPoly[{self.alg.space.value}]({self})"


def format_poly(p: NCPoly, max_terms: Optional[int] = None) -> str:
    """Human-readable form, with ``l`` powers written on the right.

    Internally ``l`` is leftmost; ``l^k m = q^(k w) m l^k`` converts.
    """
    if p.is_zero():
        return "0"
    alg = p.alg
    pieces = []
    items = p.sorted_terms()
    for idx, ((k, a, b), c) in enumerate(items):
        if max_terms is not None and idx >= max_terms:
            pieces.append(f"... ({len(items) - max_terms} more terms)")
            break
        if k:
            c = c * qpow(k * alg.weight((k, a, b)))
        factors = []
        for i in range(alg.dim):
            factors += [alg.generator_label("x", i)] * a[i]
        for i in range(alg.dim):
            factors += [alg.generator_label("d", i)] * b[i]
        if k == 1:
            factors.append("l")
        elif k:
            factors.append(f"l^{k}")
        pieces.append(_term_string(c, factors))
    out = pieces[0]
    for s in pieces[1:]:
        out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
    return out


def _term_string(c: QScalar, factors: list[str]) -> str:
    if not factors:
        return str(c)
    mono = "*".join(factors)
    cs = str(c)
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    if c.is_atomic_str():
        return f"{cs}*{mono}"
    return f"({cs})*{mono}"


# ---------------------------------------------------------------------------
# operations

def nc_mul(p1: NCPoly, p2: NCPoly) -> NCPoly:
    p1._check(p2)
    alg = p1.alg
    out: dict = {}
    for (k1, a1, b1), c1 in p1.terms.items():
        w1 = alg.ell_x * sum(a1) + alg.ell_d * sum(b1)
        for (k2, a2, b2), c2 in p2.terms.items():
            c = c1 * c2
            if k2 and w1:
                # m1 l^k2 = q^(-k2 w1) l^k2 m1
                c = c * qpow(-k2 * w1)
            k = k1 + k2
            for (a, b), c3 in alg.mono_times((a1, b1), (a2, b2)).items():
                _add_into(out, (k, a, b), c * c3)
    return NCPoly(alg, out)


def reduce(alg: AlgebraPresentation, expr) -> NCPoly:
    """Normal form of ``expr``.

    ``expr`` may be an :class:`NCPoly`, a generator name, a word (sequence
    of generator names) or a sum given as ``[(coeff, word), ...]``.
    """
    if isinstance(expr, NCPoly):
        if expr.alg is not alg:
            raise AlgebraError("expression belongs to another algebra")
        return expr
    if isinstance(expr, str):
        return alg.gen(expr)
    expr = list(expr)
    if expr and isinstance(expr[0], tuple):
        out = alg.zero()
        for coeff, word in expr:
            out = out + alg.word(word, coeff)
        return out
    return alg.word(expr)


def nc_conjugate(p: NCPoly) -> NCPoly:
    """Anti-linear anti-automorphism: reverses products and conjugates scalars."""
    alg = p.alg
    out = alg.zero()
    for m, c in p.terms.items():
        out = out + alg.conj_mono(m).scale(c.conjugate())
    return out


# ---------------------------------------------------------------------------
# deciding equality in the localized algebra

@dataclass
class VerificationResult:
    status: str
    residue: NCPoly
    clearing_power: int

    @property
    def equal(self) -> bool:
        return self.status == "equal"

    def __bool__(self) -> bool:
        return self.equal


def clear(d: NCPoly) -> tuple[NCPoly, int]:
    """Multiply ``d`` on the left by the least power of the scaling element
    making every l-exponent nonnegative, then replace ``l^(2j)`` by ``Lambda^j``.

    ``d`` must have l-exponents of one parity.  For odd parity one extra
    ``l`` is multiplied first.  Returns the l-free result and the number of
    ``Lambda`` factors applied.
    """
    alg = d.alg
    if d.is_zero():
        return d, 0
    ks = d.ell_exponents()
    if len({k % 2 for k in ks}) > 1:
        raise AlgebraError("clear() needs l-exponents of a single parity")
    if min(ks) % 2:
        d = alg.ell(1) * d
        ks = d.ell_exponents()
    n = max(0, -min(ks) // 2)
    out = alg.zero()
    for k in sorted(ks):
        j = k // 2 + n
        part = NCPoly(alg, {(0, m[1], m[2]): c for m, c in d.terms.items() if m[0] == k})
        out = out + alg.lambda_power(j) * part
    return out, n


def clear_and_equal(p1: NCPoly, p2: NCPoly) -> VerificationResult:
    """Decide ``p1 == p2`` where ``l`` is invertible and ``l^2`` is the scaling element.

    The difference is split by l-parity (the two parity classes are
    independent over the localized coordinate/derivative algebra); each class
    is cleared to an l-free polynomial, which is then compared with zero.
    """
    p1._check(p2)
    alg = p1.alg
    d = p1 - p2
    if d.is_zero():
        return VerificationResult("equal", d, 0)
    ks = d.ell_exponents()
    if len(ks) == 1:
        return VerificationResult("unequal", d, 0)
    residue = alg.zero()
    power = 0
    for parity in (0, 1):
        part = NCPoly(alg, {m: c for m, c in d.terms.items() if m[0] % 2 == parity})
        if part.is_zero():
            continue
        cleared, n = clear(part)
        power = max(power, n)
        residue = residue + cleared
    return VerificationResult("equal" if residue.is_zero() else "unequal", residue, power)


# ---------------------------------------------------------------------------
# rule construction

def _quadratic_relation_equations(proj: Tensor) -> list[dict]:
    """Rows ``sum_{cd} P^{ab}_{cd} w_{cd} = 0`` for every ``(a, b)``."""
    eqs: dict = {}
    for (a, b, c, d), v in proj.entries.items():
        eqs.setdefault((a, b), {})[(c, d)] = v
    return list(eqs.values())


def _dx_rules(const_t: Tensor, lin_t: Tensor, lin_scale: QScalar) -> dict:
    """``D^a X^b = const^{ab} + lin_scale * lin^{ab}_{cd} X^c D^d``."""
    n = const_t.basis.dim
    rules = {}
    for a in range(n):
        for b in range(n):
            rules[(a, b)] = (const_t.entries.get((a, b), ZERO), {})
    for (a, b, c, d), v in lin_t.entries.items():
        rules[(a, b)][1][(c, d)] = lin_scale * v
    return rules


_ALGEBRAS: dict = {}


def euclid_algebra() -> AlgebraPresentation:
    """Euclidean presentation: triplet projector kills ``XX`` and ``DD``;
    ``D^A X^B = g^{AB} + Rinv^{AB}_{CD} X^C D^D``; ``l X = q^2 X l``,
    ``l D = q^-2 D l``."""
    if "E" not in _ALGEBRAS:
        e = tensor_parts(Space.EUCLID3)
        eqs = _quadratic_relation_equations(e["P3"])
        xx = _solve_quadratic_rules(eqs, 3)
        dd = _solve_quadratic_rules(eqs, 3)
        dx = _dx_rules(e["g_inv"], e["rhat3_inv"], ONE)
        _ALGEBRAS["E"] = AlgebraPresentation(Space.EUCLID3, xx, dd, dx, ell_x=2, ell_d=-2, name="Euclid3")
    return _ALGEBRAS["E"]


def mink_algebra() -> AlgebraPresentation:
    """Minkowski presentation: selfdual and antiselfdual projectors kill
    ``XX`` and ``DD``; ``D^a X^b = eta^{ab} + q^-2 RIIinv^{ab}_{cd} X^c D^d``;
    ``l X = q^-1 X l``, ``l D = q D l``."""
    if "M" not in _ALGEBRAS:
        m = tensor_parts(Space.MINK4)
        eqs = _quadratic_relation_equations(m["Pplus"]) + _quadratic_relation_equations(m["Pminus"])
        xx = _solve_quadratic_rules(eqs, 4)
        dd = _solve_quadratic_rules(eqs, 4)
        dx = _dx_rules(m["eta_inv"], m["RII_inv"], qpow(-2))
        _ALGEBRAS["M"] = AlgebraPresentation(Space.MINK4, xx, dd, dx, ell_x=-1, ell_d=1, name="Mink4")
    return _ALGEBRAS["M"]


def algebra(space: "Space | str") -> AlgebraPresentation:
    return euclid_algebra() if Space.parse(space) is Space.EUCLID3 else mink_algebra()


# ---------------------------------------------------------------------------
# confluence

@dataclass
class Ambiguity:
    word: tuple[str, ...]
    left: NCPoly
    right: NCPoly

    @property
    def resolved(self) -> bool:
        return (self.left - self.right).is_zero()


def _one_step(alg: AlgebraPresentation, g1: tuple, g2: tuple) -> Optional[NCPoly]:
    """Apply the rewrite rule to the pair ``g1 g2``; None if already ordered."""
    (k1, i), (k2, j) = g1, g2
    if k1 == "x" and k2 == "x" and i > j:
        return _pairs(alg, "x", alg.xx[(i, j)])
    if k1 == "d" and k2 == "d" and i > j:
        return _pairs(alg, "d", alg.dd[(i, j)])
    if k1 == "d" and k2 == "x":
        const_term, lin = alg.dx[(i, j)]
        out = alg.scalar(const_term)
        for (c, d), v in lin.items():
            e1 = [0] * alg.dim
            e2 = [0] * alg.dim
            e1[c] += 1
            e2[d] += 1
            out = out + NCPoly(alg, {(0, tuple(e1), tuple(e2)): v})
        return out
    return None


def _e(alg, c, d, kind):
    e = [0] * alg.dim
    e[c] += 1
    e[d] += 1
    return tuple(e)


def _pairs(alg: AlgebraPresentation, kind: str, rule: dict) -> NCPoly:
    z = (0,) * alg.dim
    out: dict = {}
    for (c, d), v in rule.items():
        e = _e(alg, c, d, kind)
        _add_into(out, (0, e, z) if kind == "x" else (0, z, e), v)
    return NCPoly(alg, out)


def overlap_check(alg: AlgebraPresentation) -> list[Ambiguity]:
    """Resolve every overlap ambiguity ``g1 g2 g3`` of the quadratic rules.

    Path A rewrites ``g1 g2`` first, path B rewrites ``g2 g3`` first; the
    rest of each path is finished by the normal-ordering engine.
    """
    gens = [("x", i) for i in range(alg.dim)] + [("d", i) for i in range(alg.dim)]

    def as_poly(g):
        return alg.x(g[1]) if g[0] == "x" else alg.d(g[1])

    out = []
    for g1, g2, g3 in itertools.product(gens, repeat=3):
        s12 = _one_step(alg, g1, g2)
        s23 = _one_step(alg, g2, g3)
        if s12 is None or s23 is None:
            continue
        left = s12 * as_poly(g3)
        right = as_poly(g1) * s23
        word = tuple(alg.generator_label(k, i) for k, i in (g1, g2, g3))
        out.append(Ambiguity(word, left, right))
    return out
