"""Exact coefficient field: rational functions in ``q`` over the Gaussian
rationals, optionally extended by ``s`` with ``s**2 == 1 + q**2``.

Two layers:

* :class:`RatFunc` -- an element of Q(q) kept as a reduced fraction of
  ``flint.fmpq_poly`` with a monic denominator, so equality is syntactic.
* :class:`QScalar` -- ``a + b*s`` with ``a, b`` in Q(i)(q).  Internally the
  four real parts over the basis ``1, i, s, i*s`` are stored as
  :class:`RatFunc` values (``None`` for zero).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import flint

_ZERO_POLY = flint.fmpq_poly([])
_ONE_POLY = flint.fmpq_poly([1])


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _poly_key(p: flint.fmpq_poly) -> tuple:
    return tuple((int(c.p), int(c.q)) for c in p.coeffs())


class RatFunc:
    """Reduced fraction ``num/den`` in Q(q) with monic ``den``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced: bool = False):
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly([num]) if not isinstance(num, list) else flint.fmpq_poly(num)
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly([den]) if not isinstance(den, list) else flint.fmpq_poly(den)
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            if num.is_zero():
                den = _ONE_POLY
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @staticmethod
    def q_pow(k: int) -> "RatFunc":
        return _q_pow(k)

    @staticmethod
    def from_fraction(x) -> "RatFunc":
        x = Fraction(x)
        return RatFunc(flint.fmpq_poly([flint.fmpq(x.numerator, x.denominator)]), _reduced=True)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.is_one()

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _reduced=True)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero() or other.num.is_zero():
            return RAT_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, _ONE_POLY, _reduced=True)
        # cross-cancel keeps intermediate degrees small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num // g1, other.den // g1) if not g1.is_one() else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if not g2.is_one() else (other.num, self.den)
        return RatFunc(n1 * n2, d1 * d2, _reduced=True)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        lc = self.num.leading_coefficient()
        return RatFunc(self.den / lc, self.num / lc, _reduced=True)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, _reduced=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((_poly_key(self.num), _poly_key(self.den)))
        return self._hash

    def eval(self, q0) -> Fraction:
        x = flint.fmpq(Fraction(q0).numerator, Fraction(q0).denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole at q = {q0}")
        v = self.num(x) / d
        return Fraction(int(v.p), int(v.q))

    # printing -------------------------------------------------------------
    def laurent_split(self) -> tuple[dict[int, Fraction], flint.fmpq_poly]:
        """Split into ``(laurent numerator terms, denominator with nonzero constant)``."""
        shift = 0
        den = self.den
        coeffs = den.coeffs()
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
            shift += 1
        den = flint.fmpq_poly(coeffs)
        terms = {}
        for e, c in enumerate(self.num.coeffs()):
            if c != 0:
                terms[e - shift] = Fraction(int(c.p), int(c.q))
        return terms, den

    def __str__(self) -> str:
        if self.num.is_zero():
            return "0"
        terms, den = self.laurent_split()
        top = _format_laurent(terms)
        if den.is_one():
            return top
        bottom_terms = {e: Fraction(int(c.p), int(c.q)) for e, c in enumerate(den.coeffs()) if c != 0}
        bottom = _format_laurent(bottom_terms)
        if len(terms) > 1:
            top = f"({top})"
        if len(bottom_terms) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _format_monomial(c: Fraction, e: int) -> str:
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        qpart = "q" if e == 1 else f"q^{e}"
        body = qpart if mag == 1 else f"{mag}*{qpart}"
    return ("-" if c < 0 else "") + body


def _format_laurent(terms: dict[int, Fraction]) -> str:
    out = ""
    for i, e in enumerate(sorted(terms, reverse=True)):
        t = _format_monomial(terms[e], e)
        if i == 0:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


RAT_ZERO = RatFunc(_ZERO_POLY, _reduced=True)
RAT_ONE = RatFunc(_ONE_POLY, _reduced=True)


@lru_cache(maxsize=None)
def _q_pow(k: int) -> RatFunc:
    if k >= 0:
        return RatFunc(_ONE_POLY.left_shift(k), _reduced=True)
    return RatFunc(_ONE_POLY, _ONE_POLY.left_shift(-k), _reduced=True)


_S_SQUARED = RatFunc(flint.fmpq_poly([1, 0, 1]), _reduced=True)


@dataclass(frozen=True)
class GaussianRational:
    """Exact ``re + im*i`` with rational parts; result type of :func:`scalar_eval`."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, o: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __mul__(self, o: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


Part = Optional[RatFunc]


def _add(a: Part, b: Part) -> Part:
    if a is None:
        return b
    if b is None:
        return a
    r = a + b
    return None if r.is_zero() else r


def _mul(a: Part, b: Part) -> Part:
    if a is None or b is None:
        return None
    return a * b


def _neg(a: Part) -> Part:
    return None if a is None else -a


class QScalar:
    """Element ``re + im*i + (sre + sim*i)*s`` of Q(i)(q)[s]/(s^2 - 1 - q^2).

    Values are immutable.  ``extension`` records whether ``s`` has been
    switched on; mixing plain and extended operands promotes.  Equality and
    hashing are by value only.
    """

    __slots__ = ("re", "im", "sre", "sim", "extension", "_hash")

    def __init__(self, re: Part = None, im: Part = None, sre: Part = None, sim: Part = None,
                 extension: bool = False):
        self.re = None if re is None or re.is_zero() else re
        self.im = None if im is None or im.is_zero() else im
        self.sre = None if sre is None or sre.is_zero() else sre
        self.sim = None if sim is None or sim.is_zero() else sim
        self.extension = extension or self.sre is not None or self.sim is not None
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def of(cls, x: Union["QScalar", RatFunc, int, Fraction]) -> "QScalar":
        if isinstance(x, QScalar):
            return x
        if isinstance(x, RatFunc):
            return cls(x)
        return cls(RatFunc.from_fraction(x))

    @classmethod
    def ratfunc(cls, num: list, den: Optional[list] = None) -> "QScalar":
        """Build from ascending coefficient lists of numerator and denominator."""
        return cls(RatFunc(flint.fmpq_poly(num), None if den is None else flint.fmpq_poly(den)))

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re is None and self.im is None and self.sre is None and self.sim is None

    def is_real(self) -> bool:
        return self.im is None and self.sim is None

    def has_sqrt(self) -> bool:
        return self.sre is not None or self.sim is not None

    def parts(self) -> tuple[Part, Part, Part, Part]:
        return self.re, self.im, self.sre, self.sim

    # arithmetic -----------------------------------------------------------
    def __add__(self, o) -> "QScalar":
        o = QScalar.of(o)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        return QScalar(_add(self.re, o.re), _add(self.im, o.im), _add(self.sre, o.sre),
                       _add(self.sim, o.sim), self.extension or o.extension)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar(_neg(self.re), _neg(self.im), _neg(self.sre), _neg(self.sim), self.extension)

    def __sub__(self, o) -> "QScalar":
        return self + (-QScalar.of(o))

    def __rsub__(self, o) -> "QScalar":
        return QScalar.of(o) - self

    def __mul__(self, o) -> "QScalar":
        o = QScalar.of(o)
        ext = self.extension or o.extension
        # fast path: both in Q(q)
        if self.im is None and self.sre is None and self.sim is None \
                and o.im is None and o.sre is None and o.sim is None:
            if self.re is None or o.re is None:
                return QScalar(extension=ext)
            return QScalar(self.re * o.re, extension=ext)
        # (u1 + v1 s)(u2 + v2 s) with u, v Gaussian
        u1, v1 = (self.re, self.im), (self.sre, self.sim)
        u2, v2 = (o.re, o.im), (o.sre, o.sim)
        uu = _gmul(u1, u2)
        vv = _gmul(v1, v2)
        vv = (_mul(vv[0], _S_SQUARED), _mul(vv[1], _S_SQUARED))
        uv = _gadd(_gmul(u1, v2), _gmul(v1, u2))
        a = _gadd(uu, vv)
        return QScalar(a[0], a[1], uv[0], uv[1], ext)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        u, v = (self.re, self.im), (self.sre, self.sim)
        # 1/(u + v s) = (u - v s) / (u^2 - v^2 (1+q^2))
        vv = _gmul(v, v)
        norm = _gadd(_gmul(u, u), (_neg(_mul(vv[0], _S_SQUARED)), _neg(_mul(vv[1], _S_SQUARED))))
        ninv = _ginv(norm)
        a = _gmul(u, ninv)
        b = _gmul((_neg(v[0]), _neg(v[1])), ninv)
        return QScalar(a[0], a[1], b[0], b[1], self.extension)

    def __truediv__(self, o) -> "QScalar":
        return self * QScalar.of(o).inverse()

    def __rtruediv__(self, o) -> "QScalar":
        return QScalar.of(o) * self.inverse()

    def __pow__(self, k: int) -> "QScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "QScalar":
        """Complex conjugation ``i -> -i``; ``q`` and ``s`` are fixed."""
        return QScalar(self.re, _neg(self.im), self.sre, _neg(self.sim), self.extension)

    # comparison -----------------------------------------------------------
    def __eq__(self, o) -> bool:
        if not isinstance(o, QScalar):
            if isinstance(o, (int, Fraction, RatFunc)):
                o = QScalar.of(o)
            else:
                return NotImplemented
        return self.parts() == o.parts()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.parts())
        return self._hash

    def eval(self, q0, s_branch=None) -> GaussianRational:
        return scalar_eval(self, q0, s_branch)

    # printing -------------------------------------------------------------
    def __str__(self) -> str:
        pieces = []
        for part, suffix in ((self.re, ""), (self.im, "i"), (self.sre, "s"), (self.sim, "i*s")):
            if part is None:
                continue
            pieces.append(_scaled_piece(part, suffix))
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def __repr__(self) -> str:
        return f"QScalar({self})"

    def is_atomic_str(self) -> bool:
        """True if ``str(self)`` can be juxtaposed with ``*`` without parentheses."""
        s = str(self)
        body = s[1:] if s.startswith("-") else s
        return not any(ch in body for ch in " /")


def _scaled_piece(part: RatFunc, suffix: str) -> str:
    s = str(part)
    if not suffix:
        return s
    if s == "1":
        return suffix
    if s == "-1":
        return "-" + suffix
    body = s[1:] if s.startswith("-") else s
    if " " in body or "/" in body:
        return f"({s})*{suffix}"
    return f"{s}*{suffix}"


def _gadd(a, b):
    return _add(a[0], b[0]), _add(a[1], b[1])


def _gmul(a, b):
    ar, ai = a
    br, bi = b
    re = _add(_mul(ar, br), _neg(_mul(ai, bi)))
    im = _add(_mul(ar, bi), _mul(ai, br))
    return re, im


def _ginv(a):
    ar, ai = a
    n = _add(_mul(ar, ar), _mul(ai, ai))
    if n is None:
        raise ZeroDivisionError("division by zero scalar")
    ninv = n.inverse()
    return _mul(ar, ninv), _neg(_mul(ai, ninv))


ZERO = QScalar()
ONE = QScalar(RAT_ONE)
I = QScalar(None, RAT_ONE)
Q = QScalar(RatFunc.q_pow(1))
S = QScalar(None, None, RAT_ONE, extension=True)


def qpow(k: int) -> QScalar:
    return QScalar(RatFunc.q_pow(k))


def const(x) -> QScalar:
    return QScalar.of(Fraction(x))


LAMBDA = Q - qpow(-1)  # q - 1/q


def scalar_arith(op: str, a: QScalar, b: QScalar) -> QScalar:
    """Dispatch ``add``, ``sub``, ``mul`` or ``div`` on two scalars."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def scalar_conjugate(a: QScalar) -> QScalar:
    return a.conjugate()


def scalar_eval(a: QScalar, q0, s_branch=None) -> GaussianRational:
    """Evaluate exactly at ``q = q0``.

    ``s_branch`` must be a nonnegative rational with ``s_branch**2 == 1 + q0**2``
    whenever ``a`` involves ``s``.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("q0 must be nonzero")
    if a.has_sqrt():
        if s_branch is None or s_branch == "none":
            raise ValueError("scalar involves s; an s_branch value is required")
        s_branch = Fraction(s_branch)
        if s_branch < 0 or s_branch * s_branch != 1 + q0 * q0:
            raise ValueError(f"s_branch {s_branch} is not the nonnegative root of 1 + q0^2")
    else:
        s_branch = Fraction(0)

    def ev(p: Part) -> Fraction:
        return Fraction(0) if p is None else p.eval(q0)

    re = ev(a.re) + s_branch * ev(a.sre)
    im = ev(a.im) + s_branch * ev(a.sim)
    return GaussianRational(re, im)
