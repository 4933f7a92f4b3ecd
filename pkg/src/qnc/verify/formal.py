"""Formal sums in integer powers of a grouplike element ``g`` and named words.

``g`` is meant to be ``tau^-1/2``: it q-commutes with each named generator,
``g Y = q^w(Y) Y g``.  A term ``(n, word)`` stands for ``g^n * word``.  Products
push ``g`` powers to the left with that rule, so negative powers (``tau^1/2``)
can be carried symbolically and removed by one left multiplication before the
result is realized as an NCPoly.
"""

from __future__ import annotations

from ..coeff import ONE, QScalar, qpow
from ..ncalg import NCPoly


class FormalSum:
    # exponents w with g Y = q^w Y g; only needed when g powers occur
    WEIGHTS = {"L+": 2, "L-": -2, "X+": 2, "X3": 0, "X-": -2}

    def __init__(self, terms: dict | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def term(cls, n: int, word: tuple, coeff: QScalar = ONE) -> "FormalSum":
        return cls({(n, tuple(word)): QScalar.of(coeff)})

    @classmethod
    def weight(cls, word) -> int:
        return sum(cls.WEIGHTS[w] for w in word)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return FormalSum(out)

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __mul__(self, other) -> "FormalSum":
        if not isinstance(other, FormalSum):
            c = QScalar.of(other)
            return FormalSum({k: v * c for k, v in self.terms.items()})
        out: dict = {}
        for (n1, w1), c1 in self.terms.items():
            for (n2, w2), c2 in other.terms.items():
                key = (n1 + n2, w1 + w2)
                c = c1 * c2
                if n2:
                    c = c * qpow(-n2 * self.weight(w1))
                out[key] = out[key] + c if key in out else c
        return FormalSum(out)

    def __rmul__(self, c) -> "FormalSum":
        return self * c

    def conjugate(self, images: dict) -> "FormalSum":
        """Anti-linear anti-automorphism given the images of the names (no ``g`` powers)."""
        out = FormalSum()
        for (n, word), c in self.terms.items():
            if n:
                raise ValueError("conjugation of g powers is not defined")
            acc = FormalSum.term(0, (), c.conjugate())
            for w in reversed(word):
                acc = acc * images[w]
            out = out + acc
        return out

    def realize(self, values: dict, alg, memo: dict | None = None) -> NCPoly:
        """Substitute realized values for the names (no ``g`` powers)."""
        memo = {} if memo is None else memo
        out = alg.zero()
        for (n, word), c in self.terms.items():
            if n:
                raise ValueError("realize() needs a sum without g powers; use cleared()")
            out = out + _word_value(word, values, alg, memo).scale(c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def min_power(self) -> int:
        return min((n for n, _ in self.terms), default=0)

    def cleared(self, names: dict, g: NCPoly) -> NCPoly:
        """Realize ``g^M * self`` with the least ``M >= 0`` leaving no negative power."""
        shift = max(0, -self.min_power())
        alg = g.alg
        powers = {0: alg.one()}
        out = alg.zero()
        for (n, word), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            k = n + shift
            while k not in powers:
                top = max(powers)
                powers[top + 1] = powers[top] * g
            val = powers[k]
            for w in word:
                val = val * names[w]
            out = out + val.scale(c)
        return out


def _word_value(word: tuple, values: dict, alg, memo: dict) -> NCPoly:
    if word in memo:
        return memo[word]
    if not word:
        val = alg.one()
    else:
        val = _word_value(word[:-1], values, alg, memo) * values[word[-1]]
    memo[word] = val
    return val


def names(*ns: str) -> list[FormalSum]:
    """One-term sums for the given names."""
    return [FormalSum.term(0, (n,)) for n in ns]
