"""Sparse constant tensors of the q-deformed Euclidean and Minkowski spaces.

Indices are stored as integer positions into the basis label tuple
(``("+", "3", "-")`` or ``("0", "+", "3", "-")``).  Every slot carries a
variance tag, ``"u"`` (upper) or ``"l"`` (lower); contraction only pairs an
upper slot with a lower one.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .coeff import ONE, ZERO, QScalar, const, qpow


class Space(str, Enum):
    EUCLID3 = "Euclid3"
    MINK4 = "Mink4"

    @classmethod
    def parse(cls, text: "str | Space") -> "Space":
        if isinstance(text, Space):
            return text
        t = text.lower()
        if t in ("euclid", "euclid3", "euclidean"):
            return cls.EUCLID3
        if t in ("mink", "mink4", "minkowski"):
            return cls.MINK4
        raise ValueError(f"unknown space {text!r}")


@dataclass(frozen=True)
class IndexBasis:
    space: Space
    labels: tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


EUCLID = IndexBasis(Space.EUCLID3, ("+", "3", "-"))
MINK = IndexBasis(Space.MINK4, ("0", "+", "3", "-"))


def basis_of(space: "Space | str") -> IndexBasis:
    return EUCLID if Space.parse(space) is Space.EUCLID3 else MINK


class TensorError(ValueError):
    pass


@dataclass(frozen=True)
class Tensor:
    basis: IndexBasis
    slots: tuple[str, ...]
    entries: Mapping[tuple[int, ...], QScalar] = field(default_factory=dict)

    def __post_init__(self):
        for v in self.slots:
            if v not in ("u", "l"):
                raise TensorError(f"bad variance tag {v!r}")
        clean = {}
        for k, v in self.entries.items():
            if len(k) != len(self.slots):
                raise TensorError("index length does not match slot count")
            if not v.is_zero():
                clean[tuple(k)] = v
        object.__setattr__(self, "entries", clean)

    @property
    def rank(self) -> int:
        return len(self.slots)

    def __getitem__(self, labels) -> QScalar:
        """Look up by label tuple, e.g. ``g["+", "-"]``."""
        if isinstance(labels, str):
            labels = (labels,)
        key = tuple(self.basis.index(l) if isinstance(l, str) else l for l in labels)
        return self.entries.get(key, ZERO)

    def _check_compatible(self, other: "Tensor") -> None:
        if self.basis != other.basis or self.slots != other.slots:
            raise TensorError("tensors have different bases or slot signatures")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return Tensor(self.basis, self.slots, out)

    def __neg__(self) -> "Tensor":
        return Tensor(self.basis, self.slots, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, c) -> "Tensor":
        c = QScalar.of(c)
        return Tensor(self.basis, self.slots, {k: c * v for k, v in self.entries.items()})

    def __rmul__(self, c) -> "Tensor":
        return self.scale(c)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.basis == other.basis and self.slots == other.slots and self.entries == other.entries

    def __hash__(self):
        return hash((self.basis, self.slots, frozenset(self.entries.items())))

    def transpose(self, perm: Sequence[int]) -> "Tensor":
        """New tensor whose slot ``i`` is old slot ``perm[i]``."""
        slots = tuple(self.slots[p] for p in perm)
        return Tensor(self.basis, slots, {tuple(k[p] for p in perm): v for k, v in self.entries.items()})

    def conjugate(self) -> "Tensor":
        return Tensor(self.basis, self.slots, {k: v.conjugate() for k, v in self.entries.items()})

    def nonzero_labels(self) -> dict[tuple[str, ...], QScalar]:
        return {tuple(self.basis.labels[i] for i in k): v for k, v in sorted(self.entries.items())}


def tensor_from_labels(basis: IndexBasis, slots: Sequence[str],
                       entries: Mapping[tuple[str, ...], object]) -> Tensor:
    return Tensor(basis, tuple(slots),
                  {tuple(basis.index(l) for l in k): QScalar.of(v) for k, v in entries.items()})


def delta(basis: IndexBasis) -> Tensor:
    return Tensor(basis, ("u", "l"), {(i, i): ONE for i in range(basis.dim)})


def identity4(basis: IndexBasis) -> Tensor:
    """``delta^A_C delta^B_D`` with slots ``(u, u, l, l)``."""
    n = basis.dim
    return Tensor(basis, ("u", "u", "l", "l"), {(a, b, a, b): ONE for a in range(n) for b in range(n)})


# ---------------------------------------------------------------------------
# contraction

def einsum(expr: str, *tensors: Tensor) -> Tensor:
    """Sparse Einstein summation.

    ``expr`` uses one letter per slot, e.g. ``"FAB,FDC->ABCD"``.  A letter
    shared by two operands is summed and must pair an upper slot with a
    lower one; output letters keep the variance they had on input.
    """
    lhs, out = expr.replace(" ", "").split("->")
    ops = lhs.split(",")
    if len(ops) != len(tensors):
        raise TensorError("operand count mismatch")
    basis = tensors[0].basis
    variance: dict[str, list[str]] = {}
    for letters, t in zip(ops, tensors):
        if t.basis != basis:
            raise TensorError("basis mismatch in contraction")
        if len(letters) != t.rank:
            raise TensorError(f"operand {letters!r} does not match rank {t.rank}")
        for ch, v in zip(letters, t.slots):
            variance.setdefault(ch, []).append(v)
    for ch, vs in variance.items():
        if len(vs) > 2:
            raise TensorError(f"index {ch!r} appears more than twice")
        if len(vs) == 2:
            if ch in out:
                raise TensorError(f"summed index {ch!r} also appears in output")
            if sorted(vs) != ["l", "u"]:
                raise TensorError(f"index {ch!r} pairs slots of equal variance")
        elif ch not in out:
            raise TensorError(f"free index {ch!r} missing from output")

    # left fold; accumulator is a dict from letter-assignment tuples to scalars
    acc_letters: list[str] = []
    acc: dict[tuple[int, ...], QScalar] = {(): ONE}
    for letters, t in zip(ops, tensors):
        letters, t_entries = _self_trace(list(letters), t)
        shared = [ch for ch in dict.fromkeys(letters) if ch in acc_letters]
        new = [ch for ch in dict.fromkeys(letters) if ch not in acc_letters]
        a_pos = [acc_letters.index(ch) for ch in shared]
        t_pos_shared = [letters.index(ch) for ch in shared]
        t_pos_new = [letters.index(ch) for ch in new]
        index: dict[tuple[int, ...], list[tuple[tuple[int, ...], QScalar]]] = {}
        for k, v in t_entries.items():
            index.setdefault(tuple(k[p] for p in t_pos_shared), []).append((tuple(k[p] for p in t_pos_new), v))
        keep = [i for i, ch in enumerate(acc_letters) if ch not in shared]
        nxt: dict[tuple[int, ...], QScalar] = {}
        for k, v in acc.items():
            key = tuple(k[p] for p in a_pos)
            for newk, w in index.get(key, ()):
                full = tuple(k[i] for i in keep) + newk
                nxt[full] = nxt.get(full, ZERO) + v * w
        acc_letters = [acc_letters[i] for i in keep] + new
        acc = {k: v for k, v in nxt.items() if not v.is_zero()}

    perm = [acc_letters.index(ch) for ch in out]
    slots = tuple(_output_variance(ch, ops, tensors) for ch in out)
    return Tensor(basis, slots, {tuple(k[p] for p in perm): v for k, v in acc.items()})


def _self_trace(letters: list[str], t: Tensor) -> tuple[list[str], dict]:
    if len(set(letters)) == len(letters):
        return letters, t.entries
    # repeated letter inside one operand: restrict to the diagonal, drop the duplicate slot
    first = {}
    for i, ch in enumerate(letters):
        first.setdefault(ch, i)
    dup = [i for i, ch in enumerate(letters) if first[ch] != i]
    out = {}
    for k, v in t.entries.items():
        if all(k[i] == k[first[letters[i]]] for i in dup):
            nk = tuple(x for i, x in enumerate(k) if i not in dup)
            out[nk] = out.get(nk, ZERO) + v
    return [ch for i, ch in enumerate(letters) if i not in dup], out


def _output_variance(ch: str, ops: list[str], tensors: Sequence[Tensor]) -> str:
    for letters, t in zip(ops, tensors):
        if ch in letters:
            return t.slots[letters.index(ch)]
    raise TensorError(ch)


def contract(t1: Tensor, t2: Tensor, pairing: Iterable[tuple[int, int]]) -> Tensor:
    """Contract ``t1`` and ``t2`` over ``(slot of t1, slot of t2)`` pairs.

    Remaining slots keep their order, ``t1``'s first.
    """
    pairing = list(pairing)
    if t1.basis != t2.basis:
        raise TensorError("basis mismatch in contraction")
    letters = iter("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
    l1 = [next(letters) for _ in range(t1.rank)]
    l2 = [next(letters) for _ in range(t2.rank)]
    for i, j in pairing:
        if t1.slots[i] == t2.slots[j]:
            raise TensorError(f"slots {i} and {j} have the same variance")
        l2[j] = l1[i]
    paired1 = {i for i, _ in pairing}
    paired2 = {j for _, j in pairing}
    out = [l for i, l in enumerate(l1) if i not in paired1] + [l for j, l in enumerate(l2) if j not in paired2]
    return einsum(f"{''.join(l1)},{''.join(l2)}->{''.join(out)}", t1, t2)


# ---------------------------------------------------------------------------
# matrix view

@dataclass(frozen=True)
class Matrix:
    """Dense square matrix over ``QScalar`` with labelled rows and columns."""

    basis: IndexBasis
    labels: tuple[tuple[int, int], ...]
    rows: tuple[tuple[QScalar, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matrix_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.labels == other.labels and self.rows == other.rows

    def __hash__(self):
        return hash((self.labels, self.rows))

    def label_strings(self) -> list[str]:
        return ["".join(self.basis.labels[i] for i in pair) for pair in self.labels]

    def is_identity(self) -> bool:
        return all(v == (ONE if i == j else ZERO) for i, row in enumerate(self.rows) for j, v in enumerate(row))

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.rows for v in row)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        labels = self.label_strings()
        w.writerow([""] + labels)
        for lab, row in zip(labels, self.rows):
            w.writerow([lab] + [str(v) for v in row])
        return buf.getvalue()


def lex_order(basis: IndexBasis) -> tuple[tuple[int, int], ...]:
    n = basis.dim
    return tuple((a, b) for a in range(n) for b in range(n))


def paper_order(basis: IndexBasis) -> tuple[tuple[int, int], ...]:
    """Block order of the printed tables.

    Euclid3: ``++, --, +3, 3+, 3-, -3, +-, 33, -+``.
    Mink4: ``00``, then ``A0``, then ``0B``, then ``AB`` with ``A, B`` in
    ``(+, 3, -)`` order.
    """
    if basis.space is Space.EUCLID3:
        names = ["++", "--", "+3", "3+", "3-", "-3", "+-", "33", "-+"]
        return tuple((basis.index(s[0]), basis.index(s[1])) for s in names)
    sp = [basis.index(x) for x in ("+", "3", "-")]
    z = basis.index("0")
    return ((z, z),) + tuple((a, z) for a in sp) + tuple((z, b) for b in sp) + \
        tuple((a, b) for a in sp for b in sp)


def as_matrix(t: Tensor, convention: str = "lex") -> Matrix:
    """Flatten ``T^{AB}_{CD}`` with rows ``(A, B)`` and columns ``(C, D)``."""
    if t.slots != ("u", "u", "l", "l"):
        raise TensorError(f"as_matrix needs slots (u, u, l, l), got {t.slots}")
    order = lex_order(t.basis) if convention == "lex" else paper_order(t.basis)
    if convention not in ("lex", "paper"):
        raise TensorError(f"unknown convention {convention!r}")
    rows = tuple(tuple(t.entries.get(r + c, ZERO) for c in order) for r in order)
    return Matrix(t.basis, order, rows)


def from_matrix(m: Matrix) -> Tensor:
    entries = {}
    for i, r in enumerate(m.labels):
        for j, c in enumerate(m.labels):
            entries[r + c] = m.rows[i][j]
    return Tensor(m.basis, ("u", "u", "l", "l"), entries)


def matrix_mul(m1: Matrix, m2: Matrix) -> Matrix:
    if m1.labels != m2.labels:
        raise TensorError("matrices use different index conventions")
    n = m1.dim
    cols = list(zip(*m2.rows))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for a, b in zip(m1.rows[i], cols[j]):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            row.append(acc)
        rows.append(tuple(row))
    return Matrix(m1.basis, m1.labels, tuple(rows))


def compose(*ts: Tensor) -> Tensor:
    """Operator product ``T1 T2 ...`` of ``(u, u, l, l)`` tensors."""
    out = ts[0]
    for t in ts[1:]:
        out = einsum("ABEF,EFCD->ABCD", out, t)
    return out


def braid_12(t: Tensor) -> Tensor:
    """``T`` acting on factors 1, 2 of a triple tensor product (rank 6)."""
    n = t.basis.dim
    ent = {}
    for (a, b, c, d), v in t.entries.items():
        for e in range(n):
            ent[(a, b, e, c, d, e)] = v
    return Tensor(t.basis, ("u",) * 3 + ("l",) * 3, ent)


def braid_23(t: Tensor) -> Tensor:
    n = t.basis.dim
    ent = {}
    for (a, b, c, d), v in t.entries.items():
        for e in range(n):
            ent[(e, a, b, e, c, d)] = v
    return Tensor(t.basis, ("u",) * 3 + ("l",) * 3, ent)


def compose6(*ts: Tensor) -> Tensor:
    out = ts[0]
    for t in ts[1:]:
        out = einsum("ABCDEF,DEFGHI->ABCGHI", out, t)
    return out


def inverse_metric(g: Tensor) -> Tensor:
    """Inverse of a lower-index metric, returned with two upper slots."""
    n = g.basis.dim
    m = [[g.entries.get((i, j), ZERO) for j in range(n)] + [ONE if i == j else ZERO for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if not m[r][col].is_zero())
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    # rows of inv(G) indexed (A, B) with G_{BC} inv^{..}: g^{AB} g_{BC} = delta^A_C
    # inv(G) as a matrix satisfies inv(G) G = 1, so g^{AB} = inv(G)[A][B]
    return Tensor(g.basis, ("u", "u"), {(i, j): m[i][n + j] for i in range(n) for j in range(n)})


# ---------------------------------------------------------------------------
# catalog of named tensors

def _q(k: int) -> QScalar:
    return qpow(k)


def _metric_lower(basis: IndexBasis) -> Tensor:
    ent = {("3", "3"): ONE, ("+", "-"): -_q(1), ("-", "+"): -_q(-1)}
    if basis.space is Space.MINK4:
        ent[("0", "0")] = -ONE
    return tensor_from_labels(basis, ("l", "l"), ent)


def _eps3() -> Tensor:
    """``eps_{BC}^A`` with slots ``(l, l, u)`` ordered ``(B, C, A)``."""
    q = _q(1)
    ent = {
        ("+", "-", "3"): q,
        ("-", "+", "3"): -q,
        ("3", "3", "3"): ONE - _q(2),
        ("+", "3", "+"): ONE,
        ("3", "+", "+"): -_q(2),
        ("-", "3", "-"): -_q(2),
        ("3", "-", "-"): ONE,
    }
    return tensor_from_labels(EUCLID, ("l", "l", "u"), ent)


@lru_cache(maxsize=None)
def _euclid_parts() -> dict[str, Tensor]:
    g = _metric_lower(EUCLID)
    gi = inverse_metric(g)
    eps = _eps3()
    eps_up = einsum("FE,AD,EDB->FAB", gi, gi, eps)  # eps^{FAB}
    eps_low = einsum("CE,FDE->FDC", g, eps)  # eps_{FDC}
    ee = einsum("FAB,FDC->ABCD", eps_up, eps_low)  # eps^{FAB} eps_{FDC}
    gg = einsum("AB,CD->ABCD", gi, g)
    one = identity4(EUCLID)
    n1 = const(1) + _q(2) + _q(4)
    p1 = gg.scale(_q(2) / n1)
    p3 = ee.scale((const(1) + _q(4)).inverse())
    p5 = one - p1 - p3
    rhat = one - ee.scale(_q(-4)) - gg.scale(_q(-4) * (_q(2) - 1))
    return {"g": g, "g_inv": gi, "eps3": eps, "eps3_up": eps_up, "eps3_low": eps_low,
            "P1": p1, "P3": p3, "P5": p5, "rhat3": rhat, "one3": one}


def rhat3_table() -> Tensor:
    """The Euclidean R-hat matrix entered block by block from the printed table."""
    q = _q
    ent = {
        ("+", "+", "+", "+"): ONE,
        ("-", "-", "-", "-"): ONE,
        ("+", "3", "3", "+"): q(-2),
        ("3", "+", "+", "3"): q(-2),
        ("3", "+", "3", "+"): ONE - q(-4),
        ("3", "-", "-", "3"): q(-2),
        ("-", "3", "3", "-"): q(-2),
        ("-", "3", "-", "3"): ONE - q(-4),
        ("+", "-", "-", "+"): q(-4),
        ("3", "3", "3", "3"): q(-2),
        ("3", "3", "-", "+"): q(-1) * (ONE - q(-4)),
        ("-", "+", "+", "-"): q(-4),
        ("-", "+", "3", "3"): q(-1) * (ONE - q(-4)),
        ("-", "+", "-", "+"): (ONE - q(-2)) * (ONE - q(-4)),
    }
    return tensor_from_labels(EUCLID, ("u", "u", "l", "l"), ent)


def p1_table() -> Tensor:
    """Printed singlet-projector block, without its overall normalization."""
    q = _q
    ent = {
        ("+", "-", "+", "-"): q(2), ("+", "-", "3", "3"): -q(1), ("+", "-", "-", "+"): ONE,
        ("3", "3", "+", "-"): -q(1), ("3", "3", "3", "3"): ONE, ("3", "3", "-", "+"): -q(-1),
        ("-", "+", "+", "-"): ONE, ("-", "+", "3", "3"): -q(-1), ("-", "+", "-", "+"): q(-2),
    }
    return tensor_from_labels(EUCLID, ("u", "u", "l", "l"), ent)


def p3_table() -> Tensor:
    """Printed triplet-projector blocks, without their overall normalization."""
    q = _q
    a = q(1) * (q(2) - 1)
    ent = {
        ("+", "3", "+", "3"): q(4), ("+", "3", "3", "+"): -q(2),
        ("3", "+", "+", "3"): -q(2), ("3", "+", "3", "+"): ONE,
        ("3", "-", "3", "-"): q(4), ("3", "-", "-", "3"): -q(2),
        ("-", "3", "3", "-"): -q(2), ("-", "3", "-", "3"): ONE,
        ("+", "-", "+", "-"): q(2), ("+", "-", "3", "3"): a, ("+", "-", "-", "+"): -q(2),
        ("3", "3", "+", "-"): a, ("3", "3", "3", "3"): (q(2) - 1) ** 2, ("3", "3", "-", "+"): -a,
        ("-", "+", "+", "-"): -q(2), ("-", "+", "3", "3"): -a, ("-", "+", "-", "+"): q(2),
    }
    return tensor_from_labels(EUCLID, ("u", "u", "l", "l"), ent)


def projector_from_rhat(rhat: Tensor, which: str) -> Tensor:
    """Spectral projectors as quadratic polynomials in ``rhat``."""
    one = identity4(EUCLID)
    q = _q
    r2 = compose(rhat, rhat)

    def poly(a: QScalar, b: QScalar) -> Tensor:
        # (R + a)(R + b) = R^2 + (a + b) R + a b
        return r2 + rhat.scale(a + b) + one.scale(a * b)

    if which == "P5":
        return poly(q(-4), -q(-6)).scale(q(10) / ((q(4) + 1) * (q(6) - 1)))
    if which == "P3":
        return poly(-ONE, -q(-6)).scale(q(10) / ((q(4) + 1) * (q(2) + 1)))
    if which == "P1":
        return poly(-ONE, q(-4)).scale(q(12) / ((q(2) + 1) * (ONE - q(6))))
    raise TensorError(which)


def _mink_block_projector(kind: str) -> Tensor:
    """Selfdual / antiselfdual projectors from their SO_q(3)-adapted block form."""
    e = _euclid_parts()
    gi, eps = e["g_inv"], e["eps3"]
    eps_low = e["eps3_low"]
    n = (const(1) + _q(2)) ** 2
    q2, q4 = _q(2), _q(4)
    if kind == "P+":
        a0c0, a00d, a0cd = q2, -ONE, ONE
        b0c0, b00d, b0cd = -q4, q2, -q2
        abc0, ab0d = q2, -ONE
    else:
        a0c0, a00d, a0cd = q2, -q4, -q2
        b0c0, b00d, b0cd = -ONE, q2, ONE
        abc0, ab0d = -ONE, q2
    # g^{EB} g^{FA} eps_{FEC}  -> slots (A, B, C)
    gge = einsum("EB,FA,FEC->ABC", gi, gi, eps_low)
    # eps_{DC}^E g^{SB} g^{RA} eps_{RSE} -> (A, B, C, D)
    gee = einsum("DCE,SB,RA,RSE->ABCD", eps, gi, gi, eps_low)
    z = MINK.index("0")
    sp = {i: MINK.index(l) for i, l in enumerate(EUCLID.labels)}  # euclid index -> mink index
    ent: dict[tuple[int, ...], QScalar] = {}

    def put(k, v):
        if not v.is_zero():
            ent[k] = ent.get(k, ZERO) + v

    for A in range(3):
        a = sp[A]
        put((a, z, a, z), a0c0)
        put((a, z, z, a), a00d)
        put((z, a, a, z), b0c0)
        put((z, a, z, a), b00d)
    for (D, C, A), v in eps.entries.items():
        put((sp[A], z, sp[C], sp[D]), a0cd * v)
        put((z, sp[A], sp[C], sp[D]), b0cd * v)
    for (A, B, C), v in gge.entries.items():
        put((sp[A], sp[B], sp[C], z), abc0 * v)
        put((sp[A], sp[B], z, sp[C]), ab0d * v)
    for (A, B, C, D), v in gee.entries.items():
        put((sp[A], sp[B], sp[C], sp[D]), v)
    t = Tensor(MINK, ("u", "u", "l", "l"), ent)
    return t.scale(n.inverse())


def _mink_pt_table() -> Tensor:
    e = _euclid_parts()
    g, gi = e["g"], e["g_inv"]
    c = _q(2) / (const(1) + _q(2)) ** 2
    z = MINK.index("0")
    sp = {i: MINK.index(l) for i, l in enumerate(EUCLID.labels)}
    ent = {(z, z, z, z): c}
    for (C, D), v in g.entries.items():
        ent[(z, z, sp[C], sp[D])] = -c * v
    for (A, B), v in gi.entries.items():
        ent[(sp[A], sp[B], z, z)] = -c * v
        for (C, D), w in g.entries.items():
            ent[(sp[A], sp[B], sp[C], sp[D])] = c * v * w
    return Tensor(MINK, ("u", "u", "l", "l"), ent)


@lru_cache(maxsize=None)
def _mink_parts() -> dict[str, Tensor]:
    eta = _metric_lower(MINK)
    eta_i = inverse_metric(eta)
    one = identity4(MINK)
    pplus = _mink_block_projector("P+")
    pminus = _mink_block_projector("P-")
    pt_table = _mink_pt_table()
    pt = einsum("AB,CD->ABCD", eta_i, eta).scale(_q(2) / (const(1) + _q(2)) ** 2)
    ps = one - pt_table - pplus - pminus
    q = _q
    ri = ps + pt - pplus.scale(q(2)) - pminus.scale(q(-2))
    rii = ps.scale(q(-2)) + pt.scale(q(2)) - pplus - pminus
    pa = pplus + pminus
    return {
        "eta": eta, "eta_inv": eta_i, "one4": one,
        "Pplus": pplus, "Pminus": pminus, "PT": pt, "PT_table": pt_table, "PS": ps, "PA": pa,
        "eps4": pplus - pminus,
        "RI": ri, "RII": rii,
        "RI_inv": ps + pt - pplus.scale(q(-2)) - pminus.scale(q(2)),
        "RII_inv": ps.scale(q(2)) + pt.scale(q(-2)) - pplus - pminus,
        "RI_alt": one - pplus.scale(ONE + q(2)) - pminus.scale(ONE + q(-2)),
        "RII_alt": one.scale(q(-2)) + pt.scale(q(2) - q(-2)) - pa.scale(ONE + q(-2)),
    }


@lru_cache(maxsize=None)
def _euclid_derived() -> dict[str, Tensor]:
    e = _euclid_parts()
    p1, p3, p5 = e["P1"], e["P3"], e["P5"]
    q = _q
    return {
        "rhat3_inv": p5 - p3.scale(q(4)) + p1.scale(q(6)),
        "rhat3_decomp": p5 - p3.scale(q(-4)) + p1.scale(q(-6)),
    }


TENSOR_NAMES = (
    "g", "g_inv", "eps3", "rhat3", "rhat3_inv", "P1", "P3", "P5",
    "eta", "eta_inv", "eps4", "RI", "RI_inv", "RII", "RII_inv", "PT", "PS", "Pplus", "Pminus", "PA",
)


def build_tensor(name: str) -> Tensor:
    """Return one of the named constant tensors (see ``TENSOR_NAMES``)."""
    e = _euclid_parts()
    if name in ("g", "g_inv", "eps3", "P1", "P3", "P5", "rhat3"):
        return e[name]
    if name == "rhat3_inv":
        return _euclid_derived()["rhat3_inv"]
    m = _mink_parts()
    if name in ("eta", "eta_inv", "eps4", "RI", "RI_inv", "RII", "RII_inv", "PT", "PS", "Pplus", "Pminus", "PA"):
        return m[name]
    raise TensorError(f"unknown tensor {name!r}")


def tensor_parts(space: "Space | str") -> dict[str, Tensor]:
    """All named tensors of a space, including auxiliary constructions."""
    if Space.parse(space) is Space.EUCLID3:
        return {**_euclid_parts(), **_euclid_derived()}
    return dict(_mink_parts())


def tensor_suite(space: "Space | str"):
    """Run the tensor-identity catalog of ``space``; returns a ``SuiteReport``."""
    from .verify import run_suite

    return run_suite("euclid-tensor" if Space.parse(space) is Space.EUCLID3 else "mink-tensor")
