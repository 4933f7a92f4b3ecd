"""Identities of the Euclidean coordinate/derivative calculus and phase space."""

from __future__ import annotations

from functools import lru_cache

from ..coeff import ONE, S, qpow
from ..ncalg import nc_conjugate
from ..tensor import tensor_parts
from .common import HALF_I, alg_of, bilinear, dot, el, lower, total, vec
from .core import identity
from .formal import FormalSum

SP = "Euclid3"
q = qpow
LAM2 = (q(1) - q(-1)) ** 2  # lambda^2


def A():
    return alg_of(SP)


def T():
    return tensor_parts(SP)


@lru_cache(maxsize=None)
def _v(stem):
    if stem == "Dbar":
        return tuple(el(SP, f"Dbar{a}") for a in "+3-")
    return vec(SP, stem)


def _low(v):
    return lower(T()["g"], v, A())


def _dot(u, v):
    return dot(T()["g"], u, v, A())


def _eps_pair(left, right, key_order="BCA"):
    """``Z^A = left^C right^B eps_{BC}^A``."""
    alg = A()
    out = [alg.zero() for _ in range(3)]
    for (b, c, a), v in T()["eps3"].entries.items():
        out[a] = out[a] + (left[c] * right[b]).scale(v)
    return tuple(out)


def _zero():
    return A().zero()


LBL = "+3-"


def _per_component(name, lhs, rhs):
    for i in range(3):
        yield f"{name}[{LBL[i]}]", lhs[i], rhs[i]


def _per_pair(name, lhs: dict, rhs: dict):
    for (a, b) in sorted(lhs):
        yield f"{name}[{LBL[a]}{LBL[b]}]", lhs[(a, b)], rhs[(a, b)]


def _w_hat():
    alg = A()
    return alg.one() + alg.dot(alg.X, alg.D).scale(q(2) * (q(2) - 1))


# ---------------------------------------------------------------------------
# coordinate and derivative relations

@identity("E.2.9", "euclid-calculus", ("2.8", "2.9", "2.19"), r"X^- X^+ &=& X^+ X^- + \lambda X^3 X^3")
def _():
    """Coordinate relations in projector, explicit and epsilon form."""
    alg = A()
    Xp, X3, Xm = alg.X
    lam = q(1) - q(-1)
    yield "X3 X+", X3 * Xp, (Xp * X3).scale(q(2))
    yield "X3 X-", X3 * Xm, (Xm * X3).scale(q(-2))
    yield "X- X+", Xm * Xp, Xp * Xm + (X3 * X3).scale(lam)
    p3xx = bilinear(T()["P3"], alg.X, alg.X, alg)
    for k, v in p3xx.items():
        yield f"P3 XX[{LBL[k[0]]}{LBL[k[1]]}]", v, _zero()
    yield from _per_component("X X eps", _eps_pair(alg.X, alg.X), [_zero()] * 3)


@identity("E.2.10", "euclid-calculus", ("2.10", "2.14"), r"\overline{X^+} &=& -qX^-")
def _():
    """Conjugation of the coordinates."""
    alg = A()
    Xp, X3, Xm = alg.X
    yield "bar X3", nc_conjugate(X3), X3
    yield "bar X+", nc_conjugate(Xp), Xm.scale(-q(1))
    yield "bar X-", nc_conjugate(Xm), Xp.scale(-q(-1))
    yield from _per_component("bar X^A = X_A", [nc_conjugate(x) for x in alg.X], _low(alg.X))
    # the relations are preserved: bar(X3 X+ - q^2 X+ X3) vanishes
    rel = X3 * Xp - (Xp * X3).scale(q(2))
    yield "bar of relation", nc_conjugate(rel), _zero()


@identity("E.2.13", "euclid-calculus", "2.13", r"X^A (X\circ X) = (X\circ X) X^A")
def _():
    """The invariant length commutes with every coordinate."""
    alg = A()
    xx = alg.dot(alg.X, alg.X)
    for i, x in enumerate(alg.X):
        yield f"[{LBL[i]}]", x * xx, xx * x


@identity("E.2.23", "euclid-calculus", ("2.23", "2.24"), r"\partial_B X^A &=& \delta^A_B + q^4\hat{R}^{AC}{}_{BD}")
def _():
    """Covariant Leibniz rule with the lowered derivative."""
    alg = A()
    t = T()
    dlow = _low(alg.D)
    r = t["rhat3"]
    for b in range(3):
        for a in range(3):
            rhs = alg.one() if a == b else _zero()
            for (a2, c, b2, d), v in r.entries.items():
                if a2 == a and b2 == b:
                    rhs = rhs + (alg.X[d] * dlow[c]).scale(q(4) * v)
            yield f"[{LBL[b]}{LBL[a]}]", dlow[b] * alg.X[a], rhs


@identity("E.2.26", "euclid-calculus", "2.26", r"\partial^AX^B = g^{AB}+\hat{R}^{-1AB}{}_{CD} X^C\partial^D")
def _():
    """Contravariant Leibniz rule."""
    alg = A()
    t = T()
    rx = bilinear(t["rhat3_inv"], alg.X, alg.D, alg)
    for a in range(3):
        for b in range(3):
            yield f"[{LBL[a]}{LBL[b]}]", alg.D[a] * alg.X[b], rx[(a, b)] + alg.scalar(t["g_inv"][a, b])


@identity("E.2.28", "euclid-calculus", ("2.27", "2.28"), r"\partial^C\partial^D\varepsilon_{DC}{}^A = 0")
def _():
    """Derivative relations."""
    alg = A()
    for k, v in bilinear(T()["P3"], alg.D, alg.D, alg).items():
        yield f"P3 DD[{LBL[k[0]]}{LBL[k[1]]}]", v, _zero()
    yield from _per_component("D D eps", _eps_pair(alg.D, alg.D), [_zero()] * 3)


@identity("E.2.30", "euclid-calculus", "2.30", r"\overline{\partial}^A X^B = -{1\over q^6} g^{AB}")
def _():
    """Conjugate derivative against coordinates."""
    alg = A()
    t = T()
    db = _v("Dbar")
    rx = bilinear(t["rhat3"], alg.X, db, alg)
    for a in range(3):
        for b in range(3):
            yield f"[{LBL[a]}{LBL[b]}]", db[a] * alg.X[b], rx[(a, b)] + alg.scalar(-q(-6) * t["g_inv"][a, b])


@identity("E.2.31", "euclid-calculus", "2.31", r"\overline{\partial}^C\overline{\partial}^D \varepsilon_{DC} {}^A=0")
def _():
    """Conjugate derivative relations."""
    db = _v("Dbar")
    yield from _per_component("Dbar Dbar eps", _eps_pair(db, db), [_zero()] * 3)


@identity("E.2.32", "euclid-calculus", ("2.32", "2.33"), r"\partial^B \overline{\partial}^A = {1\over q^4}")
def _():
    """Derivative against conjugate derivative, and the triplet consequence."""
    alg = A()
    t = T()
    db = _v("Dbar")
    rx = bilinear(t["rhat3_inv"], db, alg.D, alg)
    for b in range(3):
        for a in range(3):
            yield f"[{LBL[b]}{LBL[a]}]", alg.D[b] * db[a], rx[(b, a)].scale(q(-4))
    s1 = bilinear(t["P3"], alg.D, db, alg)
    s2 = bilinear(t["P3"], db, alg.D, alg)
    for k in s1:
        yield f"P3 (D Dbar + Dbar D)[{LBL[k[0]]}{LBL[k[1]]}]", s1[k] + s2[k], _zero()


@identity("E.2.35", "euclid-calculus", ("2.34", "2.35"), r"\Lambda X^A &=& q^4 X^A\Lambda")
def _():
    """Scaling element: normalization and exchange with every generator."""
    alg = A()
    lam = alg.lambda_poly
    yield "constant term", lam.terms.get((0, (0, 0, 0), (0, 0, 0))) == ONE, None
    for i in range(3):
        yield f"Lambda X{LBL[i]}", lam * alg.X[i], (alg.X[i] * lam).scale(q(4))
        yield f"Lambda D{LBL[i]}", lam * alg.D[i], (alg.D[i] * lam).scale(q(-4))
        yield f"l^2 X{LBL[i]} agrees", alg.ell(2) * alg.X[i], (alg.X[i] * alg.ell(2)).scale(q(4))


@identity("E.2.36", "euclid-calculus", ("2.29", "2.36"), r"\overline{\partial}^A = -{1\over q^6}\Lambda^{-1}")
def _():
    """Conjugate of the derivative is the lowered conjugate derivative; bar is an involution."""
    alg = A()
    db = _v("Dbar")
    yield from _per_component("bar D^A = Dbar_A", [nc_conjugate(d) for d in alg.D], _low(db))
    for i in range(3):
        yield f"bar bar D{LBL[i]}", nc_conjugate(nc_conjugate(alg.D[i])), alg.D[i]
        yield f"bar bar X{LBL[i]}", nc_conjugate(nc_conjugate(alg.X[i])), alg.X[i]
    yield "bar bar l", nc_conjugate(nc_conjugate(alg.ell(1))), alg.ell(1)


@identity("E.2.37", "euclid-calculus", "2.37", r"\overline{\Lambda} = q^{-12} \Lambda^{-1}")
def _():
    """The scaling element is unitary up to normalization."""
    alg = A()
    lam = alg.lambda_poly
    yield "bar Lambda Lambda", nc_conjugate(lam) * lam, alg.scalar(q(-12))
    yield "bar Lambda = q^-12 l^-2", nc_conjugate(lam), alg.ell(-2).scale(q(-12))


@identity("E.2.39", "euclid-calculus", ("2.38", "2.39"), r"P^A P^B \varepsilon_{BA}{}^C = 0")
def _():
    """Momentum relations."""
    alg = A()
    p = _v("P")
    db = _v("Dbar")
    for i in range(3):
        yield f"P{LBL[i]} definition", p[i], (alg.D[i] - db[i]).scale(-HALF_I)
    yield from _per_component("P P eps", _eps_pair(p, p), [_zero()] * 3)


@identity("E.2.40", "euclid-calculus", "2.40", r"\overline{P^A} = P_A = g_{AB} P^B")
def _():
    """Momenta are hermitean."""
    p = _v("P")
    yield from _per_component("bar P^A = P_A", [nc_conjugate(x) for x in p], _low(p))


@identity("E.2.41", "euclid-calculus", "2.41", r"(1+q^{-6})g^{AB} &+& (\hat{R}^{-1AB}{}_{CD}-\hat{R}^{AB}{}_{CD})")
def _():
    """Difference of derivative and conjugate derivative against coordinates."""
    alg = A()
    t = T()
    db = _v("Dbar")
    diff = tuple(alg.D[i] - db[i] for i in range(3))
    lhs2 = bilinear(t["rhat3_inv"], alg.X, diff, alg)
    rhs2 = bilinear(t["rhat3_inv"] - t["rhat3"], alg.X, db, alg)
    for a in range(3):
        for b in range(3):
            lhs = diff[a] * alg.X[b] - lhs2[(a, b)]
            rhs = rhs2[(a, b)] + alg.scalar((ONE + q(-6)) * t["g_inv"][a, b])
            yield f"[{LBL[a]}{LBL[b]}]", lhs, rhs


def _xp_lhs():
    alg = A()
    p = _v("P")
    rx = bilinear(T()["rhat3_inv"], alg.X, p, alg)
    return {(a, b): p[a] * alg.X[b] - rx[(a, b)] for a in range(3) for b in range(3)}


@identity("E.2.42", "euclid-calculus", "2.42", r"{i\over 2} (1-{1\over q^4})\varepsilon^{ABF}\varepsilon_{DCF}")
def _():
    """Momentum-coordinate relation before factorization."""
    alg = A()
    t = T()
    db = _v("Dbar")
    xdb = alg.one() + _dot(alg.X, db).scale(q(2) * (q(2) - 1))
    ee = tensor_parts(SP)
    # eps^{ABF} eps_{DCF} X^C Dbar^D
    epsx = {}
    for (a, b, f), v in ee["eps3_up"].entries.items():
        for (d, c, f2), w in ee["eps3_low"].entries.items():
            if f2 == f:
                epsx[(a, b)] = epsx.get((a, b), _zero()) + (alg.X[c] * db[d]).scale(v * w)
    lhs = _xp_lhs()
    for (a, b) in sorted(lhs):
        rhs = xdb.scale(-HALF_I * (ONE + q(-6)) * t["g_inv"][a, b]) + \
            epsx.get((a, b), _zero()).scale(HALF_I * (ONE - q(-4)))
        yield f"[{LBL[a]}{LBL[b]}]", lhs[(a, b)], rhs


@identity("E.2.43", "euclid-calculus", "2.43", r"1+q^2(q^2-1)X\circ\overline{\partial} = \Lambda^{-1} (1+q^2(q^2-1)")
def _():
    """Singlet term through the scaling element."""
    alg = A()
    db = _v("Dbar")
    lhs = alg.one() + _dot(alg.X, db).scale(q(2) * (q(2) - 1))
    yield "X o Dbar", lhs, alg.ell(-2) * _w_hat()


@identity("E.2.44", "euclid-calculus", "2.44", r"1+q^2(q^2-1)\overline{X\circ\partial} = q^{-6}\Lambda^{-1}",
          note=lambda: "bar applied as anti-automorphism: bar(g_AB X^A D^B) = g_AB bar(D^B) bar(X^A)")
def _():
    """Conjugate of the singlet X o D."""
    alg = A()
    lhs = alg.one() + nc_conjugate(alg.dot(alg.X, alg.D)).scale(q(2) * (q(2) - 1))
    yield "bar(X o D)", lhs, (alg.ell(-2) * _w_hat()).scale(q(-6))


@identity("E.2.45", "euclid-calculus", ("2.45", "2.46"), r"W &=& \Lambda^{-1/2} (1+q^2(q^2-1)X\circ \partial)")
def _():
    """The hermitean singlet W."""
    alg = A()
    w = el(SP, "W")
    db = _v("Dbar")
    yield "W = l^-1 (1 + q^2(q^2-1) X o D)", w, alg.ell(-1) * _w_hat()
    yield "bar W = W", nc_conjugate(w), w
    yield "X . Dbar = l^-1 W", alg.one() + _dot(alg.X, db).scale(q(2) * (q(2) - 1)), alg.ell(-1) * w


@identity("E.2.47", "euclid-calculus", ("2.47", "2.48"), r"\overline{L^A} = g_{AB} L^B = L_A")
def _():
    """Angular momentum: definition through l X Dbar eps and hermiticity."""
    alg = A()
    lv = _v("L")
    db = _v("Dbar")
    direct = [alg.ell(1) * z for z in _eps_pair(alg.X, db)]
    yield from _per_component("L = l X Dbar eps", lv, direct)
    yield from _per_component("bar L^A = L_A", [nc_conjugate(x) for x in lv], _low(lv))


def _xp_rhs(scale_w=ONE + q(-6), scale_l=ONE - q(-4)):
    alg = A()
    t = T()
    w = el(SP, "W")
    ll = _low(_v("L"))
    out = {}
    for a in range(3):
        for b in range(3):
            val = w.scale(scale_w * t["g_inv"][a, b])
            for (a2, b2, f), v in t["eps3_up"].entries.items():
                if (a2, b2) == (a, b):
                    val = val - ll[f].scale(scale_l * v)
            out[(a, b)] = (alg.ell(-1) * val).scale(-HALF_I)
    return out


@identity("E.2.49", "euclid-calculus", ("2.49", "3.4"), r"-{i\over 2} \Lambda^{-1/2} \{(1+q^{-6})g^{AB} W - (1-q^{-4})")
def _():
    """Momentum-coordinate relation factorized into l^-1, W and L."""
    yield from _per_pair("PX", _xp_lhs(), _xp_rhs())


@identity("E.2.49.mutated", "controls", "2.49", "", summary="2.49 with coefficient q^4 replaced by q^3 (must fail)")
def _():
    yield from _per_pair("PX", _xp_lhs(), _xp_rhs(scale_l=ONE - q(-3)))


def _wv_rhs(v):
    t = T()
    w = el(SP, "W")
    ll = _low(_v("L"))
    vl = _low(v)
    out = []
    for a in range(3):
        val = (v[a] * w).scale(ONE + LAM2)
        for (a2, f, c), e in t["eps3_up"].entries.items():
            if a2 == a:
                val = val + (vl[c] * ll[f]).scale((q(2) - 1) ** 2 * e)
        out.append(val)
    return out


def _l_ll_lhs():
    lv = _v("L")
    # eps_{BA}^C L^A L^B
    return _eps_pair(lv, lv)


@identity("E.2.50", "euclid-calculus", ("2.50", "3.1", "3.3"), r"L^A W = W L^A")
def _():
    """LL, LW, WX and WP relations."""
    w = el(SP, "W")
    lv = _v("L")
    yield from _per_component("eps L L", _l_ll_lhs(), [(w * x).scale(-q(-2)) for x in lv])
    for i in range(3):
        yield f"L{LBL[i]} W", lv[i] * w, w * lv[i]
    for stem in ("X", "P"):
        v = _v(stem)
        yield from _per_component(f"W {stem}", [w * x for x in v], _wv_rhs(v))


def _m_matrix():
    return {(a, b): el(SP, f"M{LBL[a]}{LBL[b]}") for a in range(3) for b in range(3)}


@identity("E.2.51", "euclid-calculus", "2.51", r"M^{AB} \varepsilon_{BAF} =")
def _():
    """Antisymmetric form of L."""
    alg = A()
    t = T()
    m = _m_matrix()
    ll = _low(_v("L"))
    for f in range(3):
        lhs = total(alg, (m[(a, b)].scale(v) for (b, a, f2), v in t["eps3_low"].entries.items() if f2 == f))
        yield f"M eps[{LBL[f]}]", lhs, ll[f].scale(ONE + q(4))


@identity("E.2.52", "euclid-calculus", "2.52", r"WX^A & = & (1+\lambda^2) X^AW + (q^2-1)^2 g_{DB} X^D M^{BA}")
def _():
    """WX and WP relations with M."""
    t = T()
    w = el(SP, "W")
    m = _m_matrix()
    for stem in ("X", "P"):
        v = _v(stem)
        for a in range(3):
            rhs = (v[a] * w).scale(ONE + LAM2)
            for (d, b), gv in t["g"].entries.items():
                rhs = rhs + (v[d] * m[(b, a)]).scale((q(2) - 1) ** 2 * gv)
            yield f"W {stem}{LBL[a]}", w * v[a], rhs


def _lv_rhs(v):
    """``-q^-4 eps^{AFK} V_K W - q^-2 eps_{BC}^A eps^{BFD} V^C L_D`` indexed (A, F)."""
    t = T()
    w = el(SP, "W")
    ll = _low(_v("L"))
    vl = _low(v)
    out = {(a, f): _zero() for a in range(3) for f in range(3)}
    for (a, f, k), e in t["eps3_up"].entries.items():
        out[(a, f)] = out[(a, f)] + (vl[k] * w).scale(-q(-4) * e)
    for (b, c, a), e1 in t["eps3"].entries.items():
        for (b2, f, d), e2 in t["eps3_up"].entries.items():
            if b2 == b:
                out[(a, f)] = out[(a, f)] + (v[c] * ll[d]).scale(-q(-2) * e1 * e2)
    return out


@identity("E.2.53", "euclid-calculus", ("2.53", "3.2"), r"M^{AB} X^F & = & -q^{-4} (1+q^4) P_3^{AB}{}_{ML}")
def _():
    """LX, MX and LP relations."""
    alg = A()
    t = T()
    w = el(SP, "W")
    lv = _v("L")
    for stem in ("X", "P"):
        v = _v(stem)
        rhs = _lv_rhs(v)
        for a in range(3):
            for f in range(3):
                yield f"L{LBL[a]} {stem}{LBL[f]}", lv[a] * v[f], rhs[(a, f)]
    m = _m_matrix()
    x = alg.X
    gi = t["g_inv"]
    inner = {(l, f): w.scale(gi[l, f]) + m[(l, f)].scale(q(2)) for l in range(3) for f in range(3)}
    for a in range(3):
        for b in range(3):
            for f in range(3):
                rhs = _zero()
                for (a2, b2, mm, l), v in t["P3"].entries.items():
                    if (a2, b2) == (a, b):
                        rhs = rhs + (x[mm] * inner[(l, f)]).scale(-q(-4) * (ONE + q(4)) * v)
                yield f"M{LBL[a]}{LBL[b]} X{LBL[f]}", m[(a, b)] * x[f], rhs
    for i in range(3):
        yield f"Lambda L{LBL[i]}", alg.lambda_poly * lv[i], lv[i] * alg.lambda_poly
    yield "Lambda W", alg.lambda_poly * w, w * alg.lambda_poly


@identity("E.2.54", "euclid-calculus", "2.54", r"L^A (L\circ L) = (L\circ L) L^A")
def _():
    """L o L commutes with every L."""
    lv = _v("L")
    ll = _dot(lv, lv)
    for i in range(3):
        yield f"[{LBL[i]}]", lv[i] * ll, ll * lv[i]


def _central():
    lv = _v("L")
    w = el(SP, "W")
    return _dot(lv, lv).scale(q(4) * (q(2) - 1) ** 2) - w * w + A().one()


@identity("E.2.56", "euclid-calculus", ("2.55", "2.56", "3.6"), r"W^2-1 = q^4 (q^2-1)^2 L\circ L")
def _():
    """The central combination vanishes in the realization."""
    alg = A()
    c = _central()
    yield "q^4 (q^2-1)^2 L o L - W^2 + 1", c, _zero()
    for i in range(3):
        yield f"central vs X{LBL[i]}", c * alg.X[i], alg.X[i] * c
        yield f"central vs D{LBL[i]}", c * alg.D[i], alg.D[i] * c


# ---------------------------------------------------------------------------
# phase space

@identity("E.3.5", "euclid-phase", "3.5", r"\Lambda^{1/2} P^A &=& q^{-2}P^A \Lambda^{1/2}")
def _():
    """Exchange of l with X, P, L and W."""
    alg = A()
    l1 = alg.ell(1)
    w = el(SP, "W")
    for i in range(3):
        yield f"l X{LBL[i]}", l1 * alg.X[i], (alg.X[i] * l1).scale(q(2))
        yield f"l P{LBL[i]}", l1 * _v("P")[i], (_v("P")[i] * l1).scale(q(-2))
        yield f"l L{LBL[i]}", l1 * _v("L")[i], _v("L")[i] * l1
    yield "l W", l1 * w, w * l1


def _px_eps():
    """``(P^B X^C + q^4 X^B P^C) eps_{CB}^A``."""
    alg = A()
    p = _v("P")
    out = [_zero() for _ in range(3)]
    for (c, b, a), v in T()["eps3"].entries.items():
        out[a] = out[a] + (p[b] * alg.X[c] + (alg.X[b] * p[c]).scale(q(4))).scale(v)
    return out


@identity("E.3.7", "euclid-phase", "3.7", r"(P^B X^C + q^4 X^B P^C) \varepsilon _{CB}{}^A",
          note=lambda: "holds with +(i/2)(1-q^-4)(1+q^4) on the left")
def _():
    """L from the antisymmetric part of PX."""
    k = HALF_I * (ONE - q(-4)) * (ONE + q(4))
    yield from _per_component("PX eps", [(A().ell(-1) * x).scale(k) for x in _v("L")], _px_eps())


@identity("E.3.7.printed", "exploratory", "3.7", "", summary="3.7 with the leading minus sign (fails)")
def _():
    k = -HALF_I * (ONE - q(-4)) * (ONE + q(4))
    yield from _per_component("PX eps", [(A().ell(-1) * x).scale(k) for x in _v("L")], _px_eps())


@identity("E.3.8", "euclid-phase", "3.8", r"P\circ X -  q^6 X \circ P")
def _():
    """W from the singlet part of PX."""
    alg = A()
    p = _v("P")
    w = el(SP, "W")
    k = -HALF_I * q(-8) * (ONE + q(6)) * (ONE + q(2) + q(4))
    yield "P o X - q^6 X o P", (alg.ell(-1) * w).scale(k), _dot(p, alg.X) - _dot(alg.X, p).scale(q(6))


@identity("E.3.9", "euclid-phase", "3.9", r"\overline{\Lambda^{1/2}} = q^{-6} \Lambda^{-1/2}")
def _():
    """Conjugation of the phase-space generators."""
    alg = A()
    yield "bar l", nc_conjugate(alg.ell(1)), alg.ell(-1).scale(q(-6))
    yield "bar l l", nc_conjugate(alg.ell(1)) * alg.ell(1), alg.scalar(q(-6))
    for stem in ("X", "P", "L"):
        v = _v(stem)
        yield from _per_component(f"bar {stem}", [nc_conjugate(x) for x in v], _low(v))
    w = el(SP, "W")
    yield "bar W", nc_conjugate(w), w


def _relations_3_1_to_3_6():
    """(label, lhs, rhs) of the abstract defining relations, realized."""
    alg = A()
    w = el(SP, "W")
    lv = _v("L")
    for stem in ("X", "P"):
        v = _v(stem)
        for i, z in enumerate(_eps_pair(v, v)):
            yield f"3.1 {stem}{stem}[{LBL[i]}]", z, _zero()
    for i, z in enumerate(_l_ll_lhs()):
        yield f"3.1 LL[{LBL[i]}]", z, (w * lv[i]).scale(-q(-2))
    for stem in ("X", "P"):
        v = _v(stem)
        rhs = _lv_rhs(v)
        for a in range(3):
            for f in range(3):
                yield f"3.2 L{LBL[a]}{stem}{LBL[f]}", lv[a] * v[f], rhs[(a, f)]
    for i in range(3):
        yield f"3.2 L{LBL[i]}W", lv[i] * w, w * lv[i]
    for stem in ("X", "P"):
        v = _v(stem)
        for i, r in enumerate(_wv_rhs(v)):
            yield f"3.3 W{stem}{LBL[i]}", w * v[i], r
    lhs, rhs = _xp_lhs(), _xp_rhs()
    for k in sorted(lhs):
        yield f"3.4 PX[{LBL[k[0]]}{LBL[k[1]]}]", lhs[k], rhs[k]
    l1 = alg.ell(1)
    for stem, e in (("X", 2), ("P", -2), ("L", 0)):
        for i, x in enumerate(_v(stem)):
            yield f"3.5 l{stem}{LBL[i]}", l1 * x, (x * l1).scale(q(e))
    yield "3.5 lW", l1 * w, w * l1
    yield "3.6", _dot(lv, lv).scale(q(4) * (q(2) - 1) ** 2), w * w - alg.one()


@identity("E.herm", "euclid-phase", (), "", summary="conjugates of the defining phase-space relations hold")
def _():
    for label, lhs, rhs in _relations_3_1_to_3_6():
        yield "bar " + label, nc_conjugate(lhs), nc_conjugate(rhs)


@identity("E.3.11", "euclid-phase", ("3.10", "3.11"), r"X \circ L=  L \circ X = 0")
def _():
    """L is orthogonal to X."""
    alg = A()
    lv = _v("L")
    lx, xl = _dot(lv, alg.X), _dot(alg.X, lv)
    yield "X o L", xl, _zero()
    yield "L o X", lx, _zero()
    yield "L o X = -q^-2 (1+q^4) X o L", lx, xl.scale(-q(-2) * (ONE + q(4)))
    yield "L o X = q^2 X o L", lx, xl.scale(q(2))


@identity("E.3.12", "euclid-phase", "3.12", r"L \circ P=  P\circ L = 0")
def _():
    """L is orthogonal to P."""
    p, lv = _v("P"), _v("L")
    yield "L o P", _dot(lv, p), _zero()
    yield "P o L", _dot(p, lv), _zero()


@identity("E.3.13", "euclid-phase", "3.13", r"L^A (X \circ X) =  (X \circ X) L^A")
def _():
    """L commutes with X o X."""
    alg = A()
    xx = alg.dot(alg.X, alg.X)
    for i, x in enumerate(_v("L")):
        yield f"[{LBL[i]}]", x * xx, xx * x


def _tau():
    return el(SP, "tau")


@identity("E.3.14", "euclid-phase", ("3.14", "3.15"), r"\tau^{- 1/2} = W + q^2 (1 - q^2) L^3")
def _():
    """Action of L+ on coordinates through tau^-1/2."""
    alg = A()
    Xp, X3, Xm = alg.X
    lp, l3, lm = _v("L")
    tau = _tau()
    yield "tau^-1/2 = W + q^2(1-q^2) L3", tau, el(SP, "W") + l3.scale(q(2) * (ONE - q(2)))
    yield "L+ X+", lp * Xp, Xp * lp
    yield "L+ X3", lp * X3, X3 * lp + (Xp * tau).scale(q(-2))
    yield "L+ X-", lp * Xm, Xm * lp + (X3 * tau).scale(q(-3))


@identity("E.3.16", "euclid-phase", "3.16", r"L^- X^3 &=& X^3 L^- - q^{-4} X^- \tau^{- 1/2}")
def _():
    """Action of L- on coordinates."""
    alg = A()
    Xp, X3, Xm = alg.X
    lm = _v("L")[2]
    tau = _tau()
    yield "L- X+", lm * Xp, Xp * lm - (X3 * tau).scale(q(-3))
    yield "L- X3", lm * X3, X3 * lm - (Xm * tau).scale(q(-4))
    yield "L- X-", lm * Xm, Xm * lm


@identity("E.3.17", "euclid-phase", "3.17", r"\tau^{- 1/2} X^+ &=& q^2 X^+  \tau^{- 1/2}")
def _():
    """tau^-1/2 scales the coordinates by their charge."""
    tau = _tau()
    for i, e in enumerate((2, 0, -2)):
        x = A().X[i]
        yield f"tau X{LBL[i]}", tau * x, (x * tau).scale(q(e))


@identity("E.3.17.P", "exploratory", (), "", summary="momentum analog of the tau^-1/2 exchange")
def _():
    tau = _tau()
    for i, e in enumerate((2, 0, -2)):
        p = _v("P")[i]
        yield f"tau P{LBL[i]}", tau * p, (p * tau).scale(q(e))


@identity("E.3.18", "euclid-phase", "3.18", r"L^\pm X \circ Y = X \circ Y  L^\pm",
          summary="L+-, tau^-1/2 commute with X o Y for the instances Y = X and Y = P")
def _():
    alg = A()
    lp, _, lm = _v("L")
    tau = _tau()
    for stem in ("X", "P"):
        xy = _dot(alg.X, _v(stem))
        for name, g in (("L+", lp), ("L-", lm), ("tau", tau)):
            yield f"{name} X o {stem}", g * xy, xy * g


def _lpm():
    lp, _, lm = _v("L")
    return lp, lm, lp * lm, lm * lp


@identity("E.3.19", "euclid-phase", "3.19", r"q L^- L^+ -q L^+ L^- = - \frac{1}{q^2}  \tau^{- 1/2} L^3")
def _():
    """Third component of the LL relation."""
    lp, lm, pm, mp = _lpm()
    yield "q L-L+ - q L+L-", (mp - pm).scale(q(1)), (_tau() * _v("L")[1]).scale(-q(-2))


@identity("E.3.20", "euclid-phase", "3.20", r"1 - W^2 + q^4 (q^2 -1)^2 L^3 L^3")
def _():
    """Third component of the L o L relation."""
    alg = A()
    lp, lm, pm, mp = _lpm()
    l3 = _v("L")[1]
    w = el(SP, "W")
    lhs = (pm.scale(q(1)) + mp.scale(q(-1))).scale(q(4) * (ONE - q(2)) ** 2)
    yield "L+L- combination", lhs, alg.one() - w * w + (l3 * l3).scale(q(4) * (q(2) - 1) ** 2)


def _tau_inv():
    t = _tau()
    return t * t


@identity("E.3.21", "euclid-phase", ("3.21", "3.24"), r"\tau^{- 1/2} L^+ &=& q^2 L^+  \tau^{- 1/2}")
def _():
    """Closure of L+, L-, tau."""
    alg = A()
    lp, lm, pm, mp = _lpm()
    tau = _tau()
    rhs = (_tau_inv() - alg.one()).scale((q(4) * (ONE - q(4))).inverse())
    yield "q L+L- - q^-1 L-L+", pm.scale(q(1)) - mp.scale(q(-1)), rhs
    yield "tau L+", tau * lp, (lp * tau).scale(q(2))
    yield "tau L-", tau * lm, (lm * tau).scale(q(-2))


@identity("E.3.22", "euclid-phase", "3.22", r"L^3 = q^3 \tau^{1/2} (L^+ L^- - L^- L^+)",
          clearer=("tau^-1/2",))
def _():
    """L3 through L+-, cleared by tau^-1/2 on the left."""
    lp, lm, pm, mp = _lpm()
    yield "tau^-1/2 L3", _tau() * _v("L")[1], (pm - mp).scale(q(3))


@identity("E.3.23", "euclid-phase", "3.23", r"W = \tau^{- 1/2} + q^5 (q^2 - 1) \tau^{1/2}(L^+ L^- - L^- L^+)",
          clearer=("tau^-1/2",))
def _():
    """W through tau and L+-, cleared by tau^-1/2 on the left."""
    lp, lm, pm, mp = _lpm()
    w = el(SP, "W")
    yield "tau^-1/2 W", _tau() * w, _tau_inv() + (pm - mp).scale(q(5) * (q(2) - 1))


# ---------------------------------------------------------------------------
# SO_q(3) generators through formal tau powers

def _formal_gens(t_minus_sign=-ONE):
    """T+, T-, T3 as formal sums in g = tau^-1/2 and the names L+, L-."""
    tp = FormalSum.term(-1, ("L+",), q(2) * S)
    tm = FormalSum.term(-1, ("L-",), t_minus_sign * q(3) * S)
    k = q(1) / (q(2) - 1)
    t3 = FormalSum.term(0, (), k) + FormalSum.term(-2, (), -k)
    return tp, tm, t3


def _x(name):
    return FormalSum.term(0, (name,), ONE)


def _so3_relations(gens):
    tp, tm, t3 = gens
    qq = q(1) + q(-1)
    yield "T+T-", tp * tm * q(-1) - tm * tp * q(1) - t3
    yield "T3T+", t3 * tp * q(2) - tp * t3 * q(-2) - tp * qq
    yield "T-T3", tm * t3 * q(2) - t3 * tm * q(-2) - tm * qq


def _action_relations(gens):
    tp, tm, t3 = gens
    xp, x3, xm = _x("X+"), _x("X3"), _x("X-")
    s = S
    yield "T3 X3", t3 * x3 - x3 * t3
    yield "T3 X+", t3 * xp - xp * t3 * q(-4) - xp * (q(-1) * (ONE + q(-2)))
    yield "T3 X-", t3 * xm - xm * t3 * q(4) + xm * (q(1) * (ONE + q(2)))
    yield "T+ X3", tp * x3 - x3 * tp - xp * (q(-2) * s)
    yield "T+ X+", tp * xp - xp * tp * q(-2)
    yield "T+ X-", tp * xm - xm * tp * q(2) - x3 * (q(-1) * s)
    yield "T- X3", tm * x3 - x3 * tm - xm * (q(1) * s)
    yield "T- X+", tm * xp - xp * tm * q(-2) - x3 * s
    yield "T- X-", tm * xm - xm * tm * q(2)


def _realizer():
    alg = A()
    names = {"L+": _v("L")[0], "L-": _v("L")[2], "X+": alg.X[0], "X3": alg.X[1], "X-": alg.X[2]}
    return names, _tau()


def _exchange_checks():
    """The commutation rules the formal pusher relies on, checked in the realization."""
    names, tau = _realizer()
    for n, p in names.items():
        yield f"tau {n}", tau * p, (p * tau).scale(q(FormalSum.WEIGHTS[n]))


@identity("E.3.26", "euclid-phase", ("3.25", "3.26"), r"\frac{1}{q} T^+ T^- - q T^- T^+ &=& T^3",
          clearer=("tau^-1/2 power",),
          note=lambda: "T- = -q^3 sqrt(1+q^2) tau^1/2 L-")
def _():
    """SO_q(3) relations of T+-, T3 after clearing tau powers."""
    names, tau = _realizer()
    yield from _exchange_checks()
    for label, rel in _so3_relations(_formal_gens()):
        yield label, rel.cleared(names, tau), _zero()


@identity("E.3.27", "euclid-phase", "3.27", r"T^+ X^3 &=& X^3 T^+  + q^{-2} \sqrt{1 + q^2} X^+",
          clearer=("tau^-1/2 power",),
          note=lambda: "T- = -q^3 sqrt(1+q^2) tau^1/2 L-")
def _():
    """Action of T on the coordinates after clearing tau powers."""
    names, tau = _realizer()
    yield from _exchange_checks()
    for label, rel in _action_relations(_formal_gens()):
        yield label, rel.cleared(names, tau), _zero()


@identity("E.3.26.printed", "exploratory", ("3.25", "3.26", "3.27"), "",
          summary="T relations with T- taken with a plus sign (fails)")
def _():
    names, tau = _realizer()
    gens = _formal_gens(ONE)
    for label, rel in list(_so3_relations(gens)) + list(_action_relations(gens)):
        yield label, rel.cleared(names, tau), _zero()
