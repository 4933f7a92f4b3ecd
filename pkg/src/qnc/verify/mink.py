"""Identities of the Minkowski coordinate/derivative calculus and phase space."""

from __future__ import annotations

from functools import lru_cache

from ..coeff import ONE, QScalar, qpow
from ..ncalg import clear_and_equal, default_hat_coeff, nc_conjugate
from ..tensor import tensor_parts
from .common import HALF_I, alg_of, bilinear, dot, el, lower, total, vec
from .core import identity
from .formal import FormalSum, names

SP = "Mink4"
q = qpow
LBL = "0+3-"
SPATIAL = (1, 2, 3)  # Minkowski slots of the Euclidean labels +, 3, -


def A():
    return alg_of(SP)


def T():
    return tensor_parts(SP)


def E3():
    return tensor_parts("Euclid3")


def _zero():
    return A().zero()


@lru_cache(maxsize=None)
def _v(stem):
    return vec(SP, stem)


def _u():
    return el(SP, "U")


def _vv():
    return {(a, b): el(SP, f"V{LBL[a]}{LBL[b]}") for a in range(4) for b in range(4)}


def _eta_dot(u, v):
    return dot(T()["eta"], u, v, A())


def _g_low3(v):
    """Lower a spatial triple with the Euclidean metric."""
    return lower(E3()["g"], v, A())


def _per(name, lhs, rhs, labels=LBL):
    for i in range(len(lhs)):
        yield f"{name}[{labels[i]}]", lhs[i], rhs[i]


def _per_pair(name, lhs: dict, rhs: dict, labels=LBL):
    for (a, b) in sorted(lhs):
        yield f"{name}[{labels[a]}{labels[b]}]", lhs[(a, b)], rhs[(a, b)]


def _rank4_rows(t, a, b):
    return [((c, d), v) for (a2, b2, c, d), v in t.entries.items() if (a2, b2) == (a, b)]


def _kills(proj, left, right, name):
    for k, v in bilinear(proj, left, right, A()).items():
        yield f"{name}[{LBL[k[0]]}{LBL[k[1]]}]", v, _zero()


def _eps3_spatial(left, right):
    """``left^C right^D eps_{DC}^A`` over spatial slots (result indexed +, 3, -)."""
    out = [_zero() for _ in range(3)]
    for (d, c, a), v in E3()["eps3"].entries.items():
        out[a] = out[a] + (left[c] * right[d]).scale(v)
    return out


def _spatial(v):
    return [v[i] for i in SPATIAL]


def _sym_pair_rule(tensor, lhs_left, lhs_right, rhs_left, rhs_right, name, scale=ONE, const=None):
    """``L^a R^b = const^{ab} + scale * t^{ab}_{cd} r1^c r2^d``."""
    alg = A()
    rhs = bilinear(tensor, rhs_left, rhs_right, alg)
    for a in range(4):
        for b in range(4):
            r = rhs[(a, b)].scale(scale)
            if const is not None:
                r = r + alg.scalar(const[a, b])
            yield f"{name}[{LBL[a]}{LBL[b]}]", lhs_left[a] * lhs_right[b], r


# ---------------------------------------------------------------------------
# coordinates and derivatives

@identity("M.4.6", "mink-calculus", ("4.4", "4.5", "4.6"), r"X^0 X^A = X^A X^0")
def _():
    """Coordinate relations in projector, R_I and explicit form; X o X is central among X."""
    alg = A()
    x = alg.X
    yield from _kills(T()["Pplus"], x, x, "P+ XX")
    yield from _kills(T()["Pminus"], x, x, "P- XX")
    yield from _sym_pair_rule(T()["RI"], x, x, x, x, "XX = RI XX")
    for i in SPATIAL:
        yield f"X0 X{LBL[i]}", x[0] * x[i], x[i] * x[0]
    rhs = [(x[0] * xa).scale(ONE - q(2)) for xa in _spatial(x)]
    yield from _per("eps XX", _eps3_spatial(_spatial(x), _spatial(x)), rhs, "+3-")
    xx = _eta_dot(x, x)
    for i in range(4):
        yield f"X o X vs X{LBL[i]}", x[i] * xx, xx * x[i]


@identity("M.4.7", "mink-calculus", ("4.7", "4.8"), r"\overline{X^+} = -q X^-")
def _():
    """Conjugation of the coordinates."""
    alg = A()
    x = alg.X
    yield "bar X0", nc_conjugate(x[0]), x[0]
    yield "bar X3", nc_conjugate(x[2]), x[2]
    yield "bar X+", nc_conjugate(x[1]), x[3].scale(-q(1))
    yield "bar X-", nc_conjugate(x[3]), x[1].scale(-q(-1))
    rel = x[0] * x[1] - x[1] * x[0]
    yield "bar of X0 X+ relation", nc_conjugate(rel), _zero()


def _d_low():
    return lower(T()["eta"], A().D, A())


@identity("M.4.15", "mink-calculus", ("4.15", "4.17"), r"\partial_a X^b = \delta_a{}^b + \hat{R}_{II}{}^{bc}{}_{ad} X^d \partial_c")
def _():
    """Leibniz rule with lower and with raised derivative index."""
    alg = A()
    t = T()
    x, d = alg.X, alg.D
    dl = _d_low()
    for a in range(4):
        for b in range(4):
            rhs = alg.one() if a == b else _zero()
            for (b2, c, a2, dd), v in t["RII"].entries.items():
                if (b2, a2) == (b, a):
                    rhs = rhs + (x[dd] * dl[c]).scale(v)
            yield f"d_{LBL[a]} X{LBL[b]}", dl[a] * x[b], rhs
    yield from _sym_pair_rule(t["RII_inv"], d, x, x, d, "d^a X^b", q(-2), t["eta_inv"])


@identity("M.4.16", "mink-calculus", ("4.16", "4.18", "4.19"), r"\partial^a \partial^b  = \hat{R}_I^{ab}{}_{cd} \partial^c \partial^d")
def _():
    """Derivative relations."""
    alg = A()
    t = T()
    d = alg.D
    dl = _d_low()
    for a in range(4):
        for b in range(4):
            rhs = total(alg, ((dl[dd] * dl[c]).scale(v) for (c, dd, b2, a2), v in t["RI"].entries.items()
                              if (b2, a2) == (b, a)))
            yield f"d_{LBL[a]} d_{LBL[b]}", dl[a] * dl[b], rhs
    yield from _sym_pair_rule(t["RI"], d, d, d, d, "DD = RI DD")
    yield from _kills(t["Pplus"], d, d, "P+ DD")
    yield from _kills(t["Pminus"], d, d, "P- DD")


def _dhat(alg=None):
    alg = alg or A()
    if alg is A():
        return _v("Dhat")
    return tuple(alg.ell(-2) * av for av in alg.conj_derivative_avatars)


def _dhat_x_residues(alg):
    """Residues of ``Dhat^a X^b - eta^{ab} - q^2 RII^{ab}_{cd} X^c Dhat^d``, cleared."""
    t = T()
    dh = _dhat(alg)
    rhs = bilinear(t["RII"], alg.X, dh, alg)
    out = {}
    for a in range(4):
        for b in range(4):
            lhs = dh[a] * alg.X[b]
            r = clear_and_equal(lhs, rhs[(a, b)].scale(q(2)) + alg.scalar(t["eta_inv"][a, b]))
            out[(a, b)] = r.residue
    return out


@lru_cache(maxsize=None)
def solved_hat_coeff() -> QScalar:
    """Coefficient ``c`` in ``Dhat_a = Lambda^-1 [d_a + c X_a (d o d)]`` forced by the Dhat X relation.

    The residue is affine in ``c``; it is computed at ``c = 0`` and ``c = 1``
    and the unique root is returned.  Raises if no single ``c`` works.
    """
    base = A()
    res = []
    for c in (QScalar.of(0), QScalar.of(1)):
        alg = base.with_rules(name=f"Mink4[c={c}]")
        alg.hat_coeff = c
        res.append(_dhat_x_residues(alg))
    root = None
    for key in res[0]:
        r0, r1 = res[0][key], res[1][key]
        zero = QScalar.of(0)
        for mono in set(r0.terms) | set(r1.terms):
            c0 = r0.terms.get(mono, zero)
            slope = r1.terms.get(mono, zero) - c0
            if slope.is_zero():
                if c0.is_zero():
                    continue
                raise ArithmeticError("no coefficient satisfies the Dhat X relation")
            cand = -c0 / slope
            if root is None:
                root = cand
            elif cand != root:
                raise ArithmeticError("no single coefficient satisfies the Dhat X relation")
    if root is None:
        raise ArithmeticError("Dhat X relation holds for every c")
    return root


@identity("M.4.21", "mink-calculus", "4.21", r"\hat{\partial}^a X^b  =\eta^{ab} + q^2  \hat{R}_{II}^{ab}{}_{cd} X^c \hat{\partial}^d")
def _():
    """Conjugate derivative against coordinates."""
    alg = A()
    t = T()
    yield from _sym_pair_rule(t["RII"], _dhat(), alg.X, alg.X, _dhat(), "Dhat X", q(2), t["eta_inv"])


@identity("M.4.29", "mink-calculus", "4.29", r"\hat{\partial}_a =  \Lambda^{-1} \left[\partial_a",
          note=lambda: f"c(q) = {solved_hat_coeff()}")
def _():
    """The conjugate derivative coefficient solved from the Dhat X relation equals the one in use."""
    c = solved_hat_coeff()
    yield "solved c = q^-2 (1-q^2)/(1+q^2)", c, default_hat_coeff()
    alg = A()
    dl = lower(T()["eta"], _dhat(), alg)
    xl = lower(T()["eta"], alg.X, alg)
    dd = alg.dot(alg.D, alg.D)
    for a in range(4):
        rhs = alg.ell(-2) * (_d_low()[a] + (xl[a] * dd).scale(c))
        yield f"Dhat_{LBL[a]}", dl[a], rhs


@identity("M.4.23", "mink-calculus", ("4.23", "4.26"), r"\hat{\partial}^a \hat{\partial}^b = \hat{R}_I{}^{ab}{}_{cd}  \hat{\partial}^c \hat{\partial}^d")
def _():
    """Conjugate derivative relations."""
    t = T()
    dh = _dhat()
    yield from _sym_pair_rule(t["RI"], dh, dh, dh, dh, "Dhat Dhat")
    yield from _kills(t["Pplus"], dh, dh, "P+ Dhat Dhat")
    yield from _kills(t["Pminus"], dh, dh, "P- Dhat Dhat")


@identity("M.4.24", "mink-calculus", ("4.24", "4.25"), r"\partial^a \hat{\partial}^b = \hat{R}_{II}{}^{ab}{}_{cd}  \hat{\partial}^c \partial^d",
          note=lambda: "holds with the inverse of R_II")
def _():
    """Derivative against conjugate derivative."""
    alg = A()
    t = T()
    dh = _dhat()
    yield from _sym_pair_rule(t["RII_inv"], alg.D, dh, dh, alg.D, "D Dhat")
    for proj, name in ((t["Pplus"], "P+"), (t["Pminus"], "P-")):
        s1 = bilinear(proj, alg.D, dh, alg)
        s2 = bilinear(proj, dh, alg.D, alg)
        for k in s1:
            yield f"{name} (D Dhat + Dhat D)[{LBL[k[0]]}{LBL[k[1]]}]", s1[k] + s2[k], _zero()


@identity("M.4.24.printed", "exploratory", "4.24", "", summary="4.24 with R_II in place of its inverse (fails)")
def _():
    alg = A()
    dh = _dhat()
    yield from _sym_pair_rule(T()["RII"], alg.D, dh, dh, alg.D, "D Dhat")


@identity("M.4.28", "mink-calculus", ("4.27", "4.28"), r"\Lambda \hat{\partial}^a &=& q^2 \hat{\partial}^a \Lambda")
def _():
    """Scaling element exchanges with every generator."""
    alg = A()
    lam = alg.lambda_poly
    for i in range(4):
        yield f"Lambda X{LBL[i]}", lam * alg.X[i], (alg.X[i] * lam).scale(q(-2))
        yield f"Lambda D{LBL[i]}", lam * alg.D[i], (alg.D[i] * lam).scale(q(2))
        yield f"Lambda Dhat{LBL[i]}", lam * _dhat()[i], (_dhat()[i] * lam).scale(q(2))
        yield f"l^2 X{LBL[i]} agrees", alg.ell(2) * alg.X[i], (alg.X[i] * alg.ell(2)).scale(q(-2))


@identity("M.4.20", "mink-calculus", "4.20", r"\overline{\partial^A} = - q^4 g_{AB} \hat{\partial}^B")
def _():
    """Conjugation of derivatives is an involution."""
    alg = A()
    for i in range(4):
        yield f"bar bar D{LBL[i]}", nc_conjugate(nc_conjugate(alg.D[i])), alg.D[i]
        yield f"bar bar X{LBL[i]}", nc_conjugate(nc_conjugate(alg.X[i])), alg.X[i]
    yield "bar bar l", nc_conjugate(nc_conjugate(alg.ell(1))), alg.ell(1)


@identity("M.4.30", "mink-calculus", "4.30", r"\overline{\Lambda} = q^8 \Lambda^{-1}")
def _():
    """The scaling element is unitary up to normalization."""
    alg = A()
    lam = alg.lambda_poly
    bar = nc_conjugate(lam)
    yield "bar Lambda = q^8 l^-2", bar, alg.ell(-2).scale(q(8))
    yield "bar Lambda l^2", bar * alg.ell(2), alg.scalar(q(8))


def _conj_index(v):
    """``(v^0, g_AB v^B)``: the conjugation pattern of a hermitean four-vector."""
    sp = _g_low3(_spatial(v))
    return [v[0], *sp]


@identity("M.4.32", "mink-calculus", ("4.31", "4.32"), r"\overline{P^0} = P^0  ,  \quad \overline{P^A} = g_{AB}P^B")
def _():
    """Momenta are hermitean."""
    alg = A()
    p = _v("P")
    for i in range(4):
        yield f"P{LBL[i]} definition", p[i], (alg.D[i] + _dhat()[i].scale(q(4))).scale(-HALF_I)
    yield from _per("bar P", [nc_conjugate(x) for x in p], _conj_index(p))


@identity("M.4.33", "mink-calculus", ("4.33", "4.34"), r"PP = \hat{R}_I PP")
def _():
    """Momentum relations."""
    t = T()
    p = _v("P")
    yield from _kills(t["Pplus"], p, p, "P+ PP")
    yield from _kills(t["Pminus"], p, p, "P- PP")
    yield from _sym_pair_rule(t["RI"], p, p, p, p, "PP = RI PP")


def _px_lhs():
    alg = A()
    p = _v("P")
    rx = bilinear(T()["RII_inv"], alg.X, p, alg)
    return {(a, b): p[a] * alg.X[b] - rx[(a, b)].scale(q(-2)) for a in range(4) for b in range(4)}


@identity("M.4.35", "mink-calculus", "4.35", r"+ q^2 (1 - q^4) P_A{}^{ab}{}_{cd} X^c \hat{\partial}^d) \Big\}")
def _():
    """Momentum-coordinate relation through X o Dhat and P_A X Dhat."""
    alg = A()
    t = T()
    dh = _dhat()
    k = q(2) * (q(2) - 1) / (q(2) + 1)
    single = alg.one() + _eta_dot(alg.X, dh).scale(k)
    pax = bilinear(t["PA"], alg.X, dh, alg)
    rhs = {key: (single.scale((ONE + q(4)) * t["eta_inv"][key]) + pax[key].scale(q(2) * (ONE - q(4)))).scale(-HALF_I)
           for key in pax}
    yield from _per_pair("PX", _px_lhs(), rhs)


def _px_rhs(u_scale=ONE + q(4)):
    alg = A()
    t = T()
    u = _u()
    vv = _vv()
    return {(a, b): (alg.ell(-1) * (u.scale(u_scale * t["eta_inv"][a, b]) + vv[(a, b)].scale(q(2) * (ONE - q(4)))))
            .scale(-HALF_I) for a in range(4) for b in range(4)}


@identity("M.4.38", "mink-calculus", ("4.36", "4.37", "4.38", "5.6"), r"- \frac{i}{2} \Lambda^{-1/2} \left\{ (1 + q^4) \eta^{ab} U")
def _():
    """U is hermitean and the momentum-coordinate relation factorizes through U and V."""
    alg = A()
    u = _u()
    dh = _dhat()
    yield "bar U = U", nc_conjugate(u), u
    k = q(2) * (q(2) - 1) / (q(2) + 1)
    yield "U definition", u, alg.ell(1) * (alg.one() + _eta_dot(alg.X, dh).scale(k))
    pax = bilinear(T()["PA"], alg.X, dh, alg)
    vv = _vv()
    for key in sorted(pax):
        yield f"V definition[{LBL[key[0]]}{LBL[key[1]]}]", vv[key], alg.ell(1) * pax[key]
    yield from _per_pair("PX", _px_lhs(), _px_rhs())


def _vec_u_rule(v):
    """``(1/q)(q^4+1)/(q^2+1) v^a U - (1/2q)(q^2-1)^2 eta_bc v^b V^{ca}``."""
    t = T()
    u = _u()
    vv = _vv()
    k1 = q(-1) * (q(4) + 1) / (q(2) + 1)
    k2 = -q(-1) * (q(2) - 1) ** 2 / QScalar.of(2)
    out = []
    for a in range(4):
        r = (v[a] * u).scale(k1)
        for (b, c), e in t["eta"].entries.items():
            r = r + (v[b] * vv[(c, a)]).scale(k2 * e)
        out.append(r)
    return out


@identity("M.4.39", "mink-calculus", ("4.39", "5.5"), r"UX^a &=& \frac{1}{q}  \frac{q^4 + 1}{q^2 + 1} X^a U")
def _():
    """UX and UP relations."""
    u = _u()
    for stem in ("X", "P"):
        v = _v(stem)
        yield from _per(f"U {stem}", [u * x for x in v], _vec_u_rule(v))


def _v_vec_rule(v):
    """``P_A^{ab}_{cd} v^c {-(q+1/q) V^{dl} + (1/q) eta^{dl} U}`` keyed (a, b, l)."""
    t = T()
    u = _u()
    vv = _vv()
    inner = {(d, l): vv[(d, l)].scale(-(q(1) + q(-1))) + u.scale(q(-1) * t["eta_inv"][d, l])
             for d in range(4) for l in range(4)}
    out = {}
    for (a, b, c, d), val in t["PA"].entries.items():
        for l in range(4):
            key = (a, b, l)
            out[key] = out.get(key, _zero()) + (v[c] * inner[(d, l)]).scale(val)
    return out


@identity("M.4.40", "mink-calculus", ("4.40", "5.4"), r"V^{ab} X^l &=& P_A^{ab}{}_{cd} X^c")
def _():
    """VX and VP relations."""
    vv = _vv()
    for stem in ("X", "P"):
        v = _v(stem)
        rule = _v_vec_rule(v)
        for a in range(4):
            for b in range(4):
                for l in range(4):
                    yield (f"V{LBL[a]}{LBL[b]} {stem}{LBL[l]}", vv[(a, b)] * v[l],
                           rule.get((a, b, l), _zero()))


@identity("M.4.41", "mink-calculus", "4.41", r"UV = VU")
def _():
    """U commutes with every V."""
    u = _u()
    for k, v in sorted(_vv().items()):
        yield f"U V{LBL[k[0]]}{LBL[k[1]]}", u * v, v * u


@identity("M.4.42", "mink-calculus", "4.42", r"P_A{}^{rs}{}_{ad} g_{bc} V^{ab} V^{cd}",
          note=lambda: "the printed g_bc is the four-dimensional metric eta_bc")
def _():
    """Quadratic VV relation through U."""
    alg = A()
    t = T()
    vv = _vv()
    u = _u()
    # Z_{ad} = eta_{bc} V^{ab} V^{cd}
    z = {}
    for (b, c), e in t["eta"].entries.items():
        for a in range(4):
            for d in range(4):
                z[(a, d)] = z.get((a, d), _zero()) + (vv[(a, b)] * vv[(c, d)]).scale(e)
    for r in range(4):
        for s in range(4):
            lhs = total(alg, (z[key].scale(v) for key, v in _rank4_rows(t["PA"], r, s) if key in z))
            yield f"[{LBL[r]}{LBL[s]}]", lhs, (u * vv[(r, s)]).scale((ONE + q(2)).inverse())


@identity("M.4.44", "mink-calculus", ("4.43", "4.44", "5.1", "5.2"), r"V^{AB} &=&\varepsilon^{ABC} (R_C - S_C)")
def _():
    """R and S from V and back."""
    vv = _vv()
    r, s = _v("R"), _v("S")
    rl, sl = _g_low3(r), _g_low3(s)
    for i, a in enumerate(SPATIAL):
        yield f"V{LBL[a]}0", vv[(a, 0)], r[i] + s[i].scale(q(2))
        yield f"V0{LBL[a]}", vv[(0, a)], -(r[i].scale(q(2))) - s[i]
    for (ea, eb, ec), e in E3()["eps3_up"].entries.items():
        pass
    for i, a in enumerate(SPATIAL):
        for j, b in enumerate(SPATIAL):
            rhs = total(A(), ((rl[c] - sl[c]).scale(e) for (a2, b2, c), e in E3()["eps3_up"].entries.items()
                              if (a2, b2) == (i, j)))
            yield f"V{LBL[a]}{LBL[b]}", vv[(a, b)], rhs
    yield "V00", vv[(0, 0)], _zero()


def _rr_lines(r, sign):
    u = _u()
    lhs = _eps3_spatial(r, r)
    return lhs, [(u * x).scale(sign * (ONE + q(2)).inverse()) for x in r]


@identity("M.4.45", "mink-calculus", ("4.45", "5.3"), r"\varepsilon_{DA}{}^K       R^A R^D &=&\frac{1}{1 + q^2} UR^K")
def _():
    """RR and SS relations."""
    for stem, sign in (("R", ONE), ("S", -ONE)):
        lhs, rhs = _rr_lines(_v(stem), sign)
        yield from _per(f"eps {stem}{stem}", lhs, rhs, "+3-")


@identity("M.4.46", "mink-calculus", ("4.46", "5.3"), r"R^A S^B = q^2 \hat{R}^{AB}{}_{CD} S^C R^D",
          summary="The $\\hat{R}$ matrix in (4.46) is the Euclidean one")
def _():
    alg = A()
    r, s = _v("R"), _v("S")
    rhs = bilinear(E3()["rhat3"], s, r, alg)
    for a in range(3):
        for b in range(3):
            yield f"R{'+3-'[a]} S{'+3-'[b]}", r[a] * s[b], rhs[(a, b)].scale(q(2))


def _rx_rules(v):
    """Right sides of the R X relations with X replaced by ``v``: dict keyed (A, b)."""
    g, gi = E3()["g"], E3()["g_inv"]
    eps, eps_up, eps_low = E3()["eps3"], E3()["eps3_up"], E3()["eps3_low"]
    r = _v("R")
    u = _u()
    vs = _spatial(v)
    v0 = v[0]
    qq = ONE + q(2)
    out = {}
    for a in range(3):
        # R^A X^0
        val = (v0 * r[a]).scale(q(-1) * (q(4) + 1) / qq) - (vs[a] * u).scale(q(1) / qq ** 2)
        for (l, m, a2), e in eps.entries.items():
            if a2 == a:
                val = val + (vs[m] * r[l]).scale(q(-1) * (q(2) - 1) / qq * e)
        out[(a, 0)] = val
        for b in range(3):
            val = (vs[a] * r[b]).scale(q(1) * qq)
            # eps_C^{AB} = g_CD eps^{DAB}
            for (d, a2, b2), e in eps_up.entries.items():
                if (a2, b2) == (a, b):
                    for c in range(3):
                        gv = g[c, d]
                        if not gv.is_zero():
                            val = val - (v0 * r[c]).scale(q(-1) * (q(2) - 1) * gv * e)
            gab = gi[a, b]
            if not gab.is_zero():
                for (m, c), gv in g.entries.items():
                    val = val - (vs[m] * r[c]).scale(q(-1) * (q(2) - 1) * gab * gv)
                val = val - (v0 * u).scale(q(-1) / qq * gab)
            for (a2, b2, gg), e1 in eps_up.entries.items():
                if (a2, b2) == (a, b):
                    for (s_, t_, g2), e2 in eps_low.entries.items():
                        if g2 == gg:
                            val = val - (vs[t_] * r[s_]).scale(2 * q(-1) * e1 * e2)
            for (l, m, a2), e in eps.entries.items():
                if a2 == a:
                    glb = gi[l, b]
                    if not glb.is_zero():
                        val = val + (vs[m] * u).scale(q(-1) / qq * e * glb)
            out[(a, b + 1)] = val.scale(qq.inverse())
    return out


@identity("M.4.47", "mink-calculus", "4.47", r"R^AX^B &=& \frac{1}{1 + q^2}  \Big[q( 1 + q^2) X^A R^B")
def _():
    """RX and RP relations."""
    r = _v("R")
    for stem in ("X", "P"):
        v = _v(stem)
        rules = _rx_rules(v)
        for (a, b), rhs in sorted(rules.items()):
            yield f"R{'+3-'[a]} {stem}{LBL[b]}", r[a] * v[b], rhs


@identity("M.4.48", "mink-calculus", "4.48", r"\overline{R^A} = - S_A")
def _():
    """Conjugation exchanges R and S."""
    r, s = _v("R"), _v("S")
    yield from _per("bar R", [nc_conjugate(x) for x in r], [-x for x in _g_low3(s)], "+3-")
    yield from _per("bar S", [nc_conjugate(x) for x in s], [-x for x in _g_low3(r)], "+3-")


def _rr(stem):
    v = _v(stem)
    return dot(E3()["g"], v, v, A())


@identity("M.4.49", "mink-calculus", ("4.49", "4.50"), r"\vec{R}^2 = g_{AB} R^A R^B")
def _():
    """R o R and S o S are casimirs of the U, V algebra."""
    u = _u()
    for stem in ("R", "S"):
        c = _rr(stem)
        yield f"{stem}o{stem} U", c * u, u * c
        for other in ("R", "S"):
            for i, x in enumerate(_v(other)):
                yield f"{stem}o{stem} {other}{'+3-'[i]}", c * x, x * c


def _central():
    u = _u()
    return (_rr("R") + _rr("S")).scale((q(4) - 1) ** 2 / QScalar.of(2)) - (u * u - A().one())


@identity("M.4.51", "mink-calculus", ("4.51", "5.8"), r"(q^4 - 1)^2 \frac{1}{2}(\vec{R}^ 2 + \vec{S}^2) - (U^2 - 1) = 0")
def _():
    """The central combination vanishes in the realization."""
    alg = A()
    c = _central()
    yield "central element", c, _zero()
    for i in range(4):
        yield f"central vs X{LBL[i]}", c * alg.X[i], alg.X[i] * c
        yield f"central vs D{LBL[i]}", c * alg.D[i], alg.D[i] * c


# ---------------------------------------------------------------------------
# phase space

@identity("M.5.7", "mink-phase", "5.7", r"\Lambda^{-1/2} P^a = q^{-1} P^a \Lambda^{-1/2}")
def _():
    """Exchange of l^-1 with X, P, V and U."""
    alg = A()
    li = alg.ell(-1)
    for i in range(4):
        yield f"l^-1 X{LBL[i]}", li * alg.X[i], (alg.X[i] * li).scale(q(1))
        yield f"l^-1 P{LBL[i]}", li * _v("P")[i], (_v("P")[i] * li).scale(q(-1))
    for k, v in sorted(_vv().items()):
        yield f"l^-1 V{LBL[k[0]]}{LBL[k[1]]}", li * v, v * li
    yield "l^-1 U", li * _u(), _u() * li


@identity("M.5.9", "mink-phase", "5.9", r"\overline{\Lambda^{1/2}} = q^4 \Lambda^{-1/2}")
def _():
    """Conjugation of the phase-space generators."""
    alg = A()
    for stem in ("X", "P"):
        v = _v(stem)
        yield from _per(f"bar {stem}", [nc_conjugate(x) for x in v], _conj_index(v))
    r, s = _v("R"), _v("S")
    yield from _per("bar R", [nc_conjugate(x) for x in r], [-x for x in _g_low3(s)], "+3-")
    yield "bar U", nc_conjugate(_u()), _u()
    yield "bar l", nc_conjugate(alg.ell(1)), alg.ell(-1).scale(q(4))


# The defining phase-space relations written over generator names, so that the
# conjugation can be applied symbolically before realizing.

def _fs_zero():
    return FormalSum()


def _fs_vec(stem):
    labels = "+3-" if stem in ("R", "S") else LBL
    return names(*(f"{stem}{l}" for l in labels))


def _fs_low3(v):
    out = [_fs_zero() for _ in range(3)]
    for (a, b), c in E3()["g"].entries.items():
        out[a] = out[a] + v[b] * c
    return out


def _fs_eps3(left, right):
    """``left^C right^D eps_{DC}^A``."""
    out = [_fs_zero() for _ in range(3)]
    for (d, c, a), v in E3()["eps3"].entries.items():
        out[a] = out[a] + left[c] * right[d] * v
    return out


def _fs_v():
    """V^{ab} through R and S."""
    r, s = _fs_vec("R"), _fs_vec("S")
    rl, sl = _fs_low3(r), _fs_low3(s)
    v = {(a, b): _fs_zero() for a in range(4) for b in range(4)}
    for i, a in enumerate(SPATIAL):
        v[(a, 0)] = r[i] + s[i] * q(2)
        v[(0, a)] = -(r[i] * q(2)) - s[i]
    for (i, j, c), e in E3()["eps3_up"].entries.items():
        v[(SPATIAL[i], SPATIAL[j])] = v[(SPATIAL[i], SPATIAL[j])] + (rl[c] - sl[c]) * e
    return v


def _formal_relations():
    """``(label, lhs - rhs)`` for the defining relations of the phase-space algebra."""
    t = T()
    u, l1, li = names("U", "l", "l^-1")
    one = FormalSum.term(0, ())
    qq = ONE + q(2)
    for stem in ("X", "P"):
        v = _fs_vec(stem)
        for i in SPATIAL:
            yield f"5.3 {stem}0{stem}{LBL[i]}", v[0] * v[i] - v[i] * v[0]
        for i, z in enumerate(_fs_eps3(v[1:], v[1:])):
            yield f"5.3 eps {stem}{stem}[{'+3-'[i]}]", z - v[0] * v[i + 1] * (ONE - q(2))
    for stem, sign in (("R", ONE), ("S", -ONE)):
        v = _fs_vec(stem)
        for i, z in enumerate(_fs_eps3(v, v)):
            yield f"5.3 eps {stem}{stem}[{'+3-'[i]}]", z - u * v[i] * (sign * qq.inverse())
    r, s = _fs_vec("R"), _fs_vec("S")
    for a in range(3):
        for b in range(3):
            rhs = _fs_zero()
            for (a2, b2, c, d), val in E3()["rhat3"].entries.items():
                if (a2, b2) == (a, b):
                    rhs = rhs + s[c] * r[d] * (q(2) * val)
            yield f"5.3 R{'+3-'[a]}S{'+3-'[b]}", r[a] * s[b] - rhs
    vv = _fs_v()
    inner = {(d, f): vv[(d, f)] * -(q(1) + q(-1)) + u * (q(-1) * t["eta_inv"][d, f])
             for d in range(4) for f in range(4)}
    for stem in ("X", "P"):
        x = _fs_vec(stem)
        for a in range(4):
            for b in range(4):
                rows = _rank4_rows(t["PA"], a, b)
                for f in range(4):
                    rhs = _fs_zero()
                    for (c, d), val in rows:
                        rhs = rhs + x[c] * inner[(d, f)] * val
                    yield f"5.4 V{LBL[a]}{LBL[b]}{stem}{LBL[f]}", vv[(a, b)] * x[f] - rhs
    for k, v in sorted(vv.items()):
        yield f"5.4 V{LBL[k[0]]}{LBL[k[1]]}U", v * u - u * v
    k1 = q(-1) * (q(4) + 1) / qq
    k2 = -q(-1) * (q(2) - 1) ** 2 / QScalar.of(2)
    for stem in ("X", "P"):
        x = _fs_vec(stem)
        for a in range(4):
            rhs = x[a] * u * k1
            for (b, c), e in t["eta"].entries.items():
                rhs = rhs + x[b] * vv[(c, a)] * (k2 * e)
            yield f"5.5 U{stem}{LBL[a]}", u * x[a] - rhs
    x, p = _fs_vec("X"), _fs_vec("P")
    for a in range(4):
        for b in range(4):
            lhs = p[a] * x[b]
            for (c, d), val in _rank4_rows(t["RII_inv"], a, b):
                lhs = lhs - x[c] * p[d] * (q(-2) * val)
            rhs = li * (u * ((ONE + q(4)) * t["eta_inv"][a, b]) + vv[(a, b)] * (q(2) * (ONE - q(4)))) * -HALF_I
            yield f"5.6 P{LBL[a]}X{LBL[b]}", lhs - rhs
    for stem, e in (("X", 1), ("P", -1)):
        for i, y in enumerate(_fs_vec(stem)):
            yield f"5.7 l^-1 {stem}{LBL[i]}", li * y - y * li * q(e)
    for stem in ("R", "S"):
        for i, y in enumerate(_fs_vec(stem)):
            yield f"5.7 l^-1 {stem}{'+3-'[i]}", li * y - y * li
    yield "5.7 l^-1 U", li * u - u * li
    rr = _fs_zero()
    for (a, b), c in E3()["g"].entries.items():
        rr = rr + (r[a] * r[b] + s[a] * s[b]) * c
    yield "5.8", u * u - one - rr * ((q(4) - 1) ** 2 / QScalar.of(2))


def _conj_images():
    """Conjugates of the generator names, as in the phase-space conjugation rules."""
    imgs = {}
    for stem in ("X", "P"):
        v = _fs_vec(stem)
        imgs[f"{stem}0"] = v[0]
        for i, w in enumerate(_fs_low3(v[1:])):
            imgs[f"{stem}{'+3-'[i]}"] = w
    r, s = _fs_vec("R"), _fs_vec("S")
    for stem, other in (("R", s), ("S", r)):
        for i, w in enumerate(_fs_low3(other)):
            imgs[f"{stem}{'+3-'[i]}"] = -w
    u, l1, li = names("U", "l", "l^-1")
    imgs.update({"U": u, "l": li * q(4), "l^-1": l1 * q(-4)})
    return imgs


def _realized_names():
    alg = A()
    vals = {"U": _u(), "l": alg.ell(1), "l^-1": alg.ell(-1)}
    for stem in ("X", "P"):
        for l, v in zip(LBL, _v(stem)):
            vals[f"{stem}{l}"] = v
    for stem in ("R", "S"):
        for l, v in zip("+3-", _v(stem)):
            vals[f"{stem}{l}"] = v
    return vals


@identity("M.herm", "mink-phase", (), "", summary="conjugates of the defining phase-space relations hold")
def _():
    alg = A()
    imgs = _conj_images()
    vals = _realized_names()
    memo: dict = {}
    # the unconjugated relations are checked by the identities that cite them
    for label, rel in _formal_relations():
        yield "bar " + label, rel.conjugate(imgs).realize(vals, alg, memo), _zero()


def _eps4_low():
    """``eps_{abcd} = eta_ae eta_bf eps^{ef}_{cd}``."""
    from ..tensor import einsum

    t = T()
    return einsum("ae,bf,efcd->abcd", t["eta"], t["eta"], t["eps4"])


@identity("M.5.10", "mink-phase", "5.10", r"X^a \varepsilon_{abcd} V^{cd} = 0")
def _():
    """X and P are orthogonal to V in the epsilon sense."""
    alg = A()
    e = _eps4_low()
    vv = _vv()
    for stem in ("X", "P"):
        v = _v(stem)
        for b in range(4):
            lhs = total(alg, ((v[a] * vv[(c, d)]).scale(val) for (a, b2, c, d), val in e.entries.items() if b2 == b))
            yield f"{stem} eps V[{LBL[b]}]", lhs, _zero()


@identity("M.5.11", "mink-phase", "5.11", r"\varepsilon_{abcd} V^{ba} V^{cd} = 0")
def _():
    """Epsilon square of V vanishes."""
    alg = A()
    vv = _vv()
    lhs = total(alg, ((vv[(b, a)] * vv[(c, d)]).scale(val) for (a, b, c, d), val in _eps4_low().entries.items()))
    yield "eps V V", lhs, _zero()


@identity("M.5.12", "mink-phase", "5.12", r"S \circ S = R \circ R")
def _():
    yield "S o S - R o R", _rr("S"), _rr("R")


@identity("M.5.13", "mink-phase", "5.13", r"R^A X \circ X = X \circ X R^A")
def _():
    """R and S commute with X o X and P o P."""
    for other in ("X", "P"):
        v = _v(other)
        c = _eta_dot(v, v)
        for stem in ("R", "S"):
            for i, x in enumerate(_v(stem)):
                yield f"{stem}{'+3-'[i]} {other}o{other}", x * c, c * x


def _rho():
    return el(SP, "rho")


def _sigma():
    return el(SP, "sigma")


@identity("M.5.15", "mink-phase", ("5.14", "5.15"), r"R^+ X^+ = q X^+ R^+")
def _():
    """R+ X relations through rho."""
    x = A().X
    rp, r3 = _v("R")[0], _v("R")[1]
    rho = _rho()
    qq = ONE + q(2)
    yield "rho definition", rho, r3.scale(q(4) - 1) + _u()
    yield "R+ X+", rp * x[1], (x[1] * rp).scale(q(1))
    yield "R+ X-", rp * x[3], (x[3] * rp).scale(q(-1)) + (x[0] * rho - x[2] * rho).scale(qq ** -2)
    yield "R+ X3", rp * x[2], (x[1] * rho).scale(-q(1) / qq ** 2) + (x[2] * rp).scale(2 * q(1) / qq) + \
        (x[0] * rp).scale(q(1) * (q(2) - 1) / qq)
    yield "R+ X0", rp * x[0], (x[1] * rho).scale(-q(1) / qq ** 2) + (x[2] * rp).scale(q(-1) * (q(2) - 1) / qq) + \
        (x[0] * rp).scale(q(-1) * (q(4) + 1) / qq)


@identity("M.5.16", "mink-phase", "5.16", r"\rho X^+ = q X^+ \rho")
def _():
    """rho X relations."""
    x = A().X
    rp = _v("R")[0]
    rho = _rho()
    qq = ONE + q(2)
    k = (q(2) - 1) ** 2 * qq
    yield "rho X+", rho * x[1], (x[1] * rho).scale(q(1)) + ((x[2] - x[0]) * rp).scale(q(-1) * k)
    yield "rho X-", rho * x[3], (x[3] * rho).scale(q(-1))
    yield "rho X3", rho * x[2], (x[2] * rho).scale(2 * q(1) / qq) + (x[3] * rp).scale(q(-2) * k) - \
        (x[0] * rho).scale(q(-1) * (q(2) - 1) / qq)
    yield "rho X0", rho * x[0], (x[0] * rho).scale(q(-1) * (q(4) + 1) / qq) - \
        (x[2] * rho).scale(q(1) * (q(2) - 1) / qq) + (x[3] * rp).scale(q(-2) * k)


def _commute_with_dots(pairs):
    alg = A()
    for stem in ("X", "P"):
        xy = _eta_dot(alg.X, _v(stem))
        for name, g in pairs:
            yield f"{name} X o {stem}", g * xy, xy * g


@identity("M.5.17", "mink-phase", "5.17", r"R^+ X \circ Y = X \circ Y R^+",
          summary="R+ and rho commute with X o Y for Y = X and Y = P")
def _():
    yield from _commute_with_dots((("R+", _v("R")[0]), ("rho", _rho())))


@identity("M.5.19", "mink-phase", ("5.18", "5.19"), r"S^- X \circ Y = X \circ Y S^-",
          summary="S- and sigma commute with X o Y for Y = X and Y = P; sigma = -bar rho")
def _():
    yield "sigma definition", _sigma(), _v("S")[1].scale(q(4) - 1) - _u()
    yield "bar rho = -sigma", nc_conjugate(_rho()), -_sigma()
    yield from _commute_with_dots((("S-", _v("S")[2]), ("sigma", _sigma())))


@identity("M.5.20", "mink-phase", "5.20", r"R^- X \circ Y = X \circ Y R^-",
          summary="R- and S+ commute with X o Y for Y = X and Y = P")
def _():
    yield from _commute_with_dots((("R-", _v("R")[2]), ("S+", _v("S")[0])))


def _rs_third(sign_s=ONE):
    rp, r3, rm = _v("R")
    sp, s3, sm = _v("S")
    qq = ONE + q(2)
    yield "R", (rm * rp - rp * rm).scale(q(1)), (_rho() * r3).scale(qq.inverse())
    yield "S", (sm * sp - sp * sm).scale(q(1)), (_sigma() * s3).scale(sign_s * qq.inverse())


@identity("M.5.21", "mink-phase", "5.21", r"qR^- R^+ - qR^+ R^- = \frac{1}{(1 + q^2)} \rho R^3",
          note=lambda: "S line holds with +1/(1+q^2) sigma S^3")
def _():
    """Third components of the RR and SS relations."""
    yield from _rs_third()


@identity("M.5.21.printed", "exploratory", "5.21", "", summary="5.21 S line with -1/(1+q^2) (fails)")
def _():
    yield from _rs_third(-ONE)


@identity("M.5.22", "mink-phase", "5.22", r"R^3 = q(1 + q^2) \rho^{-1} (R^- R^+ - R^+ R^-)",
          clearer=("rho", "sigma"))
def _():
    """R3 and S3 through R+- and S+-, cleared by rho and sigma on the left."""
    rp, r3, rm = _v("R")
    sp, s3, sm = _v("S")
    k = q(1) * (ONE + q(2))
    yield "rho R3 = R3 rho", _rho() * r3, r3 * _rho()
    yield "sigma S3 = S3 sigma", _sigma() * s3, s3 * _sigma()
    yield "rho R3", _rho() * r3, (rm * rp - rp * rm).scale(k)
    yield "sigma S3", _sigma() * s3, (sm * sp - sp * sm).scale(k)


@identity("M.5.23", "mink-phase", "5.23", r"R^3 R^3 - q R^+ R^- - \frac{1}{q} R^- R^+ = \frac{1}{(q^4 - 1)^2} (U^2 - 1)")
def _():
    """R o R and S o S through U."""
    u = _u()
    rhs = (u * u - A().one()).scale(((q(4) - 1) ** 2).inverse())
    for stem in ("R", "S"):
        p, t3, m = _v(stem)
        yield stem, t3 * t3 - (p * m).scale(q(1)) - (m * p).scale(q(-1)), rhs


@identity("M.5.24", "mink-phase", "5.24", r"\frac{1}{q} R^- R^ + - q R^+ R^- = \frac{1}{(q^4 - 1)(q^2 + 1)^2} (\rho^2 - 1)")
def _():
    """The R+- (and S+-) product combination that depends on rho (sigma) only."""
    k = ((q(4) - 1) * (q(2) + 1) ** 2).inverse()
    for stem, g in (("R", _rho()), ("S", _sigma())):
        p, _, m = _v(stem)
        yield stem, (m * p).scale(q(-1)) - (p * m).scale(q(1)), (g * g - A().one()).scale(k)


def _rho_exchange(minus_power):
    rp, _, rm = _v("R")
    sp, _, sm = _v("S")
    rho, sigma = _rho(), _sigma()
    yield "rho R+", rho * rp, (rp * rho).scale(q(2))
    yield "rho R-", rho * rm, (rm * rho).scale(q(minus_power))
    yield "sigma S+", sigma * sp, (sp * sigma).scale(q(2))
    yield "sigma S-", sigma * sm, (sm * sigma).scale(q(-2))


@identity("M.5.25", "mink-phase", "5.24", r"\rho R^+ = q^2  R^+ \rho",
          note=lambda: "rho R- = q^-2 R- rho")
def _():
    """Exchange of rho with R+- and of sigma with S+-."""
    yield from _rho_exchange(-2)


@identity("M.5.25.printed", "exploratory", "5.24", "", summary="rho R- = q^2 R- rho as printed (fails)")
def _():
    yield from _rho_exchange(2)
