"""Tensor-level identities of both spaces."""

from __future__ import annotations

from ..coeff import ONE, ZERO, const, qpow
from ..tensor import (EUCLID, MINK, Tensor, braid_12, braid_23, compose, compose6, delta, einsum,
                      p1_table, p3_table, projector_from_rhat, rhat3_table, tensor_from_labels,
                      tensor_parts)
from .core import identity

q = qpow


def _e():
    return tensor_parts("Euclid3")


def _m():
    return tensor_parts("Mink4")


def _trace(p: Tensor):
    return sum((v for (a, b, c, d), v in p.entries.items() if (a, b) == (c, d)), ZERO)


def _projector_family(names, parts, ranks, one):
    ps = [parts[n] for n in names]
    yield "completeness", sum(ps[1:], ps[0]), one
    for n, p, r in zip(names, ps, ranks):
        yield f"{n}^2", compose(p, p), p
        yield f"tr {n}", _trace(p), const(r)
    for i, (n1, p1) in enumerate(zip(names, ps)):
        for n2, p2 in zip(names[i + 1:], ps[i + 1:]):
            yield f"{n1}*{n2}", compose(p1, p2), one.scale(ZERO)
            yield f"{n2}*{n1}", compose(p2, p1), one.scale(ZERO)


def _ybe(r: Tensor):
    a, b = braid_12(r), braid_23(r)
    return compose6(a, b, a), compose6(b, a, b)


# ---------------------------------------------------------------------------
# Euclid3

@identity("E.2.1", "euclid-tensor", "2.1", r"\hat{R} &=& P_5 -\frac{1}{q^4} P_3 + \frac{1}{q^6} P_1")
def _():
    """R-hat as a projector combination."""
    e = _e()
    yield "R = P5 - q^-4 P3 + q^-6 P1", e["rhat3"], e["P5"] - e["P3"].scale(q(-4)) + e["P1"].scale(q(-6))
    yield "R^-1 from reciprocal eigenvalues", compose(e["rhat3"], e["rhat3_inv"]), e["one3"]


@identity("E.2.2", "euclid-tensor", "2.2", r"1 &=& P_5 + P_3 + P_1")
def _():
    """Completeness, idempotence, orthogonality and ranks of P1, P3, P5."""
    e = _e()
    yield from _projector_family(("P5", "P3", "P1"), e, (5, 3, 1), e["one3"])


@identity("E.2.3", "euclid-tensor", "2.3", r"(\hat{R}-1) (\hat{R}+{1\over q^4}) (\hat{R}-{1\over q^6}) = 0")
def _():
    """Cubic characteristic equation of R-hat."""
    e = _e()
    r, one = e["rhat3"], e["one3"]
    lhs = compose(r - one, r + one.scale(q(-4)), r - one.scale(q(-6)))
    yield "(R-1)(R+q^-4)(R-q^-6)", lhs, one.scale(ZERO)


@identity("E.2.4", "euclid-tensor", "2.4", r"P_5 &=& {q^{10}\over (q^4+1)(q^6-1)}")
def _():
    """Projectors as polynomials in R-hat agree with the metric/epsilon construction."""
    e = _e()
    for name in ("P5", "P3", "P1"):
        yield name, projector_from_rhat(e["rhat3"], name), e[name]
        yield f"{name} from table R", projector_from_rhat(rhat3_table(), name), e[name]


@identity("E.2.11", "euclid-tensor", ("2.11", "2.12"), r"g_{33} = 1,\quad g_{+-} = -q")
def _():
    """Metric components and its inverse."""
    e = _e()
    g, gi = e["g"], e["g_inv"]
    yield "g_33", g["3", "3"], ONE
    yield "g_+-", g["+", "-"], -q(1)
    yield "g_-+", g["-", "+"], -q(-1)
    yield "nonzero count", len(g.entries) == 3, None
    yield "g^AB g_BC", einsum("AB,BC->AC", gi, g), delta(EUCLID)
    yield "g_AB g^BC", einsum("AB,BC->AC", g, gi).entries == delta(EUCLID).entries, None


@identity("E.2.15", "euclid-tensor", "2.15", r"P_1^{AB} {}_{CD} = {q^2\over1+q^2+q^4} g^{AB} g_{CD}")
def _():
    """Singlet projector through the metric."""
    e = _e()
    gg = einsum("AB,CD->ABCD", e["g_inv"], e["g"])
    yield "P1", e["P1"], gg.scale(q(2) / (ONE + q(2) + q(4)))


@identity("E.2.17", "euclid-tensor", ("2.16", "2.17"), r"\varepsilon_{33} {}^3 = 1-q^2")
def _():
    """Epsilon components and their extraction from the triplet projector."""
    e = _e()
    eps = e["eps3"]
    yield "eps_33^3", eps["3", "3", "3"], ONE - q(2)
    yield "eps_3+^+", eps["3", "+", "+"], -q(2)
    yield "eps_+-^3", eps["+", "-", "3"], q(1)
    yield "seven components", len(eps.entries) == 7, None
    # eps_{BC}^A P3^{CB}_{EF} = eps_{FE}^A: eps lives in the triplet
    lhs = einsum("BCA,CBEF->FEA", eps, e["P3"])
    yield "eps P3 = eps", lhs, eps
    # ... and annihilates the other two blocks
    yield "eps P5 = 0", einsum("BCA,CBEF->FEA", eps, e["P5"]), eps.scale(ZERO)
    yield "eps P1 = 0", einsum("BCA,CBEF->FEA", eps, e["P1"]), eps.scale(ZERO)


@identity("E.2.18", "euclid-tensor", "2.18", r"\varepsilon^{FAB} = g^{FE} g^{AD} \varepsilon_{ED} {}^B")
def _():
    """Index placement of epsilon through the metric."""
    e = _e()
    eps, g, gi = e["eps3"], e["g"], e["g_inv"]
    yield "eps_ABC", e["eps3_low"], einsum("CD,ABD->ABC", g, eps)
    yield "eps^FAB", e["eps3_up"], einsum("FE,AD,EDB->FAB", gi, gi, eps)
    # raising the last index of eps_ABC back gives eps_AB^C
    yield "round trip", einsum("ABD,CD->ABC", e["eps3_low"], gi), eps


@identity("E.2.20", "euclid-tensor", "2.20", r"P_3^{AB} {}_{CD} = {1\over1+q^4} \varepsilon^{FAB}\varepsilon_{FDC}")
def _():
    """Triplet projector through epsilon."""
    e = _e()
    ee = einsum("FAB,FDC->ABCD", e["eps3_up"], e["eps3_low"])
    yield "P3", e["P3"], ee.scale((ONE + q(4)).inverse())


@identity("E.2.21", "euclid-tensor", "2.21", r"P_5^{AB}{}_{CD}&=&\delta^A_C\delta^B_D")
def _():
    """Quintuplet projector in closed form equals its R-hat polynomial."""
    e = _e()
    gg = einsum("AB,CD->ABCD", e["g_inv"], e["g"])
    ee = einsum("FAB,FDC->ABCD", e["eps3_up"], e["eps3_low"])
    p5 = e["one3"] - gg.scale(q(2) / (ONE + q(2) + q(4))) - ee.scale((ONE + q(4)).inverse())
    yield "P5 closed form", p5, projector_from_rhat(e["rhat3"], "P5")


@identity("E.2.22", "euclid-tensor", "2.22", r"q^{-4}\varepsilon^{FAB}\varepsilon_{FDC}-q^{-4} (q^2-1) g^{AB} g_{CD}")
def _():
    """R-hat from metric and epsilon matches the block table."""
    e = _e()
    yield "formula vs table", e["rhat3"], rhat3_table()


@identity("E.2.25", "euclid-tensor", "2.25", r"g^{CB}\hat{R}^{AF}{}_{BD} g_{FE} &=& q^{-4}\hat{R}^{-1CA}{}_{DE}")
def _():
    """Raising and lowering R-hat turns it into its inverse."""
    e = _e()
    r, ri, g, gi = e["rhat3"], e["rhat3_inv"], e["g"], e["g_inv"]
    yield "g R g = q^-4 R^-1", einsum("CB,AFBD,FE->CADE", gi, r, g), ri.scale(q(-4))
    yield "g R^-1 g = q^4 R", einsum("AF,BEFC,ED->ABCD", gi, ri, g), r.scale(q(4))


@identity("E.YBE", "euclid-tensor", (), "", summary="braid Yang-Baxter equation for R-hat and its inverse")
def _():
    e = _e()
    for name in ("rhat3", "rhat3_inv"):
        lhs, rhs = _ybe(e[name])
        yield f"{name} R12 R23 R12 = R23 R12 R23", lhs, rhs


@identity("E.A1.1", "euclid-tensor", ("A1.1", "A1.2", "A1.3"), r"(1-q^{-2})(1-q^{-4})")
def _():
    """Block table of R-hat against the projector combination."""
    e = _e()
    t = rhat3_table()
    yield "table = P5 - q^-4 P3 + q^-6 P1", t, e["P5"] - e["P3"].scale(q(-4)) + e["P1"].scale(q(-6))
    yield "(3+,+3)", t["3", "+", "+", "3"], q(-2)
    yield "(-+,33)", t["-", "+", "3", "3"], q(-1) * (ONE - q(-4))
    # block diagonal: every entry keeps the charge of its index pair
    charge = {"+": 1, "3": 0, "-": -1}
    ok = all(sum(charge[EUCLID.labels[i]] for i in k[:2]) == sum(charge[EUCLID.labels[i]] for i in k[2:])
             for k in t.entries)
    yield "block diagonal", ok, None


@identity("E.A1.4", "euclid-tensor", "A1.4", r"q^{2} & -q & \;\;1")
def _():
    """Singlet block table; its normalization q^2/(1+q^2+q^4) is fixed by idempotence."""
    e = _e()
    t = p1_table()
    yield "table^2 = (1+q^2+q^4)/q^2 table", compose(t, t), t.scale((ONE + q(2) + q(4)) / q(2))
    yield "P1 table", t.scale(q(2) / (ONE + q(2) + q(4))), e["P1"]


@identity("E.A1.5", "euclid-tensor", ("A1.5", "A1.6"), r"q(q^2-1) & (q^2-1)^2 & -q(q^2-1)")
def _():
    """Triplet block tables, normalized by 1+q^4."""
    e = _e()
    yield "P3 table", p3_table().scale((ONE + q(4)).inverse()), e["P3"]
    yield "(+3,+3)", e["P3"]["+", "3", "+", "3"], q(4) / (ONE + q(4))


@identity("E.A1.7", "euclid-tensor", "A1.7", r"\hat{R}^{AB}{}_{CD} = \hat{R}^{CD}{}_{AB}")
def _():
    """Symmetry of R-hat and its form with P5 eliminated."""
    e = _e()
    r = e["rhat3"]
    yield "R^AB_CD = R^CD_AB", Tensor(EUCLID, r.slots, {(c, d, a, b): v for (a, b, c, d), v in r.entries.items()}), r
    yield "1 = P5 + P3 + P1", e["P5"] + e["P3"] + e["P1"], e["one3"]
    alt = e["one3"] - e["P3"].scale(ONE + q(-4)) + e["P1"].scale(q(-6) - ONE)
    yield "R = 1 - (1+q^-4) P3 + (q^-6-1) P1", alt, r


@identity("E.A1.8", "euclid-tensor", "A1.8", r"g^{AB} : \quad g^{+-} = - q")
def _():
    """Metric and inverse metric tables."""
    e = _e()
    printed = tensor_from_labels(EUCLID, ("u", "u"), {("+", "-"): -q(1), ("3", "3"): 1, ("-", "+"): -q(-1)})
    yield "g^AB", e["g_inv"], printed
    yield "g_AB", e["g"].entries == printed.entries, None


@identity("E.A1.9", "euclid-tensor", "A1.9", r"\varepsilon_{-3+} &=& + q^3")
def _():
    """All-lower epsilon components."""
    e = _e()
    printed = tensor_from_labels(EUCLID, ("l", "l", "l"), {
        ("+", "-", "3"): q(1), ("-", "+", "3"): -q(1), ("3", "3", "3"): ONE - q(2), ("+", "3", "-"): -q(-1),
        ("3", "+", "-"): q(1), ("-", "3", "+"): q(3), ("3", "-", "+"): -q(1)})
    yield "eps_ABC", e["eps3_low"], printed


@identity("E.A1.10", "euclid-tensor", "A1.10", r"\varepsilon _D{}^{FE} \varepsilon_{EFR} = (1 + q^4) g_{RD}")
def _():
    """Epsilon contraction identities."""
    e = _e()
    g, gi, eps, up, low = e["g"], e["g_inv"], e["eps3"], e["eps3_up"], e["eps3_low"]
    yield "eps_RST lowered thrice", low, einsum("RA,SB,TC,ABC->RST", g, g, g, up)
    yield "eps_RST transposed metric", low, einsum("AR,BS,CT,ABC->RST", g, g, g, up)
    yield "eps_BA^C = eps_SBA g^SC", eps, einsum("SBA,SC->BAC", low, gi)
    yield "eps_RBA = eps_BA^C g_CR", low, einsum("BAC,CR->RBA", eps, g)
    yield "eps^ABF eps_DCF = eps^FAB eps_FDC", einsum("ABF,DCF->ABCD", up, low), einsum("FAB,FDC->ABCD", up, low)
    # eps_D^{FE}: middle raised, i.e. g^{FX} g^{EY} eps_{DXY}
    eps_d_up = einsum("FX,EY,DXY->DFE", gi, gi, low)
    yield "eps_D^FE eps_EFR", einsum("DFE,EFR->RD", eps_d_up, low), g.scale(ONE + q(4))
    yield "eps^BCF eps_CBA", einsum("BCF,CBA->FA", up, low), delta(EUCLID).scale(ONE + q(4))
    lhs = einsum("TSE,DCE->TSDC", low, eps)
    rhs = einsum("CT,DS->TSDC", g, g) - einsum("ST,CD->TSDC", g, g)
    rhs = rhs.scale(q(2)) + einsum("CB,RT,BRE,SDE->TSDC", g, g, up, low)
    yield "eps eps expansion", lhs, rhs
    yield "g^BA eps_ABC", einsum("BA,ABC->C", gi, low), Tensor(EUCLID, ("l",), {})
    yield "g^CB eps_ABC", einsum("CB,ABC->A", gi, low), Tensor(EUCLID, ("l",), {})
    conj = eps.conjugate()
    yield "bar eps = eps_DEA g^EB g^DC", conj.entries == einsum("DEA,EB,DC->BCA", low, gi, gi).entries, None
    yield "bar eps = eps^CBK g_KA", conj.entries == einsum("CBK,KA->BCA", up, g).entries, None
    yield "bar g_AB = g^AB", g.conjugate().entries == gi.entries, None


@identity("E.A1.raise", "euclid-tensor", (), "",
          summary="raising and lowering all indices of R-hat")
def _():
    e = _e()
    r, ri, g, gi = e["rhat3"], e["rhat3_inv"], e["g"], e["g_inv"]
    yield "g R g = q^-4 R^-1", einsum("CB,AFBD,FE->CADE", gi, r, g), ri.scale(q(-4))
    yield "g R^-1 g = q^4 R", einsum("AF,BEFC,ED->ABCD", gi, ri, g), r.scale(q(4))
    yield "g g R g g = R", einsum("GC,ED,BADC,AF,BK->GEFK", gi, gi, r, g, g), r


# ---------------------------------------------------------------------------
# Mink4

_MINK_PROJ = ("PT", "PS", "Pplus", "Pminus")


@identity("M.4.2", "mink-tensor", ("4.2", "A2.4"), r"1 = P_T + P_S + P_+ + P_-")
def _():
    """Completeness, idempotence, orthogonality and ranks of PT, PS, P+, P-."""
    m = _m()
    yield from _projector_family(_MINK_PROJ, m, (1, 9, 3, 3), m["one4"])


@identity("M.4.3", "mink-tensor", ("4.3", "4.14", "A2.6", "A2.7"),
          r"\hat{R}_I &=& 1 - (1 + q^2) P_+ - (1 + \frac{1}{q^2}) P_-")
def _():
    """Two constructions of each Minkowski R-hat, and their inverses."""
    m = _m()
    yield "R_I", m["RI"], m["RI_alt"]
    yield "R_II", m["RII"], m["RII_alt"]
    yield "R_I R_I^-1", compose(m["RI"], m["RI_inv"]), m["one4"]
    yield "R_II R_II^-1", compose(m["RII"], m["RII_inv"]), m["one4"]


@identity("M.4.9", "mink-tensor", ("4.9", "4.10", "A2.10", "A2.11"), r"\eta_{00} = -1 , \eta_{33} = 1")
def _():
    """Minkowski metric components; eta^ab = eta_ab."""
    m = _m()
    eta, ei = m["eta"], m["eta_inv"]
    yield "eta_00", eta["0", "0"], -ONE
    yield "eta_33", eta["3", "3"], ONE
    yield "eta_+-", eta["+", "-"], -q(1)
    yield "eta_-+", eta["-", "+"], -q(-1)
    yield "eta^ab = eta_ab", eta.entries == ei.entries, None
    yield "eta^-1 eta", einsum("ab,bc->ac", ei, eta), delta(MINK)


@identity("M.4.11", "mink-tensor", ("4.11", "A2.3"), r"\frac{1}{(q + \frac{1}{q})^2} \eta^{ab} \eta_{cd}")
def _():
    """Trace projector through eta equals its block table."""
    m = _m()
    yield "PT", m["PT"], m["PT_table"]
    yield "(00,00)", m["PT"]["0", "0", "0", "0"], q(2) / (ONE + q(2)) ** 2


@identity("M.4.12", "mink-tensor", ("4.12", "A2.12"), r"\varepsilon^{ab}{}_{cd} = P_+{}^{ab}{}_{cd} -  P_-{}^{ab}{}_{cd}")
def _():
    """The four-dimensional epsilon squares to the antisymmetric projector."""
    m = _m()
    eps = m["eps4"]
    yield "eps = P+ - P-", eps, m["Pplus"] - m["Pminus"]
    yield "eps^2 = PA", compose(eps, eps), m["PA"]
    yield "eps PS = 0", compose(eps, m["PS"]), m["one4"].scale(ZERO)


@identity("M.4.13", "mink-tensor", ("4.13", "A2.5"), r"P_A = P_+ + P_-")
def _():
    """Antisymmetric projector."""
    m = _m()
    pa = m["PA"]
    yield "PA = P+ + P-", pa, m["Pplus"] + m["Pminus"]
    yield "PA^2", compose(pa, pa), pa
    yield "tr PA", _trace(pa), const(6)


@identity("M.4.22", "mink-tensor", ("4.22", "A2.15"), r"\eta^{ab}  \hat{R}_{II}^{cd}{}_{be} \eta_{cf} =q^{-2}")
def _():
    """Raising and lowering R_II turns it into its inverse."""
    m = _m()
    # the second metric contracts the second upper slot of R_II, leaving (a, c, e, f) free
    lhs = einsum("ab,cdbe,df->acef", m["eta_inv"], m["RII"], m["eta"])
    yield "eta R_II eta = q^-2 R_II^-1", lhs, m["RII_inv"].scale(q(-2))


@identity("M.A2.1", "mink-tensor", ("A2.1", "A2.2"), r"\frac{\varepsilon_{DC} {}^E g^{SB} g^{RA} \varepsilon_{RSE}}{(1+q^2)^2}")
def _():
    """Selfdual and antiselfdual block tables."""
    m = _m()
    pp, pm = m["Pplus"], m["Pminus"]
    n = (ONE + q(2)) ** 2
    yield "P+ (A0,C0)", pp["+", "0", "+", "0"], q(2) / n
    yield "P+ (0B,C0)", pp["0", "3", "3", "0"], -q(4) / n
    yield "P- (A0,0D)", pm["-", "0", "0", "-"], -q(4) / n
    yield "00 row vanishes", not any(k[:2] == (0, 0) for k in list(pp.entries) + list(pm.entries)), None
    yield "00 column vanishes", not any(k[2:] == (0, 0) for k in list(pp.entries) + list(pm.entries)), None
    yield "P+ P- = 0", compose(pp, pm), m["one4"].scale(ZERO)


@identity("M.A2.8", "mink-tensor", ("A2.8", "A2.9"), r"\hat{R_I}^{ab}{}_{cd}=\hat{R_I}^{cd}{}_{ab}")
def _():
    """Pair-swap symmetry of both Minkowski R-hat matrices.

    Literally it holds on the spatial block; with time indices involved it
    holds once both index pairs are lowered with eta (the mixed entries
    (A0,0A) and (0A,A0) differ otherwise, see the exploratory control).
    """
    m = _m()
    eta = m["eta"]
    for name in ("RI", "RII"):
        r = m[name]
        spatial = {k: v for k, v in r.entries.items() if 0 not in k}
        yield f"{name} spatial block", all(spatial.get((c, d, a, b)) == v for (a, b, c, d), v in spatial.items()), None
        lhs = einsum("sb,ta,abcd->stcd", eta, eta, r)
        rhs = einsum("ud,vc,uvst->stcd", eta, eta, r)
        yield f"{name} lowered pair swap", lhs, rhs


@identity("M.A2.8.literal", "exploratory", ("A2.8", "A2.9"), r"\hat{R}_{IIcd}^{ab}=\hat{R}_{IIab}^{cd}",
          summary="pair-swap symmetry read literally on all 16x16 entries (fails on mixed time blocks)")
def _():
    m = _m()
    for name in ("RI", "RII"):
        r = m[name]
        yield name, Tensor(MINK, r.slots, {(c, d, a, b): v for (a, b, c, d), v in r.entries.items()}), r


@identity("M.A2.13", "mink-tensor", "A2.13", r"\eta_{sb}\eta_{ta}P^{ab}{}_{cd}=\eta_{ud}\eta_{vc}P^{uv}{}_{st}")
def _():
    """Lowering symmetry of every projector."""
    m = _m()
    eta = m["eta"]
    for name in _MINK_PROJ + ("PA",):
        p = m[name]
        lhs = einsum("sb,ta,abcd->stcd", eta, eta, p)
        rhs = einsum("ud,vc,uvst->stcd", eta, eta, p)
        yield name, lhs, rhs


@identity("M.A2.14", "mink-tensor", "A2.14", r"\frac{2(1+q^2+q^4)}{(1+q^2)^2}\eta_{im}")
def _():
    """Partial trace of the antisymmetric projector."""
    m = _m()
    eta, ei = m["eta"], m["eta_inv"]
    lhs = einsum("ij,jkmp,kl,pl->im", eta, m["PA"], eta, ei)
    yield "eta PA eta eta^-1", lhs, eta.scale(const(2) * (ONE + q(2) + q(4)) / (ONE + q(2)) ** 2)


@identity("M.YBE", "mink-tensor", (), "", summary="braid Yang-Baxter equation for R_I")
def _():
    m = _m()
    for name in ("RI", "RI_inv"):
        lhs, rhs = _ybe(m[name])
        yield f"{name} braid relation", lhs, rhs


@identity("M.YBE.II", "exploratory", (), "", summary="braid Yang-Baxter equation for R_II")
def _():
    m = _m()
    lhs, rhs = _ybe(m["RII"])
    yield "RII braid relation", lhs, rhs
