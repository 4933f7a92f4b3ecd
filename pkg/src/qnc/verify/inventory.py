"""Cross-check of the identity catalog against the bundled equation inventory."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .core import SUITES, catalog

# equation number -> why it is not an identity
OUT_OF_SCOPE = {
    "2.5": "coaction of the quantum group on vectors; no realization in the X-d algebra",
    "2.6": "coaction of the quantum group on vectors; no realization in the X-d algebra",
    "2.7": "covariance of R-hat polynomials under the coaction",
    "4.1": "index labelling of four-vectors",
}


@lru_cache(maxsize=None)
def equations() -> tuple[dict, ...]:
    """Records ``{number, chapter, latex}`` of the bundled inventory."""
    text = resources.files("qnc.data").joinpath("equations.json").read_text(encoding="utf-8")
    return tuple(json.loads(text))


def equation(number: str) -> dict:
    for rec in equations():
        if rec["number"] == number:
            return rec
    raise KeyError(number)


def _squash(s: str) -> str:
    return " ".join(s.split())


@dataclass
class Coverage:
    mapped: dict = field(default_factory=dict)  # number -> [identity ids]
    out_of_scope: dict = field(default_factory=dict)
    missing: list = field(default_factory=list)
    split: dict = field(default_factory=dict)  # number -> suites, when more than one
    unknown: list = field(default_factory=list)  # numbers cited by identities but absent from the inventory
    bad_anchors: list = field(default_factory=list)  # identity ids whose anchor is not in their equations

    @property
    def ok(self) -> bool:
        return not (self.missing or self.split or self.unknown or self.bad_anchors)


def anchor_found(ident) -> bool:
    """True when the identity's anchor occurs in the LaTeX of one of its equations."""
    if not ident.anchor:
        return True
    needle = _squash(ident.anchor)
    numbers = set(ident.equations)
    return any(needle in rec["latex"] for rec in equations() if rec["number"] in numbers)


def coverage() -> Coverage:
    """Map every inventory number to catalogued identities of the main suites."""
    known = {rec["number"] for rec in equations()}
    cov = Coverage()
    suites: dict = {}
    for ident in catalog():
        if ident.suite not in SUITES:
            continue
        for n in ident.equations:
            if n not in known:
                cov.unknown.append(n)
                continue
            cov.mapped.setdefault(n, []).append(ident.id)
            suites.setdefault(n, set()).add(ident.suite)
        if not anchor_found(ident):
            cov.bad_anchors.append(ident.id)
    for rec in equations():
        n = rec["number"]
        if n in OUT_OF_SCOPE:
            cov.out_of_scope[n] = OUT_OF_SCOPE[n]
            if n in cov.mapped:
                cov.split[n] = sorted(suites[n]) + ["out-of-scope"]
        elif n not in cov.mapped:
            cov.missing.append(n)
    for n, s in suites.items():
        if len(s) > 1:
            cov.split[n] = sorted(s)
    return cov
