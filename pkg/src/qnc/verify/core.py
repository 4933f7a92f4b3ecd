"""Identity registry, runner and reports."""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from ..coeff import QScalar
from ..ncalg import NCPoly, clear_and_equal, format_poly
from ..tensor import Space, Tensor

SUITES = ("euclid-tensor", "euclid-calculus", "euclid-phase", "mink-tensor", "mink-calculus", "mink-phase")
EXTRA_SUITES = ("exploratory", "controls")

Side = Union[NCPoly, Tensor, QScalar, bool, None]
Component = tuple  # (label, lhs, rhs)


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class Identity:
    """One catalogued relation.

    ``components`` yields ``(label, lhs, rhs)`` triples.  Both sides are
    NCPolys (compared with clear_and_equal), tensors or scalars (compared
    exactly).  A component whose rhs is ``None`` passes iff lhs is truthy.
    ``clearer`` lists the left multipliers already built into the
    components, for auditing against the printed form.
    """

    id: str
    suite: str
    equations: tuple[str, ...]
    anchor: str
    components: Callable[[], Iterable[Component]] = field(repr=False, compare=False)
    clearer: tuple[str, ...] = ()
    summary: str = ""
    note: Optional[Callable[[], str]] = field(default=None, repr=False, compare=False)

    @property
    def space(self) -> Space:
        return Space.EUCLID3 if self.id.startswith("E.") else Space.MINK4

    @property
    def paper_ref(self) -> str:
        return ", ".join(f"({e})" for e in self.equations) if self.equations else "(unnumbered)"


@dataclass
class IdentityResult:
    id: str
    paper_ref: str
    status: str
    ms: float
    residue: Optional[str] = None
    component: Optional[str] = None
    note: Optional[str] = None
    components_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"id": self.id, "paper_ref": self.paper_ref, "status": self.status, "ms": round(self.ms, 3)}
        if self.residue is not None:
            out["residue"] = self.residue
        if self.component is not None:
            out["component"] = self.component
        if self.note is not None:
            out["note"] = self.note
        out["components"] = self.components_checked
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityResult":
        return cls(id=d["id"], paper_ref=d["paper_ref"], status=d["status"], ms=d["ms"],
                   residue=d.get("residue"), component=d.get("component"), note=d.get("note"),
                   components_checked=d.get("components", 0))


@dataclass
class SuiteReport:
    suite: str
    identities: list[IdentityResult]

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.identities)

    @property
    def failed(self) -> int:
        return len(self.identities) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"suite": self.suite, "identities": [r.to_dict() for r in self.identities],
                "pass": self.passed, "fail": self.failed}

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteReport":
        rep = cls(d["suite"], [IdentityResult.from_dict(x) for x in d["identities"]])
        if rep.passed != d["pass"] or rep.failed != d["fail"]:
            raise ValueError("report counts do not match its entries")
        return rep

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for r in self.identities:
            line = f"  {r.status.upper():4s} {r.id:14s} {r.paper_ref:22s} {r.ms:9.1f} ms"
            if r.note:
                line += f"  [{r.note}]"
            lines.append(line)
            if r.residue is not None:
                lines.append(f"       component {r.component}: residue {r.residue}")
        lines.append(f"{self.passed} pass, {self.failed} fail")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# registry

_REGISTRY: dict[str, Identity] = {}


def identity(id: str, suite: str, equations: Union[str, Sequence[str]], anchor: str, *,
             clearer: Sequence[str] = (), summary: str = "", note: Optional[Callable[[], str]] = None):
    """Decorator registering a component generator as an :class:`Identity`."""
    eqs = (equations,) if isinstance(equations, str) else tuple(equations)

    def wrap(fn: Callable[[], Iterable[Component]]):
        if id in _REGISTRY:
            raise CatalogError(f"duplicate identity {id}")
        if suite not in SUITES + EXTRA_SUITES:
            raise CatalogError(f"unknown suite {suite}")
        _REGISTRY[id] = Identity(id, suite, eqs, anchor, fn, tuple(clearer), summary or (fn.__doc__ or "").strip(),
                                 note)
        return fn

    return wrap


def _load() -> dict[str, Identity]:
    if not _REGISTRY:
        from . import euclid, mink, tensors  # noqa: F401  (registration side effects)
    return _REGISTRY


def catalog() -> list[Identity]:
    return list(_load().values())


def get_identity(id: str) -> Identity:
    try:
        return _load()[id]
    except KeyError:
        raise CatalogError(f"unknown identity {id!r}") from None


def list_identities(space: "Space | str | None" = None, id: Optional[str] = None,
                    suite: Optional[str] = None, pattern: Optional[str] = None) -> list[Identity]:
    """Catalog listing in registration order, optionally filtered."""
    out = catalog()
    if space is not None:
        sp = Space.parse(space)
        out = [i for i in out if i.space is sp]
    if id is not None:
        out = [i for i in out if i.id == id]
    if suite is not None:
        out = [i for i in out if i.suite == suite]
    if pattern is not None:
        rx = re.compile(pattern)
        out = [i for i in out if rx.search(i.id) or rx.search(i.summary)]
    return out


# ---------------------------------------------------------------------------
# checking

def _compare(lhs: Side, rhs: Side) -> Optional[str]:
    """None when the sides agree, else a printable residue."""
    if rhs is None:
        return None if lhs else "False"
    if isinstance(lhs, NCPoly) or isinstance(rhs, NCPoly):
        if not isinstance(lhs, NCPoly):
            lhs = rhs.alg.scalar(lhs)
        if not isinstance(rhs, NCPoly):
            rhs = lhs.alg.scalar(rhs)
        res = clear_and_equal(lhs, rhs)
        return None if res.equal else format_poly(res.residue, max_terms=6)
    if isinstance(lhs, Tensor):
        diff = lhs - rhs
        if diff.is_zero():
            return None
        items = list(diff.nonzero_labels().items())
        shown = ", ".join(f"[{''.join(k)}]={v}" for k, v in items[:4])
        return shown + (f", ... ({len(items) - 4} more)" if len(items) > 4 else "")
    diff = QScalar.of(lhs) - QScalar.of(rhs)
    return None if diff.is_zero() else str(diff)


def run_identity(ident: Identity, fail_fast_components: bool = True) -> IdentityResult:
    t0 = time.perf_counter()
    residue = component = None
    n = 0
    for label, lhs, rhs in ident.components():
        n += 1
        r = _compare(lhs, rhs)
        if r is not None:
            residue, component = r, str(label)
            if fail_fast_components:
                break
    note = ident.note() if ident.note else None
    ms = (time.perf_counter() - t0) * 1000
    return IdentityResult(ident.id, ident.paper_ref, "fail" if residue is not None else "pass", ms,
                          residue, component, note, n)


def check_identity(id: str) -> IdentityResult:
    """Run a single catalogued identity by id."""
    return run_identity(get_identity(id))


def suite_members(suite: str) -> list[Identity]:
    if suite == "all":
        return [i for i in catalog() if i.suite in SUITES]
    if suite not in SUITES + EXTRA_SUITES:
        raise CatalogError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',) + EXTRA_SUITES)}")
    return [i for i in catalog() if i.suite == suite]


def iter_suite(suite: str) -> Iterator[IdentityResult]:
    for ident in suite_members(suite):
        yield run_identity(ident)


def run_suite(suite: str, fail_fast: bool = False) -> SuiteReport:
    """Run every identity of ``suite`` (or ``all``) in catalog order."""
    results = []
    for res in iter_suite(suite):
        results.append(res)
        if fail_fast and not res.passed:
            break
    return SuiteReport(suite, results)
