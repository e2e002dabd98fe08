"""Tree-coloring data model: parameters, colorings, verification, certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .errors import InputFormatError, PreconditionError
from .graph import UNBOUNDED, Graph


def _check_bound(value: Any, name: str) -> int | float:
    if value is UNBOUNDED:
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise PreconditionError(f"{name} must be a nonnegative int or UNBOUNDED")
    if value < 0:
        raise PreconditionError(f"{name} must be a nonnegative int or UNBOUNDED")
    return value


@dataclass(frozen=True)
class Params:
    """Problem parameters: t color classes, degree cap k, diameter cap d.

    Each class must induce a forest whose maximum degree is at most k and
    whose components each have diameter at most d.  Either cap may be
    UNBOUNDED, which disables it.
    """

    t: int
    k: int | float = UNBOUNDED
    d: int | float = UNBOUNDED

    def __post_init__(self) -> None:
        if isinstance(self.t, bool) or not isinstance(self.t, int) or self.t < 1:
            raise PreconditionError("t must be an int >= 1")
        _check_bound(self.k, "k")
        _check_bound(self.d, "d")


@dataclass(frozen=True)
class TreeColoring:
    """An assignment of colors 1..t to vertices 0..n-1 (colors[v] = color of v)."""

    colors: tuple[int, ...]
    t: int

    def __post_init__(self) -> None:
        if isinstance(self.t, bool) or not isinstance(self.t, int) or self.t < 1:
            raise InputFormatError("t must be an int >= 1")
        for v, c in enumerate(self.colors):
            if isinstance(c, bool) or not isinstance(c, int) or not 1 <= c <= self.t:
                raise InputFormatError(
                    f"vertex {v} has color {c!r}, outside 1..{self.t}"
                )

    @property
    def n(self) -> int:
        return len(self.colors)

    def class_sizes(self) -> list[int]:
        """Sizes of classes 1..t, indexed 0..t-1."""
        sizes = [0] * self.t
        for c in self.colors:
            sizes[c - 1] += 1
        return sizes

    def color_class(self, c: int) -> list[int]:
        return [v for v, col in enumerate(self.colors) if col == c]


@dataclass(frozen=True)
class ClassCheck:
    """Measured facts about one color class."""

    size: int
    is_forest: bool
    max_degree: int
    diameter: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verify: overall verdict plus per-class measurements."""

    verdict: bool
    equitable: bool
    classes: tuple[ClassCheck, ...]
    first_violation: str = ""


def _class_checks(g: Graph, members: list[int]) -> ClassCheck:
    mset = set(members)
    inside = {v: g.adjacency[v] & mset for v in members}
    edge_count = sum(len(s) for s in inside.values()) // 2
    maxdeg = max((len(s) for s in inside.values()), default=0)

    seen: set[int] = set()
    components = 0
    diameter = 0
    forest = True
    for s in members:
        if s in seen:
            continue
        components += 1
        comp = [s]
        seen.add(s)
        for u in comp:
            for v in inside[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
        if len(comp) > 1:
            comp_edges = sum(len(inside[u]) for u in comp) // 2
            if comp_edges != len(comp) - 1:
                forest = False
            for root in comp:
                dist = {root: 0}
                queue = [root]
                ecc = 0
                for u in queue:
                    du = dist[u] + 1
                    for v in inside[u]:
                        if v not in dist:
                            dist[v] = du
                            queue.append(v)
                            if du > ecc:
                                ecc = du
                if ecc > diameter:
                    diameter = ecc
    if edge_count != len(members) - components:
        forest = False
    return ClassCheck(len(members), forest, maxdeg, diameter)


def verify(g: Graph, coloring: TreeColoring, params: Params) -> VerificationReport:
    """Check a coloring against (t, k, d) and report the first defect found.

    Raises InputFormatError when the coloring does not even match the graph
    or the parameter block (wrong length, wrong t).  Semantic failures are
    reported in the returned VerificationReport, not raised.
    """
    if coloring.t != params.t:
        raise InputFormatError(
            f"coloring declares t={coloring.t} but parameters say t={params.t}"
        )
    if coloring.n != g.n:
        raise InputFormatError(
            f"coloring covers {coloring.n} vertices but the graph has {g.n}"
        )
    t = params.t
    classes: list[list[int]] = [[] for _ in range(t)]
    for v, c in enumerate(coloring.colors):
        classes[c - 1].append(v)

    lo = g.n // t
    hi = math.ceil(g.n / t)
    first = ""
    equitable = True
    for c, members in enumerate(classes, start=1):
        if not lo <= len(members) <= hi:
            equitable = False
            if not first:
                first = (
                    f"class {c} has size {len(members)}, "
                    f"outside the equitable range [{lo}, {hi}]"
                )

    checks: list[ClassCheck] = []
    verdict = equitable
    for c, members in enumerate(classes, start=1):
        check = _class_checks(g, members)
        checks.append(check)
        if not check.is_forest:
            verdict = False
            if not first:
                first = f"class {c} contains a cycle"
        elif check.max_degree > params.k:
            verdict = False
            if not first:
                first = (
                    f"class {c} has induced degree {check.max_degree}, "
                    f"above the cap {params.k}"
                )
        elif check.diameter > params.d:
            verdict = False
            if not first:
                first = (
                    f"class {c} has a component of diameter {check.diameter}, "
                    f"above the cap {params.d}"
                )
    return VerificationReport(verdict, equitable, tuple(checks), first)


# ---- certificates -----------------------------------------------------------


def certificate_from_coloring(coloring: TreeColoring, params: Params) -> dict[str, Any]:
    """JSON-ready certificate.  UNBOUNDED caps serialize as null."""
    return {
        "n_vertices": coloring.n,
        "t": params.t,
        "k": None if params.k is UNBOUNDED else params.k,
        "d": None if params.d is UNBOUNDED else params.d,
        "colors": list(coloring.colors),
    }


def coloring_from_certificate(data: Mapping[str, Any]) -> tuple[Params, TreeColoring]:
    """Inverse of certificate_from_coloring, with full validation."""
    if not isinstance(data, Mapping):
        raise InputFormatError("certificate must be a JSON object")
    for key in ("n_vertices", "t", "k", "d", "colors"):
        if key not in data:
            raise InputFormatError(f"certificate is missing the '{key}' field")
    n = data["n_vertices"]
    t = data["t"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputFormatError("'n_vertices' must be a nonnegative int")
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InputFormatError("'t' must be an int >= 1")

    def bound(key: str) -> int | float:
        raw = data[key]
        if raw is None:
            return UNBOUNDED
        if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
            raise InputFormatError(f"'{key}' must be a nonnegative int or null")
        return raw

    colors = data["colors"]
    if not isinstance(colors, Sequence) or isinstance(colors, (str, bytes)):
        raise InputFormatError("'colors' must be a list of ints")
    if len(colors) != n:
        raise InputFormatError(
            f"'colors' has {len(colors)} entries but 'n_vertices' is {n}"
        )
    try:
        params = Params(t, bound("k"), bound("d"))
    except PreconditionError as exc:
        raise InputFormatError(str(exc)) from exc
    return params, TreeColoring(tuple(colors), t)
