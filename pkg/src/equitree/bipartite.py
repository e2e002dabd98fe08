"""Closed-form colorings and exact feasibility for balanced complete bipartite graphs.

Vertex convention for K_{n,n}: side X occupies ids 0..n-1, side Y occupies
ids n..2n-1.  For q color classes write a = floor(2n/q) and r = 2n - a*q;
an equitable coloring then has exactly r classes of size a+1 and q-r of
size a.

Two parameter variants are decided exactly.  Variant "11" (degree cap 1,
diameter cap 1) forces every class to be a one-sided set or a single edge.
Variant "inf2" (no degree cap, diameter cap 2) forces every class to induce
a star, which in K_{n,n} means one-sided sets or one-plus-many mixed sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .coloring import Params, TreeColoring, verify
from .errors import InfeasibleVectorError, PreconditionError
from .graph import UNBOUNDED, complete_bipartite


@lru_cache(maxsize=4)
def _knn(n: int):
    return complete_bipartite(n)


def _require_instance(n: int, q: int) -> None:
    if n < 1:
        raise PreconditionError("side size n must be >= 1")
    if q < 1:
        raise PreconditionError("class count q must be >= 1")


# ---- class-count vectors ----------------------------------------------------


@dataclass(frozen=True)
class ClassCountVector:
    """Counts of the eight class shapes of an equitable (q, inf, 2)-coloring.

    Shapes are keyed by bulk side and size: x1 counts classes of a+1
    X-vertices, x2 of a X-vertices, x1p of a X-vertices plus one Y-vertex,
    x2p of a-1 X-vertices plus one Y-vertex.  The y-fields mirror these
    with sides swapped.  Mixed classes induce stars centered on the lone
    opposite-side vertex.
    """

    a: int
    r: int
    x1: int = 0
    x2: int = 0
    x1p: int = 0
    x2p: int = 0
    y1: int = 0
    y2: int = 0
    y1p: int = 0
    y2p: int = 0

    def counts(self) -> tuple[int, ...]:
        return (self.x1, self.x2, self.x1p, self.x2p,
                self.y1, self.y2, self.y1p, self.y2p)


def make_class_counts(n: int, q: int, *, x1: int = 0, x2: int = 0,
                      x1p: int = 0, x2p: int = 0, y1: int = 0, y2: int = 0,
                      y1p: int = 0, y2p: int = 0) -> ClassCountVector:
    """Validate the counting invariants for (n, q) and build the vector.

    Raises InfeasibleVectorError naming the first violated invariant:
    nonnegativity, total class count q, or either side-consumption
    equation.  When a = 0 the shapes that would need a-1 bulk vertices
    must be absent.
    """
    _require_instance(n, q)
    a = (2 * n) // q
    r = 2 * n - a * q
    vec = ClassCountVector(a, r, x1, x2, x1p, x2p, y1, y2, y1p, y2p)
    fields = dict(zip(("x1", "x2", "x1p", "x2p", "y1", "y2", "y1p", "y2p"),
                      vec.counts()))
    for name, value in fields.items():
        if value < 0:
            raise InfeasibleVectorError(f"count {name} is negative ({value})")
    if sum(fields.values()) != q:
        raise InfeasibleVectorError(
            f"counts sum to {sum(fields.values())}, expected q={q}"
        )
    if a == 0 and (x2p or y2p):
        raise InfeasibleVectorError(
            "shapes with a-1 bulk vertices are impossible when a=0"
        )
    eq1 = (a + 1) * x1 + a * x2 + a * x1p + (a - 1) * x2p + y1p + y2p
    if eq1 != n:
        raise InfeasibleVectorError(
            f"X-side consumption is {eq1}, expected n={n}"
        )
    eq2 = (a + 1) * y1 + a * y2 + a * y1p + (a - 1) * y2p + x1p + x2p
    if eq2 != n:
        raise InfeasibleVectorError(
            f"Y-side consumption is {eq2}, expected n={n}"
        )
    return vec


def realize_class_counts(n: int, q: int, ccv: ClassCountVector) -> TreeColoring:
    """Materialize a class-count vector as a concrete coloring of K_{n,n}.

    Vertices are consumed left to right on each side, shapes in field
    order, colors assigned 1..q in that order.
    """
    vec = make_class_counts(n, q, x1=ccv.x1, x2=ccv.x2, x1p=ccv.x1p,
                            x2p=ccv.x2p, y1=ccv.y1, y2=ccv.y2,
                            y1p=ccv.y1p, y2p=ccv.y2p)
    a = vec.a
    colors = [0] * (2 * n)
    px, py = 0, n
    color = 0
    # (count, taken from X, taken from Y) in declaration order.
    shapes = (
        (vec.x1, a + 1, 0),
        (vec.x2, a, 0),
        (vec.x1p, a, 1),
        (vec.x2p, a - 1, 1),
        (vec.y1, 0, a + 1),
        (vec.y2, 0, a),
        (vec.y1p, 1, a),
        (vec.y2p, 1, a - 1),
    )
    for count, nx, ny in shapes:
        for _ in range(count):
            color += 1
            for _ in range(nx):
                colors[px] = color
                px += 1
            for _ in range(ny):
                colors[py] = color
                py += 1
    while color < q:  # trailing empty classes exist only when a = 0
        color += 1
    coloring = TreeColoring(tuple(colors), q)
    if __debug__:
        report = verify(_knn(n), coloring, Params(q, UNBOUNDED, 2))
        assert report.verdict, report.first_violation
    return coloring


# ---- elementary constructions ----------------------------------------------


def even_t_coloring(n: int, t: int) -> TreeColoring:
    """Split each side into t/2 nearly equal one-sided classes.

    Valid for every degree and diameter cap, including (0, 0), because
    every class is an independent set.  Both sides use the same size
    profile, so the global multiset of sizes stays equitable.
    """
    _require_instance(n, t)
    if t % 2:
        raise PreconditionError("even_t_coloring needs an even class count")
    h = t // 2
    big = n % h
    base = n // h
    colors = [0] * (2 * n)
    for offset, first_color in ((0, 0), (n, h)):
        v = offset
        for j in range(h):
            size = base + 1 if j < big else base
            for _ in range(size):
                colors[v] = first_color + j + 1
                v += 1
    coloring = TreeColoring(tuple(colors), t)
    if __debug__:
        report = verify(_knn(n), coloring, Params(t, 0, 0))
        assert report.verdict, report.first_violation
    return coloring


def odd_q_11_coloring(n: int, q: int) -> TreeColoring:
    """Disjoint-edge construction for odd q at or above 2*floor((n+1)/3)+1.

    Case q < n: classes are 3q-2n disjoint edges (X_i with Y_i) plus
    one-sided triples of the leftovers.  Case n <= q < 2n: 2n-q disjoint
    edges plus singletons.  Case q >= 2n: singletons, with empty classes
    past 2n.  Every class is a single edge or an independent set, so the
    result is valid for degree cap 1 and diameter cap 1.
    """
    _require_instance(n, q)
    bound = 2 * ((n + 1) // 3) + 1
    if q % 2 == 0:
        raise PreconditionError("odd_q_11_coloring needs odd q")
    if q < bound:
        raise PreconditionError(
            f"odd_q_11_coloring needs q >= 2*floor((n+1)/3)+1 = {bound}"
        )
    colors = [0] * (2 * n)
    if q < n:
        edges = 3 * q - 2 * n
        for i in range(edges):
            colors[i] = colors[n + i] = i + 1
        c = edges
        for start in (edges, n + edges):
            for j in range(start, start + (n - edges), 3):
                c += 1
                colors[j] = colors[j + 1] = colors[j + 2] = c
    elif q < 2 * n:
        edges = 2 * n - q
        for i in range(edges):
            colors[i] = colors[n + i] = i + 1
        c = edges
        for v in list(range(edges, n)) + list(range(n + edges, 2 * n)):
            c += 1
            colors[v] = c
    else:
        for v in range(2 * n):
            colors[v] = v + 1
    coloring = TreeColoring(tuple(colors), q)
    if __debug__:
        report = verify(_knn(n), coloring, Params(q, 1, 1))
        assert report.verdict, report.first_violation
    return coloring


# ---- the one-sided class-size equation --------------------------------------


@dataclass(frozen=True)
class SolutionPair:
    """Nonnegative solution of a*x + (a+1)*y = n: x small and y large classes."""

    x: int
    y: int

    @property
    def z(self) -> int:
        return self.x + self.y


def solve_linear(a: int, n: int) -> list[SolutionPair]:
    """All nonnegative integer solutions of a*x + (a+1)*y = n, ascending in x."""
    if a < 1:
        raise PreconditionError("solve_linear needs a >= 1")
    if n < 0:
        raise PreconditionError("solve_linear needs n >= 0")
    out = []
    for y in range(n // (a + 1), -1, -1):
        rem = n - (a + 1) * y
        if rem % a == 0:
            out.append(SolutionPair(rem // a, y))
    return out


def _pair_modulus(n: int, s: SolutionPair) -> int:
    """The unique a with a*s.x + (a+1)*s.y = n, or an error if none."""
    if s.x < 0 or s.y < 0 or s.z == 0:
        raise PreconditionError(f"({s.x}, {s.y}) is not a usable solution pair")
    num = n - s.y
    if num <= 0 or num % s.z:
        raise PreconditionError(
            f"({s.x}, {s.y}) solves a*x + (a+1)*y = {n} for no integer a >= 1"
        )
    return num // s.z


def two_solution_coloring(n: int, k, d, s1: SolutionPair,
                          s2: SolutionPair) -> TreeColoring:
    """One-sided classes sized per s1 on side X and per s2 on side Y.

    Both pairs must solve the class-size equation for the same a.  All
    classes are independent sets, so the coloring is valid for any caps;
    the requested (k, d) is what the debug check runs against.
    """
    _require_instance(n, 1)
    a1 = _pair_modulus(n, s1)
    a2 = _pair_modulus(n, s2)
    if a1 != a2:
        raise PreconditionError(
            f"pairs solve the equation for different moduli ({a1} vs {a2})"
        )
    a = a1
    t = s1.z + s2.z
    colors = [0] * (2 * n)
    color = 0
    for offset, s in ((0, s1), (n, s2)):
        v = offset
        for size, count in ((a, s.x), (a + 1, s.y)):
            for _ in range(count):
                color += 1
                for _ in range(size):
                    colors[v] = color
                    v += 1
    coloring = TreeColoring(tuple(colors), t)
    if __debug__:
        report = verify(_knn(n), coloring, Params(t, k, d))
        assert report.verdict, report.first_violation
    return coloring


# ---- closed-form class counts for odd q ------------------------------------


def odd_q_inf2_counts(n: int, q: int) -> ClassCountVector:
    """Case-split class counts for odd q with 2*floor((t+1)/2) <= q < n.

    Here t = floor((isqrt(8n+9)-3)/2).  The three cases select on how q
    compares with 2r+1 and a+r-1; since q is odd, a and r share parity
    and the two gap values 2r+2 and a+r are even, so the split is
    exhaustive.  Raises InfeasibleVectorError when a case formula goes
    negative, which happens for some (n, q) near the lower bound; callers
    fall back to the exact feasibility scan.
    """
    _require_instance(n, q)
    t = (isqrt(8 * n + 9) - 3) // 2
    low = 2 * ((t + 1) // 2)
    if q % 2 == 0:
        raise PreconditionError("odd_q_inf2_counts needs odd q")
    if not low <= q < n:
        raise PreconditionError(
            f"odd_q_inf2_counts needs {low} <= q < {n}"
        )
    a = (2 * n) // q
    r = 2 * n - a * q

    def half(value: int, label: str) -> int:
        quotient, remainder = divmod(value, 2)
        if remainder:
            raise InfeasibleVectorError(f"{label} = {value} is odd")
        return quotient

    if q <= 2 * r + 1:
        return make_class_counts(
            n, q,
            x1=half(q - 1, "2*x1"),
            y2=half(2 * q - a - r, "2*y2"),
            y1p=half(2 * r + 1 - q, "2*y1p"),
            y2p=half(a - r, "2*y2p"),
        )
    if q <= a + r - 1:
        return make_class_counts(
            n, q,
            x2p=half(q + 1, "2*x2p"),
            y1=half(a + r - 1 - q, "2*y1"),
            y2=half(q - 2 * r - 1, "2*y2"),
            y1p=half(q + r - a + 1, "2*y1p"),
        )
    return make_class_counts(
        n, q,
        x2=half(q - 1, "2*x2"),
        y2=half(q - a - r + 1, "2*y2"),
        y1p=r,
        y2p=half(a - r, "2*y2p"),
    )


# ---- bounds and exact feasibility ------------------------------------------


def va11_upper(n: int) -> int:
    """Upper bound 2*floor((n+1)/3) for the strong (1,1) arboricity of K_{n,n}."""
    if n < 1:
        raise PreconditionError("va11_upper needs n >= 1")
    return 2 * ((n + 1) // 3)


def vainf2_upper(n: int) -> int:
    """Upper bound 2*floor(floor((-1+sqrt(8n+9))/2)/2), exact integer arithmetic."""
    if n < 1:
        raise PreconditionError("vainf2_upper needs n >= 1")
    return 2 * (((isqrt(8 * n + 9) - 1) // 2) // 2)


def infeasible_by_divisibility(n: int, t: int) -> bool:
    """Certified infeasibility of (t, inf, 2) when t is odd, t | 2n, 2n/t - t >= 2.

    With all q classes forced to the same size 2n/t, a star-decomposition
    count shows no assignment balances both sides.
    """
    _require_instance(n, t)
    return t % 2 == 1 and (2 * n) % t == 0 and (2 * n) // t - t >= 2


def feasible_11(n: int, q: int) -> bool:
    """Exact decision: does K_{n,n} admit an equitable (q,1,1)-tree-coloring?

    For a = floor(2n/q) >= 3 every class is one-sided, so feasibility is
    the existence of two solution pairs with z1 + z2 = q.  For a = 2 the
    class shapes are pairs, triples, and single edges; a scan over the
    edge-class count settles it.  For a <= 1 the edge-plus-singleton
    construction always works.
    """
    _require_instance(n, q)
    a = (2 * n) // q
    if a >= 3:
        zs = {p.z for p in solve_linear(a, n)}
        return any(q - z in zs for z in zs)
    if a == 2:
        r = 2 * n - 2 * q
        for e in range(n + 1):
            m = n - e
            cap = m // 3
            lo = max(0, r - cap)
            hi = min(r, cap)
            if lo > hi:
                continue
            # need an x3 in [lo, hi] with the parity of m
            if lo % 2 == m % 2 or lo + 1 <= hi:
                return True
        return False
    return True


def feasible_inf2(n: int, q: int) -> ClassCountVector | None:
    """Exact decision for (q, inf, 2), returning a witness vector when feasible.

    Scans the number sx of X-bulk classes from q downward.  For fixed sx
    the two consumption equations reduce to a single interval test on the
    count bx of large X-bulk classes; the first sx admitting a bx yields
    the canonical witness.  Returns None when no sx works.
    """
    _require_instance(n, q)
    a = (2 * n) // q
    r = 2 * n - a * q
    if a == 0:
        return make_class_counts(n, q, x1=n, y1=n, x2=q - 2 * n)
    for sx in range(q, -1, -1):
        sy = q - sx
        c = n - a * sx
        b_lo = max(0, r - sy, c - sy)
        b_hi = min(sx, r, c + sx)
        if b_lo > b_hi:
            continue
        bx = b_hi
        delta = bx - c
        ey = max(0, -delta)
        ex = delta + ey
        by = r - bx
        t3 = max(0, bx + ex - sx)
        u3 = max(0, by + ey - sy)
        return make_class_counts(
            n, q,
            x1=bx - t3, x2=sx - bx - ex + t3, x1p=t3, x2p=ex - t3,
            y1=by - u3, y2=sy - by - ey + u3, y1p=u3, y2p=ey - u3,
        )
    return None


def _last_feasible_suffix(n: int, start: int, feasible) -> int:
    s = max(1, start)
    while s > 1 and feasible(n, s - 1):
        s -= 1
    return s


def exact_va11(n: int) -> int:
    """Least t such that every t' >= t admits an equitable (t',1,1)-coloring."""
    return _last_feasible_suffix(n, va11_upper(n), feasible_11)


def exact_vainf2(n: int) -> int:
    """Least t such that every t' >= t admits an equitable (t',inf,2)-coloring."""
    return _last_feasible_suffix(
        n, vainf2_upper(n), lambda m, q: feasible_inf2(m, q) is not None
    )


# ---- construction drivers ---------------------------------------------------


def construct_knn_11(n: int, q: int) -> TreeColoring:
    """Build an equitable (q,1,1)-tree-coloring of K_{n,n} or raise.

    Even q uses the side split; odd q at or above the disjoint-edge bound
    uses that construction; remaining odd q (necessarily with a >= 3) go
    through a pair of one-sided solution profiles.  Raises
    PreconditionError exactly when feasible_11(n, q) is false.
    """
    _require_instance(n, q)
    if q % 2 == 0:
        return even_t_coloring(n, q)
    if q >= 2 * ((n + 1) // 3) + 1:
        return odd_q_11_coloring(n, q)
    a = (2 * n) // q
    if a >= 3:
        pairs = solve_linear(a, n)
        by_z = {p.z: p for p in pairs}
        for p in pairs:
            other = by_z.get(q - p.z)
            if other is not None:
                return two_solution_coloring(n, 1, 1, p, other)
    raise PreconditionError(
        f"K_{{{n},{n}}} has no equitable ({q},1,1)-tree-coloring"
    )


def construct_knn_inf2(n: int, q: int) -> TreeColoring:
    """Build an equitable (q,inf,2)-tree-coloring of K_{n,n} or raise.

    Even q uses the side split.  Odd q tries the closed-form class counts
    first, then the disjoint-edge construction (its classes are edges and
    singletons, fine at diameter 2), then the exact feasibility witness.
    Raises PreconditionError exactly when feasible_inf2(n, q) is None.
    """
    _require_instance(n, q)
    if q % 2 == 0:
        return even_t_coloring(n, q)
    t = (isqrt(8 * n + 9) - 3) // 2
    if 2 * ((t + 1) // 2) <= q < n:
        try:
            return realize_class_counts(n, q, odd_q_inf2_counts(n, q))
        except InfeasibleVectorError:
            pass
    if q >= 2 * ((n + 1) // 3) + 1:
        return odd_q_11_coloring(n, q)
    witness = feasible_inf2(n, q)
    if witness is not None:
        return realize_class_counts(n, q, witness)
    raise PreconditionError(
        f"K_{{{n},{n}}} has no equitable ({q},inf,2)-tree-coloring"
    )


# ---- recognizing biclique inputs -------------------------------------------


def detect_balanced_biclique(g) -> tuple[list[int], list[int]] | None:
    """Return the two sides of g when it is some K_{n,n}, else None.

    The side containing vertex 0 comes first; both sides are sorted.
    """
    total = g.n
    if total == 0 or total % 2:
        return None
    half = total // 2
    if any(g.degree(v) != half for v in range(total)):
        return None
    side = [-1] * total
    side[0] = 0
    queue = [0]
    for u in queue:
        for w in g.adjacency[u]:
            if side[w] < 0:
                side[w] = 1 - side[u]
                queue.append(w)
            elif side[w] == side[u]:
                return None
    if any(s < 0 for s in side):
        return None
    xs = [v for v in range(total) if side[v] == 0]
    if len(xs) != half:
        return None
    ys = [v for v in range(total) if side[v] == 1]
    return xs, ys


def relabel_for_sides(coloring: TreeColoring, xs: list[int],
                      ys: list[int]) -> TreeColoring:
    """Transport a canonical K_{n,n} coloring onto arbitrary side id lists."""
    n = len(xs)
    if len(ys) != n or coloring.n != 2 * n:
        raise PreconditionError("side lists do not match the coloring size")
    colors = [0] * (2 * n)
    for i, v in enumerate(xs):
        colors[v] = coloring.colors[i]
    for i, v in enumerate(ys):
        colors[v] = coloring.colors[n + i]
    return TreeColoring(tuple(colors), coloring.t)
