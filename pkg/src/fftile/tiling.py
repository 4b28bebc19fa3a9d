"""Direct tiling checks, graph detection and the structure of small tilings.

A set E ⊂ F_p^d is a *graph* when, for some linear basis split into ``s``
domain vectors and ``d - s`` codomain vectors, every domain coordinate
vector occurs exactly once among the coordinates of E.  Such an E tiles
by the span of the codomain vectors.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence

from .errors import (
    IncompleteDomain,
    InternalContradiction,
    NotATiling,
    UnsupportedDim,
    UnsupportedSize,
)
from .ffvec import (
    PointSet,
    all_points,
    combine,
    coordinates,
    directions,
    dot,
    field_inv,
    nullspace,
    rank,
    same_space,
    vadd,
    vscale,
    vsub,
)
from .fourier import hyperplane_counts, set_coefficient

AXIS = "axis-aligned"
ORTHOGONAL = "orthogonal-basis"
ISOTROPIC = "isotropic-basis"


@dataclass(frozen=True)
class TilingReport:
    holds: bool
    k: int
    histogram: dict  # multiplicity -> number of points covered that often


@dataclass(frozen=True)
class GraphWitness:
    """E written as a graph over the first ``s`` basis vectors.

    ``values`` maps domain coordinates to codomain coordinates (both tuples).
    ``polynomials`` holds, when ``s == 1``, one coefficient list of length p
    per codomain coordinate.  ``kind`` names the basis construction used.
    """

    p: int
    d: int
    kind: str
    s: int
    basis: tuple
    values: tuple  # sorted ((domain coords), (codomain coords)) pairs
    direction: tuple | None = None
    polynomials: tuple = ()

    @property
    def domain_basis(self) -> tuple:
        return self.basis[: self.s]

    @property
    def codomain_basis(self) -> tuple:
        return self.basis[self.s:]

    @property
    def polynomial(self) -> tuple | None:
        return self.polynomials[0] if len(self.polynomials) == 1 else None

    def function(self) -> dict:
        return dict(self.values)

    def points(self) -> PointSet:
        pts = [combine(self.basis, tuple(x) + tuple(y), self.p) for x, y in self.values]
        return PointSet(self.p, self.d, tuple(pts))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "kind": self.kind,
            "s": self.s,
            "basis": [list(v) for v in self.basis],
            "direction": list(self.direction) if self.direction is not None else None,
            "values": [[list(x), list(y)] for x, y in self.values],
            "polynomials": [list(c) for c in self.polynomials],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GraphWitness":
        return cls(
            p=int(data["p"]),
            d=int(data["d"]),
            kind=data["kind"],
            s=int(data["s"]),
            basis=tuple(tuple(v) for v in data["basis"]),
            values=tuple((tuple(x), tuple(y)) for x, y in data["values"]),
            direction=tuple(data["direction"]) if data.get("direction") is not None else None,
            polynomials=tuple(tuple(c) for c in data.get("polynomials", [])),
        )


@dataclass(frozen=True)
class Classification:
    case: str  # "singleton" | "full" | "graph"
    witness: GraphWitness


@dataclass(frozen=True)
class GraphDecomposition:
    case: str  # "k-points" | "full-plane" | "graphs"
    s: int
    direction: tuple | None = None
    parts: tuple = ()


@dataclass(frozen=True)
class GraphicalResult:
    which: str | None  # "E", "A" or None
    witness: GraphWitness | None
    guaranteed: bool
    notes: tuple = field(default=())


# -- direct counting -----------------------------------------------------------


def coverage(E: PointSet, A: PointSet) -> list:
    """Multiplicity with which each point (lexicographic order) is covered."""
    p, d = same_space(E, A)
    counts = [0] * p ** d
    for a in A:
        for e in E:
            idx = 0
            for x, y in zip(e, a):
                idx = idx * p + (x + y) % p
            counts[idx] += 1
    return counts


def tiling_direct_check(E: PointSet, A: PointSet, k: int) -> TilingReport:
    hist = dict(Counter(coverage(E, A)))
    holds = hist == {k: E.p ** E.d}
    return TilingReport(holds, k, dict(sorted(hist.items())))


def tiling_level(E: PointSet, A: PointSet) -> int | None:
    """The level k at which E tiles by A, or None."""
    hist = Counter(coverage(E, A))
    if len(hist) == 1:
        (k,) = hist
        return k if k > 0 else None
    return None


# -- interpolation -------------------------------------------------------------


def interpolate_poly(values: Mapping[int, int] | Sequence[int], p: int) -> tuple:
    """Coefficients (constant term first, length p) of the unique polynomial of
    degree < p through ``values``, by the Lagrange formula."""
    if not isinstance(values, Mapping):
        values = dict(enumerate(values))
    vals = {int(k) % p: int(v) % p for k, v in values.items()}
    missing = [t for t in range(p) if t not in vals]
    if missing:
        raise IncompleteDomain(f"no value given at {missing}")
    coeffs = [0] * p
    for k in range(p):
        # numerator prod_{j != k} (x - j), expanded
        num = [1]
        denom = 1
        for j in range(p):
            if j == k:
                continue
            num = [((num[i - 1] if i > 0 else 0) - j * (num[i] if i < len(num) else 0)) % p
                   for i in range(len(num) + 1)]
            denom = denom * (k - j) % p
        scale = vals[k] * field_inv(denom, p) % p
        for i, c in enumerate(num):
            coeffs[i] = (coeffs[i] + scale * c) % p
    return tuple(coeffs)


def eval_poly(coeffs: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


# -- basis construction ----------------------------------------------------------


def _is_standard(v: Sequence[int]) -> bool:
    return sorted(v) == [0] * (len(v) - 1) + [1]


def _hyperbolic_partner(m: tuple, p: int) -> tuple:
    """Smallest u (lexicographic) with u.m = 1, then shifted along m so that
    u.u = 0.  Requires m.m = 0."""
    d = len(m)
    u = next(x for x in all_points(p, d) if dot(x, m, p) == 1)
    if p != 2:
        lam = dot(u, u, p) * field_inv(2, p) % p
        u = vsub(u, vscale(lam, m, p), p)
    return u


def _extend(start: list, candidates: Sequence[tuple], target: int, p: int) -> list:
    out = list(start)
    for v in candidates:
        if len(out) == target:
            break
        if rank(out + [v], p) > len(out):
            out.append(v)
    return out


def _line_basis(m: tuple, p: int) -> tuple[tuple, str]:
    """Basis whose first coordinate is constant exactly on the hyperplanes
    ``x.m = t``; used for graphs of functions of one variable."""
    d = len(m)
    perp = nullspace([m], p, d)
    if dot(m, m, p):
        basis = [m] + perp
        kind = AXIS if _is_standard(m) else ORTHOGONAL
    else:
        u = _hyperbolic_partner(m, p)
        basis = [u] + _extend([m], perp, d - 1, p)
        kind = ISOTROPIC
    return tuple(basis), kind


def _projection_basis(v: tuple, p: int) -> tuple[tuple, str]:
    """Basis ending in ``v`` whose first d-1 vectors span a complement of v."""
    d = len(v)
    if _is_standard(v):
        i = v.index(1)
        dom = [tuple(int(j == c) for j in range(d)) for c in range(d) if c != i]
        kind = AXIS
    elif dot(v, v, p):
        dom = nullspace([v], p, d)
        kind = ORTHOGONAL
    else:
        u = _hyperbolic_partner(v, p)
        dom = [u] + nullspace([u, v], p, d)
        kind = ISOTROPIC
    basis = tuple(dom) + (v,)
    if rank(list(basis), p) != d:
        raise InternalContradiction(f"basis construction failed for {v}")
    return basis, kind


def _witness_from_basis(E: PointSet, basis: tuple, kind: str, s: int,
                        direction: tuple | None) -> GraphWitness | None:
    p, d = E.p, E.d
    mapping: dict = {}
    for x in E:
        c = coordinates(basis, x, p)
        dom, cod = c[:s], c[s:]
        if dom in mapping:
            return None
        mapping[dom] = cod
    if len(mapping) != p ** s:
        return None
    polys = ()
    if s == 1:
        polys = tuple(
            interpolate_poly({t[0]: y[j] for t, y in mapping.items()}, p) for j in range(d - 1)
        )
    w = GraphWitness(p, d, kind, s, basis, tuple(sorted(mapping.items())), direction, polys)
    if w.points() != E:
        raise InternalContradiction("graph witness does not reproduce the set")
    return w


def graph_along(E: PointSet, m: Sequence[int]) -> GraphWitness | None:
    """Witness that E has exactly one point on each hyperplane ``x.m = t``."""
    m = tuple(a % E.p for a in m)
    if len(E) != E.p or not any(m):
        return None
    if any(c != 1 for c in hyperplane_counts(E, m)):
        return None
    basis, kind = _line_basis(m, E.p)
    return _witness_from_basis(E, basis, kind, 1, m)


def graph_over_projection(E: PointSet, v: Sequence[int]) -> GraphWitness | None:
    """Witness that projecting E along ``v`` is a bijection onto a hyperplane."""
    p, d = E.p, E.d
    v = tuple(a % p for a in v)
    if len(E) != p ** (d - 1):
        return None
    basis, kind = _projection_basis(v, p)
    return _witness_from_basis(E, basis, kind, d - 1, v)


def _power_of(n: int, p: int) -> int | None:
    s = 0
    while n > 1 and n % p == 0:
        n //= p
        s += 1
    return s if n == 1 else None


def is_graph(E: PointSet, direction: Sequence[int] | None = None) -> GraphWitness | None:
    """Return a graph witness for E, or None.

    Sizes ``p^s`` with ``s`` in ``{0, 1, d-1, d}`` are decided; other sizes
    raise :class:`UnsupportedSize`.  Directions are tried in canonical order
    unless ``direction`` is given.
    """
    p, d = E.p, E.d
    s = _power_of(len(E), p) if len(E) else None
    if s is None:
        raise UnsupportedSize(f"|E| = {len(E)} is not a power of {p}")
    std = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    if s == 0:
        return _witness_from_basis(E, std, AXIS, 0, None)
    if s == d:
        return _witness_from_basis(E, std, AXIS, d, None)
    if s == 1:
        cands = [tuple(direction)] if direction is not None else directions(p, d)
        for m in cands:
            if not set_coefficient(E, m).is_zero():
                continue
            w = graph_along(E, m)
            if w is None:
                raise InternalContradiction(f"E^({m}) = 0 but E is not one point per hyperplane")
            return w
        return None
    if s == d - 1:
        if direction is not None:
            return graph_over_projection(E, direction)
        diffs = {vsub(a, b, p) for a in E for b in E if a != b}
        for v in directions(p, d):
            if any(vscale(r, v, p) in diffs for r in range(1, p)):
                continue
            return graph_over_projection(E, v)
        return None
    raise UnsupportedSize(f"|E| = {p}^{s} with 2 <= s <= d-2 = {d - 2} is not decided")


def graph_tiling_partner(w: GraphWitness) -> PointSet:
    """Span of the codomain basis vectors; the graph 1-tiles by it."""
    return PointSet.span(w.p, w.d, w.codomain_basis)


def verify_witness(w: GraphWitness, E: PointSet | None = None) -> bool:
    """Independent re-check: independent basis, complete domain, reproduces E,
    tiles by its partner at level 1."""
    p, d = w.p, w.d
    if len(w.basis) != d or rank([list(v) for v in w.basis], p) != d:
        return False
    doms = [x for x, _ in w.values]
    if len(set(doms)) != p ** w.s or len(doms) != p ** w.s:
        return False
    pts = w.points()
    if E is not None and pts != E:
        return False
    if w.s == 1:
        for j, coeffs in enumerate(w.polynomials):
            if any(eval_poly(coeffs, x[0], p) != y[j] for x, y in w.values):
                return False
    return tiling_direct_check(pts, graph_tiling_partner(w), 1).holds


def graph_from_function(p: int, d: int, basis: Sequence[Sequence[int]], s: int,
                        f: Mapping) -> PointSet:
    """``{sum x_i b_i + sum f(x)_j b_(s+j)}`` over every domain point x."""
    pts = []
    for x in product(range(p), repeat=s):
        pts.append(combine(basis, tuple(x) + tuple(f[tuple(x)]), p))
    return PointSet(p, d, tuple(pts))


def random_graph_tiling(p: int, d: int, s: int, rng: random.Random) -> tuple:
    """A random graph tiling pair ``(E, A)`` with ``|E| = p^s``."""
    while True:
        basis = [tuple(rng.randrange(p) for _ in range(d)) for _ in range(d)]
        if rank(basis, p) == d:
            break
    f = {x: tuple(rng.randrange(p) for _ in range(d - s)) for x in product(range(p), repeat=s)}
    E = graph_from_function(p, d, basis, s, f)
    A = PointSet.span(p, d, basis[s:])
    return E, A


# -- classification --------------------------------------------------------------


def _require_tiling(E: PointSet, A: PointSet, k: int) -> None:
    report = tiling_direct_check(E, A, k)
    if not report.holds:
        raise NotATiling(f"E does not {k}-tile by A (coverage {report.histogram})")


def classify_1_tiling(E: PointSet, A: PointSet) -> Classification:
    p, d = same_space(E, A)
    if d != 2:
        raise UnsupportedDim("plane classification needs d = 2")
    _require_tiling(E, A, 1)
    w = is_graph(E)
    if w is None:
        raise InternalContradiction(f"1-tiling of F_{p}^2 whose tile is not a graph: {E.points}")
    if len(E) == 1:
        return Classification("singleton", w)
    if len(E) == p * p:
        return Classification("full", w)
    return Classification("graph", w)


def decompose_k_tiling(E: PointSet, A: PointSet, k: int) -> GraphDecomposition:
    p, d = same_space(E, A)
    if d != 2:
        raise UnsupportedDim("k-tiling decomposition needs d = 2")
    _require_tiling(E, A, k)
    if len(E) == k and A.is_full():
        return GraphDecomposition("k-points", 0)
    if E.is_full():
        return GraphDecomposition("full-plane", p)
    for m in directions(p, d):
        if set_coefficient(E, m).is_zero():
            break
    else:
        raise InternalContradiction(f"no vanishing direction for a {k}-tiling with |E| = {len(E)}")
    counts = hyperplane_counts(E, m)
    s = counts[0]
    if len(E) != s * p or any(c != s for c in counts) or k % s:
        raise InternalContradiction(f"direction {m}: counts {counts}, k = {k}")
    lines: dict = {t: [] for t in range(p)}
    for x in E:  # already lexicographic
        lines[dot(x, m, p)].append(x)
    parts = []
    for j in range(s):
        part = PointSet(p, d, tuple(lines[t][j] for t in range(p)))
        w = graph_along(part, m)
        if w is None:
            raise InternalContradiction(f"part {j} is not a graph along {m}")
        parts.append(w)
    return GraphDecomposition("graphs", s, m, tuple(parts))


def graphical_check(E: PointSet, A: PointSet) -> GraphicalResult:
    p, d = same_space(E, A)
    _require_tiling(E, A, 1)
    notes = []
    found = None
    for name, X in (("E", E), ("A", A)):
        try:
            w = is_graph(X)
        except UnsupportedSize as exc:
            notes.append(f"{name}: {exc}")
            continue
        if w is not None:
            found = (name, w)
            break
    guaranteed = d <= 3 or len(E) in (1, p, p ** (d - 1), p ** d)
    if found is None:
        if guaranteed:
            raise InternalContradiction(f"tiling pair in F_{p}^{d} with |E| = {len(E)} is not graphical")
        return GraphicalResult(None, None, guaranteed, tuple(notes))
    return GraphicalResult(found[0], found[1], guaranteed, tuple(notes))


# -- search ------------------------------------------------------------------------


def tiling_partners(E: PointSet, limit: int | None = None) -> Iterator[PointSet]:
    """All A containing the origin with E ⊕ A = F_p^d, by exact cover.

    Requires the origin in E so that the translate covering 0 is E itself.
    """
    p, d = E.p, E.d
    n = p ** d
    if n % len(E):
        return
    pts = all_points(p, d)
    index = {x: i for i, x in enumerate(pts)}
    zero = (0,) * d
    if zero not in E:
        raise ValueError("E must contain the origin")
    covered = [False] * n
    chosen: list = []
    found = 0

    def cells(a):
        return [index[vadd(e, a, p)] for e in E]

    def place(cs, flag):
        for c in cs:
            covered[c] = flag

    first = cells(zero)
    place(first, True)
    chosen.append(zero)

    def search(start):
        nonlocal found
        i = start
        while i < n and covered[i]:
            i += 1
        if i == n:
            found += 1
            yield PointSet(p, d, tuple(chosen))
            return
        x = pts[i]
        for e in E:
            a = vsub(x, e, p)
            cs = cells(a)
            if any(covered[c] for c in cs):
                continue
            place(cs, True)
            chosen.append(a)
            yield from search(i + 1)
            chosen.pop()
            place(cs, False)
            if limit is not None and found >= limit:
                return

    yield from search(0)


def search_tilings(p: int, d: int, size: int, limit: int | None = None,
                   per_set: int | None = None) -> Iterator[tuple]:
    """Tiling pairs ``(E, A)`` with ``|E| = size`` and 0 in both, in
    lexicographic order of E."""
    zero = (0,) * d
    rest = [x for x in all_points(p, d) if x != zero]
    count = 0
    if size < 1 or (p ** d) % size:
        return
    for combo in combinations(rest, size - 1):
        E = PointSet(p, d, (zero,) + combo)
        for A in tiling_partners(E, per_set):
            yield E, A
            count += 1
            if limit is not None and count >= limit:
                return
