"""Circle, sphere and general set packings in F_p^d.

Radii follow the squared convention: the circle of radius R about u is
``{x : ||x - u|| = R}``.  Whatever criterion a search uses to find a
packing, the returned result is re-verified on the realised point sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .clique import first_clique, max_clique
from .errors import (
    BadResidue,
    InternalContradiction,
    UnsupportedDim,
    ZeroBase,
    ZeroDistance,
)
from .ffvec import (
    PointSet,
    all_points,
    difference_set,
    norm,
    point_index,
    require_prime,
    square_class,
    sqrt_mod,
    vadd,
    vsub,
)

SIMPLEX = "simplex-search"
ISOTROPIC = "isotropic"
CLIQUE = "clique-optimal"
SET = "set-packing"


@dataclass(frozen=True)
class Circle:
    p: int
    center: tuple
    radius: int

    def points(self) -> PointSet:
        return circle_points(self)


@dataclass(frozen=True)
class AdmissibleSet:
    p: int
    c: int
    S: frozenset


@dataclass(frozen=True)
class PackingResult:
    kind: str
    p: int
    d: int
    centers: tuple
    radius: int | None
    certified: bool
    distances: tuple  # (i, j, ||centers[i] - centers[j]||)
    density: Fraction
    tile: PointSet | None = None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "p": self.p,
            "d": self.d,
            "size": len(self.centers),
            "centers": [list(c) for c in self.centers],
            "radius": self.radius,
            "certified": self.certified,
            "distances": [list(t) for t in self.distances],
            "density": str(self.density),
        }
        if self.tile is not None:
            out["tile"] = self.tile.to_list()
        return out


@dataclass(frozen=True)
class IsotropicReport:
    result: PackingResult
    i: int
    line: PointSet
    complement: PointSet
    complement_is_line: bool


@dataclass(frozen=True)
class SphereReport:
    p: int
    d: int
    t: int
    size: int
    witnesses: dict  # shift -> (x, y) with x, y on the sphere and x - y = shift
    counterexample: tuple | None


def circle_points(C: Circle) -> PointSet:
    p = C.p
    u, v = C.center
    pts = []
    for x in range(p):
        rhs = (C.radius - (x - u) ** 2) % p
        r = sqrt_mod(rhs, p)
        if r is None:
            continue
        for y in {r, -r % p}:
            pts.append((x, (y + v) % p))
    return PointSet(p, 2, tuple(pts))


def realize(p: int, center: Sequence[int], radius: int) -> PointSet:
    return circle_points(Circle(p, tuple(center), radius % p))


def triangle_count(l1: int, l2: int, l3: int, p: int) -> int:
    """Number of ways to complete a segment of length l1 to a triangle with the
    other two sides of lengths l2 and l3."""
    l1, l2, l3 = l1 % p, l2 % p, l3 % p
    if l1 == 0:
        raise ZeroBase("the base segment must have nonzero length")
    s1 = l1 + l2 + l3
    s2 = l1 * l2 + l2 * l3 + l3 * l1
    return {1: 2, 0: 1, -1: 0}[square_class(4 * s2 - s1 * s1, p)]


def circle_intersection_mu(c: int, R: int, p: int) -> int:
    """Intersection size of two radius-c circles whose centres are at distance R."""
    if R % p == 0:
        raise ZeroDistance("zero centre distance must be decided by direct intersection")
    return {1: 2, 0: 1, -1: 0}[square_class(R * (4 * c - R), p)]


def admissible_set(p: int, c: int) -> AdmissibleSet:
    S = frozenset(R for R in range(p) if square_class(R * (4 * c - R), p) == -1)
    return AdmissibleSet(p, c % p, S)


def disjoint(sets: Sequence[PointSet]) -> bool:
    seen: set = set()
    for s in sets:
        for x in s:
            if x in seen:
                return False
            seen.add(x)
    return True


def _result(kind: str, p: int, d: int, centers, radius, tile: PointSet | None = None) -> PackingResult:
    centers = tuple(sorted(tuple(c) for c in centers))
    if tile is None:
        sets = [realize(p, c, radius) for c in centers]
        size = len(sets[0]) if sets else 0
    else:
        sets = [tile.translate(c) for c in centers]
        size = len(tile)
    dists = tuple((i, j, norm(vsub(centers[i], centers[j], p), p))
                  for i, j in combinations(range(len(centers)), 2))
    density = Fraction(size * len(centers), p ** d)
    return PackingResult(kind, p, d, centers, radius, disjoint(sets), dists, density, tile)


def _circle_compatibility(p: int, c: int, mode: str) -> list:
    """For every shift delta (lexicographic), whether the radius-c circles
    about 0 and delta are disjoint under ``mode``."""
    S = admissible_set(p, c).S
    base = realize(p, (0, 0), c)
    out = []
    for delta in all_points(p, 2):
        n = norm(delta, p)
        if n:
            out.append(n in S)
        elif mode == "full" and any(delta):
            out.append(disjoint([base, base.translate(delta)]))
        else:
            out.append(False)
    return out


def _shift_graph(p: int, d: int, compatible: Sequence[bool]) -> list:
    pts = all_points(p, d)
    shifts = [delta for delta, ok in zip(pts, compatible) if ok]
    adj = []
    for x in pts:
        bits = 0
        for delta in shifts:
            bits |= 1 << point_index(vadd(x, delta, p), p)
        adj.append(bits)
    return adj


def _pinned_clique(adj: list, budget: int | None) -> list:
    """Largest clique through the origin (vertex 0); by translation symmetry
    this is a largest clique overall."""
    return [0] + max_clique(adj, adj[0], budget=budget)


def _check_mode(p: int, c: int, mode: str) -> None:
    require_prime(p)
    if p == 2:
        raise BadResidue("circle packing needs odd characteristic")
    if c % p == 0:
        raise ValueError("radius must be nonzero")
    if mode not in ("full", "nonzero"):
        raise ValueError(f"unknown mode {mode!r}")


def pack_circles(p: int, c: int, k: int, allow_zero_distance: bool = False,
                 budget: int | None = None) -> PackingResult | None:
    """k pairwise disjoint radius-c circles, first centre at the origin, or None."""
    mode = "full" if allow_zero_distance else "nonzero"
    _check_mode(p, c, mode)
    if k < 1:
        raise ValueError("k must be positive")
    adj = _shift_graph(p, 2, _circle_compatibility(p, c, mode))
    rest = first_clique(adj, adj[0], k - 1, budget=budget)
    if rest is None:
        return None
    clique = [0] + rest
    pts = all_points(p, 2)
    res = _result(SIMPLEX, p, 2, [pts[i] for i in clique], c % p)
    if not res.certified:
        raise InternalContradiction(f"circle search returned overlapping circles {res.centers}")
    return res


def packing_number(p: int, c: int, mode: str = "full", budget: int | None = None) -> tuple:
    """``(P, witness)``: the maximum number of disjoint radius-c circles."""
    _check_mode(p, c, mode)
    adj = _shift_graph(p, 2, _circle_compatibility(p, c, mode))
    clique = _pinned_clique(adj, budget)
    pts = all_points(p, 2)
    res = _result(CLIQUE, p, 2, [pts[i] for i in clique], c % p)
    if not res.certified:
        raise InternalContradiction(f"optimal packing witness overlaps: {res.centers}")
    return len(clique), res


def isotropic_unit(p: int) -> int:
    """Smallest positive i with i^2 = -1 mod p."""
    require_prime(p)
    if p % 4 != 1:
        raise BadResidue(f"-1 is not a square mod {p}")
    return next(i for i in range(1, p) if i * i % p == p - 1)


def isotropic_pack(p: int, c: int) -> IsotropicReport:
    if c % p == 0:
        raise ValueError("radius must be nonzero")
    i = isotropic_unit(p)
    line = PointSet(p, 2, tuple((t, i * t % p) for t in range(p)))
    res = _result(ISOTROPIC, p, 2, line.points, c % p)
    covered = set()
    for centre in line:
        covered.update(realize(p, centre, c))
    complement = PointSet(p, 2, tuple(x for x in all_points(p, 2) if x not in covered))
    if not res.certified:
        raise InternalContradiction(f"isotropic circles overlap for p={p}, c={c}")
    if complement != line:
        raise InternalContradiction(f"complement of the isotropic packing is not the line (p={p}, c={c})")
    return IsotropicReport(res, i, line, complement, complement == line)


def sphere(p: int, d: int, t: int) -> PointSet:
    return PointSet(p, d, tuple(x for x in all_points(p, d) if norm(x, p) == t % p))


def sphere_pack_check(p: int, d: int, t: int, exploratory: bool = False,
                      budget: int | None = None) -> SphereReport:
    """Confirm by brute force that every nonzero translate of S_t meets S_t.

    Outside ``d >= 4, t != 0`` only runs with ``exploratory``; a shift with
    disjoint translates then yields the true optimum via the clique search.
    """
    require_prime(p)
    if (d < 4 or t % p == 0) and not exploratory:
        raise UnsupportedDim("the sphere packing claim covers d >= 4 and t != 0")
    S = sphere(p, d, t)
    witnesses: dict = {}
    for x in S:
        for y in S:
            if x != y:
                witnesses.setdefault(vsub(x, y, p), (x, y))
    zero = (0,) * d
    missing = next((v for v in all_points(p, d) if v != zero and v not in witnesses), None)
    if missing is None:
        return SphereReport(p, d, t, 1 if len(S) else 0, dict(sorted(witnesses.items())), None)
    if not exploratory:
        raise InternalContradiction(f"S_{t} in F_{p}^{d} and its translate by {missing} are disjoint")
    size = len(optimal_packing_set(S, budget=budget).centers)
    return SphereReport(p, d, t, size, dict(sorted(witnesses.items())), missing)


def optimal_packing_set(E: PointSet, budget: int | None = None) -> PackingResult:
    """A largest A such that the translates E + a, a in A, are pairwise disjoint."""
    if not len(E):
        raise ValueError("E must be nonempty")
    p, d = E.p, E.d
    bad = difference_set(E)
    zero = (0,) * d
    compatible = [x != zero and x not in bad for x in all_points(p, d)]
    adj = _shift_graph(p, d, compatible)
    clique = _pinned_clique(adj, budget)
    pts = all_points(p, d)
    res = _result(SET, p, d, [pts[i] for i in clique], None, tile=E)
    if not res.certified:
        raise InternalContradiction("packing set search returned overlapping translates")
    return res
