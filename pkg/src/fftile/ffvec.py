"""Prime-field scalars, vectors and point sets.

Scalars are plain ints kept in ``[0, p)``; vectors are tuples of such ints.
Everything here is exact integer arithmetic, so no wrapper class is needed
for a field element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import ModulusMismatch, NotPrime, ZeroInverse

Vector = tuple  # tuple[int, ...] of residues mod p


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def require_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


def field_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def dot(x: Sequence[int], y: Sequence[int], p: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % p


def norm(x: Sequence[int], p: int) -> int:
    """Quadratic norm ``x_1^2 + ... + x_d^2`` reduced mod p."""
    return sum(a * a for a in x) % p


def is_square(a: int, p: int) -> bool:
    """Euler's criterion. Zero counts as a square (``0 = 0^2``)."""
    a %= p
    if a == 0 or p == 2:
        return True
    return pow(a, (p - 1) // 2, p) == 1


def is_nonzero_square(a: int, p: int) -> bool:
    return a % p != 0 and is_square(a, p)


def square_class(a: int, p: int) -> int:
    """Three-way classification: 1 nonzero square, 0 zero, -1 nonsquare."""
    a %= p
    if a == 0:
        return 0
    return 1 if is_square(a, p) else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """Smallest ``b`` in ``[0, p)`` with ``b*b == a``, or None."""
    a %= p
    if not is_square(a, p):
        return None
    return _sqrt_table(p).get(a)


@lru_cache(maxsize=None)
def _sqrt_table(p: int) -> dict:
    table: dict[int, int] = {}
    for b in range(p):
        table.setdefault(b * b % p, b)
    return table


def vadd(x: Sequence[int], y: Sequence[int], p: int) -> Vector:
    return tuple((a + b) % p for a, b in zip(x, y))


def vsub(x: Sequence[int], y: Sequence[int], p: int) -> Vector:
    return tuple((a - b) % p for a, b in zip(x, y))


def vscale(r: int, x: Sequence[int], p: int) -> Vector:
    return tuple(r * a % p for a in x)


def vneg(x: Sequence[int], p: int) -> Vector:
    return tuple(-a % p for a in x)


def zero_vector(d: int) -> Vector:
    return (0,) * d


@lru_cache(maxsize=None)
def all_points(p: int, d: int) -> tuple:
    """Every point of F_p^d in row-major lexicographic order."""
    return tuple(product(range(p), repeat=d))


def point_index(x: Sequence[int], p: int) -> int:
    i = 0
    for a in x:
        i = i * p + a
    return i


def point_at(index: int, p: int, d: int) -> Vector:
    out = []
    for _ in range(d):
        index, a = divmod(index, p)
        out.append(a)
    return tuple(reversed(out))


def canonical_direction(v: Sequence[int], p: int) -> Vector:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    for a in v:
        if a % p:
            return vscale(field_inv(a, p), v, p)
    raise ValueError("zero vector has no direction")


@lru_cache(maxsize=None)
def directions(p: int, d: int) -> tuple:
    """Canonical representatives of the lines through the origin, sorted."""
    reps = []
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            reps.append((0,) * lead + (1,) + tail)
    return tuple(sorted(reps))


@dataclass(frozen=True)
class PointSet:
    """A finite subset of F_p^d.

    ``points`` is kept sorted and deduplicated so iteration, hashing and
    equality are canonical.
    """

    p: int
    d: int
    points: tuple = ()
    _members: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        pts = []
        for x in self.points:
            x = tuple(int(a) for a in x)
            if len(x) != self.d:
                raise ValueError(f"point {x} does not have dimension {self.d}")
            if any(a < 0 or a >= self.p for a in x):
                raise ValueError(f"point {x} has coordinates outside [0, {self.p})")
            pts.append(x)
        canon = tuple(sorted(set(pts)))
        object.__setattr__(self, "points", canon)
        object.__setattr__(self, "_members", frozenset(canon))

    @classmethod
    def of(cls, p: int, d: int, points: Iterable[Sequence[int]]) -> "PointSet":
        """Build from arbitrary integers, reducing every coordinate mod p."""
        return cls(p, d, tuple(tuple(a % p for a in x) for x in points))

    @classmethod
    def full(cls, p: int, d: int) -> "PointSet":
        return cls(p, d, all_points(p, d))

    @classmethod
    def span(cls, p: int, d: int, vectors: Sequence[Sequence[int]]) -> "PointSet":
        """The linear span of ``vectors``."""
        pts = {zero_vector(d)}
        for v in vectors:
            pts = {vadd(x, vscale(t, v, p), p) for x in pts for t in range(p)}
        return cls(p, d, tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._members

    def translate(self, a: Sequence[int]) -> "PointSet":
        return PointSet(self.p, self.d, tuple(vadd(x, a, self.p) for x in self.points))

    def is_full(self) -> bool:
        return len(self.points) == self.p ** self.d

    def to_list(self) -> list:
        return [list(x) for x in self.points]


def same_space(*sets: PointSet) -> tuple[int, int]:
    p, d = sets[0].p, sets[0].d
    for s in sets[1:]:
        if (s.p, s.d) != (p, d):
            raise ModulusMismatch(f"point sets live in F_{p}^{d} and F_{s.p}^{s.d}")
    return p, d


def difference_set(E: PointSet) -> PointSet:
    """``{e - e' : e != e'}``."""
    p = E.p
    diffs = {vsub(e, f, p) for e in E for f in E if e != f}
    return PointSet(p, E.d, tuple(diffs))


# -- linear algebra mod p ----------------------------------------------------


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[a % p for a in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field_inv(m[r][c], p)
        m[r] = [a * inv % p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}``, one vector per free column."""
    m, pivots = rref(rows, p) if rows else ([], [])
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(m, pivots):
            v[pc] = -row[free] % p
        basis.append(tuple(v))
    return basis


def coordinates(basis: Sequence[Sequence[int]], x: Sequence[int], p: int) -> Vector:
    """Coordinates of ``x`` in ``basis`` (a list of d independent vectors)."""
    d = len(basis)
    # columns are the basis vectors; augment with x
    aug = [[basis[j][i] for j in range(d)] + [x[i]] for i in range(d)]
    m, pivots = rref(aug, p)
    if pivots != list(range(d)):
        raise ValueError("basis is not linearly independent")
    return tuple(m[i][d] for i in range(d))


def combine(basis: Sequence[Sequence[int]], coords: Sequence[int], p: int) -> Vector:
    d = len(basis[0])
    out = [0] * d
    for c, v in zip(coords, basis):
        for i in range(d):
            out[i] += c * v[i]
    return tuple(a % p for a in out)
