"""Triangulated polygons, arcs, flips, laminations and shear coordinates.

Vertices are ``1..n`` in counterclockwise order.  Boundary edge ``k`` joins
``k`` and ``k+1`` (edge ``n`` joins ``n`` and ``1``).  Everything here is
combinatorial: sides of a chord are read off the cyclic order of labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

Diagonal = Tuple[int, int]


class SurfaceError(ValueError):
    pass


class InvalidTriangulation(SurfaceError):
    pass


class InvalidArc(SurfaceError):
    pass


class InvalidCurve(SurfaceError):
    pass


class NotADiagonal(SurfaceError):
    pass


class ArcInTriangulation(SurfaceError):
    pass


def canon(a: int, b: int) -> Diagonal:
    return (a, b) if a < b else (b, a)


def is_boundary(n: int, a: int, b: int) -> bool:
    d = abs(a - b)
    return d == 1 or d == n - 1


def _interleave(a: Diagonal, b: Diagonal) -> bool:
    (p, q), (r, s) = a, b
    return (p < r < q < s) or (r < p < s < q)


@dataclass(frozen=True)
class Arc:
    """Unordered pair of polygon vertices; ``a < b`` after normalisation."""

    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if a == b:
            raise InvalidArc(f"degenerate arc ({a}, {b})")
        object.__setattr__(self, "a", min(a, b))
        object.__setattr__(self, "b", max(a, b))

    @classmethod
    def of(cls, x) -> "Arc":
        if isinstance(x, Arc):
            return x
        a, b = x
        return cls(a, b)

    @property
    def pair(self) -> Diagonal:
        return (self.a, self.b)

    def check(self, n: int) -> "Arc":
        if not (1 <= self.a <= n and 1 <= self.b <= n):
            raise InvalidArc(f"arc {self.pair} has a vertex outside 1..{n}")
        if is_boundary(n, self.a, self.b):
            raise InvalidArc(f"arc {self.pair} is a boundary edge of the {n}-gon")
        return self


def arcs_cross(x, y) -> bool:
    """True iff the endpoints strictly interleave around the circle."""
    return _interleave(Arc.of(x).pair, Arc.of(y).pair)


class PolygonTriangulation:
    """A triangulation of the ``n``-gon by ``n - 3`` pairwise non-crossing diagonals.

    Diagonals are kept in canonical order, sorted by ``(min, max)``; this is the
    default indexing of every matrix and vector.
    """

    __slots__ = ("n", "diagonals", "_index", "_thirds", "_triangles")

    def __init__(self, n: int, diagonals: Iterable[Sequence[int]]):
        if n < 3:
            raise InvalidTriangulation(f"a polygon needs at least 3 vertices, got {n}")
        self.n = n
        diags = sorted({canon(int(a), int(b)) for a, b in diagonals})
        for d in diags:
            try:
                Arc(*d).check(n)
            except InvalidArc as exc:
                raise InvalidTriangulation(str(exc)) from None
        if len(diags) != n - 3:
            raise InvalidTriangulation(f"{len(diags)} diagonals given, a {n}-gon needs {n - 3}")
        for i, d in enumerate(diags):
            for e in diags[i + 1:]:
                if _interleave(d, e):
                    raise InvalidTriangulation(f"diagonals {d} and {e} cross")
        self.diagonals: Tuple[Diagonal, ...] = tuple(diags)
        self._index = {d: k for k, d in enumerate(diags)}
        self._thirds = None
        self._triangles = None

    def __eq__(self, other):
        if not isinstance(other, PolygonTriangulation):
            return NotImplemented
        return self.n == other.n and self.diagonals == other.diagonals

    def __hash__(self):
        return hash((self.n, self.diagonals))

    def __repr__(self):
        return f"PolygonTriangulation({self.n}, {list(self.diagonals)})"

    def __contains__(self, d) -> bool:
        return canon(*Arc.of(d).pair) in self._index

    def index(self, d) -> int:
        try:
            return self._index[Arc.of(d).pair]
        except KeyError:
            raise NotADiagonal(f"{tuple(d)} is not a diagonal of {self}") from None

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, data: dict) -> "PolygonTriangulation":
        return cls(int(data["n"]), data["diagonals"])

    # triangles

    def triangles(self) -> List[Tuple[int, int, int]]:
        """Triangles as increasing vertex triples (hence counterclockwise)."""
        if self._triangles is None:
            nbrs: Dict[int, set] = {v: set() for v in range(1, self.n + 1)}
            for v in range(1, self.n + 1):
                w = v % self.n + 1
                nbrs[v].add(w)
                nbrs[w].add(v)
            for a, b in self.diagonals:
                nbrs[a].add(b)
                nbrs[b].add(a)
            tris = set()
            for a in range(1, self.n + 1):
                for b in nbrs[a]:
                    if b > a:
                        for c in nbrs[a] & nbrs[b]:
                            if c > b:
                                tris.add((a, b, c))
            self._triangles = sorted(tris)
        return self._triangles

    def thirds(self, a: int, b: int) -> Tuple[int, ...]:
        """Third vertices of the triangles on the edge or diagonal ``ab``."""
        if self._thirds is None:
            th: Dict[Diagonal, List[int]] = {}
            for x, y, z in self.triangles():
                th.setdefault((x, y), []).append(z)
                th.setdefault((y, z), []).append(x)
                th.setdefault((x, z), []).append(y)
            self._thirds = {k: tuple(sorted(v)) for k, v in th.items()}
        return self._thirds.get(canon(a, b), ())

    def quadrilateral(self, d) -> Tuple[int, int, int, int]:
        """``(a, b, c, e)`` for ``d = (a, c)``: b inside ``a..c``, e outside."""
        self.index(d)
        a, c = Arc.of(d).pair
        inner = outer = None
        for v in self.thirds(a, c):
            if a < v < c:
                inner = v
            else:
                outer = v
        return a, inner, c, outer


def flip(t: PolygonTriangulation, d) -> PolygonTriangulation:
    """Replace ``d`` by the other diagonal of its quadrilateral."""
    if d not in t:
        raise NotADiagonal(f"{tuple(d)} is not a diagonal of {t}")
    a, b, c, e = t.quadrilateral(d)
    old = canon(a, c)
    return PolygonTriangulation(t.n, [x for x in t.diagonals if x != old] + [canon(b, e)])


def flipped_diagonal(t: PolygonTriangulation, d) -> Diagonal:
    a, b, c, e = t.quadrilateral(d)
    return canon(b, e)


# --- adjacency ---------------------------------------------------------------


def signed_adjacency(t: PolygonTriangulation, order: Optional[Sequence[Sequence[int]]] = None) -> List[List[int]]:
    """Skew-symmetric matrix with ``b_ij = +1`` when, inside a common triangle,
    diagonal i comes right after diagonal j in counterclockwise order.

    ``order`` fixes the row/column indexing (canonical order by default).
    """
    diags = list(t.diagonals) if order is None else [canon(*d) for d in order]
    if sorted(diags) != list(t.diagonals):
        raise NotADiagonal("order must list the diagonals of the triangulation")
    idx = {d: k for k, d in enumerate(diags)}
    m = len(diags)
    b = [[0] * m for _ in range(m)]
    for x, y, z in t.triangles():
        sides = [canon(x, y), canon(y, z), canon(z, x)]
        for s in range(3):
            prev, nxt = sides[s], sides[(s + 1) % 3]
            if prev in idx and nxt in idx:
                b[idx[nxt]][idx[prev]] += 1
                b[idx[prev]][idx[nxt]] -= 1
    return b


# --- crossings ---------------------------------------------------------------


def crossed_diagonals(t: PolygonTriangulation, g) -> List[Diagonal]:
    """Diagonals of ``t`` crossed by ``g``, in order from ``g``'s smaller endpoint.

    Walks the strip of triangles met by ``g``; an arc already in ``t`` crosses
    nothing.
    """
    g = Arc.of(g).check(t.n)
    a, b = g.pair
    if g.pair in t:
        return []

    def crosses(u: int, v: int) -> bool:
        return _interleave(canon(u, v), (a, b))

    # the triangle at a whose far side crosses g
    start = None
    for x, y, z in t.triangles():
        if a in (x, y, z):
            u, v = [w for w in (x, y, z) if w != a]
            if crosses(u, v):
                start = (u, v)
                break
    if start is None:  # pragma: no cover - some triangle at a always faces g
        raise InvalidArc(f"no triangle at {a} faces {g.pair}")
    out = []
    u, v = start
    behind = a
    while True:
        out.append(canon(u, v))
        ahead = [w for w in t.thirds(u, v) if w != behind]
        w = ahead[0]
        if w == b:
            return out
        if crosses(u, w):
            behind, v = v, w
        else:
            behind, u = u, w


def is_right_of(n: int, g, v: int) -> bool:
    """With ``g`` oriented from its smaller endpoint a to b, v is right of g iff
    v lies strictly between a and b going counterclockwise.

    Walking from a towards b, the vertices met counterclockwise after a are on
    the walker's right because the labels increase counterclockwise.
    """
    a, b = Arc.of(g).pair
    return a < v < b


# --- laminations -------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryPoint:
    """Unmarked point on boundary edge ``edge`` (joining ``edge`` and ``edge + 1``);
    larger ``slot`` sits further counterclockwise along the edge."""

    edge: int
    slot: int = 0

    def key(self) -> Tuple[int, int, int]:
        return (self.edge, 1, self.slot)

    def to_json(self) -> dict:
        return {"edge": self.edge, "slot": self.slot}


@dataclass(frozen=True)
class LamCurve:
    start: BoundaryPoint
    end: BoundaryPoint

    @classmethod
    def between(cls, e1: int, e2: int, s1: int = 0, s2: int = 0) -> "LamCurve":
        return cls(BoundaryPoint(e1, s1), BoundaryPoint(e2, s2))

    def reversed(self) -> "LamCurve":
        return LamCurve(self.end, self.start)

    def check(self, n: int) -> "LamCurve":
        for p in (self.start, self.end):
            if not 1 <= p.edge <= n:
                raise InvalidCurve(f"edge {p.edge} outside 1..{n}")
        gap = (self.end.edge - self.start.edge) % n
        if min(gap, n - gap) < 2:
            raise InvalidCurve(
                f"curve between edges {self.start.edge} and {self.end.edge} is isotopic to a boundary segment"
            )
        return self

    def to_json(self) -> dict:
        return {"from": self.start.to_json(), "to": self.end.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "LamCurve":
        try:
            f, t = data["from"], data["to"]
            return cls(BoundaryPoint(int(f["edge"]), int(f.get("slot", 0))),
                       BoundaryPoint(int(t["edge"]), int(t.get("slot", 0))))
        except (KeyError, TypeError) as exc:
            raise InvalidCurve(f"malformed curve {data!r}") from exc

    def splits(self, v: int) -> bool:
        """Which side of the chord vertex ``v`` is on (True = counterclockwise from start)."""
        lo, hi = self.start.key(), self.end.key()
        k = (v, 0, 0)
        if lo < hi:
            return lo < k < hi
        return not (hi < k < lo)


def curves_cross(c1: LamCurve, c2: LamCurve) -> bool:
    p, q = sorted((c1.start.key(), c1.end.key()))
    r, s = sorted((c2.start.key(), c2.end.key()))
    return (p < r < q < s) or (r < p < s < q)


@dataclass(frozen=True)
class MultiLamination:
    """A list of laminations, each a list of pairwise non-crossing curves."""

    laminations: Tuple[Tuple[LamCurve, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "laminations", tuple(tuple(lam) for lam in self.laminations))

    @classmethod
    def single(cls, curve: LamCurve) -> "MultiLamination":
        return cls(((curve,),))

    def __len__(self):
        return len(self.laminations)

    def check(self, n: int) -> "MultiLamination":
        for lam in self.laminations:
            for c in lam:
                c.check(n)
            for i, c in enumerate(lam):
                for d in lam[i + 1:]:
                    if curves_cross(c, d):
                        raise InvalidCurve(f"curves {c.to_json()} and {d.to_json()} cross")
        return self

    def to_json(self) -> list:
        return [[c.to_json() for c in lam] for lam in self.laminations]

    @classmethod
    def from_json(cls, data) -> "MultiLamination":
        return cls(tuple(tuple(LamCurve.from_json(c) for c in lam) for lam in data))


def shear(t: PolygonTriangulation, curve: LamCurve, d) -> int:
    """Shear coordinate of one curve at diagonal ``d``: +1 for an S crossing,
    -1 for a Z crossing, 0 otherwise."""
    a, b, c, e = t.quadrilateral(d)
    side_a = curve.splits(a)
    if side_a == curve.splits(c):
        return 0
    with_b = curve.splits(b) == side_a
    with_e = curve.splits(e) == side_a
    if with_b and not with_e:
        return 1
    if with_e and not with_b:
        return -1
    return 0


def shear_vector(t: PolygonTriangulation, lam: Sequence[LamCurve],
                 order: Optional[Sequence[Sequence[int]]] = None) -> List[int]:
    """Summed shear coordinates of the curves of one lamination at each diagonal."""
    lam = list(lam)
    MultiLamination((tuple(lam),)).check(t.n)
    diags = list(t.diagonals) if order is None else [canon(*d) for d in order]
    return [sum(shear(t, c, d) for c in lam) for d in diags]


def elementary_lamination(g, n: Optional[int] = None) -> LamCurve:
    """Curve following ``g`` whose endpoints sit just counterclockwise of g's
    endpoints, i.e. on boundary edges ``a`` and ``b``."""
    g = Arc.of(g)
    if n is not None:
        g.check(n)
    return LamCurve.between(g.a, g.b)


# --- enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    if k <= 1:
        return 1
    return sum(catalan(i) * catalan(k - 1 - i) for i in range(k))


def _triangulate(vs: Tuple[int, ...]) -> Iterator[List[Diagonal]]:
    if len(vs) < 3:
        yield []
        return
    first, last = vs[0], vs[-1]
    for i in range(1, len(vs) - 1):
        apex = vs[i]
        extra = []
        if i > 1:
            extra.append(canon(first, apex))
        if i < len(vs) - 2:
            extra.append(canon(apex, last))
        for left in _triangulate(vs[: i + 1]):
            for right in _triangulate(vs[i:]):
                yield extra + left + right


def triangulations(n: int) -> Iterator[PolygonTriangulation]:
    """All ``catalan(n - 2)`` triangulations of the n-gon, in a fixed order."""
    for diags in _triangulate(tuple(range(1, n + 1))):
        yield PolygonTriangulation(n, diags)


def random_triangulation(n: int, rng: random.Random) -> PolygonTriangulation:
    """Uniformly random triangulation: the apex over the base is drawn with
    probability proportional to the number of completions."""
    diags: List[Diagonal] = []
    stack = [tuple(range(1, n + 1))]
    while stack:
        vs = stack.pop()
        m = len(vs)
        if m < 3:
            continue
        weights = [catalan(i - 1) * catalan(m - i - 2) for i in range(1, m - 1)]
        i = rng.choices(range(1, m - 1), weights=weights)[0]
        apex = vs[i]
        if i > 1:
            diags.append(canon(vs[0], apex))
        if i < m - 2:
            diags.append(canon(apex, vs[-1]))
        stack.append(vs[: i + 1])
        stack.append(vs[i:])
    return PolygonTriangulation(n, diags)


def all_arcs(n: int) -> List[Diagonal]:
    """The ``n(n-3)/2`` diagonals of the n-gon."""
    return [(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1) if not is_boundary(n, a, b)]


def single_laminations(n: int) -> List[LamCurve]:
    """One curve for each pair of boundary edges at cyclic distance at least 2."""
    out = []
    for e1 in range(1, n + 1):
        for e2 in range(e1 + 2, n + 1):
            if (e2 - e1) % n >= 2 and (e1 - e2) % n >= 2:
                out.append(LamCurve.between(e1, e2))
    return out
