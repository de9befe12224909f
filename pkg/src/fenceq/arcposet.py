"""Fence poset attached to an arc in a triangulated polygon."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .cluster import f_polynomial_q
from .poset import Composition, FinitePoset, fence, rank_sequence
from .surface import Arc, PolygonTriangulation, SurfaceError, crossed_diagonals, is_right_of


class NoCrossings(SurfaceError):
    pass


@dataclass(frozen=True)
class ArcPosetResult:
    composition: Composition
    poset: FinitePoset
    crossing_count: int

    def to_json(self) -> dict:
        return {
            "composition": self.composition.to_list(),
            "crossing_count": self.crossing_count,
            "poset": self.poset.to_json(),
        }


def directions_to_composition(ups: List[bool]) -> Composition:
    """Run lengths of a zigzag, with a leading zero when it starts downwards."""
    if not ups:
        return Composition((0,))
    parts = [] if ups[0] else [0]
    run, cur = 0, ups[0]
    for u in ups:
        if u == cur:
            run += 1
        else:
            parts.append(run)
            run, cur = 1, u
    parts.append(run)
    return Composition(tuple(parts))


def crossing_relations(t: PolygonTriangulation, g) -> List[bool]:
    """Entry i is True when crossing i lies below crossing i+1.

    Consecutive crossed diagonals share an endpoint; crossing i is above
    crossing i+1 exactly when that endpoint is right of ``g``.
    """
    g = Arc.of(g).check(t.n)
    seq = crossed_diagonals(t, g)
    ups = []
    for d1, d2 in zip(seq, seq[1:]):
        shared = set(d1) & set(d2)
        (s,) = shared
        ups.append(not is_right_of(t.n, g, s))
    return ups


def fence_poset_of_arc(t: PolygonTriangulation, g) -> ArcPosetResult:
    g = Arc.of(g).check(t.n)
    seq = crossed_diagonals(t, g)
    if not seq:
        raise NoCrossings(f"{g.pair} crosses no diagonal of the triangulation")
    alpha = directions_to_composition(crossing_relations(t, g))
    return ArcPosetResult(alpha, fence(alpha), len(seq))


def verify_expansion(t: PolygonTriangulation, g) -> bool:
    """Order-ideal count of the arc's fence poset against the mutation result."""
    g = Arc.of(g).check(t.n)
    if g.pair in t:
        return f_polynomial_q(t, g) == 1
    return rank_sequence(fence_poset_of_arc(t, g).poset) == f_polynomial_q(t, g)
