"""Seed mutation under the specialization x_i = 1, y_j = q.

Values are polynomials in q.  Each exchange divides exactly by the old value;
an inexact division means the bookkeeping is broken and is raised loudly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .polyseq import IntPoly, poly_exact_div
from .surface import (
    Arc,
    Diagonal,
    MultiLamination,
    PolygonTriangulation,
    SurfaceError,
    canon,
    crossed_diagonals,
    flip,
    flipped_diagonal,
    is_boundary,
    shear_vector,
    signed_adjacency,
)


class ClusterError(ValueError):
    pass


class SeedIndexError(ClusterError, IndexError):
    pass


class NotSingleLamination(ClusterError):
    pass


class TooFewCrossings(ClusterError):
    pass


def _pos(x: int) -> int:
    return x if x > 0 else 0


@dataclass
class ExtendedSeed:
    """Exchange matrix with coefficient rows, specialized values and diagonal labels.

    ``matrix`` has ``width + len(coefficient rows)`` rows and ``width`` columns.
    Index ``i`` of the seed carries diagonal ``labels[i]``.
    """

    n: int
    matrix: List[List[int]]
    values: List[IntPoly]
    labels: List[Diagonal]

    @property
    def width(self) -> int:
        return len(self.labels)

    @property
    def exchange(self) -> List[List[int]]:
        return self.matrix[: self.width]

    @property
    def coefficient_rows(self) -> List[List[int]]:
        return self.matrix[self.width:]

    def copy(self) -> "ExtendedSeed":
        return ExtendedSeed(self.n, [row[:] for row in self.matrix], list(self.values), list(self.labels))

    def triangulation(self) -> PolygonTriangulation:
        return PolygonTriangulation(self.n, self.labels)

    def index_of(self, d) -> int:
        d = canon(*Arc.of(d).pair)
        try:
            return self.labels.index(d)
        except ValueError:
            raise SeedIndexError(f"{d} is not a label of this seed") from None

    def value_of(self, d) -> IntPoly:
        return self.values[self.index_of(d)]

    def mutate_inplace(self, k: int) -> None:
        if not 0 <= k < self.width:
            raise SeedIndexError(f"index {k} outside 0..{self.width - 1}")
        b = self.matrix
        w = self.width
        plus = IntPoly.one()
        minus = IntPoly.one()
        for i in range(w):
            e = b[i][k]
            if e > 0:
                plus = plus * self.values[i] ** e
            elif e < 0:
                minus = minus * self.values[i] ** (-e)
        up = sum(_pos(row[k]) for row in b[w:])
        down = sum(_pos(-row[k]) for row in b[w:])
        new_value = poly_exact_div(plus.shift(up) + minus.shift(down), self.values[k])
        new_label = flipped_diagonal(PolygonTriangulation(self.n, self.labels), self.labels[k])
        # matrix rule applied to every row, coefficient rows included
        old = [row[:] for row in b]
        for i in range(len(b)):
            for j in range(w):
                if i == k or j == k:
                    b[i][j] = -old[i][j]
                else:
                    b[i][j] = old[i][j] + _pos(-old[i][k]) * old[k][j] + old[i][k] * _pos(old[k][j])
        self.values[k] = new_value
        self.labels[k] = new_label


def seed_from(t: PolygonTriangulation, ml: Optional[MultiLamination] = None) -> ExtendedSeed:
    """Seed whose coefficient rows are the shear vectors of the laminations, one row each."""
    ml = ml if ml is not None else MultiLamination(())
    ml.check(t.n)
    rows = signed_adjacency(t)
    rows += [shear_vector(t, lam) for lam in ml.laminations]
    w = len(t.diagonals)
    return ExtendedSeed(t.n, rows, [IntPoly.one()] * w, list(t.diagonals))


def principal_seed(t: PolygonTriangulation) -> ExtendedSeed:
    """Seed with an identity block of coefficient rows."""
    w = len(t.diagonals)
    rows = signed_adjacency(t)
    rows += [[1 if i == j else 0 for j in range(w)] for i in range(w)]
    return ExtendedSeed(t.n, rows, [IntPoly.one()] * w, list(t.diagonals))


def mutate(s: ExtendedSeed, k: Union[int, Sequence[int]]) -> ExtendedSeed:
    """Mutated copy of ``s`` at index ``k`` (0-based) or at the seed label ``k``."""
    out = s.copy()
    idx = k if isinstance(k, int) else out.index_of(k)
    out.mutate_inplace(idx)
    return out


# --- planning ----------------------------------------------------------------


def flip_sequence_to_arc(t: PolygonTriangulation, g, rng: Optional[random.Random] = None) -> List[Diagonal]:
    """Flips after which ``g`` is a diagonal.

    Each flip takes a crossed diagonal whose replacement no longer crosses
    ``g``, so the crossing count drops by one every step.  Without ``rng`` the
    smallest such diagonal is taken; with ``rng`` a random one.
    """
    g = Arc.of(g).check(t.n)
    seq = []
    cur = t
    while True:
        crossed = crossed_diagonals(cur, g)
        if not crossed:
            return seq
        good = sorted(d for d in crossed if not _crosses(flipped_diagonal(cur, d), g.pair))
        d = good[0] if rng is None else rng.choice(good)
        seq.append(d)
        cur = flip(cur, d)


def _crosses(d: Diagonal, g: Diagonal) -> bool:
    (p, q), (r, s) = d, g
    return (p < r < q < s) or (r < p < s < q)


def _run(seed: ExtendedSeed, seq: Sequence[Diagonal]) -> ExtendedSeed:
    for d in seq:
        seed.mutate_inplace(seed.index_of(d))
    return seed


def c_polynomial(t: PolygonTriangulation, ml: Optional[MultiLamination], g,
                 rng: Optional[random.Random] = None) -> IntPoly:
    """Value of the arc ``g`` with all cluster variables 1 and all coefficients q."""
    g = Arc.of(g).check(t.n)
    if g.pair in t:
        return IntPoly.one()
    seed = _run(seed_from(t, ml), flip_sequence_to_arc(t, g, rng))
    return seed.value_of(g.pair)


def f_polynomial_q(t: PolygonTriangulation, g, rng: Optional[random.Random] = None) -> IntPoly:
    """F-polynomial of ``g`` (principal coefficients) with every y_i set to q."""
    g = Arc.of(g).check(t.n)
    if g.pair in t:
        return IntPoly.one()
    seed = _run(principal_seed(t), flip_sequence_to_arc(t, g, rng))
    return seed.value_of(g.pair)


# --- batched evaluation for scans --------------------------------------------


class FlipPlan:
    """Precomputed mutation path to ``g`` sharing the exchange matrices across
    many coefficient rows; used by the exhaustive scans."""

    __slots__ = ("t", "g", "steps", "target")

    def __init__(self, t: PolygonTriangulation, g):
        self.t = t
        self.g = Arc.of(g).check(t.n).pair
        seed = seed_from(t)
        steps = []
        for d in flip_sequence_to_arc(t, self.g):
            k = seed.index_of(d)
            col = [seed.matrix[i][k] for i in range(seed.width)]
            steps.append((k, [i for i, e in enumerate(col) if e > 0], [i for i, e in enumerate(col) if e < 0],
                          list(seed.matrix[k])))
            for i, e in enumerate(col):
                if abs(e) > 1:  # pragma: no cover - polygon exchange matrices have entries in {-1,0,1}
                    raise ClusterError("unexpected exchange entry")
            seed.mutate_inplace(k)
        self.steps = steps
        self.target = seed.index_of(self.g)

    def evaluate(self, rows: Sequence[Sequence[int]]) -> IntPoly:
        """c-polynomial for the given coefficient rows (canonical diagonal order)."""
        rows = [list(r) for r in rows]
        w = len(self.t.diagonals)
        vals: List[list] = [[1] for _ in range(w)]
        for k, pos, neg, bk in self.steps:
            up = sum(_pos(r[k]) for r in rows)
            down = sum(_pos(-r[k]) for r in rows)
            plus = [1]
            for i in pos:
                plus = _lmul(plus, vals[i])
            minus = [1]
            for i in neg:
                minus = _lmul(minus, vals[i])
            num = _ladd([0] * up + plus, [0] * down + minus)
            old = vals[k]
            vals[k] = num if old == [1] else list(poly_exact_div(IntPoly(num), IntPoly(old)).coeffs)
            for r in rows:
                rk = r[k]
                if rk:
                    for j in range(w):
                        if j == k:
                            continue
                        bkj = bk[j]
                        if bkj:
                            r[j] += _pos(-rk) * bkj + rk * _pos(bkj)
                r[k] = -rk
        return IntPoly(vals[self.target])


def _lmul(a: list, b: list) -> list:
    if b == [1]:
        return a
    if a == [1]:
        return b
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ladd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for k, c in enumerate(b):
        out[k] += c
    return out


# --- recurrences along a single lamination -----------------------------------

_ONE, _Q = "1", "q"

# (coefficients for x_{k+1}, coefficients for x_k), each as (on x_prev, on x_h)
CONFIG1_CASES: Tuple[Tuple[Tuple[str, str], Tuple[str, str]], ...] = (
    ((_Q, _ONE), (_ONE, _ONE)),
    ((_ONE, _Q), (_Q, _ONE)),
    ((_ONE, _Q), (_ONE, _ONE)),
    ((_ONE, _ONE), (_Q, _ONE)),
    ((_ONE, _ONE), (_ONE, _Q)),
    ((_ONE, _ONE), (_ONE, _ONE)),
)
CONFIG2_CASES: Tuple[Tuple[Tuple[str, str], Tuple[str, str]], ...] = (
    ((_Q, _ONE), (_ONE, _ONE)),
    ((_ONE, _Q), (_ONE, _Q)),
    ((_ONE, _Q), (_ONE, _ONE)),
    ((_ONE, _ONE), (_Q, _ONE)),
    ((_ONE, _ONE), (_ONE, _Q)),
    ((_ONE, _ONE), (_ONE, _ONE)),
)


@dataclass
class FlipStep:
    """One exchange ``c_k = e * c_{k-1} + f * c_h`` along the crossing strip."""

    k: int
    prev_arc: Diagonal
    h_arc: Diagonal
    h: int  # step that created h_arc; 0 for an original diagonal or boundary edge
    e: str
    f: str
    value: IntPoly


@dataclass
class RecurrenceEntry:
    k: int
    configuration: Optional[int]
    pattern: Tuple[Tuple[str, str], Tuple[str, str]]
    case: Optional[str]

    def to_dict(self) -> dict:
        return {"k": self.k, "configuration": self.configuration,
                "pattern": [list(p) for p in self.pattern], "case": self.case or "NoMatch"}


def flip_steps(t: PolygonTriangulation, ml: MultiLamination, g) -> List[FlipStep]:
    """Flip the crossed diagonals in strip order and record each exchange.

    The new arc at step k runs from g's smaller endpoint ``a`` to the far
    vertex of the k-th quadrilateral; its two sides at ``a`` are the previous
    new arc and the arc called h.
    """
    g = Arc.of(g).check(t.n)
    a = g.a
    strip = crossed_diagonals(t, g)
    seed = seed_from(t, ml)
    created: Dict[Diagonal, int] = {}
    prev_arc: Optional[Diagonal] = None
    steps = []
    for k, d in enumerate(strip, start=1):
        cur = seed.triangulation()
        p, _, r, _ = cur.quadrilateral(d)
        w = [v for v in cur.thirds(p, r) if v != a][0]
        ap, ar = canon(a, p), canon(a, r)
        idx = seed.index_of(d)
        col = {seed.labels[i]: seed.matrix[i][idx] for i in range(seed.width)}

        def term_sign(side: Diagonal, opposite: Diagonal, other: Diagonal, other_opp: Diagonal) -> int:
            for x in (side, opposite):
                if col.get(x):
                    return 1 if col[x] > 0 else -1
            for x in (other, other_opp):
                if col.get(x):
                    return -1 if col[x] > 0 else 1
            raise ClusterError("quadrilateral with four boundary sides")  # pragma: no cover

        sign_ap = term_sign(ap, canon(r, w), ar, canon(p, w))
        coeff = {1: sum(_pos(row[idx]) for row in seed.coefficient_rows),
                 -1: sum(_pos(-row[idx]) for row in seed.coefficient_rows)}
        exp_ap, exp_ar = coeff[sign_ap], coeff[-sign_ap]
        if prev_arc is None:
            # first step: both sides are original, take the side shared with the next diagonal
            nxt = strip[1] if len(strip) > 1 else None
            prev_side = ap if nxt is not None and p in nxt else ar
        else:
            prev_side = prev_arc
            if prev_side not in (ap, ar):  # pragma: no cover - strip flips always keep x_{k-1} adjacent
                raise ClusterError("previous arc is not a side of the quadrilateral")
        h_side = ar if prev_side == ap else ap
        e_exp, f_exp = (exp_ap, exp_ar) if prev_side == ap else (exp_ar, exp_ap)
        seed.mutate_inplace(idx)
        new_arc = canon(a, w)
        created[new_arc] = k
        vals = {lab: v for lab, v in zip(seed.labels, seed.values)}
        value = vals[new_arc]
        c_prev = vals.get(prev_side, IntPoly.one()) if prev_arc is not None else IntPoly.one()
        c_h = vals.get(h_side, IntPoly.one())
        if value != c_prev.shift(e_exp) + c_h.shift(f_exp):  # pragma: no cover - exchange relation
            raise ClusterError(f"step {k} violates its own exchange relation")
        steps.append(FlipStep(k, prev_side, h_side, created.get(h_side, 0),
                              _Q if e_exp else _ONE, _Q if f_exp else _ONE, value))
        prev_arc = new_arc
    return steps


def classify_flip_recurrence(t: PolygonTriangulation, ml: MultiLamination, g) -> List[RecurrenceEntry]:
    """Match consecutive exchanges ``(x_k, x_{k+1})`` against the twelve listed patterns.

    Configuration 1 has h(k+1) = k-1 (the three diagonals zigzag), configuration
    2 has h(k+1) = h(k) (they fan).  Unmatched patterns are reported with
    ``case = None``.
    """
    if len(ml.laminations) != 1 or len(ml.laminations[0]) != 1:
        raise NotSingleLamination("expected one lamination made of one curve")
    g = Arc.of(g).check(t.n)
    if len(crossed_diagonals(t, g)) < 2:
        raise TooFewCrossings(f"{g.pair} crosses fewer than two diagonals")
    steps = flip_steps(t, ml, g)
    out = []
    for i in range(1, len(steps) - 1):
        cur, nxt = steps[i], steps[i + 1]
        k = cur.k
        if nxt.h_arc == cur.prev_arc:
            config, table = 1, CONFIG1_CASES
        elif nxt.h_arc == cur.h_arc:
            config, table = 2, CONFIG2_CASES
        else:  # pragma: no cover - the two sides at a are x_{k-1} and h(k)
            config, table = None, ()
        pattern = ((nxt.e, nxt.f), (cur.e, cur.f))
        case = None
        for j, pat in enumerate(table, start=1):
            if pat == pattern:
                case = f"config{config}.case{j}"
        out.append(RecurrenceEntry(k, config, pattern, case))
    return out


def format_recurrence(entry: RecurrenceEntry) -> str:
    (e1, f1), (e0, f0) = entry.pattern
    other = "x_{k-1}" if entry.configuration == 1 else "x_h"

    def term(c: str, x: str) -> str:
        return x if c == _ONE else f"q*{x}"

    return (f"c(x_{{k+1}}) = {term(e1, 'c(x_k)')} + {term(f1, 'c(' + other + ')')}; "
            f"c(x_k) = {term(e0, 'c(x_{k-1})')} + {term(f0, 'c(x_h)')}")
