"""Fence-type posets, order-ideal counting and the surgery used in the notched decompositions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .polyseq import IntPoly


class PosetError(ValueError):
    """Base class for construction errors."""


class InvalidComposition(PosetError):
    pass


class IndexOutOfRange(PosetError):
    pass


class CycleCreated(PosetError):
    pass


class UnknownElement(PosetError, KeyError):
    pass


class UnknownCover(PosetError, KeyError):
    pass


class TooLarge(PosetError):
    pass


# --- compositions ------------------------------------------------------------


@dataclass(frozen=True)
class Composition:
    """``(a_1, ..., a_s)`` with ``a_1 >= 0`` and every later part ``>= 1``."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidComposition("a composition needs at least one part")
        if parts[0] < 0 or any(p < 1 for p in parts[1:]):
            raise InvalidComposition(f"invalid composition {parts}")

    @classmethod
    def parse(cls, text: Union[str, Sequence[int], "Composition"]) -> "Composition":
        if isinstance(text, Composition):
            return text
        if isinstance(text, str):
            text = text.strip()
            try:
                if text.startswith("["):
                    parts = json.loads(text)
                else:
                    parts = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
            except ValueError as exc:
                raise InvalidComposition(f"cannot parse composition {text!r}") from exc
            return cls(tuple(parts))
        return cls(tuple(text))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __iter__(self):
        return iter(self.parts)

    def directions(self) -> List[bool]:
        """Edge directions of the zigzag: entry k is True iff x_{k+1} < x_{k+2}."""
        out = []
        for r, part in enumerate(self.parts):
            out.extend([r % 2 == 0] * part)
        return out

    def to_list(self) -> list:
        return list(self.parts)


def compositions(n: int, allow_zero_first: bool = True, start: int = 0, step: int = 1) -> Iterator[Composition]:
    """All compositions of ``n`` in a fixed order; optionally also those with a leading zero.

    ``start`` and ``step`` select every ``step``-th cut pattern from ``start``,
    which splits the enumeration into disjoint slices for parallel work.
    """
    if n < 0:
        return
    if n == 0:
        if start == 0:
            yield Composition((0,))
        return
    for mask in range(start, 1 << (n - 1), step):
        parts, run = [], 1
        for k in range(n - 1):
            if mask >> k & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))
        if allow_zero_first:
            yield Composition((0,) + tuple(parts))


# --- finite posets -----------------------------------------------------------

Element = Union[int, str]


def _bit_count(x: int) -> int:
    return bin(x).count("1")


class FinitePoset:
    """A finite poset on ``0..size-1`` given by a set of generating relations ``a < b``.

    ``covers`` is the transitive reduction of the generated order.  The
    generating set is kept separately so that removing one stated relation
    leaves every other stated relation in place.
    """

    __slots__ = ("labels", "relations", "_down", "_up", "_covers", "_index")

    def __init__(self, labels: Sequence[str], relations: Iterable[Tuple[int, int]] = ()):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise PosetError("duplicate element labels")
        size = len(self.labels)
        rels = set()
        for a, b in relations:
            if not (0 <= a < size and 0 <= b < size):
                raise UnknownElement(f"relation ({a}, {b}) out of range")
            if a == b:
                raise CycleCreated(f"relation {self.labels[a]} < {self.labels[a]}")
            rels.add((a, b))
        self.relations: FrozenSet[Tuple[int, int]] = frozenset(rels)
        self._index = {lab: k for k, lab in enumerate(self.labels)}
        self._down, self._up = self._closure()
        self._covers = None

    def _closure(self):
        size = len(self.labels)
        preds = [[] for _ in range(size)]
        succs = [[] for _ in range(size)]
        indeg = [0] * size
        for a, b in self.relations:
            preds[b].append(a)
            succs[a].append(b)
            indeg[b] += 1
        order = [k for k in range(size) if indeg[k] == 0]
        for k in order:
            for b in succs[k]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    order.append(b)
        if len(order) != size:
            raise CycleCreated("relations contain a cycle")
        down = [0] * size
        for k in order:
            m = 1 << k
            for a in preds[k]:
                m |= down[a]
            down[k] = m
        up = [0] * size
        for k in reversed(order):
            m = 1 << k
            for b in succs[k]:
                m |= up[b]
            up[k] = m
        return down, up

    # basic accessors

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def index(self, e: Element) -> int:
        if isinstance(e, int):
            if 0 <= e < self.size:
                return e
            raise UnknownElement(e)
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElement(e) from None

    def __contains__(self, e) -> bool:
        if isinstance(e, int):
            return 0 <= e < self.size
        return e in self._index

    def down_mask(self, e: Element) -> int:
        """Bitmask of the principal down-set (including the element)."""
        return self._down[self.index(e)]

    def up_mask(self, e: Element) -> int:
        return self._up[self.index(e)]

    def less(self, a: Element, b: Element) -> bool:
        a, b = self.index(a), self.index(b)
        return a != b and bool(self._down[b] >> a & 1)

    @property
    def covers(self) -> FrozenSet[Tuple[int, int]]:
        if self._covers is None:
            cov = set()
            for b in range(self.size):
                strict = self._down[b] & ~(1 << b)
                for a in _bits(strict):
                    # a < b is a cover iff no c with a < c < b
                    between = strict & self._up[a] & ~(1 << a)
                    if not between:
                        cov.add((a, b))
            self._covers = frozenset(cov)
        return self._covers

    def labelled_covers(self) -> List[Tuple[str, str]]:
        return sorted((self.labels[a], self.labels[b]) for a, b in self.covers)

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and self.covers == other.covers

    def __hash__(self):
        return hash((self.labels, self.covers))

    def __repr__(self):
        return f"FinitePoset({list(self.labels)}, covers={self.labelled_covers()})"

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.labels, [(b, a) for a, b in self.relations])

    def to_json(self) -> dict:
        return {"elements": list(self.labels), "covers": [list(c) for c in self.labelled_covers()]}

    @classmethod
    def from_json(cls, data: dict) -> "FinitePoset":
        labels = [str(x) for x in data["elements"]]
        idx = {lab: k for k, lab in enumerate(labels)}
        try:
            rels = [(idx[str(a)], idx[str(b)]) for a, b in data["covers"]]
        except KeyError as exc:
            raise UnknownElement(exc.args[0]) from None
        return cls(labels, rels)

    # constructors for generic shapes

    @classmethod
    def chain(cls, k: int, prefix: str = "c") -> "FinitePoset":
        return cls([f"{prefix}{i + 1}" for i in range(k)], [(i, i + 1) for i in range(k - 1)])

    @classmethod
    def antichain(cls, k: int, prefix: str = "a") -> "FinitePoset":
        return cls([f"{prefix}{i + 1}" for i in range(k)])

    def induced(self, keep_mask: int) -> "FinitePoset":
        """Induced subposet on the elements in ``keep_mask``, in original order."""
        keep = [k for k in range(self.size) if keep_mask >> k & 1]
        pos = {k: i for i, k in enumerate(keep)}
        rels = [(pos[a], pos[b]) for a, b in self.covers_of_mask(keep_mask)]
        return FinitePoset([self.labels[k] for k in keep], rels)

    def covers_of_mask(self, mask: int) -> List[Tuple[int, int]]:
        out = []
        for b in _bits(mask):
            strict = self._down[b] & mask & ~(1 << b)
            for a in _bits(strict):
                if not (strict & self._up[a] & ~(1 << a)):
                    out.append((a, b))
        return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- fence constructions -----------------------------------------------------


def _fence_relations(alpha: Composition) -> List[Tuple[int, int]]:
    rels = []
    for k, asc in enumerate(alpha.directions()):
        rels.append((k, k + 1) if asc else (k + 1, k))
    return rels


def _x_labels(count: int) -> List[str]:
    return [f"x{i}" for i in range(1, count + 1)]


def fence(alpha) -> FinitePoset:
    """Zigzag poset on x1..x_{n+1}: ascending for a_1 steps, then descending for a_2, ..."""
    alpha = Composition.parse(alpha)
    return FinitePoset(_x_labels(alpha.n + 1), _fence_relations(alpha))


def ij_fence(alpha, i: int, j: int) -> FinitePoset:
    """Fence of ``alpha`` with the extra relation x_i < x_j (1-based indices)."""
    alpha = Composition.parse(alpha)
    return _add_relations(fence(alpha), alpha, [(i, j)])


def _add_relations(base: FinitePoset, alpha: Composition, pairs) -> FinitePoset:
    top = alpha.n + 1
    rels = set(base.relations)
    for i, j in pairs:
        if not (1 <= i <= top and 1 <= j <= top):
            raise IndexOutOfRange(f"index pair ({i}, {j}) outside [1, {top}]")
        if i == j:
            raise CycleCreated(f"relation x{i} < x{i}")
        rels.add((i - 1, j - 1))
    try:
        return FinitePoset(base.labels, rels)
    except CycleCreated:
        raise CycleCreated(f"relations {pairs} contradict the fence {alpha.parts}") from None


def notch_pair(alpha, which: str) -> Tuple[int, int]:
    """The (i, j) pair of a singly notched fence; ``which`` is ``first`` or ``last``."""
    alpha = Composition.parse(alpha)
    n, s = alpha.n, alpha.s
    if which == "first":
        if alpha[0] != 0:
            pair = (1, alpha[0] + 2)
        else:
            if s < 2:
                raise IndexOutOfRange(f"{alpha.parts} has no second part for the first notch")
            pair = (alpha[1] + 2, 1)
    elif which == "last":
        last = alpha[s - 1]
        pair = (n + 1, n - last) if s % 2 == 0 else (n - last, n + 1)
    else:
        raise ValueError(f"unknown notch position {which!r}")
    if not all(1 <= k <= n + 1 for k in pair):
        raise IndexOutOfRange(f"notch pair {pair} outside [1, {n + 1}] for {alpha.parts}")
    return pair


def notched(alpha, which: str = "last") -> FinitePoset:
    """Singly (``first``/``last``) or doubly (``both``) notched fence poset."""
    alpha = Composition.parse(alpha)
    if which == "both":
        pairs = [notch_pair(alpha, "first"), notch_pair(alpha, "last")]
    else:
        pairs = [notch_pair(alpha, which)]
    return _add_relations(fence(alpha), alpha, pairs)


def circular_fence(alpha) -> FinitePoset:
    """Fence with x_{n+1} identified with x_1; needs an even number of parts."""
    alpha = Composition.parse(alpha)
    n = alpha.n
    if alpha.s % 2 or n < 2:
        raise InvalidComposition(f"circular fence needs an even number of parts and n >= 2, got {alpha.parts}")
    rels = []
    for k, asc in enumerate(alpha.directions()):
        a, b = k, (k + 1) % n
        rels.append((a, b) if asc else (b, a))
    try:
        return FinitePoset(_x_labels(n), rels)
    except CycleCreated:
        raise InvalidComposition(f"circular fence of {alpha.parts} is a cycle") from None


# --- rank polynomials --------------------------------------------------------

MAX_ELEMENTS = 40


def _padd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for k, c in enumerate(b):
        out[k] += c
    return out


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def rank_sequence(p: FinitePoset, max_elements: int = MAX_ELEMENTS) -> IntPoly:
    """Generating function of order ideals by size.

    Splits on an element z: ideals avoiding z are ideals of P minus the
    up-set of z, and ideals containing z are the down-set of z joined with an
    ideal of P minus that down-set.  Disconnected pieces multiply.
    """
    if p.size > max_elements:
        raise TooLarge(f"{p.size} elements exceeds the bound {max_elements}")
    down, up = p._down, p._up
    comparable = [down[k] | up[k] for k in range(p.size)]
    memo: Dict[int, list] = {0: [1]}

    def component(mask: int) -> int:
        seed = mask & -mask
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for k in _bits(frontier):
                nxt |= comparable[k]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def count(mask: int) -> list:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comp = component(mask)
        if comp != mask:
            res = _pmul(count(comp), count(mask & ~comp))
        else:
            members = list(_bits(mask))
            z = members[len(members) // 2]
            avoid = count(mask & ~up[z])
            dz = down[z] & mask
            contain = count(mask & ~dz)
            res = _padd(avoid, [0] * _bit_count(dz) + contain)
        memo[mask] = res
        return res

    return IntPoly(count((1 << p.size) - 1))


def rank_sequence_fence_fast(alpha) -> IntPoly:
    """Rank polynomial of ``fence(alpha)`` by a left-to-right in/out recurrence."""
    alpha = Composition.parse(alpha)
    inside, outside = [0, 1], [1]
    for asc in alpha.directions():
        if asc:
            # next above current: next in the ideal forces current in it
            inside, outside = [0] + inside, _padd(inside, outside)
        else:
            inside = [0] + _padd(inside, outside)
    return IntPoly(_padd(inside, outside))


# --- surgery -----------------------------------------------------------------


def _fresh_label(p: FinitePoset, label: str) -> str:
    if label in p:
        raise PosetError(f"label {label!r} already present")
    return label


def add_above(p: FinitePoset, members: Iterable[Element], label: str) -> FinitePoset:
    """New element lying above every element of ``members``."""
    label = _fresh_label(p, label)
    new = p.size
    rels = set(p.relations) | {(p.index(m), new) for m in members}
    return FinitePoset(p.labels + (label,), rels)


def add_below(p: FinitePoset, members: Iterable[Element], label: str) -> FinitePoset:
    label = _fresh_label(p, label)
    new = p.size
    rels = set(p.relations) | {(new, p.index(m)) for m in members}
    return FinitePoset(p.labels + (label,), rels)


def add_relation(p: FinitePoset, a: Element, b: Element) -> FinitePoset:
    """Impose ``a < b``."""
    a, b = p.index(a), p.index(b)
    if a == b or p.less(b, a):
        raise CycleCreated(f"{p.labels[b]} is already below {p.labels[a]}")
    return FinitePoset(p.labels, set(p.relations) | {(a, b)})


def remove_cover(p: FinitePoset, a: Element, b: Element) -> FinitePoset:
    """Drop the stated relation ``a < b``; all other stated relations stay."""
    a, b = p.index(a), p.index(b)
    if (a, b) not in p.relations:
        raise UnknownCover(f"{p.labels[a]} < {p.labels[b]} is not a stated relation")
    return FinitePoset(p.labels, p.relations - {(a, b)})


def delete_mask(p: FinitePoset, mask: int) -> FinitePoset:
    return p.induced(((1 << p.size) - 1) & ~mask)


def delete_up_set(p: FinitePoset, z: Element) -> FinitePoset:
    """Remove z and everything above it."""
    return delete_mask(p, p.up_mask(z))


def delete_down_set(p: FinitePoset, z: Element) -> FinitePoset:
    return delete_mask(p, p.down_mask(z))


def delete_element(p: FinitePoset, z: Element) -> FinitePoset:
    return delete_mask(p, 1 << p.index(z))


def merge(p: FinitePoset, a: Element, b: Element, label: str) -> FinitePoset:
    """Identify ``a`` and ``b`` into one element carrying the union of their relations."""
    a, b = p.index(a), p.index(b)
    if a == b:
        raise PosetError("cannot merge an element with itself")
    if label in p and p.index(label) not in (a, b):
        raise PosetError(f"label {label!r} already present")
    keep = [k for k in range(p.size) if k != b]
    pos = {k: i for i, k in enumerate(keep)}
    pos[b] = pos[a]
    labels = [p.labels[k] for k in keep]
    labels[pos[a]] = label
    rels = set()
    for x, y in p.relations:
        x, y = pos[x], pos[y]
        if x == y:
            raise CycleCreated("merged elements are comparable")
        rels.add((x, y))
    return FinitePoset(labels, rels)


_SURGERY = {
    "add_above": add_above,
    "add_below": add_below,
    "add_relation": add_relation,
    "remove_cover": remove_cover,
    "delete_up_set": delete_up_set,
    "delete_down_set": delete_down_set,
    "delete_element": delete_element,
    "merge": merge,
}


def surgery(p: FinitePoset, op: str, *args) -> FinitePoset:
    """Dispatch one named surgery operation, e.g. ``surgery(p, "add_above", ["x1"], "xT")``."""
    try:
        fn = _SURGERY[op]
    except KeyError:
        raise ValueError(f"unknown surgery operation {op!r}") from None
    return fn(p, *args)


# --- notched decompositions --------------------------------------------------


def union(p1: FinitePoset, p2: FinitePoset) -> FinitePoset:
    """Union of two posets over shared labels; each keeps its own order."""
    labels = list(p1.labels) + [lab for lab in p2.labels if lab not in p1]
    idx = {lab: k for k, lab in enumerate(labels)}
    rels = set()
    for p in (p1, p2):
        rels.update((idx[p.labels[a]], idx[p.labels[b]]) for a, b in p.covers)
    return FinitePoset(labels, rels)


def _close_cycle(base: FinitePoset, anchor: str, anchor_below: bool, p_index: int,
                 alpha: Composition, label: str) -> FinitePoset:
    # Fresh vertex next to the anchor, fresh x_{P+1} next to x_P with the fence
    # direction of alpha, then identify the two fresh vertices.
    p = base
    if anchor in p:
        p = add_above(p, [anchor], "_a") if anchor_below else add_below(p, [anchor], "_a")
    else:
        p = FinitePoset(p.labels + ("_a",), p.relations)
    xp = f"x{p_index}"
    if p_index >= 1 and xp in p:
        asc = alpha.directions()[p_index - 1]
        new = p.size
        rel = (p.index(xp), new) if asc else (new, p.index(xp))
        p = FinitePoset(p.labels + ("_b",), set(p.relations) | {rel})
        return merge(p, "_a", "_b", label)
    return FinitePoset([label if lab == "_a" else lab for lab in p.labels], p.relations)


def order_dual_composition(alpha) -> Composition:
    """Composition whose last-notched fence is the order dual of that of ``alpha`` (odd part count).

    Flipping every relation of a fence with an odd number of parts turns the
    first run into a descending one, so a leading zero is added or removed.
    """
    alpha = Composition.parse(alpha)
    if alpha[0] > 0:
        return Composition((0,) + alpha.parts)
    if alpha.s < 2:
        raise InvalidComposition(f"{alpha.parts} has no dual form")
    return Composition(alpha.parts[1:])


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of rebuilding the auxiliary posets of a last-notched fence.

    ``checks`` maps each identity to whether it holds exactly.  The top and
    bottom constructions are only well defined when their hypotheses hold
    (``top_domain`` / ``bottom_domain``); outside them the identities are still
    evaluated and reported, never suppressed.
    """

    composition: Composition
    reduced: Composition
    dualized: bool
    top_domain: bool
    bottom_domain: bool
    checks: Dict[str, bool]
    reasons: Tuple[str, ...] = ()

    @property
    def eq1(self) -> bool:
        return self.checks["eq1"]

    @property
    def eq2(self) -> bool:
        return self.checks["eq2"]

    @property
    def in_domain(self) -> bool:
        return self.top_domain and self.bottom_domain

    @property
    def holds(self) -> bool:
        return self.eq1 and self.eq2

    def to_dict(self) -> dict:
        return {
            "alpha": self.composition.to_list(),
            "reduced": self.reduced.to_list(),
            "dualized": self.dualized,
            "top_domain": self.top_domain,
            "bottom_domain": self.bottom_domain,
            "checks": dict(self.checks),
            "reasons": list(self.reasons),
        }


def check_notched_decompositions(alpha) -> DecompositionReport:
    """Rebuild P_T, its relaxation, beta, gamma, delta and the bottom analogues by surgery.

    Works on the last-notched fence.  With an odd number of parts the fence is
    first replaced by its order dual, whose composition has an even number of
    parts; rank polynomials of dual posets are reverses of each other, so the
    identities transfer.
    """
    alpha = Composition.parse(alpha)
    notched(alpha, "last")  # construction errors surface here
    dualized = alpha.s % 2 == 1
    red = order_dual_composition(alpha) if dualized else alpha
    n, a = red.n, red.parts
    last = a[-1]
    q = IntPoly.monomial
    R = rank_sequence
    checks: Dict[str, bool] = {}
    reasons = []

    pn = notched(red, "last")
    r_pn = R(pn)
    if dualized:
        checks["dual"] = r_pn == R(notched(alpha, "last")).reversed(n + 2)
    top, side = f"x{n - last + 1}", f"x{n - last}"
    p_index = n - last - 1

    # top side
    pt = add_above(pn, ["x1", top], "xT")
    d1 = _bit_count(pt.down_mask("xT")) - 1
    beta = delete_down_set(pt, "xT")
    checks["split_top"] = R(pt) == r_pn + q(d1 + 1) * R(beta)
    pt_bar = remove_cover(pt, side, top)
    gamma = delete_mask(pt_bar, pt_bar.up_mask(side) | pt_bar.down_mask(top))
    r_pt_bar = R(pt_bar)
    checks["split_top_bar"] = r_pt_bar == R(pt) + q(last + 1) * R(gamma)
    delta = _close_cycle(union(beta, gamma), "xT", True, p_index, red, "xTt")
    r_delta = R(delta)
    checks["delta"] = r_delta == q(d1 - last) * R(beta) + R(gamma)
    checks["eq1"] = r_pn == r_pt_bar - q(last + 1) * r_delta
    top_domain = p_index >= 1 and "xT" in gamma
    if p_index < 1:
        reasons.append("no vertex x_P with P >= 1 to close delta")
    elif "xT" not in gamma:
        reasons.append("x_T lies above the removed vertex, so gamma loses x_T")

    # bottom side
    pb = add_below(pn, ["x1", f"x{n + 1}"], "xB")
    beta_b = delete_up_set(pb, "xB")
    checks["split_bottom"] = R(pb) == q(1) * r_pn + R(beta_b)
    pb_bar = remove_cover(pb, f"x{n + 1}", side)
    gamma_b = delete_mask(pb_bar, pb_bar.down_mask(side) | pb_bar.up_mask(f"x{n + 1}"))
    r_pb_bar = R(pb_bar)
    e = a[-2] if red.s >= 2 else 0
    checks["split_bottom_bar"] = r_pb_bar == R(pb) + q(e) * R(gamma_b)
    delta_b = _close_cycle(union(beta_b, gamma_b), "xB", False, p_index, red, "xBt")
    r_delta_b = R(delta_b)
    checks["delta_bottom"] = r_delta_b == R(beta_b) + q(e) * R(gamma_b)
    checks["eq2"] = q(1) * r_pn == r_pb_bar - r_delta_b
    bottom_domain = p_index >= 1 and not pb_bar.less("xB", side)
    if p_index < 1:
        reasons.append("no vertex x_Q with Q >= 1 to close delta'")
    elif pb_bar.less("xB", side):
        reasons.append("x_B lies below the removed vertex, so the count below it is not a_{s-1} - 1")

    return DecompositionReport(alpha, red, dualized, top_domain, bottom_domain, checks, tuple(reasons))


def decomposition_domain(alpha) -> bool:
    """Closed form for the compositions whose decomposition hypotheses hold.

    After reducing to an even part count, the constructions break down exactly
    when the reduced composition has two parts or looks like ``(0, a, 1, b)``.
    """
    alpha = Composition.parse(alpha)
    red = order_dual_composition(alpha) if alpha.s % 2 else alpha
    if red.s == 2:
        return False
    if red.s == 4 and red[0] == 0 and red[2] == 1:
        return False
    return True
