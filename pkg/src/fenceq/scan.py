"""Deterministic exhaustive or sampled scans over posets and polygon instances."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .cluster import FlipPlan
from .polyseq import seq_report
from .poset import (
    Composition,
    PosetError,
    check_notched_decompositions,
    circular_fence,
    compositions,
    notched,
    rank_sequence,
    rank_sequence_fence_fast,
)
from .surface import (
    PolygonTriangulation,
    all_arcs,
    catalan,
    random_triangulation,
    shear_vector,
    single_laminations,
    triangulations,
)

POSET_MODES = ("plain", "notched", "circular", "identities")
SURFACE_MODES = ("single_lam", "log_concavity")
MODES = POSET_MODES + SURFACE_MODES
CONJECTURE_MODES = ("log_concavity",)
DEFAULT_SEED = 20240917


class ScanConfigError(ValueError):
    pass


class EnumerationMismatch(RuntimeError):
    """An enumeration produced the wrong number of objects."""


def default_workers() -> int:
    raw = os.environ.get("FENCEQ_WORKERS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ScanConfigError(f"FENCEQ_WORKERS must be an integer, got {raw!r}") from None
    return 1


@dataclass(frozen=True)
class ScanConfig:
    n_min: int
    n_max: int
    mode: str
    sample_limit: Optional[int] = None
    seed: int = DEFAULT_SEED
    parallelism: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ScanConfigError(f"unknown mode {self.mode!r}; choose from {', '.join(MODES)}")
        floor = 4 if self.mode in SURFACE_MODES else 1
        if self.n_min < floor:
            raise ScanConfigError(f"n_min must be at least {floor} for mode {self.mode}")
        if self.n_max < self.n_min:
            raise ScanConfigError("n_max must be at least n_min")
        if self.sample_limit is not None and self.sample_limit < 1:
            raise ScanConfigError("sample_limit must be at least 1")
        if self.parallelism < 1:
            raise ScanConfigError("parallelism must be at least 1")


@dataclass
class SizeSummary:
    n: int
    instances: int = 0
    violations: int = 0
    extra: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"n": self.n, "instances": self.instances, "violations": self.violations}
        d.update(self.extra)
        return d


@dataclass
class ScanReport:
    config: ScanConfig
    instances_checked: int
    violations: List[dict]
    per_size: List[SizeSummary]
    elapsed: float = 0.0

    @property
    def kind(self) -> str:
        return "conjecture" if self.config.mode in CONJECTURE_MODES else "theorem"

    @property
    def ok(self) -> bool:
        return self.kind == "conjecture" or not self.violations

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "mode": self.config.mode,
            "kind": self.kind,
            "n_min": self.config.n_min,
            "n_max": self.config.n_max,
            "sample_limit": self.config.sample_limit,
            "seed": self.config.seed,
            "instances_checked": self.instances_checked,
            "violation_count": len(self.violations),
            "violations": self.violations,
            "per_size": [s.to_dict() for s in self.per_size],
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


# --- work units --------------------------------------------------------------
# A unit is a plain tuple so it pickles cheaply; its result is
# (n, instances, [(sort_key, violation)], {counter: value}).


def _poset_unit(mode: str, n: int, chunk: int, chunks: int):
    items = compositions(n, start=chunk, step=chunks)
    viol, extra, count = [], {}, 0
    for alpha in items:
        if mode == "plain":
            count += 1
            rep = seq_report(rank_sequence_fence_fast(alpha))
            if not rep.almost_interlacing or (rep.ineq_a and rep.ineq_b) != rep.almost_interlacing:
                viol.append((alpha.parts, {"alpha": alpha.to_list(), "variant": "plain",
                                           "poly": rank_sequence_fence_fast(alpha).to_list(),
                                           "report": rep.to_dict()}))
        elif mode == "notched":
            for which in ("first", "last", "both"):
                try:
                    p = notched(alpha, which)
                except PosetError:
                    continue
                count += 1
                poly = rank_sequence(p)
                rep = seq_report(poly)
                if not rep.almost_interlacing:
                    viol.append(((alpha.parts, which), {"alpha": alpha.to_list(), "variant": which,
                                                        "poly": poly.to_list(), "report": rep.to_dict()}))
        elif mode == "circular":
            # circular fences are enumerated up to rotation: start at a minimum, so a_1 >= 1
            if alpha.s % 2 or alpha[0] == 0:
                continue
            try:
                p = circular_fence(alpha)
            except PosetError:
                continue
            count += 1
            poly = rank_sequence(p)
            rep = seq_report(poly)
            exceptional = is_exceptional_circular(alpha)
            problem = None
            if not rep.symmetric:
                problem = "not symmetric"
            elif not lower_half_increasing(poly.to_list(), alpha.n):
                problem = "r_i > r_j for some i <= j with i + j <= n - 2"
            elif exceptional and poly.to_list() != exceptional_sequence(alpha):
                problem = "exceptional family with unexpected sequence"
            elif not exceptional and not rep.unimodal:
                problem = "not unimodal outside the exceptional family"
            elif exceptional and rep.unimodal:
                problem = "exceptional family is unimodal"
            if exceptional:
                extra["exceptional"] = extra.get("exceptional", 0) + 1
            if problem:
                viol.append((alpha.parts, {"alpha": alpha.to_list(), "variant": "circular", "problem": problem,
                                           "poly": poly.to_list(), "report": rep.to_dict()}))
        elif mode == "identities":
            try:
                rep = check_notched_decompositions(alpha)
            except PosetError:
                continue
            count += 1
            if not rep.in_domain:
                extra["degenerate"] = extra.get("degenerate", 0) + 1
                continue
            if not all(rep.checks.values()):
                viol.append((alpha.parts, rep.to_dict()))
    return n, count, viol, extra


def is_exceptional_circular(alpha: Composition) -> bool:
    p = alpha.parts
    if len(p) != 4:
        return False
    return (p[0] == 1 and p[2] == 1 and p[1] == p[3]) or (p[1] == 1 and p[3] == 1 and p[0] == p[2])


def lower_half_increasing(r: Sequence[int], n: int) -> bool:
    """r_i <= r_j whenever i <= j and i + j <= n - 2."""
    return all(r[i] <= r[j] for i in range(len(r)) for j in range(i, n - 1 - i))


def exceptional_sequence(alpha: Composition) -> List[int]:
    k = alpha.n // 2 - 1
    return list(range(1, k + 2)) + [k, k + 1] + list(range(k, 0, -1))


def _surface_instances(n: int, diagonals: Sequence[Tuple[int, int]], curves, arcs):
    t = PolygonTriangulation(n, diagonals)
    rows = [shear_vector(t, [c]) for c in curves]
    for g in arcs:
        if g in t:
            continue
        plan = FlipPlan(t, g)
        for c, row in zip(curves, rows):
            yield t, g, c, plan.evaluate([row])


def _surface_unit(mode: str, n: int, diagonals, curve_edges, arcs):
    from .surface import LamCurve

    curves = [LamCurve.between(a, b) for a, b in curve_edges]
    viol, count = [], 0
    for t, g, c, poly in _surface_instances(n, diagonals, curves, arcs):
        count += 1
        rep = seq_report(poly)
        bad = not rep.unimodal if mode == "single_lam" else not rep.log_concave
        if bad:
            key = (t.diagonals, g, c.start.edge, c.end.edge)
            viol.append((key, {"triangulation": t.to_json(), "laminations": [[c.to_json()]], "arc": list(g),
                               "poly": poly.to_list(), "report": rep.to_dict()}))
    return n, count, viol, {}


def _sampled_unit(mode: str, n: int, seed: int, start: int, stop: int):
    from .surface import LamCurve

    viol, count = [], 0
    curves = single_laminations(n)
    arcs = all_arcs(n)
    for idx in range(start, stop):
        rng = random.Random(f"{seed}:{n}:{idx}")
        t = random_triangulation(n, rng)
        g = rng.choice([a for a in arcs if a not in t])
        c = rng.choice(curves)
        poly = FlipPlan(t, g).evaluate([shear_vector(t, [c])])
        count += 1
        rep = seq_report(poly)
        bad = not rep.unimodal if mode == "single_lam" else not rep.log_concave
        if bad:
            viol.append(((idx,), {"sample": idx, "triangulation": t.to_json(),
                                  "laminations": [[c.to_json()]], "arc": list(g),
                                  "poly": poly.to_list(), "report": rep.to_dict()}))
    return n, count, viol, {}


def _dispatch(unit):
    kind, args = unit
    if kind == "poset":
        return _poset_unit(*args)
    if kind == "surface":
        return _surface_unit(*args)
    return _sampled_unit(*args)


def _units(cfg: ScanConfig):
    for n in range(cfg.n_min, cfg.n_max + 1):
        if cfg.mode in POSET_MODES:
            chunks = max(1, min(64, 2 ** max(0, n - 8)))
            for c in range(chunks):
                yield ("poset", (cfg.mode, n, c, chunks))
        elif cfg.sample_limit is not None:
            step = 500
            for start in range(0, cfg.sample_limit, step):
                yield ("sampled", (cfg.mode, n, cfg.seed, start, min(cfg.sample_limit, start + step)))
        else:
            ts = list(triangulations(n))
            curves = single_laminations(n)
            arcs = all_arcs(n)
            if len(ts) != catalan(n - 2) or len(curves) != n * (n - 3) // 2 or len(arcs) != n * (n - 3) // 2:
                raise EnumerationMismatch(f"enumeration counts for n={n} are off")
            edges = [(c.start.edge, c.end.edge) for c in curves]
            for t in ts:
                yield ("surface", (cfg.mode, n, t.diagonals, edges, arcs))


def run_scan(cfg: ScanConfig) -> ScanReport:
    """Run every work unit and fold the results in a canonical order.

    The output does not depend on the worker count: violations are sorted by
    instance key and per-size totals are sums.
    """
    t0 = time.perf_counter()
    units = list(_units(cfg))
    if cfg.parallelism > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            results = list(pool.map(_dispatch, units, chunksize=max(1, len(units) // (cfg.parallelism * 8))))
    else:
        results = [_dispatch(u) for u in units]
    sizes: Dict[int, SizeSummary] = {n: SizeSummary(n) for n in range(cfg.n_min, cfg.n_max + 1)}
    keyed = []
    for n, count, viol, extra in results:
        s = sizes[n]
        s.instances += count
        s.violations += len(viol)
        for k, v in extra.items():
            s.extra[k] = s.extra.get(k, 0) + v
        keyed.extend(((n, repr(key)), v) for key, v in viol)
    keyed.sort(key=lambda kv: kv[0])
    per_size = [sizes[n] for n in sorted(sizes)]
    return ScanReport(cfg, sum(s.instances for s in per_size), [v for _, v in keyed], per_size,
                      time.perf_counter() - t0)
