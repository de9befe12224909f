"""Golden instances with their published values.

Every fixture carries a ``citation`` naming the figure or table it comes
from.  Vertex labels follow the drawing order of each figure, counted
counterclockwise.  A fixture whose published value cannot be reproduced from
the drawn data carries an ``erratum`` note instead of a silently edited value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .cluster import c_polynomial
from .poset import circular_fence, rank_sequence
from .surface import LamCurve, MultiLamination, PolygonTriangulation, shear_vector, signed_adjacency

# Octagon with vertices numbered counterclockwise; the published diagonal labels 1..5
# are listed in order, so they fan out from vertex 2 and then vertex 3.
OCTAGON = PolygonTriangulation(8, [(2, 8), (2, 7), (2, 6), (3, 6), (3, 5)])
OCTAGON_LABELS = [(2, 8), (2, 7), (2, 6), (3, 6), (3, 5)]
OCTAGON_CURVE = LamCurve.between(8, 4)
OCTAGON_ARC = (1, 4)

NONAGON = PolygonTriangulation(9, [(2, 9), (3, 9), (3, 8), (4, 8), (5, 8), (6, 8)])
NONAGON_LAM = MultiLamination.single(LamCurve.between(1, 4))
NONAGON_ARC = (1, 7)

DODECAGON = PolygonTriangulation(12, [(1, 10), (10, 12), (2, 10), (2, 9), (2, 8), (3, 8), (3, 7), (4, 7), (5, 7)])
DODECAGON_ARC = (6, 11)
DODECAGON_FIGURE_LAM = MultiLamination.single(LamCurve.between(11, 5))
# two isotopic copies between edges 10 and 6 are nested, so their slots are opposite
TABLE_LEFT_LAM = MultiLamination([
    [LamCurve.between(10, 6, 0, 1)],
    [LamCurve.between(10, 6, 1, 0)],
    [LamCurve.between(11, 5)],
    [LamCurve.between(12, 4)],
])
TABLE_RIGHT_LAM = MultiLamination([
    [LamCurve.between(10, 6)],
    [LamCurve.between(11, 5)],
    [LamCurve.between(12, 4)],
])


@dataclass
class Fixture:
    name: str
    citation: str
    expected: Any
    compute: Callable[[], Any]
    erratum: Optional[str] = None
    input: Dict[str, Any] = field(default_factory=dict)

    def run(self) -> dict:
        actual = self.compute()
        ok = actual == self.expected
        status = "pass" if ok else ("erratum" if self.erratum else "fail")
        out = {"fixture": self.name, "status": status, "expected": self.expected, "actual": actual,
               "citation": self.citation}
        if self.erratum:
            out["erratum"] = self.erratum
        return out


def cpoly_input(t: PolygonTriangulation, ml: MultiLamination, arc) -> dict:
    return {"triangulation": t.to_json(), "laminations": ml.to_json(), "arc": list(arc)}


def _c(t, ml, arc) -> List[int]:
    return c_polynomial(t, ml, arc).to_list()


FIXTURES: List[Fixture] = [
    Fixture(
        "octagon_signed_adjacency",
        "Figure 'matrix_example' and the displayed signed adjacency matrix",
        [[0, -1, 0, 0, 0], [1, 0, -1, 0, 0], [0, 1, 0, 1, 0], [0, 0, -1, 0, -1], [0, 0, 0, 1, 0]],
        lambda: signed_adjacency(OCTAGON, OCTAGON_LABELS),
        input={"triangulation": OCTAGON.to_json(), "labels": [list(d) for d in OCTAGON_LABELS]},
    ),
    Fixture(
        "octagon_lamination_row",
        "Figure 'lamination' and the bottom row of the displayed extended matrix",
        [-1, 0, 1, -1, 1],
        lambda: shear_vector(OCTAGON, [OCTAGON_CURVE], OCTAGON_LABELS),
        input={"triangulation": OCTAGON.to_json(), "curve": OCTAGON_CURVE.to_json()},
    ),
    Fixture(
        "circular_exceptional_k2",
        "Circular fence display of the exceptional rank sequence (1,2,...,k+1,k,k+1,k,...,2,1) with k = 2",
        [1, 2, 3, 2, 3, 2, 1],
        lambda: rank_sequence(circular_fence((1, 2, 1, 2))).to_list(),
        input={"alpha": [1, 2, 1, 2]},
    ),
    Fixture(
        "circular_exceptional_k1",
        "Circular fence display of the exceptional rank sequence with k = 1",
        [1, 2, 1, 2, 1],
        lambda: rank_sequence(circular_fence((1, 1, 1, 1))).to_list(),
        input={"alpha": [1, 1, 1, 1]},
    ),
    Fixture(
        "nonagon_counterexample",
        "Figure 'Counterexample of ineqA in single lamination', c = q^2 + 6q + 7",
        [7, 6, 1],
        lambda: _c(NONAGON, NONAGON_LAM, NONAGON_ARC),
        input=cpoly_input(NONAGON, NONAGON_LAM, NONAGON_ARC),
    ),
    Fixture(
        "single_lam_figure",
        "Figure 'single_lam' and the polynomial printed beneath it",
        [2, 5, 9, 12, 11, 10, 6, 4, 2],
        lambda: _c(DODECAGON, DODECAGON_FIGURE_LAM, DODECAGON_ARC),
        erratum=(
            "the drawn curve joins the midpoints of edges (11,12) and (5,6); no single curve on this "
            "triangulation gives the printed polynomial, which is the value of the three-curve "
            "lamination on the right of the non-examples table"
        ),
        input=cpoly_input(DODECAGON, DODECAGON_FIGURE_LAM, DODECAGON_ARC),
    ),
    Fixture(
        "table_left_repeated_curve",
        "Table 'Non-examples of unimodality and log-concave', left column",
        [2, 2, 6, 6, 12, 9, 8, 4, 6, 4, 2],
        lambda: _c(DODECAGON, TABLE_LEFT_LAM, DODECAGON_ARC),
        input=cpoly_input(DODECAGON, TABLE_LEFT_LAM, DODECAGON_ARC),
    ),
    Fixture(
        "table_right_three_curves",
        "Table 'Non-examples of unimodality and log-concave', right column",
        [2, 5, 9, 12, 11, 10, 6, 4, 2],
        lambda: _c(DODECAGON, TABLE_RIGHT_LAM, DODECAGON_ARC),
        input=cpoly_input(DODECAGON, TABLE_RIGHT_LAM, DODECAGON_ARC),
    ),
]

CPOLY_FIXTURES = {f.name: f for f in FIXTURES if "arc" in f.input}


def fixture(name: str) -> Fixture:
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)
