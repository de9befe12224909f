"""Rank polynomials of fence posets and c-polynomials of arcs in triangulated polygons."""

from .polyseq import IntPoly, SeqReport, seq_report
from .poset import (
    Composition,
    FinitePoset,
    check_notched_decompositions,
    circular_fence,
    fence,
    ij_fence,
    notched,
    rank_sequence,
    rank_sequence_fence_fast,
)
from .surface import Arc, LamCurve, MultiLamination, PolygonTriangulation
from .cluster import ExtendedSeed, c_polynomial, f_polynomial_q, mutate, seed_from
from .arcposet import fence_poset_of_arc, verify_expansion

__version__ = "0.1.0"
