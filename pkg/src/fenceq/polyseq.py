"""Exact integer polynomials in ``q`` and predicates on their coefficient sequences."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union


class InexactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class NegativeCoefficient(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Dense univariate polynomial with unbounded integer coefficients.

    Coefficients are stored in ascending order of degree with trailing zeros
    removed, so the zero polynomial has no coefficients at all.

    >>> IntPoly([1, 1]) * IntPoly([1, 1])
    IntPoly([1, 2, 1])
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)
        self._hash = None

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        if isinstance(other, (list, tuple)):
            return self.coeffs == _trim(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``q**k``."""
        if not self.coeffs or k == 0:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def reversed(self, length: Optional[int] = None) -> "IntPoly":
        """Coefficient reversal ``a_k -> a_{length-1-k}`` (default: full length)."""
        n = len(self.coeffs) if length is None else length
        padded = list(self.coeffs) + [0] * (n - len(self.coeffs))
        return IntPoly(padded[::-1])

    def exact_div(self, den: "IntPoly") -> "IntPoly":
        return poly_exact_div(self, den)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_list(self) -> list:
        return list(self.coeffs)


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    if isinstance(x, (list, tuple)):
        return IntPoly(x)
    raise TypeError(f"cannot use {type(x).__name__} as IntPoly")


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    return _coerce(a) + _coerce(b)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return _coerce(a) * _coerce(b)


def poly_exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Quotient ``num / den``; raises unless the division is exact over the integers."""
    num, den = _coerce(num), _coerce(den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return IntPoly()
    d = den.coeffs
    if len(d) == 1 and d[0] == 1:
        return num
    lead = d[-1]
    rem = list(num.coeffs)
    qlen = len(rem) - len(d) + 1
    if qlen <= 0:
        raise InexactDivision(f"{num} is not divisible by {den}")
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + len(d) - 1]
        if c == 0:
            continue
        if c % lead:
            raise InexactDivision(f"{num} is not divisible by {den}")
        t = c // lead
        quot[k] = t
        for j, dj in enumerate(d):
            rem[k + j] -= t * dj
    if any(rem):
        raise InexactDivision(f"{num} is not divisible by {den}")
    return IntPoly(quot)


# --- sequence predicates -------------------------------------------------------
# All predicates act on the dense list a_0..a_m (m = degree).


def is_unimodal(a: Sequence[int]) -> bool:
    n = len(a)
    k = 0
    while k + 1 < n and a[k] <= a[k + 1]:
        k += 1
    while k + 1 < n and a[k] >= a[k + 1]:
        k += 1
    return k >= n - 1


def is_symmetric(a: Sequence[int]) -> bool:
    return list(a) == list(a)[::-1]


def _interleaved(a: Sequence[int], start_low: bool) -> bool:
    m = len(a) - 1
    lo, hi = 0, m
    order = []
    take_low = start_low
    while lo <= hi:
        if take_low:
            order.append(lo)
            lo += 1
        else:
            order.append(hi)
            hi -= 1
        take_low = not take_low
    return all(a[order[k]] <= a[order[k + 1]] for k in range(len(order) - 1))


def is_top_interlacing(a: Sequence[int]) -> bool:
    """a_0 <= a_m <= a_1 <= a_{m-1} <= ..."""
    return _interleaved(a, True)


def is_bottom_interlacing(a: Sequence[int]) -> bool:
    """a_m <= a_0 <= a_{m-1} <= a_1 <= ..."""
    return _interleaved(a, False)


def satisfies_ineq_a(a: Sequence[int]) -> bool:
    m = len(a) - 1
    for i in range(len(a)):
        j = m - 1 - i
        if i >= j:
            break
        if a[i] > a[j]:
            return False
    for i in range(len(a)):
        j = m - i
        if i + 1 >= j:
            break
        if a[j] > a[i + 1]:
            return False
    return True


def satisfies_ineq_b(a: Sequence[int]) -> bool:
    m = len(a) - 1
    if m < 0:
        return True
    up_to = (m - 1) // 2
    down_from = -((1 - m) // 2) + 1  # ceil((m-1)/2) + 1
    if any(a[k] > a[k + 1] for k in range(0, up_to)):
        return False
    if any(a[k] < a[k + 1] for k in range(max(down_from, 0), m)):
        return False
    return True


def is_log_concave(a: Sequence[int]) -> bool:
    return all(a[i] * a[i] >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1))


def two_peak(a: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Lexicographically smallest ``(i, j)``, ``i < j``, with ``min(a_i, a_j) >= a_k`` for all other k.

    A single-entry sequence reports ``(0, 0)``; an empty one reports ``None``.
    """
    n = len(a)
    if n == 0:
        return None
    if n == 1:
        return (0, 0)
    # the best "other" value only depends on the three largest entries
    top = sorted(range(n), key=lambda k: (-a[k], k))[:3]
    # a qualifying pair has both entries >= the second largest value, so only those are tried
    cand = [k for k in range(n) if a[k] >= a[top[1]]]

    def best_other(i, j):
        for k in top:
            if k != i and k != j:
                return a[k]
        return None

    for x, i in enumerate(cand):
        for j in cand[x + 1:]:
            other = best_other(i, j)
            if other is None or min(a[i], a[j]) >= other:
                return (i, j)
    return None  # pragma: no cover - some pair always qualifies


@dataclass(frozen=True)
class SeqReport:
    unimodal: bool
    symmetric: bool
    top_interlacing: bool
    bottom_interlacing: bool
    ineq_a: bool
    ineq_b: bool
    almost_interlacing: bool
    log_concave: bool
    two_peak: Optional[Tuple[int, int]]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["two_peak"] = list(self.two_peak) if self.two_peak is not None else None
        return d


def seq_report(p: Union[IntPoly, Sequence[int]]) -> SeqReport:
    a = list(p.coeffs) if isinstance(p, IntPoly) else list(_trim(p))
    if any(c < 0 for c in a):
        raise NegativeCoefficient(f"negative coefficient in {a}")
    unimodal = is_unimodal(a)
    ineq_a = satisfies_ineq_a(a)
    return SeqReport(
        unimodal=unimodal,
        symmetric=is_symmetric(a),
        top_interlacing=is_top_interlacing(a),
        bottom_interlacing=is_bottom_interlacing(a),
        ineq_a=ineq_a,
        ineq_b=satisfies_ineq_b(a),
        almost_interlacing=unimodal and ineq_a,
        log_concave=is_log_concave(a),
        two_peak=two_peak(a),
    )
