"""Circulant matrices in the max-times semiring and their closed-form spectra.

A circulant is determined by its defining row (a_0, ..., a_{n-1}); entry
(i, j) of the expanded matrix is a_t for t = (j - i) mod n.  For circulants
the greatest eigenvalue is simply the largest defining entry, the critical
digraph splits into gcd-determined isomorphic components, and the ultimate
period of matrix powers is given by explicit gcd formulas.  The gcd formulas
are evaluated in three equivalent forms and cross-checked against the
graph-computed cyclicity on every call; a disagreement is an implementation
bug and raises ``InternalError``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import DimensionMismatch, InternalError, MaxMatrix, ScalarLike, as_scalar
from .digraph import digraph_cyclicity, threshold_digraph


@dataclass(frozen=True)
class Circulant:
    """Circulant matrix, stored as its defining row."""

    row: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.row) < 1:
            raise ValueError("circulant needs at least one defining entry")

    @classmethod
    def of(cls, values: Iterable[ScalarLike]) -> "Circulant":
        return cls(tuple(as_scalar(v) for v in values))

    @classmethod
    def identity(cls, n: int) -> "Circulant":
        return cls.of([1] + [0] * (n - 1))

    @property
    def n(self) -> int:
        return len(self.row)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.row)

    def __repr__(self) -> str:
        return "Circulant(" + ", ".join(str(v) for v in self.row) + ")"


def expand(c: Circulant) -> MaxMatrix:
    """The full n-by-n matrix with entry (i,j) equal to row[(j-i) mod n]."""
    n = c.n
    return MaxMatrix(
        tuple(tuple(c.row[(j - i) % n] for j in range(n)) for i in range(n))
    )


def circulant_row_of(a: MaxMatrix) -> tuple[Fraction, ...] | None:
    """The defining row if ``a`` is circulant, else None."""
    n = a.n
    row = a.rows[0]
    for i in range(1, n):
        for j in range(n):
            if a.rows[i][j] != row[(j - i) % n]:
                return None
    return row


def circ_mul(c: Circulant, d: Circulant) -> Circulant:
    """Product of circulants, computed directly on defining rows in O(n^2)."""
    if c.n != d.n:
        raise DimensionMismatch(f"circulant sizes differ: {c.n} vs {d.n}")
    n = c.n
    a, b = c.row, d.row
    return Circulant(tuple(max(a[i] * b[(k - i) % n] for i in range(n)) for k in range(n)))


def circ_power(c: Circulant, t: int) -> Circulant:
    """t-th power on defining rows by repeated squaring (t = 0 gives identity)."""
    if t < 0:
        raise ValueError("exponent must be nonnegative")
    result = Circulant.identity(c.n)
    base = c
    e = t
    while e > 0:
        if e & 1:
            result = circ_mul(result, base)
        e >>= 1
        if e:
            base = circ_mul(base, base)
    return result


def circ_lambda(c: Circulant) -> Fraction:
    """Greatest eigenvalue of a circulant: the maximum of its defining row."""
    return max(c.row)


@dataclass(frozen=True)
class CircSpectral:
    """Closed-form spectral data of a nonzero circulant."""

    eigenvalue: Fraction
    critical_offsets: tuple[int, ...]  # decreasing offsets t >= 1 with a_t maximal
    diagonal_is_maximal: bool  # a_0 attains the maximum
    component_count: int
    components: tuple[tuple[int, ...], ...]
    period: int
    period_formulas: tuple[int, int, int] | None  # None when the period is 1 by a_0


def _period_formulas(n: int, ps: tuple[int, ...]) -> tuple[int, int, int]:
    """The three equivalent gcd expressions for the cyclicity, evaluated separately.

    ``ps`` is the decreasing tuple of offsets attaining the maximum; requires
    the diagonal entry to be non-maximal (otherwise the period is 1).
    """
    p1 = ps[0]
    base = n // math.gcd(n, p1)
    f1 = base
    for pk in ps[1:]:
        f1 = math.gcd(f1, (p1 - pk) // math.gcd(p1, pk))
    f2 = base
    for a, b in zip(ps, ps[1:]):
        f2 = math.gcd(f2, (a - b) // math.gcd(a, b))
    f3 = base
    g = math.gcd(n, p1)
    for pk in ps[1:]:
        g = math.gcd(g, pk)
        f3 = math.gcd(f3, (p1 - pk) // g)
    return (f1, f2, f3)


def circ_spectral(c: Circulant) -> CircSpectral:
    """Eigenvalue, critical components and ultimate period of a nonzero circulant.

    Component node sets come from the gcd formula; the period is computed by
    all three gcd expressions, which must agree with each other and with the
    cyclicity of the threshold digraph at the eigenvalue.
    """
    if c.is_zero():
        raise ValueError("zero circulant has no critical structure")
    n = c.n
    lam = circ_lambda(c)
    ps = tuple(t for t in range(n - 1, 0, -1) if c.row[t] == lam)
    a0_max = c.row[0] == lam

    if ps:
        m = math.gcd(n, *ps)
    else:
        # Only the diagonal attains the maximum: the critical digraph is the
        # n loops, read as n singleton components.
        m = n
    components = tuple(
        tuple(range(i, n + 1, m)) for i in range(1, m + 1)
    )

    if a0_max:
        period = 1
        formulas: tuple[int, int, int] | None = None
    else:
        formulas = _period_formulas(n, ps)
        if not (formulas[0] == formulas[1] == formulas[2]):
            raise InternalError(f"cyclicity formulas disagree: {formulas} for {c!r}")
        period = formulas[0]

    _, graph_sigma = digraph_cyclicity(threshold_digraph(expand(c), lam))
    if graph_sigma != period:
        raise InternalError(
            f"formula period {period} != graph cyclicity {graph_sigma} for {c!r}"
        )
    return CircSpectral(
        eigenvalue=lam,
        critical_offsets=ps,
        diagonal_is_maximal=a0_max,
        component_count=m,
        components=components,
        period=period,
        period_formulas=formulas,
    )


def circ_critical_components(c: Circulant) -> tuple[tuple[int, ...], ...]:
    """Node sets of the critical components of a nonzero circulant."""
    return circ_spectral(c).components


def circ_period(c: Circulant) -> int:
    """Ultimate period of the power sequence of a nonzero circulant."""
    return circ_spectral(c).period
