"""Ultimate periodicity of normalized matrix powers and vector orbits.

For an admissible matrix A (completely reducible, every component of the
associated digraph having the same positive maximum cycle mean - circulants
always qualify), the sequence (A/lambda)^t is ultimately periodic.  This
module finds the exact transient and period, plus the eventual period of a
single normalized orbit (A/lambda)^t (x) for a starting vector x.

Normalized powers are never materialized when lambda is irrational: with the
cycle-mean class (w, l), the tuple of values A^t[i,j]^l / w^t is an injective
exact-rational fingerprint of (A/lambda)^t, so repetition of fingerprints is
repetition of normalized powers.  Since each power is a deterministic
function of the previous one, the first fingerprint repeat yields the minimal
transient and the minimal period simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circulant import Circulant, circ_period, circulant_row_of
from .core import InternalError, MaxMatrix, MaxVector, mat_mul, mat_vec
from .digraph import (
    _karp_class_in_scc,
    associated_digraph,
    is_completely_reducible,
    pair_eq,
    strongly_connected_components,
)

# Hard stop for repeat detection.  The (n-1)^2+1 transient bound is proved
# for circulants; general admissible matrices can exceed it (the transient
# then depends on the entries, not just n), so the horizon grows on demand
# up to this many powers before concluding the implementation is broken.
HARD_DETECTION_CAP = 20000


@dataclass(frozen=True)
class PeriodicityInfo:
    transient: int
    period: int


def _admissible_lambda_class(a: MaxMatrix) -> tuple[Fraction, int]:
    """Validate the admissibility preconditions; return the cycle-mean class.

    Requires complete reducibility and that every component with a cycle has
    the same maximum cycle mean, which must be positive.
    """
    g = associated_digraph(a)
    if not is_completely_reducible(g):
        raise ValueError("ultimate periodicity not guaranteed: matrix is not completely reducible")
    classes = []
    for comp in strongly_connected_components(g):
        cls = _karp_class_in_scc(a, comp)
        if cls is not None:
            classes.append(cls)
    if not classes:
        raise ValueError("ultimate periodicity not guaranteed: maximum cycle mean is zero")
    first = classes[0]
    for other in classes[1:]:
        if not pair_eq(first, other):
            raise ValueError(
                "ultimate periodicity not guaranteed: components have unequal cycle means"
            )
    return first


def _entries_fingerprint(values: tuple[Fraction, ...], w: Fraction, l: int, t: int) -> tuple:
    if w == 1 and l == 1:
        return values
    scale = w**t
    if l == 1:
        return tuple(v / scale for v in values)
    return tuple((v**l) / scale for v in values)


def _detect_repeat(step, first, w: Fraction, l: int) -> tuple[int, int]:
    """First fingerprint repeat of a deterministically iterated state.

    ``step`` advances the raw state; states are fingerprinted after
    normalization, so a repeat at times (t1, t2) means the normalized states
    coincide, giving transient t1 and period t2 - t1, both minimal.
    """
    seen: dict[tuple, int] = {}
    state = first
    t = 1
    while t <= HARD_DETECTION_CAP:
        key = _entries_fingerprint(state, w, l, t)
        if key in seen:
            return seen[key], t - seen[key]
        seen[key] = t
        state = step(state)
        t += 1
    raise InternalError(f"no repetition within {HARD_DETECTION_CAP} steps")


def transient_and_period(a: MaxMatrix) -> PeriodicityInfo:
    """Minimal transient and ultimate period of the normalized power sequence.

    For circulant input the result is cross-checked against the closed-form
    period and the (n-1)^2+1 transient bound; failure of either check raises
    ``InternalError``.
    """
    w, l = _admissible_lambda_class(a)
    n = a.n
    row = circulant_row_of(a)
    if row is not None:
        # Powers of a circulant are circulants, so iterate on defining rows.
        def step_row(r: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
            return tuple(max(r[i] * row[(k - i) % n] for i in range(n)) for k in range(n))

        transient, period = _detect_repeat(step_row, row, w, l)
    else:
        def step_mat(rows) -> tuple[Fraction, ...]:
            p = mat_mul(MaxMatrix(_unflatten(rows, n)), a)
            return tuple(v for r in p.rows for v in r)

        flat = tuple(v for r in a.rows for v in r)
        transient, period = _detect_repeat(step_mat, flat, w, l)

    if row is not None and any(v > 0 for v in row):
        expected = circ_period(Circulant(row))
        if period != expected:
            raise InternalError(f"power period {period} != circulant formula period {expected}")
        if transient > (n - 1) ** 2 + 1:
            raise InternalError(
                f"circulant transient {transient} exceeds the (n-1)^2+1 bound"
            )
    return PeriodicityInfo(transient=transient, period=period)


def _unflatten(values: tuple[Fraction, ...], n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(values[i * n : (i + 1) * n] for i in range(n))


def orbit_period(a: MaxMatrix, x: MaxVector) -> int:
    """Minimal eventual period of the normalized orbit of ``x`` under ``a``.

    Equals 1 exactly when the orbit of x reaches an eigenvector (or the zero
    vector), i.e. when x lies in the attraction cone of the greatest
    eigenvalue.
    """
    if a.n != x.n:
        raise ValueError(f"matrix size {a.n} vs vector size {x.n}")
    w, l = _admissible_lambda_class(a)

    def step(entries: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        return mat_vec(a, MaxVector(entries)).entries

    _, period = _detect_repeat(step, mat_vec(a, x).entries, w, l)
    return period
