"""Two-sided max-linear systems and their feasibility under box constraints.

A system is a list of equations, each pairing two coefficient vectors
(l, r) over unknowns x_1..x_n and meaning

    max_j l_j * x_j  ==  max_j r_j * x_j.

Solution sets are max cones: closed under entrywise max and scaling, and
always containing the zero vector.

The solver finds the greatest solution below a given upper bound by a
residuation sweep: lower every coordinate to the largest value that keeps
both sides of every equation at or below the smaller of the two current side
values.  Each sweep is monotone and keeps every solution below the iterate,
so the first fixpoint is the greatest solution.  Over the rationals the
sweep need not terminate (coordinates can shrink geometrically forever), so
two escape hatches exist: a sound collapse test (one round dominated by a
uniform factor < 1 proves the greatest solution is the zero vector) and an
honest iteration cap.  Feasibility decisions fall back to a complete
corner-candidate enumeration at small sizes when the cap is hit.

No polynomial-time claim is made for any of this.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import ONE, ZERO, DimensionMismatch, InternalError, MaxVector, ScalarLike, as_scalar
from .intervals import Box


class IterationCapExceeded(RuntimeError):
    """The residuation sweep did not stabilize within the iteration cap."""


@dataclass(frozen=True)
class TwoSidedSystem:
    """Homogeneous system of two-sided max-linear equations over n unknowns."""

    n: int
    equations: tuple[tuple[MaxVector, MaxVector], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("system needs at least one unknown")
        for lhs, rhs in self.equations:
            if lhs.n != self.n or rhs.n != self.n:
                raise DimensionMismatch("equation width differs from system width")

    @classmethod
    def of(cls, n: int, equations: Iterable[tuple[Iterable, Iterable]]) -> "TwoSidedSystem":
        eqs = tuple((MaxVector.of(l), MaxVector.of(r)) for l, r in equations)
        return cls(n, eqs)


def max_form(n: int, terms: Iterable[tuple[int, ScalarLike]]) -> MaxVector:
    """Coefficient vector from (1-based index, coefficient) terms.

    Repeated indices accumulate by max, mirroring how repeated occurrences of
    one variable inside a max-linear form collapse.
    """
    coeffs = [ZERO] * n
    for idx, value in terms:
        v = as_scalar(value)
        if not (1 <= idx <= n):
            raise ValueError(f"variable index {idx} out of range 1..{n}")
        if v > coeffs[idx - 1]:
            coeffs[idx - 1] = v
    return MaxVector(tuple(coeffs))


def side_value(coeffs: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return max(c * v for c, v in zip(coeffs, x))


def satisfies(system: TwoSidedSystem, x: MaxVector) -> bool:
    """Whether ``x`` solves every equation with exact equality."""
    if x.n != system.n:
        raise DimensionMismatch(f"vector size {x.n} vs system width {system.n}")
    xs = x.entries
    return all(
        side_value(l.entries, xs) == side_value(r.entries, xs) for l, r in system.equations
    )


def concat_systems(systems: Sequence[TwoSidedSystem]) -> TwoSidedSystem:
    if not systems:
        raise ValueError("need at least one system")
    n = systems[0].n
    eqs: list[tuple[MaxVector, MaxVector]] = []
    for s in systems:
        if s.n != n:
            raise DimensionMismatch("systems are over different numbers of unknowns")
        eqs.extend(s.equations)
    return TwoSidedSystem(n, tuple(eqs))


def default_iteration_cap(system: TwoSidedSystem) -> int:
    distinct = {c for l, r in system.equations for c in (*l.entries, *r.entries) if c > 0}
    return max(10 * system.n * max(len(distinct), 1), 60)


def _sweep(eqs, x: list[Fraction]) -> list[Fraction]:
    """One residuation round: cap each side of each equation by the smaller side."""
    new = list(x)
    for l, r in eqs:
        t = min(side_value(l, x), side_value(r, x))
        for coeffs in (l, r):
            for j, c in enumerate(coeffs):
                if c > 0:
                    bound = t / c
                    if bound < new[j]:
                        new[j] = bound
    return new


def _collapsed(prev: Sequence[Fraction], new: Sequence[Fraction]) -> bool:
    """True when new <= c * prev for a single factor c < 1.

    Then iterating the (homogeneous, monotone) sweep from ``prev`` shrinks to
    zero, and every solution below ``prev`` is the zero vector.
    """
    for p, v in zip(prev, new):
        if p == 0:
            if v != 0:
                raise InternalError("residuation sweep increased a zero coordinate")
        elif v >= p:
            return False
    return True


def greatest_solution_leq(
    system: TwoSidedSystem,
    upper: MaxVector,
    iteration_cap: int | None = None,
) -> MaxVector:
    """Greatest solution of the system at or below ``upper`` (possibly zero).

    A "no solution" outcome cannot occur: the system is homogeneous, so the
    zero vector always solves it.  Raises ``IterationCapExceeded`` when the
    sweep fails to stabilize within the cap.
    """
    if upper.n != system.n:
        raise DimensionMismatch(f"upper size {upper.n} vs system width {system.n}")
    if iteration_cap is None:
        iteration_cap = default_iteration_cap(system)
    eqs = [(l.entries, r.entries) for l, r in system.equations]
    if not eqs:
        return upper
    x = list(upper.entries)
    history: list[tuple[Fraction, ...]] = [tuple(x)]
    for _ in range(iteration_cap):
        new = _sweep(eqs, x)
        if new == x:
            result = MaxVector(tuple(x))
            if not satisfies(system, result):
                raise InternalError("stabilized iterate does not solve the system")
            return result
        if any(_collapsed(prev, new) for prev in history):
            return MaxVector.zeros(system.n)
        history.append(tuple(new))
        if len(history) > 24:
            history.pop(0)
        x = new
    raise IterationCapExceeded(f"no stabilization within {iteration_cap} sweeps")


# --- feasibility in a box ----------------------------------------------------


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of a box-constrained feasibility question.

    status is one of 'feasible' (with a witness satisfying every equation and
    every bound, including strict ones), 'infeasible', or
    'unknown_strict_boundary' when the answer hinges on a strict boundary the
    greatest-solution argument cannot decide.
    """

    status: str
    witness: MaxVector | None = None

    @property
    def is_feasible(self) -> bool:
        return self.status == "feasible"


def _finish_feasible(system: TwoSidedSystem, box: Box, witness: MaxVector) -> FeasibilityResult:
    if not satisfies(system, witness):
        raise InternalError("feasibility witness fails an equation")
    if not box.contains(witness):
        raise InternalError("feasibility witness leaves the box")
    return FeasibilityResult("feasible", witness)


def feasible_in_box(system: TwoSidedSystem, box: Box) -> FeasibilityResult:
    """Decide whether some point of the box solves the system.

    Strategy: compute the greatest solution g below the closure upper corner.
    Any solution in the box is componentwise at most g, so a lower bound that
    g fails is a proof of infeasibility.  If g meets every bound it is the
    witness; when only strict upper bounds block it, homogeneity is used to
    scale the witness inward.  If scaling is blocked by a tight lower bound
    the outcome is 'unknown_strict_boundary' unless a fallback enumeration
    finds an interior witness.
    """
    if box.n != system.n:
        raise DimensionMismatch(f"box size {box.n} vs system width {system.n}")
    eqs = [(l.entries, r.entries) for l, r in system.equations]
    ivs = box.intervals
    if not eqs:
        return _finish_feasible(system, box, box.interior_point())

    upper = box.closure_upper()
    cap = default_iteration_cap(system)
    x = list(upper.entries)
    history: list[tuple[Fraction, ...]] = [tuple(x)]
    g: MaxVector | None = None
    for _ in range(cap):
        new = _sweep(eqs, x)
        # Every solution in the box is <= the current iterate, so dropping
        # below a lower bound is already decisive.
        if any(v < iv.lower for v, iv in zip(new, ivs)):
            return FeasibilityResult("infeasible")
        if new == x:
            g = MaxVector(tuple(x))
            break
        if any(_collapsed(prev, new) for prev in history):
            g = MaxVector.zeros(system.n)
            break
        history.append(tuple(new))
        if len(history) > 24:
            history.pop(0)
        x = new
    if g is None:
        complete, witness = _exhaustive_search(system, box)
        if witness is not None:
            return _finish_feasible(system, box, witness)
        if complete and box.is_closed:
            # The candidate pool provably contains a witness whenever the
            # closed box meets the solution set, so an empty search decides.
            return FeasibilityResult("infeasible")
        if complete:
            return FeasibilityResult("unknown_strict_boundary")
        raise IterationCapExceeded(
            f"no stabilization within {cap} sweeps and fallback enumeration unavailable"
        )

    for v, iv in zip(g.entries, ivs):
        if v < iv.lower or (v == iv.lower and not iv.lower_closed):
            return FeasibilityResult("infeasible")

    blocked = [
        j
        for j, (v, iv) in enumerate(zip(g.entries, ivs))
        if not iv.upper_closed and v == iv.upper
    ]
    if not blocked:
        return _finish_feasible(system, box, g)

    # Scale the witness inward off the strict upper boundaries.  The scaled
    # vector is still a solution (solution sets are max cones), and any
    # factor strictly between the largest lower-bound ratio and 1 clears
    # every positive lower bound strictly.
    c_min = ZERO
    for v, iv in zip(g.entries, ivs):
        if iv.lower > 0:
            ratio = iv.lower / v
            if ratio > c_min:
                c_min = ratio
    if c_min < 1:
        c = (c_min + 1) / 2
        scaled = g.scale(c)
        if box.contains(scaled):
            return _finish_feasible(system, box, scaled)
    _, witness = _exhaustive_search(system, box)
    if witness is not None:
        return _finish_feasible(system, box, witness)
    return FeasibilityResult("unknown_strict_boundary")


def simultaneous_feasible(
    systems: Sequence[TwoSidedSystem], box: Box
) -> FeasibilityResult:
    """Feasibility of all the systems at once: concatenate and decide.

    An empty list is trivially feasible at any point of the box.
    """
    if not systems:
        empty = TwoSidedSystem(box.n, ())
        return _finish_feasible(empty, box, box.interior_point())
    return feasible_in_box(concat_systems(list(systems)), box)


# --- complete enumeration fallback -------------------------------------------

_ENUM_VALUE_LIMIT = 120
_ENUM_COMBO_LIMIT = 400_000


def _candidate_values(system: TwoSidedSystem, box: Box) -> list[Fraction] | None:
    """Value pool containing every coordinate of some witness, if one exists.

    If the feasible region meets the box it contains a point where each
    positive coordinate is a bound value multiplied by a chain of at most n-1
    coefficient ratios (tight constraints of a minimal face, anchored at a
    bound).  Products of bounds with up to n-1 ratio factors therefore form a
    complete candidate pool.  Returns None when the pool would be too large.
    """
    coeffs = sorted(
        {c for l, r in system.equations for c in (*l.entries, *r.entries) if c > 0}
    )
    bounds = sorted(
        {iv.lower for iv in box.intervals if iv.lower > 0}
        | {iv.upper for iv in box.intervals if iv.upper > 0}
    )
    if not bounds:
        return [ZERO]
    ratios = sorted({a / b for a in coeffs for b in coeffs}) if coeffs else [ONE]
    lo = min(iv.lower for iv in box.intervals)
    hi = max(iv.upper for iv in box.intervals)
    values: set[Fraction] = set(bounds)
    frontier: set[Fraction] = set(bounds)
    for _ in range(max(system.n - 1, 0)):
        nxt: set[Fraction] = set()
        for v in frontier:
            for r in ratios:
                w = v * r
                if lo <= w <= hi and w not in values:
                    nxt.add(w)
        values |= nxt
        frontier = nxt
        if len(values) > _ENUM_VALUE_LIMIT:
            return None
    values.add(ZERO)
    return sorted(values)


def _exhaustive_search(system: TwoSidedSystem, box: Box) -> tuple[bool, MaxVector | None]:
    """Complete witness search over the candidate pool.

    Returns (complete, witness).  ``complete`` is False when the pool or the
    combination count would be unreasonably large and the search was not
    attempted; then the caller reports its own honest outcome.  When
    ``complete`` is True and no witness exists, the closed box provably
    misses the solution set.
    """
    values = _candidate_values(system, box)
    if values is None:
        return False, None
    per_coord: list[list[Fraction]] = []
    total = 1
    for iv in box.intervals:
        cand = [v for v in values if iv.contains(v)]
        if not cand:
            return True, None
        per_coord.append(cand)
        total *= len(cand)
        if total > _ENUM_COMBO_LIMIT:
            return False, None
    n = system.n
    choice = [ZERO] * n

    def rec(j: int) -> MaxVector | None:
        if j == n:
            x = MaxVector(tuple(choice))
            if satisfies(system, x):
                return x
            return None
        for v in per_coord[j]:
            choice[j] = v
            hit = rec(j + 1)
            if hit is not None:
                return hit
        return None

    return True, rec(0)
