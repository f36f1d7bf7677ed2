"""Attraction cones: defining systems, membership, Kleene stars, inclusion.

The attraction cone of a matrix A (for its greatest eigenvalue) is the set
of vectors whose orbit under A eventually lands in the eigencone.  For an
admissible matrix it is exactly the solution set of the two-sided system

    lambda * A^t (x)  ==  A^(t+1) (x)      for any t at or past the transient,

and for a circulant the exponent n^2 always works.  This module builds those
systems, reduces them, decides membership, and samples attraction cones to
test inclusion between two of them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .circulant import Circulant, circ_spectral, expand
from .core import (
    ONE,
    ZERO,
    DimensionMismatch,
    InternalError,
    MaxMatrix,
    MaxVector,
    mat_mul,
    mat_power,
)
from .digraph import max_cycle_mean, pair_leq_scalar
from .periodicity import orbit_period, transient_and_period
from .twosided import (
    IterationCapExceeded,
    TwoSidedSystem,
    greatest_solution_leq,
    satisfies,
)

Mode = Literal["exact_n2", "min_transient"]


def _dedup_equations(
    pairs: Sequence[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]],
) -> tuple[tuple[MaxVector, MaxVector], ...]:
    """Drop trivially-satisfied rows and repeats (up to swapping the sides)."""
    seen: set[frozenset[tuple[Fraction, ...]]] = set()
    out: list[tuple[MaxVector, MaxVector]] = []
    for lhs, rhs in pairs:
        if lhs == rhs:
            continue
        key = frozenset((lhs, rhs))
        if key in seen:
            continue
        seen.add(key)
        out.append((MaxVector(lhs), MaxVector(rhs)))
    return tuple(out)


def attraction_system_for_matrix(a: MaxMatrix, t: int | None = None) -> TwoSidedSystem:
    """System lambda * A^t (x) == A^(t+1) (x), rows deduplicated.

    ``t`` defaults to the transient of A.  Requires an admissible matrix with
    a rational greatest eigenvalue (true for every circulant and for every
    completely reducible matrix whose eigenvalue is an entry-level rational).
    """
    if a.is_zero():
        return TwoSidedSystem(a.n, ())
    if t is None:
        t = transient_and_period(a).transient
    cm = max_cycle_mean(a)
    if cm is None:
        raise ValueError("attraction system undefined: no cycles")
    lam = cm.value
    if lam is None:
        raise ValueError(
            "attraction system needs a rational eigenvalue; this matrix has an irrational one"
        )
    pt = mat_power(a, t)
    pt1 = mat_mul(pt, a)
    rows = [
        (tuple(lam * v for v in pt.rows[i]), pt1.rows[i])
        for i in range(a.n)
    ]
    return TwoSidedSystem(a.n, _dedup_equations(rows))


def attraction_system(c: Circulant, mode: Mode = "min_transient") -> TwoSidedSystem:
    """Defining system of the attraction cone of a circulant.

    'exact_n2' uses the exponent n^2, which is always past the transient for
    a circulant; 'min_transient' uses the transient itself, giving the same
    solution set with smaller coefficients.  The zero circulant yields the
    empty system (the attraction cone is the whole space).
    """
    if c.is_zero():
        return TwoSidedSystem(c.n, ())
    a = expand(c)
    if mode == "exact_n2":
        return attraction_system_for_matrix(a, t=c.n * c.n)
    if mode == "min_transient":
        return attraction_system_for_matrix(a, t=None)
    raise ValueError(f"unknown mode: {mode!r}")


def reduced_attraction_system(c: Circulant) -> TwoSidedSystem:
    """Row-pair form of the attraction system of a nonzero circulant.

    For nodes i, j in the same critical component, row i and row j of A^(n^2)
    applied to x must agree.  A chain over each component's (sorted) nodes is
    equivalent to all pairs; duplicate and trivial rows are dropped.  A
    component with a single cyclic class contributes nothing: all its rows of
    A^(n^2) coincide.
    """
    if c.is_zero():
        raise ValueError("zero circulant has no reduced attraction system")
    spectral = circ_spectral(c)
    a = expand(c)
    power = mat_power(a, c.n * c.n)
    rows: list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]] = []
    for comp in spectral.components:
        for i, j in zip(comp, comp[1:]):
            rows.append((power.rows[i - 1], power.rows[j - 1]))
    return TwoSidedSystem(c.n, _dedup_equations(rows))


def in_attraction_cone(c: Circulant, x: MaxVector, mode: Mode = "min_transient") -> bool:
    """Membership of ``x`` in the attraction cone of a circulant."""
    if x.n != c.n:
        raise DimensionMismatch(f"vector size {x.n} vs circulant size {c.n}")
    return satisfies(attraction_system(c, mode), x)


def in_attraction_cone_matrix(a: MaxMatrix, x: MaxVector) -> bool:
    """Membership for a general admissible matrix, via the orbit period.

    The orbit of x reaches the eigencone exactly when its normalized eventual
    period is 1; the zero vector belongs to every attraction cone.
    """
    if a.is_zero():
        return True
    return orbit_period(a, x) == 1


# --- Kleene stars ------------------------------------------------------------


def kleene_star(a: MaxMatrix) -> MaxMatrix:
    """I + A + A^2 + ... + A^(n-1); defined when the maximum cycle mean is <= 1."""
    cm = max_cycle_mean(a)
    if cm is not None and not pair_leq_scalar(cm.as_pair(), ONE):
        raise ValueError("Kleene star undefined: maximum cycle mean exceeds 1")
    acc = MaxMatrix.identity(a.n)
    p = MaxMatrix.identity(a.n)
    for _ in range(a.n - 1):
        p = mat_mul(p, a)
        acc = acc.entrywise_max(p)
    return acc


def is_kleene_star(a: MaxMatrix) -> bool:
    """Whether A equals its own Kleene star.

    Checked two equivalent ways (idempotent with unit diagonal; unit diagonal
    with the triangle inequality over all index triples); any disagreement is
    an implementation bug.
    """
    n = a.n
    diag_ok = all(a.rows[i][i] == 1 for i in range(n))
    first = diag_ok and mat_mul(a, a) == a
    second = diag_ok and all(
        a.rows[i][j] * a.rows[j][k] <= a.rows[i][k]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )
    if first != second:
        raise InternalError("Kleene-star criteria disagree")
    return first


# --- cancellation ------------------------------------------------------------


def cancel_reduce(system: TwoSidedSystem) -> TwoSidedSystem:
    """Delete strictly dominated cross-side terms; the solution set is unchanged.

    For each variable, a coefficient on one side that is strictly below the
    same variable's coefficient on the other side can be dropped: with
    c < c', the term c*x_v on its side is absorbed whenever c'*x_v competes
    on the other, and equality of sides survives the deletion both ways.
    Equal coefficients are kept verbatim on both sides.  Equations whose two
    sides become identical are dropped.
    """
    new_eqs: list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]] = []
    for lhs, rhs in system.equations:
        l = list(lhs.entries)
        r = list(rhs.entries)
        for j in range(system.n):
            if l[j] < r[j]:
                l[j] = ZERO
            elif r[j] < l[j]:
                r[j] = ZERO
        new_eqs.append((tuple(l), tuple(r)))
    return TwoSidedSystem(system.n, _dedup_equations(new_eqs))


# --- inclusion testing -------------------------------------------------------


@dataclass(frozen=True)
class InclusionVerdict:
    """Outcome of a sampled attraction-cone inclusion check."""

    consistent: bool
    counterexample: MaxVector | None
    trials_run: int
    members_tested: int


def _as_matrix(m: Circulant | MaxMatrix) -> MaxMatrix:
    return expand(m) if isinstance(m, Circulant) else m


def _membership_test(m: Circulant | MaxMatrix):
    if isinstance(m, Circulant):
        if m.is_zero():
            return lambda x: True
        system = attraction_system(m)
        return lambda x: satisfies(system, x)
    mat = m
    if mat.is_zero():
        return lambda x: True
    return lambda x: in_attraction_cone_matrix(mat, x)


def _period_window_eigenvectors(a: MaxMatrix) -> list[MaxVector]:
    """One eigenvector per coordinate: max over a full period window of columns.

    With T the transient and p the period, the entrywise max of the columns
    of (A/lambda)^T .. (A/lambda)^(T+p-1) is an eigenvector, hence a member
    of the attraction cone.  Normalization is skipped (cones are scale
    invariant), so this stays exact whenever lambda is rational.
    """
    cm = max_cycle_mean(a)
    if cm is None or cm.value is None:
        return []
    lam = cm.value
    info = transient_and_period(a)
    scaled = a.scale(ONE / lam)
    powers = [mat_power(scaled, info.transient)]
    for _ in range(info.period - 1):
        powers.append(mat_mul(powers[-1], scaled))
    out = []
    for j in range(a.n):
        col = powers[0].column(j)
        for p in powers[1:]:
            col = col.max_with(p.column(j))
        if not col.is_zero():
            out.append(col)
    return out


def check_attraction_inclusion(
    a: Circulant | MaxMatrix,
    b: Circulant | MaxMatrix,
    trials: int = 200,
    seed: int = 0,
) -> InclusionVerdict:
    """Search for a member of the attraction cone of ``a`` outside that of ``b``.

    Members of the first cone are generated three ways: eigenvectors built
    from a period window of normalized powers, greatest solutions of the
    defining system below randomized upper bounds (drawn from entry ratios of
    ``a``), and random max-combinations of members already found.  Each member
    is tested against the second cone; the first failure is returned as a
    counterexample, otherwise the verdict is consistent for this sample.
    """
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.n != mb.n:
        raise DimensionMismatch(f"matrix sizes differ: {ma.n} vs {mb.n}")
    n = ma.n
    in_a = _membership_test(a)
    in_b = _membership_test(b)
    rng = random.Random(seed)

    members: list[MaxVector] = []
    tested = 0

    def probe(x: MaxVector) -> MaxVector | None:
        nonlocal tested
        if x.is_zero() or not in_a(x):
            return None
        tested += 1
        if not in_b(x):
            return x
        members.append(x)
        return None

    if ma.is_zero():
        # Attraction cone of the zero matrix is the whole space.
        probes = [MaxVector.unit(n, i) for i in range(n)]
        for x in probes:
            bad = probe(x)
            if bad is not None:
                return InclusionVerdict(False, bad, trials_run=0, members_tested=tested)
        return InclusionVerdict(True, None, trials_run=0, members_tested=tested)

    for v in _period_window_eigenvectors(ma):
        bad = probe(v)
        if bad is not None:
            return InclusionVerdict(False, bad, trials_run=0, members_tested=tested)

    entries = sorted({v for row in ma.rows for v in row if v > 0})
    pool = sorted({x / y for x in entries for y in entries} | {ONE})
    system_a = (
        attraction_system(a)
        if isinstance(a, Circulant)
        else attraction_system_for_matrix(ma)
    )
    for trial in range(trials):
        upper = MaxVector(tuple(rng.choice(pool) for _ in range(n)))
        try:
            g = greatest_solution_leq(system_a, upper)
        except IterationCapExceeded:
            continue
        candidates = [g]
        if len(members) >= 2:
            u = rng.choice(members)
            v = rng.choice(members)
            candidates.append(u.scale(rng.choice(pool)).max_with(v.scale(rng.choice(pool))))
        for x in candidates:
            bad = probe(x)
            if bad is not None:
                return InclusionVerdict(False, bad, trials_run=trial + 1, members_tested=tested)
    return InclusionVerdict(True, None, trials_run=trials, members_tested=tested)
