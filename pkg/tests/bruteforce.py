"""Independent brute-force oracles used to check the library.

Everything here is written from definitions with naive algorithms (cycle
enumeration, reachability closures, orbit simulation, grid search) and does
not call into the library's computational paths, so the two sides of every
comparison are independent.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

F = Fraction


# --- raw matrix helpers ------------------------------------------------------


def expand_row(row):
    n = len(row)
    return tuple(tuple(row[(j - i) % n] for j in range(n)) for i in range(n))


def mul(a, b):
    n = len(a)
    return tuple(
        tuple(max(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def power_chain(a, t):
    """a^1 .. a^t by successive multiplication; returns the list (1-indexed)."""
    out = [None, a]
    for _ in range(t - 1):
        out.append(mul(out[-1], a))
    return out


def apply_mat(a, x):
    n = len(a)
    return tuple(max(a[i][j] * x[j] for j in range(n)) for i in range(n))


# --- cycles and cyclicity ----------------------------------------------------


def edges_of(a):
    n = len(a)
    return {(i + 1, j + 1) for i in range(n) for j in range(n) if a[i][j] > 0}


def simple_cycles(n, edges):
    """All simple cycles as node tuples starting at their smallest node."""
    succ = {v: sorted(j for (i, j) in edges if i == v) for v in range(1, n + 1)}
    cycles = []

    def search(start, v, path, on_path):
        for w in succ[v]:
            if w == start:
                cycles.append(tuple(path))
            elif w > start and w not in on_path:
                on_path.add(w)
                path.append(w)
                search(start, w, path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(1, n + 1):
        search(s, s, [s], {s})
    return cycles


def cycle_weight(a, cycle):
    w = F(1)
    for k, u in enumerate(cycle):
        w *= a[u - 1][cycle[(k + 1) % len(cycle)] - 1]
    return w


def best_cycle_mean(a):
    """Maximum cycle mean as a (weight, length) pair via enumeration; None if acyclic."""
    n = len(a)
    best = None
    for cycle in simple_cycles(n, edges_of(a)):
        w, l = cycle_weight(a, cycle), len(cycle)
        if best is None or w ** best[1] > best[0] ** l:
            best = (w, l)
    return best


def scc_partition(n, edges):
    """SCCs via the reachability closure (Warshall), independent of Tarjan."""
    reach = [[False] * (n + 1) for _ in range(n + 1)]
    for i, j in edges:
        reach[i][j] = True
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            if reach[i][k]:
                row_i, row_k = reach[i], reach[k]
                for j in range(1, n + 1):
                    if row_k[j]:
                        row_i[j] = True
    comps = []
    assigned = set()
    for v in range(1, n + 1):
        if v in assigned:
            continue
        comp = {v} | {w for w in range(1, n + 1) if reach[v][w] and reach[w][v]}
        comps.append(tuple(sorted(comp)))
        assigned |= comp
    return comps


def component_cyclicity_brute(n, edges, comp):
    """gcd of the lengths of all simple cycles inside one component."""
    inside = {(i, j) for (i, j) in edges if i in comp and j in comp}
    g = 0
    for cycle in simple_cycles(n, inside):
        g = gcd(g, len(cycle))
    return g


# --- membership and feasibility ------------------------------------------------


def orbit_member(a, x, bound=None):
    """Whether the orbit of x hits the eigencone, straight from the definition."""
    n = len(a)
    lam = max(v for row in a for v in row)
    if lam == 0:
        return True
    if bound is None:
        bound = (n - 1) ** 2 + 1 + n + 2
    y = tuple(x)
    for _ in range(bound + 1):
        if apply_mat(a, y) == tuple(lam * v for v in y):
            return True
        y = apply_mat(a, y)
    return False


def holds(equations, x):
    """Evaluate a list of ((l...), (r...)) coefficient pairs at x."""
    return all(
        max(c * v for c, v in zip(l, x)) == max(c * v for c, v in zip(r, x))
        for l, r in equations
    )


def grid_vectors(values, n):
    return itertools.product(values, repeat=n)


def grid_feasible(equations, per_coordinate_candidates):
    """Exhaustive witness search over explicit per-coordinate candidate lists."""
    for combo in itertools.product(*per_coordinate_candidates):
        if holds(equations, combo):
            return combo
    return None


def minimal_transient_period(a, lam, bound):
    """Minimal (transient, period) of the normalized powers, by definition scan.

    Materializes a^1..a^bound, normalizes by the rational ``lam``, and finds
    the least period of the tail followed by the least onset, directly from
    the definition of ultimate periodicity.
    """
    chain = power_chain(a, bound)
    norm = [None] + [
        tuple(tuple(v / lam**t for v in row) for row in chain[t]) for t in range(1, bound + 1)
    ]
    probe = max(bound // 2, 1)
    period = None
    for p in range(1, bound - probe + 1):
        if norm[probe] == norm[probe + p]:
            period = p
            break
    assert period is not None, "oracle bound too small to see the periodic regime"
    transient = probe
    while transient > 1 and norm[transient - 1] == norm[transient - 1 + period]:
        transient -= 1
    return transient, period
