"""Digraphs associated with max-times matrices and their spectral structure.

Covers the maximum cycle (geometric) mean, threshold digraphs, complete
reducibility, the critical subgraph with its strongly connected components,
per-component cyclicity and cyclic classes, and a small number-theoretic
congruence helper.

Nodes are 1-based throughout this module, matching the usual matrix-index
convention; matrix entry access stays 0-based internally.

Cycle means are never materialized as irrational k-th roots.  A candidate
mean is carried as a (weight, length) pair and two candidates are compared
root-free by cross-powering: w1^(1/l1) <= w2^(1/l2) iff w1^l2 <= w2^l1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    ONE,
    ZERO,
    InternalError,
    MaxMatrix,
    exact_kth_root,
    mat_mul,
)


@dataclass(frozen=True)
class Digraph:
    """Directed graph on nodes 1..node_count with an explicit edge set."""

    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ValueError("digraph needs at least one node")
        for i, j in self.edges:
            if not (1 <= i <= self.node_count and 1 <= j <= self.node_count):
                raise ValueError(f"edge ({i},{j}) out of range 1..{self.node_count}")

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in range(1, self.node_count + 1)}
        for i, j in sorted(self.edges):
            out[i].append(j)
        return out


def associated_digraph(a: MaxMatrix) -> Digraph:
    """Digraph with an edge (i,j) exactly where a[i,j] > 0."""
    edges = frozenset(
        (i + 1, j + 1) for i in range(a.n) for j in range(a.n) if a.rows[i][j] > 0
    )
    return Digraph(a.n, edges)


def threshold_digraph(a: MaxMatrix, h: Fraction) -> Digraph:
    """Digraph keeping exactly the edges whose weight is at least ``h`` (h > 0)."""
    if h <= 0:
        raise ValueError("threshold must be positive")
    edges = frozenset(
        (i + 1, j + 1) for i in range(a.n) for j in range(a.n) if a.rows[i][j] >= h
    )
    return Digraph(a.n, edges)


def strongly_connected_components(g: Digraph) -> list[tuple[int, ...]]:
    """SCCs as sorted node tuples, listed in increasing order of smallest node.

    Iterative Tarjan, deterministic for a given digraph.
    """
    succ = g.successors()
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0

    for root in range(1, g.node_count + 1):
        if root in index:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            for k in range(pi, len(succ[v])):
                w = succ[v][k]
                if w not in index:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def is_completely_reducible(g: Digraph) -> bool:
    """True iff every edge lies on a cycle, i.e. joins two nodes of one SCC."""
    comp_of: dict[int, int] = {}
    for k, comp in enumerate(strongly_connected_components(g)):
        for v in comp:
            comp_of[v] = k
    return all(comp_of[i] == comp_of[j] for i, j in g.edges)


# --- maximum cycle mean ----------------------------------------------------


@dataclass(frozen=True)
class CycleMean:
    """A maximum-cycle-mean certificate.

    ``weight`` and ``length`` describe the witness cycle; the geometric mean
    is weight^(1/length).  ``value`` is that mean when it is an exact
    rational, and None otherwise (the pair itself stays the exact carrier).
    The witness cycle is a node sequence (v1,...,vk) standing for the edge
    cycle v1->v2->...->vk->v1.
    """

    weight: Fraction
    length: int
    witness_cycle: tuple[int, ...]

    @property
    def value(self) -> Fraction | None:
        return exact_kth_root(self.weight, self.length)

    def as_pair(self) -> tuple[Fraction, int]:
        return (self.weight, self.length)


def _pair_lt(a: tuple[Fraction, int], b: tuple[Fraction, int]) -> bool:
    """Cross-powered strict comparison of geometric means w^(1/l)."""
    wa, la = a
    wb, lb = b
    return wa**lb < wb**la


def pair_eq(a: tuple[Fraction, int], b: tuple[Fraction, int]) -> bool:
    """Cross-powered equality of geometric means."""
    wa, la = a
    wb, lb = b
    return wa**lb == wb**la


def pair_leq_scalar(a: tuple[Fraction, int], c: Fraction) -> bool:
    """w^(1/l) <= c, decided root-free."""
    w, l = a
    return w <= c**l


def _karp_class_in_scc(a: MaxMatrix, nodes: tuple[int, ...]) -> tuple[Fraction, int] | None:
    """Maximum cycle mean of the subgraph induced by one SCC, as a (w, l) pair.

    Karp's minimax over walk tables, run inside the strongly connected
    component; returns None when the component has no edge (no cycle).
    """
    idx = {v: k for k, v in enumerate(nodes)}
    m = len(nodes)
    in_edges: list[list[tuple[int, Fraction]]] = [[] for _ in range(m)]
    has_edge = False
    for u in nodes:
        for v in nodes:
            w = a.rows[u - 1][v - 1]
            if w > 0:
                in_edges[idx[v]].append((idx[u], w))
                has_edge = True
    if not has_edge:
        return None
    d: list[list[Fraction | None]] = [[None] * m for _ in range(m + 1)]
    d[0][0] = ONE
    for k in range(1, m + 1):
        prev = d[k - 1]
        cur = d[k]
        for v in range(m):
            best: Fraction | None = None
            for u, w in in_edges[v]:
                pu = prev[u]
                if pu is None:
                    continue
                cand = pu * w
                if best is None or cand > best:
                    best = cand
            cur[v] = best
    best_class: tuple[Fraction, int] | None = None
    for v in range(m):
        dn = d[m][v]
        if dn is None:
            continue
        worst: tuple[Fraction, int] | None = None
        for k in range(m):
            dk = d[k][v]
            if dk is None:
                continue
            cand = (dn / dk, m - k)
            if worst is None or _pair_lt(cand, worst):
                worst = cand
        if worst is not None and (best_class is None or _pair_lt(best_class, worst)):
            best_class = worst
    if best_class is None:
        raise InternalError("strongly connected component with edges but no Karp value")
    return best_class


def _kleene_star_unchecked(a: MaxMatrix) -> MaxMatrix:
    """I + a + a^2 + ... + a^(n-1), without verifying the cycle-mean bound."""
    acc = MaxMatrix.identity(a.n)
    p = MaxMatrix.identity(a.n)
    for _ in range(a.n - 1):
        p = mat_mul(p, a)
        acc = acc.entrywise_max(p)
    return acc


def _lambda_class_and_critical_edges(
    a: MaxMatrix,
) -> tuple[tuple[Fraction, int], frozenset[tuple[int, int]]] | None:
    """Maximum cycle mean class plus the set of critical edges; None if acyclic.

    The critical test stays in exact rationals even when the mean itself is
    irrational: with the mean class (w, l), the rescaled matrix with entries
    a_ij^l / w has maximum cycle mean exactly 1 and the same critical edges,
    so the usual Kleene-star criterion applies to it directly.
    """
    best: tuple[Fraction, int] | None = None
    g = associated_digraph(a)
    for comp in strongly_connected_components(g):
        cls = _karp_class_in_scc(a, comp)
        if cls is not None and (best is None or _pair_lt(best, cls)):
            best = cls
    if best is None:
        return None
    w, l = best
    n = a.n
    scaled = MaxMatrix(
        tuple(tuple((v**l) / w if v > 0 else ZERO for v in row) for row in a.rows)
    )
    star = _kleene_star_unchecked(scaled)
    crit = frozenset(
        (i + 1, j + 1)
        for i in range(n)
        for j in range(n)
        if scaled.rows[i][j] > 0 and scaled.rows[i][j] * star.rows[j][i] == 1
    )
    return best, crit


def max_cycle_mean(a: MaxMatrix) -> CycleMean | None:
    """Greatest geometric cycle mean with a witness cycle; None if acyclic.

    ``None`` corresponds to the caller convention that an acyclic matrix has
    greatest eigenvalue 0.
    """
    found = _lambda_class_and_critical_edges(a)
    if found is None:
        return None
    _, crit = found
    succ: dict[int, list[int]] = {}
    for i, j in sorted(crit):
        succ.setdefault(i, []).append(j)
    start = min(succ)
    seen: dict[int, int] = {}
    path: list[int] = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = succ[v][0]
    cycle = tuple(path[seen[v]:])
    weight = ONE
    for k, u in enumerate(cycle):
        weight *= a.rows[u - 1][cycle[(k + 1) % len(cycle)] - 1]
    return CycleMean(weight=weight, length=len(cycle), witness_cycle=cycle)


# --- critical structure ----------------------------------------------------


@dataclass(frozen=True)
class CriticalStructure:
    """Critical nodes/edges with components, cyclic classes and cyclicities."""

    critical_nodes: frozenset[int]
    critical_edges: frozenset[tuple[int, int]]
    components: tuple[tuple[int, ...], ...]
    cyclic_classes: tuple[tuple[tuple[int, ...], ...], ...]
    cyclicity_per_component: tuple[int, ...]
    global_cyclicity: int


def _component_cyclicity_and_classes(
    nodes: tuple[int, ...], edges: list[tuple[int, int]]
) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Cyclicity (gcd of cycle lengths) and cyclic classes of one SCC.

    Uses the standard potential argument: traverse a spanning tree of the
    underlying undirected graph assigning levels (+1 along an edge, -1
    against it); the gcd of level[u]+1-level[v] over all edges equals the
    gcd of all cycle lengths, and classes are level residues mod that gcd.
    """
    node_set = set(nodes)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in nodes}
    for u, v in edges:
        adj[u].append((v, +1))
        adj[v].append((u, -1))
    root = nodes[0]
    level: dict[int, int] = {root: 0}
    queue = [root]
    while queue:
        u = queue.pop()
        for v, step in adj[u]:
            if v not in level:
                level[v] = level[u] + step
                queue.append(v)
    if set(level) != node_set:
        raise InternalError("critical component not connected")
    g = 0
    for u, v in edges:
        g = math.gcd(g, level[u] + 1 - level[v])
    if g == 0:
        raise InternalError("strongly connected component with edges has cyclicity 0")
    sigma = abs(g)
    for u, v in edges:
        if (level[u] + 1 - level[v]) % sigma != 0:
            raise InternalError("inconsistent cyclic-class potentials")
    by_residue: dict[int, list[int]] = {}
    for v in nodes:
        by_residue.setdefault(level[v] % sigma, []).append(v)
    classes = tuple(
        tuple(sorted(cl)) for cl in sorted(by_residue.values(), key=lambda c: min(c))
    )
    return sigma, classes


def digraph_cyclicity(g: Digraph) -> tuple[tuple[tuple[tuple[int, ...], int], ...], int]:
    """Per-component cyclicities and their lcm, for a completely reducible digraph.

    Components are the SCCs that contain at least one edge; isolated nodes
    (present only as untouched endpoints) do not contribute.  Digraphs that
    are not completely reducible are rejected: cyclicity is defined only for
    strongly connected and completely reducible digraphs.
    """
    if not is_completely_reducible(g):
        raise ValueError("cyclicity undefined: digraph is not completely reducible")
    per: list[tuple[tuple[int, ...], int]] = []
    for comp in strongly_connected_components(g):
        inside = [(u, v) for (u, v) in g.edges if u in comp and v in comp]
        if not inside:
            continue
        sigma, _ = _component_cyclicity_and_classes(comp, sorted(inside))
        per.append((comp, sigma))
    if not per:
        raise ValueError("cyclicity undefined: digraph has no cycles")
    overall = 1
    for _, sigma in per:
        overall = math.lcm(overall, sigma)
    return tuple(per), overall


def critical_structure(a: MaxMatrix) -> CriticalStructure:
    """Critical digraph of ``a`` with components, cyclicities and cyclic classes.

    Requires a positive maximum cycle mean.
    """
    found = _lambda_class_and_critical_edges(a)
    if found is None:
        raise ValueError("no critical structure: maximum cycle mean is zero")
    _, crit_edges = found
    crit_nodes = frozenset(v for e in crit_edges for v in e)
    sub = Digraph(a.n, crit_edges)
    components = tuple(
        comp
        for comp in strongly_connected_components(sub)
        if any((u, v) in crit_edges for u in comp for v in comp)
    )
    per_class: list[tuple[tuple[int, ...], ...]] = []
    per_sigma: list[int] = []
    for comp in components:
        inside = sorted((u, v) for (u, v) in crit_edges if u in comp and v in comp)
        sigma, classes = _component_cyclicity_and_classes(comp, inside)
        per_sigma.append(sigma)
        per_class.append(classes)
    overall = 1
    for sigma in per_sigma:
        overall = math.lcm(overall, sigma)
    return CriticalStructure(
        critical_nodes=crit_nodes,
        critical_edges=crit_edges,
        components=components,
        cyclic_classes=tuple(per_class),
        cyclicity_per_component=tuple(per_sigma),
        global_cyclicity=overall,
    )


# --- congruence helper -----------------------------------------------------


def solvable_congruence(ps: list[int] | tuple[int, ...], n: int, m: int) -> bool:
    """Whether p1*x1 + ... + ps*xs = m (mod n) has a nonnegative solution.

    Holds exactly when m is a multiple of gcd(p1, ..., ps, n).  An empty
    coefficient list is interpreted as the gcd over {n} alone.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    g = n
    for p in ps:
        if p < 1:
            raise ValueError("coefficients must be positive")
        g = math.gcd(g, p)
    return m % g == 0
