"""Constructive procedures that output certified k-independent sets.

All four entry points are deterministic: ties in vertex selection always
break toward the smallest index, move targets toward the smallest class
index, so identical inputs give identical outputs and traces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import potential_f, residue_t
from .graph import Graph, GraphError, induced_subgraph
from .oracle import WitnessSet


@dataclass
class RunTrace:
    """Step log plus exact potential snapshots for one algorithm run."""

    steps: list[tuple] = field(default_factory=list)
    potential_values: list[Fraction] = field(default_factory=list)

    def to_log(self) -> str:
        lines = []
        for step in self.steps:
            tag = step[0]
            if tag == "DEL":
                lines.append(f"DEL {step[1]} deg={step[2]}")
            elif tag == "MOVE":
                phi = step[4]
                lines.append(
                    f"MOVE {step[1]} {step[2]}->{step[3]} "
                    f"phi={phi.numerator}/{phi.denominator}"
                )
            elif tag == "RESTART":
                lines.append(f"RESTART d={step[1]} t={step[2]} q={step[3]}")
            elif tag == "PARTITION":
                lines.append(f"PARTITION t={step[1]}")
            else:
                raise ValueError(f"unknown trace step {step!r}")
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex classes covering V(G), each with a degree capacity."""

    classes: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]

    def largest_class(self) -> tuple[int, ...]:
        best = max(range(len(self.classes)), key=lambda i: (len(self.classes[i]), -i))
        return self.classes[best]


class _Work:
    """Mutable deletion view over an immutable graph (degrees among alive)."""

    def __init__(self, g: Graph):
        self.g = g
        self.alive = [True] * g.n
        self.deg = g.degrees()
        self.n_alive = g.n
        self.sum_deg = sum(self.deg)

    def delete(self, v: int) -> None:
        self.alive[v] = False
        self.n_alive -= 1
        self.sum_deg -= 2 * self.deg[v]
        for u in self.g.neighbors(v):
            if self.alive[u]:
                self.deg[u] -= 1

    def max_degree_vertex(self) -> tuple[int, int]:
        """(vertex, degree) of maximum live degree, smallest index on ties."""
        best_v, best_d = -1, -1
        for v in range(self.g.n):
            if self.alive[v] and self.deg[v] > best_d:
                best_v, best_d = v, self.deg[v]
        return best_v, best_d

    def avg_degree_ceil(self) -> int:
        return -(-self.sum_deg // self.n_alive)

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.g.n) if self.alive[v]]


def lovasz_partition(
    g: Graph, capacities: list[int] | tuple[int, ...]
) -> tuple[Partition, RunTrace]:
    """Partition V(G) into classes with induced max degree <= capacity.

    Requires sum(k_i + 1) >= max_degree + 1.  Local search: start from the
    round-robin assignment by vertex index; while some vertex exceeds its
    class capacity, move the smallest such vertex to the class minimizing
    deg_class(v)/(k_class + 1).  The potential sum of e(class)/(k_class+1)
    drops by at least 1/lcm(k_i+1) per move, so the loop terminates.
    """
    caps = tuple(int(c) for c in capacities)
    if any(c < 0 for c in caps) or not caps:
        raise GraphError(f"capacities must be nonnegative and nonempty: {caps}")
    if sum(c + 1 for c in caps) < g.max_degree() + 1:
        raise GraphError(
            f"capacity sum {sum(c + 1 for c in caps)} below max degree + 1 "
            f"= {g.max_degree() + 1}"
        )
    t = len(caps)
    cls = [v % t for v in range(g.n)]
    deg_in = [[0] * t for _ in range(g.n)]
    for v in range(g.n):
        row = deg_in[v]
        for u in g.neighbors(v):
            row[cls[u]] += 1
    scale = math.lcm(*(c + 1 for c in caps))
    weight = [scale // (c + 1) for c in caps]
    phi = sum(deg_in[v][cls[v]] * weight[cls[v]] for v in range(g.n)) // 2

    trace = RunTrace()
    trace.potential_values.append(Fraction(phi, scale))
    violating = {v for v in range(g.n) if deg_in[v][cls[v]] > caps[cls[v]]}
    while violating:
        v = min(violating)
        i = cls[v]
        j = min(range(t), key=lambda c: (deg_in[v][c] * weight[c], c))
        # Pigeonhole step: a strictly better class always exists.
        assert deg_in[v][j] * weight[j] < deg_in[v][i] * weight[i]
        phi += deg_in[v][j] * weight[j] - deg_in[v][i] * weight[i]
        cls[v] = j
        for u in g.neighbors(v):
            deg_in[u][i] -= 1
            deg_in[u][j] += 1
            if deg_in[u][cls[u]] > caps[cls[u]]:
                violating.add(u)
            else:
                violating.discard(u)
        if deg_in[v][j] > caps[j]:
            violating.add(v)
        else:
            violating.discard(v)
        trace.steps.append(("MOVE", v, i, j, Fraction(phi, scale)))
        trace.potential_values.append(Fraction(phi, scale))

    classes = [[] for _ in range(t)]
    for v in range(g.n):
        classes[cls[v]].append(v)
    part = Partition(tuple(tuple(c) for c in classes), caps)
    for c, cap in zip(part.classes, part.capacities):
        members = set(c)
        assert all(
            sum(1 for u in g.neighbor_set(v) if u in members) <= cap for v in c
        )
    return part, trace


def lovasz_equal(g: Graph, k: int) -> Partition:
    """Equal-capacity partition into ceil((max_degree+1)/(k+1)) classes."""
    part, _ = _lovasz_equal_traced(g, k)
    return part


def _lovasz_equal_traced(g: Graph, k: int) -> tuple[Partition, RunTrace]:
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    t = -((g.max_degree() + 1) // -(k + 1))
    return lovasz_partition(g, [k] * t)


def caro_tuza_greedy(g: Graph, k: int) -> tuple[WitnessSet, RunTrace]:
    """Delete max-degree vertices until the rest induces max degree <= k.

    The returned set B satisfies |B| >= ceil(sum of f_k over the degree
    sequence); the trace records s(B) after every deletion and the run
    asserts it never drops.
    """
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    trace = RunTrace()
    work = _Work(g)
    if g.n == 0:
        return WitnessSet((), k), trace

    # Exact potential tracking over a common denominator: w[d] = f_k(d)*scale.
    max_deg = max(work.deg)
    values = [potential_f(k, d) for d in range(max_deg + 1)]
    scale = math.lcm(*(v.denominator for v in values))
    w = [int(v * scale) for v in values]
    s = sum(w[d] for d in work.deg)
    trace.potential_values.append(Fraction(s, scale))

    while True:
        v, d = work.max_degree_vertex()
        if d <= k:
            break
        s_new = s - w[d]
        for u in g.neighbors(v):
            if work.alive[u]:
                s_new += w[work.deg[u] - 1] - w[work.deg[u]]
        assert s_new >= s, "deletion potential decreased"
        s = s_new
        work.delete(v)
        trace.steps.append(("DEL", v, d))
        trace.potential_values.append(Fraction(s, scale))
    return WitnessSet(tuple(work.alive_vertices()), k), trace


def _partition_step(
    g: Graph, work: _Work, k: int, trace: RunTrace
) -> WitnessSet:
    """Run the equal-capacity partition on the live subgraph, merge its
    trace, and return the largest class mapped back to original indices."""
    sub, mapping = induced_subgraph(g, work.alive_vertices())
    part, sub_trace = _lovasz_equal_traced(sub, k)
    trace.steps.extend(sub_trace.steps)
    trace.potential_values.extend(sub_trace.potential_values)
    trace.steps.append(("PARTITION", len(part.classes)))
    chosen = part.largest_class()
    return WitnessSet(tuple(sorted(mapping[v] for v in chosen)), k)


def algorithm1(g: Graph, k: int) -> tuple[WitnessSet, RunTrace]:
    """Delete max-degree vertices until max degree <= ceil(avg degree) + k,
    then partition and keep the largest class.

    The output size strictly exceeds (k+1) n / (d(G) + 2k + 2).
    """
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    trace = RunTrace()
    if g.n == 0:
        return WitnessSet((), k), trace
    work = _Work(g)
    while True:
        v, d = work.max_degree_vertex()
        if d <= work.avg_degree_ceil() + k:
            return _partition_step(g, work, k, trace), trace
        trace.steps.append(("DEL", v, d))
        work.delete(v)


def algorithm2(g: Graph, k: int) -> tuple[WitnessSet, RunTrace]:
    """Max-degree deletion trajectory, partitioned at its best state.

    Pass one walks the deletion trajectory (repeatedly removing the
    max-degree vertex, smallest index on ties) and predicts, for every
    intermediate graph, the class size ceil(n'/t') that the equal-capacity
    partition guarantees there, with t' = ceil((max_degree'+1)/(k+1)).
    Pass two replays the deletions up to the earliest state with the best
    prediction and partitions that graph.  Restart records are emitted
    whenever ceil(avg degree) drops below the value frozen at the previous
    record, so at most ceil(d(G))+1 rounds appear in the trace.

    The output size is at least ceil((k+1) n / (ceil(d(G))+k+1)).  It also
    never falls below the deletion greedy's certificate: the greedy's
    stopping state lies on the same trajectory and predicts exactly its
    own set size there.
    """
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    trace = RunTrace()
    if g.n == 0:
        return WitnessSet((), k), trace

    best_value, best_state = 0, 0
    scan = _Work(g)
    state = 0
    while scan.n_alive > 0:
        v, deg = scan.max_degree_vertex()
        classes = -((deg + 1) // -(k + 1))
        predicted = -(-scan.n_alive // classes)
        if predicted > best_value:
            best_value, best_state = predicted, state
        scan.delete(v)
        state += 1

    work = _Work(g)
    round_d: int | None = None
    for _ in range(best_state):
        d = work.avg_degree_ceil()
        if round_d is None or d < round_d:
            round_d = d
            t = residue_t(k, round_d)
            q = -(-work.n_alive // (round_d + 2 * t + 1))
            trace.steps.append(("RESTART", round_d, t, q))
        v, deg = work.max_degree_vertex()
        trace.steps.append(("DEL", v, deg))
        work.delete(v)
    d = work.avg_degree_ceil()
    if round_d is None or d < round_d:
        t = residue_t(k, d)
        q = -(-work.n_alive // (d + 2 * t + 1))
        trace.steps.append(("RESTART", d, t, q))
    return _partition_step(g, work, k, trace), trace
