"""Extremal labelings of the crown graph K_n x K_2 and switch schedules.

Vertex names follow ``crown_graph``: ``a_i = i`` and ``b_j = n + j`` with
``a_i`` not adjacent to ``b_i``.

Even n (at least 4)
    ``u = a_0`` and ``v = b_0`` are the dense vertices; ``u_i = a_i`` and
    ``v_i = b_i`` for ``i = 1..n-1`` are sparse. Each ``u_i`` carries 1-edges
    to ``v_{nxt(i,k)}`` for ``k = 1..n/2``. The maximum index is ``2n-4``
    and every switch lowers it by 2.

Odd n (at least 7)
    ``u, u', v, v' = a_0, a_1, b_0, b_1`` are dense; ``u_i = a_{i+1}`` and
    ``v_i = b_{i+1}`` for ``i = 1..n-2``. Each ``u_i`` carries 1-edges to
    ``v_{nxt(i,k)}`` for ``k = 1..(n+1)/2``, and ``(u', v)`` is a 1-edge.
    The maximum index is ``2n-8`` and every switch lowers it by 1.

``nxt(i, k) = ((i - 1 + k) mod m) + 1`` over ``1..m``.

The odd schedule makes one sparse vertex unlabeled per step: the pair
``((d, x), (x, s))`` moves a 1-edge from the sparse vertex ``s`` to a dense
vertex ``d`` through a pivot ``x`` whose 1-degree is unchanged. After all
``2n-8`` steps four vertices are labeled 0, four are labeled 1 and the rest
are unlabeled. No sequence of switches can instead end with ``n`` vertices
of each label: every part would need exactly ``n/2`` zero vertices.

n = 3 and n = 5 fall outside both constructions and use fixed witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, crown_graph
from .labeling import EdgeLabeling, SwapError, counts, is_edge_friendly

# 1-edges as (i, j) meaning (a_i, b_j).
_WITNESS_TABLES: dict[int, dict[int, tuple[tuple[int, int], ...]]] = {
    3: {
        0: ((0, 1), (0, 2), (1, 0)),
    },
    5: {
        0: ((0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 2), (1, 3), (1, 4), (2, 0), (2, 1)),
        1: ((0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 2), (1, 3), (1, 4), (2, 0), (3, 0)),
        2: ((0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 2), (1, 3), (1, 4), (2, 3), (4, 3)),
    },
}


@dataclass(frozen=True)
class SwitchPair:
    """Edge indices: ``zero_edge`` goes 0 -> 1, ``one_edge`` goes 1 -> 0."""
    zero_edge: int
    one_edge: int


@dataclass(frozen=True)
class SwitchSchedule:
    graph: Graph
    start: EdgeLabeling
    steps: tuple[SwitchPair, ...]
    step_delta: int

    def replay(self) -> list[EdgeLabeling]:
        """Every intermediate labeling, the start included.

        Raises ``ScheduleError`` at the first step whose edges do not carry
        labels 0 and 1 respectively.
        """
        states = [self.start]
        labels = list(self.start.labels)
        for t, step in enumerate(self.steps, start=1):
            if labels[step.zero_edge] != 0 or labels[step.one_edge] != 1:
                raise ScheduleError(self, t, labels)
            labels[step.zero_edge], labels[step.one_edge] = 1, 0
            states.append(EdgeLabeling(self.graph, tuple(labels)))
        return states

    def apply_prefix(self, t: int) -> EdgeLabeling:
        if not 0 <= t <= len(self.steps):
            raise ValueError(f"prefix length {t} outside 0..{len(self.steps)}")
        labels = list(self.start.labels)
        for i, step in enumerate(self.steps[:t], start=1):
            if labels[step.zero_edge] != 0 or labels[step.one_edge] != 1:
                raise ScheduleError(self, i, labels)
            labels[step.zero_edge], labels[step.one_edge] = 1, 0
        return EdgeLabeling(self.graph, tuple(labels))


class ScheduleError(SwapError):
    def __init__(self, schedule: SwitchSchedule, step: int, labels):
        pair = schedule.steps[step - 1]
        edges = schedule.graph.edges
        z, o = pair.zero_edge, pair.one_edge
        trace = ", ".join(
            f"{_edge_name(schedule.graph, edges[s.zero_edge])}<->{_edge_name(schedule.graph, edges[s.one_edge])}"
            for s in schedule.steps[:step])
        super().__init__(
            f"step {step}: edge {_edge_name(schedule.graph, edges[z])} has label {labels[z]} (want 0), "
            f"edge {_edge_name(schedule.graph, edges[o])} has label {labels[o]} (want 1); steps so far: {trace}")
        self.step = step


def _edge_name(g: Graph, e: tuple[int, int]) -> str:
    n = g.p // 2
    u, v = e
    return f"(a{u},b{v - n})"


def _nxt(i: int, k: int, m: int) -> int:
    return (i - 1 + k) % m + 1


def _crown_edge(g: Graph, n: int, i: int, j: int) -> int:
    return g.index_of(i, n + j)


def _check_even(n: int) -> None:
    if n < 4 or n % 2:
        raise ValueError(f"even construction needs an even n >= 4, got {n}")


def _check_odd(n: int) -> None:
    if n < 7 or n % 2 == 0:
        raise ValueError(f"odd construction needs an odd n >= 7, got {n}")


def max_labeling_even(n: int) -> EdgeLabeling:
    _check_even(n)
    g = crown_graph(n)
    m = n - 1
    ones = [(i, _nxt(i, k, m)) for i in range(1, n) for k in range(1, n // 2 + 1)]
    return EdgeLabeling.from_one_edges(g, ((i, n + j) for i, j in ones))


def max_labeling_odd(n: int) -> EdgeLabeling:
    _check_odd(n)
    g = crown_graph(n)
    m = n - 2
    ones = [(1, 0)]
    ones += [(i + 1, _nxt(i, k, m) + 1) for i in range(1, m + 1) for k in range(1, (n + 1) // 2 + 1)]
    return EdgeLabeling.from_one_edges(g, ((i, n + j) for i, j in ones))


def switch_schedule_even(n: int) -> SwitchSchedule:
    _check_even(n)
    start = max_labeling_even(n)
    g = start.graph
    half = (n - 2) // 2
    steps = []
    # (u, v_{j+1}) <-> (v_{j+1}, u_j): u_j drops to label 0
    for j in range(1, half + 1):
        steps.append(SwitchPair(_crown_edge(g, n, 0, j + 1), _crown_edge(g, n, j, j + 1)))
    # (v, u_j) <-> (u_j, v_{j+2}): v_{j+2} drops to label 0
    for j in range(1, half + 1):
        steps.append(SwitchPair(_crown_edge(g, n, j, 0), _crown_edge(g, n, j, j + 2)))
    return SwitchSchedule(g, start, tuple(steps), 2)


def switch_schedule_odd(n: int) -> SwitchSchedule:
    _check_odd(n)
    start = max_labeling_odd(n)
    g = start.graph
    m = n - 2
    window = (n + 1) // 2
    # dense vertices absorb at most (n-3)/2 1-edges each; u' and v start with one
    quota = (n - 3) // 2
    steps = []
    # u_j becomes unlabeled; pivot v_{j+1}, sink u then u'
    for j in range(1, n - 3):
        sink = 0 if j <= quota else 1
        steps.append(SwitchPair(_crown_edge(g, n, sink, j + 2), _crown_edge(g, n, j + 1, j + 2)))
    # v_j becomes unlabeled; pivot is its farthest 1-neighbor, sink v' then v
    for j in range(1, n - 3):
        sink = 1 if j <= quota else 0
        c = (j - 1 - window) % m + 1
        steps.append(SwitchPair(_crown_edge(g, n, c + 1, sink), _crown_edge(g, n, c + 1, j + 1)))
    return SwitchSchedule(g, start, tuple(steps), 1)


def switch_schedule(n: int) -> SwitchSchedule:
    return switch_schedule_even(n) if n % 2 == 0 else switch_schedule_odd(n)


def ebi_formula(n: int) -> list[int]:
    """Edge-balanced index set of K_n x K_2, ascending."""
    if n < 3:
        raise ValueError(f"ebi_formula needs n >= 3, got {n}")
    if n == 3:
        return [0]
    if n % 2 == 0:
        return list(range(0, 2 * n - 3, 2))
    return list(range(0, 2 * n - 7))


def table_witness(n: int, k: int) -> EdgeLabeling:
    g = crown_graph(n)
    return EdgeLabeling.from_one_edges(g, ((i, n + j) for i, j in _WITNESS_TABLES[n][k]))


def labeling_for_index(n: int, k: int) -> EdgeLabeling:
    """Edge-friendly labeling of crown_graph(n) with index exactly k."""
    allowed = ebi_formula(n)
    if k not in allowed:
        raise ValueError(f"index {k} is not in EBI(K_{n} x K_2) = {allowed}")
    if n in _WITNESS_TABLES:
        return table_witness(n, k)
    sched = switch_schedule(n)
    start_index = allowed[-1]
    return sched.apply_prefix((start_index - k) // sched.step_delta)


def all_witnesses(n: int) -> list[EdgeLabeling]:
    """One witness per element of ebi_formula(n), ascending by index."""
    if n in _WITNESS_TABLES:
        return [table_witness(n, k) for k in ebi_formula(n)]
    return list(reversed(switch_schedule(n).replay()))


def verify_schedule(sched: SwitchSchedule) -> list[int]:
    """Replay a schedule, checking friendliness and the per-step index drop.

    Returns the index trajectory; raises ``AssertionError`` on any violation.
    """
    trajectory = []
    for t, lab in enumerate(sched.replay()):
        if not is_edge_friendly(lab):
            raise AssertionError(f"state after {t} steps is not edge-friendly")
        trajectory.append(counts(lab).index)
    start = trajectory[0]
    expected = [start - t * sched.step_delta for t in range(len(trajectory))]
    if trajectory != expected:
        raise AssertionError(f"index trajectory {trajectory} != {expected}")
    return trajectory

