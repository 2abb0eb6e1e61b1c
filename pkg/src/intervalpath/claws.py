"""Claw-centered machinery: detection, the linear-time 4-approximate deletion
set with packing certificates, an exact branching solver, properness tests,
and the two sentinel intervals later stages rely on.

The detection trick: among a center's live neighbors, only the one with the
smallest right endpoint and the one with the largest left endpoint can serve
as the outer leaves of an induced claw, so a claw through a center u exists
iff {u, v, z1(u), z2(u)} induces one for some neighbor v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, DoubleAugment
from .intervals import IntervalGraph, build, fresh_name


@dataclass(frozen=True)
class ClawWitness:
    """An induced claw: one center adjacent to three pairwise-disjoint leaves."""

    center: str
    leaves: tuple


@dataclass(frozen=True)
class DeletionSet:
    """Vertices whose removal leaves a proper representation.

    ``certificates`` holds vertex-disjoint claws packed during the greedy
    round, one per four deleted vertices; exact solving leaves it empty.
    ``dummies`` is None until the two sentinels are appended.
    """

    marked: frozenset
    certificates: tuple
    dummies: tuple | None = None


def _claw_leaves(graph: IntervalGraph, u: int, alive) -> tuple | None:
    """Leaves of some induced claw centered at u within ``alive``, or None."""
    z1 = z2 = -1
    for w in graph.neighbors(u):
        if not alive[w]:
            continue
        if z1 < 0 or graph.right[w] < graph.right[z1]:
            z1 = w
        if z2 < 0 or graph.left[w] > graph.left[z2]:
            z2 = w
    if z1 < 0 or z1 == z2 or graph.adjacent(z1, z2):
        return None
    for v in graph.neighbors(u):
        if not alive[v] or v == z1 or v == z2:
            continue
        if not graph.adjacent(v, z1) and not graph.adjacent(v, z2):
            return (v, z1, z2)
    return None


def _witness(graph: IntervalGraph, u: int, leaves: tuple) -> ClawWitness:
    rk = graph.rank
    names = tuple(graph.names[w] for w in sorted(leaves, key=rk.__getitem__))
    return ClawWitness(graph.names[u], names)


def find_claw_at(graph: IntervalGraph, u: str) -> ClawWitness | None:
    """Some induced claw centered at u, or None if u centers none."""
    alive = [True] * graph.n
    c = graph.by_name(u)
    leaves = _claw_leaves(graph, c, alive)
    return None if leaves is None else _witness(graph, c, leaves)


def find_claw(graph: IntervalGraph) -> ClawWitness | None:
    """First induced claw in right-endpoint order of centers, or None."""
    alive = [True] * graph.n
    for u in graph.sigma:
        leaves = _claw_leaves(graph, u, alive)
        if leaves is not None:
            return _witness(graph, u, leaves)
    return None


def approx_deletion_set(graph: IntervalGraph) -> DeletionSet:
    """Factor-4 deletion set for a semi-proper representation.

    One pass in right-endpoint order; each center contributes at most one
    claw, whose four vertices are deleted together and recorded as a
    certificate. The certificates are vertex-disjoint, so any deletion set
    needs at least a quarter of what this returns.
    """
    alive = [True] * graph.n
    deleted = []
    certs = []
    rk = graph.rank
    for u in graph.sigma:
        if not alive[u]:
            continue
        leaves = _claw_leaves(graph, u, alive)
        if leaves is None:
            continue
        quad = (u,) + leaves
        for w in quad:
            alive[w] = False
            deleted.append(graph.names[w])
        names = tuple(graph.names[w] for w in sorted(leaves, key=rk.__getitem__))
        certs.append(ClawWitness(graph.names[u], names))
    return DeletionSet(frozenset(deleted), tuple(certs))


def exact_deletion_set(
    graph: IntervalGraph, k_max: int = 8, node_cap: int = 1_000_000
) -> DeletionSet | None:
    """Minimum deletion set by iterative-deepening 4-way branching.

    Returns None if no solution of size <= k_max exists; raises
    BudgetExceeded once the search tree outgrows node_cap.
    """
    alive = [True] * graph.n
    nodes = 0

    def first_claw():
        for u in graph.sigma:
            if alive[u]:
                leaves = _claw_leaves(graph, u, alive)
                if leaves is not None:
                    return (u,) + leaves
        return None

    def search(budget: int, chosen: list) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise BudgetExceeded(f"more than {node_cap} branching nodes")
        quad = first_claw()
        if quad is None:
            return True
        if budget == 0:
            return False
        for w in quad:
            alive[w] = False
            chosen.append(w)
            if search(budget - 1, chosen):
                return True
            chosen.pop()
            alive[w] = True
        return False

    for k in range(k_max + 1):
        chosen: list = []
        if search(k, chosen):
            return DeletionSet(frozenset(graph.names[w] for w in chosen), ())
    return None


def is_proper_representation(graph: IntervalGraph) -> bool:
    """True iff no interval contains another (left-sorted rights must rise)."""
    order = sorted(range(graph.n), key=graph.left.__getitem__)
    rights = [graph.right[v] for v in order]
    return all(a < b for a, b in zip(rights, rights[1:]))


def add_dummies(graph: IntervalGraph, deletion: DeletionSet):
    """Append the two zero-weight sentinel intervals flanking everything.

    The low sentinel sits before every endpoint and the high one after, so
    they are isolated, first and last in the right-endpoint order, and both
    join the deletion set. Returns the widened graph and deletion set.
    """
    if deletion.dummies is not None:
        raise DoubleAugment("sentinels already added")
    taken = set(graph.names)
    lo_name = fresh_name("d0", taken)
    taken.add(lo_name)
    hi_name = fresh_name(f"d{len(deletion.marked) + 1}", taken)
    if graph.n:
        lo, hi = min(graph.left), max(graph.right)
    else:
        lo, hi = 0, 1
    records = graph.records()
    records.insert(0, (lo_name, lo - 2, lo - 1, 0))
    records.append((hi_name, hi + 1, hi + 2, 0))
    widened = build(records)
    out = DeletionSet(
        deletion.marked | {lo_name, hi_name},
        deletion.certificates,
        (lo_name, hi_name),
    )
    return widened, out
