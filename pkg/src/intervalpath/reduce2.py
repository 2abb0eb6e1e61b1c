"""Second reduction: replace each surviving free group by a small clone clique.

A grid T of split points is read off the reduced graph: lefts and rights of
the deletion set plus the endpoints of the first two and last two replacement
intervals of every cell. Surviving free vertices are binned by which T-gap
holds their left and which holds their right endpoint; each nonempty bin is
swapped for min(bin size, deletion size + 4) copies of its span, the bin's
weight split evenly among them. Copies are staircased inside the two outermost
coordinate gaps of the span so they pairwise overlap, contain nothing, and
keep exactly the span's adjacency to the rest of the graph.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import EmptySet
from .intervals import IntervalGraph, build, fresh_name, normalize_endpoints
from .reduce1 import Stage1Result


@dataclass(frozen=True)
class Stage2Families:
    """Grid points and the binned free vertices.

    ``Uji`` maps 1-based gap pairs (j, i), meaning the left endpoint falls
    between T[j-2] and T[j-1] and the right between T[i-2] and T[i-1], to the
    bin's vertex names in right-endpoint order. ``S2`` repeats the bins in
    sorted key order.
    """

    T: tuple
    Uji: dict
    S2: tuple


@dataclass(frozen=True)
class CloneGroup:
    key: tuple
    members: tuple
    clones: tuple
    records: tuple


@dataclass(frozen=True)
class SpecialWeightedIntervalGraph:
    graph: IntervalGraph
    A: frozenset
    B: frozenset
    kappa: int
    back_map2: dict
    groups: tuple = ()
    g_sharp: IntervalGraph = field(repr=False, default=None)
    v0: str | None = None


def is_weakly_reducible(graph: IntervalGraph, vertices) -> bool:
    """Connected proper induced run, and anything nested in a member sees all."""
    idx = sorted(
        {graph.by_name(v) for v in vertices}, key=graph.left.__getitem__
    )
    if not idx:
        raise EmptySet("weak reducibility of nothing")
    rights = [graph.right[v] for v in idx]
    if any(a >= b for a, b in zip(rights, rights[1:])):
        return False
    for prev, cur in zip(idx, idx[1:]):
        if graph.left[cur] > graph.right[prev]:
            return False
    # Containment here is non-strict, so v = u always qualifies and the
    # whole set must sit in N(u) for every member u: cliqueness is baked
    # into the condition rather than being a separate requirement.
    for u in idx:
        for v in range(graph.n):
            nested = graph.left[u] <= graph.left[v] and graph.right[v] <= graph.right[u]
            if not nested:
                continue
            if any(w != v and not graph.adjacent(v, w) for w in idx):
                return False
    assert all(
        graph.adjacent(a, b) for a in idx for b in idx if a != b
    ), "a weakly reducible set must induce a clique"
    return True


def _cell_a_names(stage1: Stage1Result) -> dict:
    """Replacement-vertex names per cell, in component order."""
    a_order = list(stage1.back_map)
    out = {}
    pos = 0
    for key, comps in stage1.families.components.items():
        out[key] = a_order[pos : pos + len(comps)]
        pos += len(comps)
    return out


def compute_stage2_families(stage1: Stage1Result, deletion) -> Stage2Families:
    """Assemble the grid T and bin the surviving free vertices by gap pair."""
    g = stage1.g_sharp
    points = set()
    for nm in deletion.marked:
        v = g.by_name(nm)
        points.add(g.left[v])
        points.add(g.right[v])
    for names in _cell_a_names(stage1).values():
        q = len(names)
        picks = sorted({0, 1, q - 2, q - 1} & set(range(q)))
        for t in picks:
            v = g.by_name(names[t])
            points.add(g.left[v])
            points.add(g.right[v])
    t_sorted = sorted(points)

    uji: dict = {}
    for v in sorted((g.by_name(nm) for nm in stage1.U_sharp), key=g.rank.__getitem__):
        j = bisect_left(t_sorted, g.left[v]) + 1
        i = bisect_left(t_sorted, g.right[v]) + 1
        uji.setdefault((j, i), []).append(g.names[v])
    uji = {key: tuple(names) for key, names in uji.items()}
    s2 = tuple(uji[key] for key in sorted(uji))
    return Stage2Families(T=tuple(t_sorted), Uji=uji, S2=s2)


def _place_clones(records: list, span_l, span_r, count: int, weight, names) -> list:
    """Staircase ``count`` copies of the span inside its outermost free gaps."""
    coords = sorted(c for rec in records for c in (rec[1], rec[2]))
    mid = Fraction(span_l + span_r, 2)
    left_hi = min(coords[bisect_right(coords, span_l)], mid)
    right_lo = max(coords[bisect_left(coords, span_r) - 1], mid)
    out = []
    for j, name in enumerate(names, 1):
        frac = Fraction(j, count + 1)
        out.append(
            (
                name,
                span_l + (left_hi - span_l) * frac,
                right_lo + (span_r - right_lo) * frac,
                weight,
            )
        )
    return out


def apply_rule2(
    stage1: Stage1Result, families: Stage2Families, deletion
) -> SpecialWeightedIntervalGraph:
    """Swap each bin for its clone clique, then renumber endpoints."""
    g = stage1.g_sharp
    cap = len(deletion.marked) + 4
    records = list(g.records())
    taken = {rec[0] for rec in records}
    groups = []
    back_map2 = {}
    for gi, key in enumerate(sorted(families.Uji), 1):
        members = families.Uji[key]
        idx = [g.by_name(nm) for nm in members]
        span_l = min(g.left[v] for v in idx)
        span_r = max(g.right[v] for v in idx)
        total = sum(g.weight[v] for v in idx)
        count = min(len(members), cap)
        absorbed = set(members)
        records = [rec for rec in records if rec[0] not in absorbed]
        names = []
        for j in range(1, count + 1):
            nm = fresh_name(f"c{gi}_{j}", taken)
            taken.add(nm)
            names.append(nm)
        clone_recs = _place_clones(
            records, span_l, span_r, count, Fraction(total) / count, names
        )
        records.extend(clone_recs)
        groups.append(
            CloneGroup(
                key=key,
                members=members,
                clones=tuple(names),
                records=tuple(clone_recs),
            )
        )
        back_map2[tuple(names)] = members

    hat = normalize_endpoints(build(records))
    k = len(deletion.marked) - 2
    kappa = (k + 2) + comb(18 * k + 16, 2) * (k + 6)
    return SpecialWeightedIntervalGraph(
        graph=hat,
        A=stage1.A,
        B=frozenset(hat.names) - stage1.A,
        kappa=kappa,
        back_map2=back_map2,
        groups=tuple(groups),
        g_sharp=g,
    )


def intermediate_graphs(special: SpecialWeightedIntervalGraph) -> list:
    """Replay the group swaps, returning graphs before each swap plus the last.

    Element t is the graph with the first t groups applied; the final element
    is adjacency-identical to ``special.graph`` up to endpoint renumbering.
    """
    records = list(special.g_sharp.records())
    out = [special.g_sharp]
    for grp in special.groups:
        absorbed = set(grp.members)
        records = [rec for rec in records if rec[0] not in absorbed]
        records.extend(grp.records)
        out.append(build(records))
    return out
