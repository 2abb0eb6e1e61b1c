"""Normal paths: validation and greedy normalization.

A path is normal when it starts at the vertex with the smallest right
endpoint of the whole path and each later vertex has the smallest right
endpoint among the predecessor's neighbors that are still ahead in the
sequence. Every path's vertex set carries exactly one normal order, and the
greedy construction below finds it or proves there is none.
"""

from __future__ import annotations

from .errors import EmptySet, InvalidPath, NormalizationFailed
from .intervals import IntervalGraph


def _to_indices(graph: IntervalGraph, names) -> list:
    try:
        return [graph.index[nm] for nm in names]
    except KeyError as exc:
        raise InvalidPath(f"unknown vertex {exc.args[0]!r}") from None


def is_path(graph: IntervalGraph, names) -> bool:
    """True iff names is a nonempty simple path (consecutive vertices adjacent)."""
    try:
        idx = _to_indices(graph, names)
    except InvalidPath:
        return False
    if not idx or len(set(idx)) != len(idx):
        return False
    return all(graph.adjacent(a, b) for a, b in zip(idx, idx[1:]))


def is_normal_path(graph: IntervalGraph, names) -> bool:
    """Check normality of a path. Raises InvalidPath if it is not a path at all."""
    idx = _to_indices(graph, names)
    if not idx:
        raise InvalidPath("empty sequence")
    if len(set(idx)) != len(idx):
        raise InvalidPath("repeated vertex")
    for a, b in zip(idx, idx[1:]):
        if not graph.adjacent(a, b):
            raise InvalidPath(f"{graph.names[a]!r} and {graph.names[b]!r} not adjacent")
    rank = graph.rank
    if min(idx, key=rank.__getitem__) != idx[0]:
        return False
    remaining = set(idx[1:])
    for prev, cur in zip(idx, idx[1:]):
        # neighbors() is rank-sorted, so the first hit is the forced choice
        for w in graph.neighbors(prev):
            if w in remaining:
                if w != cur:
                    return False
                break
        remaining.discard(cur)
    return True


def normalize_path(graph: IntervalGraph, vertices) -> list:
    """Arrange a vertex set into its normal path order.

    Raises NormalizationFailed when the greedy order strands a vertex, which
    happens exactly when the set is not the vertex set of any path.
    """
    idx = _to_indices(graph, set(vertices))
    if not idx:
        raise EmptySet("nothing to normalize")
    rank = graph.rank
    cur = min(idx, key=rank.__getitem__)
    remaining = set(idx)
    remaining.discard(cur)
    out = [cur]
    while remaining:
        nxt = None
        for w in graph.neighbors(cur):
            if w in remaining:
                nxt = w
                break
        if nxt is None:
            raise NormalizationFailed(
                f"stuck at {graph.names[cur]!r} with {len(remaining)} vertices left"
            )
        remaining.discard(nxt)
        out.append(nxt)
        cur = nxt
    return [graph.names[v] for v in out]
