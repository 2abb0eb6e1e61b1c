"""End-to-end longest path: preprocess, reduce twice, run the DP, lift back.

Lifting retraces the reductions in reverse. Clone groups are undone against
replayed intermediate graphs: the path is topped up with any clones it
skipped, reordered into normal form, and the clone occurrences are swapped
for the original vertices, the last one expanding into the whole remaining
run. Collapsed clusters then reinflate in place. If a swap ever breaks
adjacency the lifted vertex set is reordered from scratch into a normal path
of the target graph; only if that also fails does the lift raise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .claws import add_dummies, approx_deletion_set
from .dp import max_weight_path
from .errors import InvalidSpec, LiftFailure, NormalizationFailed
from .intervals import IntervalGraph, normalize_endpoints
from .paths import is_path, normalize_path
from .reduce1 import Stage1Result, apply_rule1, compute_stage1_families
from .reduce2 import (
    SpecialWeightedIntervalGraph,
    apply_rule2,
    compute_stage2_families,
    intermediate_graphs,
)
from .semiproper import make_semi_proper


@dataclass(frozen=True)
class PathResult:
    length: int
    path: list
    stats: dict


def _renormalize(graph: IntervalGraph, names: list) -> list:
    try:
        return normalize_path(graph, names)
    except NormalizationFailed as exc:
        raise LiftFailure(f"lifted set admits no path: {exc}") from exc


def lift_stage2(path: list, special: SpecialWeightedIntervalGraph) -> list:
    """Undo the clone swaps group by group, newest first."""
    stages = intermediate_graphs(special)
    cur = list(path)
    for t in range(len(special.groups), 0, -1):
        grp = special.groups[t - 1]
        here, target = stages[t], stages[t - 1]
        used = [nm for nm in cur if nm in set(grp.clones)]
        if not used:
            continue
        missing = [nm for nm in grp.clones if nm not in set(used)]
        at = max(i for i, nm in enumerate(cur) if nm in set(grp.clones))
        cur = cur[: at + 1] + missing + cur[at + 1 :]
        cur = _renormalize(here, cur)
        members = list(grp.members)
        clone_set = set(grp.clones)
        lifted = []
        seen = 0
        for nm in cur:
            if nm not in clone_set:
                lifted.append(nm)
                continue
            seen += 1
            if seen < len(grp.clones):
                lifted.append(members[seen - 1])
            else:
                lifted.extend(members[seen - 1 :])
        if not is_path(target, lifted):
            lifted = _renormalize(target, lifted)
        cur = lifted
    return cur


def lift_stage1(path: list, stage1: Stage1Result) -> list:
    """Reinflate every collapsed cluster in place."""
    out = []
    for nm in path:
        if nm in stage1.back_map:
            out.extend(stage1.back_map[nm])
        else:
            out.append(nm)
    if out and not is_path(stage1.source, out):
        out = _renormalize(stage1.source, out)
    return out


def longest_path(graph: IntervalGraph) -> PathResult:
    """Longest path of an unweighted interval graph, with stage timings."""
    if any(w != 1 for w in graph.weight):
        raise InvalidSpec("longest_path expects unit weights")

    t0 = time.perf_counter_ns()
    normal = normalize_endpoints(graph)
    semi = make_semi_proper(normal)
    deletion = approx_deletion_set(semi)
    d_size = len(deletion.marked)
    widened, deletion = add_dummies(semi, deletion)
    t1 = time.perf_counter_ns()

    fam1 = compute_stage1_families(widened, deletion)
    stage1 = apply_rule1(widened, fam1)
    t2 = time.perf_counter_ns()

    fam2 = compute_stage2_families(stage1, deletion)
    special = apply_rule2(stage1, fam2, deletion)
    t3 = time.perf_counter_ns()

    outcome = max_weight_path(special)
    t4 = time.perf_counter_ns()

    hat_path = outcome.path
    sharp_path = lift_stage2(hat_path, special)
    full_path = lift_stage1(sharp_path, stage1)
    t5 = time.perf_counter_ns()

    weight = outcome.weight
    if weight != int(weight):
        raise LiftFailure(f"non-integer answer {weight} on unit weights")
    length = int(weight)
    if length != len(full_path) or (full_path and not is_path(graph, full_path)):
        raise LiftFailure("lifted path does not realize the computed weight")

    stats = {
        "n": graph.n,
        "m": graph.edge_count(),
        "d_size": d_size,
        "kappa": special.kappa,
        "b_size": len(special.B),
        "t_preprocess_ns": t1 - t0,
        "t_reduce1_ns": t2 - t1,
        "t_reduce2_ns": t3 - t2,
        "t_dp_ns": t4 - t3,
        "t_lift_ns": t5 - t4,
    }
    return PathResult(length=length, path=full_path, stats=stats)
