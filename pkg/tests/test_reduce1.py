from fractions import Fraction

import pytest

from helpers import pipeline_stages, total_weight
from intervalpath.claws import add_dummies, approx_deletion_set
from intervalpath.errors import MissingDummies
from intervalpath.generators import GeneratorSpec, generate
from intervalpath.intervals import normalize_endpoints
from intervalpath.oracle import brute_longest_path, brute_max_weight_path
from intervalpath.reduce1 import apply_rule1, compute_stage1_families, is_reducible
from intervalpath.semiproper import make_semi_proper


def front(graph):
    """Normalize, make semi-proper, grab the deletion set, add sentinels."""
    semi = make_semi_proper(normalize_endpoints(graph))
    deletion = approx_deletion_set(semi)
    return add_dummies(semi, deletion)


def test_is_reducible_frozen(path3, claw4):
    g, _ = front(path3)
    assert is_reducible(g, ["a", "b", "c"])
    assert not is_reducible(claw4, ["v1", "v2"])
    assert is_reducible(claw4, ["v2"])


def test_is_reducible_rejects_span_strays(claw4):
    # u's interval straddles the span of {v1}; only intervals inside the
    # span matter, so {v1} alone is still fine while {v1, u} is connected
    # but swallows v2's interval without containing the vertex.
    assert is_reducible(claw4, ["v1"])
    assert not is_reducible(claw4, ["v1", "u"])


def test_families_require_dummies(path3):
    d = approx_deletion_set(path3)
    with pytest.raises(MissingDummies):
        compute_stage1_families(path3, d)


def test_families_path3_hand_trace(path3):
    g, d = front(path3)
    fam = compute_stage1_families(g, d)
    lo, hi = d.dummies
    li, hi_i = g.by_name(lo), g.by_name(hi)
    assert set(fam.L) == {g.left[li], g.left[hi_i]}
    assert set(fam.R) == {g.right[li], g.right[hi_i]}
    assert set(fam.U) == {"a", "b", "c"}
    assert set(fam.U_star) == {"a", "b", "c"}
    assert list(fam.Li) == [1]
    assert fam.Li[1] == (g.right[li], g.left[hi_i], g.right[hi_i])
    assert fam.p(1) == 2
    assert fam.p_total() == 2
    assert set(fam.U_star_ix) == {(1, 1), (1, 2)}
    assert fam.U_star_ix[(1, 1)] == ("a", "b", "c")
    assert fam.U_star_ix[(1, 2)] == ()
    assert fam.U_2star_ix[(1, 1)] == ("a", "b", "c")
    assert fam.components[(1, 1)] == (("a", "b", "c"),)
    assert fam.S1 == (("a", "b", "c"),)


def test_families_claw4_all_marked(claw4):
    g, d = front(claw4)
    fam = compute_stage1_families(g, d)
    assert fam.U == ()
    assert fam.S1 == ()
    assert fam.p_total() == 2 * (len(d.marked) - 1)


def test_apply_rule1_path3(path3):
    g, d = front(path3)
    fam = compute_stage1_families(g, d)
    out = apply_rule1(g, fam)
    assert out.A == {"a1"}
    assert out.U_sharp == set()
    assert out.back_map == {"a1": ("a", "b", "c")}
    got = {nm: (l, r, w) for nm, l, r, w in out.g_sharp.records()}
    lo, hi = d.dummies
    assert got[lo] == (1, 2, 0)
    assert got[hi] == (5, 6, 0)
    assert got["a1"] == (3, 4, 3)


def test_apply_rule1_empty_family_is_identity(claw4):
    g, d = front(claw4)
    fam = compute_stage1_families(g, d)
    out = apply_rule1(g, fam)
    assert out.A == frozenset()
    assert out.U_sharp == frozenset()
    assert out.g_sharp.records() == normalize_endpoints(g).records()


@pytest.mark.parametrize("seed", range(30))
def test_families_invariants_random(seed):
    g = generate(GeneratorSpec(kind="random", n=1 + seed % 12, seed=seed * 31 + 5))
    widened, deletion, stage1, _ = pipeline_stages(g)
    fam = stage1.families
    k = len(deletion.marked) - 2
    assert fam.p_total() == 2 * (k + 1)
    for i in fam.Li:
        pts = fam.Li[i]
        assert pts[0] in fam.R and pts[-1] in fam.R
        assert list(pts) == sorted(pts)
    cells_union = set()
    for cell, members in fam.U_star_ix.items():
        assert not (set(members) & cells_union)
        cells_union |= set(members)
        assert set(fam.U_2star_ix[cell]) <= set(members)
    assert cells_union == set(fam.U_star)
    for s in fam.S1:
        assert is_reducible(widened, s)
    spans = []
    for s in fam.S1:
        lo = min(widened.left[widened.by_name(nm)] for nm in s)
        hi = max(widened.right[widened.by_name(nm)] for nm in s)
        for lo2, hi2 in spans:
            assert hi < lo2 or hi2 < lo
        spans.append((lo, hi))


@pytest.mark.parametrize("seed", range(30))
def test_rule1_invariants_random(seed):
    g = generate(GeneratorSpec(kind="random", n=1 + seed % 12, seed=seed * 17 + 3))
    widened, deletion, stage1, _ = pipeline_stages(g)
    gs = stage1.g_sharp
    assert total_weight(gs, gs.names) == total_weight(widened, widened.names)
    a_idx = [gs.by_name(nm) for nm in stage1.A]
    for i, u in enumerate(a_idx):
        assert gs.weight[u] == len(stage1.back_map[gs.names[u]])
        for v in a_idx[i + 1 :]:
            assert not gs.adjacent(u, v)
        for v in range(gs.n):
            if v != u:
                assert not gs.contains_interval(u, v)
    assert set(gs.names) == deletion.marked | stage1.A | stage1.U_sharp


@pytest.mark.parametrize("seed", range(25))
def test_rule1_preserves_best_weight(seed):
    g = generate(GeneratorSpec(kind="random", n=1 + seed % 12, seed=seed * 7 + 11))
    widened, _, stage1, _ = pipeline_stages(g)
    want, _ = brute_longest_path(g)
    assert brute_max_weight_path(stage1.g_sharp) == Fraction(want)


@pytest.mark.parametrize("seed", range(20))
def test_all_or_none_on_best_paths(seed):
    g = generate(GeneratorSpec(kind="random", n=4 + seed % 9, seed=seed * 5 + 1))
    widened, _, stage1, _ = pipeline_stages(g)
    _, best = brute_longest_path(widened)
    on_path = set(best)
    for s in stage1.families.S1:
        inter = set(s) & on_path
        assert inter == set(s) or inter == set()
