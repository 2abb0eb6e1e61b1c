"""Command-line front end: generate, solve, dump reductions, bench, match.

Exit codes: 0 on success, 2 for usage or parse problems, 3 when oracle
verification contradicts the solver.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from .claws import add_dummies, approx_deletion_set
from .errors import InvalidSpec, ParseError
from .generators import GeneratorSpec, generate
from .intervals import format_intervals, normalize_endpoints, parse_intervals
from .matching import kernelize, max_matching, parse_edge_list
from .oracle import brute_longest_path
from .pipeline import longest_path
from .reduce1 import apply_rule1, compute_stage1_families
from .reduce2 import apply_rule2, compute_stage2_families
from .semiproper import make_semi_proper

CSV_HEADER = (
    "instance_id,n,m,seed,d_size,kappa,b_size,answer_length,"
    "t_preprocess_ns,t_reduce1_ns,t_reduce2_ns,t_dp_ns,t_lift_ns,oracle_length"
)


@click.group()
def main() -> None:
    """Longest path on interval graphs, reduction by reduction."""


def _load_intervals(path: str):
    try:
        return parse_intervals(Path(path).read_text())
    except ParseError as exc:
        raise click.UsageError(f"cannot parse {path}: {exc}") from exc


@main.command()
@click.option("--kind", type=click.Choice(["random", "proper", "planted"]), required=True)
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, default=0, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def gen(kind: str, n: int, k: int, seed: int) -> None:
    """Write a generated interval file to standard output."""
    try:
        graph = generate(GeneratorSpec(kind=kind, n=n, k=k, seed=seed))
    except InvalidSpec as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(format_intervals(graph), nl=False)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--verify-oracle", is_flag=True, help="cross-check against brute force (n <= 18)")
@click.option("--json", "as_json", is_flag=True, help="emit a JSON result document")
def solve(file: str, verify_oracle: bool, as_json: bool) -> None:
    """Longest path of the interval graph in FILE."""
    graph = _load_intervals(file)
    if any(w != 1 for w in graph.weight):
        raise click.UsageError("solve expects unit weights")
    result = longest_path(graph)
    if verify_oracle and graph.n <= 18:
        want, _ = brute_longest_path(graph)
        if want != result.length:
            click.echo(
                f"verification mismatch: solver {result.length}, oracle {want}",
                err=True,
            )
            sys.exit(3)
    if as_json:
        click.echo(
            json.dumps({"length": result.length, "path": result.path, "stats": result.stats})
        )
    else:
        click.echo(" ".join([str(result.length), *result.path]))


def _stage_objects(graph):
    normal = normalize_endpoints(graph)
    semi = make_semi_proper(normal)
    deletion = approx_deletion_set(semi)
    widened, deletion = add_dummies(semi, deletion)
    fam1 = compute_stage1_families(widened, deletion)
    stage1 = apply_rule1(widened, fam1)
    return deletion, stage1


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--stage", type=click.Choice(["1", "2"]), required=True)
def reduce(file: str, stage: str) -> None:
    """Dump the graph after one or both reductions, with the partition."""
    graph = _load_intervals(file)
    deletion, stage1 = _stage_objects(graph)
    if stage == "1":
        out = stage1.g_sharp
        notes = [
            "# d: " + " ".join(sorted(deletion.marked)),
            "# a: " + " ".join(sorted(stage1.A)),
            "# u_sharp: " + " ".join(sorted(stage1.U_sharp)),
        ]
    else:
        fam2 = compute_stage2_families(stage1, deletion)
        special = apply_rule2(stage1, fam2, deletion)
        out = special.graph
        notes = [
            "# a: " + " ".join(sorted(special.A)),
            "# b: " + " ".join(sorted(special.B)),
            f"# kappa: {special.kappa}",
        ]
    click.echo(format_intervals(out), nl=False)
    for line in notes:
        click.echo(line)


def _bench_row(job) -> str:
    instance_id, kind, n, k, seed = job
    graph = generate(GeneratorSpec(kind=kind, n=n, k=k, seed=seed))
    result = longest_path(graph)
    oracle = ""
    if graph.n <= 18:
        oracle = str(brute_longest_path(graph)[0])
    s = result.stats
    fields = [
        instance_id,
        str(s["n"]),
        str(s["m"]),
        str(seed),
        str(s["d_size"]),
        str(s["kappa"]),
        str(s["b_size"]),
        str(result.length),
        str(s["t_preprocess_ns"]),
        str(s["t_reduce1_ns"]),
        str(s["t_reduce2_ns"]),
        str(s["t_dp_ns"]),
        str(s["t_lift_ns"]),
        oracle,
    ]
    return ",".join(fields)


def _int_list(raw: str, what: str) -> list:
    items = [p for p in raw.split(",") if p.strip()]
    if not items:
        raise click.UsageError(f"empty {what}")
    try:
        return [int(p) for p in items]
    except ValueError as exc:
        raise click.UsageError(f"bad {what}: {raw!r}") from exc


@main.command()
@click.option("--kind", type=click.Choice(["random", "proper", "planted"]), default="planted", show_default=True)
@click.option("--n-list", required=True, help="comma-separated vertex counts")
@click.option("--k-list", required=True, help="comma-separated planted widths")
@click.option("--reps", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=1, show_default=True, help="base seed; rep index added")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None)
def bench(kind: str, n_list: str, k_list: str, reps: int, seed: int, csv_path: str | None) -> None:
    """Run the pipeline over a seeded corpus and emit CSV rows."""
    ns = _int_list(n_list, "--n-list")
    ks = _int_list(k_list, "--k-list")
    if reps < 1:
        raise click.UsageError("--reps must be at least 1")
    jobs = []
    for n in ns:
        for k in ks:
            for rep in range(reps):
                s = seed + rep
                jobs.append((f"{kind}_n{n}_k{k}_s{s}", kind, n, k, s))
    workers = max(1, int(os.environ.get("FPT_IP_THREADS", "1")))
    if workers == 1:
        rows = [_bench_row(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_row, jobs))
    text = "\n".join([CSV_HEADER, *rows]) + "\n"
    if csv_path is None:
        click.echo(text, nl=False)
    else:
        Path(csv_path).write_text(text)
        click.echo(f"wrote {len(rows)} rows to {csv_path}")


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--k", type=int, required=True)
def match(file: str, k: int) -> None:
    """Decide whether the edge-list graph in FILE has a matching of size k."""
    if k < 1:
        raise click.UsageError("--k must be positive")
    try:
        graph = parse_edge_list(Path(file).read_text())
    except ParseError as exc:
        raise click.UsageError(f"cannot parse {file}: {exc}") from exc
    outcome = kernelize(graph, k)
    if outcome.verdict == "YES":
        click.echo("YES")
        click.echo(f"removed_high_degree={outcome.removed_high_degree} kernel=none")
        return
    small, k_prime = outcome.kernel
    verdict = "YES" if len(max_matching(small)) >= k_prime else "NO"
    click.echo(verdict)
    click.echo(
        f"removed_high_degree={outcome.removed_high_degree} "
        f"kernel_n={small.n} kernel_m={small.m} k_prime={k_prime}"
    )


if __name__ == "__main__":
    main()
