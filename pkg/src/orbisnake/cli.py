"""Command-line front end.

Three commands: `expand` prints the Laurent expansion of a curve given as a
JSON file, `verify` runs one of the named cross-validation suites, and
`mutate` applies extended-matrix mutations.  Exit codes: 0 success, 1 a
verification suite failed, 2 invalid input, 3 internal inconsistency
between independent pipelines.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass

import click

from . import fixtures
from .fuzz import random_case
from .lift import verify_lift
from .mpath import chi, cheb_matrix_power, winding_reduction_check
from .orbifold import (SCHEMA_VERSION, ValidationError, bmatrix_from_json,
                       bmatrix_to_json, descriptor_from_json, dumps,
                       generalized_mutate, make_bmatrix,
                       triangulation_from_json)
from .ring import CoefPoly, XYPoly, cheb_t, cheb_u, cheb_u_y
from .skein import (chi_multicurve, solve_y_monomials, verify_three_term,
                    verify_two_term)
from .snake import (InternalInconsistency, build_snake_graph,
                    cluster_expansion, enumerate_matchings, matching_poset,
                    matching_sum, poset_dot)
from .universal import (build_ug, mg_matrix, partitioned_sums,
                        weighted_sum_via_matrices)

EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3

SUITES = ("arcsgraphs", "lift", "universal", "skein", "mutation", "chebyshev")


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one invocation.

    Defaults: canonical output, seed 0, tolerance 1e-9, fuzz count 100,
    universal chain size 5.
    """
    command: str
    input_path: str = ""
    fmt: str = "canonical"
    seed: int = 0
    tol: float = 1e-9
    fuzz: int = 100
    n: int = 5


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        click.echo(f"error: cannot read {path}: {e}", err=True)
        sys.exit(EXIT_BAD_INPUT)


@click.group()
def main():
    """Laurent expansions of curves on triangulated orbifolds."""


@main.command()
@click.argument("input_file", type=click.Path())
@click.option("--format", "fmt", default="canonical",
              type=click.Choice(["canonical", "latex", "dot", "json"]),
              show_default=True, help="Output format.")
@click.option("--poset", is_flag=True,
              help="Emit the matching poset (DOT) instead of the polynomial.")
def expand(input_file, fmt, poset):
    """Print the Laurent expansion of the curve in INPUT_FILE.

    The file holds {"schema_version": 1, "triangulation": {...},
    "curve": {...}}, or {"schema_version": 1, "universal": {"n": N}} for
    the generic chain.
    """
    data = _load_json(input_file)
    try:
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValidationError("unsupported schema_version")
        if "universal" in data:
            udata = data["universal"]
            chain = build_ug(int(udata["n"]), band=udata.get("band"))
            if fmt == "dot" or poset:
                click.echo(poset_dot(chain), nl=False)
                return
            poly = matching_sum(chain)
        else:
            t = triangulation_from_json(data["triangulation"])
            d = descriptor_from_json(data["curve"])
            if fmt == "dot" or poset:
                chain = build_snake_graph(d, t)
                click.echo(poset_dot(chain), nl=False)
                return
            poly = cluster_expansion(d, t)
    except InternalInconsistency as e:
        click.echo(f"internal inconsistency: {e}", err=True)
        sys.exit(EXIT_INTERNAL)
    except (ValidationError, KeyError, TypeError) as e:
        click.echo(f"error: invalid input: {e}", err=True)
        sys.exit(EXIT_BAD_INPUT)
    if fmt == "latex":
        click.echo(poly.latex())
    elif fmt == "json":
        click.echo(dumps({"schema_version": SCHEMA_VERSION,
                          "canonical": poly.canonical_string(),
                          "latex": poly.latex()}), nl=False)
    else:
        click.echo(poly.canonical_string())


# ---------------------------------------------------------------------------
# verification suites


def _suite_arcsgraphs(cfg: RunConfig):
    t = fixtures.example_triangulation()
    for name, d, target in fixtures.arc_fixtures():
        yield f"fixture {name} matching sum", cluster_expansion(d, t) == target
        yield f"fixture {name} matrix product", chi(d, t, cfg.tol) == target
    rng = random.Random(cfg.seed)
    bad = 0
    negative = 0
    for _ in range(cfg.fuzz):
        tf, df = random_case(rng, closed=rng.random() < 0.3)
        x = cluster_expansion(df, tf)
        if chi(df, tf, cfg.tol) != x:
            bad += 1
        if any(c.eval_numeric() < -cfg.tol for _m, c in x.sorted_terms()):
            negative += 1
    yield f"fuzz chi == X on {cfg.fuzz} descriptors", bad == 0
    yield "fuzz coefficient positivity", negative == 0


def _suite_lift(cfg: RunConfig):
    for f in fixtures.skein_fixtures():
        if f.name != "ptolemy-quadrilateral":
            continue
        yield "fixture quadrilateral diagonal", verify_lift(
            f.c[0], f.triangulation)
    rng = random.Random(cfg.seed)
    bad = sum(1 for _ in range(cfg.fuzz)
              if not verify_lift(*reversed(random_case(rng, ordinary=True))))
    yield f"fuzz lift oracle on {cfg.fuzz} ordinary arcs", bad == 0


def _suite_universal(cfg: RunConfig):
    for n in range(1, cfg.n + 1):
        chain = build_ug(n)
        ms = enumerate_matchings(chain)
        yield f"UG_{n} has 2^{n} matchings", len(ms) == 2 ** n
        poset = matching_poset(chain)
        yield (f"UG_{n} poset is the Boolean lattice",
               len(poset.covers) == n * 2 ** (n - 1))
        yield (f"UG_{n} partitioned sums equal the matrix product",
               partitioned_sums(chain) == mg_matrix(chain))
        yield (f"UG_{n} boundary sandwich recovers the sum",
               weighted_sum_via_matrices(chain) == matching_sum(chain))
        if n >= 2:
            for mode in ("az", "bw"):
                band = build_ug(n, band=mode)
                yield (f"UG_{n} band {mode} trace recovers the sum",
                       weighted_sum_via_matrices(band) == matching_sum(band))


def _suite_skein(cfg: RunConfig):
    for f in fixtures.skein_fixtures():
        t = f.triangulation
        if f.kind == "two_term":
            yield f"{f.name} identity", verify_two_term(f)
            lhs = chi_multicurve(f.c, t)
            basis = [chi_multicurve(f.c1, t).scale(f.signs[0]),
                     chi_multicurve(f.c2, t).scale(f.signs[1])]
        else:
            yield f"{f.name} identity", verify_three_term(f)
            lhs = cluster_expansion(f.g1, t) * cluster_expansion(f.g2, t)
            b1 = cluster_expansion(f.b1, t)
            b2 = cluster_expansion(f.b2, t)
            basis = [b1 * b1,
                     (b1 * b2).scale(CoefPoly.lam(f.order)),
                     b2 * b2]
        # the solver needs distinct leading monomials; the kink fixture has
        # proportional sides, so its Y's are not uniquely determined
        leads = [b.leading()[0] for b in basis if not b.is_zero()]
        if len(set(leads)) < len(leads):
            continue
        solved = solve_y_monomials(lhs, basis)
        # a zero basis element (lambda_2 = 0) leaves its Y undetermined
        yield (f"{f.name} solver regenerates Y",
               solved is not None and all(
                   basis[i].is_zero() or solved[i] == f.y[i]
                   for i in range(len(basis))))


def _suite_mutation(cfg: RunConfig):
    left, right = fixtures.bmatrix_pair()
    yield ("pending-flip fixture",
           generalized_mutate(left, fixtures.BMATRIX_INDEX) == right)
    rng = random.Random(cfg.seed)
    bad = 0
    for _ in range(cfg.fuzz):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-3, 3) for _ in range(n)]
                for _ in range(n + rng.randint(0, 3))]
        pending = [rng.random() < 0.4 for _ in range(n)]
        b = make_bmatrix(rows, pending)
        k = rng.randrange(n)
        if generalized_mutate(generalized_mutate(b, k), k) != b:
            bad += 1
    yield f"mutation involution on {cfg.fuzz} random matrices", bad == 0


def _suite_chebyshev(cfg: RunConfig):
    ok = True
    try:
        for p in (2, 3, 5, 12):
            for k in range(0, 31):
                cheb_matrix_power(k, p)
                cheb_matrix_power(k, p, clockwise=True)
    except AssertionError:
        ok = False
    yield "matrix power closed form, k <= 30", ok

    ok = all(winding_reduction_check(k, m, p, cfg.tol)
             for p in range(2, 13) for k in range(0, 4)
             for m in range(-3, 4) if k + m * p >= 0)
    yield "winding reduction by multiples of p", ok

    ok = all(cheb_t(k, p) == cheb_u(k, p) - cheb_u(k - 2, p)
             for p in (2, 3, 5, 7) for k in range(0, 41))
    yield "first kind from second kind", ok

    u_prev, u = 1, 2
    ok = True
    for k in range(0, 41):
        val = 1 if k == 0 else (2 if k == 1 else 2 * u - u_prev)
        if k >= 2:
            u_prev, u = u, val
        if val != k + 1:
            ok = False
    yield "U_k(2) = k + 1", ok

    one_plus_y = XYPoly.const(1) + XYPoly.y()
    ok = True
    for k in range(0, 41):
        total = XYPoly.const(0)
        for i in range(k + 1):
            total = total + XYPoly.y() ** i
        if cheb_u_y(k).subs_x(one_plus_y) != total:
            ok = False
    yield "U_k^Y(1 + Y) is the geometric sum", ok


_SUITE_FUNCS = {
    "arcsgraphs": _suite_arcsgraphs,
    "lift": _suite_lift,
    "universal": _suite_universal,
    "skein": _suite_skein,
    "mutation": _suite_mutation,
    "chebyshev": _suite_chebyshev,
}


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--fuzz", default=100, show_default=True,
              help="Number of random cases where the suite fuzzes.")
@click.option("--seed", default=0, show_default=True)
@click.option("--tol", default=1e-9, show_default=True)
@click.option("--n", "n_max", default=5, show_default=True,
              help="Largest chain size for the universal suite.")
def verify(suite, fuzz, seed, tol, n_max):
    """Run one of the cross-validation suites."""
    cfg = RunConfig(command="verify", seed=seed, tol=tol, fuzz=fuzz, n=n_max)
    failures = 0
    try:
        for name, ok in _SUITE_FUNCS[suite](cfg):
            click.echo(f"{'ok  ' if ok else 'FAIL'} {name}")
            failures += 0 if ok else 1
    except InternalInconsistency as e:
        click.echo(f"internal inconsistency: {e}", err=True)
        sys.exit(EXIT_INTERNAL)
    if failures:
        click.echo(f"{failures} check(s) failed", err=True)
        sys.exit(EXIT_VERIFY_FAILED)
    click.echo(f"suite {suite}: all checks passed")


@main.command()
@click.argument("input_file", type=click.Path())
@click.argument("indices", nargs=-1, type=int)
def mutate(input_file, indices):
    """Apply mutations at INDICES (left to right) to the matrix in INPUT_FILE."""
    data = _load_json(input_file)
    try:
        b = bmatrix_from_json(data)
        for k in indices:
            b = generalized_mutate(b, k)
    except (ValidationError, KeyError, TypeError, IndexError) as e:
        click.echo(f"error: invalid input: {e}", err=True)
        sys.exit(EXIT_BAD_INPUT)
    click.echo(dumps(bmatrix_to_json(b)), nl=False)


if __name__ == "__main__":
    main()
