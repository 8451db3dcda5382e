"""Command line front end.

Exit codes: 0 success, 1 internal error, 2 parse error, 3 invalid
configuration, 4 regime violation, 5 empty result.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from typing import Any

from . import __version__
from .exact.serialize import to_jsonable
from .oracle import (SampleConfig, brute_force_facets, brute_force_ss_supports,
                     sample_chamber_count)
from .pgl2 import (BadSubsetSize, NonpositiveWeight, NTooSmall,
                   hm_table, lifted_torus_action, pgl2_chambers_in_halfspace,
                   verify_chamber_bijection)
from .toric import (EmptySemistableLocus, NotSurjective, chamber_data, interior_walls,
                    is_projective_regime, make_weight_configuration, secondary_chambers)

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_CONFIG, EXIT_REGIME, EXIT_EMPTY = 0, 1, 2, 3, 4, 5
JOBS_ENV = "VGIT_JOBS"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunManifest:
    command: str
    inputs: dict
    output: str | None
    seed: int | None = None
    parallelism: int = 1
    tool_version: str = __version__


def parse_matrix_text(text: str) -> list[list[int]]:
    """Rows separated by newlines or ``;``, entries by whitespace or commas."""
    rows = []
    for line in text.replace(";", "\n").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError as exc:
            raise CliError(EXIT_PARSE, f"not an integer row: {line!r}") from exc
    if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
        raise CliError(EXIT_PARSE, "weights must form a nonempty rectangular integer matrix")
    return rows


def parse_weight_file(path: str) -> list[list[int]]:
    """First line ``n r``, then ``n`` rows of ``r`` integers (the matrix gamma)."""
    try:
        with open(path) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from exc
    if not lines:
        raise CliError(EXIT_PARSE, "empty weight file")
    try:
        n, r = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise CliError(EXIT_PARSE, "first line must be 'n r'") from exc
    rows = parse_matrix_text("\n".join(lines[1:]))
    if len(rows) != n or any(len(row) != r for row in rows):
        raise CliError(EXIT_PARSE, f"expected {n} rows of {r} integers")
    return rows


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{what} must be comma-separated integers") from exc


def _gamma_from_args(args) -> tuple[list[list[int]], dict]:
    if args.weights:
        return parse_weight_file(args.weights), {"weights": args.weights}
    return parse_matrix_text(args.inline), {"inline": args.inline}


def _configuration(gamma):
    beta = [tuple(row[i] for row in gamma) for i in range(len(gamma[0]))]
    try:
        return make_weight_configuration(beta)
    except NotSurjective as exc:
        raise CliError(EXIT_CONFIG, f"NotSurjective: {exc}") from exc
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@contextmanager
def _mapper(jobs: int):
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield pool.map


def _emit(args, manifest: RunManifest, result: Any, table: str) -> None:
    if args.format == "table":
        text = table
    else:
        text = json.dumps({"manifest": asdict(manifest), "result": to_jsonable(result)}, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _table(header: list[str], rows: list[list[Any]]) -> str:
    cells = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_gkz(args) -> int:
    gamma, inputs = _gamma_from_args(args)
    w = _configuration(gamma)
    inputs["require_projective"] = args.require_projective
    if args.require_projective and not is_projective_regime(w):
        raise CliError(EXIT_REGIME, "weights are not in the projective regime")
    jobs = _jobs(args)
    with _mapper(jobs) as map_fn:
        chambers = secondary_chambers(w, map_fn=map_fn)
    result = {"n": w.n, "r": w.r, "nu": w.nu, "walls": interior_walls(w),
              "chamber_count": len(chambers), "chambers": chambers}
    rows = [[c.signs or "()", c.representative, len(c.data.fan.rays), len(c.data.fan.max_cones),
             sorted(c.data.i_empty), c.data.ideal.index_lists()] for c in chambers]
    table = _table(["signs", "chi", "rays", "max_cones", "i_empty", "ideal"], rows)
    _emit(args, RunManifest("gkz", inputs, args.out, None, jobs), result, table)
    return EXIT_OK


def cmd_quotient(args) -> int:
    gamma, inputs = _gamma_from_args(args)
    w = _configuration(gamma)
    chi = parse_int_list(args.character, "character")
    inputs["character"] = args.character
    if len(chi) != w.n:
        raise CliError(EXIT_PARSE, f"character needs {w.n} entries")
    try:
        data = chamber_data(w, chi)
    except EmptySemistableLocus as exc:
        raise CliError(EXIT_EMPTY, f"EmptySemistableLocus: {exc}") from exc
    body = data.to_json()
    table = _table(["field", "value"], [[k, json.dumps(to_jsonable(v))] for k, v in body.items()])
    _emit(args, RunManifest("quotient", inputs, args.out), data, table)
    return EXIT_OK


def _pair(args) -> tuple[int, int]:
    pair = parse_int_list(args.pair, "pair")
    if len(pair) != 2 or pair[0] == pair[1]:
        raise CliError(EXIT_CONFIG, "pair must name two distinct indices")
    return pair[0], pair[1]


def cmd_pgl2(args) -> int:
    n = args.n
    inputs = {"n": n, "pair": args.pair, "action": args.action}
    try:
        if args.action == "chambers":
            chambers = pgl2_chambers_in_halfspace(n, _pair(args))
            table = _table(["signs", "representative"],
                           [[c.signs, c.representative] for c in chambers])
            _emit(args, RunManifest("pgl2 chambers", inputs, args.out), chambers, table)
        elif args.action == "verify":
            jobs = _jobs(args)
            with _mapper(jobs) as map_fn:
                report = verify_chamber_bijection(n, _pair(args), map_fn=map_fn, strict=False)
            rows = [["pgl2 chambers", len(report.pgl2_chambers)],
                    ["gkz chambers", len(report.gkz_chambers)],
                    ["counts match", report.counts_match],
                    ["linear maps found", report.maps_found]]
            _emit(args, RunManifest("pgl2 verify", inputs, args.out, None, jobs), report,
                  _table(["quantity", "value"], rows))
            if not report.counts_match:
                return EXIT_INTERNAL
        else:
            if args.hm_weights is None:
                raise CliError(EXIT_PARSE, "hm needs --weights")
            a = parse_int_list(args.hm_weights, "weights")
            inputs["weights"] = args.hm_weights
            if len(a) != n:
                raise CliError(EXIT_PARSE, f"--weights needs {n} entries")
            entries = hm_table(a)
            result = {"a": a, "profiles": [{"blocks": p.blocks, "class": c.value} for p, c in entries]}
            table = _table(["profile", "class"], [[str(p), c.value] for p, c in entries])
            _emit(args, RunManifest("pgl2 hm", inputs, args.out), result, table)
    except (BadSubsetSize, NTooSmall, NonpositiveWeight, ValueError) as exc:
        raise CliError(EXIT_CONFIG, f"{type(exc).__name__}: {exc}") from exc
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.oracle_action == "supports":
        gamma, inputs = _gamma_from_args(args)
        w = _configuration(gamma)
        chi = parse_int_list(args.character, "character")
        inputs["character"] = args.character
        supports = sorted(sorted(s) for s in brute_force_ss_supports(w, chi))
        _emit(args, RunManifest("oracle supports", inputs, args.out),
              {"supports": supports, "count": len(supports)},
              _table(["support"], [[s] for s in supports]))
        return EXIT_OK
    n = args.n
    inputs = {"n": n, "pair": args.pair, "side": args.side,
              "samples_per_cell": args.samples_per_cell}
    cfg = SampleConfig(seed=args.seed, samples_per_cell=args.samples_per_cell)
    try:
        if args.side == "pgl2":
            s = _pair(args)
            chambers = pgl2_chambers_in_halfspace(n, s)
            walls = [wl.normal for wl in chambers.walls]
            region = list(chambers.region.facet_normals)
        else:
            w = lifted_torus_action(n)
            walls = interior_walls(w)
            region = brute_force_facets(w.beta, w.n)
    except (BadSubsetSize, NTooSmall) as exc:
        raise CliError(EXIT_CONFIG, str(exc)) from exc
    count = sample_chamber_count(walls, region, cfg)
    _emit(args, RunManifest("oracle count", inputs, args.out, args.seed), {"count": count},
          _table(["side", "count"], [[args.side, count]]))
    return EXIT_OK


def _add_weight_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--weights", metavar="FILE", help="file: 'n r' then n rows of r ints")
    src.add_argument("--inline", metavar="TEXT", help="rows of gamma separated by ';'")


def _add_output(p: argparse.ArgumentParser, nested: bool = False) -> None:
    # nested parsers must not clobber values given before the action name
    dflt = (lambda v: argparse.SUPPRESS) if nested else (lambda v: v)
    p.add_argument("--out", metavar="FILE", default=dflt(None))
    p.add_argument("--format", choices=("json", "table"), default=dflt("json"))
    p.add_argument("--jobs", type=int, default=dflt(None),
                   help=f"worker processes (default ${JOBS_ENV} or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vgit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"vgit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gkz", help="secondary fan chambers of a torus action")
    _add_weight_source(p)
    _add_output(p)
    p.add_argument("--require-projective", action="store_true")
    p.set_defaults(func=cmd_gkz)

    p = sub.add_parser("quotient", help="quotient fan and irrelevant ideal for one character")
    _add_weight_source(p)
    _add_output(p)
    p.add_argument("--character", required=True, metavar="C1,...,CN")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("pgl2", help="PGL2 on (P^1)^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pair", default="1,2", metavar="I,J")
    _add_output(p)
    actions = p.add_subparsers(dest="action", required=True)
    for name in ("chambers", "verify"):
        _add_output(actions.add_parser(name), nested=True)
    hm = actions.add_parser("hm")
    _add_output(hm, nested=True)
    hm.add_argument("--weights", dest="hm_weights", metavar="A1,...,AN")
    p.set_defaults(func=cmd_pgl2)

    p = sub.add_parser("oracle", help="brute-force cross-checks")
    actions = p.add_subparsers(dest="oracle_action", required=True)
    q = actions.add_parser("supports")
    _add_weight_source(q)
    _add_output(q)
    q.add_argument("--character", required=True)
    q = actions.add_parser("count")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--pair", default="1,2")
    q.add_argument("--side", choices=("pgl2", "gkz"), required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--samples-per-cell", type=int, default=200)
    _add_output(q)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"vgit: {exc}", file=sys.stderr)
        return exc.code
    except Exception as exc:  # noqa: BLE001
        print(f"vgit: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
