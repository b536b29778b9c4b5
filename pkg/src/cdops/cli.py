"""Command-line front end.

Exit codes: 0 disjoint / success, 1 not disjoint, 2 marginal, 3 unreadable or
malformed input, 4 a failed operation (violation, unsupported request,
sampling exhausted), 5 verification failures.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import CdopsError
from .homotopy import retract_full
from .instances import by_name, epsilon_embed
from .ortho import multi_compose, multi_validate
from .render import render_svg
from .sampling import random_multimorphism
from .serialize import RELATION_KIND, ConfigError, ConfigFile, dumps, path_samples_from_json, path_to_json
from .shapes import Kind, Status
from .verify import SUITES, run_suite

EXIT_DISJOINT, EXIT_NOT_DISJOINT, EXIT_MARGINAL = 0, 1, 2
EXIT_INPUT, EXIT_OPERATION, EXIT_VERIFY = 3, 4, 5

DEFAULT_RELATION = {"ball": "cd", "diamond": "cdiam"}


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def load_config(path: str) -> ConfigFile:
    try:
        return ConfigFile.from_json(_read_json(path))
    except ConfigError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _valid(cfg: ConfigFile):
    return multi_validate(cfg.instance(), cfg.maps)


def cmd_gen(n: int, k: int, kind: str, relation: str | None, seed: int, min_margin: float) -> ConfigFile:
    relation = relation or DEFAULT_RELATION[kind]
    if RELATION_KIND[relation] != kind:
        raise ConfigError(f"relation {relation} requires kind {RELATION_KIND[relation]}")
    mm = random_multimorphism(by_name(relation, n), k, random.Random(seed), min_margin)
    return ConfigFile.from_operation(mm, seed)


def cmd_check(cfg: ConfigFile) -> tuple[int, list[str]]:
    mm = cfg.operation()
    tau = mm.instance.tolerance
    lines = [f"instance {mm.instance.name}, {mm.arity} maps, tolerance {tau!r}"]
    for i, m in enumerate(mm.containment_margins):
        lines.append(f"contain {i}: {m!r}")
    for (i, j), m in mm.pair_margins.items():
        lines.append(f"pair {i} {j}: {m!r}")
    status = mm.validity.status
    if status is Status.NOT_DISJOINT:
        i, j = mm.worst()
        lines.append(f"offending: {'contain ' + str(i) if i == j else f'pair {i} {j}'}")
    lines.append(f"result: {status.value} (margin {mm.margin!r})")
    code = {Status.DISJOINT: EXIT_DISJOINT, Status.NOT_DISJOINT: EXIT_NOT_DISJOINT, Status.MARGINAL: EXIT_MARGINAL}
    return code[status], lines


def cmd_compose(f: ConfigFile, gs: list) -> ConfigFile:
    outer = _valid(f)
    inner = []
    for g in gs:
        if g.relation != f.relation or g.n != f.n:
            raise ConfigError(f"cannot compose {g.relation}{g.n} into {f.relation}{f.n}")
        inner.append(_valid(g))
    return ConfigFile.from_operation(multi_compose(outer, inner))


def cmd_embed(cfg: ConfigFile, kind: str = "ball") -> ConfigFile:
    if cfg.relation != "disc":
        raise ConfigError(f"embed expects a disc config, got {cfg.relation}")
    return ConfigFile.from_operation(epsilon_embed(_valid(cfg), Kind(kind)))


def cmd_retract(cfg: ConfigFile, samples: int):
    if cfg.relation not in ("cd", "cdiam"):
        raise ConfigError(f"retract expects a cd or cdiam config, got {cfg.relation}")
    return retract_full(_valid(cfg), samples)


def cmd_render(cfg: ConfigFile, cones: bool = False, path_samples=None) -> str:
    return render_svg(cfg.n, Kind(cfg.kind), cfg.maps, cones, path_samples)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdops", description="Causally disjoint discs and diamonds.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="sample a random valid configuration")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--kind", choices=("ball", "diamond"), default="ball")
    g.add_argument("--relation", choices=sorted(RELATION_KIND))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--min-margin", type=float, default=0.0)
    g.add_argument("--out")

    c = sub.add_parser("check", help="print margins; exit 0 disjoint, 1 not, 2 marginal")
    c.add_argument("input")

    m = sub.add_parser("compose", help="compose F with G1 ... Gk")
    m.add_argument("outer")
    m.add_argument("inner", nargs="*")
    m.add_argument("--out")

    e = sub.add_parser("embed", help="embed a disc config one dimension up")
    e.add_argument("input")
    e.add_argument("--kind", choices=("ball", "diamond"), default="ball")
    e.add_argument("--out")

    r = sub.add_parser("retract", help="certified retraction path of a cd or cdiam config")
    r.add_argument("input")
    r.add_argument("--samples", type=int, default=100)
    r.add_argument("--out")

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)

    d = sub.add_parser("render", help="draw an n = 2 config as SVG")
    d.add_argument("input")
    d.add_argument("--out", required=True)
    d.add_argument("--cones", action="store_true")
    d.add_argument("--path")
    return p


def _run(args) -> int:
    if args.command == "gen":
        cfg = cmd_gen(args.n, args.k, args.kind, args.relation, args.seed, args.min_margin)
        _emit(cfg.dumps(), args.out)
        return 0
    if args.command == "check":
        code, lines = cmd_check(load_config(args.input))
        print("\n".join(lines))
        return code
    if args.command == "compose":
        cfg = cmd_compose(load_config(args.outer), [load_config(x) for x in args.inner])
        _emit(cfg.dumps(), args.out)
        return 0
    if args.command == "embed":
        cfg = cmd_embed(load_config(args.input), args.kind)
        _emit(cfg.dumps(), args.out)
        for i, f in enumerate(cfg.maps):
            print(f"radius {i}: {float(f.scale)!r}", file=sys.stderr if args.out is None else sys.stdout)
        return 0
    if args.command == "retract":
        if args.samples < 2:
            raise ConfigError("--samples must be at least 2")
        path = cmd_retract(load_config(args.input), args.samples)
        _emit(dumps(path_to_json(path)), args.out)
        info = sys.stderr if args.out is None else sys.stdout
        print(f"min margin: {path.min_margin!r}", file=info)
        if path.stage1_constant:
            print("stage1: constant", file=info)
        return 0
    if args.command == "verify":
        if args.trials < 1:
            raise ConfigError("--trials must be at least 1")
        report = run_suite(args.suite, args.trials, args.seed)
        print(report.line())
        for fail in report.failures[:20]:
            print(f"  {fail}")
        return 0 if report.ok else EXIT_VERIFY
    if args.command == "render":
        cfg = load_config(args.input)
        samples = path_samples_from_json(_read_json(args.path)) if args.path else None
        _emit(cmd_render(cfg, args.cones, samples), args.out)
        return 0
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CdopsError, ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OPERATION


if __name__ == "__main__":
    sys.exit(main())
