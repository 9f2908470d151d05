"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a functional equation or
identity fails, 2 for usage and evaluation errors.  Reports are
deterministic; wall-clock timings appear only with ``--timings`` and then in
their own trailing section.
"""
from __future__ import annotations

import argparse
import json
import platform
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from . import __version__
from .cache import MAX_WEIGHT, UniversalCache, default_cache_dir
from .document import PRESETS, MotiveDocument, load_document, preset
from .errors import MZetaError, UsageError
from .identities import SUITES, run_identities
from .symfunc import (
    kronecker_coefficient,
    lr_coefficient,
    make_partition,
    mn_character,
    parse_symfunc,
    plethysm,
)
from .universal import q_poly, universal_Pnr
from .zeta import (
    FEReport,
    abelian_surface_blowup_at_point,
    paired_variable_check,
    verify_abelian,
    verify_blowup,
    verify_curve,
    verify_product,
    zeta_series,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_P = 12
MAX_Q_GENUS = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 as well; keep the prefix uniform
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"mzeta: error: {message}\n")


class RunReport:
    """Ordered results of one invocation, rendered as text or JSON."""

    def __init__(self, command: str):
        self.command = command
        self.results: list[dict[str, Any]] = []
        self.lines: list[str] = []
        self.failed = False
        self.timings: dict[str, float] = {}
        self.cache_stats: dict | None = None

    def add(self, result: dict[str, Any], lines: list[str], ok: bool = True) -> None:
        self.results.append(result)
        self.lines.extend(lines)
        self.failed |= not ok

    @property
    def status(self) -> str:
        return "fail" if self.failed else "pass"

    def to_json(self, with_timings: bool) -> str:
        data: dict[str, Any] = {
            "command": self.command,
            "status": self.status,
            "results": self.results,
            "versions": _versions(),
        }
        if self.cache_stats is not None:
            data["cache"] = self.cache_stats
        if with_timings:
            data["timings"] = self.timings
        return json.dumps(data, indent=2, sort_keys=False)

    def to_text(self, with_timings: bool) -> str:
        out = list(self.lines)
        if self.cache_stats is not None:
            s = self.cache_stats
            out.append(f"cache: {s['entries']} entries, {s['hits']} hits, {s['misses']} misses")
        if with_timings and self.timings:
            out.append("")
            out.append("[timings]")
            out.extend(f"{k}: {v:.3f}s" for k, v in self.timings.items())
        return "\n".join(out)


def _versions() -> dict[str, str]:
    return {"mzeta": __version__, "python": platform.python_version()}


# -- helpers ---------------------------------------------------------------------------

def _cache(args, required: bool = False) -> UniversalCache:
    directory = args.cache_dir or default_cache_dir()
    if directory is None:
        if required:
            raise UsageError("no cache directory: pass --cache-dir or set MZETA_CACHE_DIR")
        return UniversalCache()
    path = Path(directory)
    if path.exists() and not path.is_dir():
        raise UsageError(f"cache directory {path} is not a directory")
    return UniversalCache(path)


def _document(spec: str) -> MotiveDocument:
    if Path(spec).exists():
        return load_document(spec)
    name = spec.removeprefix("preset:")
    if name in PRESETS:
        return preset(name)
    raise UsageError(f"no document file {spec!r} and no preset of that name ({', '.join(sorted(PRESETS))})")


def _partition(text: str) -> tuple[int, ...]:
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p]
    except ValueError:
        raise UsageError(f"partition must be comma-separated integers, got {text!r}") from None
    return make_partition(parts)


def _fe_lines(rep: FEReport, depth: int = 0) -> list[str]:
    pad = "  " * depth
    mark = "PASS" if rep.passed else "FAIL"
    head = f"{pad}{mark} {rep.subject}"
    if rep.degree or rep.weight:
        head += f" [weight {rep.weight}, degree {rep.degree}, L^{rep.l_exponent}]"
    out = [head]
    for d in rep.details:
        out.append(f"{pad}    {d}")
    if rep.witness and not rep.passed:
        out.append(f"{pad}    witness: {rep.witness}")
    for s in rep.sub:
        out.extend(_fe_lines(s, depth + 1))
    return out


def _add_fe(report: RunReport, reps: list[FEReport]) -> None:
    for r in reps:
        report.add(r.as_dict(), _fe_lines(r), r.passed)


def _summary(report: RunReport, n: int) -> None:
    report.lines.append(f"result: {'PASS' if not report.failed else 'FAIL'} ({n} reports)")


# -- commands ----------------------------------------------------------------------------

def cmd_universal(args, report: RunReport) -> None:
    kind, idx = args.kind, args.indices
    need = {"P": 1, "Pnr": 2, "q": 2}[kind]
    if len(idx) != need:
        raise UsageError(f"universal {kind} takes {need} indices")
    if any(i < 0 for i in idx):
        raise UsageError("indices must be nonnegative")
    if kind == "P":
        (n,) = idx
        if n > MAX_P:
            raise UsageError(f"P_n is supported for n <= {MAX_P}")
        poly = _cache(args).P(n)
        alphabet = "s1..sn = first alphabet (elementary), t1..tn = second"
        text = poly.render()
    elif kind == "Pnr":
        n, r = idx
        if n * r > MAX_WEIGHT:
            raise UsageError(f"P_(n,r) is supported for n*r <= {MAX_WEIGHT}")
        poly = universal_Pnr(n, r) if n * r == 0 else _cache(args).Pnr(n, r)
        alphabet = "s1..s(nr) = elementary symmetric functions"
        text = poly.render()
    else:
        g, n = idx
        if not 1 <= g <= MAX_Q_GENUS or n > 2 * g:
            raise UsageError(f"q^g_n needs 1 <= g <= {MAX_Q_GENUS} and 0 <= n <= 2g")
        poly = q_poly(g, n)
        alphabet = "s1..s(2g) = elementary symmetric functions, t = series variable"
        text = poly.render_by("t")
    report.add({"kind": kind, "indices": idx, "alphabet": alphabet, "polynomial": text}, [text])


def cmd_symfunc(args, report: RunReport) -> None:
    op = args.op
    if op == "convert":
        value = parse_symfunc(args.expr).to(args.to)
        report.add({"op": op, "value": value.render()}, [value.render()])
    elif op == "plethysm":
        value = plethysm(parse_symfunc(args.outer), parse_symfunc(args.inner)).to(args.to)
        report.add({"op": op, "value": value.render()}, [value.render()])
    elif op == "omega":
        value = parse_symfunc(args.expr).omega().to(args.to)
        report.add({"op": op, "value": value.render()}, [value.render()])
    elif op == "product":
        value = (parse_symfunc(args.left) * parse_symfunc(args.right)).to(args.to)
        report.add({"op": op, "value": value.render()}, [value.render()])
    elif op in ("lr", "kronecker"):
        la, mu, nu = (_partition(p) for p in (args.la, args.mu, args.nu))
        fn = lr_coefficient if op == "lr" else kronecker_coefficient
        c = fn(la, mu, nu)
        report.add({"op": op, "partitions": [list(la), list(mu), list(nu)], "value": c}, [str(c)])
    elif op == "character":
        la, rho = _partition(args.la), _partition(args.rho)
        if sum(la) != sum(rho):
            raise UsageError("character needs partitions of the same size")
        c = mn_character(la, rho)
        report.add({"op": op, "partitions": [list(la), list(rho)], "value": c}, [str(c)])


def _zeta_result(doc: MotiveDocument, name: str, order: int) -> tuple[dict, list[str]]:
    if order < 0:
        raise UsageError("order must be nonnegative")
    ring = doc.ring()
    x = doc.expression(name)
    series = zeta_series(ring, x, order)
    coeffs = [series[i].render() for i in range(order + 1)]
    lines = [f"Z({name}) = sum Sym^i({x.render()}) T^i up to T^{order}"]
    lines.extend(f"  T^{i}: {c}" for i, c in enumerate(coeffs))
    result: dict[str, Any] = {"expression": name, "class": x.render(), "order": order, "coefficients": coeffs}
    if name in doc.motives:
        z = doc.motive(name).zeta()
        result["rational_form"] = z.as_dict()
        lines.append("rational form: numerator(T) / Q(-T)")
        lines.append(f"  numerator: {z.numerator.render_by('T')}")
        lines.append(f"  Q(T): {z.denominator_arg.render_by('T')}")
        lines.append(f"  e = {z.e}, f = {z.f}")
    return result, lines


def cmd_zeta(args, report: RunReport) -> None:
    result, lines = _zeta_result(_document(args.document), args.expression, args.order)
    report.add(result, lines)


def cmd_verify(args, report: RunReport) -> None:
    target = args.target
    if target == "abelian":
        if args.g is None or args.g < 1:
            raise UsageError("verify abelian needs --g >= 1")
        cache = _cache(args)
        reps = verify_abelian(args.g, series_order=args.order, full_duality=args.full_duality, cache=cache)
        cache.save()
        report.cache_stats = cache.stats()
        _add_fe(report, reps)
        total = next(r for r in reps if r.subject.startswith("Kimura bounds"))
        report.lines.append(f"degrees (e, f) = ({total.degree}, {total.degree})")
        _summary(report, len(reps))
    elif target == "curve":
        if args.g is None or args.g < 0:
            raise UsageError("verify curve needs --g >= 0")
        reps = verify_curve(args.g, args.order)
        _add_fe(report, reps)
        _summary(report, len(reps))
    elif target == "product":
        doc = _document(args.document or "elliptic-pair")
        names = list(doc.motives)
        x, y = args.x or (names[0] if names else None), args.y or (names[1] if len(names) > 1 else None)
        if x is None or y is None:
            raise UsageError("verify product needs two motives (--x, --y)")
        reps = [verify_product(doc.motive(x), doc.motive(y))]
        if args.document is None:
            reps.append(paired_variable_check())
        _add_fe(report, reps)
        _summary(report, len(reps))
    elif target == "blowup":
        if args.document is None:
            _, rep = abelian_surface_blowup_at_point()
        else:
            doc = _document(args.document)
            if not (args.x and args.y):
                raise UsageError("verify blowup with a document needs --x and --y")
            rep = verify_blowup(doc.motive(args.x), doc.motive(args.y), args.d)
        _add_fe(report, [rep])
        _summary(report, 1)
    elif target == "identities":
        reps = run_identities(args.max_weight, args.suite or None)
        for r in reps:
            mark = "PASS" if r.passed else "FAIL"
            lines = [f"{mark} {r.suite} ({len(r.checks)} identities)"]
            if args.list:
                lines.extend(f"    {c}" for c in r.checks)
            if r.witness:
                lines.append(f"    witness: {r.witness}")
            report.add(r.as_dict(), lines, r.passed)
        _summary(report, len(reps))


def cmd_cache(args, report: RunReport) -> None:
    cache = _cache(args, required=True)
    if args.action == "status":
        keys = [" ".join(map(str, k)) for k in cache.keys()]
        report.add({"action": "status", "entries": keys}, [f"{len(keys)} entries in {cache.directory}", *keys])
    elif args.action == "clear":
        n = cache.clear()
        report.add({"action": "clear", "removed": n}, [f"removed {n} entries"])
    else:
        if args.g is None:
            raise UsageError("cache warm needs --g")
        added = cache.warm(args.g)
        keys = [" ".join(map(str, k)) for k in added]
        report.add({"action": "warm", "g": args.g, "added": keys}, [f"added {len(keys)} entries", *keys])
    report.cache_stats = cache.stats()


def cmd_doc(args, report: RunReport) -> None:
    text = _document(args.document).dump()
    report.add({"document": text}, [text.rstrip("\n")])


TASK_KINDS = ("zeta", "sym", "alt", "schur", "product", "blowup")


def _run_task(doc: MotiveDocument, task: dict) -> tuple[dict, list[str], bool]:
    if not isinstance(task, dict):
        raise UsageError(f"task must be a mapping, got {task!r}")
    kinds = [k for k in TASK_KINDS if k in task]
    if len(kinds) != 1:
        raise UsageError(f"task needs exactly one of {TASK_KINDS}: {task!r}")
    kind = kinds[0]
    ring = doc.ring()
    if kind == "zeta":
        res, lines = _zeta_result(doc, str(task["zeta"]), int(task.get("order", 6)))
        return {"task": kind, **res}, lines, True
    if kind in ("sym", "alt"):
        name, r = str(task[kind]), int(task.get("r", 2))
        x = doc.expression(name)
        value = (ring.sym if kind == "sym" else ring.alt)(r, x).render()
        op = "Sym" if kind == "sym" else "Alt"
        return {"task": kind, "expression": name, "r": r, "value": value}, [f"{op}^{r}({name}) = {value}"], True
    if kind == "schur":
        name = str(task["schur"])
        shape = make_partition(task.get("shape", [1]))
        value = ring.schur(shape, doc.expression(name)).render()
        return ({"task": kind, "expression": name, "shape": list(shape), "value": value},
                [f"S{list(shape)}({name}) = {value}"], True)
    if kind == "product":
        rep = verify_product(doc.motive(str(task["product"])), doc.motive(str(task["with"])))
    else:
        rep = verify_blowup(doc.motive(str(task["blowup"])), doc.motive(str(task["center"])),
                            int(task.get("d", 2)))
    return {"task": kind, **rep.as_dict()}, _fe_lines(rep), rep.passed


def cmd_run(args, report: RunReport) -> None:
    doc = _document(args.document)
    if not doc.tasks:
        raise UsageError("document declares no tasks")
    start = {}

    def work(i_task):
        i, task = i_task
        t0 = time.perf_counter()
        out = _run_task(doc, task)
        start[i] = time.perf_counter() - t0
        return out

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        outcomes = list(pool.map(work, enumerate(doc.tasks)))
    for i, (res, lines, ok) in enumerate(outcomes):
        report.add({"index": i, **res}, [f"task {i}:", *("  " + ln for ln in lines)], ok)
        report.timings[f"task {i}"] = start[i]
    _summary(report, len(outcomes))


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def global_flags(parser, default):
        # subcommands repeat the flags with suppressed defaults so they do not
        # overwrite values given before the subcommand
        parser.add_argument("--json", action="store_true", default=default(False), help="emit a JSON report")
        parser.add_argument("--cache-dir", default=default(None),
                            help="universal-polynomial cache (overrides MZETA_CACHE_DIR)")
        parser.add_argument("--timings", action="store_true", default=default(False),
                            help="append wall-clock timings")

    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, lambda v: argparse.SUPPRESS)

    p = _Parser(prog="mzeta", description="Motivic zeta functions and lambda-ring identities.")
    global_flags(p, lambda v: v)
    p.add_argument("--version", action="version", version=f"mzeta {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    u = sub.add_parser("universal", parents=[common], help="print a universal polynomial")
    u.add_argument("kind", choices=["P", "Pnr", "q"])
    u.add_argument("indices", type=int, nargs="+")
    u.set_defaults(func=cmd_universal)

    s = sub.add_parser("symfunc", parents=[common], help="symmetric-function calculator")
    ssub = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name, fields in (("convert", ["expr"]), ("omega", ["expr"]), ("plethysm", ["outer", "inner"]),
                         ("product", ["left", "right"])):
        c = ssub.add_parser(name, parents=[common])
        for f in fields:
            c.add_argument(f)
        c.add_argument("--to", choices=["p", "e", "h", "s"], default="s")
    for name in ("lr", "kronecker"):
        c = ssub.add_parser(name, parents=[common], help="coefficient for partitions like 2,1")
        c.add_argument("la")
        c.add_argument("mu")
        c.add_argument("nu")
    c = ssub.add_parser("character", parents=[common])
    c.add_argument("la")
    c.add_argument("rho")
    s.set_defaults(func=cmd_symfunc)

    z = sub.add_parser("zeta", parents=[common], help="zeta series of a document expression")
    z.add_argument("document", help="path to a motive document or a preset name")
    z.add_argument("expression")
    z.add_argument("--order", type=int, default=6)
    z.set_defaults(func=cmd_zeta)

    v = sub.add_parser("verify", parents=[common], help="run functional-equation or identity checks")
    v.add_argument("target", choices=["abelian", "curve", "product", "blowup", "identities"])
    v.add_argument("document", nargs="?", help="motive document for product/blowup")
    v.add_argument("--g", type=int)
    v.add_argument("--order", type=int)
    v.add_argument("--full-duality", action="store_true")
    v.add_argument("--x")
    v.add_argument("--y")
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--max-weight", type=int, default=8)
    v.add_argument("--suite", action="append", choices=list(SUITES))
    v.add_argument("--list", action="store_true", help="list every identity checked")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("cache", parents=[common], help="inspect or fill the universal-polynomial cache")
    k.add_argument("action", choices=["status", "clear", "warm"])
    k.add_argument("--g", type=int)
    k.set_defaults(func=cmd_cache)

    d = sub.add_parser("doc", parents=[common], help="print a document in canonical form")
    d.add_argument("document")
    d.set_defaults(func=cmd_doc)

    r = sub.add_parser("run", parents=[common], help="execute the tasks declared in a document")
    r.add_argument("document")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_run)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(args.command)
    t0 = time.perf_counter()
    try:
        args.func(args, report)
    except MZetaError as exc:
        print(f"mzeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.timings["total"] = time.perf_counter() - t0
    out = report.to_json(args.timings) if args.json else report.to_text(args.timings)
    print(out)
    return EXIT_FAIL if report.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
