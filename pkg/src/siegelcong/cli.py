"""Command-line interface.

Exit codes: 0 when every check passed, 1 when at least one congruence
failed, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from .congruences import (
    CongruenceReport,
    case_of,
    check_cor41,
    check_cor42,
    check_prop34,
    check_thm31,
    check_thm32,
    check_thm33,
)
from .elliptic import elliptic_dims
from .qseries import c_t_series
from .quadforms import hurwitz, reduced_forms
from .reptypes import compute_counts
from .scan import FAMILIES, ScanResult, family_of, scan
from .store import DimStore, IngestError
from .synthetic import DEFAULT_MAX_FREE, DrawStats, rng_for, draw_free_counts, synth_dims, SynthRejected

SEED_ENV = "SIEGELCONG_SEED"
STORE_ENV = "SIEGELCONG_STORE"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    theorem: str | None = None
    k_range: str | None = None
    p_max: int | None = None
    n_max: int | None = None
    k: int | None = None
    p: int | None = None
    n: int | None = None
    seed: int | None = None
    draws: int | None = None
    max_free: int | None = None
    dims_source: str | None = None
    dims_file: str | None = None
    output: str = "table"

    def as_record(self) -> dict:
        rec = {"record": "config"}
        rec.update({k: v for k, v in asdict(self).items() if v is not None})
        return rec


def parse_range(text: str) -> range:
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        seed = int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None
    if seed < 0:
        raise UsageError("seed must be non-negative")
    return seed


def _default_store() -> Path:
    return Path(os.environ.get(STORE_ENV) or Path.home() / ".siegelcong" / "dims.csv")


class Emitter:
    """Writes either a human table or JSON lines; buffered until ``flush``."""

    def __init__(self, mode: str, out):
        self.mode = mode
        self.out = out
        self.lines: list[str] = []

    def record(self, rec: dict, text: str) -> None:
        if self.mode == "jsonl":
            self.lines.append(json.dumps(rec, sort_keys=True))
        else:
            self.lines.append(text)

    def text(self, text: str) -> None:
        self.record({"record": "text", "text": text}, text)

    def flush(self) -> None:
        for line in self.lines:
            print(line, file=self.out)
        self.lines.clear()


def _report_line(r: CongruenceReport) -> str:
    where = f"k={r.k:<3d} p={r.p:<5d}" + (f" n={r.n:<4d}" if r.n is not None else "")
    seed = f" seed={r.seed}" if r.seed is not None else ""
    return (
        f"{r.verdict.upper():4s} {r.theorem_id:7s} {where} "
        f"lhs={r.lhs} rhs={r.rhs} mod {r.modulus} [{r.provenance}{seed}]"
    )


def _emit_config(em: Emitter, cfg: RunConfig) -> None:
    rec = cfg.as_record()
    em.record(rec, "# " + " ".join(f"{k}={v}" for k, v in rec.items() if k != "record"))


def _emit_reports(em: Emitter, reports: Sequence[CongruenceReport]) -> None:
    for r in reports:
        em.record(r.as_record(), _report_line(r))


def _emit_scan(em: Emitter, result: ScanResult) -> None:
    _emit_reports(em, result.reports)
    for s in result.skips:
        where = f"k={s.k} " + (f"p={s.p} " if s.p is not None else "") + (f"n={s.n} " if s.n is not None else "")
        em.record(s.as_record(), f"SKIP {s.theorem_id:7s} {where}({s.reason})")
    summ = result.summary()
    if not result.reports:
        summ["note"] = "no applicable instance was checked"
    em.record(
        summ,
        f"# {summ['family']}: {summ['checked']} checked, {summ['passed']} passed, "
        f"{summ['failed']} failed, {summ['skipped']} skipped"
        + (f"; synthetic draws {summ['draws_accepted']} accepted, {summ['draws_rejected']} rejected"
           if summ["draws_accepted"] or summ["draws_rejected"] else "")
        + (f"; {summ['note']}" if "note" in summ else ""),
    )  # fmt: skip


def _load_store(args) -> DimStore | None:
    if getattr(args, "dims_file", None):
        store = DimStore()
        result = store.ingest(args.dims_file)
        if result.rejects:
            raise UsageError(
                f"{args.dims_file}: {len(result.rejects)} rejected rows, first at line "
                f"{result.rejects[0].line}: {result.rejects[0].reason}"
            )
        return store
    path = Path(args.store) if args.store else _default_store()
    return DimStore(path) if path.exists() else None


# subcommands -----------------------------------------------------------------


def cmd_c4(args, em: Emitter) -> int:
    if args.max < 0:
        raise UsageError("--max must be >= 0")
    series = c_t_series(args.max, args.t)
    em.record({"record": "c_t", "t": args.t, "coefficients": list(series)}, " ".join(map(str, series)))
    return EXIT_OK


def cmd_classnum(args, em: Emitter) -> int:
    forms = reduced_forms(args.D)
    em.record(
        {"record": "classnum", "D": args.D, "h": len(forms), "forms": [list(f) for f in forms]},
        f"h({args.D}) = {len(forms)}\n" + "\n".join(f"  ({a}, {b}, {c})" for a, b, c in forms),
    )
    return EXIT_OK


def cmd_hurwitz(args, em: Emitter) -> int:
    H = hurwitz(args.D)
    em.record({"record": "hurwitz", "D": args.D, "H": str(H)}, f"H({args.D}) = {H}")
    return EXIT_OK


def cmd_dims(args, em: Emitter) -> int:
    e = elliptic_dims(args.k, args.p)
    rec = asdict(e)
    rec["record"] = "dims"
    em.record(
        rec,
        f"k={e.k} p={e.p}: total={e.dim_total} new={e.dim_new} "
        f"plus={'-' if e.dim_plus is None else e.dim_plus} "
        f"minus={'-' if e.dim_minus is None else e.dim_minus}",
    )
    return EXIT_OK


def cmd_types(args, em: Emitter) -> int:
    s = compute_counts(args.k, args.p)
    rec = asdict(s)
    rec["record"] = "types"
    em.record(
        rec,
        f"k={s.k} p={s.p}: s_Vb={s.s_Vb} s_VIc={s.s_VIc} s_P_VIb={s.s_P_VIb} s_Y_VIb={s.s_Y_VIb}",
    )
    return EXIT_OK


def _verify_dims(args, family: str, p: int):
    if args.synthetic:
        rng = rng_for(args.seed, args.k, p)
        for _ in range(1000):
            try:
                return synth_dims(args.k, p, draw_free_counts(rng, args.max_free))
            except SynthRejected:
                continue
        raise UsageError("no accepted synthetic draw in 1000 attempts")
    store = _load_store(args)
    dims = store.siegel_dims(p, args.k) if store is not None else None
    if dims is None:
        raise UsageError(
            f"no Siegel dims for K({p}), Gamma_0({p}) at k={args.k}; "
            "pass --dims-file, ingest a table, or use --synthetic"
        )
    return dims


def cmd_verify(args, em: Emitter) -> int:
    family = family_of(args.theorem)
    by_n = FAMILIES[family][1]
    if by_n and args.n is None:
        raise UsageError(f"{family} needs --n")
    if not by_n and args.p is None:
        raise UsageError(f"{family} needs --p")
    p = 8 * args.n + 5 if by_n else args.p
    if args.theorem[:3] in ("T31", "T32") and len(args.theorem) > 3:
        if args.theorem[3:] != case_of(p):
            raise UsageError(f"{args.theorem} does not apply to p={p} (case {case_of(p)})")
    seed = args.seed if args.synthetic else None
    cfg = RunConfig(
        "verify", theorem=args.theorem, k=args.k, p=None if by_n else p, n=args.n if by_n else None,
        seed=seed, max_free=args.max_free if args.synthetic else None,
        dims_source=("synthetic" if args.synthetic else "store") if FAMILIES[family][2] else None,
        dims_file=args.dims_file, output=args.format,
    )  # fmt: skip
    if family == "T33":
        reports = [check_thm33(args.k, p)]
    elif family == "C42":
        reports = [check_cor42(args.k, args.n)]
    else:
        dims = _verify_dims(args, family, p)
        if family == "T31":
            reports = [check_thm31(args.k, p, dims, seed)]
        elif family == "T32":
            reports = [check_thm32(args.k, p, dims, seed)]
        elif family == "P34":
            reports = [check_prop34(args.k, p, dims, seed)]
        else:
            reports = list(check_cor41(args.k, args.n, dims, seed))
    _emit_config(em, cfg)
    _emit_reports(em, reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_scan(args, em: Emitter) -> int:
    family = family_of(args.theorem)
    k_range = parse_range(args.k_range)
    by_n, needs_dims = FAMILIES[family][1:]
    if by_n and args.n_max is None:
        raise UsageError(f"{family} needs --n-max")
    if not by_n and args.p_max is None:
        raise UsageError(f"{family} needs --p-max")
    if args.draws < 1:
        raise UsageError("--draws must be >= 1")
    source = None
    if needs_dims:
        source = "synthetic" if args.synthetic else "store"
    cfg = RunConfig(
        "scan", theorem=family, k_range=f"{k_range.start}..{k_range.stop - 1}",
        p_max=None if by_n else args.p_max, n_max=args.n_max if by_n else None,
        seed=args.seed if source == "synthetic" else None,
        draws=args.draws if source == "synthetic" else None,
        max_free=args.max_free if source == "synthetic" else None,
        dims_source=source, dims_file=args.dims_file, output=args.format,
    )  # fmt: skip
    store = _load_store(args) if source == "store" else None
    result = scan(
        family, k_range, p_max=args.p_max, n_max=args.n_max, source=source, store=store,
        draws=args.draws, seed=args.seed, max_free=args.max_free,
    )  # fmt: skip
    _emit_config(em, cfg)
    _emit_scan(em, result)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_ingest(args, em: Emitter) -> int:
    path = Path(args.store) if args.store else _default_store()
    store = DimStore(path)
    result = store.ingest(args.file)
    em.record(
        {"record": "ingest", "store": str(path), "added": result.added,
         "duplicates": result.duplicates, "rejected": len(result.rejects)},
        f"{result.added} records added to {path} ({result.duplicates} duplicates, "
        f"{len(result.rejects)} rejected)",
    )  # fmt: skip
    for r in result.rejects:
        em.record({"record": "reject", "line": r.line, "reason": r.reason}, f"  line {r.line}: {r.reason}")
    return EXIT_USAGE if result.rejects else EXIT_OK


def cmd_synth(args, em: Emitter) -> int:
    rng = rng_for(args.seed, args.k, args.p)
    stats = DrawStats()
    for _ in range(1000):
        free = draw_free_counts(rng, args.max_free)
        try:
            dims = synth_dims(args.k, args.p, free)
        except SynthRejected:
            stats.rejected += 1
            continue
        rec = {"record": "synth", "seed": args.seed, "rejected": stats.rejected, **asdict(free), **asdict(dims)}
        em.record(
            rec,
            f"k={dims.k} p={dims.p} seed={args.seed}: dim_K={dims.dim_K} "
            f"dim_Gamma0={dims.dim_Gamma0} dim_Klingen={dims.dim_Klingen}\n  from {free}",
        )
        return EXIT_OK
    raise UsageError("no accepted synthetic draw in 1000 attempts")


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "jsonl"), default="table",
                        help="human table (default) or line-delimited JSON records")
    common.add_argument("--store", help=f"dims store path (default ${STORE_ENV} or ~/.siegelcong/dims.csv)")

    parser = argparse.ArgumentParser(
        prog="siegelcong",
        description="Class numbers, 4-cores, newform dimensions and Siegel dimension congruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("c4", parents=[common], help="print c_t(0..N), t = 4 by default")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--t", type=int, default=4)
    p.set_defaults(func=cmd_c4)

    for name, func, text in (("classnum", cmd_classnum, "class number and reduced forms"),
                             ("hurwitz", cmd_hurwitz, "Hurwitz class number")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("-D", type=int, required=True, help="negative discriminant")
        p.set_defaults(func=func)

    for name, func, text in (("dims", cmd_dims, "elliptic cusp form dimensions"),
                             ("types", cmd_types, "representation-type counts")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--p", type=int, required=True)
        p.set_defaults(func=func)

    synth_opts = argparse.ArgumentParser(add_help=False)
    synth_opts.add_argument("--seed", type=int, default=None)
    synth_opts.add_argument("--max-free", type=int, default=DEFAULT_MAX_FREE,
                            help="upper bound for each random free count")

    p = sub.add_parser("verify", parents=[common, synth_opts], help="check one congruence instance")
    p.add_argument("--theorem", required=True, help="T31, T32, T33, P34, C41, C42 or a case id such as T31ii")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--dims-file")
    p.add_argument("--synthetic", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common, synth_opts], help="check a congruence family over a grid")
    p.add_argument("--theorem", required=True)
    p.add_argument("--k-range", required=True, help="inclusive, e.g. 3..12")
    p.add_argument("--p-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--dims-file")
    p.add_argument("--synthetic", action="store_true")
    p.add_argument("--draws", type=int, default=100)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ingest", parents=[common], help="load a dims table into the store")
    p.add_argument("file")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("synth", parents=[common, synth_opts], help="print one synthetic Siegel dims triple")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_synth)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    em = Emitter(args.format, out)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        if getattr(args, "seed", 0) < 0:
            raise UsageError("--seed must be non-negative")
        code = args.func(args, em)
    except (UsageError, IngestError, ValueError, OSError) as exc:
        print(f"siegelcong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    em.flush()
    return code


def main() -> None:
    sys.exit(run())
