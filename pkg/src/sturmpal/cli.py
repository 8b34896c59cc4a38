"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 size cap hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import _backend
from .bench import doubling_lengths, growth_per_doubling, run_bench
from .counting import full_report
from .engine import bistandard_prefix, distinct_maximal_set, locate_occurrences
from .errors import InvalidPair, ParseError, SizeLimitExceeded, SturmpalError
from .verify import run_verification
from .words import DEFAULT_CAP, expand, parse_defining_sequence

PRINT_THRESHOLD = 10_000
COMMANDS = ("generate", "analyze", "verify", "bistandard", "bench")


@dataclass
class RunConfig:
    command: str
    pi_text: str = ""
    seed: str = "a"
    length_cap: int = DEFAULT_CAP
    output_format: str = "text"
    margin_levels: int = 1
    rng_seed: int = 0
    sweep_n: int = 5
    sweep_p: int = 4
    sweep_count: int = 100
    iterations: int = 6
    out: str | None = None
    backend: str | None = None
    max_length: int = 10**7
    repeat: int = 3

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.length_cap < 1:
            raise ValueError("length cap must be >= 1")


def _emit(text: str, out=None):
    (out or sys.stdout).write(text if text.endswith("\n") else text + "\n")


def _short(word, limit=PRINT_THRESHOLD) -> str:
    return str(word) if len(word) <= limit else f"<{len(word)} letters>"


def _generate(cfg: RunConfig, pi) -> int:
    lw = expand(pi, cfg.seed, cfg.length_cap)
    w = lw.ultimate
    if cfg.out:
        with open(cfg.out, "w") as fp:
            fp.write(str(w) + "\n")
    stats = {"pi": str(pi), "seed": cfg.seed, "length": len(w), "count_a": w.count_a, "count_b": w.count_b}
    if len(w) <= PRINT_THRESHOLD:
        stats["word"] = str(w)
    if cfg.output_format == "json":
        _emit(json.dumps(stats, sort_keys=True))
    elif len(w) <= PRINT_THRESHOLD:
        _emit(str(w))
    else:
        _emit("\t".join(f"{k}={stats[k]}" for k in ("length", "count_a", "count_b")))
    return 0


def _analyze(cfg: RunConfig, pi) -> int:
    lw = expand(pi, cfg.seed, cfg.length_cap)
    table = locate_occurrences(lw, cfg.backend)
    members = distinct_maximal_set(pi, 10**18)
    counts = full_report(pi, lw.seed)
    distinct = [
        {
            "origin_level": m.origin_level,
            "form": m.form,
            "center_kind": m.kind.value,
            "length": m.length,
            "weight": m.weight,
            "word": str(members.word(m)) if m.length <= PRINT_THRESHOLD else None,
        }
        for m in members
    ]
    if cfg.out:
        with open(cfg.out, "w") as fp:
            table.write_tsv(fp)
    if cfg.output_format == "json":
        doc = {"occurrences": table.to_records(), "distinct": distinct, "counts": counts.to_dict()}
        _emit(json.dumps(doc, sort_keys=True))
    elif cfg.output_format == "tsv":
        table.write_tsv(sys.stdout)
    else:
        if len(table) <= PRINT_THRESHOLD:
            table.write_tsv(sys.stdout)
        else:
            _emit(f"{len(table)} occurrences (use --out FILE for the table)")
        _emit("distinct maximal palindromes:")
        for d in distinct:
            word = d["word"] if d["word"] is not None else f"<{d['length']} letters>"
            _emit(f"  level {d['origin_level']} form {d['form']} {d['center_kind']}: {word}")
        _emit(" ".join(f"{k}={v}" for k, v in counts.to_dict().items()))
    return 0


def _verify(cfg: RunConfig, pi) -> int:
    report = run_verification(
        pi,
        rng_seed=cfg.rng_seed,
        count=cfg.sweep_count,
        max_n=cfg.sweep_n,
        max_p=cfg.sweep_p,
        margin=cfg.margin_levels,
        cap=cfg.length_cap,
        backend=cfg.backend,
    )
    if cfg.out:
        with open(cfg.out, "w") as fp:
            fp.write(report.to_json(indent=2) + "\n")
    if cfg.output_format == "json":
        _emit(report.to_json())
    else:
        shown = report.sequences[:2] if pi is not None else report.sequences[:1]
        for seq in shown:
            for c in seq.checks:
                status = "pass" if c.passed else "FAIL"
                _emit(f"{status}\t{seq.label}\t{c.name}\tformula={c.formula}\toracle={c.oracle}")
        for label, c in report.failures():
            if all(label != s.label for s in shown):
                _emit(f"FAIL\t{label}\t{c.name}\tformula={c.formula}\toracle={c.oracle}\t{c.detail}")
        total = sum(len(s.checks) for s in report.sequences)
        _emit(f"{len(report.sequences)} sequences, {total} checks, {len(report.failures())} failed")
    return 0 if report.passed else 1


def _bistandard(cfg: RunConfig, pi) -> int:
    chain = bistandard_prefix(pi, cfg.iterations, cfg.length_cap)
    if cfg.output_format == "json":
        _emit(json.dumps([{"k": k, "length": len(w), "word": _short(w)} for k, w in enumerate(chain)]))
    else:
        for k, w in enumerate(chain):
            _emit(f"{k}\t{len(w)}\t{_short(w)}")
    return 0


def _bench(cfg: RunConfig, pi) -> int:
    kwargs = {"pi": pi} if pi is not None else {}
    backends = [cfg.backend] if cfg.backend else None
    rows = run_bench(doubling_lengths(stop=cfg.max_length), backends, cfg.repeat, **kwargs)
    if cfg.output_format == "json":
        _emit(json.dumps([r.__dict__ for r in rows]))
    else:
        for r in rows:
            _emit(f"{r.backend}\t{r.length}\t{r.seconds:.4f}")
        for name in sorted({r.backend for r in rows}):
            ratios = growth_per_doubling(rows, name)
            if ratios:
                _emit(f"{name}\tmax growth per doubling {max(ratios):.2f}")
    return 0


_HANDLERS = {
    "generate": _generate,
    "analyze": _analyze,
    "verify": _verify,
    "bistandard": _bistandard,
    "bench": _bench,
}


def run(cfg: RunConfig) -> int:
    try:
        pi = parse_defining_sequence(cfg.pi_text) if cfg.pi_text else None
        if pi is None and cfg.command in ("generate", "analyze", "bistandard"):
            raise ValueError("--pi is required for this command")
        return _HANDLERS[cfg.command](cfg, pi)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidPair, ParseError, ValueError, SturmpalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sturmpal", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("pi_pos", nargs="?", metavar="PI", help="defining sequence, e.g. '1,2;2,1'")
    parser.add_argument("--pi", dest="pi_text", help="defining sequence (alternative to PI)")
    parser.add_argument("--seed", default="a")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum word length")
    parser.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    parser.add_argument("--margin", type=int, default=1, help="seed letters of context on each side")
    parser.add_argument("--rng-seed", type=int, default=0)
    parser.add_argument("--sweep-n", type=int, default=5)
    parser.add_argument("--sweep-p", type=int, default=4)
    parser.add_argument("--sweep-count", type=int, default=100)
    parser.add_argument("--iterations", type=int, default=6, help="bistandard chain length")
    parser.add_argument("--max-length", type=int, default=10**7, help="largest bench length")
    parser.add_argument("--repeat", type=int, default=3, help="bench repetitions (best is kept)")
    parser.add_argument("--backend", choices=sorted(_backend.BACKENDS))
    parser.add_argument("--out", metavar="FILE")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            pi_text=args.pi_text or args.pi_pos or "",
            seed=args.seed,
            length_cap=args.cap,
            output_format=args.format,
            margin_levels=args.margin,
            rng_seed=args.rng_seed,
            sweep_n=args.sweep_n,
            sweep_p=args.sweep_p,
            sweep_count=args.sweep_count,
            iterations=args.iterations,
            out=args.out,
            backend=args.backend,
            max_length=args.max_length,
            repeat=args.repeat,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
