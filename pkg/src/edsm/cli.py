"""Command line: match, decide, gen, bench, oracle-check."""
from __future__ import annotations

import argparse
import csv
import gc
import random
import sys
import time

from .eds import EDSSyntaxError, Pattern, parse_eds, remap_alphabet
from .engine import EngineConfig, run_decision, run_reporting
from .exact import PatternIndex
from .generate import GenParams, generate, random_instance, random_string, scaling_text
from .oracle import oracle_end_positions

MODES = ("exact", "hamming1", "edit1")
ALGOS = ("auto", "geom", "grid", "errata")


class CliError(Exception):
    pass


def _read_text(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from e


def _config(args, task: str) -> EngineConfig:
    try:
        return EngineConfig(args.mode, task, args.algo)
    except ValueError as e:
        raise CliError(str(e)) from e


def _load(args):
    text = parse_eds(_read_text(args.text))
    pattern = Pattern(args.pattern.encode("utf-8").decode("latin-1"))
    return remap_alphabet(pattern, text)


def cmd_match(args) -> int:
    task = getattr(args, "task", "report")
    if task == "decide":
        return cmd_decide(args)
    cfg = _config(args, "report")
    p, t = _load(args)
    count = 0
    out = sys.stdout
    for rep in run_reporting(p, t, cfg):
        out.write(f"{rep.end_segment}\t{rep.kind.value}\n")
        count += 1
    if args.verbose:
        print(f"# {count} end positions, n={t.n}, N={t.N}, m={p.m}, mode={cfg.mode.value}",
              file=sys.stderr)
    return 0 if count else 1


def cmd_decide(args) -> int:
    cfg = _config(args, "decide")
    p, t = _load(args)
    found = run_decision(p, t, cfg)
    print("yes" if found else "no")
    return 0 if found else 1


def cmd_gen(args) -> int:
    prm = GenParams(args.n, args.max_alts, args.max_len, args.alphabet, args.eps_prob)
    try:
        text = generate(prm, args.seed, args.plant, args.plant_error)
    except ValueError as e:
        raise CliError(str(e)) from e
    sys.stdout.write(str(text) + "\n")
    return 0


def bench_rows(sizes, m: int, seed: int, modes, algos, repeats: int = 1):
    """Yield (n, m, N, mode, algo, seconds); seconds is the best of ``repeats``."""
    pattern = random_string(random.Random(seed), "ACGT", m, m)
    for N in sizes:
        text = scaling_text(N, pattern, seed + N)
        for mode in modes:
            for algo in algos:
                if algo == "errata" and mode != "hamming1":
                    continue
                cfg = EngineConfig(mode, "report", algo)
                best = float("inf")
                for _ in range(repeats):
                    gc.collect()
                    gc.disable()    # as timeit does
                    try:
                        t0 = time.perf_counter()
                        for _ in run_reporting(PatternIndex(pattern), text, cfg):
                            pass
                        best = min(best, time.perf_counter() - t0)
                    finally:
                        gc.enable()
                yield text.n, m, text.N, mode, algo, best


def cmd_bench(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "m", "N", "mode", "algo", "seconds"])
    for n, m, N, mode, algo, sec in bench_rows(args.sizes, args.m, args.seed, args.modes,
                                                 args.algos, args.repeats):
        w.writerow([n, m, N, mode, algo, f"{sec:.4f}"])
        sys.stdout.flush()
    return 0


def oracle_check(count: int, seed: int, **bounds):
    """Compare engine and oracle end positions; return the first counterexample or None."""
    rng = random.Random(seed)
    plan = [("exact", ("geom",)), ("hamming1", ("geom", "grid", "errata")), ("edit1", ("geom", "grid"))]
    for it in range(count):
        p, t = random_instance(rng, **bounds)
        for mode, algos in plan:
            want = oracle_end_positions(p, t, mode)
            for algo in algos:
                got = {r.end_segment for r in run_reporting(p, t, EngineConfig(mode, "report", algo))}
                if got != want:
                    return dict(instance=it, pattern=p, text=str(t), mode=mode, algo=algo,
                                engine=sorted(got), oracle=sorted(want))
    return None


def cmd_oracle_check(args) -> int:
    bounds = dict(n_max=args.max_n, alts_max=args.max_alts, len_max=args.max_len, m_max=args.max_m)
    bad = oracle_check(args.count, args.seed, **bounds)
    if bad is None:
        print(f"PASS {args.count} instances")
        return 0
    print("FAIL " + " ".join(f"{k}={v!r}" for k, v in bad.items()))
    return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edsm", description="Pattern matching in elastic-degenerate texts")
    sub = ap.add_subparsers(dest="command", required=True)

    def matching(sp, with_task):
        sp.add_argument("-p", "--pattern", required=True)
        sp.add_argument("-t", "--text", required=True, help="`.eds` file, or - for stdin")
        sp.add_argument("--mode", choices=MODES, default="edit1")
        if with_task:
            sp.add_argument("--task", choices=("report", "decide"), default="report")
        sp.add_argument("--algo", choices=ALGOS, default="auto")
        sp.add_argument("--seed", type=int, default=0, help="unused; accepted for uniformity")
        sp.add_argument("--verbose", action="store_true")

    sp = sub.add_parser("match", help="report end segments of occurrences")
    matching(sp, True)
    sp.set_defaults(func=cmd_match)
    sp = sub.add_parser("decide", help="answer whether any occurrence exists")
    matching(sp, False)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("gen", help="write a random `.eds` text")
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--max-alts", type=int, default=3)
    sp.add_argument("--max-len", type=int, default=4)
    sp.add_argument("--alphabet", default="ACGT")
    sp.add_argument("--eps-prob", type=float, default=0.1)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--plant", default=None, help="pattern to embed along one path")
    sp.add_argument("--plant-error", action="store_true", help="inject one error into the planted copy")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="CSV timings over a doubling series of text sizes")
    sp.add_argument("--sizes", type=int, nargs="+", default=[1 << 15, 1 << 16, 1 << 17, 1 << 18])
    sp.add_argument("--m", type=int, default=32)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--modes", nargs="+", choices=MODES, default=["edit1"])
    sp.add_argument("--algos", nargs="+", choices=ALGOS, default=["geom", "grid"])
    sp.add_argument("--repeats", type=int, default=1)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("oracle-check", help="compare the engine with brute force on random instances")
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--max-alts", type=int, default=3)
    sp.add_argument("--max-len", type=int, default=4)
    sp.add_argument("--max-m", type=int, default=10)
    sp.set_defaults(func=cmd_oracle_check)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, EDSSyntaxError, ValueError) as e:
        print(f"edsm: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
