"""Command-line front end: grassmann-codes <command> --q Q --m M [...]

Exit codes: 0 success, 1 selftest failure, 2 decode failure, 3 unsupported
parameters, 4 I/O or format error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .cache import CacheError, CodeBundle, build_bundle, load_cache, save_cache
from .code import code_parameters, word_from_str, word_to_str
from .field import UnsupportedParameters
from .list_decoder import list_parameters
from .pipeline import DecoderUnavailable, decode, decoder_from_bundle, pigeonhole_closes
from .selftest import run_selftest
from .simulate import SimulationConfig, random_error, run_simulation, summarize, to_csv

EXIT_OK, EXIT_SELFTEST, EXIT_DECODE, EXIT_UNSUPPORTED, EXIT_IO = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


def _bundle(args) -> CodeBundle:
    if args.cache and Path(args.cache).exists() and args.command != "build":
        b = load_cache(args.cache)
        if (b.ctx.q, b.ctx.m) != (args.q, args.m):
            raise CacheError(f"cache holds (q, m) = ({b.ctx.q}, {b.ctx.m}), not ({args.q}, {args.m})")
        return b
    return build_bundle(args.q, args.m)


def _read_word(args, q: int) -> np.ndarray:
    if args.word is not None:
        text = args.word
    elif args.input:
        text = Path(args.input).read_text()
    else:
        text = sys.stdin.read()
    try:
        return word_from_str(text, q)
    except ValueError as e:
        raise InputError(str(e)) from None


def _write(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(lines))


# ----------------------------------------------------------------- commands

def cmd_params(args) -> int:
    q, m = args.q, args.m
    b = _bundle(args)
    n, k, d = code_parameters(q, m)
    sizes = [o.size for o in b.orbits]
    full = (q ** m - 1) // (q - 1)
    usable = [i for i, info in enumerate(b.info_sets) if info is not None and sizes[i] == full]
    radius = (d - 1) // 2
    t = list_parameters(q, m)["t"] if m >= 3 else None
    available = m >= 3 and pigeonhole_closes(len(usable), radius, t)
    data = {"q": q, "m": m, "n": n, "k": k, "d": d, "orbit_sizes": sizes,
            "info_set_orbits": len(usable), "per_orbit_t": t, "radius": radius,
            "decoder_available": available}
    _emit(args, data, [
        f"C(2,{m}) over F_{q}: n={n} k={k} d={d}",
        f"orbits: {len(sizes)} of sizes {'/'.join(map(str, sizes))}",
        f"info-set orbits: {len(usable)}  per-orbit t: {t}  radius: {radius}",
        f"decoder: {'available' if available else 'refused'}",
    ])
    return EXIT_OK


def cmd_build(args) -> int:
    if not args.cache:
        raise InputError("build needs --cache PATH")
    b = build_bundle(args.q, args.m)
    save_cache(b, args.cache)
    print(f"wrote {args.cache}: n={b.code.n} k={b.code.k}, {len(b.orbits)} orbits")
    return EXIT_OK


def cmd_orbits(args) -> int:
    b = _bundle(args)
    rows = []
    for i, (o, oc, info) in enumerate(zip(b.orbits, b.orbit_codes, b.info_sets)):
        rows.append({"index": i, "delta_log": o.delta_log, "d": o.d, "size": o.size,
                     "dim": oc.dim, "has_info_set": info is not None,
                     "points": [list(P.canon_key) for P in o.points]})
    _emit(args, {"q": args.q, "m": args.m, "orbits": rows},
          ["idx  delta   d  size  dim  info-set"] +
          [f"{r['index']:>3}  g^{r['delta_log']:<4} {r['d']:>2} {r['size']:>5} {r['dim']:>4}  "
           f"{'yes' if r['has_info_set'] else 'no'}" for r in rows])
    return EXIT_OK


def cmd_encode(args) -> int:
    b = _bundle(args)
    msg = _read_word(args, args.q)
    if len(msg) != b.code.k:
        raise InputError(f"message has {len(msg)} symbols, expected k = {b.code.k}")
    _write(args, word_to_str(b.code.encode(msg)))
    return EXIT_OK


def cmd_corrupt(args) -> int:
    c = _read_word(args, args.q)
    if not 0 <= args.weight <= len(c):
        raise InputError(f"weight {args.weight} outside [0, {len(c)}]")
    rng = np.random.default_rng(np.random.SeedSequence(args.seed))
    _write(args, word_to_str((c + random_error(rng, len(c), args.q, args.weight)) % args.q))
    return EXIT_OK


def cmd_decode(args) -> int:
    b = _bundle(args)
    r = _read_word(args, args.q)
    if len(r) != b.code.n:
        raise InputError(f"received word has {len(r)} symbols, expected n = {b.code.n}")
    dec = decoder_from_bundle(b)
    res = decode(dec, r, fast=args.fast)
    diag = res.diagnostics()
    if args.diagnostics:
        Path(args.diagnostics).write_text(json.dumps(diag, sort_keys=True) + "\n")
    elif args.json:
        print(json.dumps(diag, sort_keys=True), file=sys.stderr)
    if res.success:
        _write(args, word_to_str(res.codeword))
    if not res.success:
        print(f"decode failure: nearest candidate at distance {res.distance}, radius {dec.radius}",
              file=sys.stderr)
        return EXIT_DECODE
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = SimulationConfig(args.q, args.m, args.trials, args.weight, args.seed,
                           args.fast, args.workers, not args.no_timing)
    dec = decoder_from_bundle(_bundle(args)) if cfg.workers <= 1 else None
    results = run_simulation(cfg, dec)
    csv_text = to_csv(results, timing=cfg.timing)
    summary = {"q": cfg.q, "m": cfg.m, "weight": cfg.weight, "seed": cfg.seed, **summarize(results)}
    if args.output:
        Path(args.output).write_text(csv_text)
    elif not args.json:
        sys.stdout.write(csv_text)
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"success_rate {summary['success_rate']:.4f}  reported_failures {summary['reported_failures']}  "
              f"miscorrections {summary['miscorrections']}  mean_candidates {summary['mean_candidates']:.2f}",
              file=sys.stderr)
    return EXIT_OK


def cmd_selftest(args) -> int:
    checks = run_selftest(args.q, args.m)
    ok = all(c.ok for c in checks)
    _emit(args, {"q": args.q, "m": args.m, "pass": ok,
                 "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]},
          [c.line() for c in checks] + [f"selftest ({args.q},{args.m}): {'pass' if ok else 'FAIL'}"])
    return EXIT_OK if ok else EXIT_SELFTEST


COMMANDS = {
    "params": cmd_params, "build": cmd_build, "orbits": cmd_orbits, "encode": cmd_encode,
    "corrupt": cmd_corrupt, "decode": cmd_decode, "simulate": cmd_simulate, "selftest": cmd_selftest,
}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="prime field size")
    common.add_argument("--m", type=int, default=4, help="extension degree")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", metavar="PATH", help="code cache file")
    common.add_argument("--fast", action="store_true", help="stop at the first orbit yielding a codeword within radius")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="grassmann-codes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("params", "build", "orbits", "selftest"):
        sub.add_parser(name, parents=[common])
    for name in ("encode", "corrupt", "decode"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("word", nargs="?", help="digit string (default: read --input or stdin)")
        p.add_argument("-i", "--input")
        p.add_argument("-o", "--output")
        if name == "corrupt":
            p.add_argument("--weight", type=int, required=True)
        if name == "decode":
            p.add_argument("--diagnostics", metavar="PATH", help="write JSON diagnostics here")
    p = sub.add_parser("simulate", parents=[common])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", help="CSV path (default stdout)")
    p.add_argument("--no-timing", action="store_true", help="leave wall_ms empty for byte-identical output")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                         format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UnsupportedParameters, DecoderUnavailable) as e:
        print(f"unsupported parameters: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InputError, CacheError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
