"""Command-line front end.

Exit codes: 0 ok, 2 usage or input error, 3 non-admissible sequence,
4 disagreement between two computations that should match.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .coeffs import NonAdmissibleError, clear_caches, fnomial, multi_fnomial
from .compositions import count_compositions
from .fseq import FSequence, check_admissible, make_sequence
from .inversion import fnomial_inverse_direct, inverse_matrix
from .polybasis import phi_polynomial
from .tiling import UnsupportedSequenceError, lambda_decompose, verify_theorem1_recurrence

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NON_ADMISSIBLE = 3
EXIT_MISMATCH = 4

FORMATS = ("text", "json", "csv")
METHODS = ("direct", "oracle", "both")
DEFAULT_BENCH_SIZES = (8, 12, 16, 20)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    seq: str = "fibonacci"
    format: str = "text"
    method: str = "oracle"
    N: Optional[int] = None
    sizes: List[int] = field(default_factory=list)
    numbers: List[int] = field(default_factory=list)
    recurrence: bool = False

    def validate(self):
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.method not in METHODS:
            raise UsageError(f"unknown method {self.method!r}")
        if self.N is not None and self.N < 0:
            raise UsageError("N must be >= 0")
        if any(v < 0 for v in self.sizes):
            raise UsageError("sizes must be >= 0")
        if any(v < 0 for v in self.numbers):
            raise UsageError("arguments must be non-negative")
        return self

    def sequence(self) -> FSequence:
        try:
            return make_sequence(self.seq)
        except (ValueError, TypeError, OSError) as exc:
            raise UsageError(str(exc)) from None


def _size_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seq", default="fibonacci",
                        help="natural | fibonacci | gaussian:<q> | file:<path> (default fibonacci)")
    common.add_argument("--format", choices=FORMATS, default="text")

    p = argparse.ArgumentParser(prog="fnomial",
                                description="Exact F-nomial coefficients and their inverse matrix.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fnomial", parents=[common], help="C(n,k)_F")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)

    s = sub.add_parser("multinomial", parents=[common], help="C(n; k_1, .., k_s)_F")
    s.add_argument("n", type=int)
    s.add_argument("parts", type=int, nargs="+")

    s = sub.add_parser("invert", parents=[common], help="inverse F-nomial matrix up to order N")
    s.add_argument("-N", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default="oracle")

    s = sub.add_parser("phi", parents=[common], help="Phi_n(x)")
    s.add_argument("n", type=int)
    s.add_argument("--method", choices=("direct", "oracle"), default="oracle")

    s = sub.add_parser("check", parents=[common], help="admissibility up to N")
    s.add_argument("-N", type=int, required=True)

    s = sub.add_parser("lambda", parents=[common], help="lambda decomposition of (k_1+..+k_s)_F")
    s.add_argument("parts", type=int, nargs="+")
    s.add_argument("--recurrence", action="store_true",
                   help="also check the multi F-nomial recurrence for these parts")

    s = sub.add_parser("bench", parents=[common], help="direct formula vs matrix inversion timings")
    s.add_argument("-N", type=_size_list, default=list(DEFAULT_BENCH_SIZES),
                   help="comma-separated sizes (default 8,12,16,20)")
    return p


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, seq=ns.seq, format=ns.format,
                    method=getattr(ns, "method", "oracle"))
    if ns.command == "fnomial":
        cfg.numbers = [ns.n, ns.k]
    elif ns.command == "multinomial":
        cfg.numbers = [ns.n] + ns.parts
    elif ns.command in ("invert", "check"):
        cfg.N = ns.N
    elif ns.command == "phi":
        cfg.numbers = [ns.n]
    elif ns.command == "lambda":
        cfg.numbers = ns.parts
        cfg.recurrence = ns.recurrence
    elif ns.command == "bench":
        cfg.sizes = ns.N
    return cfg.validate()


def _emit(out, text: str):
    out.write(text if text.endswith("\n") else text + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_fnomial(cfg: RunConfig, out) -> int:
    F = cfg.sequence()
    n, k = cfg.numbers
    value = fnomial(F, n, k)
    if cfg.format == "json":
        _emit(out, _dumps({"sequence": F.name, "n": n, "k": k, "value": value}))
    elif cfg.format == "csv":
        _emit(out, f"n,k,value\n{n},{k},{value}")
    else:
        _emit(out, str(value))
    return EXIT_OK


def cmd_multinomial(cfg: RunConfig, out) -> int:
    F = cfg.sequence()
    n, parts = cfg.numbers[0], cfg.numbers[1:]
    value = multi_fnomial(F, n, parts)
    if cfg.format == "json":
        _emit(out, _dumps({"sequence": F.name, "n": n, "parts": parts, "value": value}))
    elif cfg.format == "csv":
        _emit(out, "n,parts,value\n" + f"{n},{' '.join(map(str, parts))},{value}")
    else:
        _emit(out, str(value))
    return EXIT_OK


def _render_matrix(M, fmt: str) -> str:
    if fmt == "json":
        return M.to_json()
    if fmt == "csv":
        return M.to_csv()
    return M.to_text()


def cmd_inverse_matrix(cfg: RunConfig, out, err=sys.stderr) -> int:
    F = cfg.sequence()
    if cfg.method == "both":
        oracle = inverse_matrix(F, cfg.N, "oracle")
        direct = inverse_matrix(F, cfg.N, "direct")
        _emit(out, _render_matrix(oracle, cfg.format))
        diffs = [(n, k) for n, k, v in oracle.entries() if direct[n, k] != v]
        report = out if cfg.format == "text" else err
        if diffs:
            n, k = diffs[0]
            _emit(report, f"disagreement: {len(diffs)} entries differ, first at ({n}, {k}): "
                          f"direct={direct[n, k]} oracle={oracle[n, k]}")
            return EXIT_MISMATCH
        _emit(report, f"agreement: direct and oracle match on all "
                      f"{(cfg.N + 1) * (cfg.N + 2) // 2} entries")
        return EXIT_OK
    _emit(out, _render_matrix(inverse_matrix(F, cfg.N, cfg.method), cfg.format))
    return EXIT_OK


def cmd_phi(cfg: RunConfig, out) -> int:
    F = cfg.sequence()
    p = phi_polynomial(F, cfg.numbers[0], method=cfg.method)
    if cfg.format == "json":
        _emit(out, p.to_json())
    elif cfg.format == "csv":
        _emit(out, "power,coefficient\n" + "\n".join(
            f"{i},{c}" for i, c in enumerate(p.coeffs)))
    else:
        _emit(out, str(p))
    return EXIT_OK


def cmd_check(cfg: RunConfig, out) -> int:
    F = cfg.sequence()
    try:
        rep = check_admissible(F, cfg.N)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    if cfg.format == "json":
        _emit(out, _dumps({
            "sequence": rep.sequence, "N": rep.N, "admissible": rep.admissible,
            "failure": list(rep.failure) if rep.failure else None,
            "value": str(rep.value) if rep.value is not None else None,
            "reason": rep.reason or None}))
    elif rep.admissible:
        _emit(out, f"admissible: all C(n,k)_F for n <= {rep.N} are non-negative integers")
    else:
        n, k = rep.failure
        shown = f" (= {rep.value})" if rep.value is not None else ""
        _emit(out, f"not admissible at (n={n}, k={k}): {rep.reason}{shown}")
    return EXIT_OK if rep.admissible else EXIT_NON_ADMISSIBLE


def cmd_lambda(cfg: RunConfig, out) -> int:
    F = cfg.sequence()
    parts = tuple(cfg.numbers)
    if any(p < 1 for p in parts):
        raise UsageError("parts must be positive")
    try:
        lv = lambda_decompose(F, parts)
    except UnsupportedSequenceError as exc:
        raise UsageError(str(exc)) from None
    rec = verify_theorem1_recurrence(F, sum(parts), parts) if cfg.recurrence else None
    if cfg.format == "json":
        doc = {"sequence": F.name, "parts": list(parts), "lambdas": list(lv.lambdas)}
        if rec is not None:
            doc["recurrence"] = {"lhs": rec.lhs, "rhs": rec.rhs, "terms": list(rec.terms),
                                 "ok": rec.ok}
        _emit(out, _dumps(doc))
    else:
        _emit(out, "lambdas: " + " ".join(map(str, lv.lambdas)))
        if rec is not None:
            _emit(out, f"recurrence: {rec.lhs} = {' + '.join(map(str, rec.terms))} -> "
                       f"{'ok' if rec.ok else 'FAIL'}")
    if rec is not None and not rec.ok:
        return EXIT_MISMATCH
    return EXIT_OK


def bench_row(seq: str, N: int) -> dict:
    # fresh sequence objects so neither path sees the other's memo tables
    F = make_sequence(seq)
    t0 = time.perf_counter()
    direct_value = fnomial_inverse_direct(F, N, 0)
    t_direct = time.perf_counter() - t0
    clear_caches(F)

    G = make_sequence(seq)
    t0 = time.perf_counter()
    oracle = inverse_matrix(G, N, "oracle")
    t_oracle = time.perf_counter() - t0
    clear_caches(G)

    return {
        "N": N,
        "compositions": count_compositions(N) if N >= 1 else 0,
        "oracle_entries": (N + 1) * (N + 2) // 2,
        "direct_seconds": t_direct,
        "oracle_seconds": t_oracle,
        "agree": direct_value == oracle[N, 0],
        "faster": "oracle" if t_oracle < t_direct else "direct",
    }


def cmd_bench(cfg: RunConfig, out) -> int:
    seq = cfg.sequence().name
    rows = [bench_row(cfg.seq, N) for N in cfg.sizes]
    doc = {"sequence": seq, "entry": "(N, 0)", "results": rows}
    if cfg.format == "json":
        _emit(out, json.dumps(doc, indent=2))
    else:
        _emit(out, f"sequence {seq}: direct formula for entry (N, 0) vs full matrix inversion")
        _emit(out, f"{'N':>4} {'compositions':>12} {'entries':>8} "
                   f"{'direct_s':>12} {'oracle_s':>12} {'faster':>7} {'agree':>6}")
        for r in rows:
            _emit(out, f"{r['N']:>4} {r['compositions']:>12} {r['oracle_entries']:>8} "
                       f"{r['direct_seconds']:>12.6f} {r['oracle_seconds']:>12.6f} "
                       f"{r['faster']:>7} {str(r['agree']):>6}")
        _emit(out, "")
        _emit(out, json.dumps(doc, indent=2))
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_MISMATCH


COMMANDS = {
    "fnomial": cmd_fnomial,
    "multinomial": cmd_multinomial,
    "invert": cmd_inverse_matrix,
    "phi": cmd_phi,
    "check": cmd_check,
    "lambda": cmd_lambda,
    "bench": cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"fnomial: error: {exc}", file=err)
        return EXIT_USAGE
    try:
        if cfg.command == "invert":
            return cmd_inverse_matrix(cfg, out, err)
        return COMMANDS[cfg.command](cfg, out)
    except UsageError as exc:
        print(f"fnomial: error: {exc}", file=err)
        return EXIT_USAGE
    except IndexError as exc:
        print(f"fnomial: error: {exc}", file=err)
        return EXIT_USAGE
    except NonAdmissibleError as exc:
        print(f"fnomial: {exc}", file=err)
        return EXIT_NON_ADMISSIBLE


if __name__ == "__main__":
    sys.exit(main())
