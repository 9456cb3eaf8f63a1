"""Command-line front-end: verification sweeps, table export, identity checks.

Subcommands:

    verify     sweep a congruence check over a parameter grid, JSON manifest
    btable     print a power-expansion coefficient table
    ctable     print a weight-absorption coefficient table
    identity   run one named identity certificate
    linearize  expand a product of binomial-power terms over the B_t basis
    report     render a manifest to CSV + figures

Exit codes: 0 all checks pass, 1 a check failed (counterexample), 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .binomials import binom, central_binom
from .cache import b_table_cached, c_table_cached, default_cache_dir
from .congruence import partial_sum_minus, partial_sum_plus
from .linearize import (
    pfaff_check,
    power_expansion_check,
    product_expansion_check,
    tuple_linearize,
)
from .report import render_report
from .sweep import CHECKS, SweepSpec, SweepSpecError, run_sweep
from .weights import square_weight_check, verify_c_identity

# Identity selector -> (required flags, one-line description)
IDENTITIES = {
    "main5": (("m", "r"), "expansion of a binomial power over the B_t basis"),
    "main8": (("m", "k"), "balanced-product rewriting (Pfaff-Saalschuetz case)"),
    "main12": (("n",), "closed form of the odd-weighted partial sums"),
    "main13": (("n",), "closed form of the alternating partial sums"),
    "repeat": (("i", "j"), "expansion of a basis product B_i * B_j"),
    "main14": (("j", "a"), "absorption of the weight k^a (k+1)^a"),
    "sq_weight": (("a",), "expansion of (2k+1)^(2a) over k^i (k+1)^i"),
}


def parse_range(text: str) -> tuple[int, int]:
    """Inclusive 'lo..hi' range, or a single value."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        return int(lo_text), int(hi_text)
    value = int(text)
    return value, value


def parse_signs(text: str) -> tuple[int, ...]:
    mapping = {
        "+": (1,),
        "+1": (1,),
        "-": (-1,),
        "-1": (-1,),
        "both": (-1, 1),
    }
    if text not in mapping:
        raise ValueError(f"sign must be one of {sorted(mapping)}, got {text!r}")
    return mapping[text]


def parse_indices(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad index list {text!r}") from exc
    if not values:
        raise ValueError("index list is empty")
    if any(v < 0 for v in values):
        raise ValueError(f"indices must be >= 0, got {values}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schmidtpoly",
        description="Exact divisibility verification for Schmidt polynomial sums.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Sweep a congruence check over a grid")
    verify.add_argument("--check", choices=CHECKS, default="theorem")
    verify.add_argument("--n", type=parse_range, required=True, metavar="LO..HI")
    verify.add_argument("--m", type=parse_range, default=(1, 1), metavar="LO..HI")
    verify.add_argument("--r", type=parse_range, default=(1, 1), metavar="LO..HI")
    verify.add_argument("--a", type=parse_range, default=(0, 0), metavar="LO..HI")
    verify.add_argument("--sign", type=parse_signs, default=(1,), metavar="{+,-,both}")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--json", default=None, metavar="PATH|-",
                        help="write the run manifest to PATH, or '-' for stdout")
    verify.add_argument("--stable-output", action="store_true",
                        help="zero timing fields so identical runs are byte-identical")
    verify.add_argument("--cache", default=None, metavar="DIR")
    verify.add_argument("--exploratory", action="store_true",
                        help="allow odd_power sweeps with m > 1")

    btable = sub.add_parser("btable", help="Print a power-expansion table")
    btable.add_argument("--m", type=int, required=True)
    btable.add_argument("--r", type=int, required=True)
    btable.add_argument("--cache", default=None, metavar="DIR")

    ctable = sub.add_parser("ctable", help="Print a weight-absorption table")
    ctable.add_argument("--j", type=int, required=True)
    ctable.add_argument("--a", type=int, required=True)
    ctable.add_argument("--cache", default=None, metavar="DIR")

    identity = sub.add_parser("identity", help="Run one named identity certificate")
    identity.add_argument("which", choices=sorted(IDENTITIES))
    for flag in ("n", "m", "r", "k", "i", "j", "a"):
        identity.add_argument(f"--{flag}", type=int, default=None)

    linearize = sub.add_parser("linearize", help="Expand a product over the basis")
    linearize.add_argument("--indices", type=parse_indices, required=True, metavar="I1,I2,...")
    linearize.add_argument("--r", type=int, default=1)

    report = sub.add_parser("report", help="Render a manifest to CSV + figures")
    report.add_argument("--manifest", required=True, metavar="PATH")
    report.add_argument("--out-dir", required=True, metavar="DIR")

    return parser


def _cache_dir(arg: str | None) -> Path | None:
    if arg is not None:
        return Path(arg)
    return default_cache_dir()


def cmd_verify(args: argparse.Namespace) -> int:
    spec = SweepSpec(
        check=args.check,
        n=args.n,
        m=args.m,
        r=args.r,
        a=args.a,
        signs=args.sign,
        jobs=args.jobs,
        stable=args.stable_output,
        output=args.json or "-",
        cache_dir=args.cache,
        exploratory=args.exploratory,
    )
    try:
        spec.validate()
    except SweepSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    manifest = run_sweep(spec)
    document = manifest.to_json()
    if args.json == "-":
        sys.stdout.write(document)
    else:
        if args.json is not None:
            try:
                Path(args.json).write_text(document, encoding="utf-8")
            except OSError as exc:
                print(f"error: cannot write manifest to {args.json}: {exc}", file=sys.stderr)
                return 2
        failed = sum(1 for rep in manifest.reports if not rep.passed)
        print(
            f"{spec.check}: {len(manifest.reports)} cells, "
            f"{len(manifest.reports) - failed} pass, {failed} fail"
        )
        if args.json is not None:
            print(f"manifest: {args.json}")
    return manifest.exit_code()


def cmd_btable(args: argparse.Namespace) -> int:
    if args.m < 0 or args.r < 1:
        print("error: btable needs m >= 0 and r >= 1", file=sys.stderr)
        return 2
    table = b_table_cached(args.m, args.r, _cache_dir(args.cache))
    print(" ".join(f"b[{k}]={v}" for k, v in table.items()))
    return 0


def cmd_ctable(args: argparse.Namespace) -> int:
    if args.j < 0 or args.a < 0:
        print("error: ctable needs j >= 0 and a >= 0", file=sys.stderr)
        return 2
    table = c_table_cached(args.j, args.a, _cache_dir(args.cache))
    print(" ".join(f"c[{i}]={v}" for i, v in enumerate(table.entries)))
    return 0


def _identity_args(args: argparse.Namespace) -> dict[str, int]:
    required, _ = IDENTITIES[args.which]
    supplied = {
        flag: getattr(args, flag)
        for flag in ("n", "m", "r", "k", "i", "j", "a")
        if getattr(args, flag) is not None
    }
    missing = [flag for flag in required if flag not in supplied]
    extra = [flag for flag in supplied if flag not in required]
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join(f"--{f}" for f in missing))
        if extra:
            parts.append("unexpected " + ", ".join(f"--{f}" for f in extra))
        raise SweepSpecError(f"identity {args.which} takes {sorted(required)}: " + "; ".join(parts))
    return supplied


def _check_partial_sums(n_max: int, alternating: bool) -> tuple[bool, int]:
    """Closed forms vs. brute-force sums for every n <= n_max, k < n."""
    checks = 0
    for n in range(1, n_max + 1):
        for k in range(n):
            brute = 0
            for ell in range(k, n):
                term = (2 * ell + 1) * binom(ell + k, 2 * k) * central_binom(k)
                if alternating and ell % 2 == 1:
                    term = -term
                brute += term
            closed = partial_sum_minus(n, k) if alternating else partial_sum_plus(n, k)
            checks += 1
            if brute != closed:
                return False, checks
    return True, checks


def cmd_identity(args: argparse.Namespace) -> int:
    try:
        params = _identity_args(args)
    except SweepSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    which = args.which
    try:
        if which == "main5":
            cert = power_expansion_check(params["m"], params["r"])
            label = f"m={params['m']} r={params['r']}: {len(cert.samples)} points"
        elif which == "main8":
            k = params["k"]
            cert = pfaff_check(params["m"], k, range(2 * k + 1))
            label = f"m={params['m']} k={k}: {2 * k + 1} points"
        elif which in ("main12", "main13"):
            ok, checks = _check_partial_sums(params["n"], alternating=(which == "main13"))
            print(f"{which} n<={params['n']}: {checks} sums {'PASS' if ok else 'FAIL'}")
            return 0 if ok else 1
        elif which == "repeat":
            cert = product_expansion_check(params["i"], params["j"])
            label = f"i={params['i']} j={params['j']}: {len(cert.samples)} points"
        elif which == "main14":
            cert = verify_c_identity(
                params["j"],
                params["a"],
                range(2 * params["j"] + 2 * params["a"] + 1),
            )
            label = f"j={params['j']} a={params['a']}: {len(cert.samples)} points"
        else:  # sq_weight
            cert = square_weight_check(params["a"])
            label = f"a={params['a']}: {len(cert.samples)} points"
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{which} {label} {'PASS' if cert.ok else 'FAIL'}")
    if not cert.ok:
        for sample, lhs, rhs in cert.failures[:5]:
            print(f"  mismatch at {sample}: lhs={lhs} rhs={rhs}")
    return 0 if cert.ok else 1


def cmd_linearize(args: argparse.Namespace) -> int:
    if args.r < 1:
        print("error: linearize needs r >= 1", file=sys.stderr)
        return 2
    combo = tuple_linearize(args.indices, args.r)
    body = ", ".join(f"{t}: {combo[t]}" for t in sorted(combo))
    print("{" + body + "}")
    lo, hi = min(combo), max(combo)
    lo_bound = max(args.indices)
    hi_bound = args.r * sum(args.indices)
    assert lo >= lo_bound and hi <= hi_bound
    print(f"bounds: min={lo} >= max(indices)={lo_bound}, max={hi} <= r*sum(indices)={hi_bound}")
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    path = Path(args.manifest)
    try:
        manifest = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read manifest {args.manifest}: {exc}", file=sys.stderr)
        return 2
    if not isinstance(manifest, dict) or "cells" not in manifest:
        print(f"error: {args.manifest} is not a run manifest", file=sys.stderr)
        return 2
    written = render_report(manifest, Path(args.out_dir))
    for out in written:
        print(out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "btable": cmd_btable,
        "ctable": cmd_ctable,
        "identity": cmd_identity,
        "linearize": cmd_linearize,
        "report": cmd_report,
    }
    return handlers[args.command](args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
