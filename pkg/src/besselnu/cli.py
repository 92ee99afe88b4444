"""Command-line front end: single evaluations and sweep tables of d^k J_nu / d nu^k.

Exit codes: 0 success, 1 usage error (diagnostic on stderr, no partial
output), 2 verification disagreement beyond --verify-tol.
"""

import argparse
import math
import sys
from dataclasses import dataclass

from .errors import ConvergenceError, OracleError
from .oracle import FdConfig, oracle_finite_difference, oracle_recurrence
from .order_derivative import SeriesConfig, dnu_bessel_j

__all__ = ["SweepSpec", "run", "main"]

_BASE_FIELDS = ("nu", "z", "k", "value", "branch", "terms_used", "tail_estimate")
_VERIFY_FIELDS = ("fd_oracle", "rec_oracle", "max_rel_disagreement")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass(frozen=True)
class SweepSpec:
    """The fully-parsed evaluation grid."""

    nu_values: tuple
    z_values: tuple
    k_values: tuple
    format: str

    def validate(self):
        if not (self.nu_values and self.z_values and self.k_values):
            raise _UsageError("--nu, --z and --k must each yield at least one value")
        for z in self.z_values:
            if not (math.isfinite(z) and z > 0):
                raise _UsageError(f"z values must be finite and > 0, got {z}")
        for nu in self.nu_values:
            if not math.isfinite(nu):
                raise _UsageError(f"nu values must be finite, got {nu}")
        for k in self.k_values:
            if k < 0:
                raise _UsageError(f"k values must be >= 0, got {k}")


def _parse_reals(text: str) -> list:
    """Comma-separated scalars and/or start:stop:step ranges (stop inclusive
    within half a step)."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise _UsageError(f"empty value in '{text}'")
        if ":" in chunk:
            parts = chunk.split(":")
            if len(parts) != 3:
                raise _UsageError(f"bad range '{chunk}' (expected start:stop:step)")
            try:
                start, stop, step = (float(p) for p in parts)
            except ValueError:
                raise _UsageError(f"bad range '{chunk}'") from None
            if not all(map(math.isfinite, (start, stop, step))) or step == 0:
                raise _UsageError(f"bad range '{chunk}'")
            count = math.floor((stop - start) / step + 0.5)
            if count < 0:
                raise _UsageError(f"range '{chunk}' runs against its step")
            if count > 1_000_000:
                raise _UsageError(f"range '{chunk}' expands to {count + 1} values")
            out.extend(start + i * step for i in range(count + 1))
        else:
            try:
                out.append(float(chunk))
            except ValueError:
                raise _UsageError(f"bad value '{chunk}'") from None
    return out


def _build_parser() -> _Parser:
    p = _Parser(prog="besselnu", description=__doc__, add_help=True)
    p.add_argument("--nu", action="append", metavar="LIST|RANGE", default=None,
                   help="order(s): comma list and/or start:stop:step (repeatable)")
    p.add_argument("--z", action="append", metavar="LIST|RANGE", default=None,
                   help="argument(s), z > 0 (repeatable)")
    p.add_argument("--k", action="append", type=int, metavar="INT", default=None,
                   help="derivative order(s), k >= 0 (repeatable)")
    p.add_argument("--tol", type=float, default=1e-13, help="series tolerance")
    p.add_argument("--max-terms", type=int, default=300, help="series term cap")
    p.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    p.add_argument("--verify", action="store_true",
                   help="append finite-difference and recurrence oracle columns")
    p.add_argument("--verify-tol", type=float, default=1e-6)
    p.add_argument("--fd-step", type=float, default=1e-2)
    p.add_argument("--fd-levels", type=int, default=4)
    return p


def _g17(v: float) -> str:
    return f"{v:.17g}"


def _evaluate(spec: SweepSpec, args):
    cfg = SeriesConfig(tol=args.tol, max_terms=args.max_terms)
    fd_cfg = FdConfig(base_step=args.fd_step, levels=args.fd_levels)
    records = []
    worst = 0.0
    for nu in spec.nu_values:
        for z in spec.z_values:
            for k in spec.k_values:
                res = dnu_bessel_j(nu, z, k, cfg)
                rec = {
                    "nu": nu,
                    "z": z,
                    "k": k,
                    "value": res.value,
                    "branch": res.branch.value,
                    "terms_used": res.terms_used,
                    "tail_estimate": res.tail_estimate,
                }
                if args.verify:
                    fd_val = rec_val = None
                    if 1 <= k <= 4:
                        try:
                            fd_val = oracle_finite_difference(nu, z, k, fd_cfg, cfg)
                        except OracleError as exc:
                            print(f"besselnu: fd oracle skipped at (nu={nu}, z={z}, "
                                  f"k={k}): {exc}", file=sys.stderr)
                    if k >= 1:
                        rec_val = oracle_recurrence(nu, z, k, cfg)
                    denom = max(abs(res.value), 1e-12)
                    diffs = [abs(res.value - o) / denom
                             for o in (fd_val, rec_val) if o is not None]
                    disagreement = max(diffs) if diffs else None
                    if disagreement is not None:
                        worst = max(worst, disagreement)
                    rec["fd_oracle"] = fd_val
                    rec["rec_oracle"] = rec_val
                    rec["max_rel_disagreement"] = disagreement
                records.append(rec)
    return records, worst


def _fields(verify: bool):
    return _BASE_FIELDS + (_VERIFY_FIELDS if verify else ())


def _cell(name, value):
    if value is None:
        return ""
    if name in ("k", "terms_used"):
        return str(value)
    if name == "branch":
        return value
    return _g17(value)


def _render_csv(records, verify):
    fields = _fields(verify)
    lines = [",".join(fields)]
    lines.extend(",".join(_cell(f, r[f]) for f in fields) for r in records)
    return "\n".join(lines) + "\n"


def _render_json(records, verify):
    fields = _fields(verify)
    objs = []
    for r in records:
        parts = []
        for f in fields:
            v = r[f]
            if v is None:
                parts.append(f'"{f}": null')
            elif f in ("k", "terms_used"):
                parts.append(f'"{f}": {v}')
            elif f == "branch":
                parts.append(f'"{f}": "{v}"')
            else:
                parts.append(f'"{f}": {_g17(v)}')
        objs.append("  {" + ", ".join(parts) + "}")
    return "[\n" + ",\n".join(objs) + "\n]\n"


def _render_plain(records, verify):
    fields = _fields(verify)
    lines = []
    for r in records:
        cells = []
        for f in fields:
            v = _cell(f, r[f])
            cells.append(f"{f}={v if v else '-'}")
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


_RENDERERS = {"csv": _render_csv, "json": _render_json, "plain": _render_plain}


def run(argv) -> int:
    """Parse argv, evaluate the sweep, write one record per grid point to stdout."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.nu is None or args.z is None or args.k is None:
            raise _UsageError("--nu, --z and --k are required")
        spec = SweepSpec(
            nu_values=tuple(v for chunk in args.nu for v in _parse_reals(chunk)),
            z_values=tuple(v for chunk in args.z for v in _parse_reals(chunk)),
            k_values=tuple(args.k),
            format=args.format,
        )
        spec.validate()
        if args.tol <= 0 or args.max_terms < 10:
            raise _UsageError("--tol must be > 0 and --max-terms >= 10")
        if args.fd_step <= 0 or args.fd_levels < 1:
            raise _UsageError("--fd-step must be > 0 and --fd-levels >= 1")
    except _UsageError as exc:
        print(f"besselnu: error: {exc}", file=sys.stderr)
        return 1

    try:
        records, worst = _evaluate(spec, args)
    except (ConvergenceError, ValueError) as exc:
        print(f"besselnu: error: {exc}", file=sys.stderr)
        return 1

    sys.stdout.write(_RENDERERS[spec.format](records, args.verify))
    if args.verify and worst > args.verify_tol:
        return 2
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
