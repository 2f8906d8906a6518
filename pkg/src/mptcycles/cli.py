"""Command-line front end.

Exit codes: 0 success, 1 verification failure or CRITICAL hunt finding,
2 input error, 3 generation exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from . import digraph, plotting
from .constructor import ConstructionError, NotStrong, TooFewParts, two_pancyclic_arcs
from .digraph import InstanceError
from .generator import AttemptsExhausted, GenSpec, TooLarge, random_mpt, random_strong_mpt
from .hunt import run_hunt
from .oracle import ArcNotPresent, arc_spectrum
from .witness import TwoArcCertificate, verify_certificate

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_EXHAUSTED = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunReport:
    c: int
    part_sizes: list[int]
    n: int
    certificate: str | None = None
    arcs: list[list[int]] = field(default_factory=list)
    oracle: dict[str, list[int]] = field(default_factory=dict)
    seconds: float = 0.0
    verdict: str = "ok"
    issues: list[str] = field(default_factory=list)

    def text(self) -> str:
        lines = [
            f"instance c={self.c} parts={','.join(map(str, self.part_sizes))} n={self.n}",
        ]
        if self.certificate:
            lines.append(f"certificate {self.certificate}")
        for t, h in self.arcs:
            lines.append(f"arc {t}->{h}")
        for a, lengths in self.oracle.items():
            lines.append(f"oracle {a} lengths {','.join(map(str, lengths))}")
        lines.extend(f"issue {i}" for i in self.issues)
        lines.append(f"time {self.seconds:.3f}s")
        lines.append(f"verdict {self.verdict}")
        return "\n".join(lines)


def parts_arg(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("part sizes must be positive")
    return sizes


def arc_arg(text: str) -> tuple[int, int]:
    try:
        t, h = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'tail,head', got {text!r}") from None
    return t, h


def _load_instance(path):
    try:
        return digraph.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except InstanceError as exc:
        raise InputError(f"{path}: {type(exc).__name__}: {exc}") from None


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(report: RunReport, machine: bool) -> None:
    print(json.dumps(asdict(report), sort_keys=True) if machine else report.text())


# -- commands ----------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = GenSpec(args.parts, args.seed, args.max_attempts)
    try:
        D = random_strong_mpt(spec) if args.strong else random_mpt(spec)
    except AttemptsExhausted as exc:
        print(f"error: AttemptsExhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    _write(args.output, digraph.serialize(D))
    return EXIT_OK


def cmd_solve(args) -> int:
    D = _load_instance(args.instance)
    t0 = time.perf_counter()
    try:
        cert = two_pancyclic_arcs(D)
    except (NotStrong, TooFewParts) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None
    issues = verify_certificate(D, cert)
    report = RunReport(D.c, list(D.part_sizes), D.n, args.output, [list(a) for a in cert.arcs])
    if args.oracle:
        for a in cert.arcs:
            report.oracle[str(a)] = sorted(arc_spectrum(D, a, D.c).lengths)
            if not set(range(3, D.c + 1)) <= set(report.oracle[str(a)]):
                report.issues.append(f"OracleMiss {a}")
    report.issues.extend(str(i) for i in issues)
    report.seconds = time.perf_counter() - t0
    if report.issues:
        report.verdict = "FAILED"
        _emit(report, args.machine)
        return EXIT_FAIL
    if args.output:
        _write(args.output, cert.dumps())
        _emit(report, args.machine)
    else:
        sys.stdout.write(cert.dumps())
        print(report.text(), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    D = _load_instance(args.instance)
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            cert = TwoArcCertificate.loads(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.certificate}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(f"{args.certificate}: {exc}") from None
    issues = verify_certificate(D, cert)
    if args.machine:
        print(json.dumps({"ok": not issues, "issues": [i.to_dict() for i in issues]}, sort_keys=True))
    else:
        for i in issues:
            print(f"issue {i}")
        print("verdict ok" if not issues else f"verdict INVALID ({len(issues)} issues)")
    return EXIT_OK if not issues else EXIT_FAIL


def cmd_spectrum(args) -> int:
    D = _load_instance(args.instance)
    max_len = args.max_len or D.n
    arcs = [args.arc] if args.arc else D.arcs()
    try:
        spectra = [arc_spectrum(D, a, max_len) for a in arcs]
    except ArcNotPresent as exc:
        raise InputError(f"ArcNotPresent: {exc}") from None
    need = set(range(3, D.c + 1))
    full = [sp for sp in spectra if need <= sp.lengths]
    if args.machine:
        print(json.dumps({
            "c": D.c,
            "max_len": max_len,
            "spectra": [{"arc": list(sp.arc), "lengths": sorted(sp.lengths)} for sp in spectra],
            "full_spectrum_count": len(full),
        }, sort_keys=True))
    else:
        for sp in spectra:
            lengths = ",".join(map(str, sorted(sp.lengths))) or "-"
            print(f"arc {sp.arc.tail}->{sp.arc.head} lengths {lengths}")
        print(f"full_spectrum_count {len(full)}")
    if args.plot:
        plotting.spectrum_grid(spectra, D.c, max_len, args.plot, title=str(D))
    return EXIT_OK


def cmd_hunt(args) -> int:
    t0 = time.perf_counter()
    try:
        res = run_hunt(
            args.parts,
            exhaustive=args.exhaustive,
            random_n=args.random or 0,
            seed=args.seed,
            workers=args.workers,
        )
    except TooLarge as exc:
        raise InputError(f"TooLarge: {exc}") from None
    except AttemptsExhausted as exc:
        print(f"error: AttemptsExhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    elapsed = time.perf_counter() - t0
    ledger = res.ledger()
    if args.report:
        with open(args.report, "a" if args.append else "w", encoding="utf-8") as fh:
            fh.write(ledger)
    if args.plot:
        plotting.count_histogram(dict(res.histogram), args.plot, title=f"parts {','.join(map(str, res.parts))}")
    if args.machine:
        d = res.to_dict()
        d["seconds"] = round(elapsed, 3)
        print(json.dumps(d, sort_keys=True))
    else:
        if not args.report:
            sys.stdout.write(ledger)
        else:
            print(f"scanned {res.scanned} strong {res.strong} certified {res.certified} min_count {res.min_count}")
        print(f"time {elapsed:.3f}s")
        for f in res.critical:
            print(f"CRITICAL index={f.index} count={f.count} {f.note}", file=sys.stderr)
    return EXIT_FAIL if res.critical else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mptcycles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--parts", type=parts_arg, required=True, help="part sizes, e.g. 2,1,3")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--strong", action="store_true", help="rejection-sample until strong")
    g.add_argument("--max-attempts", type=int, default=1000)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="certify two arcs on nested 3..c cycles")
    s.add_argument("instance")
    s.add_argument("-o", "--output", help="certificate path (default: stdout)")
    s.add_argument("--oracle", action="store_true", help="also cross-check arcs by brute force")
    s.add_argument("--machine", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a certificate against an instance")
    v.add_argument("instance")
    v.add_argument("certificate")
    v.add_argument("--machine", action="store_true")
    v.set_defaults(func=cmd_verify)

    sp = sub.add_parser("spectrum", help="brute-force cycle lengths through arcs")
    sp.add_argument("instance")
    sp.add_argument("--arc", type=arc_arg)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--plot", help="write an arc/length grid figure")
    sp.add_argument("--machine", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    h = sub.add_parser("hunt", help="scan instances and ledger full-spectrum arc counts")
    h.add_argument("--parts", type=parts_arg, required=True)
    mode = h.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="N")
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--workers", type=int, default=1)
    h.add_argument("--report", help="ledger file")
    h.add_argument("--append", action="store_true", help="append to the ledger instead of overwriting")
    h.add_argument("--plot", help="write a histogram of counts")
    h.add_argument("--machine", action="store_true")
    h.set_defaults(func=cmd_hunt)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConstructionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
