"""Command line front end.

    qupit-clifford certify --p 3 --format json
    qupit-clifford export --p 5 --out basis.json
    qupit-clifford verify --p 3 --props L3.1,P5.1

Exit status: 0 if every requested check passes, 1 if any fails (the report
is still written), 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .clifford import (
    PROPOSITIONS, CliffordCode, certify, expand_props, validate_prime, verify_props,
)
from .cyclotomic import context
from .group import DEFAULT_CAP, CapExceeded
from .repspace import export_code_data


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    p: int
    format: str = "text"
    out: Optional[str] = None
    props: Optional[list[str]] = None
    cap: int = DEFAULT_CAP
    oracle: bool = True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qupit-clifford",
        description="Build and certify the non-stabilizer Clifford code on a qupit-qubit pair.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (("certify", "run every proposition check and print a report"),
                        ("export", "write code bases, projectors and qupit/qubit labels"),
                        ("verify", "run selected proposition checks")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--format", choices=("json", "text"),
                        default="json" if name == "export" else "text")
        sp.add_argument("--out", help="write output to this path instead of stdout")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")
        sp.add_argument("--no-oracle", dest="oracle", action="store_false",
                        help="skip the floating-point cross-check")
        if name == "verify":
            sp.add_argument("--props", required=True,
                            help="comma separated ids: " + ",".join(PROPOSITIONS))
    return parser


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(argv)
    props = None
    if getattr(ns, "props", None) is not None:
        props = [s.strip() for s in ns.props.split(",") if s.strip()]
        try:
            expand_props(props)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    try:
        validate_prime(ns.p, ns.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    return CliConfig(ns.command, ns.p, ns.format, ns.out, props, ns.cap, ns.oracle)


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _run_certify(cfg: CliConfig) -> int:
    code = CliffordCode(cfg.p, cfg.cap)
    report = certify(cfg.p, cfg.cap, code=code)
    if cfg.oracle:
        from .oracle import attach, cross_check
        attach(report, cross_check(report, code=code))
    text = report.to_json() if cfg.format == "json" else report.to_text()
    _emit(text, cfg.out)
    return 0 if report.passed else 1


def _run_verify(cfg: CliConfig) -> int:
    results = verify_props(cfg.p, cfg.props, cfg.cap)
    if cfg.format == "json":
        text = json.dumps({"p": cfg.p, "requested": cfg.props,
                           "checks": [asdict(r) for r in results]}, indent=2, sort_keys=True)
    else:
        lines = [f"p = {cfg.p}"]
        for r in results:
            tag = "" if r.id in cfg.props else "  (prerequisite)"
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.id:5s} {r.title}{tag}")
            for k, v in r.detail.items():
                lines.append(f"      {k}: {v}")
            if r.error:
                lines.append(f"      error: {r.error}")
        text = "\n".join(lines)
    _emit(text, cfg.out)
    return 0 if all(r.passed for r in results) else 1


def _run_export(cfg: CliConfig) -> int:
    data = export_code_data(context(cfg.p))
    if cfg.format == "json":
        text = json.dumps(data, indent=2)
    else:
        p = cfg.p
        lines = [f"p = {p}, ambient dimension {2 * p} = qupit ({p}) x qubit (2)"]
        lines.append("index -> (qupit, qubit): " + ", ".join(
            f"{l['index']}->({l['qupit']},{l['qubit']})" for l in data["labels"]))
        for name, sign in (("V1", "-"), ("V2", "+")):
            lines.append(f"{name}: v_x = e_x {sign} i e_(p + (-x mod p)), x = 0..{p - 1}")
            for x in range(p):
                lines.append(f"  v_{x} = e_{x} {sign} i e_{p + (-x) % p}")
        text = "\n".join(lines)
    _emit(text, cfg.out)
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse has already printed usage
        return int(exc.code or 0)
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if cfg.command == "certify":
            return _run_certify(cfg)
        if cfg.command == "verify":
            return _run_verify(cfg)
        return _run_export(cfg)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
