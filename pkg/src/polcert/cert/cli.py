"""``polcert`` command line.

Exit status: 0 when no claim is falsified (inconclusive is allowed),
1 when some claim is falsified, 2 for usage, parse or validation errors,
3 with ``--strict`` when nothing is falsified but something is inconclusive,
4 when nothing is falsified but a node, time, memory or size limit left a claim
undecided (reported regardless of ``--strict``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..polymap import GroupFormatError, GroupValidationError, load_group
from .certificate import render_markdown, validate
from .config import MUTATIONS, ConfigError, load_config, thread_count
from .registry import VERIFY_TARGETS

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_RESOURCE = 0, 1, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polcert", description="Exact certificates for cubic maps from C3.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--config", help="JSON run configuration")
        sp.add_argument("--out", help="write the certificate here instead of stdout")
        sp.add_argument("--strict", action="store_true", help="exit 3 if any claim is inconclusive")

    v = sub.add_parser("verify", help="run the built-in claims for a target")
    v.add_argument("target", choices=VERIFY_TARGETS + ("all",))
    v.add_argument("--corrupt", action="append", choices=MUTATIONS, default=None,
                   help="negative control: mutate an input (repeatable)")
    common(v)

    c = sub.add_parser("classify", help="unital polynomial maps into a group given by file")
    c.add_argument("--group", required=True)
    c.add_argument("--degree", required=True, type=int)
    c.add_argument("--domain", choices=("c2", "c3"), default="c3")
    common(c)

    s = sub.add_parser("search", help="bounded word search for an elementary matrix")
    s.add_argument("--char", type=int, choices=(0, 3), default=3)
    s.add_argument("--target", required=True, help="identity, E13:u^2 (char 3) or E13:3 (char 0)")
    s.add_argument("--max-len", type=int)
    s.add_argument("--max-degree", type=int)
    s.add_argument("--budget-ms", type=float)
    s.add_argument("--max-nodes", type=int)
    s.add_argument("--no-mitm", action="store_true", help="plain breadth-first search")
    s.add_argument("--check-word", help="verify this word in a, b instead of searching")
    common(s)

    r = sub.add_parser("report", help="validate and render a certificate file")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--format", choices=("json", "markdown"), default="markdown")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _status(cert, strict: bool) -> int:
    if cert.falsified:
        return EXIT_FALSIFIED
    if cert.resource_limited:
        return EXIT_RESOURCE
    if strict and cert.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    from . import run

    args = _parser().parse_args(argv)
    try:
        if args.cmd == "report":
            doc = json.loads(Path(args.infile).read_text(encoding="utf-8"))
            validate(doc)
            _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n" if args.format == "json" else render_markdown(doc), None)
            claims = doc["body"]["claims"]
            if doc["body"]["summary"]["falsified"]:
                return EXIT_FALSIFIED
            if any(c["verdict"] == "inconclusive" and c["witness"].get("resource_limit") for c in claims):
                return EXIT_RESOURCE
            return EXIT_OK

        overrides = {}
        if args.cmd == "verify" and args.corrupt:
            overrides["corrupt"] = args.corrupt
        if args.cmd == "search":
            overrides.update(search_max_len=args.max_len, search_max_degree=args.max_degree,
                             search_budget_ms=args.budget_ms, search_max_nodes=args.max_nodes)
            if args.no_mitm:
                overrides["search_meet_in_middle"] = False
        config = load_config(args.config, **overrides)
        threads = thread_count()

        if args.cmd == "verify":
            cert = run.verify(args.target, config, threads)
        elif args.cmd == "classify":
            cert = run.classify(load_group(args.group), args.degree, args.domain, config)
        else:
            cert = run.search(args.char, args.target, config, args.check_word)
    except (ConfigError, GroupFormatError, GroupValidationError, json.JSONDecodeError, OSError, ValueError) as exc:
        print(f"polcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _emit(cert.to_json(), args.out or config.output)
    s = cert.summary()
    print("polcert: " + ", ".join(f"{k} {v}" for k, v in s.items()), file=sys.stderr)
    return _status(cert, args.strict)


if __name__ == "__main__":
    sys.exit(main())
