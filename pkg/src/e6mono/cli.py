"""Command-line driver: ``e6mono --suite all --format json``."""

from __future__ import annotations

import argparse
import logging
import sys

from . import report
from .errors import E6MonoError


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e6mono", description="Run the exact verification suites.")
    p.add_argument("--suite", choices=report.SUITES + ("all",), default="all")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--out", help="write the report here instead of standard output")
    p.add_argument("--cache", metavar="DIR", help="directory for cached group enumerations")
    p.add_argument("--max-order", type=int, default=1_000_000, metavar="N",
                   help="cap on enumerated group orders (default 1000000)")
    p.add_argument("--dump-gram-lx", action="store_true",
                   help="print the 28x28 Gram matrix of H^2(X) in lattice text format and exit")
    p.add_argument("--lattice", metavar="FILE",
                   help="read a lattice in text format and print its invariants as JSON")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _lattice_info(path: str) -> str:
    import json

    from . import lattice as lat

    with open(path, encoding="utf-8") as fh:
        L = lat.parse_lattice(fh.read())
    info = {
        "rank": L.rank,
        "discriminant": lat.discriminant(L),
        "signature": list(lat.signature(L)),
        "even": lat.is_even(L),
        "discriminant_group": list(lat.discriminant_group(L).elementary_divisors),
    }
    return json.dumps(info, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.max_order < 1:
        print("e6mono: --max-order must be positive", file=sys.stderr)
        return 2
    try:
        if args.dump_gram_lx:
            from .exterior import gram_LX
            from .lattice import format_lattice

            _write(format_lattice(gram_LX()[1]), args.out)
            return 0
        if args.lattice:
            _write(_lattice_info(args.lattice), args.out)
            return 0
        opts = report.Options(cap=args.max_order, cache_dir=args.cache)
        records = report.run(args.suite, opts)
        text = report.to_json(records, args.suite) if args.format == "json" else \
            report.to_markdown(records, args.suite)
        _write(text, args.out)
    except (OSError, E6MonoError, ValueError) as exc:
        print(f"e6mono: {exc}", file=sys.stderr)
        return 2
    return report.exit_status(records)


if __name__ == "__main__":
    sys.exit(main())
