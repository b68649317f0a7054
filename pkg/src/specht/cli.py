"""``specht`` command line.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 cache corruption.
With ``--json`` every command prints exactly one JSON document carrying a
``schema_version``; without it, plain text. Output is assembled after all
computation finishes, so nothing is interleaved.
"""

import argparse
import json
import logging
import os
import sys

from specht import __version__
from specht.classify import Status, certify, classify_all
from specht.errors import CacheCorruptionError, DomainError
from specht.fock import e_core, e_weight
from specht.llt import CACHE_ENV, BlockCache, decomposition_row
from specht.partitions import (
    broken_witness,
    conjugate,
    enumerate_unbroken_doubly_singular_cores,
    format_partition,
    hook_lengths,
    is_broken,
    is_doubly_singular,
    is_e_core,
    is_e_jm,
    is_e_regular,
    is_prime,
    last_repeat_row,
    parse_partition,
)
from specht.render import render_diagram

CLI_SCHEMA_VERSION = 1
# Without --extended, e=2 row sums are only computed up to this size.
STANDARD_ROW_SUM_LIMIT = 24

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CACHE = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=int, help="order of the root of unity (>= 2)")
    common.add_argument("--p", type=int, help="characteristic (prime)")
    common.add_argument("--max-i", type=int, dest="max_i", help="largest i tried at e = 2p^i")
    common.add_argument("--json", action="store_true", help="print one JSON document")
    common.add_argument("--cache-dir", dest="cache_dir", help=f"block cache directory (default ${CACHE_ENV})")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for blocks")
    common.add_argument("--extended", action="store_true", help="compute every e=2 row sum, however large")
    common.add_argument("--cheap-first", action="store_true", dest="cheap_first",
                        help="try the JM rules before the e=2 row sum")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in reports")
    return common


def build_parser():
    common = _common()
    parser = _Parser(prog="specht", description="Specht module reducibility at q = -1.")
    parser.add_argument("--version", action="version", version=f"specht {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hooks", parents=[common], help="draw a diagram with hook lengths or residues")
    p.add_argument("partition")
    p.add_argument("--residues", action="store_true", help="annotate residues mod --e instead of hooks")
    p.add_argument("--plain", action="store_true", help="no annotation")

    p = sub.add_parser("predicates", parents=[common], help="combinatorial predicates of a partition")
    p.add_argument("partition")

    p = sub.add_parser("decomp-row", parents=[common], help="row of the decomposition matrix at --e")
    p.add_argument("partition")

    sub.add_parser("enumerate", parents=[common], help="unbroken doubly-singular 2p-cores")

    p = sub.add_parser("certify", parents=[common], help="classify one partition in characteristic --p")
    p.add_argument("partition")

    sub.add_parser("classify", parents=[common], help="classify every candidate for --p")

    p = sub.add_parser("cache", parents=[common], help="administer the block cache")
    p.add_argument("action", choices=["verify", "clear"])
    return parser


def _need_e(args):
    if args.e is None:
        raise _Usage("--e is required")
    if args.e < 2:
        raise DomainError(f"--e must be >= 2, got {args.e}")
    return args.e


def _need_p(args):
    if args.p is None:
        raise _Usage("--p is required")
    if not is_prime(args.p):
        raise DomainError(f"--p must be prime, got {args.p}")
    return args.p


class _Usage(Exception):
    pass


def _cache(args):
    directory = args.cache_dir or os.environ.get(CACHE_ENV) or None
    return BlockCache(directory)


def _doc(command, **body):
    return {"schema": f"specht.cli.{command}", "schema_version": CLI_SCHEMA_VERSION, **body}


def cmd_hooks(args):
    la = parse_partition(args.partition)
    if args.residues:
        mode, e = "residues", _need_e(args)
    else:
        mode, e = ("none" if args.plain else "hooks"), args.e
    grid = render_diagram(la, mode, e)
    if args.json:
        hooks = hook_lengths(la)
        rows = [[hooks[i, j] for j in range(1, part + 1)] for i, part in enumerate(la, 1)]
        body = {"partition": format_partition(la), "hooks": rows}
        if mode == "residues":
            body["e"] = e
            body["residues"] = [[(j - i) % e for j in range(1, part + 1)] for i, part in enumerate(la, 1)]
        return _doc("hooks", **body)
    return grid


def cmd_predicates(args):
    la = parse_partition(args.partition)
    witness = broken_witness(la)
    out = {
        "partition": format_partition(la),
        "size": la.size,
        "conjugate": format_partition(conjugate(la)),
        "doubly_singular": is_doubly_singular(la),
        "broken": is_broken(la),
        "broken_witness": list(witness) if witness else None,
        "last_repeat_row": last_repeat_row(la),
    }
    if args.e is not None:
        e = _need_e(args)
        out.update({
            "e": e,
            "e_regular": is_e_regular(la, e),
            "e_core": is_e_core(la, e),
            "e_jm": is_e_jm(la, e),
            "core": format_partition(e_core(la, e)),
            "weight": e_weight(la, e),
        })
    if args.json:
        return _doc("predicates", **out)
    return "\n".join(f"{k}: {_text(v)}" for k, v in out.items())


def _text(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return ",".join(map(str, v))
    return str(v)


def cmd_decomp_row(args):
    la = parse_partition(args.partition)
    e = _need_e(args)
    row = decomposition_row(la, e, _cache(args))
    if args.json:
        entries = [
            {"mu": format_partition(mu), "poly": sorted([k, c] for k, c in d.terms())}
            for mu, d in row.entries.items()
        ]
        return _doc("decomp-row", partition=format_partition(la), e=e, entries=entries,
                    row_sum_at_one=row.row_sum_at_one())
    body = ", ".join(f"({format_partition(mu)}): {d}" for mu, d in row.entries.items())
    return "{" + body + "}" + f"\nrow sum at v=1: {row.row_sum_at_one()}"


def cmd_enumerate(args):
    p = _need_p(args)
    cands = enumerate_unbroken_doubly_singular_cores(p)
    if args.json:
        records = [{"partition": format_partition(la), "parts": list(la), "size": la.size} for la in cands]
        return _doc("enumerate", p=p, count=len(cands), records=records)
    lines = [format_partition(la) for la in cands]
    lines.append(f"{len(cands)} unbroken doubly-singular {2 * p}-cores")
    return "\n".join(lines)


def cmd_certify(args):
    p = _need_p(args)
    la = parse_partition(args.partition)
    verdict = certify(la, p, max_i=args.max_i, cache=_cache(args), cheap_first=args.cheap_first)
    if args.json:
        return _doc("certify", verdict=verdict.to_json_dict())
    lines = [f"{format_partition(la)} at p={p}: {verdict.status.value}"]
    for step in verdict.certificates:
        lines.append(f"  {step.label}: {step.justification}")
    for k, v in verdict.evidence.items():
        lines.append(f"  {k} = {_text(v)}")
    return "\n".join(lines)


def cmd_classify(args):
    p = _need_p(args)
    limit = None if args.extended else STANDARD_ROW_SUM_LIMIT
    if args.extended:
        logging.getLogger("specht").setLevel(logging.DEBUG)
    report = classify_all(p, max_i=args.max_i, cache=_cache(args), jobs=args.jobs,
                          cheap_first=args.cheap_first, row_sum_size_limit=limit)
    if args.extended:
        for b in report.blocks:
            logging.getLogger("specht").info(
                "block e=%d core=%s n=%d: %d partitions, %d columns, %.3fs",
                b["e"], b["core"], b["n"], b["partitions"], b["columns"], b["seconds"])
    doc = report.to_json_dict()
    if not args.timings:
        doc["header"]["seconds"] = None
        for b in doc["blocks"]:
            b["seconds"] = None
    if args.json:
        return doc
    s = doc["summary"]
    lines = [f"p={p}: {s['candidates']} candidate(s) (unbroken doubly-singular {2 * p}-cores)"]
    for v in report.verdicts:
        chain = " -> ".join(c.label for c in v.certificates)
        rs = v.evidence.get("row_sum_e2")
        lines.append(f"{format_partition(v.partition)}\t{v.status.value}\t{chain}\trow_sum={_text(rs)}")
    lines.append("counts: " + ", ".join(f"{k}={n}" for k, n in s["counts"].items()))
    if s["counts_by_rule"]:
        lines.append("by rule: " + ", ".join(f"{k}={n}" for k, n in s["counts_by_rule"].items()))
    lines.append(f"row sums computed: {s['row_sums_computed']}, equal to 1: {s['row_sum_one']}")
    if limit is not None and s["row_sums_computed"] < s["candidates"]:
        lines.append(f"(row sums limited to size <= {limit}; pass --extended for all)")
    if args.timings:
        lines.append(f"seconds: {report.seconds:.3f}")
    return "\n".join(lines)


def cmd_cache(args):
    cache = _cache(args)
    if cache.directory is None:
        raise _Usage(f"cache commands need --cache-dir or ${CACHE_ENV}")
    if args.action == "clear":
        removed = cache.clear()
        if args.json:
            return _doc("cache", action="clear", removed=removed)
        return f"removed {removed} block files from {cache.directory}"
    results = cache.verify_files()
    bad = [(path, err) for path, err in results if err]
    if args.json:
        out = _doc("cache", action="verify", checked=len(results),
                   violations=[{"file": path.name, "error": err} for path, err in bad])
    else:
        lines = [f"{path.name}: {'OK' if err is None else err}" for path, err in results]
        lines.append(f"{len(results)} files checked, {len(bad)} bad")
        out = "\n".join(lines)
    if bad:
        raise _CacheReport(out)
    return out


class _CacheReport(Exception):
    """Carries output for a failed verify so it is still printed."""

    def __init__(self, output):
        super().__init__("cache verification failed")
        self.output = output


COMMANDS = {
    "hooks": cmd_hooks,
    "predicates": cmd_predicates,
    "decomp-row": cmd_decomp_row,
    "enumerate": cmd_enumerate,
    "certify": cmd_certify,
    "classify": cmd_classify,
    "cache": cmd_cache,
}


def _emit(out, stream):
    if isinstance(out, dict):
        stream.write(json.dumps(out, indent=2, sort_keys=False) + "\n")
    elif out:
        stream.write(out + "\n")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if not logging.getLogger().handlers:
        logging.basicConfig(stream=stderr, level=logging.WARNING, format="%(message)s")
    try:
        out = COMMANDS[args.command](args)
    except _Usage as exc:
        parser.print_usage(stderr)
        stderr.write(f"specht: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        stderr.write(f"specht: {exc}\n")
        return EXIT_DOMAIN
    except _CacheReport as exc:
        _emit(exc.output, stdout)
        return EXIT_CACHE
    except CacheCorruptionError as exc:
        key = f" (block {exc.key})" if getattr(exc, "key", None) else ""
        stderr.write(f"specht: cache corruption{key}: {exc}\n")
        return EXIT_CACHE
    _emit(out, stdout)
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
