"""JSON-in, JSON-out command line for channel system analysis.

Input documents look like {"q": 4, "channels": [[1,2],[2,3]], "label": "x"};
results echo the input and add the requested analysis.  Exit codes: 0 on
success (exact or bounds alike), 2 on malformed input, 3 on an enumeration
budget refusal, 4 on inconsistent reconstruction views.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import ROUND_HALF_EVEN, Decimal

from .bounds import bounds
from .capacity import CapacityResult, capacity
from .channels import ChannelSystem
from .oracle import (
    DEFAULT_BUDGET, BudgetExceededError, ReconstructionError, count_outputs,
    empirical_rate_sweep, reconstruct_view, verify_pairs_equality,
)
from .systems import (
    Cycle, FullClique, General, Path, Reducible, Separable, SingleChannel,
    Sunflower, SystemClass, TwoSets, classify,
)

ENV_BUDGET = "COLORCAP_BUDGET"


class SchemaError(ValueError):
    """The input document does not match the expected shape."""


# ---------------------------------------------------------------------------
# document parsing and serialization


def parse_system_document(obj) -> tuple[ChannelSystem, dict]:
    """Validate a {"q", "channels", "label"?} document; errors name the spot."""
    if not isinstance(obj, dict):
        raise SchemaError("top-level document must be a JSON object")
    unknown = sorted(set(obj) - {"q", "channels", "label"})
    if unknown:
        raise SchemaError(f"unknown field {unknown[0]!r}")
    if "q" not in obj:
        raise SchemaError('missing field "q"')
    q = obj["q"]
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise SchemaError(f'"q" must be an integer >= 2, got {q!r}')
    if "channels" not in obj:
        raise SchemaError('missing field "channels"')
    channels = obj["channels"]
    if not isinstance(channels, list) or not channels:
        raise SchemaError('"channels" must be a non-empty list')
    for i, ch in enumerate(channels):
        if not isinstance(ch, list) or not ch:
            raise SchemaError(f"channels[{i}] must be a non-empty list")
        seen = set()
        for j, a in enumerate(ch):
            if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= q:
                raise SchemaError(f"channels[{i}][{j}]: letter {a!r} outside 1..{q}")
            if a in seen:
                raise SchemaError(f"channels[{i}]: duplicate letter {a}")
            seen.add(a)
    echo = {"q": q, "channels": channels}
    if "label" in obj:
        if not isinstance(obj["label"], str):
            raise SchemaError(f'"label" must be a string, got {obj["label"]!r}')
        echo["label"] = obj["label"]
    return ChannelSystem(q, channels), echo


def read_json(path: str):
    try:
        raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc


def write_json(doc: dict, path: str) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def system_dict(system: ChannelSystem) -> dict:
    return {"q": system.q, "channels": [sorted(c) for c in system.channels]}


def class_dict(cls: SystemClass) -> dict:
    if isinstance(cls, SingleChannel):
        return {"type": "single_channel", "size": cls.size}
    if isinstance(cls, FullClique):
        return {"type": "full_clique"}
    if isinstance(cls, Sunflower):
        return {"type": "sunflower", "k": cls.k, "p": cls.p, "t": cls.t}
    if isinstance(cls, TwoSets):
        out = {"type": "two_sets", "k": cls.k, "p1": cls.p1, "p2": cls.p2}
        eq = cls.sunflower_equivalent
        if eq is not None:
            out["sunflower_equivalent"] = {"k": eq.k, "p": eq.p, "t": eq.t}
        return out
    if isinstance(cls, Path):
        return {"type": "path", "t": cls.t}
    if isinstance(cls, Cycle):
        return {"type": "cycle", "t": cls.t}
    if isinstance(cls, Separable):
        return {"type": "separable",
                "components": [system_dict(c) for c in cls.components]}
    if isinstance(cls, Reducible):
        return {"type": "reducible", "reduced": system_dict(cls.reduced)}
    if isinstance(cls, General):
        return {"type": "general"}
    raise AssertionError(f"unhandled class {cls!r}")


def format_sig(value: float, digits: int = 5) -> str:
    """Round to the given significant digits (half-even), keeping zeros."""
    d = Decimal(value)
    if d == d.to_integral_value():
        return str(int(d))
    exponent = Decimal(1).scaleb(d.adjusted() - digits + 1)
    rounded = d.quantize(exponent, rounding=ROUND_HALF_EVEN)
    if rounded.adjusted() != d.adjusted():  # rounding crossed a decade
        rounded = d.quantize(exponent.scaleb(1), rounding=ROUND_HALF_EVEN)
    return str(rounded)


def capacity_dict(result: CapacityResult) -> dict:
    out = result.as_dict()
    if result.kind == "exact":
        out["display"] = format_sig(result.value)
    else:
        out["display"] = f"[{format_sig(result.lower)}, {format_sig(result.upper)}]"
    return out


# ---------------------------------------------------------------------------
# commands

# catalog systems: every irreducible structure on a full q=3 or q=4 alphabet,
# one representative per pairs graph, in fixed row order
TABLE_SYSTEMS = {
    "q3": [
        (3, [[1, 2, 3]]),
        (3, [[1, 3], [2, 3]]),
    ],
    "q4": [
        (4, [[1, 2, 3, 4]]),
        (4, [[1, 2, 3], [1, 3, 4]]),
        (4, [[1, 2], [2, 3], [3, 4], [4, 1]]),
        (4, [[1, 2], [1, 3, 4]]),
        (4, [[1, 2], [1, 3], [1, 4]]),
        (4, [[1, 2], [2, 3], [3, 4]]),
    ],
}


def _load_system(args) -> tuple[ChannelSystem, dict]:
    return parse_system_document(read_json(args.input))


def _resolve_budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(ENV_BUDGET)
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise SchemaError(f"{ENV_BUDGET} must be an integer, got {env!r}") from None


def cmd_classify(args) -> dict:
    system, echo = _load_system(args)
    return {"input": echo, "class": class_dict(classify(system))}


def cmd_capacity(args) -> dict:
    system, echo = _load_system(args)
    return {"input": echo, "class": class_dict(classify(system)),
            "capacity": capacity_dict(capacity(system))}


def cmd_bounds(args) -> dict:
    system, echo = _load_system(args)
    return {"input": echo, "class": class_dict(classify(system)),
            "capacity": capacity_dict(bounds(system))}


def cmd_enumerate(args) -> dict:
    system, echo = _load_system(args)
    budget = _resolve_budget(args)
    doc = {"input": echo, "class": class_dict(classify(system))}
    if args.sweep:
        sweep = empirical_rate_sweep(system, args.n, budget=budget,
                                     workers=args.workers)
        reports = sweep.reports
        if sweep.truncated:
            doc["truncated"] = True
    else:
        reports = [count_outputs(system, args.n, budget=budget,
                                 workers=args.workers)]
    doc["enumeration"] = [
        {"n": r.n, "count": str(r.count), "rate": r.rate, "elapsed": r.elapsed}
        for r in reports
    ]
    if args.verify_pairs:
        try:
            doc["pairs_equal"] = verify_pairs_equality(
                system, args.n, budget=budget, workers=args.workers)
        except ValueError as exc:
            raise SchemaError(f"--verify-pairs: {exc}") from exc
    return doc


def cmd_reconstruct(args) -> dict:
    system, echo = _load_system(args)
    if not 1 <= args.channel <= system.t:
        raise SchemaError(f"--channel {args.channel} out of range 1..{system.t}")
    channel = system.channels[args.channel - 1]
    views_doc = read_json(args.views)
    if not isinstance(views_doc, dict) or "views" not in views_doc:
        raise SchemaError('views document must be an object with a "views" list')
    entries = views_doc["views"]
    if not isinstance(entries, list):
        raise SchemaError('"views" must be a list')
    pair_views = {}
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "pair" not in entry or "word" not in entry:
            raise SchemaError(f'views[{i}] must be an object with "pair" and "word"')
        pair = entry["pair"]
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(a, int) and not isinstance(a, bool)
                           and 1 <= a <= system.q for a in pair)
                or pair[0] == pair[1]):
            raise SchemaError(f"views[{i}].pair must be two distinct letters "
                              f"in 1..{system.q}")
        word = entry["word"]
        if not isinstance(word, list) or not all(
                isinstance(a, int) and not isinstance(a, bool) for a in word):
            raise SchemaError(f"views[{i}].word must be a list of integers")
        pair_views[frozenset(pair)] = tuple(word)
    word = reconstruct_view(pair_views, channel)
    return {"input": echo, "channel": args.channel,
            "letters": sorted(channel), "word": list(word)}


def cmd_table(args) -> dict:
    rows = []
    for q, channels in TABLE_SYSTEMS[args.which]:
        system = ChannelSystem(q, channels)
        result = capacity(system)
        rows.append({"system": system_dict(system),
                     "class": class_dict(classify(system)),
                     "capacity": capacity_dict(result)})
    return {"table": args.which, "rows": rows}


COMMANDS = {
    "classify": cmd_classify,
    "capacity": cmd_capacity,
    "bounds": cmd_bounds,
    "enumerate": cmd_enumerate,
    "reconstruct": cmd_reconstruct,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorcap",
        description="capacities, bounds, and exhaustive checks for systems "
                    "of coloring channels")
    io_parent = argparse.ArgumentParser(add_help=False)
    io_parent.add_argument("--input", default="-", metavar="FILE",
                           help="system document (JSON); '-' reads stdin")
    io_parent.add_argument("--output", default="-", metavar="FILE",
                           help="result document (JSON); '-' writes stdout")
    io_parent.add_argument("--workers", type=int, default=1, metavar="N",
                           help="enumeration worker processes (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[io_parent],
                   help="structural class of the system")
    sub.add_parser("capacity", parents=[io_parent],
                   help="capacity, exact where a formula applies")
    sub.add_parser("bounds", parents=[io_parent],
                   help="clique sandwich, ignoring exact formulas")
    enum = sub.add_parser("enumerate", parents=[io_parent],
                          help="exhaustive output counting")
    enum.add_argument("--n", type=int, required=True, metavar="N",
                      help="block length")
    enum.add_argument("--sweep", action="store_true",
                      help="report every length 1..N")
    enum.add_argument("--verify-pairs", action="store_true", dest="verify_pairs",
                      help="also compare against the pairs-graph edge system")
    enum.add_argument("--budget", type=int, default=None, metavar="STATES",
                      help=f"max q^n states to enumerate (default "
                           f"{DEFAULT_BUDGET}; overrides ${ENV_BUDGET})")
    rec = sub.add_parser("reconstruct", parents=[io_parent],
                         help="rebuild one channel's view from pairwise views")
    rec.add_argument("--channel", type=int, required=True, metavar="IDX",
                     help="1-based channel index")
    rec.add_argument("--views", required=True, metavar="FILE",
                     help='JSON file: {"views": [{"pair": [a,b], "word": [...]}]}')
    tab = sub.add_parser("table", parents=[io_parent],
                         help="built-in capacity catalog (input is ignored)")
    tab.add_argument("--which", required=True, choices=sorted(TABLE_SYSTEMS),
                     help="catalog to print")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ReconstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    write_json(doc, args.output)
    return 0
