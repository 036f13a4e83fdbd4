"""Command-line front end and the JSON operator file format.

Operator files look like::

    {
      "name": "A",
      "field": "rational",
      "ambient": {"kind": "finite", "dim": 5},
      "entries": [[1, 1, "29"], [2, 2, "33"], [5, 4, "1"]]
    }

Entries are ``[row, col, scalar]`` with 1-based indices; omitted entries are
zero.  Gaussian scalars are written ``{"re": "p/q", "im": "r/s"}``.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .catalog import run_random_suite, verify_operator
from .finite_potent import COUNTABLE, FINITE, AmbientMismatch, FinitePotentOperator, ast_decomposition, cn_decomposition, rank_profile
from .gen_inverse import IndexTooLarge, InverseKind, inverse, is_ep
from .matrix import Matrix
from .orders import Relation, hasse, leq
from .probe import preimage_growth
from .scalars import FIELD_NAMES, FieldMismatch, format_scalar, parse_scalar

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

_FIELDS = {v: k for k, v in FIELD_NAMES.items()}


class InputError(Exception):
    """Bad operator file; ``str()`` is a ready-to-print diagnostic."""


# -- operator files ------------------------------------------------------------

def _line_col(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _entry_offsets(text: str) -> list:
    """Start offset of each element of the ``entries`` array."""
    m = re.search(r'"entries"\s*:\s*\[', text)
    if not m:
        return []
    decoder = json.JSONDecoder()
    ws = re.compile(r"[ \t\n\r]*")
    pos = ws.match(text, m.end()).end()
    out = []
    while pos < len(text) and text[pos] != "]":
        out.append(pos)
        try:
            _, pos = decoder.raw_decode(text, pos)
        except json.JSONDecodeError:
            break
        pos = ws.match(text, pos).end()
        if pos < len(text) and text[pos] == ",":
            pos = ws.match(text, pos + 1).end()
    return out


def _key_offset(text: str, key: str) -> int:
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return m.start() if m else 0


def parse_operator(text: str, source: str = "<string>"):
    """Parse operator-file text into ``(name, operator)``; raises :class:`InputError`."""

    def fail(msg, offset=0):
        line, col = _line_col(text, offset)
        raise InputError(f"{source}:{line}:{col}: {msg}")

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}:{e.lineno}:{e.colno}: invalid JSON: {e.msg}") from None
    if not isinstance(doc, dict):
        fail("top level must be an object")
    unknown = set(doc) - {"name", "field", "ambient", "entries"}
    if unknown:
        fail(f"unknown key {sorted(unknown)[0]!r}", _key_offset(text, sorted(unknown)[0]))

    field_name = doc.get("field")
    if field_name not in _FIELDS:
        fail(f"field must be 'rational' or 'gaussian', got {field_name!r}", _key_offset(text, "field"))
    fld = _FIELDS[field_name]

    amb = doc.get("ambient")
    at = _key_offset(text, "ambient")
    if not isinstance(amb, dict):
        fail("ambient must be an object", at)
    kind = amb.get("kind")
    size_key = {"finite": "dim", "countable": "support"}.get(kind)
    if size_key is None:
        fail(f"ambient kind must be 'finite' or 'countable', got {kind!r}", at)
    n = amb.get(size_key)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        fail(f"ambient {size_key} must be a positive integer", at)
    if set(amb) != {"kind", size_key}:
        fail(f"ambient of kind {kind!r} takes exactly 'kind' and {size_key!r}", at)

    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        fail("name must be a string", _key_offset(text, "name"))

    entries = doc.get("entries", [])
    if not isinstance(entries, list):
        fail("entries must be a list", _key_offset(text, "entries"))
    offsets = _entry_offsets(text)
    rows = [[0] * n for _ in range(n)]
    seen = set()
    for k, entry in enumerate(entries):
        at = offsets[k] if k < len(offsets) else _key_offset(text, "entries")
        if not isinstance(entry, list) or len(entry) != 3:
            fail("entry must be [row, col, scalar]", at)
        i, j, value = entry
        for idx in (i, j):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 1 <= idx <= n:
                fail(f"index {idx!r} outside 1..{n}", at)
        if (i, j) in seen:
            fail(f"duplicate entry ({i}, {j})", at)
        seen.add((i, j))
        try:
            rows[i - 1][j - 1] = parse_scalar(value, fld)
        except (ValueError, FieldMismatch) as e:
            fail(f"entry ({i}, {j}): {e}", at)
    ambient = FINITE if kind == "finite" else COUNTABLE
    return name, FinitePotentOperator(Matrix(rows, field=fld), ambient)


def load_operator(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: cannot read: {e.strerror}") from None
    name, op = parse_operator(text, path)
    return (name or Path(path).stem), op


def format_operator(op: FinitePotentOperator, name=None) -> str:
    """Operator-file text; :func:`parse_operator` reads it back to an equal operator."""
    size_key = "support" if op.countable else "dim"
    head = []
    if name is not None:
        head.append(f'  "name": {json.dumps(name, ensure_ascii=False)},')
    head.append(f'  "field": "{FIELD_NAMES[op.field]}",')
    head.append(f'  "ambient": {{"kind": "{op.ambient}", "{size_key}": {op.n}}},')
    entries = [
        json.dumps([i + 1, j + 1, format_scalar(x)])
        for i, row in enumerate(op.block.tolist())
        for j, x in enumerate(row)
        if x
    ]
    if entries:
        body = ['  "entries": [', ",\n".join("    " + e for e in entries), "  ]"]
    else:
        body = ['  "entries": []']
    return "\n".join(["{"] + head + body + ["}"]) + "\n"


# -- presentation --------------------------------------------------------------

def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _status(ok: bool, color: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if not color:
        return word
    return f"\x1b[{32 if ok else 31}m{word}\x1b[0m"


def _fmt_vector(v) -> str:
    nz = [k for k, x in enumerate(v) if x]
    if len(nz) == 1 and v[nz[0]] == 1:
        return f"e{nz[0] + 1}"
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_span(S, tail=False) -> str:
    """Span with a canonical (row-reduced) basis, so coordinate subspaces read as ``span{e1,e2}``."""
    vecs = []
    if S.dim:
        R, rank, _ = Matrix([list(v) for v in S], field=S.field).rref()
        vecs = [_fmt_vector(R.row(k)) for k in range(rank)]
    if tail:
        vecs.append("tail")
    return "span{" + ",".join(vecs) + "}"


def _fmt_block(op) -> list:
    return ["  " + line for line in str(op.block).splitlines()]


def _inspect_lines(name, op) -> list:
    ast = ast_decomposition(op)
    phi1, phi2 = cn_decomposition(op)
    amb = f"countable, support {op.n}" if op.countable else f"finite, dim {op.n}"
    out = [
        f"name: {name}",
        f"field: {FIELD_NAMES[op.field]}",
        f"ambient: {amb}",
        f"index: {ast.index}, EP: {str(is_ep(op)).lower()}, W = {_fmt_span(ast.W)}",
        f"U = {_fmt_span(ast.U_block, tail=ast.tail_in_U)}",
        "rank profile: " + ", ".join(str(r) for r in rank_profile(op, ast.index + 1)),
        "core part (phi1):",
        *_fmt_block(phi1),
        "nilpotent part (phi2):",
        *_fmt_block(phi2),
    ]
    return out


# -- subcommands ---------------------------------------------------------------

def _cmd_inspect(args, out, err):
    name, op = load_operator(args.file)
    out.write("\n".join(_inspect_lines(name, op)) + "\n")
    return EXIT_OK


def _cmd_inverse(args, out, err):
    name, op = load_operator(args.file)
    result = inverse(op, args.kind)
    out.write(format_operator(result, f"{args.kind}({name})"))
    return EXIT_OK


def _cmd_order(args, out, err):
    na, a = load_operator(args.file_a)
    nb, b = load_operator(args.file_b)
    report = leq(a, b, args.relation)
    out.write(f"{na} <= {nb}\n")
    out.write("\n".join(report.lines()) + "\n")
    return EXIT_OK


def _cmd_verify(args, out, err):
    color = _use_color(out)
    if (args.file is None) == (args.suite is None):
        raise InputError("verify takes either an operator file or --suite random")
    if args.file is not None:
        name, op = load_operator(args.file)
        out.write(f"operator: {name}\n")
        result = verify_operator(op)
    else:
        if args.count < 1 or args.dim < 2:
            raise InputError("--count must be >= 1 and --dim >= 2")
        fld = _FIELDS[args.field]
        out.write(f"seed: {args.seed}\ncount: {args.count}\ndim: {args.dim}\nfield: {args.field}\n")
        result = run_random_suite(args.seed, args.count, args.dim, fld)
    for line in result.lines():
        status, rest = line.split(" ", 1)
        out.write(f"{_status(status == 'PASS', color)} {rest}\n")
    failed = sum(1 for t in result.values() if not t.ok)
    out.write(f"{len(result) - failed}/{len(result)} identities passed\n")
    return EXIT_OK if result.ok else EXIT_FAILED


def _cmd_hasse(args, out, err):
    named = [load_operator(p) for p in args.files]
    names = [n for n, _ in named]
    dup = {n for n in names if names.count(n) > 1}
    if dup:
        raise InputError(f"duplicate operator name {sorted(dup)[0]!r}; set distinct \"name\" fields")
    dot = hasse(named, args.relation)
    if args.out:
        Path(args.out).write_text(dot, encoding="utf-8", newline="\n")
        out.write(f"wrote {args.out}\n")
    else:
        out.write(dot)
    return EXIT_OK


def _cmd_demo(args, out, err):
    if args.max_m < 2:
        raise InputError("--max-m must be at least 2")
    out.write(preimage_growth(args.max_m).to_csv())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finpotent", description="Generalized inverses and orders of finite potent operators.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("inspect", help="index, AST bases, CN parts, EP flag")
    s.add_argument("file")
    s.set_defaults(func=_cmd_inspect)

    s = sub.add_parser("inverse", help="print a generalized inverse as an operator file")
    s.add_argument("--kind", required=True, choices=[k.value for k in InverseKind])
    s.add_argument("file")
    s.set_defaults(func=_cmd_inverse)

    s = sub.add_parser("order", help="decide phi <= psi with per-condition witnesses")
    s.add_argument("--relation", required=True, choices=[r.value for r in Relation])
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=_cmd_order)

    s = sub.add_parser("verify", help="run the identity catalogue")
    s.add_argument("file", nargs="?")
    s.add_argument("--suite", choices=["random"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--dim", type=int, default=5)
    s.add_argument("--field", choices=sorted(_FIELDS), default="rational")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("hasse", help="DOT Hasse diagram of the covering relation")
    s.add_argument("--relation", required=True, choices=[r.value for r in Relation])
    s.add_argument("--out")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=_cmd_hasse)

    s = sub.add_parser("demo", help="run a demonstration")
    s.add_argument("name", choices=["nonclosed-image"])
    s.add_argument("--max-m", type=int, default=20)
    s.set_defaults(func=_cmd_demo)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out, err)
    except InputError as e:
        err.write(f"error: {e}\n")
    except (IndexTooLarge, AmbientMismatch, FieldMismatch) as e:
        err.write(f"error: {e}\n")
    except OSError as e:
        err.write(f"error: {e}\n")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
