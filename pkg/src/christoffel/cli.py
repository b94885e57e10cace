"""Command-line interface: ``christoffel <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (reported as one line on
stderr, with nothing on stdout) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from typing import Callable

from .errors import ChristoffelError
from .group import (
    GroupElementF2,
    cayley_table,
    dense_product,
    element_name,
    embed_structure,
    enumerate_gc,
    f2_elements,
    find_representation,
    group_structure,
    predicted_structure,
    structure_generators,
    verify_neven,
)
from .lexarray import (
    ChristoffelMatrix,
    constant_shift,
    dense_identity,
    dense_mul,
    det_closed,
    det_exact,
    det_sign,
    inverse,
    lex_array,
    mul_closed,
)
from .ring import F2, Ring, prime_field
from .words import (
    christoffel_word,
    dual,
    is_christoffel,
    is_cyclically_balanced,
    is_lyndon,
    word_mul,
)


class UsageError(Exception):
    """Malformed argument detected after argparse (exit code 2)."""


class Report:
    """One command result, renderable as plain text, JSON or CSV."""

    def __init__(self, data, plain: str, rows: list[list] | None = None):
        self.data = data
        self.plain = plain
        self.rows = rows

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2) + "\n"
        if fmt == "csv":
            rows = self.rows
            if rows is None:
                # one header row of keys, one row of values
                rows = [list(self.data), [_csv_cell(v) for v in self.data.values()]]
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(rows)
            return buf.getvalue()
        return self.plain + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return _flag(v)
    if v is None:
        return ""
    if isinstance(v, list) and all(isinstance(x, (int, str)) for x in v):
        return " ".join(map(str, v))
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _ring(text: str) -> Ring:
    try:
        return Ring.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _value(ring: Ring, text: str):
    try:
        return ring.parse_value(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _letter(text: str) -> str:
    if len(text) != 1:
        raise UsageError(f"letters must be single characters, got {text!r}")
    return text


def _kv(pairs) -> str:
    return "\n".join(f"{k}: {v}" for k, v in pairs)


def _flag(x: bool) -> str:
    return "true" if x else "false"


# -- handlers -----------------------------------------------------------------------

def cmd_word(args) -> Report:
    a, b = _letter(args.a), _letter(args.b)
    w = christoffel_word(args.n, args.m, a, b)
    return Report({"n": w.n, "m": w.m, "a": a, "b": b, "word": str(w)}, str(w))


def cmd_array(args) -> Report:
    if args.ring is None:
        letters = (_letter(args.a), _letter(args.b))
        dense = lex_array(christoffel_word(args.n, args.m, *letters).letters)
        fmt = str
    else:
        ring = args.ring
        dense = ChristoffelMatrix(ring, args.n, args.m, _value(ring, args.a),
                                  _value(ring, args.b)).to_dense()
        fmt = ring.format_value
    rows = [[fmt(x) for x in r] for r in dense.rows]
    return Report(dense.to_json(), dense.format(), rows)


def cmd_check(args) -> Report:
    w = args.w
    found = is_christoffel(w)
    letters = sorted(set(w), key=w.index)
    primitive = len({w[k:] + w[:k] for k in range(len(w))}) == len(w)
    shift = constant_shift(w) if primitive and len(letters) == 2 else None
    data = {
        "word": w,
        "length": len(w),
        "christoffel": found is not None,
        "type": found[0] if found else None,
        "letters": letters,
        "shift": shift,
        "lyndon": len(letters) <= 2 and is_lyndon(w, order=letters),
        "balanced": len(letters) <= 2 and is_cyclically_balanced(w),
        "primitive": primitive,
    }
    plain = _kv((k, _flag(v) if isinstance(v, bool) else
                 ("-" if v is None else (" ".join(v) if isinstance(v, list) else v)))
                for k, v in data.items())
    return Report(data, plain)


def cmd_mul(args) -> Report:
    product = word_mul(args.w1, args.w2)
    return Report({"w1": args.w1, "w2": args.w2, "product": str(product), "type": product.m},
                  str(product))


def _matrix(args, m, a, b) -> ChristoffelMatrix:
    ring = args.ring or F2
    return ChristoffelMatrix(ring, args.n, m, _value(ring, a), _value(ring, b))


def cmd_mul_matrix(args) -> Report:
    x = _matrix(args, args.m1, args.a1, args.b1)
    y = _matrix(args, args.m2, args.a2, args.b2)
    z = mul_closed(x, y)
    verified = dense_mul(x.to_dense(), y.to_dense()) == z.to_dense()
    return Report({"product": z.to_json(), "verified": verified},
                  _kv([("product", z), ("verified", _flag(verified))]))


def cmd_inv(args) -> Report:
    x = _matrix(args, args.m, args.a, args.b)
    y = inverse(x)
    verified = dense_mul(x.to_dense(), y.to_dense()) == dense_identity(x.ring, x.n)
    return Report({"inverse": y.to_json(), "verified": verified},
                  _kv([("inverse", y), ("verified", _flag(verified))]))


def cmd_det(args) -> Report:
    x = _matrix(args, args.m, args.a, args.b)
    ring = x.ring
    closed, exact = det_closed(x), det_exact(x.to_dense())
    data = {"ring": str(ring), "n": x.n, "m": x.m, "sign": det_sign(x.n, x.m),
            "closed": ring.to_json_value(closed), "exact": ring.to_json_value(exact),
            "agree": closed == exact}
    plain = _kv([("closed", ring.format_value(closed)), ("exact", ring.format_value(exact)),
                 ("sign", data["sign"]), ("agree", _flag(data["agree"]))])
    return Report(data, plain)


def cmd_dual(args) -> Report:
    d = dual(args.w)
    found = is_christoffel(args.w)
    return Report({"word": args.w, "type": found[0], "dual": str(d), "dual_type": d.m}, str(d))


def _group(args):
    p = args.p
    if p == 2:
        return f2_elements(args.n), None
    try:
        field = prime_field(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return enumerate_gc(args.n, field.modulus), dense_product


def _gen_json(g) -> dict:
    if isinstance(g, GroupElementF2):
        return {"tag": g.tag, "m": g.m}
    return {"m": g.m, "a": g.a, "b": g.b}


def cmd_group(args) -> Report:
    elements, mul = _group(args)
    structure = group_structure(elements, mul)
    verified = True
    if args.p == 2:
        gens = structure_generators(elements)
        verified = structure == predicted_structure(args.n)
    else:
        gens = _generators_dense(elements, structure)
    data = {"n": args.n, "p": args.p, "order": structure.order,
            "invariant_factors": list(structure.invariant_factors),
            "generators": [_gen_json(g) for g in gens],
            "elements": [element_name(g) for g in elements],
            "verified": verified}
    plain = _kv([("n", args.n), ("p", args.p), ("order", structure.order),
                 ("invariant_factors", " ".join(map(str, structure.invariant_factors)) or "-"),
                 ("generators", " ".join(element_name(g) for g in gens) or "-"),
                 ("elements", " ".join(data["elements"])),
                 ("verified", _flag(verified))])
    return Report(data, plain)


def _generators_dense(elements, structure):
    unit = ChristoffelMatrix(elements[0].ring, elements[0].n, 1, 1, 0)
    found = embed_structure(tuple(reversed(structure.invariant_factors)), elements,
                            mul=dense_product, unit=unit)
    return tuple(found[0]) if found else ()


def cmd_table(args) -> Report:
    elements, mul = _group(args)
    table = cayley_table(elements, mul)
    names = [element_name(g) for g in elements]
    rows = [[""] + names] + [[names[i]] + [names[k] for k in row] for i, row in enumerate(table)]
    width = max(len(s) for s in names)
    plain = "\n".join(" ".join(s.rjust(width) for s in r) for r in rows)
    data = {"n": args.n, "p": args.p, "elements": names,
            "table": [[names[k] for k in row] for row in table]}
    return Report(data, plain, rows)


def cmd_verify_neven(args) -> Report:
    results = []
    for n in range(2, args.nmax + 1):
        predicted = predicted_structure(n)
        results.append({"n": n, "invariant_factors": list(predicted.invariant_factors),
                        "verified": verify_neven(n)})
    passed = all(r["verified"] for r in results)
    lines = [f"n={r['n']} [{','.join(map(str, r['invariant_factors']))}] "
             f"{'ok' if r['verified'] else 'FAIL'}" for r in results]
    lines.append(f"{sum(r['verified'] for r in results)}/{len(results)} passed")
    report = Report({"nmax": args.nmax, "results": results, "all_passed": passed},
                    "\n".join(lines),
                    [["n", "invariant_factors", "verified"]] +
                    [[r["n"], " ".join(map(str, r["invariant_factors"])), _flag(r["verified"])]
                     for r in results])
    report.failed = not passed
    return report


def _target(text: str) -> list[int]:
    try:
        factors = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad factor list {text!r}") from None
    if any(d < 1 for d in factors):
        raise argparse.ArgumentTypeError("cyclic orders must be positive")
    return factors


def cmd_represent(args) -> Report:
    rep = find_representation(args.target, args.nmax)
    data = {"target": args.target, "n": rep.n, "p": 2, "order": rep.structure.order,
            "invariant_factors": list(rep.structure.invariant_factors),
            "generators": [_gen_json(g) for g in rep.generators],
            "elements": [g.name for g in sorted(rep.elements)],
            "verified": True}
    plain = _kv([("n", rep.n),
                 ("invariant_factors", " ".join(map(str, rep.structure.invariant_factors)) or "-"),
                 ("generators", " ".join(g.name for g in rep.generators) or "-"),
                 ("elements", " ".join(data["elements"]))])
    return Report(data, plain)


# -- parser ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    with_ring = argparse.ArgumentParser(add_help=False)
    with_ring.add_argument("--ring", type=_ring, default=None,
                           help="int | rat | mod:N | fp:p (default fp:2)")
    with_p = argparse.ArgumentParser(add_help=False)
    with_p.add_argument("--p", type=_positive, default=2, help="prime field size (default 2)")

    parser = argparse.ArgumentParser(prog="christoffel",
                                     description="Christoffel words and their lexicographic arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, parents, help_: str):
        p = sub.add_parser(name, parents=[common, *parents], help=help_)
        p.set_defaults(handler=handler)
        return p

    p = add("word", cmd_word, [], "Christoffel word c_m(a,b)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("a", nargs="?", default="1")
    p.add_argument("b", nargs="?", default="0")

    p = add("array", cmd_array, [with_ring], "lexicographic array C_m(a,b)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("a", nargs="?", default="1")
    p.add_argument("b", nargs="?", default="0")

    p = add("check", cmd_check, [], "recognition report for a word")
    p.add_argument("w")

    p = add("mul", cmd_mul, [], "product of two binary Christoffel words")
    p.add_argument("w1")
    p.add_argument("w2")

    p = add("mul-matrix", cmd_mul_matrix, [with_ring], "closed-form matrix product")
    for name, kind in (("n", int), ("m1", int), ("a1", str), ("b1", str),
                       ("m2", int), ("a2", str), ("b2", str)):
        p.add_argument(name, type=kind)

    for name, handler, help_ in (("inv", cmd_inv, "closed-form inverse"),
                                 ("det", cmd_det, "closed-form and exact determinant")):
        p = add(name, handler, [with_ring], help_)
        p.add_argument("n", type=int)
        p.add_argument("m", type=int)
        p.add_argument("a")
        p.add_argument("b")

    p = add("dual", cmd_dual, [], "dual of a binary Christoffel word")
    p.add_argument("w")

    p = add("group", cmd_group, [with_p], "structure of GC_n(F_p)")
    p.add_argument("n", type=int)

    p = add("table", cmd_table, [with_p], "Cayley table of GC_n(F_p)")
    p.add_argument("n", type=int)

    p = add("verify-neven", cmd_verify_neven, [], "check the F_2 predicted structure for 2..N")
    p.add_argument("--nmax", type=_positive, required=True)

    p = add("represent", cmd_represent, [], "faithful representation search over F_2")
    p.add_argument("target", type=_target, help="comma-separated cyclic orders, e.g. 2,4")
    p.add_argument("--nmax", type=_positive, default=100)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.handler(args)
        text = report.render(args.format)
    except ChristoffelError as exc:
        print(f"christoffel {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"christoffel {args.command}: error: {exc}", file=stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 1 if getattr(report, "failed", False) else 0


def main() -> None:
    sys.exit(run())
