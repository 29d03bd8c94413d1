"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 parse error, 3 when
``singular ftcheck`` finds a non-vanishing invariant.  Output is text unless
``--json`` is given or ``CURVESCI_OUTPUT=json`` is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .cyclic import enumerate_classes
from .corpus import load_corpus, load_singular_curve
from .sci import Functional, relation_audit, sci
from .singular import SingularCurve, expanded_invariant, resolve
from .surface import arnold_check, plane_curve, rotation_number, surface_data
from .words import (
    SignedWord,
    WordParseError,
    WordValidationError,
    are_isomorphic,
    canonical_form,
    enumerate_words,
    format_word,
    pairing,
    parse_word,
    subwords_of_size,
)

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_NONZERO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, ensure_ascii=False, sort_keys=False))
    else:
        print(text)


def _functional_text(F: Functional) -> str:
    if F.is_zero():
        return f"order {F.order}: 0"
    lines = [f"order {F.order}:"]
    lines += [f"  {format_word(k)}\t{v}" for k, v in F.sorted_items()]
    return "\n".join(lines)


# --- word ---------------------------------------------------------------------


def cmd_word(args) -> int:
    sub = args.word_cmd
    if sub == "canon":
        w = canonical_form(parse_word(args.word))
        _emit(args, format_word(w), {"canonical": format_word(w)})
    elif sub == "iso":
        r = are_isomorphic(parse_word(args.u), parse_word(args.w))
        _emit(args, str(r).lower(), {"isomorphic": r})
    elif sub == "pair":
        r = pairing(parse_word(args.u), parse_word(args.w))
        _emit(args, str(r), {"pairing": r})
    elif sub == "subwords":
        subs = [format_word(s) for s in subwords_of_size(parse_word(args.word), args.k)]
        _emit(args, "\n".join(subs), {"k": args.k, "subwords": subs})
    elif sub == "enum":
        words = [format_word(w) for w in enumerate_words(args.n)]
        _emit(args, "\n".join(words), {"n": args.n, "count": len(words), "words": words})
    elif sub == "classes":
        classes = [c.to_json() for c in enumerate_classes(args.n)]
        _emit(
            args,
            "\n".join(" ".join(c) for c in classes),
            {"n": args.n, "dimension": len(classes), "classes": classes},
        )
    return EXIT_OK


# --- sci ----------------------------------------------------------------------


def _corpus_words(path):
    out = []
    for label, rec in load_corpus(path):
        if isinstance(rec, SingularCurve):
            raise WordValidationError(f"corpus entry {label} is a singular curve, not a word")
        out.append((label, rec))
    return out


def cmd_sci(args) -> int:
    if args.sci_cmd == "compute":
        F = sci(args.n, parse_word(args.word))
        _emit(args, _functional_text(F), F.to_json())
        return EXIT_OK
    corpus = _corpus_words(args.corpus)
    for label, w in corpus:
        if not args.l <= args.k <= w.n:
            raise WordValidationError(
                f"corpus entry {label} has {w.n} letters; need l <= k <= n"
            )
    rows = relation_audit(args.l, args.k, corpus, workers=args.parallel)
    data = [r.to_json() for r in rows]
    lines = []
    for r in rows:
        lam = "none" if r.measured_lambda is None else str(r.measured_lambda)
        printed = "undefined" if r.closed_form is None else str(r.closed_form)
        lines.append(
            f"{r.label}\t{r.word}\tl={r.l} k={r.k} n={r.n}\tlambda={lam}"
            f"\tdouble-count={r.oracle_coefficient}\tprinted={printed}"
            f"\t{'proportional' if r.proportional else 'NOT proportional'}"
        )
        if not r.matches_printed:
            lines[-1] += "\tprinted coefficient disagrees"
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if all(r.proportional for r in rows) else EXIT_INVALID


# --- singular -----------------------------------------------------------------


def _parse_sigma(text: str, m: int) -> tuple[int, ...]:
    text = text.replace(",", "").replace(" ", "")
    if any(ch not in "+-" for ch in text):
        raise WordParseError(f"resolution vector {text!r} must consist of + and -")
    if len(text) != m:
        raise WordValidationError(f"resolution vector has {len(text)} signs for {m} points")
    return tuple(1 if ch == "+" else -1 for ch in text)


def cmd_singular(args) -> int:
    curve = load_singular_curve(args.file)
    if args.sing_cmd == "resolve":
        w = resolve(curve, _parse_sigma(args.sigma, curve.m))
        _emit(args, format_word(w), {"sigma": args.sigma, "word": format_word(w)})
        return EXIT_OK
    F = expanded_invariant(args.n, curve, workers=args.parallel)
    if args.sing_cmd == "expand":
        _emit(args, _functional_text(F), F.to_json())
        return EXIT_OK
    zero = F.is_zero()
    text = f"vanishes at order {args.n} on {curve.m} singular points" if zero else _functional_text(F)
    _emit(args, text, {"vanishes": zero, "points": curve.m, "functional": F.to_json()})
    return EXIT_OK if zero else EXIT_NONZERO


# --- surface / arnold -------------------------------------------------------------


def cmd_surface(args) -> int:
    w = parse_word(args.word)
    if args.surf_cmd == "genus":
        g = surface_data(w).genus
        _emit(args, str(g), {"genus": g})
    elif args.surf_cmd == "faces":
        d = surface_data(w)
        text = "\n".join(
            f"face {i}: " + " ".join(f"{e}{s}" for e, s in face)
            for i, face in enumerate(d.face_list)
        )
        header = f"V={d.vertices} E={d.edges} F={d.faces} chi={d.euler} genus={d.genus}"
        _emit(args, header + "\n" + text, d.to_json())
    elif args.surf_cmd == "rot":
        try:
            r = rotation_number(w, args.outer)
        except KeyError as exc:
            raise WordValidationError(str(exc.args[0])) from exc
        _emit(args, str(r), {"rotation": r, "outer": args.outer})
    return EXIT_OK


def cmd_arnold(args) -> int:
    w = parse_word(args.word)
    if args.rot is None and args.outer is None:
        raise WordValidationError("give --rot or --outer")
    p = plane_curve(w, outer=args.outer, rotation=args.rot)
    r9, r10 = arnold_check(p, args.jplus, args.jminus, args.st)
    _emit(
        args,
        f"residuals ({r9}, {r10})",
        {"rotation": p.rotation, "residual_9": str(r9), "residual_10": str(r10)},
    )
    return EXIT_OK


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=os.environ.get("CURVESCI_OUTPUT", "").lower() == "json",
        help="machine-readable output",
    )
    common.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")

    p = _Parser(prog="curvesci", description="Signed Gauss words and their finite-type invariants.")
    p.add_argument("--version", action="version", version=__version__)
    top = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    word = top.add_parser("word", help="word algebra")
    ws = word.add_subparsers(dest="word_cmd", required=True, parser_class=_Parser)
    s = ws.add_parser("canon", parents=[common])
    s.add_argument("word")
    for name in ("iso", "pair"):
        s = ws.add_parser(name, parents=[common])
        s.add_argument("u")
        s.add_argument("w")
    s = ws.add_parser("subwords", parents=[common])
    s.add_argument("word")
    s.add_argument("-k", type=int, required=True)
    for name in ("enum", "classes"):
        s = ws.add_parser(name, parents=[common])
        s.add_argument("n", type=int)

    sc = top.add_parser("sci", help="signed curve invariants")
    ss = sc.add_subparsers(dest="sci_cmd", required=True, parser_class=_Parser)
    s = ss.add_parser("compute", parents=[common])
    s.add_argument("-n", type=int, required=True)
    s.add_argument("word")
    s = ss.add_parser("audit", parents=[common])
    s.add_argument("-l", type=int, required=True)
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--corpus", required=True)

    sg = top.add_parser("singular", help="singular curves")
    gs = sg.add_subparsers(dest="sing_cmd", required=True, parser_class=_Parser)
    s = gs.add_parser("resolve", parents=[common])
    s.add_argument("file")
    s.add_argument("--sigma", required=True)
    for name in ("expand", "ftcheck"):
        s = gs.add_parser(name, parents=[common])
        s.add_argument("-n", type=int, required=True)
        s.add_argument("file")

    sf = top.add_parser("surface", help="surface data")
    fs = sf.add_subparsers(dest="surf_cmd", required=True, parser_class=_Parser)
    for name in ("genus", "faces"):
        s = fs.add_parser(name, parents=[common])
        s.add_argument("word")
    s = fs.add_parser("rot", parents=[common])
    s.add_argument("word")
    s.add_argument("--outer", type=int, required=True)

    ar = top.add_parser("arnold", help="Arnold invariant relations")
    as_ = ar.add_subparsers(dest="arn_cmd", required=True, parser_class=_Parser)
    s = as_.add_parser("check", parents=[common])
    s.add_argument("word")
    s.add_argument("--rot", type=int)
    s.add_argument("--outer", type=int)
    s.add_argument("--jplus", type=Fraction, required=True)
    s.add_argument("--jminus", type=Fraction, required=True)
    s.add_argument("--st", type=Fraction, required=True)
    return p


HANDLERS = {
    "word": cmd_word,
    "sci": cmd_sci,
    "singular": cmd_singular,
    "surface": cmd_surface,
    "arnold": cmd_arnold,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.cmd](args)
    except WordParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (WordValidationError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
