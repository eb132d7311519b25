"""Command line interface.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import fans as F
from . import helix as H
from . import io
from . import polygon as P
from . import render
from .errors import ParseError, SemitoricError
from .standard_form import reduce
from .verify import SUITES
from .words import eq_G, eval_sl2, parse_word, to_s_positive, winding_W

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e


def _emit(args, text: str):
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --------------------------------------------------------------------------
# word


def cmd_word(args) -> int:
    if args.sub == "eval":
        print(eval_sl2(parse_word(args.word)))
    elif args.sub == "winding":
        print(winding_W(parse_word(args.word)))
    elif args.sub == "reduce":
        res = reduce(to_s_positive(parse_word(args.word)), with_trace=args.trace)
        if args.trace:
            for step in res.trace:
                print(step)
            res = res.result
        print(res)
    elif args.sub == "eqg":
        print("true" if eq_G(parse_word(args.word), parse_word(args.other)) else "false")
    return EXIT_OK


# --------------------------------------------------------------------------
# helix


def _helix_input(args) -> H.SemitoricHelix:
    if args.vectors is not None:
        if args.c is None:
            raise ParseError("-v needs -c")
        vs = io.parse_vectors(args.vectors)
        return H.helix_validate(len(vs), args.c, vs)
    if args.file is None:
        raise ParseError("give a helix JSON file or -c with -v")
    d, c, vs = io.helix_args_from_json(_read(args.file))
    return H.helix_validate(d, args.c if args.c is not None else c, vs)


def cmd_helix(args) -> int:
    if args.sub == "from-seed":
        if args.c is None or args.seed is None:
            raise ParseError("from-seed needs -c and -A")
        h = H.type7_from_seed(args.c, io.parse_matrix_or_word(args.seed))
        _emit(args, io.dumps(io.helix_to_json(h)))
        return EXIT_OK
    if args.sub == "from-word":
        if args.c is None or args.word is None:
            raise ParseError("from-word needs -c and -w")
        sp = to_s_positive(parse_word(args.word))
        seed = io.parse_matrix_or_word(args.seed) if args.seed else None
        if sp.b:
            raise ParseError("helix words have the form ST^a0 ... ST^a(d-1)")
        h = H.helix_from_word(args.c, sp.a, seed)
        _emit(args, io.dumps(io.helix_to_json(h)))
        return EXIT_OK

    h = _helix_input(args)
    if args.sub == "validate":
        print(f"valid helix d={h.d} c={h.c}")
        print(H.canonical_text(H.helix_canonical(h)))
    elif args.sub == "word":
        print(H.helix_word(h))
    elif args.sub == "classify":
        print(H.helix_classify_minimal(h))
    elif args.sub == "blowup":
        _emit(args, io.dumps(io.helix_to_json(H.helix_blowup(h, args.index))))
    elif args.sub == "blowdown":
        _emit(args, io.dumps(io.helix_to_json(H.helix_blowdown(h, args.index))))
    elif args.sub == "minimize":
        if args.exhaustive:
            for key in H.reachable_minimal_helices(h):
                print(key)
        else:
            g, trace = H.helix_minimize(h)
            _emit(args, io.dumps(io.helix_to_json(g, trace=trace)))
    elif args.sub == "render":
        _emit(args, render.helix_svg(h))
    return EXIT_OK


# --------------------------------------------------------------------------
# fan


def _fan_input(args) -> F.ToricFan:
    if args.vectors is not None:
        return F.fan_validate(io.parse_vectors(args.vectors))
    if args.file is None:
        raise ParseError("give a fan JSON file or -v")
    return F.fan_validate(io.fan_vectors_from_json(_read(args.file)))


def cmd_fan(args) -> int:
    f = _fan_input(args)
    if args.sub == "validate":
        print(f"valid fan d={f.d}")
    elif args.sub == "minimize":
        if args.exhaustive:
            for label in F.reachable_minimal_models(f):
                print(label)
        else:
            g, trace = F.fan_minimize(f)
            _emit(args, io.dumps(io.fan_to_json(g, trace=trace, model=str(F.fan_classify_minimal(g)))))
    elif args.sub == "classify":
        print(F.fan_classify_minimal(f))
    elif args.sub == "render":
        _emit(args, render.fan_svg(f))
    return EXIT_OK


# --------------------------------------------------------------------------
# polygon


def cmd_polygon(args) -> int:
    if args.sub == "from-helix":
        p = P.helix_to_polygon(_helix_input(args))
        _emit(args, io.dumps(io.polygon_to_json(p)))
        return EXIT_OK
    if args.file is None:
        raise ParseError("give a polygon JSON file")
    verts, cuts = io.polygon_args_from_json(_read(args.file))
    p = P.polygon_validate(verts, cuts)
    if args.sub == "validate":
        census = p.census()
        print(f"valid polygon: {p.m} corners, " + ", ".join(f"{v} {k}" for k, v in census.items()))
    elif args.sub == "to-helix":
        _emit(args, io.dumps(io.helix_to_json(P.polygon_to_helix(p))))
    elif args.sub == "render":
        _emit(args, render.polygon_svg(p))
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if args.suite == "fulton":
        rep = SUITES["fulton"](depth=args.depth, max_k=args.max_abs)
    elif args.suite == "minimal-words":
        rep = SUITES["minimal-words"](max_d=args.max_d, max_abs=args.max_abs, max_c=args.max_c)
    elif args.suite == "jmax":
        cs = tuple(range(2, args.max_c + 1))
        rep = SUITES["jmax"](depth=args.depth, cs=cs, max_k=args.max_abs)
    else:
        rep = SUITES["winding-oracle"](samples=args.samples, seed=args.seed)
    for line in rep.lines():
        print(line)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semitoric", description="SL2(Z) words, toric fans and semitoric helices")
    sub = ap.add_subparsers(dest="cmd", required=True)

    w = sub.add_parser("word", help="evaluate, wind, reduce or compare words")
    w.add_argument("sub", choices=["eval", "winding", "reduce", "eqg"])
    w.add_argument("word")
    w.add_argument("other", nargs="?")
    w.add_argument("--trace", action="store_true", help="print the rewriting steps")
    w.set_defaults(func=cmd_word)

    def common(p):
        p.add_argument("file", nargs="?", help="JSON input ('-' for stdin)")
        p.add_argument("-v", "--vectors", help='inline vectors, e.g. "(0,1),(-1,1),(0,-1)"')
        p.add_argument("-o", "--output", help="write to a file instead of stdout")

    h = sub.add_parser("helix", help="semitoric helices")
    h.add_argument(
        "sub",
        choices=["validate", "word", "classify", "blowup", "blowdown", "minimize", "from-seed", "from-word", "render"],
    )
    common(h)
    h.add_argument("-c", type=int, help="complexity")
    h.add_argument("-i", "--index", type=int, default=0)
    h.add_argument("-A", "--seed", help="seed matrix [[a,b],[c,d]] or word")
    h.add_argument("-w", "--word", help="helix word for from-word")
    h.add_argument("--exhaustive", action="store_true", help="report every reachable minimal model")
    h.set_defaults(func=cmd_helix)

    f = sub.add_parser("fan", help="toric fans")
    f.add_argument("sub", choices=["validate", "minimize", "classify", "render"])
    common(f)
    f.add_argument("--exhaustive", action="store_true")
    f.set_defaults(func=cmd_fan)

    p = sub.add_parser("polygon", help="semitoric polygons")
    p.add_argument("sub", choices=["validate", "to-helix", "from-helix", "render"])
    common(p)
    p.add_argument("-c", type=int, help="complexity (from-helix with -v)")
    p.set_defaults(func=cmd_polygon)

    v = sub.add_parser("verify", help="brute-force verification suites")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-d", type=int, default=5)
    v.add_argument("--max-abs", type=int, default=6)
    v.add_argument("--max-c", type=int, default=3)
    v.add_argument("--depth", type=int, default=5)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args, extra = ap.parse_known_args(argv)
    # argparse leaves an optional positional unfilled when it follows a flag
    if extra:
        if len(extra) == 1 and getattr(args, "file", "") is None and (extra[0] == "-" or not extra[0].startswith("-")):
            args.file = extra[0]
        else:
            ap.error("unrecognized arguments: " + " ".join(extra))
    if args.cmd == "word" and args.sub == "eqg" and args.other is None:
        print("error: eqg needs two words", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except SemitoricError as e:
        name, text = type(e).__name__, str(e)
        print(f"error: {text if text.startswith(name) else f'{name}: {text}'}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
