"""Command line: ``bmrs <subcommand> ...``.

Exit status is 0 on success, 1 on a counterexample or semantic error and 2
on usage, parse or input errors.  ``BMRS_MAX_LEN`` overrides the default
bound for ``check``, ``verify`` and the checked transforms.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .core import Interpretation, Word
from .errors import BMRSError, ClosureError, ParseError, TermTypeError, UnknownSuiteError
from .evaluate import eval_head, evaluate
from .harness import default_bound, run_suite, suite_names
from .syntax import SourceFile, parse, parse_char_list, parse_term, parse_word, print_program
from .transduce import check_strict, check_well_defined, transduce
from .transforms import blank_enrich, compose, destrictify, normalize, strictify

ENV_BOUND = "BMRS_MAX_LEN"
TRANSFORM_BOUND = 4


class UsageError(Exception):
    pass


def _env_bound(fallback: int) -> int:
    raw = os.environ.get(ENV_BOUND)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_BOUND} must be an integer, not {raw!r}") from None


def _bound(args, fallback: int) -> int:
    return args.max_len if args.max_len is not None else _env_bound(fallback)


def _load(path: str) -> SourceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None
    try:
        return parse(text)
    except (TermTypeError, ClosureError) as err:
        raise UsageError(f"{path}: {err}") from None


def _interp(path: str, name: str | None) -> tuple[SourceFile, Interpretation]:
    src = _load(path)
    try:
        return src, src.interpretation(name)
    except KeyError as err:
        raise UsageError(f"{path}: {err.args[0] if name is None else f'no interpretation {name!r}'}") from None


def _input(args, pi: Interpretation) -> Word:
    try:
        if args.input_list is not None:
            return parse_char_list(args.input_list, pi.input_alphabet)
        return parse_word(args.input or "", pi.input_alphabet)
    except (ValueError, ParseError) as err:
        raise UsageError(f"bad input: {err}") from None


def _emit(result: Interpretation, name: str, sources, meta: dict, out_path: str | None):
    declared = {}
    for src in sources:
        for alias, alphabet in src.alphabets.items():
            used = (result.input_alphabet.chars, result.output_alphabet.chars)
            if alphabet.chars in used and alias not in declared:
                declared[alias] = alphabet
    text = print_program(SourceFile(declared, {name: result}, meta=meta))
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _meta(transform: str, paths, bound) -> dict:
    meta = {"transform": transform}
    if bound is not None:
        meta["bound"] = str(bound)
    meta["from"] = ",".join(Path(p).name.replace(" ", "_") for p in paths)
    return meta


# subcommands


def cmd_run(args) -> int:
    _, pi = _interp(args.file, args.interp)
    print(transduce(pi, _input(args, pi)))
    return 0


def cmd_eval(args) -> int:
    _, pi = _interp(args.file, args.interp)
    s = _input(args, pi)
    if args.head:
        char, _, copy = args.head.rpartition("@")
        try:
            value = eval_head(s, args.index, pi, char, int(copy))
        except (KeyError, ValueError):
            raise UsageError(f"bad head {args.head!r}; expected CHAR@COPY") from None
    else:
        try:
            term = parse_term(args.term, pi.input_alphabet)
        except (ParseError, TermTypeError) as err:
            raise UsageError(f"bad term: {err}") from None
        value = evaluate(s, args.index, pi.body, term)
    print("tt" if value else "ff")
    return 0


def _unary(transform: str, fn, checked: bool):
    def run(args) -> int:
        src, pi = _interp(args.file, args.interp)
        bound = _bound(args, TRANSFORM_BOUND) if checked else None
        result = fn(pi, bound) if checked else fn(pi)
        name = f"{transform.replace('-', '_')}_{args.interp or next(iter(src.interpretations))}"
        _emit(result, name, [src], _meta(transform, [args.file], bound), args.output)
        return 0
    return run


def cmd_compose(args) -> int:
    outer_src, rho = _interp(args.outer, args.outer_interp)
    inner_src, pi = _interp(args.inner, args.inner_interp)
    bound = _bound(args, TRANSFORM_BOUND)
    result = compose(rho, pi, bound=bound)
    rho_name = args.outer_interp or next(iter(outer_src.interpretations))
    pi_name = args.inner_interp or next(iter(inner_src.interpretations))
    meta = _meta("compose", [args.outer, args.inner], bound)
    _emit(result, f"{rho_name}_after_{pi_name}", [outer_src, inner_src], meta, args.output)
    return 0


def cmd_check(args) -> int:
    _, pi = _interp(args.file, args.interp)
    bound = _bound(args, TRANSFORM_BOUND)
    wd = check_well_defined(pi, bound)
    st = check_strict(pi, bound)
    wd_word = "pass" if wd.ok else "fail"
    st_word = "pass" if st.ok else "fail"
    print(f"well-defined: {wd_word}; strict: {st_word}")
    print(f"max_len={bound}")
    print(f"well_defined={wd_word}")
    print(f"strict={st_word}")
    print(f"cases={wd.cases}")
    for label, report in (("well_defined", wd), ("strict", st)):
        if not report.ok:
            print(f"{label}.counterexample={report.counterexample}")
    return 1 if not wd.ok or (args.strict and not st.ok) else 0


def cmd_verify(args) -> int:
    names = suite_names() if args.suite == "all" else [args.suite]
    status = 0
    for name in names:
        bound = args.max_len if args.max_len is not None else _env_bound(default_bound(name))
        report = run_suite(name, bound)
        print(report)
        if not report.ok:
            status = 1
    return status


def cmd_print(args) -> int:
    sys.stdout.write(print_program(_load(args.file)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmrs", description="Boolean monadic recursive schemes")
    sub = parser.add_subparsers(dest="command", required=True)

    def program(p):
        p.add_argument("file")
        p.add_argument("--interp", help="interpretation name (needed when a file has several)")

    def word_input(p, required=False):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--input", help="input word, one character per codepoint, _ for blank")
        g.add_argument("--input-list", help="comma-separated characters, quoted when longer than one codepoint")

    def bound(p):
        p.add_argument("--max-len", type=int, default=None, help=f"word-length bound (env {ENV_BOUND})")

    p = sub.add_parser("run", help="transduce a word")
    program(p)
    word_input(p, required=True)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("eval", help="evaluate a head or term at one index")
    program(p)
    word_input(p, required=True)
    p.add_argument("--index", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--head", help="CHAR@COPY")
    g.add_argument("--term", help="a boolean term over the body")
    p.set_defaults(fn=cmd_eval)

    transforms = [
        ("strictify", strictify, False),
        ("destrictify", destrictify, False),
        ("normalize", lambda pi: normalize(pi).program, False),
        ("blank-enrich", lambda pi, b: blank_enrich(pi, bound=b), True),
    ]
    for name, fn, checked in transforms:
        p = sub.add_parser(name, help=f"write the {name} transform of a program")
        program(p)
        p.add_argument("-o", "--output")
        if checked:
            bound(p)
        p.set_defaults(fn=_unary(name, fn, checked))

    p = sub.add_parser("compose", help="compose OUTER after INNER")
    p.add_argument("outer")
    p.add_argument("inner")
    p.add_argument("--outer-interp")
    p.add_argument("--inner-interp")
    p.add_argument("-o", "--output")
    bound(p)
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("check", help="bounded well-definedness and strictness check")
    program(p)
    bound(p)
    p.add_argument("--strict", action="store_true", help="also fail when not strict")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="suite name or 'all': " + ", ".join(suite_names()))
    bound(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("print", help="print a file canonically")
    p.add_argument("file")
    p.set_defaults(fn=cmd_print)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ParseError, UnknownSuiteError) as err:
        if isinstance(err, UnknownSuiteError):
            err = f"unknown suite {err}; known: {', '.join(suite_names())}"
        print(f"bmrs: error: {err}", file=sys.stderr)
        return 2
    except (BMRSError, ValueError) as err:
        print(f"bmrs: {type(err).__name__}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
