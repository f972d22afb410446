"""Concrete syntax for alphabets, interpretations and transducers (``.bmrs`` files).

    # comment
    alphabet G = {0, 1}
    alphabet Sb = {a, b} + _
    interpretation pi(Sb, 2) from G {
      head a @ 0 = if 0(x) then tt else f(S(x))
      fun f(x) = if max(x) then tt else f(S(x))
    }
    transducer t(left) from G to Sb {
      start q0 emit []
      edge q0 0 -> q1 emit [a, b]
      final q1 emit []
    }

Characters are single unquoted letters or digits, single-quoted tokens, or
``_`` for the blank.  A bare name applied to an index term is a character
test when it is a one-codepoint member of the input alphabet and a call
otherwise.  Index-valued conditionals are accepted and distributed into the
enclosing boolean term.  Omitted heads are ``ff``.  Names containing ``$``
are reserved for generated programs, recognised by a ``# @generated``
header line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import (
    BLANK,
    FF,
    RESERVED,
    X,
    Alphabet,
    Call,
    CharTest,
    Const,
    If,
    Interpretation,
    IsMax,
    IsMin,
    Pred,
    Scheme,
    Succ,
    Word,
    distribute,
    format_char,
    validate_interpretation,
)
from .errors import ParseError, TermTypeError
from .transducer import SubseqTransducer

GENERATED_MARK = "# @generated"

KEYWORDS = {"x", "S", "P", "tt", "ff", "if", "then", "else", "max", "min", "head", "fun"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<quoted>'(?:\\.|[^'\\\n])*')
  | (?P<arrow>->)
  | (?P<name>[A-Za-z$][A-Za-z0-9_$]*)
  | (?P<int>[0-9]+)
  | (?P<blank>_)
  | (?P<punct>[{}()\[\],=@+])
  | (?P<sym>\S)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def value(self):
        if self.kind == "quoted":
            return re.sub(r"\\(.)", r"\1", self.text[1:-1])
        return self.text


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None:
            raise ParseError(f"unexpected {text[pos]!r}", line, pos - line_start + 1)
        kind = mo.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, mo.group(), line, pos - line_start + 1))
        newlines = mo.group().count("\n")
        if newlines:
            line += newlines
            line_start = mo.start() + mo.group().rindex("\n") + 1
        pos = mo.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


def read_header(text: str) -> dict[str, str] | None:
    """Key/value pairs of a leading ``# @generated`` line, or None."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if not line.startswith("#"):
            return None
        if line.startswith(GENERATED_MARK):
            meta = {}
            for part in line[len(GENERATED_MARK):].split():
                key, _, value = part.partition("=")
                meta[key] = value
            return meta
    return None


@dataclass
class SourceFile:
    alphabets: dict[str, Alphabet] = field(default_factory=dict)
    interpretations: dict[str, Interpretation] = field(default_factory=dict)
    transducers: dict[str, SubseqTransducer] = field(default_factory=dict)
    meta: dict[str, str] | None = None

    @property
    def generated(self) -> bool:
        return self.meta is not None

    def interpretation(self, name: str | None = None) -> Interpretation:
        if name is None:
            if len(self.interpretations) != 1:
                raise KeyError(
                    f"file has {len(self.interpretations)} interpretations; name one of "
                    f"{sorted(self.interpretations)}"
                )
            return next(iter(self.interpretations.values()))
        return self.interpretations[name]


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.meta = read_header(text)
        self.alphabet = None  # input alphabet of the block being parsed

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def at(self, text) -> bool:
        return self.tok.kind in ("name", "punct", "arrow", "blank", "int") and self.tok.text == text

    def expect(self, text) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def name(self, what="name") -> str:
        tok = self.tok
        if tok.kind != "name":
            raise self.error(f"expected {what}, found {tok.text or 'end of input'!r}")
        if RESERVED in tok.text and self.meta is None:
            raise self.error(f"{tok.text!r}: names containing {RESERVED!r} are reserved for generated files")
        return self.advance().text

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise self.error(f"expected a number, found {self.tok.text!r}")
        return int(self.advance().text)

    def char(self) -> str:
        tok = self.tok
        if tok.kind == "blank":
            self.advance()
            return BLANK
        if tok.kind == "quoted":
            value = tok.value
            if value == BLANK:
                raise self.error("the blank is written _ and cannot be quoted")
            if not value:
                raise self.error("empty character")
            self.advance()
            return value
        if tok.kind in ("name", "int") and len(tok.text) == 1 or tok.kind == "sym":
            self.advance()
            return tok.text
        raise self.error(f"expected a character, found {tok.text or 'end of input'!r}")

    # declarations

    def file(self) -> SourceFile:
        out = SourceFile(meta=self.meta)
        while self.tok.kind != "eof":
            start = self.tok
            word = self.name("declaration")
            if word == "alphabet":
                name = self.name("alphabet name")
                self.expect("=")
                self._declare(out.alphabets, name, self.alphabet_expr(out), start)
            elif word == "interpretation":
                name, pi = self.interpretation(out)
                self._declare(out.interpretations, name, pi, start)
            elif word == "transducer":
                name, t = self.transducer(out)
                self._declare(out.transducers, name, t, start)
            else:
                raise self.error(f"unknown declaration {word!r}", start)
        return out

    def _declare(self, table, name, value, tok):
        if name in table:
            raise self.error(f"duplicate declaration of {name!r}", tok)
        table[name] = value

    def alphabet_expr(self, out) -> Alphabet:
        if self.at("{"):
            self.advance()
            chars = [self.char()]
            while self.at(","):
                self.advance()
                chars.append(self.char())
            self.expect("}")
            if BLANK in chars:
                raise self.error("the blank may only be added with '+ _'")
            if len(set(chars)) != len(chars):
                raise self.error("duplicate character in alphabet")
            alphabet = Alphabet(tuple(chars))
        else:
            alphabet = self.alphabet_ref(out)
        if self.at("+"):
            self.advance()
            self.expect("_")
            alphabet = alphabet.blank_extend()
        return alphabet

    def alphabet_ref(self, out) -> Alphabet:
        tok = self.tok
        name = self.name("alphabet name")
        if name not in out.alphabets:
            raise self.error(f"undeclared alphabet {name!r}", tok)
        return out.alphabets[name]

    def interpretation(self, out):
        name = self.name("interpretation name")
        self.expect("(")
        output = self.alphabet_ref(out)
        self.expect(",")
        m_tok = self.tok
        m = self.integer()
        if m < 1:
            raise self.error("copy count must be at least 1", m_tok)
        self.expect(")")
        self.expect("from")
        inp = self.alphabet_ref(out)
        self.alphabet = inp
        self.expect("{")
        heads, defs = {}, {}
        while not self.at("}"):
            tok = self.tok
            word = self.name("'head' or 'fun'")
            if word == "head":
                c = self.char()
                if c not in output:
                    raise self.error(f"{c!r} is not in the output alphabet {output}", tok)
                self.expect("@")
                i = self.integer()
                if i >= m:
                    raise self.error(f"copy index {i} out of range for {m} copies", tok)
                self.expect("=")
                if (c, i) in heads:
                    raise self.error(f"duplicate head {c!r}@{i}", tok)
                heads[(c, i)] = self.bterm()
            elif word == "fun":
                fname = self.function_name()
                self.expect("(")
                self.expect("x")
                self.expect(")")
                self.expect("=")
                if fname in defs:
                    raise self.error(f"duplicate definition of {fname!r}", tok)
                defs[fname] = self.bterm()
            else:
                raise self.error(f"expected 'head' or 'fun', found {word!r}", tok)
        self.expect("}")
        self.alphabet = None
        pi = Interpretation(Scheme(defs, inp), heads, m, inp, output)
        validate_interpretation(pi)
        return name, pi

    def function_name(self) -> str:
        tok = self.tok
        fname = self.name("function name")
        if fname in KEYWORDS:
            raise self.error(f"{fname!r} is a keyword", tok)
        if fname in self.alphabet:
            raise self.error(f"function {fname!r} would shadow the character {fname!r}", tok)
        return fname

    def transducer(self, out):
        name = self.name("transducer name")
        self.expect("(")
        direction = self.name("direction")
        if direction not in ("left", "right"):
            raise self.error(f"direction must be left or right, not {direction!r}")
        self.expect(")")
        self.expect("from")
        inp = self.alphabet_ref(out)
        self.expect("to")
        outp = self.alphabet_ref(out)
        self.expect("{")
        start, init, trans, final = None, (), {}, {}
        while not self.at("}"):
            tok = self.tok
            word = self.name("'start', 'edge' or 'final'")
            if word == "start":
                if start is not None:
                    raise self.error("duplicate start state", tok)
                start = self.state()
                init = self.emission()
            elif word == "edge":
                q = self.state()
                c = self.char()
                self.expect("->")
                r = self.state()
                if (q, c) in trans:
                    raise self.error(f"duplicate edge from {q!r} on {c!r}", tok)
                trans[(q, c)] = (r, self.emission())
            elif word == "final":
                q = self.state()
                final[q] = self.emission()
            else:
                raise self.error(f"unexpected {word!r} in transducer", tok)
        self.expect("}")
        if start is None:
            raise self.error(f"transducer {name!r} has no start state")
        try:
            t = SubseqTransducer(inp, outp, start, trans, final, init, direction)
        except ValueError as err:
            raise self.error(str(err)) from None
        return name, t

    def state(self) -> str:
        if self.tok.kind == "int":
            return self.advance().text
        return self.name("state")

    def emission(self) -> tuple[str, ...]:
        if not self.at("emit"):
            return ()
        self.advance()
        self.expect("[")
        chars = []
        if not self.at("]"):
            chars.append(self.char())
            while self.at(","):
                self.advance()
                chars.append(self.char())
        self.expect("]")
        return tuple(chars)

    # terms

    def bterm(self):
        return distribute(self._bterm())

    def _bterm(self):
        tok = self.tok
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            t = self._bterm()
            self.expect(")")
            return t
        if tok.kind == "name":
            if tok.text == "tt":
                self.advance()
                return Const(True)
            if tok.text == "ff":
                self.advance()
                return Const(False)
            if tok.text == "if":
                self.advance()
                cond = self._bterm()
                self.expect("then")
                then = self._bterm()
                self.expect("else")
                return If(cond, then, self._bterm())
            if tok.text in ("max", "min") and self._next_is("("):
                self.advance()
                arg = self._paren_iterm()
                return IsMax(arg) if tok.text == "max" else IsMin(arg)
        if self._is_char_test(tok):
            c = self.char()
            if c not in self.alphabet:
                raise TermTypeError(f"{tok.line}:{tok.col}: character {c!r} is not in {self.alphabet}")
            return CharTest(c, self._paren_iterm())
        if tok.kind == "name":
            if tok.text in ("x", "S", "P"):
                raise TermTypeError(f"{tok.line}:{tok.col}: expected bool, found index term {tok.text!r}")
            fname = self.name("function name")
            if not self.at("("):
                raise self.error(f"expected '(' after {fname!r}")
            return Call(fname, self._paren_iterm())
        raise self.error(f"expected a boolean term, found {tok.text or 'end of input'!r}")

    def _next_is(self, text):
        nxt = self.tokens[self.pos + 1]
        return nxt.kind == "punct" and nxt.text == text

    def _is_char_test(self, tok) -> bool:
        if tok.kind in ("quoted", "blank", "sym"):
            return True
        if tok.kind == "int":
            return len(tok.text) == 1
        return tok.kind == "name" and len(tok.text) == 1 and tok.text in self.alphabet

    def _paren_iterm(self):
        self.expect("(")
        t = self.iterm()
        self.expect(")")
        return t

    def iterm(self):
        tok = self.tok
        if tok.kind == "name":
            if tok.text == "x":
                self.advance()
                return X
            if tok.text in ("S", "P") and self._next_is("("):
                self.advance()
                inner = self._paren_iterm()
                return Succ(inner) if tok.text == "S" else Pred(inner)
            if tok.text == "if":
                self.advance()
                cond = self._bterm()
                self.expect("then")
                then = self.iterm()
                self.expect("else")
                return If(cond, then, self.iterm())
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            t = self.iterm()
            self.expect(")")
            return t
        # anything else is a boolean term where an index is required
        start = self.pos
        try:
            found = self._bterm()
        except ParseError:
            self.pos = start
            raise self.error(f"expected an index term, found {tok.text or 'end of input'!r}")
        raise TermTypeError(f"{tok.line}:{tok.col}: expected ind, but {found} is bool")


def parse(text: str) -> SourceFile:
    """Parse a ``.bmrs`` source text, validating every interpretation."""
    return _Parser(text).file()


def parse_term(text: str, alphabet: Alphabet):
    """Parse a single boolean term over ``alphabet``."""
    p = _Parser(text)
    p.meta = p.meta or {}
    p.alphabet = alphabet
    t = p.bterm()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r} after term")
    return t


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """One character per codepoint; ``_`` is the blank."""
    return Word(alphabet, tuple(text))


def parse_char_list(text: str, alphabet: Alphabet) -> Word:
    """A comma-separated list of characters in source syntax, e.g. ``a,'ab',_``."""
    p = _Parser(text)
    chars = []
    if p.tok.kind != "eof":
        chars.append(p.char())
        while p.at(","):
            p.advance()
            chars.append(p.char())
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return Word(alphabet, tuple(chars))


# --- printing --------------------------------------------------------------


def format_term(term) -> str:
    return str(term)


def format_alphabet(alphabet: Alphabet) -> str:
    return str(alphabet)


def _print_interpretation(name, pi, names_of, lines):
    lines.append(
        f"interpretation {name}({names_of[pi.output_alphabet]}, {pi.m}) "
        f"from {names_of[pi.input_alphabet]} {{"
    )
    out = pi.output_alphabet.chars
    for i in range(pi.m):
        for c in out:
            t = pi.heads[(c, i)]
            if t != FF:
                lines.append(f"  head {format_char(c)} @ {i} = {format_term(t)}")
    for fname in sorted(pi.body.defs):
        lines.append(f"  fun {fname}(x) = {format_term(pi.body.defs[fname])}")
    lines.append("}")


def _emission(chars):
    return "[" + ", ".join(format_char(c) for c in chars) + "]"


def _print_transducer(name, t, names_of, lines):
    lines.append(
        f"transducer {name}({t.direction}) from {names_of[t.input_alphabet]} "
        f"to {names_of[t.output_alphabet]} {{"
    )
    lines.append(f"  start {t.start} emit {_emission(t.init_output)}")
    for state in t.states:
        for c in t.input_alphabet:
            r, emitted = t.trans[(state, c)]
            lines.append(f"  edge {state} {format_char(c)} -> {r} emit {_emission(emitted)}")
    for state in t.states:
        if state in t.final_output:
            lines.append(f"  final {state} emit {_emission(t.final_output[state])}")
    lines.append("}")


class _AlphabetNames(dict):
    def __init__(self, declared):
        super().__init__()
        self.order = []
        for name, a in declared.items():
            self.add(a, name)

    def add(self, alphabet, name):
        key = alphabet.chars
        if key not in self:
            self[key] = name
            self.order.append((name, alphabet))

    def __missing__(self, key):
        raise KeyError(key)

    def ensure(self, alphabet, base):
        if alphabet.chars in self:
            return
        taken = {n for n, _ in self.order}
        name, k = base, 1
        while name in taken:
            name, k = f"{base}{k}", k + 1
        self.add(alphabet, name)


class _Lookup:
    def __init__(self, names):
        self.names = names

    def __getitem__(self, alphabet):
        return self.names[alphabet.chars]


def print_source(source: SourceFile) -> str:
    names = _AlphabetNames(source.alphabets)
    for pi in source.interpretations.values():
        names.ensure(pi.input_alphabet, "In")
        names.ensure(pi.output_alphabet, "Out")
    for t in source.transducers.values():
        names.ensure(t.input_alphabet, "In")
        names.ensure(t.output_alphabet, "Out")
    lines = []
    if source.meta is not None:
        extra = " ".join(f"{k}={v}" for k, v in source.meta.items())
        lines.append((GENERATED_MARK + " " + extra).rstrip())
    for name, alphabet in names.order:
        lines.append(f"alphabet {name} = {format_alphabet(alphabet)}")
    lookup = _Lookup(names)
    for name, pi in source.interpretations.items():
        lines.append("")
        _print_interpretation(name, pi, lookup, lines)
    for name, t in source.transducers.items():
        lines.append("")
        _print_transducer(name, t, lookup, lines)
    return "\n".join(lines) + "\n"


def print_program(value, name: str = "main", meta: dict | None = None) -> str:
    """Canonical text for a SourceFile, Interpretation or SubseqTransducer."""
    if isinstance(value, SourceFile):
        return print_source(value)
    if isinstance(value, Interpretation):
        return print_source(SourceFile(interpretations={name: value}, meta=meta))
    if isinstance(value, SubseqTransducer):
        return print_source(SourceFile(transducers={name: value}, meta=meta))
    raise TypeError(f"cannot print {type(value).__name__}")
