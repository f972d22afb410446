"""Alphabets, words, terms, schemes and interpretations.

Terms are immutable dataclasses.  Index terms are chains of ``Succ``/``Pred``
around the single variable ``X``; boolean terms are constants, the three kinds
of primitive tests, recursive calls, and conditionals.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import ClosureError, TermTypeError

BLANK = "_"

# Marker that only generated function names may contain.
RESERVED = "$"


def format_char(c: str) -> str:
    """Render a character the way the concrete syntax reads it back."""
    if c == BLANK:
        return BLANK
    if len(c) == 1 and c.isascii() and c.isalnum():
        return c
    return "'" + c.replace("\\", "\\\\").replace("'", "\\'") + "'"


@dataclass(frozen=True)
class Alphabet:
    """A finite ordered set of characters.

    The blank, when present, is always kept as the last member.
    """

    chars: tuple[str, ...]

    def __post_init__(self):
        chars = tuple(self.chars)
        if not chars:
            raise ValueError("an alphabet must be non-empty")
        if len(set(chars)) != len(chars):
            raise ValueError(f"duplicate characters in alphabet {chars}")
        for c in chars:
            if not isinstance(c, str) or not c:
                raise ValueError(f"bad character {c!r}")
        if BLANK in chars:
            chars = tuple(c for c in chars if c != BLANK) + (BLANK,)
            if len(chars) == 1:
                raise ValueError("an alphabet cannot consist of the blank alone")
        object.__setattr__(self, "chars", chars)

    @property
    def contains_blank(self) -> bool:
        return self.chars[-1] == BLANK

    def blank_extend(self) -> Alphabet:
        if self.contains_blank:
            return self
        return Alphabet(self.chars + (BLANK,))

    def without_blank(self) -> Alphabet:
        if not self.contains_blank:
            return self
        return Alphabet(self.chars[:-1])

    def same_set(self, other: Alphabet) -> bool:
        return set(self.chars) == set(other.chars)

    def __contains__(self, c) -> bool:
        return c in self.chars

    def __iter__(self) -> Iterator[str]:
        return iter(self.chars)

    def __len__(self) -> int:
        return len(self.chars)

    def __str__(self):
        inner = ", ".join(format_char(c) for c in self.chars if c != BLANK)
        return "{" + inner + "}" + (" + _" if self.contains_blank else "")


@dataclass(frozen=True)
class Word:
    """A finite string viewed as a structure whose domain is its index set."""

    alphabet: Alphabet
    chars: tuple[str, ...] = ()

    def __post_init__(self):
        chars = tuple(self.chars)
        for i, c in enumerate(chars):
            if c not in self.alphabet:
                raise ValueError(f"character {c!r} at index {i} is not in {self.alphabet}")
        object.__setattr__(self, "chars", chars)

    @classmethod
    def of(cls, alphabet: Alphabet, text: str) -> Word:
        """Build a word from text, one codepoint per character."""
        return cls(alphabet, tuple(text))

    def __len__(self):
        return len(self.chars)

    def __getitem__(self, i):
        return self.chars[i]

    def __iter__(self):
        return iter(self.chars)

    def __str__(self):
        if all(len(c) == 1 for c in self.chars):
            return "".join(self.chars)
        return ",".join(format_char(c) for c in self.chars)


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length 0..max_len, shortest first, then in alphabet order."""
    for n in range(max_len + 1):
        for chars in itertools.product(alphabet.chars, repeat=n):
            yield Word(alphabet, chars)


# --- terms -----------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    def __str__(self):
        return "x"


X = Var()


@dataclass(frozen=True)
class Succ:
    arg: "IndexTerm"

    def __str__(self):
        return f"S({self.arg})"


@dataclass(frozen=True)
class Pred:
    arg: "IndexTerm"

    def __str__(self):
        return f"P({self.arg})"


@dataclass(frozen=True)
class Const:
    value: bool

    def __str__(self):
        return "tt" if self.value else "ff"


TT = Const(True)
FF = Const(False)


@dataclass(frozen=True)
class CharTest:
    char: str
    arg: "IndexTerm"

    def __str__(self):
        return f"{format_char(self.char)}({self.arg})"


@dataclass(frozen=True)
class IsMax:
    arg: "IndexTerm"

    def __str__(self):
        return f"max({self.arg})"


@dataclass(frozen=True)
class IsMin:
    arg: "IndexTerm"

    def __str__(self):
        return f"min({self.arg})"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "IndexTerm"

    def __str__(self):
        return f"{self.name}({self.arg})"


@dataclass(frozen=True)
class If:
    """Conditional.  Branches are usually boolean; index-valued branches are
    typable but are distributed away before a term enters a scheme."""

    cond: "BoolTerm"
    then: "Term"
    else_: "Term"

    def __str__(self):
        return f"if {self.cond} then {self.then} else {self.else_}"


IndexTerm = Union[Var, Succ, Pred]
Atom = Union[CharTest, IsMax, IsMin, Call]
BoolTerm = Union[Const, CharTest, IsMax, IsMin, Call, If]
Term = Union[IndexTerm, BoolTerm]

ATOMS = (CharTest, IsMax, IsMin, Call)


def chain_ops(term) -> tuple[str, ...]:
    """The S/P operations of a pure index chain, innermost first."""
    ops = []
    while not isinstance(term, Var):
        if isinstance(term, Succ):
            ops.append("S")
        elif isinstance(term, Pred):
            ops.append("P")
        else:
            raise TermTypeError(f"{term} is not an index chain")
        term = term.arg
    return tuple(reversed(ops))


def build_chain(ops: Iterable[str], base=X):
    term = base
    for op in ops:
        term = Succ(term) if op == "S" else Pred(term)
    return term


def with_arg(atom, arg):
    """Rebuild an atom with a different index argument."""
    if isinstance(atom, CharTest):
        return CharTest(atom.char, arg)
    if isinstance(atom, Call):
        return Call(atom.name, arg)
    return type(atom)(arg)


def plug(index, inner):
    """Substitute ``inner`` for the variable inside an index term."""
    if isinstance(index, Var):
        return inner
    if isinstance(index, If):
        return If(index.cond, plug(index.then, inner), plug(index.else_, inner))
    return type(index)(plug(index.arg, inner))


def map_atoms(term, fn):
    """Rebuild a boolean term, replacing every atom ``a`` with ``fn(a)``."""
    if isinstance(term, If):
        return If(map_atoms(term.cond, fn), map_atoms(term.then, fn), map_atoms(term.else_, fn))
    if isinstance(term, Const):
        return term
    return fn(term)


def atoms(term) -> Iterator:
    if isinstance(term, If):
        yield from atoms(term.cond)
        yield from atoms(term.then)
        yield from atoms(term.else_)
    elif not isinstance(term, Const):
        yield term


def substitute_var(term, index):
    """Replace the variable by ``index`` throughout a boolean term.

    Conditions are evaluated at the same position as the atoms around them,
    so they are rewritten too.
    """
    if isinstance(term, If):
        return If(
            substitute_var(term.cond, index),
            substitute_var(term.then, index),
            substitute_var(term.else_, index),
        )
    if isinstance(term, Const):
        return term
    return with_arg(term, plug(term.arg, index))


def called_names(term) -> set[str]:
    return {a.name for a in atoms(term) if isinstance(a, Call)}


def ite(cond, then, else_):
    """Build a conditional, folding constant conditions and equal branches."""
    if isinstance(cond, Const):
        return then if cond.value else else_
    if then == else_:
        return then
    return If(cond, then, else_)


def negate(term):
    return ite(term, FF, TT)


def term_size(term) -> int:
    if isinstance(term, If):
        return 1 + term_size(term.cond) + term_size(term.then) + term_size(term.else_)
    if isinstance(term, Const):
        return 1
    return 1 + len(chain_ops(term.arg))


def _has_index_if(index) -> bool:
    while not isinstance(index, Var):
        if isinstance(index, If):
            return True
        index = index.arg
    return False


def distribute(term):
    """Push index-valued conditionals out into the enclosing boolean context.

    ``a(S(if b then x else P(x)))`` becomes ``if b then a(S(x)) else a(S(P(x)))``.
    Evaluation is unchanged because the condition is evaluated at the same
    position either way.
    """
    if isinstance(term, If):
        return If(distribute(term.cond), distribute(term.then), distribute(term.else_))
    if isinstance(term, Const):
        return term
    return _distribute_index(term.arg, lambda idx: with_arg(term, idx))


def _distribute_index(index, k):
    # k maps a conditional-free index term to the boolean term it sits in
    if isinstance(index, Var):
        return k(index)
    if isinstance(index, If):
        return If(
            distribute(index.cond),
            _distribute_index(index.then, k),
            _distribute_index(index.else_, k),
        )
    wrap = type(index)
    return _distribute_index(index.arg, lambda inner: k(wrap(inner)))


# --- typing ----------------------------------------------------------------

IND = "ind"
BOOL = "bool"


def typecheck(term, alphabet: Alphabet, names: Iterable[str]) -> str:
    """Return ``"ind"`` or ``"bool"``, the unique type of ``term``.

    Raises TermTypeError for an ill-typed term and ClosureError for a call
    to a name outside ``names``.
    """
    names = names if isinstance(names, (set, frozenset, dict)) else set(names)
    return _typeof(term, alphabet, names)


def _typeof(term, alphabet, names):
    match term:
        case Var():
            return IND
        case Succ(arg) | Pred(arg):
            _expect(arg, IND, alphabet, names, term)
            return IND
        case Const():
            return BOOL
        case CharTest(char, arg):
            if char not in alphabet:
                raise TermTypeError(f"character {char!r} is not in {alphabet}")
            _expect(arg, IND, alphabet, names, term)
            return BOOL
        case IsMax(arg) | IsMin(arg):
            _expect(arg, IND, alphabet, names, term)
            return BOOL
        case Call(name, arg):
            if name not in names:
                raise ClosureError(name)
            _expect(arg, IND, alphabet, names, term)
            return BOOL
        case If(cond, then, else_):
            _expect(cond, BOOL, alphabet, names, term)
            t1 = _typeof(then, alphabet, names)
            t2 = _typeof(else_, alphabet, names)
            if t1 != t2:
                raise TermTypeError(f"conditional branches have types {t1} and {t2}: {term}")
            return t1
    raise TermTypeError(f"not a term: {term!r}")


def _expect(term, want, alphabet, names, parent):
    got = _typeof(term, alphabet, names)
    if got != want:
        raise TermTypeError(f"expected {want} but {term} is {got} (in {parent})")


# --- schemes and interpretations -------------------------------------------


@dataclass(frozen=True)
class Scheme:
    """A headless scheme: function names mapped to boolean defining terms.

    Equality ignores definition order.
    """

    defs: Mapping[str, BoolTerm]
    signature: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "defs", dict(self.defs))

    __hash__ = None

    @property
    def names(self) -> frozenset[str]:
        return frozenset(self.defs)

    def __getitem__(self, name):
        return self.defs[name]

    def union(self, other: Scheme) -> Scheme:
        clash = {n for n in self.defs.keys() & other.defs.keys() if self.defs[n] != other.defs[n]}
        if clash:
            raise ValueError(f"conflicting definitions for {sorted(clash)}")
        return Scheme({**self.defs, **other.defs}, self.signature)

    def rename(self, mapping: Mapping[str, str]) -> Scheme:
        return Scheme(
            {mapping.get(n, n): rename_calls(t, mapping) for n, t in self.defs.items()},
            self.signature,
        )


def rename_calls(term, mapping: Mapping[str, str]):
    def fn(a):
        if isinstance(a, Call) and a.name in mapping:
            return Call(mapping[a.name], a.arg)
        return a

    return map_atoms(term, fn)


@dataclass(frozen=True)
class Interpretation:
    """An m-fold order-preserving interpretation.

    ``heads[(c, i)]`` decides whether copy ``i`` of an input position carries
    output character ``c``.  Missing heads default to ``ff``.
    """

    body: Scheme
    heads: Mapping[tuple[str, int], BoolTerm]
    m: int
    input_alphabet: Alphabet
    output_alphabet: Alphabet

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("copy count must be at least 1")
        if self.body.signature != self.input_alphabet:
            raise ValueError("body signature must be the input alphabet")
        heads = {}
        for (c, i), t in self.heads.items():
            if c not in self.output_alphabet:
                raise ValueError(f"head for {c!r}: not an output character")
            if not 0 <= i < self.m:
                raise ValueError(f"head copy index {i} out of range for m={self.m}")
            heads[(c, i)] = t
        full = {}
        for i in range(self.m):
            for c in self.output_alphabet:
                full[(c, i)] = heads.get((c, i), FF)
        object.__setattr__(self, "heads", full)

    __hash__ = None

    @classmethod
    def build(cls, heads, m, input_alphabet, output_alphabet, defs=None):
        return cls(Scheme(defs or {}, input_alphabet), heads, m, input_alphabet, output_alphabet)

    def head(self, c, i):
        return self.heads[(c, i)]


def validate_scheme(p: Scheme) -> None:
    """Check that every defining term is boolean and the scheme is closed.

    Undefined names are reported in sorted order of the referencing function.
    """
    for name in sorted(p.defs):
        term = p.defs[name]
        for called in sorted(called_names(term)):
            if called not in p.defs:
                raise ClosureError(called, where=name)
        _check_bool_term(term, p.signature, p.defs, name)


def validate_interpretation(pi: Interpretation) -> None:
    validate_scheme(pi.body)
    for (c, i), term in pi.heads.items():
        _check_bool_term(term, pi.input_alphabet, pi.body.defs, f"head {c!r}@{i}")


def _check_bool_term(term, alphabet, names, where):
    try:
        got = typecheck(term, alphabet, names)
    except ClosureError as err:
        raise ClosureError(err.name, where=where) from None
    if got != BOOL:
        raise TermTypeError(f"{where}: defining term must be bool, got {got}")
    for a in atoms(term):
        if _has_index_if(a.arg):
            raise TermTypeError(f"{where}: index conditional in {a}; distribute() it first")


class Direction(enum.Enum):
    P_ONLY = "P-only"
    S_ONLY = "S-only"
    BOTH = "both"
    NEITHER = "neither"

    def __str__(self):
        return self.value


def _index_ops(term) -> set[str]:
    found = set()

    def walk(idx):
        if isinstance(idx, If):
            found.update(_index_ops(idx.cond))
            walk(idx.then)
            walk(idx.else_)
        elif not isinstance(idx, Var):
            found.add("S" if isinstance(idx, Succ) else "P")
            walk(idx.arg)

    for a in atoms(term):
        walk(a.arg)
    return found


def classify_direction(program) -> Direction:
    """Which of the successor/predecessor primitives a program avoids.

    ``BOTH`` means it qualifies as both a predecessor-only and a
    successor-only program, because it uses neither.
    """
    if isinstance(program, Interpretation):
        terms = list(program.body.defs.values()) + list(program.heads.values())
    else:
        terms = list(program.defs.values())
    used = set()
    for t in terms:
        used |= _index_ops(t)
    if not used:
        return Direction.BOTH
    if used == {"P"}:
        return Direction.P_ONLY
    if used == {"S"}:
        return Direction.S_ONLY
    return Direction.NEITHER
