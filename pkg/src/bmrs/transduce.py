"""The string function an interpretation induces, plus blank bookkeeping."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import BLANK, Interpretation, Word, enumerate_words
from .errors import DivergenceError, WellDefinednessError
from .evaluate import Evaluator


@dataclass(frozen=True)
class OutputLayout:
    """The realized output positions: ``(input index, copy, char)`` in order."""

    entries: tuple[tuple[int, int, str], ...]

    def word(self, alphabet) -> Word:
        return Word(alphabet, tuple(c for _, _, c in self.entries))


def output_layout(pi: Interpretation, s: Word) -> OutputLayout:
    """Evaluate every head at every ``(q, r)`` in lexicographic order.

    Raises WellDefinednessError when two heads fire at the same position and
    DivergenceError (annotated with the head and position) when a head has
    no derivation.
    """
    if len(s) == 0:
        return OutputLayout(())
    ev = Evaluator(s, pi.body)
    entries = []
    for q in range(len(s)):
        for r in range(pi.m):
            fired = []
            for c in pi.output_alphabet:
                try:
                    if ev.run(pi.heads[(c, r)], q):
                        fired.append(c)
                except DivergenceError as err:
                    raise err.with_context(word=str(s), head=f"{c}@{r}", position=q)
            if len(fired) > 1:
                raise WellDefinednessError(s, q, r, fired)
            if fired:
                entries.append((q, r, fired[0]))
    return OutputLayout(tuple(entries))


def transduce(pi: Interpretation, s: Word) -> Word:
    if not set(s.chars) <= set(pi.input_alphabet.chars):
        raise ValueError(f"{s} is not a word over {pi.input_alphabet}")
    return output_layout(pi, s).word(pi.output_alphabet)


def delete_blanks(s: Word) -> Word:
    return Word(s.alphabet.without_blank(), tuple(c for c in s if c != BLANK))


def pad(s: Word) -> Word:
    """View a blankless word as a word over the blank-extended alphabet."""
    return Word(s.alphabet.blank_extend(), s.chars)


@dataclass(frozen=True)
class IndexMaps:
    """Positions of a padded word relative to its blank-deleted word.

    ``star`` is defined on non-blank indices; ``succ_map`` sends an index to
    the image of the nearest non-blank index at or after it, ``pred_map`` at
    or before it.  Indices with no such neighbour are absent.
    """

    star: dict[int, int] = field(default_factory=dict)
    succ_map: dict[int, int] = field(default_factory=dict)
    pred_map: dict[int, int] = field(default_factory=dict)


def index_maps(s: Word) -> IndexMaps:
    star = {}
    blanks = 0
    for x, c in enumerate(s):
        if c == BLANK:
            blanks += 1
        else:
            star[x] = x - blanks
    pred_map = {}
    last = None
    for x in range(len(s)):
        if x in star:
            last = star[x]
        if last is not None:
            pred_map[x] = last
    succ_map = {}
    nxt = None
    for x in reversed(range(len(s))):
        if x in star:
            nxt = star[x]
        if nxt is not None:
            succ_map[x] = nxt
    return IndexMaps(star, succ_map, pred_map)


@dataclass(frozen=True)
class Counterexample:
    word: Word
    index: int
    copy: int
    chars: tuple[str, ...]  # heads that fired; empty when none did
    diverged: Optional[str] = None

    def __str__(self):
        what = self.diverged or (
            f"heads {list(self.chars)} true" if self.chars else "no head true"
        )
        return f"word={str(self.word)!r} index={self.index} copy={self.copy}: {what}"


@dataclass(frozen=True)
class CheckReport:
    property: str
    bound: int
    cases: int
    counterexample: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        status = "pass" if self.ok else f"counterexample {self.counterexample}"
        return f"{self.property}: {status} (max_len={self.bound}, cases={self.cases})"


def _check(pi: Interpretation, max_len: int, exactly_one: bool, prop: str) -> CheckReport:
    cases = 0
    for s in enumerate_words(pi.input_alphabet, max_len):
        if len(s) == 0:
            continue
        ev = Evaluator(s, pi.body)
        for x in range(len(s)):
            for i in range(pi.m):
                cases += 1
                fired = []
                for c in pi.output_alphabet:
                    try:
                        if ev.run(pi.heads[(c, i)], x):
                            fired.append(c)
                    except DivergenceError as err:
                        cx = Counterexample(s, x, i, tuple(fired), diverged=f"head {c}@{i}: {err}")
                        return CheckReport(prop, max_len, cases, cx)
                if len(fired) > 1 or (exactly_one and not fired):
                    return CheckReport(prop, max_len, cases, Counterexample(s, x, i, tuple(fired)))
    return CheckReport(prop, max_len, cases)


def check_well_defined(pi: Interpretation, max_len: int) -> CheckReport:
    """At most one head true at every position of every word up to max_len."""
    return _check(pi, max_len, False, "well-defined")


def check_strict(pi: Interpretation, max_len: int) -> CheckReport:
    """Exactly one head true at every position of every word up to max_len."""
    return _check(pi, max_len, True, "strict")
