"""Comparing string functions exhaustively on short words."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from ..core import Alphabet, Interpretation, Word, enumerate_words
from ..errors import BMRSError
from ..transduce import transduce
from ..transducer import SubseqTransducer, run_transducer

StringFunction = Union[Interpretation, SubseqTransducer, Callable[[Word], Word]]


@dataclass
class SuiteReport:
    suite: str
    bound: int
    cases: int = 0
    counterexample: Optional[dict] = None
    subjects: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def lines(self) -> list[str]:
        out = [
            f"suite={self.suite}",
            f"max_len={self.bound}",
            f"cases={self.cases}",
            f"subjects={len(self.subjects)}",
            f"result={'pass' if self.ok else 'counterexample'}",
        ]
        if self.counterexample:
            out += [f"witness.{k}={v}" for k, v in self.counterexample.items()]
        return out

    def __str__(self):
        return "\n".join(self.lines())


def as_function(source: StringFunction) -> Callable[[Word], Word]:
    if isinstance(source, Interpretation):
        return lambda s: transduce(source, Word(source.input_alphabet, s.chars))
    if isinstance(source, SubseqTransducer):
        return lambda s: run_transducer(source, Word(source.input_alphabet, s.chars))
    return source


def outcome(fn, *args):
    """``fn(*args)`` as a comparable value; errors become a tagged string."""
    try:
        value = fn(*args)
    except BMRSError as err:
        return f"<{type(err).__name__}>"
    if isinstance(value, Word):
        return value.chars
    return value


def show(value) -> str:
    if isinstance(value, tuple):
        return repr("".join(value)) if all(len(c) == 1 for c in value) else repr(list(value))
    return str(value)


def check_equal_transductions(
    f: StringFunction,
    g: StringFunction,
    alphabet: Alphabet,
    max_len: int,
    name: str = "equal-transductions",
) -> SuiteReport:
    """Compare ``f`` and ``g`` on every word over ``alphabet`` up to ``max_len``."""
    report = SuiteReport(name, max_len)
    ff, gg = as_function(f), as_function(g)
    for s in enumerate_words(alphabet, max_len):
        report.cases += 1
        left, right = outcome(ff, s), outcome(gg, s)
        if left != right:
            report.counterexample = {"input": show(s.chars), "left": show(left), "right": show(right)}
            break
    return report
