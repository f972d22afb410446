"""Deterministic one-way transducers, used as independent oracles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Alphabet, Word
from .errors import UndefinedFinalError


@dataclass(frozen=True)
class SubseqTransducer:
    """A subsequential transducer reading left-to-right or right-to-left.

    A ``right`` machine reads the reversed input and its output is reversed
    at the end.
    """

    input_alphabet: Alphabet
    output_alphabet: Alphabet
    start: str
    trans: Mapping[tuple[str, str], tuple[str, tuple[str, ...]]]
    final_output: Mapping[str, tuple[str, ...]]
    init_output: tuple[str, ...] = ()
    direction: str = "left"

    def __post_init__(self):
        if self.direction not in ("left", "right"):
            raise ValueError(f"direction must be left or right, not {self.direction!r}")
        object.__setattr__(self, "trans", dict(self.trans))
        object.__setattr__(self, "final_output", dict(self.final_output))
        for state in self.states:
            for c in self.input_alphabet:
                if (state, c) not in self.trans:
                    raise ValueError(f"no transition from {state!r} on {c!r}")
        outputs = [self.init_output, *self.final_output.values()]
        outputs += [out for _, out in self.trans.values()]
        for out in outputs:
            for c in out:
                if c not in self.output_alphabet:
                    raise ValueError(f"output character {c!r} not in {self.output_alphabet}")

    __hash__ = None

    @property
    def states(self) -> list[str]:
        seen = [self.start]
        for (q, _), (r, _) in self.trans.items():
            for s in (q, r):
                if s not in seen:
                    seen.append(s)
        return seen


def run_transducer(t: SubseqTransducer, s: Word) -> Word:
    chars = list(s.chars)
    if t.direction == "right":
        chars.reverse()
    out = list(t.init_output)
    state = t.start
    for c in chars:
        state, emitted = t.trans[(state, c)]
        out.extend(emitted)
    if state not in t.final_output:
        raise UndefinedFinalError(f"state {state!r} has no final output (input {s})")
    out.extend(t.final_output[state])
    if t.direction == "right":
        out.reverse()
    return Word(t.output_alphabet, tuple(out))
