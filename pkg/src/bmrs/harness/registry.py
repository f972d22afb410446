"""The shipped fixture programs and the probe schemes used by the suites."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from ..core import Alphabet, Call, Interpretation, Scheme, X, format_char
from ..syntax import SourceFile, parse, parse_term
from ..transduce import check_strict, check_well_defined
from ..transducer import SubseqTransducer

# bound used to classify fixtures as well-defined / strict
CLASSIFY_BOUND = 4


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    interp: Interpretation
    oracle: Optional[SubseqTransducer] = None

    @property
    def well_defined(self) -> bool:
        return _classify(self.name)[0]

    @property
    def strict(self) -> bool:
        return _classify(self.name)[1]


def fixture_files() -> list[str]:
    root = resources.files("bmrs") / "fixtures"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".bmrs"))


def fixture_text(filename: str) -> str:
    if not filename.endswith(".bmrs"):
        filename += ".bmrs"
    return (resources.files("bmrs") / "fixtures" / filename).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_source(filename: str) -> SourceFile:
    return parse(fixture_text(filename))


@lru_cache(maxsize=None)
def _registry() -> dict[str, Fixture]:
    out = {}
    for filename in fixture_files():
        src = load_source(filename)
        for name, pi in src.interpretations.items():
            out[name] = Fixture(name, pi, src.transducers.get(name + "_t"))
    return out


def fixtures() -> list[Fixture]:
    return list(_registry().values())


def fixture(name: str) -> Fixture:
    return _registry()[name]


@lru_cache(maxsize=None)
def _classify(name: str) -> tuple[bool, bool]:
    pi = fixture(name).interp
    wd = check_well_defined(pi, CLASSIFY_BOUND).ok
    return wd, wd and check_strict(pi, CLASSIFY_BOUND).ok


def strict_fixtures() -> list[Fixture]:
    return [f for f in fixtures() if f.strict]


def well_defined_fixtures() -> list[Fixture]:
    return [f for f in fixtures() if f.well_defined]


def chain_pairs(candidates_outer, candidates_inner) -> list[tuple[Fixture, Fixture]]:
    """Pairs ``(rho, pi)`` whose middle alphabets agree."""
    return [
        (rho, pi)
        for rho in candidates_outer
        for pi in candidates_inner
        if rho.interp.input_alphabet.same_set(pi.interp.output_alphabet)
    ]


_PROBES = [
    ("run", "if max(x) then {c}(x) else (if {c}(x) then run(S(x)) else ff)"),
    ("back", "if min(x) then {d}(x) else (if {d}(x) then back(P(x)) else ff)"),
    ("odd", "if min(x) then {c}(x) else (if {c}(x) then (if odd(P(x)) then ff else tt) else odd(P(x)))"),
    ("far", "if {c}(S(S(x))) then {d}(P(x)) else max(P(S(x)))"),
    ("mix", "if {d}(x) then run(S(x)) else back(P(P(x)))"),
    ("edge", "if min(S(x)) then tt else max(P(x))"),
    ("near", "if min(x) then odd(S(x)) else far(P(x))"),
]


def probe_scheme(alphabet: Alphabet) -> Scheme:
    """A small fixed family of recursive definitions over ``alphabet``.

    They use both directions, the end markers, compound index chains and
    mutual calls; ``c`` and ``d`` stand for the first and last characters.
    """
    c, d = format_char(alphabet.chars[0]), format_char(alphabet.chars[-1])
    defs = {name: parse_term(body.format(c=c, d=d), alphabet) for name, body in _PROBES}
    return Scheme(defs, alphabet)


def probe_terms(p: Scheme) -> list:
    """Each defining term of ``p`` plus a bare call to each function, in name order."""
    out = []
    for name in sorted(p.defs):
        out.append(p.defs[name])
        out.append(Call(name, X))
    return out
