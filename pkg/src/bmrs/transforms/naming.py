"""Collision-free names for generated functions.

Every generated name contains ``$``, which the parser refuses in
hand-written programs.
"""
from __future__ import annotations

from typing import Callable, Iterable

from ..core import RESERVED


def pick_tag(stem: str, taken: Iterable[str], names_for: Callable[[str], Iterable[str]]) -> str:
    """Smallest ``$stem``, ``$stem1``, ... whose generated names avoid ``taken``."""
    taken = set(taken)
    k = 0
    while True:
        tag = RESERVED + stem + (str(k) if k else "")
        if taken.isdisjoint(names_for(tag)):
            return tag
        k += 1


def rename_apart(names: Iterable[str], taken: Iterable[str], stem: str) -> dict[str, str]:
    """Map ``names`` to names disjoint from ``taken``; identity when possible."""
    names = sorted(set(names))
    taken = set(taken)
    if taken.isdisjoint(names):
        return {n: n for n in names}
    tag = pick_tag(stem, taken, lambda t: [n + t for n in names])
    return {n: n + tag for n in names}


class Fresh:
    """Hands out names not yet used, remembering what it handed out."""

    def __init__(self, taken: Iterable[str] = ()):
        self.taken = set(taken)

    def __call__(self, base: str) -> str:
        name, k = base, 1
        while name in self.taken:
            name = f"{base}{k}"
            k += 1
        self.taken.add(name)
        return name
