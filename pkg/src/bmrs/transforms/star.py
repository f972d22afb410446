"""Making a program ignore blanks in its input.

On a padded word the starred program behaves like the original program on
the blank-deleted word: ``max``/``min`` become tests for the last/first
non-blank index, and successor/predecessor calls skip over blanks by tail
recursion.  Blank enrichment builds on this to lift a strict interpretation
to padded inputs.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import (
    BLANK,
    FF,
    TT,
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
    Var,
    ite,
)
from ..errors import NormalFormError, NotStrictError
from ..transduce import check_strict
from .normal_form import is_normal, normalize

BLANK_AT_X = CharTest(BLANK, X)


@dataclass(frozen=True)
class StarNaming:
    """Names of the starred, forward-scanning and backward-scanning versions."""

    maxc: str = "$maxc"
    minc: str = "$minc"

    def star(self, f: str) -> str:
        return f + "$st"

    def succ(self, f: str) -> str:
        return f + "$sS"

    def pred(self, f: str) -> str:
        return f + "$sP"


DEFAULT_NAMING = StarNaming()


def build_skip_scanners(alphabet: Alphabet, naming: StarNaming = DEFAULT_NAMING) -> Scheme:
    """``maxc`` holds exactly at the last non-blank index, ``minc`` at the first.

    maxc(x) = if _(x) then ff else maxc_scan(x)
    maxc_scan(x) = if max(x) then tt else if _(S(x)) then maxc_scan(S(x)) else ff
    and symmetrically for minc.
    """
    if not alphabet.contains_blank:
        raise ValueError("skip scanners need a blank-extended alphabet")
    up, down = naming.maxc + "$scan", naming.minc + "$scan"
    defs = {
        naming.maxc: If(BLANK_AT_X, FF, Call(up, X)),
        up: If(IsMax(X), TT, If(CharTest(BLANK, Succ(X)), Call(up, Succ(X)), FF)),
        naming.minc: If(BLANK_AT_X, FF, Call(down, X)),
        down: If(IsMin(X), TT, If(CharTest(BLANK, Pred(X)), Call(down, Pred(X)), FF)),
    }
    return Scheme(defs, alphabet)


def star_term(term, naming: StarNaming = DEFAULT_NAMING):
    if isinstance(term, Const):
        return term
    if isinstance(term, If):
        return If(
            star_term(term.cond, naming), star_term(term.then, naming), star_term(term.else_, naming)
        )
    if not is_normal(term):
        raise NormalFormError(f"{term} is not in normal form")
    if isinstance(term, CharTest):
        return term
    if isinstance(term, IsMax):
        return Call(naming.maxc, X)
    if isinstance(term, IsMin):
        return Call(naming.minc, X)
    arg = term.arg
    if isinstance(arg, Var):
        return Call(naming.star(term.name), X)
    if isinstance(arg, Succ):
        return Call(naming.succ(term.name), arg)
    return Call(naming.pred(term.name), arg)


def star_scheme(p: Scheme, naming: StarNaming = DEFAULT_NAMING, clamp_fallback: bool = True) -> Scheme:
    """The starred scheme over the blank-extended alphabet.

    f_st(x) = T*
    f_sS(x) = if _(x) then f_sS(S(x)) else T*
    f_sP(x) = if _(x) then f_sP(P(x)) else T*

    A forward scan that reaches the end of the word while still on blanks
    has no non-blank index ahead.  The original successor would have clamped
    at the last non-blank index, so with ``clamp_fallback`` the scan turns
    around (``if max(x) then f_sP(x)``) and finds it; the backward scan does
    the same at the start.  Without the fallback such scans diverge.
    """
    for name, t in p.defs.items():
        if not is_normal(t):
            raise NormalFormError(f"definition of {name} is not in normal form: {t}")
    alphabet = p.signature.blank_extend()
    defs = dict(build_skip_scanners(alphabet, naming).defs)
    for f, t in p.defs.items():
        ts = star_term(t, naming)
        fs, fp = naming.succ(f), naming.pred(f)
        step_s = Call(fs, Succ(X))
        step_p = Call(fp, Pred(X))
        if clamp_fallback:
            step_s = If(IsMax(X), Call(fp, X), step_s)
            step_p = If(IsMin(X), Call(fs, X), step_p)
        defs[naming.star(f)] = ts
        defs[fs] = If(BLANK_AT_X, step_s, ts)
        defs[fp] = If(BLANK_AT_X, step_p, ts)
    return Scheme(defs, alphabet)


def blank_enrich(pi: Interpretation, bound: int | None = 4, clamp_fallback: bool = True) -> Interpretation:
    """Lift a strict interpretation to inputs padded with blanks.

    Each blank input position yields ``m`` blank outputs; the non-blank
    positions produce what ``pi`` produces on the blank-deleted input.
    ``bound`` is the word length up to which strictness of ``pi`` is checked
    first (``None`` skips the check).
    """
    if pi.input_alphabet.contains_blank:
        raise ValueError("blank_enrich expects a blankless input alphabet")
    if bound is not None:
        report = check_strict(pi, bound)
        if not report.ok:
            raise NotStrictError(report)
    normal = normalize(pi).program
    body = star_scheme(normal.body, clamp_fallback=clamp_fallback)
    out = pi.output_alphabet.blank_extend()
    heads = {}
    for i in range(pi.m):
        for c in out:
            head = star_term(normal.heads.get((c, i), FF))
            if c == BLANK:
                heads[(c, i)] = ite(BLANK_AT_X, TT, head)
            else:
                heads[(c, i)] = ite(BLANK_AT_X, FF, head)
    return Interpretation(body, heads, pi.m, pi.input_alphabet.blank_extend(), out)
