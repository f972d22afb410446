"""Composition of interpretations: strict, then general."""
from __future__ import annotations

from ..core import Interpretation, Scheme
from ..errors import AlphabetMismatchError, NotWellDefinedError
from ..transduce import check_well_defined
from .star import blank_enrich
from .strictness import destrictify, strictify
from .substitution import CopyTranslator, _inner_body, copy_names


def strict_compose(rho: Interpretation, pi: Interpretation) -> Interpretation:
    """An interpretation for ``[[rho]] . [[pi]]`` when ``pi`` is strict.

    Copy ``i`` of the result, with ``q, r = divmod(i, rho.m)``, carries
    ``rho``'s head for copy ``r`` with ``pi``'s heads for copy ``q`` plugged
    in.  The body holds one version of ``rho``'s functions per copy of
    ``pi`` and a single copy of ``pi``'s body.
    """
    if not rho.input_alphabet.same_set(pi.output_alphabet):
        raise AlphabetMismatchError(
            f"outer input {rho.input_alphabet} differs from inner output {pi.output_alphabet}"
        )
    m, n = pi.m, rho.m
    copy_name = copy_names(rho.body.names, m, keep=0)
    copied = {copy_name(f, c) for f in rho.body.names for c in range(m)}
    inner, inner_heads = _inner_body(pi, copied)
    tr = CopyTranslator(pi, inner_heads, copy_name)
    defs = dict(inner.defs)
    for f, t in rho.body.defs.items():
        for c in range(m):
            defs[copy_name(f, c)] = tr.term(t, c)
    heads = {}
    for i in range(m * n):
        q, r = divmod(i, n)
        for d in rho.output_alphabet:
            heads[(d, i)] = tr.term(rho.heads[(d, r)], q)
    body = Scheme(defs, pi.input_alphabet)
    return Interpretation(body, heads, m * n, pi.input_alphabet, rho.output_alphabet)


def compose(rho: Interpretation, pi: Interpretation, bound: int | None = 4) -> Interpretation:
    """An interpretation for ``[[rho]] . [[pi]]``; neither needs to be strict.

    Both are strictified, the outer one is blank-enriched so it reads the
    inner one's padded output, the two strict interpretations are composed
    and the padding is forgotten again.  ``bound`` is the word length up to
    which both operands are first checked to be well-defined.
    """
    if not rho.input_alphabet.same_set(pi.output_alphabet):
        raise AlphabetMismatchError(
            f"outer input {rho.input_alphabet} differs from inner output {pi.output_alphabet}"
        )
    for operand in (rho, pi):
        if operand.output_alphabet.contains_blank:
            raise ValueError(f"compose needs blankless output alphabets, got {operand.output_alphabet}")
    if bound is not None:
        for operand in (rho, pi):
            report = check_well_defined(operand, bound)
            if not report.ok:
                raise NotWellDefinedError(report)
    outer = blank_enrich(strictify(rho), bound=None)
    return destrictify(strict_compose(outer, strictify(pi)))
