"""Substituting an interpretation's heads into a scheme over its outputs.

A scheme ``p`` over the output alphabet of a strict ``pi`` runs on
``[[pi]](s)``, whose position ``m*q + c`` is copy ``c`` of input position
``q``.  The substituted scheme runs on ``s`` itself, so each function of
``p`` needs one version per copy: the version for copy ``c`` answers what
the original answers at output position ``m*q + c``.

Moving along the output word changes the copy before it changes the input
position.  From copy ``c < m-1`` a successor step stays at ``q`` and moves to
copy ``c+1``; from copy ``m-1`` it moves to ``q+1``, copy 0, unless ``q`` is
the last position, where the output successor clamps.  Predecessors mirror
this.  With ``m == 1`` every step maps to the same step on ``s`` and the
result is plain textual replacement of character tests by heads.
"""
from __future__ import annotations

from ..core import (
    FF,
    X,
    Call,
    CharTest,
    Interpretation,
    IsMax,
    IsMin,
    Pred,
    Scheme,
    Succ,
    chain_ops,
    ite,
    map_atoms,
    rename_calls,
    substitute_var,
)
from ..errors import AlphabetMismatchError
from .naming import pick_tag, rename_apart


class CopyTranslator:
    """Rewrites terms of a scheme over ``pi``'s outputs into terms over its inputs.

    ``copy_name(f, c)`` names the version of ``f`` for copy ``c``; ``heads``
    are ``pi``'s heads after any renaming of its body.
    """

    def __init__(self, pi: Interpretation, heads, copy_name):
        self.m = pi.m
        self.heads = heads
        self.copy_name = copy_name

    def term(self, term, copy: int):
        return map_atoms(term, lambda a: self._walk(a, chain_ops(a.arg), 0, X, copy))

    def _walk(self, atom, ops, k, pos, c):
        if k == len(ops):
            return self._leaf(atom, pos, c)
        m = self.m
        if ops[k] == "S":
            if c < m - 1:
                return self._walk(atom, ops, k + 1, pos, c + 1)
            if m == 1:
                return self._walk(atom, ops, k + 1, Succ(pos), 0)
            return ite(
                IsMax(pos),
                self._walk(atom, ops, k + 1, pos, c),
                self._walk(atom, ops, k + 1, Succ(pos), 0),
            )
        if c > 0:
            return self._walk(atom, ops, k + 1, pos, c - 1)
        if m == 1:
            return self._walk(atom, ops, k + 1, Pred(pos), 0)
        return ite(
            IsMin(pos),
            self._walk(atom, ops, k + 1, pos, c),
            self._walk(atom, ops, k + 1, Pred(pos), m - 1),
        )

    def _leaf(self, atom, pos, c):
        if isinstance(atom, CharTest):
            return substitute_var(self.heads[(atom.char, c)], pos)
        if isinstance(atom, IsMax):
            return IsMax(pos) if c == self.m - 1 else FF
        if isinstance(atom, IsMin):
            return IsMin(pos) if c == 0 else FF
        return Call(self.copy_name(atom.name, c), pos)


def _check_alphabets(p: Scheme, pi: Interpretation):
    if not set(p.signature.chars) <= set(pi.output_alphabet.chars):
        raise AlphabetMismatchError(
            f"scheme alphabet {p.signature} is not covered by outputs {pi.output_alphabet}"
        )


def _inner_body(pi: Interpretation, taken):
    mapping = rename_apart(pi.body.names, taken, "in")
    body = pi.body.rename(mapping)
    heads = {key: rename_calls(t, mapping) for key, t in pi.heads.items()}
    return body, heads


def copy_names(names, m: int, keep: int | None = None):
    """``copy_name(f, c)`` for versions of ``names`` at each copy.

    Copy ``keep`` (if given) reuses the original names.
    """
    names = sorted(names)
    tag = pick_tag(
        "c", names, lambda t: [f + t + str(c) for f in names for c in range(m) if c != keep]
    )

    def copy_name(f, c):
        return f if c == keep else f"{f}{tag}{c}"

    return copy_name


def substitute(p: Scheme, pi: Interpretation, i: int) -> Scheme:
    """The scheme ``p`` with ``pi``'s heads for copy ``i`` plugged in.

    The result is a scheme over ``pi``'s input alphabet.  Functions of ``p``
    keep their names for copy ``i``; the versions for other copies get
    generated names, and ``pi``'s body is renamed apart where it clashes.
    """
    if not 0 <= i < pi.m:
        raise ValueError(f"copy index {i} out of range for m={pi.m}")
    _check_alphabets(p, pi)
    copy_name = copy_names(p.names, pi.m, keep=i)
    copied = {copy_name(f, c) for f in p.names for c in range(pi.m)}
    inner, heads = _inner_body(pi, copied)
    tr = CopyTranslator(pi, heads, copy_name)
    defs = dict(inner.defs)
    for f, t in p.defs.items():
        for c in range(pi.m):
            defs[copy_name(f, c)] = tr.term(t, c)
    return Scheme(defs, pi.input_alphabet)


def substitute_term(term, p: Scheme, pi: Interpretation, i: int):
    """Translate a ``p``-term the same way ``substitute(p, pi, i)`` translates bodies."""
    copy_name = copy_names(p.names, pi.m, keep=i)
    copied = {copy_name(f, c) for f in p.names for c in range(pi.m)}
    _, heads = _inner_body(pi, copied)
    return CopyTranslator(pi, heads, copy_name).term(term, i)


def substitute_literal(p: Scheme, pi: Interpretation, i: int) -> Scheme:
    """Textual replacement of each ``c(T)`` by ``pi(c, i)`` at ``T``, nothing else.

    Agrees with ``substitute`` when ``pi`` is 1-fold.  For ``m > 1`` it
    ignores that successor steps in the output move between copies, so it
    is kept only to exhibit that failure.
    """
    _check_alphabets(p, pi)
    inner, heads = _inner_body(pi, p.names)

    def fn(a):
        if isinstance(a, CharTest):
            return substitute_var(heads[(a.char, i)], a.arg)
        return a

    defs = dict(inner.defs)
    defs.update({f: map_atoms(t, fn) for f, t in p.defs.items()})
    return Scheme(defs, pi.input_alphabet)
