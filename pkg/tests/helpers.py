"""Shared test helpers: word constructors, fixture access, an independent evaluator."""
from hypothesis import strategies as st

from bmrs.core import (
    Alphabet,
    Call,
    CharTest,
    Const,
    If,
    IsMax,
    IsMin,
    Pred,
    Scheme,
    Succ,
    Var,
    Word,
)
from bmrs.harness.registry import fixture

AB = Alphabet(("a", "b"))
AB_ = AB.blank_extend()


def w(alphabet, text):
    return Word.of(alphabet, text)


def interp(name):
    return fixture(name).interp


def run(pi, text):
    from bmrs.transduce import transduce

    return str(transduce(pi, Word.of(pi.input_alphabet, text)))


class OutOfFuel(Exception):
    pass


def naive_eval(s, x, p, term, fuel):
    """Direct recursive reading of the big-step rules, with call nesting capped at ``fuel``.

    Shares no code with the evaluator under test.
    """
    n = len(s)

    def index(t, v):
        if isinstance(t, Var):
            return v
        inner = index(t.arg, v)
        if isinstance(t, Succ):
            return inner if inner == n - 1 else inner + 1
        return inner if inner == 0 else inner - 1

    def go(t, v, depth):
        if isinstance(t, Const):
            return t.value
        if isinstance(t, If):
            return go(t.then if go(t.cond, v, depth) else t.else_, v, depth)
        u = index(t.arg, v)
        if isinstance(t, CharTest):
            return s[u] == t.char
        if isinstance(t, IsMax):
            return u == n - 1
        if isinstance(t, IsMin):
            return u == 0
        if depth == 0:
            raise OutOfFuel
        return go(p.defs[t.name], u, depth - 1)

    return go(term, x, fuel)


def index_terms(max_depth=3):
    return st.recursive(
        st.just(Var()),
        lambda inner: st.builds(Succ, inner) | st.builds(Pred, inner),
        max_leaves=max_depth,
    )


def bool_terms(chars, names, max_leaves=6):
    leaf = (
        st.sampled_from([Const(True), Const(False)])
        | st.builds(CharTest, st.sampled_from(chars), index_terms())
        | st.builds(IsMax, index_terms())
        | st.builds(IsMin, index_terms())
    )
    if names:
        leaf = leaf | st.builds(Call, st.sampled_from(names), index_terms())
    return st.recursive(leaf, lambda inner: st.builds(If, inner, inner, inner), max_leaves=max_leaves)


@st.composite
def schemes(draw, alphabet=AB, names=("f", "g", "h")):
    defs = {n: draw(bool_terms(alphabet.chars, list(names))) for n in names}
    return Scheme(defs, alphabet)
