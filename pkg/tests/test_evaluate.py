import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmrs.core import TT, X, Alphabet, Call, CharTest, If, IsMax, IsMin, Pred, Scheme, Succ, enumerate_words
from bmrs.errors import DivergenceError, DomainError
from bmrs.evaluate import Evaluator, eval_head, evaluate
from helpers import AB, OutOfFuel, interp, naive_eval, schemes, w

A = Alphabet(("a",))
EMPTY = Scheme({}, AB)


def test_character_test():
    assert evaluate(w(A, "aaaa"), 0, Scheme({}, A), CharTest("a", X)) is True


def test_successor_clamps():
    assert Evaluator(w(AB, "aba"), EMPTY).index(Succ(X), 2) == 2
    assert Evaluator(w(AB, "aba"), EMPTY).index(Pred(X), 0) == 0


def test_self_call_diverges():
    p = Scheme({"f": Call("f", X)}, AB)
    with pytest.raises(DivergenceError) as err:
        evaluate(w(AB, "ab"), 0, p, Call("f", X))
    assert (err.value.function, err.value.index) == ("f", 0)


def test_scan_to_end():
    p = Scheme({"f": If(IsMax(X), TT, Call("f", Succ(X)))}, A)
    assert evaluate(w(A, "aaaa"), 3, p, Call("f", X)) is True
    assert evaluate(w(A, "aaaa"), 0, p, Call("f", X)) is True


def test_scan_stuck_at_clamp_diverges():
    # S(x) clamps at the end, so f(S(x)) re-enters f at the last index
    p = Scheme({"f": If(CharTest("b", X), TT, Call("f", Succ(X)))}, AB)
    assert evaluate(w(AB, "aab"), 0, p, Call("f", X)) is True
    with pytest.raises(DivergenceError):
        evaluate(w(AB, "aaa"), 0, p, Call("f", X))


def test_empty_word_and_range():
    with pytest.raises(DomainError):
        evaluate(w(AB, ""), 0, EMPTY, TT)
    with pytest.raises(DomainError):
        evaluate(w(AB, "ab"), 2, EMPTY, TT)


def test_eval_head_on_789():
    pi = interp("copy789")
    s = w(pi.input_alphabet, "aaaa")
    assert eval_head(s, 0, pi, "7", 0) is True
    assert eval_head(s, 0, pi, "8", 0) is False
    assert eval_head(s, 2, pi, "9", 2) is True


def test_long_words_do_not_hit_the_recursion_limit():
    p = Scheme({"f": If(IsMax(X), TT, Call("f", Succ(X)))}, A)
    s = w(A, "a" * 20000)
    assert evaluate(s, 0, p, Call("f", X)) is True


def test_memo_does_not_change_results():
    p = interp("parity").body
    s = w(p.signature, "abcbba")
    shared = Evaluator(s, p)
    for x in range(len(s)):
        assert shared.call("odd", x) == Evaluator(s, p).call("odd", x)


@given(st.integers(1, 6), st.data())
def test_clamping_and_end_markers(n, data):
    s = w(AB, "a" * n)
    x = data.draw(st.integers(0, n - 1))
    ev = Evaluator(s, EMPTY)
    assert ev.index(Succ(X), n - 1) == n - 1
    assert ev.index(Pred(X), 0) == 0
    assert ev.run(IsMax(X), x) == (x == n - 1)
    assert ev.run(IsMin(X), x) == (x == 0)


@given(st.text("ab", min_size=1, max_size=6), st.data())
def test_exactly_one_character_holds(text, data):
    s = w(AB, text)
    x = data.draw(st.integers(0, len(text) - 1))
    hits = [c for c in AB if evaluate(s, x, EMPTY, CharTest(c, X))]
    assert hits == [text[x]]


def _outcome(fn):
    try:
        return fn()
    except DivergenceError:
        return "diverges"


@settings(max_examples=150, deadline=None)
@given(schemes(), st.sampled_from(["f", "g", "h"]))
def test_divergence_matches_bounded_derivation_search(p, name):
    # a derivation never needs to nest the same (function, index) twice,
    # so |names|*|s| nested calls suffice when one exists
    for s in enumerate_words(AB, 3):
        if not len(s):
            continue
        fuel = len(p.defs) * len(s) + 1
        for x in range(len(s)):
            try:
                expected = naive_eval(s, x, p, Call(name, X), fuel)
            except OutOfFuel:
                expected = "diverges"
            got = _outcome(lambda: evaluate(s, x, p, Call(name, X)))
            assert got == expected
            assert _outcome(lambda: evaluate(s, x, p, Call(name, X))) == got


def test_divergence_is_reported_quickly():
    pi = interp("diverge")
    done = []

    def go():
        try:
            eval_head(w(pi.input_alphabet, "a"), 0, pi, "a", 0)
        except DivergenceError:
            done.append(True)

    t = threading.Thread(target=go, daemon=True)
    t.start()
    t.join(timeout=1.0)
    assert done == [True]
