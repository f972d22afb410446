"""Big-step evaluation of terms against a word and a scheme.

Calls are resolved by an explicit driver loop: evaluating a defining term is
a generator that yields ``(name, index)`` requests and is resumed with the
boolean answer.  This keeps Python's stack flat however deep the call chain
gets, and the set of in-progress requests doubles as the divergence check.
"""
from __future__ import annotations

from .core import (
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
    Word,
)
from .errors import ClosureError, DivergenceError, DomainError


class Evaluator:
    """Evaluates terms over one word and one scheme, memoizing calls.

    A single instance may serve many top-level evaluations (every head of an
    interpretation, say); memoized results never change observable values.
    """

    def __init__(self, word: Word, scheme: Scheme):
        if len(word) == 0:
            raise DomainError("the empty word has no indices to evaluate at")
        self.word = word
        self.scheme = scheme
        self.last = len(word) - 1
        self.memo: dict[tuple[str, int], bool] = {}

    def index(self, term, x: int) -> int:
        v = self._fast(term, x)
        if v is None:
            raise TypeError("index conditionals need run(), not index()")
        return v

    def _fast(self, term, x):
        # None when the chain contains a conditional
        ops = []
        while not isinstance(term, Var):
            if isinstance(term, If):
                return None
            ops.append(term)
            term = term.arg
        for op in reversed(ops):
            if isinstance(op, Succ):
                x = x + 1 if x < self.last else x
            else:
                x = x - 1 if x > 0 else x
        return x

    def _index(self, term, x):
        # generator form, only needed when an index conditional is present
        match term:
            case Var():
                return x
            case Succ(arg):
                v = yield from self._index(arg, x)
                return v + 1 if v < self.last else v
            case Pred(arg):
                v = yield from self._index(arg, x)
                return v - 1 if v > 0 else v
            case If(cond, then, else_):
                c = yield from self._term(cond, x)
                return (yield from self._index(then if c else else_, x))

    def _arg(self, term, x):
        v = self._fast(term, x)
        if v is None:
            v = yield from self._index(term, x)
        return v

    def _term(self, term, x):
        match term:
            case Const(value):
                return value
            case If(cond, then, else_):
                c = yield from self._term(cond, x)
                return (yield from self._term(then if c else else_, x))
            case CharTest(char, arg):
                v = yield from self._arg(arg, x)
                return self.word[v] == char
            case IsMax(arg):
                v = yield from self._arg(arg, x)
                return v == self.last
            case IsMin(arg):
                v = yield from self._arg(arg, x)
                return v == 0
            case Call(name, arg):
                v = yield from self._arg(arg, x)
                return (yield (name, v))
            case Var() | Succ() | Pred():
                return (yield from self._index(term, x))
        raise TypeError(f"not a term: {term!r}")

    def _body(self, name, v):
        try:
            term = self.scheme.defs[name]
        except KeyError:
            raise ClosureError(name) from None
        return self._term(term, v)

    def run(self, term, x: int):
        """Evaluate ``term`` at index ``x``; returns a bool or an index."""
        if not 0 <= x <= self.last:
            raise DomainError(f"index {x} outside 0..{self.last}")
        memo = self.memo
        stack = [(None, self._term(term, x))]
        active = set()
        reply = None
        while True:
            key, gen = stack[-1]
            try:
                request = gen.send(reply)
            except StopIteration as done:
                stack.pop()
                reply = done.value
                if key is None:
                    return reply
                memo[key] = reply
                active.discard(key)
                continue
            if request in memo:
                reply = memo[request]
                continue
            if request in active:
                trail = [k for k, _ in stack[1:]]
                raise DivergenceError(request[0], request[1], trail)
            active.add(request)
            stack.append((request, self._body(*request)))
            reply = None

    def call(self, name: str, v: int) -> bool:
        return self.run(Call(name, Var()), v)


def evaluate(word: Word, x: int, scheme: Scheme, term):
    """The value ``v`` with ``word, x |- term -> v`` under ``scheme``.

    Raises DivergenceError when no finite derivation exists and DomainError
    for the empty word.
    """
    return Evaluator(word, scheme).run(term, x)


def eval_head(word: Word, x: int, pi: Interpretation, char: str, copy: int) -> bool:
    if not 0 <= copy < pi.m:
        raise ValueError(f"copy index {copy} out of range for m={pi.m}")
    if char not in pi.output_alphabet:
        raise ValueError(f"{char!r} is not an output character")
    return Evaluator(word, pi.body).run(pi.heads[(char, copy)], x)
