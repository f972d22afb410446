"""Normal form: primitives only at ``x``, calls only at ``x``, ``S(x)`` or ``P(x)``."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..core import (
    X,
    Call,
    CharTest,
    Const,
    Interpretation,
    IsMax,
    IsMin,
    Scheme,
    Var,
    atoms,
    build_chain,
    chain_ops,
    map_atoms,
)
from .naming import Fresh


def is_normal(term) -> bool:
    for a in atoms(term):
        if isinstance(a, Call):
            if len(chain_ops(a.arg)) > 1:
                return False
        elif not isinstance(a.arg, Var):
            return False
    return True


@dataclass(frozen=True, eq=False)
class NormalFormCertificate:
    program: object  # Scheme or Interpretation
    rewrites: list = field(default_factory=list)

    def verify(self) -> bool:
        p = self.program
        terms = list(p.body.defs.values()) + list(p.heads.values()) if isinstance(
            p, Interpretation
        ) else list(p.defs.values())
        return all(is_normal(t) for t in terms)


class _Normalizer:
    def __init__(self, scheme: Scheme, fresh: Fresh):
        self.alphabet = scheme.signature
        self.fresh = fresh
        self.defs = {}
        self.pending = list(scheme.defs.items())
        self.wrappers = {}
        self.helpers = {}
        self.rewrites = []

    def wrapper(self, atom):
        key = (type(atom).__name__, getattr(atom, "char", None))
        if key not in self.wrappers:
            if isinstance(atom, IsMax):
                name = self.fresh("$max")
            elif isinstance(atom, IsMin):
                name = self.fresh("$min")
            else:
                name = self.fresh(f"$chr{self.alphabet.chars.index(atom.char)}")
            self.wrappers[key] = name
            self.defs[name] = type(atom)(X) if not isinstance(atom, CharTest) else CharTest(atom.char, X)
        return self.wrappers[key]

    def helper(self, f, op):
        # helper(x) = f(op(x))
        if (f, op) not in self.helpers:
            name = self.fresh(f"{f}${op}")
            self.helpers[(f, op)] = name
            self.defs[name] = Call(f, build_chain([op]))
        return self.helpers[(f, op)]

    def atom(self, a):
        if isinstance(a, Call):
            name, ops = a.name, list(chain_ops(a.arg))
        elif isinstance(a.arg, Var):
            return a
        else:
            name, ops = self.wrapper(a), list(chain_ops(a.arg))
        while len(ops) > 1:
            name = self.helper(name, ops.pop())
        out = Call(name, build_chain(ops))
        if out != a:
            self.rewrites.append(f"{a} -> {out}")
        return out

    def term(self, t):
        return map_atoms(t, self.atom)

    def run(self):
        for name, t in self.pending:
            self.defs[name] = self.term(t)
        return self.defs


def normalize_scheme(p: Scheme) -> NormalFormCertificate:
    norm = _Normalizer(p, Fresh(p.names))
    defs = norm.run()
    return NormalFormCertificate(Scheme(defs, p.signature), norm.rewrites)


def normalize(pi: Interpretation) -> NormalFormCertificate:
    """Normalize the body and move every compound head into its own function.

    Constant heads and heads that are already a bare ``f(x)`` stay as they are.
    """
    fresh = Fresh(pi.body.names)
    norm = _Normalizer(pi.body, fresh)
    heads = {}
    extra = []
    out = pi.output_alphabet.chars
    for (c, i), t in pi.heads.items():
        if isinstance(t, Const) or (isinstance(t, Call) and isinstance(t.arg, Var)):
            heads[(c, i)] = t
            continue
        name = fresh(f"$head{i}_{out.index(c)}")
        extra.append((name, t))
        heads[(c, i)] = Call(name, X)
        norm.rewrites.append(f"head {c}@{i} -> {name}(x)")
    norm.pending.extend(extra)
    defs = norm.run()
    program = Interpretation(
        Scheme(defs, pi.input_alphabet), heads, pi.m, pi.input_alphabet, pi.output_alphabet
    )
    return NormalFormCertificate(program, norm.rewrites)
