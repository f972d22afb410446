"""Padding undefined output positions with blanks, and forgetting the padding."""
from __future__ import annotations

from ..core import BLANK, FF, TT, Interpretation, ite


def strictify(pi: Interpretation) -> Interpretation:
    """Add blank heads that fire exactly where no other head does.

    The blank head for copy ``i`` is the chain
    ``if pi(c1, i) then ff else if pi(c2, i) then ff else ... else tt``
    over the output characters in alphabet order.
    """
    if pi.output_alphabet.contains_blank:
        raise ValueError("strictify expects a blankless output alphabet")
    heads = dict(pi.heads)
    for i in range(pi.m):
        blank = TT
        for c in reversed(pi.output_alphabet.chars):
            blank = ite(pi.heads[(c, i)], FF, blank)
        heads[(BLANK, i)] = blank
    return Interpretation(
        pi.body, heads, pi.m, pi.input_alphabet, pi.output_alphabet.blank_extend()
    )


def destrictify(pi: Interpretation) -> Interpretation:
    if not pi.output_alphabet.contains_blank:
        raise ValueError("destrictify expects a blank-extended output alphabet")
    heads = {(c, i): t for (c, i), t in pi.heads.items() if c != BLANK}
    return Interpretation(
        pi.body, heads, pi.m, pi.input_alphabet, pi.output_alphabet.without_blank()
    )
