import pytest

from bmrs.core import (
    BLANK,
    FF,
    TT,
    X,
    Alphabet,
    Call,
    CharTest,
    If,
    Interpretation,
    IsMax,
    Pred,
    Scheme,
    Succ,
    Word,
    enumerate_words,
    validate_interpretation,
)
from bmrs.errors import AlphabetMismatchError, DivergenceError, NormalFormError, NotStrictError, NotWellDefinedError
from bmrs.evaluate import evaluate
from bmrs.harness import check_equal_transductions
from bmrs.harness.registry import fixtures, probe_scheme
from bmrs.syntax import parse
from bmrs.transduce import check_strict, delete_blanks, transduce
from bmrs.transforms import (
    blank_enrich,
    build_skip_scanners,
    compose,
    destrictify,
    is_normal,
    normalize,
    normalize_scheme,
    star_scheme,
    star_term,
    strict_compose,
    strictify,
    substitute,
    substitute_literal,
    substitute_term,
)
from helpers import AB, AB_, interp, run, w

A = Alphabet(("a",))
KEEP_B = Interpretation.build({("a", 0): CharTest("b", X)}, 1, AB, A)


def _pipeline(rho, pi):
    return lambda s: transduce(rho, Word(rho.input_alphabet, transduce(pi, s).chars))


# substitution


def test_substitute_inlines_the_head():
    p = Scheme({"f": CharTest("a", X)}, A)
    assert substitute(p, KEEP_B, 0).defs["f"] == CharTest("b", X)


def test_substitute_character_free_scheme_adds_body():
    p = Scheme({"f": IsMax(X)}, A)
    pi = Interpretation.build({("a", 0): Call("g", X)}, 1, AB, A, defs={"g": CharTest("b", X)})
    out = substitute(p, pi, 0)
    assert out.defs["f"] == IsMax(X)
    assert out.defs["g"] == CharTest("b", X)


def test_substitution_on_789():
    pi = interp("copy789")
    p = Scheme({"f": If(CharTest("7", X), TT, FF)}, pi.output_alphabet)
    s = w(pi.input_alphabet, "aa")
    out = transduce(pi, s)
    for x in range(6):
        q, i = divmod(x, 3)
        left = evaluate(out, x, p, Call("f", X))
        right = evaluate(s, q, substitute(p, pi, i), substitute_term(Call("f", X), p, pi, i))
        assert left == right == (i == 0)


def test_literal_substitution_breaks_with_several_copies():
    # position 0 of 789789 is followed by an 8, which sits in copy 1 of the
    # same input position, not at the next input position
    pi = interp("copy789")
    p = Scheme({"f": CharTest("8", Succ(X))}, pi.output_alphabet)
    s = w(pi.input_alphabet, "aa")
    assert evaluate(transduce(pi, s), 0, p, Call("f", X)) is True
    assert evaluate(s, 0, substitute(p, pi, 0), Call("f", X)) is True
    assert evaluate(s, 0, substitute_literal(p, pi, 0), Call("f", X)) is False


def test_literal_and_copy_aware_agree_for_one_copy():
    pi = interp("mark_tail")
    p = probe_scheme(pi.output_alphabet)
    literal, aware = substitute_literal(p, pi, 0), substitute(p, pi, 0)
    for s in enumerate_words(pi.input_alphabet, 4):
        for x in range(len(s)):
            for name in p.defs:
                assert evaluate(s, x, literal, Call(name, X)) == evaluate(s, x, aware, Call(name, X))


def test_substitute_avoids_name_clashes():
    pi = Interpretation.build({("a", 0): Call("f", X)}, 1, AB, A, defs={"f": CharTest("b", X)})
    p = Scheme({"f": If(CharTest("a", X), TT, Call("f", Succ(X)))}, A)
    out = substitute(p, pi, 0)
    assert len(out.defs) == 2
    s = w(AB, "aab")
    assert evaluate(s, 0, out, Call("f", X)) is True


# strictness


def test_strictify_example():
    strict = strictify(KEEP_B)
    assert str(transduce(strict, w(AB, "ab"))) == "_a"
    assert check_strict(strict, 4).ok
    assert strict.body == KEEP_B.body


def test_strictify_blank_head_is_a_chain_in_alphabet_order():
    pi = interp("table_pi")
    head = strictify(pi).heads[(BLANK, 1)]
    assert head == If(pi.heads[("a", 1)], FF, If(pi.heads[("b", 1)], FF, If(pi.heads[("c", 1)], FF, TT)))


def test_strictify_of_strict_adds_dead_blank():
    pi = interp("copy789")
    assert run(strictify(pi), "aa") == "789789"


def test_strictify_needs_blankless_output():
    with pytest.raises(ValueError):
        strictify(interp("pad_one"))


def test_destrictify_forgets_blank_heads():
    pi = interp("pad_two")
    dagger = destrictify(pi)
    assert not dagger.output_alphabet.contains_blank
    assert run(dagger, "010") == "aabab"


def test_destrictify_undoes_strictify():
    for name in ("dedupe", "doubler", "keep_b", "parity"):
        pi = interp(name)
        report = check_equal_transductions(destrictify(strictify(pi)), pi, pi.input_alphabet, 5)
        assert report.ok, report


# strict composition


def test_table_fixtures_match_their_tables():
    assert run(interp("table_pi"), "010") == "abbcaa"
    rho = interp("table_rho")
    assert run(rho, "abbcaa") == "988989998998998899"


def test_strict_compose_golden():
    mu = strict_compose(interp("table_rho"), interp("table_pi"))
    assert mu.m == 6
    assert run(mu, "010") == "988989998998998899"
    validate_interpretation(mu)


def test_strict_compose_needs_matching_alphabets():
    with pytest.raises(AlphabetMismatchError):
        strict_compose(interp("table_rho"), interp("copy789"))


def test_identity_composed_with_itself():
    ident = interp("identity")
    mu = strict_compose(ident, ident)
    assert check_equal_transductions(mu, ident, AB, 5).ok


def test_strict_compose_keeps_strictness():
    mu = strict_compose(interp("table_rho"), interp("mark_tail"))
    assert check_strict(mu, 5).ok


def test_strict_compose_with_shared_function_names():
    src = parse(
        """
        alphabet G = {a, b}
        interpretation outer(G, 1) from G {
          head a @ 0 = f(x)
          head b @ 0 = if f(x) then ff else tt
          fun f(x) = if max(x) then a(x) else f(S(x))
        }
        interpretation inner(G, 2) from G {
          head a @ 0 = f(x)
          head b @ 0 = if f(x) then ff else tt
          head a @ 1 = b(x)
          head b @ 1 = a(x)
          fun f(x) = if min(x) then b(x) else f(P(x))
        }
        """
    )
    rho, pi = src.interpretations["outer"], src.interpretations["inner"]
    mu = strict_compose(rho, pi)
    assert check_equal_transductions(mu, _pipeline(rho, pi), AB, 5).ok


# normal form


def test_normalize_wraps_primitives():
    p = Scheme({"f": CharTest("a", Succ(X))}, AB)
    cert = normalize_scheme(p)
    assert cert.verify()
    body = cert.program.defs["f"]
    assert isinstance(body, Call) and body.arg == Succ(X)
    assert cert.program.defs[body.name] == CharTest("a", X)
    for s in enumerate_words(AB, 4):
        for x in range(len(s)):
            assert evaluate(s, x, p, Call("f", X)) == evaluate(s, x, cert.program, Call("f", X))


def test_normalize_flattens_chains():
    p = Scheme({"f": Call("g", Succ(Succ(X))), "g": CharTest("a", X)}, AB)
    cert = normalize_scheme(p)
    assert cert.verify() and cert.rewrites
    for t in cert.program.defs.values():
        assert is_normal(t)
    for s in enumerate_words(AB, 4):
        for x in range(len(s)):
            assert evaluate(s, x, p, Call("f", X)) == evaluate(s, x, cert.program, Call("f", X))


def test_normal_program_only_gains_head_wrappers():
    pi = interp("mark_tail")
    out = normalize(pi).program
    assert out.body.defs["nob"] == pi.body.defs["nob"]
    assert out.heads[("b", 0)] != pi.heads[("b", 0)]
    assert all(isinstance(t, Call) and t.arg == X for t in out.heads.values() if t != FF)


@pytest.mark.parametrize("fx", [f for f in fixtures() if f.well_defined], ids=lambda f: f.name)
def test_normalize_preserves_transductions(fx):
    pi = fx.interp
    cert = normalize(pi)
    assert cert.verify()
    assert check_equal_transductions(cert.program, pi, pi.input_alphabet, 4).ok


# star transformation


def test_scanners_examples():
    p = build_skip_scanners(AB_)
    for text, top, bottom in [("a__b_a", 5, 0), ("_a_", 1, 1), ("___", None, None)]:
        s = w(AB_, text)
        assert [x for x in range(len(s)) if evaluate(s, x, p, Call("$maxc", X))] == ([top] if top is not None else [])
        assert [x for x in range(len(s)) if evaluate(s, x, p, Call("$minc", X))] == (
            [bottom] if bottom is not None else []
        )


def test_star_term_clauses():
    assert star_term(CharTest("a", X)) == CharTest("a", X)
    assert star_term(TT) == TT
    assert star_term(Call("f", Pred(X))) == Call("f$sP", Pred(X))
    assert star_term(Call("f", X)) == Call("f$st", X)
    t = If(IsMax(X), TT, Call("f", Succ(X)))
    assert star_term(t) == If(Call("$maxc", X), TT, Call("f$sS", Succ(X)))


def test_star_term_needs_normal_form():
    with pytest.raises(NormalFormError):
        star_term(CharTest("a", Succ(X)))
    with pytest.raises(NormalFormError):
        star_term(Call("f", Succ(Succ(X))))


def test_star_of_empty_scheme_is_just_scanners():
    assert set(star_scheme(Scheme({}, AB)).defs) == {"$maxc", "$maxc$scan", "$minc", "$minc$scan"}


def test_forward_skip_off_the_end():
    p = Scheme({"f": CharTest("a", X)}, AB)
    s = w(AB_, "a_")
    # no non-blank index at or after 1: the literal scan re-enters itself
    with pytest.raises(DivergenceError):
        evaluate(s, 1, star_scheme(p, clamp_fallback=False), Call("f$sS", X))
    # the fallback turns around and lands where a clamped successor would
    assert evaluate(s, 1, star_scheme(p), Call("f$sS", X)) is True


def test_star_agrees_with_clamping_at_the_last_letter():
    p = Scheme({"g": CharTest("b", X), "f": Call("g", Succ(X))}, AB)
    s = w(AB_, "ab__")
    assert evaluate(w(AB, "ab"), 1, p, Call("f", X)) is True
    assert evaluate(s, 1, star_scheme(p), star_term(Call("f", X))) is True
    with pytest.raises(DivergenceError):
        evaluate(s, 1, star_scheme(p, clamp_fallback=False), star_term(Call("f", X)))


# blank enrichment


def test_padding_fixture_base_behaviour():
    pi = interp("pad_one")
    assert run(pi, "00") == "ab"
    assert run(pi, "01") == "b_"
    assert run(pi, "010011") == "aabbab"
    assert run(interp("pad_two"), "010") == "aa_bab"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("00_", "ab_"),
        ("0_0", "a_b"),
        ("0_1", "b__"),
        ("_01", "_b_"),
        ("01_00_11", "aa_bb_ab"),
        ("010_01__1", "aab_ba__b"),
    ],
)
def test_blank_enrich_one_copy(text, expected):
    assert run(blank_enrich(interp("pad_one")), text) == expected


def test_blank_enrich_two_copies():
    assert run(blank_enrich(interp("pad_two")), "_01_0") == "__aa_b__ab"


def test_blank_enrich_rejects_non_strict():
    with pytest.raises(NotStrictError):
        blank_enrich(KEEP_B)


def test_blank_enrich_rejects_padded_input():
    with pytest.raises(ValueError):
        blank_enrich(blank_enrich(interp("identity")))


def test_blank_enrich_is_strict_and_correct():
    pi = interp("ends")
    enriched = blank_enrich(pi)
    assert check_strict(enriched, 5).ok
    for s in enumerate_words(AB_, 5):
        left = delete_blanks(transduce(enriched, s))
        right = transduce(pi, Word(AB, delete_blanks(s).chars))
        assert left.chars == right.chars


# general composition


def test_compose_identity():
    ident = interp("identity")
    assert check_equal_transductions(compose(ident, ident), ident, AB, 5).ok


def test_compose_table_fixtures():
    mu = compose(interp("table_rho"), interp("table_pi"))
    assert run(mu, "010") == "988989998998998899"
    assert not mu.output_alphabet.contains_blank


def test_compose_non_strict_pair():
    rho, pi = interp("copy789"), interp("keep_b")
    mu = compose(rho, pi)
    assert run(mu, "abba") == "789789"
    assert check_equal_transductions(mu, _pipeline(rho, pi), AB, 5).ok


def test_compose_checks_well_definedness():
    both = Interpretation.build({("a", 0): TT, ("b", 0): TT}, 1, AB, AB)
    with pytest.raises(NotWellDefinedError):
        compose(interp("identity"), both)


def test_compose_needs_matching_alphabets():
    with pytest.raises(AlphabetMismatchError):
        compose(interp("copy789"), interp("identity"))


def test_compose_rejects_blank_in_outputs():
    with pytest.raises(ValueError):
        compose(interp("pad_one"), interp("parity"))


def test_generated_names_are_reserved_and_unique():
    mu = compose(interp("parity"), interp("mark_tail"))
    user = set(interp("parity").body.names) | set(interp("mark_tail").body.names)
    for name in mu.body.names:
        assert "$" in name or name in user
    validate_interpretation(mu)
