import importlib

import pytest

from bmrs.core import Alphabet, If, Interpretation, Word
from bmrs.errors import UndefinedFinalError, UnknownSuiteError
from bmrs.harness import (
    SubseqTransducer,
    check_equal_transductions,
    enumerate_strings,
    fixture,
    fixtures,
    run_suite,
    run_transducer,
    suite_names,
)
from bmrs.transduce import delete_blanks, transduce
from bmrs.transforms import compose, strictify
from helpers import AB, interp, w

A = Alphabet(("a",))
AB1 = Alphabet(("a", "b", "1"))


def test_enumerate_strings():
    assert [str(s) for s in enumerate_strings(A, 2)] == ["", "a", "aa"]
    assert [str(s) for s in enumerate_strings(AB, 1)] == ["", "a", "b"]
    assert sum(1 for _ in enumerate_strings(AB, 6)) == 127


def test_identity_transducer():
    t = fixture("identity").oracle
    assert str(run_transducer(t, w(AB, "ab"))) == "ab"


def test_left_machine_appends_marker():
    t = SubseqTransducer(AB, AB1, "q", {("q", "a"): ("q", ("a", "1")), ("q", "b"): ("q", ("b", "1"))}, {"q": ()})
    assert str(run_transducer(t, w(AB, "aa"))) == "a1a1"


def _mark_tail_direct(text):
    last_b = text.rfind("b")
    return "".join("c" if c == "a" and i > last_b else c for i, c in enumerate(text))


def test_right_machine_against_direct_definition():
    t = fixture("mark_tail").oracle
    for s in enumerate_strings(AB, 6):
        assert str(run_transducer(t, s)) == _mark_tail_direct(str(s))


def test_partial_final_output():
    t = SubseqTransducer(A, A, "p", {("p", "a"): ("q", ()), ("q", "a"): ("p", ("a",))}, {"p": ()})
    assert str(run_transducer(t, w(A, "aa"))) == "a"
    with pytest.raises(UndefinedFinalError):
        run_transducer(t, w(A, "a"))


def test_transducer_validation():
    with pytest.raises(ValueError):
        SubseqTransducer(AB, AB, "q", {("q", "a"): ("q", ())}, {"q": ()})
    with pytest.raises(ValueError):
        SubseqTransducer(A, A, "q", {("q", "a"): ("q", ("z",))}, {"q": ()})


def test_equal_transductions_examples():
    rho, pi = interp("table_rho"), interp("table_pi")
    mu = compose(rho, pi)
    pipe = lambda s: transduce(rho, Word(rho.input_alphabet, transduce(pi, s).chars))
    assert check_equal_transductions(mu, pipe, pi.input_alphabet, 5).ok
    strict = strictify(pi)
    assert check_equal_transductions(lambda s: delete_blanks(transduce(strict, s)), pi, pi.input_alphabet, 5).ok
    report = check_equal_transductions(interp("identity"), fixture("identity").oracle, AB, 6)
    assert report.ok and report.cases == 127


def test_equal_transductions_reports_first_mismatch():
    report = check_equal_transductions(interp("identity"), interp("dedupe"), AB, 4)
    assert not report.ok
    assert report.counterexample["input"] == "'aa'"
    assert report.counterexample["right"] == "'a'"


def test_fixture_registry_contents():
    names = {f.name for f in fixtures()}
    assert {"copy789", "table_pi", "table_rho", "pad_one", "pad_two", "keep_b", "parity", "mark_tail"} <= names
    assert fixture("parity").oracle.direction == "left"
    assert fixture("mark_tail").oracle.direction == "right"
    assert not fixture("keep_b").strict and fixture("keep_b").well_defined
    assert not fixture("diverge").well_defined


@pytest.mark.parametrize("name", ["lemma-strictification", "remark-index-maps", "scanners", "theorem-rational"])
def test_suites_pass(name):
    report = run_suite(name)
    assert report.ok, str(report)
    assert report.cases > 0


def test_suite_report_is_deterministic():
    first, second = run_suite("lemma-strict-compose", 3), run_suite("lemma-strict-compose", 3)
    assert str(first) == str(second)
    assert "result=pass" in str(first)


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("no-such-suite")


def test_all_suites_listed():
    assert len(suite_names()) == 11


def test_compose_suite_catches_broken_enrichment(monkeypatch):
    module = importlib.import_module("bmrs.transforms.compose")
    original = module.blank_enrich

    def broken(pi, bound=4, clamp_fallback=True):
        out = original(pi, bound, clamp_fallback)
        # drop the "blank input gives blank output" branch of every head
        heads = {k: (t.else_ if isinstance(t, If) else t) for k, t in out.heads.items()}
        return Interpretation(out.body, heads, out.m, out.input_alphabet, out.output_alphabet)

    monkeypatch.setattr(module, "blank_enrich", broken)
    report = run_suite("theorem-compose", 5)
    assert not report.ok
    witness = report.counterexample
    # the witness replays
    rho_name, pi_name = witness["subject"].split("*")
    rho, pi = interp(rho_name), interp(pi_name)
    s = Word(pi.input_alphabet, tuple(witness["input"].strip("'")))
    mu = compose(rho, pi)
    assert repr(str(transduce(mu, s))) == witness["left"]
