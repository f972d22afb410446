"""One exhaustive check per correctness result, each over the fixture registry."""
from __future__ import annotations

from typing import Callable

from ..core import BLANK, Alphabet, Word, enumerate_words
from ..errors import UnknownSuiteError
from ..evaluate import Evaluator
from ..transduce import check_strict, delete_blanks, index_maps, transduce
from ..transducer import run_transducer
from ..transforms import (
    blank_enrich,
    compose,
    build_skip_scanners,
    destrictify,
    normalize,
    normalize_scheme,
    star_scheme,
    star_term,
    strict_compose,
    strictify,
    substitute,
    substitute_term,
)
from ..transforms.star import DEFAULT_NAMING
from .equality import SuiteReport, check_equal_transductions, outcome, show
from .registry import (
    chain_pairs,
    fixture,
    fixtures,
    probe_scheme,
    probe_terms,
    strict_fixtures,
    well_defined_fixtures,
)

AB = Alphabet(("a", "b"))
AB_BLANK = AB.blank_extend()


def _merge(report: SuiteReport, sub: SuiteReport, subject: str) -> bool:
    """Fold a sub-report in; False once a counterexample has been recorded."""
    report.cases += sub.cases
    report.subjects.append(subject)
    if not sub.ok:
        report.counterexample = {"subject": subject, **sub.counterexample}
        return False
    return True


def _word(alphabet, chars) -> Word:
    return Word(alphabet, tuple(chars))


def lemma_substitution(max_len: int) -> SuiteReport:
    """Evaluating a p-term on the output equals evaluating its substituted form on the input."""
    report = SuiteReport("lemma-substitution", max_len)
    for fx in strict_fixtures():
        pi = fx.interp
        p = probe_scheme(pi.output_alphabet)
        terms = probe_terms(p)
        subs = [substitute(p, pi, i) for i in range(pi.m)]
        translated = [[substitute_term(t, p, pi, i) for t in terms] for i in range(pi.m)]
        report.subjects.append(fx.name)
        for s in enumerate_words(pi.input_alphabet, max_len):
            out = transduce(pi, s)
            if not len(out):
                continue
            left_ev = Evaluator(_word(p.signature, out.chars), p)
            right_ev = [Evaluator(s, q) for q in subs]
            for x in range(len(out)):
                q, i = divmod(x, pi.m)
                for k, t in enumerate(terms):
                    report.cases += 1
                    left = outcome(left_ev.run, t, x)
                    right = outcome(right_ev[i].run, translated[i][k], q)
                    if left != right:
                        report.counterexample = {
                            "subject": fx.name, "input": show(s.chars), "output_index": x,
                            "term": str(t), "left": left, "right": right,
                        }
                        return report
    return report


def lemma_strictification(max_len: int) -> SuiteReport:
    """The strictified interpretation is strict and agrees with the original after deleting blanks."""
    report = SuiteReport("lemma-strictification", max_len)
    for fx in well_defined_fixtures():
        pi = fx.interp
        if pi.output_alphabet.contains_blank:
            continue
        strict = strictify(pi)
        check = check_strict(strict, max_len)
        report.cases += check.cases
        if not check.ok:
            report.subjects.append(fx.name)
            report.counterexample = {"subject": fx.name, "strict": str(check.counterexample)}
            return report
        sub = check_equal_transductions(
            lambda s: delete_blanks(transduce(strict, s)), pi, pi.input_alphabet, max_len
        )
        if not _merge(report, sub, fx.name):
            return report
    return report


def _destrictify_subjects():
    for fx in strict_fixtures():
        if fx.interp.output_alphabet.contains_blank:
            yield fx.name, fx.interp
    for fx in well_defined_fixtures():
        if not fx.interp.output_alphabet.contains_blank:
            yield f"strictify({fx.name})", strictify(fx.interp)


def lemma_destrictification(max_len: int) -> SuiteReport:
    """Forgetting the blank heads of a strict interpretation deletes the blanks it emitted."""
    report = SuiteReport("lemma-destrictification", max_len)
    for name, pi in _destrictify_subjects():
        dagger = destrictify(pi)
        sub = check_equal_transductions(
            dagger, lambda s, pi=pi: delete_blanks(transduce(pi, s)), pi.input_alphabet, max_len
        )
        if not _merge(report, sub, name):
            return report
    return report


def _pipeline(rho, pi):
    def run(s):
        middle = transduce(pi, s)
        return transduce(rho, _word(rho.input_alphabet, middle.chars))
    return run


def lemma_strict_compose(max_len: int) -> SuiteReport:
    """The strict composite computes the composition of two strict interpretations."""
    report = SuiteReport("lemma-strict-compose", max_len)
    strict = strict_fixtures()
    for rho, pi in chain_pairs(strict, strict):
        mu = strict_compose(rho.interp, pi.interp)
        sub = check_equal_transductions(
            mu, _pipeline(rho.interp, pi.interp), pi.interp.input_alphabet, max_len
        )
        if not _merge(report, sub, f"{rho.name}*{pi.name}"):
            return report
    return report


def _index_map_problem(s: Word):
    n = len(s)
    maps = index_maps(s)
    d = delete_blanks(s)
    nonblank = [x for x in range(n) if s[x] != BLANK]
    if [maps.star[x] for x in nonblank] != list(range(len(d))) or set(maps.star) != set(nonblank):
        return "star is not the monotone bijection onto d(s)"
    for x in range(n):
        if x in maps.star and maps.star[x] != x - sum(1 for y in range(x) if s[y] == BLANK):
            return f"star({x}) is not x minus its blank predecessors"
        ahead = [y for y in nonblank if y >= x]
        behind = [y for y in nonblank if y <= x]
        if maps.succ_map.get(x) != (maps.star[ahead[0]] if ahead else None):
            return f"succ_map({x}) disagrees with the linear scan"
        if maps.pred_map.get(x) != (maps.star[behind[-1]] if behind else None):
            return f"pred_map({x}) disagrees with the linear scan"
        if x in maps.star:
            if not maps.succ_map[x] == maps.pred_map[x] == maps.star[x]:
                return f"succ_map/pred_map differ from star at non-blank {x}"
            k, last = maps.star[x], len(d) - 1
            # clamped steps in d(s) match the maps applied to clamped steps in s
            want_p = maps.pred_map.get(max(x - 1, 0))
            if max(k - 1, 0) != (k if want_p is None else want_p) or (want_p is None and k != 0):
                return f"predecessor step at {x} does not commute with deletion"
            want_s = maps.succ_map.get(min(x + 1, n - 1))
            if min(k + 1, last) != (k if want_s is None else want_s) or (want_s is None and k != last):
                return f"successor step at {x} does not commute with deletion"
        else:
            if x < n - 1 and maps.succ_map.get(x) != maps.succ_map.get(x + 1):
                return f"succ_map at blank {x} differs from its right neighbour"
            if x > 0 and maps.pred_map.get(x) != maps.pred_map.get(x - 1):
                return f"pred_map at blank {x} differs from its left neighbour"
    return None


def remark_index_maps(max_len: int) -> SuiteReport:
    """Structural facts about the index maps, against linear-scan oracles."""
    report = SuiteReport("remark-index-maps", max_len, subjects=[str(AB_BLANK)])
    for s in enumerate_words(AB_BLANK, max_len):
        report.cases += max(len(s), 1)
        problem = _index_map_problem(s)
        if problem:
            report.counterexample = {"input": show(s.chars), "problem": problem}
            break
    return report


def scanners(max_len: int) -> SuiteReport:
    """maxc/minc hold exactly at the last/first non-blank index."""
    report = SuiteReport("scanners", max_len, subjects=[str(AB_BLANK)])
    scheme = build_skip_scanners(AB_BLANK)
    names = (DEFAULT_NAMING.maxc, DEFAULT_NAMING.minc)
    for s in enumerate_words(AB_BLANK, max_len):
        nonblank = [x for x in range(len(s)) if s[x] != BLANK]
        expected = {DEFAULT_NAMING.maxc: nonblank[-1:], DEFAULT_NAMING.minc: nonblank[:1]}
        ev = Evaluator(s, scheme) if len(s) else None
        for x in range(len(s)):
            for name in names:
                report.cases += 1
                got = outcome(ev.call, name, x)
                if got != (x in expected[name]):
                    report.counterexample = {"input": show(s.chars), "index": x, "function": name, "got": got}
                    return report
    return report


def _star_subjects():
    yield "probes", normalize_scheme(probe_scheme(AB)).program
    for fx in fixtures():
        pi = fx.interp
        if not pi.input_alphabet.contains_blank and len(pi.input_alphabet) <= 3:
            yield fx.name, normalize(pi).program.body


def theorem_star(max_len: int) -> SuiteReport:
    """Whenever a term evaluates on d(s) at x*, its star evaluates the same on s at x."""
    report = SuiteReport("theorem-star", max_len)
    for name, p in _star_subjects():
        starred = star_scheme(p)
        terms = probe_terms(p)
        stars = [star_term(t) for t in terms]
        report.subjects.append(name)
        for s in enumerate_words(p.signature.blank_extend(), max_len):
            d = delete_blanks(s)
            if not len(d):
                continue
            d = _word(p.signature, d.chars)
            maps = index_maps(s)
            left_ev, right_ev = Evaluator(d, p), Evaluator(s, starred)
            for x, xs in maps.star.items():
                for t, ts in zip(terms, stars):
                    report.cases += 1
                    left = outcome(left_ev.run, t, xs)
                    if not isinstance(left, bool):
                        continue  # no derivation on d(s): nothing is claimed
                    right = outcome(right_ev.run, ts, x)
                    if left != right:
                        report.counterexample = {
                            "subject": name, "input": show(s.chars), "index": x,
                            "term": str(t), "left": left, "right": right,
                        }
                        return report
    return report


def _enrich_subjects():
    return [fx for fx in strict_fixtures() if not fx.interp.input_alphabet.contains_blank]


def lemma_blank_strict(max_len: int) -> SuiteReport:
    """Blank enrichment of a strict interpretation is strict."""
    report = SuiteReport("lemma-blank-strict", max_len)
    for fx in _enrich_subjects():
        check = check_strict(blank_enrich(fx.interp, bound=None), max_len)
        report.cases += check.cases
        report.subjects.append(fx.name)
        if not check.ok:
            report.counterexample = {"subject": fx.name, "strict": str(check.counterexample)}
            break
    return report


def theorem_blank_enrich(max_len: int) -> SuiteReport:
    """d . [[pi_b]] equals d . [[pi]] . d on padded words."""
    report = SuiteReport("theorem-blank-enrich", max_len)
    for fx in _enrich_subjects():
        pi = fx.interp
        enriched = blank_enrich(pi, bound=None)

        def left(s, enriched=enriched):
            return delete_blanks(transduce(enriched, s))

        def right(s, pi=pi):
            inner = _word(pi.input_alphabet, delete_blanks(s).chars)
            return delete_blanks(_padded(transduce(pi, inner)))

        sub = check_equal_transductions(left, right, pi.input_alphabet.blank_extend(), max_len)
        if not _merge(report, sub, fx.name):
            break
    return report


def _padded(w: Word) -> Word:
    return Word(w.alphabet.blank_extend(), w.chars)


def theorem_compose(max_len: int) -> SuiteReport:
    """The general composite computes the composition, strict or not."""
    report = SuiteReport("theorem-compose", max_len)
    candidates = [f for f in well_defined_fixtures() if not f.interp.output_alphabet.contains_blank]
    for rho, pi in chain_pairs(candidates, candidates):
        mu = compose(rho.interp, pi.interp, bound=None)
        sub = check_equal_transductions(
            mu, _pipeline(rho.interp, pi.interp), pi.interp.input_alphabet, max_len
        )
        if not _merge(report, sub, f"{rho.name}*{pi.name}"):
            break
    return report


def theorem_rational(max_len: int) -> SuiteReport:
    """A left-subsequential program after a right-subsequential one matches the transducer pipeline."""
    report = SuiteReport("theorem-rational", max_len)
    g, h = fixture("parity"), fixture("mark_tail")
    for fx in (g, h):
        sub = check_equal_transductions(fx.interp, fx.oracle, fx.interp.input_alphabet, max_len)
        if not _merge(report, sub, f"{fx.name}=oracle"):
            return report
    mu = compose(g.interp, h.interp, bound=None)

    def oracle(s):
        middle = run_transducer(h.oracle, s)
        return run_transducer(g.oracle, _word(g.oracle.input_alphabet, middle.chars))

    sub = check_equal_transductions(mu, oracle, h.interp.input_alphabet, max_len)
    _merge(report, sub, f"{g.name}*{h.name}")
    return report


SUITES: dict[str, tuple[Callable[[int], SuiteReport], int]] = {
    "lemma-substitution": (lemma_substitution, 4),
    "lemma-strictification": (lemma_strictification, 5),
    "lemma-destrictification": (lemma_destrictification, 5),
    "lemma-strict-compose": (lemma_strict_compose, 5),
    "remark-index-maps": (remark_index_maps, 5),
    "scanners": (scanners, 5),
    "theorem-star": (theorem_star, 4),
    "lemma-blank-strict": (lemma_blank_strict, 5),
    "theorem-blank-enrich": (theorem_blank_enrich, 5),
    "theorem-compose": (theorem_compose, 5),
    "theorem-rational": (theorem_rational, 6),
}


def suite_names() -> list[str]:
    return list(SUITES)


def default_bound(name: str) -> int:
    if name not in SUITES:
        raise UnknownSuiteError(name)
    return SUITES[name][1]


def run_suite(name: str, max_len: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuiteError(name)
    fn, bound = SUITES[name]
    return fn(bound if max_len is None else max_len)
