"""Boolean monadic recursive schemes over strings, their interpretations and composition."""
from .core import (
    BLANK,
    FF,
    TT,
    X,
    Alphabet,
    Call,
    CharTest,
    Const,
    Direction,
    If,
    Interpretation,
    IsMax,
    IsMin,
    Pred,
    Scheme,
    Succ,
    Var,
    Word,
    classify_direction,
    enumerate_words,
    typecheck,
    validate_interpretation,
    validate_scheme,
)
from .errors import (
    AlphabetMismatchError,
    BMRSError,
    ClosureError,
    DivergenceError,
    DomainError,
    NormalFormError,
    NotStrictError,
    NotWellDefinedError,
    ParseError,
    TermTypeError,
    UndefinedFinalError,
    UnknownSuiteError,
    WellDefinednessError,
)
from .evaluate import eval_head, evaluate
from .syntax import parse, parse_term, print_program
from .transduce import (
    check_strict,
    check_well_defined,
    delete_blanks,
    index_maps,
    output_layout,
    transduce,
)
from .transducer import SubseqTransducer, run_transducer
from .transforms import (
    blank_enrich,
    build_skip_scanners,
    compose,
    destrictify,
    normalize,
    star_scheme,
    star_term,
    strict_compose,
    strictify,
    substitute,
)
