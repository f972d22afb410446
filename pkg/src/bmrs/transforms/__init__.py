"""Program transformations on schemes and interpretations."""
from .compose import compose, strict_compose
from .normal_form import NormalFormCertificate, is_normal, normalize, normalize_scheme
from .star import (
    StarNaming,
    blank_enrich,
    build_skip_scanners,
    star_scheme,
    star_term,
)
from .strictness import destrictify, strictify
from .substitution import substitute, substitute_literal, substitute_term

__all__ = [
    "NormalFormCertificate",
    "StarNaming",
    "blank_enrich",
    "build_skip_scanners",
    "compose",
    "destrictify",
    "is_normal",
    "normalize",
    "normalize_scheme",
    "star_scheme",
    "star_term",
    "strict_compose",
    "strictify",
    "substitute",
    "substitute_literal",
    "substitute_term",
]
