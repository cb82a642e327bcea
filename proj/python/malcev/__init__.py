"""Exact truncated free Lie algebra and nilpotent group engine."""

from ._core import (
    Lie,
    ParseError,
    Series,
    bch,
    collect,
    compile_term,
    expand,
    exp,
    hall_petresco_verified,
    inverse,
    lie_bracket,
    lie_to_series,
    log,
    lyndon_words,
    power,
    run_verify,
    series_to_lie,
    solve,
)

__all__ = [
    "Lie",
    "ParseError",
    "Series",
    "bch",
    "collect",
    "compile_term",
    "expand",
    "exp",
    "hall_petresco_verified",
    "inverse",
    "lie_bracket",
    "lie_to_series",
    "log",
    "lyndon_words",
    "power",
    "run_verify",
    "series_to_lie",
    "solve",
]
