"""Finite state machines and subsequential transducers.

Machines are passed around as text in a small line-based format; see the
project README for the grammar. Every function parses its input, works on
the typed machine, and reprints the result in canonical form.
"""

from ._automin import (
    accepts,
    brzozowski,
    canonical,
    codeterminize,
    determinize,
    equivalent,
    minimize,
    state_count,
    transduce,
    witness,
)

__all__ = [
    "accepts",
    "brzozowski",
    "canonical",
    "codeterminize",
    "determinize",
    "equivalent",
    "minimize",
    "state_count",
    "transduce",
    "witness",
]
