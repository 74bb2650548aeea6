"""Built-in example algebras used across the test suite and docs.

Each factory returns a fresh :class:`FiniteAlgebra`.  The tables are small
hand-checked structures exercising the main structural classes: a BCK-style
algebra with coinciding implications, a proper two-implication algebra, a
bounded one, and one satisfying the antitone condition with a rich supply
of states, operators, and valuations.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra


def _alg(name, tokens, arrow_rows, squig_rows, unit="1", bottom=None):
    toks = tuple(tokens.split())
    index = {t: i for i, t in enumerate(toks)}

    def grid(rows):
        return tuple(tuple(index[t] for t in row.split()) for row in rows)

    return FiniteAlgebra(
        name,
        toks,
        grid(arrow_rows),
        grid(squig_rows),
        index[unit],
        None if bottom is None else index[bottom],
    )


def four_element_bck() -> FiniteAlgebra:
    """Four-element algebra whose implications coincide (a BCK algebra)."""
    return _alg(
        "bck4",
        "1 a b c",
        ["1 a b c", "1 1 1 1", "1 a 1 c", "1 b 1 1"],
        ["1 a b c", "1 1 1 1", "1 c 1 c", "1 c 1 1"],
    )


def six_element_proper() -> FiniteAlgebra:
    """Six-element proper algebra; distributive, not pseudo-BCK."""
    return _alg(
        "proper6",
        "1 a b c d e",
        [
            "1 a b c d e",
            "1 1 c c d 1",
            "1 a 1 1 1 e",
            "1 a 1 1 1 e",
            "1 a 1 1 1 e",
            "1 a d d d 1",
        ],
        [
            "1 a b c d e",
            "1 1 b c d 1",
            "1 a 1 1 1 e",
            "1 a 1 1 1 e",
            "1 a 1 1 1 e",
            "1 a c c d 1",
        ],
    )


def six_element_bounded() -> FiniteAlgebra:
    """Six-element bounded proper algebra with bottom e."""
    return _alg(
        "bounded6",
        "1 a b c d e",
        [
            "1 a b c d e",
            "1 1 d 1 1 d",
            "1 c 1 1 1 c",
            "1 a d 1 d a",
            "1 c b c 1 b",
            "1 1 1 1 1 1",
        ],
        [
            "1 a b c d e",
            "1 1 c 1 1 c",
            "1 d 1 1 1 d",
            "1 d b 1 d b",
            "1 a c c 1 a",
            "1 1 1 1 1 1",
        ],
        bottom="e",
    )


def five_element_condition_a() -> FiniteAlgebra:
    """Five-element proper algebra satisfying the antitone condition.

    Its state space is a square, its internal-state and operator families
    are nontrivial, and its valuation cone has two extreme rays.
    """
    return _alg(
        "conda5",
        "1 a b c d",
        ["1 a b c d", "1 1 c c 1", "1 d 1 1 d", "1 d 1 1 d", "1 1 c c 1"],
        ["1 a b c d", "1 1 b c 1", "1 d 1 1 d", "1 d 1 1 d", "1 1 b c 1"],
    )


ALL = {
    "bck4": four_element_bck,
    "proper6": six_element_proper,
    "bounded6": six_element_bounded,
    "conda5": five_element_condition_a,
}
