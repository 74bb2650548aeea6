"""Internal states (type I/II) and state-morphism operators.

Candidates are unary maps on the carrier; enumeration brute-forces all
n^n maps with an optional unit-image pruning that is only sound under
condition (A) (and can be disabled for auditing).
"""

from __future__ import annotations

import itertools
from typing import Optional

from .algebra import FiniteAlgebra, check_axioms, vee1, vee2
from .dsystems import Subset, is_deductive_system
from .homs import Homomorphism, PreconditionError, SizeGuardError

ENUM_GUARD = 10_000_000

UnaryOperator = tuple[int, ...]

Witness = tuple[str, tuple[int, ...]]


def internal_state_witness(
    a: FiniteAlgebra, mu: UnaryOperator, kind: str
) -> Optional[Witness]:
    """First failing axiom in the order (is1), (is2/is2'), (is3).

    ``kind`` is "I" (join of the left operand) or "II" (join reversed).
    The order used by (is1) is the preorder x -> y = 1.
    """
    if kind not in ("I", "II"):
        raise ValueError(f"kind must be 'I' or 'II', got {kind!r}")
    u = a.unit
    for x in range(a.size):
        for y in range(a.size):
            if a.arrow[x][y] == u and a.arrow[mu[x]][mu[y]] != u:
                return ("is1", (x, y))
    for x in range(a.size):
        for y in range(a.size):
            if kind == "I":
                j1, j2 = vee1(a, x, y), vee2(a, x, y)
            else:
                j1, j2 = vee1(a, y, x), vee2(a, y, x)
            if mu[a.arrow[x][y]] != a.arrow[mu[j1]][mu[y]]:
                return ("is2" if kind == "I" else "is2'", (x, y))
            if mu[a.squig[x][y]] != a.squig[mu[j2]][mu[y]]:
                return ("is2" if kind == "I" else "is2'", (x, y))
    for x in range(a.size):
        for y in range(a.size):
            if mu[a.arrow[mu[x]][mu[y]]] != a.arrow[mu[x]][mu[y]]:
                return ("is3", (x, y))
            if mu[a.squig[mu[x]][mu[y]]] != a.squig[mu[x]][mu[y]]:
                return ("is3", (x, y))
    return None


def is_internal_state(a: FiniteAlgebra, mu: UnaryOperator, kind: str) -> bool:
    return internal_state_witness(a, mu, kind) is None


def enumerate_internal_states(
    a: FiniteAlgebra, kind: str, audit: bool = False
) -> tuple[UnaryOperator, ...]:
    """All internal states of the given kind, in lexicographic map order.

    Maps with mu(1) != 1 are pruned when condition (A) holds (where the
    theory proves mu(1)=1); ``audit=True`` always scans all n^n maps.
    """
    n = a.size
    if n ** n > ENUM_GUARD:
        raise SizeGuardError(f"{n}^{n} maps exceeds the enumeration guard")
    prune_unit = (not audit) and check_axioms(a, "condition-A").holds
    out = []
    for mu in itertools.product(range(n), repeat=n):
        if prune_unit and mu[a.unit] != a.unit:
            continue
        if is_internal_state(a, mu, kind):
            out.append(mu)
    return tuple(out)


def smo_witness(a: FiniteAlgebra, mu: UnaryOperator) -> Optional[Witness]:
    """Endomorphism + idempotence; first failing pair, or None."""
    for x in range(a.size):
        for y in range(a.size):
            if mu[a.arrow[x][y]] != a.arrow[mu[x]][mu[y]]:
                return ("hom-arrow", (x, y))
            if mu[a.squig[x][y]] != a.squig[mu[x]][mu[y]]:
                return ("hom-squig", (x, y))
    for x in range(a.size):
        if mu[mu[x]] != mu[x]:
            return ("idempotent", (x,))
    return None


def is_smo(a: FiniteAlgebra, mu: UnaryOperator) -> bool:
    return smo_witness(a, mu) is None


def enumerate_smo(a: FiniteAlgebra) -> tuple[UnaryOperator, ...]:
    """All state-morphism operators, in lexicographic map order."""
    n = a.size
    if n ** n > ENUM_GUARD:
        raise SizeGuardError(f"{n}^{n} maps exceeds the enumeration guard")
    return tuple(
        mu for mu in itertools.product(range(n), repeat=n) if is_smo(a, mu)
    )


def kernel_image(a: FiniteAlgebra, mu: UnaryOperator) -> tuple[Subset, Subset]:
    """(Ker(mu), Im(mu)) for an internal state on a condition-(A) algebra
    or a state-morphism operator.

    On condition-(A) internal states the structural facts Ker in DS(A),
    Im closed under both implications, and Ker n Im = {1} are asserted.
    """
    cond_a = check_axioms(a, "condition-A").holds
    internal = cond_a and (
        is_internal_state(a, mu, "I") or is_internal_state(a, mu, "II")
    )
    if not internal and not is_smo(a, mu):
        raise PreconditionError(
            "operator is neither an internal state on a condition-(A) algebra "
            "nor a state-morphism operator"
        )
    ker = frozenset(x for x in range(a.size) if mu[x] == a.unit)
    img = frozenset(mu)
    if internal:
        assert is_deductive_system(a, ker)
        for x in img:
            for y in img:
                assert a.arrow[x][y] in img and a.squig[x][y] in img
        assert ker & img == {a.unit}
    return ker, img


def as_endomorphism(a: FiniteAlgebra, mu: UnaryOperator) -> Homomorphism:
    return Homomorphism(a, a, mu)


def format_operator(a: FiniteAlgebra, mu: UnaryOperator) -> str:
    """One ``map tok->tok`` line per element, in carrier order."""
    return "\n".join(f"map {a.token(x)}->{a.token(mu[x])}" for x in range(a.size))


def parse_operator(a: FiniteAlgebra, text: str) -> UnaryOperator:
    mapping: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] != "map" or "->" not in parts[1]:
            raise ValueError(f"bad operator line: {raw!r}")
        src, tgt = parts[1].split("->", 1)
        mapping[a.index(src)] = a.index(tgt)
    if set(mapping) != set(range(a.size)):
        raise ValueError("operator file does not cover the whole carrier")
    return tuple(mapping[x] for x in range(a.size))
