"""Homomorphisms between finite two-implication algebras.

Verification, kernel/image, DS transport, and brute-force enumeration of
homomorphisms and isomorphisms between small algebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .algebra import FiniteAlgebra, leq
from .dsystems import Subset, is_deductive_system

SEARCH_GUARD = 10_000_000


class NotAHomomorphismError(ValueError):
    pass


class NotBijectiveError(ValueError):
    pass


class SizeGuardError(ValueError):
    pass


class PreconditionError(ValueError):
    """A stated hypothesis of the operation fails; names the failed check."""


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.map)) == len(self.map)


def identity_hom(a: FiniteAlgebra) -> Homomorphism:
    return Homomorphism(a, a, tuple(range(a.size)))


def hom_witness(f: Homomorphism) -> Optional[tuple[str, tuple[int, int]]]:
    """First pair where an operation is not preserved, or None."""
    a, b = f.source, f.target
    for x in range(a.size):
        for y in range(a.size):
            if f.map[a.arrow[x][y]] != b.arrow[f.map[x]][f.map[y]]:
                return ("arrow", (x, y))
            if f.map[a.squig[x][y]] != b.squig[f.map[x]][f.map[y]]:
                return ("squig", (x, y))
    return None


def is_homomorphism(f: Homomorphism) -> bool:
    return hom_witness(f) is None


def check_hom_properties(f: Homomorphism) -> dict[str, bool]:
    """Derived properties of a verified homomorphism: f(1)=1, monotone."""
    a, b = f.source, f.target
    unit_preserved = f.map[a.unit] == b.unit
    monotone = all(
        leq(b, f.map[x], f.map[y])
        for x in range(a.size)
        for y in range(a.size)
        if leq(a, x, y)
    )
    return {"preserves_unit": unit_preserved, "monotone": monotone}


def _require_hom(f: Homomorphism) -> None:
    w = hom_witness(f)
    if w is not None:
        op, (x, y) = w
        raise NotAHomomorphismError(
            f"{op} not preserved at ({f.source.token(x)},{f.source.token(y)})"
        )


def kernel(f: Homomorphism) -> Subset:
    """Preimage of the target unit."""
    _require_hom(f)
    return frozenset(x for x in range(f.source.size) if f.map[x] == f.target.unit)


def preimage_ds(f: Homomorphism, e: Subset) -> Subset:
    """f^{-1}(E); a DS of the source whenever E is a DS of the target."""
    _require_hom(f)
    if not is_deductive_system(f.target, e):
        raise PreconditionError("E is not a deductive system of the target")
    pre = frozenset(x for x in range(f.source.size) if f.map[x] in e)
    assert is_deductive_system(f.source, pre)
    return pre


def image_ds(f: Homomorphism, d: Subset) -> Subset:
    """f(D) for surjective f with Ker(f) <= D; a DS of the target."""
    _require_hom(f)
    if not is_deductive_system(f.source, d):
        raise PreconditionError("D is not a deductive system of the source")
    if set(f.map) != set(range(f.target.size)):
        raise PreconditionError("f is not surjective")
    if not kernel(f) <= d:
        raise PreconditionError("Ker(f) is not contained in D")
    img = frozenset(f.map[x] for x in d)
    assert is_deductive_system(f.target, img)
    return img


def enumerate_homomorphisms(
    a: FiniteAlgebra, b: FiniteAlgebra, iso_only: bool = False, audit: bool = False
) -> tuple[Homomorphism, ...]:
    """All homomorphisms A -> B in lexicographic map order.

    The default search forces f(1)=1 and backtracks with incremental
    operation-preservation checks; ``audit=True`` instead filters the full
    |B|^|A| product (for cross-checking the pruned search on tiny inputs).
    """
    if b.size ** a.size > SEARCH_GUARD:
        raise SizeGuardError(f"{b.size}^{a.size} maps exceeds the search guard")

    homs: list[Homomorphism] = []
    if audit:
        for m in itertools.product(range(b.size), repeat=a.size):
            f = Homomorphism(a, b, m)
            if is_homomorphism(f) and (not iso_only or _iso_ok(f)):
                homs.append(f)
        return tuple(homs)

    partial: list[Optional[int]] = [None] * a.size
    partial[a.unit] = b.unit

    def consistent(x: int) -> bool:
        for y in range(a.size):
            if partial[y] is None:
                continue
            for (p, q) in ((x, y), (y, x)):
                fp, fq = partial[p], partial[q]
                fa = partial[a.arrow[p][q]]
                if fa is not None and fa != b.arrow[fp][fq]:
                    return False
                fs = partial[a.squig[p][q]]
                if fs is not None and fs != b.squig[fp][fq]:
                    return False
        return True

    order = [x for x in range(a.size) if x != a.unit]

    def backtrack(i: int) -> None:
        if i == len(order):
            # the incremental check skips constraints whose value entry
            # was unassigned at the time; re-verify the complete map
            f = Homomorphism(a, b, tuple(partial))
            if is_homomorphism(f) and (not iso_only or _iso_ok(f)):
                homs.append(f)
            return
        x = order[i]
        for v in range(b.size):
            partial[x] = v
            if consistent(x):
                backtrack(i + 1)
            partial[x] = None

    backtrack(0)
    homs.sort(key=lambda f: f.map)
    return tuple(homs)


def _iso_ok(f: Homomorphism) -> bool:
    if not f.is_bijective():
        return False
    inv = [0] * f.target.size
    for x, y in enumerate(f.map):
        inv[y] = x
    return is_homomorphism(Homomorphism(f.target, f.source, tuple(inv)))


def format_hom(f: Homomorphism) -> str:
    """One ``hom src->tgt`` line per element, in carrier order."""
    return "\n".join(
        f"hom {f.source.token(x)}->{f.target.token(f.map[x])}"
        for x in range(f.source.size)
    )


def parse_hom(a: FiniteAlgebra, b: FiniteAlgebra, text: str) -> Homomorphism:
    mapping: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] != "hom" or "->" not in parts[1]:
            raise ValueError(f"bad hom line: {raw!r}")
        src, tgt = parts[1].split("->", 1)
        mapping[a.index(src)] = b.index(tgt)
    if set(mapping) != set(range(a.size)):
        raise ValueError("hom file does not cover the whole source carrier")
    return Homomorphism(a, b, tuple(mapping[x] for x in range(a.size)))
