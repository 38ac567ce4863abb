"""Expanded even vectors: the combinatorial normal form for 2-bridge knots.

An expanded even vector is a finite even-length sequence over {-2, 0, 2}
whose first and last entries are nonzero and in which every zero has
equal nonzero neighbors.  Expanding each even partial quotient 2m of an
all-even continued fraction into the run +/-(2, 0, 2, ..., 0, 2) with m
nonzero entries, and concatenating the runs, turns the continued
fraction normal form into such a vector; contraction (merging across
zeros) inverts the expansion.

Vectors are considered up to negation and reversal.  Evaluating a vector
as a continued fraction (integer part 0) and canonicalizing the result
is a bijection between vector classes and 2-bridge knots, so every knot
has exactly one vector class, and the crossing number can be read off
the vector: the sum of absolute entries minus the number of sign changes
in the sequence of nonzero entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .rationals import (
    EvenCF,
    KnotClass,
    canonical_fraction,
    evaluate_terms,
    even_expansion,
)

__all__ = [
    "SEvenVector",
    "VectorClass",
    "canonical_vector",
    "contract",
    "crossing_number",
    "expand",
    "knot_from_vector",
    "torus_vector",
    "vector_from_knot",
]

_ALLOWED = (-2, 0, 2)


@dataclass(frozen=True)
class SEvenVector:
    """An expanded even vector; the empty vector designates the unknot."""

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        if len(e) % 2:
            raise ValueError(f"length {len(e)} is odd")
        if e:
            if e[0] == 0 or e[-1] == 0:
                raise ValueError("first and last entries must be nonzero")
            for i, a in enumerate(e):
                if a not in _ALLOWED:
                    raise ValueError(f"entry {a} at index {i} not in {{-2, 0, 2}}")
                if a == 0 and e[i - 1] != e[i + 1]:
                    raise ValueError(
                        f"zero at index {i} needs equal nonzero neighbors, "
                        f"got {e[i - 1]} and {e[i + 1]}"
                    )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def negate(self) -> "SEvenVector":
        return SEvenVector(tuple(-a for a in self.entries))

    def reverse(self) -> "SEvenVector":
        return SEvenVector(self.entries[::-1])

    def orbit(self) -> tuple["SEvenVector", ...]:
        """The distinct vectors among {v, -v, reverse(v), -reverse(v)}."""
        seen: dict[tuple[int, ...], SEvenVector] = {}
        for v in (self, self.negate(), self.reverse(), self.negate().reverse()):
            seen.setdefault(v.entries, v)
        return tuple(seen.values())

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)

    @classmethod
    def parse(cls, text: str) -> "SEvenVector":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))


# Representative order: entries compare 2 < 0 < -2, so the class
# representative leads with positive entries.  Any fixed total order
# works; this one keeps the familiar positive spellings like (2,2).
_ENTRY_RANK = {2: 0, 0: 1, -2: 2}


def _rank(entries: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(_ENTRY_RANK[a] for a in entries)


@dataclass(frozen=True)
class VectorClass:
    """A vector up to negation and reversal, held by its fixed representative."""

    representative: SEvenVector

    def __post_init__(self) -> None:
        rep = min(self.representative.orbit(), key=lambda v: _rank(v.entries))
        if rep.entries != self.representative.entries:
            raise ValueError(
                f"{self.representative} is not the class representative ({rep} is)"
            )

    def representatives(self) -> tuple[SEvenVector, ...]:
        return self.representative.orbit()

    def __len__(self) -> int:
        return len(self.representative)

    def __str__(self) -> str:
        return str(self.representative)


def canonical_vector(v: SEvenVector) -> VectorClass:
    """The class of v, keyed by the minimum of its orbit under 2 < 0 < -2."""
    return VectorClass(min(v.orbit(), key=lambda w: _rank(w.entries)))


def expand(cf: Union[EvenCF, Iterable[int]]) -> SEvenVector:
    """Expand even partial quotients into an expanded even vector.

    Each term +/-2m becomes +/-(2, 0, 2, ..., 0, 2) with m nonzero
    entries; runs concatenate in order with nothing between them.
    """
    terms = cf.terms if isinstance(cf, EvenCF) else tuple(cf)
    out: list[int] = []
    for i, a in enumerate(terms, 1):
        if a == 0 or a % 2:
            raise ValueError(f"term {i} is {a}; expansion needs nonzero even terms")
        s = 2 if a > 0 else -2
        for j in range(abs(a) // 2):
            if j:
                out.append(0)
            out.append(s)
    return SEvenVector(tuple(out))


def contract(v: SEvenVector) -> tuple[int, ...]:
    """Merge entries across zeros, inverting :func:`expand`.

    Every zero has equal neighbors, so each merge grows the running term
    by the same sign and the result is a tuple of nonzero even integers.
    """
    out: list[int] = []
    merge = False
    for a in v.entries:
        if a == 0:
            merge = True
        elif merge:
            out[-1] += a
            merge = False
        else:
            out.append(a)
    return tuple(out)


def knot_from_vector(v: SEvenVector) -> KnotClass:
    """The 2-bridge knot represented by v (the bijection, vector side first).

    Evaluates [v] with integer part 0 and canonicalizes.  The empty
    vector is the unknot, which has no knot class.
    """
    if v.is_empty:
        raise ValueError("the empty vector is the unknot and has no knot class")
    return canonical_fraction(evaluate_terms(v.entries))


def vector_from_knot(k: KnotClass) -> VectorClass:
    """The vector class of a knot: expand the all-even form and canonicalize."""
    cf = even_expansion(k.canonical)
    return canonical_vector(expand(cf))


def crossing_number(v: SEvenVector) -> int:
    """Sum of absolute entries minus sign changes among nonzero entries."""
    if v.is_empty:
        raise ValueError("the empty vector has no crossing number")
    total = 0
    changes = 0
    prev = 0
    for a in v.entries:
        if a == 0:
            continue
        total += 2
        if prev and a != prev:
            changes += 1
        prev = a
    return total - changes


def torus_vector(q: int) -> SEvenVector:
    """The vector (2, -2, 2, -2, ...) of length q - 1 for the torus knot 1/q."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"torus knot needs odd q >= 3, got {q}")
    return SEvenVector(tuple(2 if i % 2 == 0 else -2 for i in range(q - 1)))
