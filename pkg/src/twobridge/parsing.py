"""Parsings of expanded even vectors and the strict order they witness.

A vector a parses with respect to a nonempty vector b when

    a = (b, c_1, e_2*b', c_2, e_3*b, ..., e_n*b)

where b' is b reversed, tiles alternate between b and b' with signs
e_i in {+1, -1} (e_1 = +1, so a literally starts with b), n is odd, and
each connector c_i is an even integer contributing the vector (0) when
zero and otherwise sign(c_i) * (2, 0, 2, ..., 0, 2) summing to c_i.  A
zero connector forces equal signs on the tiles it joins.

A parsing with fold n >= 3 witnesses that the knot of a is strictly
greater than the knot of b in the epimorphism order; the 1-fold parsing
is just a = b.  Because a parsing of a with respect to b forces b to be
a prefix of a, and any parsing survives negating or reversing both
vectors at once, the knots strictly below a given knot can be collected
by scanning the even-length prefixes of the four representatives of its
vector class.

Vectors assembled from 2P+1 never-negated tiles with two alternating
connectors m, n play a special role: for such a vector, built from its
shortest generator, the vectors it parses with respect to are exactly
the assemblies over divisors of the tile count together with whatever
the generator itself parses with respect to.  That yields a fast
divisor-based route to the strictly-smaller set which agrees with the
prefix scan wherever both apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .rationals import KnotClass
from .vectors import SEvenVector, VectorClass, canonical_vector, knot_from_vector

__all__ = [
    "Parsing",
    "TwoConnectorForm",
    "assemble_two_connector",
    "connector_vector",
    "find_parsings",
    "is_strictly_greater",
    "minimal_upper_bound",
    "parses_with_respect_to",
    "smaller_knots",
    "two_connector_decompose",
]


def connector_vector(c: int) -> tuple[int, ...]:
    """The vector form of an even connector value."""
    if c % 2:
        raise ValueError(f"connector {c} is odd")
    if c == 0:
        return (0,)
    s = 2 if c > 0 else -2
    out = []
    for j in range(abs(c) // 2):
        if j:
            out.append(0)
        out.append(s)
    return tuple(out)


def _neg(entries: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-a for a in entries)


@dataclass(frozen=True)
class Parsing:
    """One way of writing a vector as alternating b-tiles and connectors."""

    base: SEvenVector
    signs: tuple[int, ...]
    connectors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "connectors", tuple(self.connectors))
        if self.base.is_empty:
            raise ValueError("parsing base must be nonempty")
        n = len(self.signs)
        if n % 2 == 0 or n < 1:
            raise ValueError(f"fold {n} must be odd")
        if len(self.connectors) != n - 1:
            raise ValueError("need exactly fold - 1 connectors")
        if self.signs[0] != 1:
            raise ValueError("first tile is unsigned b, so the first sign must be +1")
        for i, s in enumerate(self.signs):
            if s not in (1, -1):
                raise ValueError(f"sign {s} at tile {i + 1}")
        for i, c in enumerate(self.connectors, 1):
            if c % 2:
                raise ValueError(f"connector {c} at position {i} is odd")
            if c == 0 and self.signs[i - 1] != self.signs[i]:
                raise ValueError(f"zero connector {i} joins tiles of unequal sign")

    @property
    def fold(self) -> int:
        return len(self.signs)

    def tiles(self) -> Iterator[tuple[int, ...]]:
        fwd = self.base.entries
        bwd = fwd[::-1]
        for i, s in enumerate(self.signs, 1):
            tile = fwd if i % 2 else bwd
            yield tile if s == 1 else _neg(tile)

    def blocks(self) -> Iterator[tuple[int, ...]]:
        """Tiles and connector vectors in assembly order."""
        tiles = self.tiles()
        yield next(tiles)
        for c, tile in zip(self.connectors, tiles):
            yield connector_vector(c)
            yield tile

    def assemble(self) -> SEvenVector:
        out: list[int] = []
        for block in self.blocks():
            out.extend(block)
        return SEvenVector(tuple(out))

    def boundaries(self) -> tuple[int, ...]:
        """Interior block boundaries: cut-after-entry positions, 1-based."""
        cuts = []
        pos = 0
        blocks = list(self.blocks())
        for block in blocks[:-1]:
            pos += len(block)
            cuts.append(pos)
        return tuple(cuts)

    def to_json_dict(self) -> dict:
        return {
            "base": list(self.base.entries),
            "fold": self.fold,
            "signs": list(self.signs),
            "connectors": list(self.connectors),
        }


def _connector_reads(entries: tuple[int, ...], pos: int, limit: int) -> list[tuple[int, int]]:
    """Connector values readable at pos, as (value, length), lengths ascending.

    ``limit`` is the last position (exclusive) a connector may reach; a
    connector must leave room for the tile that follows it.
    """
    limit = min(limit, len(entries))
    if pos >= limit:
        return []
    a = entries[pos]
    if a == 0:
        return [(0, 1)]
    out = [(a, 1)]
    s = a
    j = pos + 1
    m = 1
    while j + 1 < limit and entries[j] == 0 and entries[j + 1] == s:
        m += 1
        out.append((s * m, 2 * m - 1))
        j += 2
    return out


def find_parsings(a: SEvenVector, b: SEvenVector) -> tuple[Parsing, ...]:
    """All parsings of a with respect to b, including the 1-fold a = b.

    Backtracking over connector reads and tile matches, with suffix
    completions memoized on (position, tile orientation, last sign).
    """
    ea, eb = a.entries, b.entries
    la, lb = len(ea), len(eb)
    if lb == 0:
        raise ValueError("parsing base must be nonempty")
    if lb > la or ea[:lb] != eb:
        return ()
    tiles = {
        (1, 1): eb,
        (1, -1): _neg(eb),
        (0, 1): eb[::-1],
        (0, -1): _neg(eb[::-1]),
    }
    memo: dict[tuple[int, int, int], tuple[tuple[tuple[int, int], ...], ...]] = {}

    def completions(pos: int, idx: int, prev_sign: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Ways to extend past tile #idx ending at pos, as ((connector, sign), ...) chains."""
        key = (pos, idx % 2, prev_sign)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: list[tuple[tuple[int, int], ...]] = []
        if pos == la and idx % 2 == 1:
            out.append(())
        parity = (idx + 1) % 2
        for c, clen in _connector_reads(ea, pos, la - lb):
            npos = pos + clen
            for s in (1, -1):
                if c == 0 and s != prev_sign:
                    continue
                if ea[npos : npos + lb] != tiles[(parity, s)]:
                    continue
                for rest in completions(npos + lb, idx + 1, s):
                    out.append(((c, s),) + rest)
        result = tuple(out)
        memo[key] = result
        return result

    parsings = []
    for chain in completions(lb, 1, 1):
        signs = (1,) + tuple(s for _, s in chain)
        conns = tuple(c for c, _ in chain)
        if len(signs) % 2 == 1:
            parsings.append(Parsing(b, signs, conns))
    parsings.sort(key=lambda p: (p.fold, p.connectors, p.signs))
    return tuple(parsings)


def parses_with_respect_to(a: SEvenVector, b: SEvenVector, min_fold: int = 3) -> bool:
    """True when some parsing of a with respect to b has fold >= min_fold.

    Early-exit variant of :func:`find_parsings` for existence checks.
    """
    ea, eb = a.entries, b.entries
    la, lb = len(ea), len(eb)
    if lb == 0 or lb > la or ea[:lb] != eb:
        return False
    if min_fold > 1 and la < min_fold * lb + (min_fold - 1):
        return False
    tiles = {
        (1, 1): eb,
        (1, -1): _neg(eb),
        (0, 1): eb[::-1],
        (0, -1): _neg(eb[::-1]),
    }
    seen: set[tuple[int, int, int]] = set()

    def search(pos: int, idx: int, prev_sign: int) -> bool:
        if pos == la and idx % 2 == 1 and idx >= min_fold:
            return True
        key = (pos, idx % 2, prev_sign)
        if key in seen:
            return False
        seen.add(key)
        parity = (idx + 1) % 2
        for c, clen in _connector_reads(ea, pos, la - lb):
            npos = pos + clen
            for s in (1, -1):
                if c == 0 and s != prev_sign:
                    continue
                if ea[npos : npos + lb] != tiles[(parity, s)]:
                    continue
                if search(npos + lb, idx + 1, s):
                    return True
        return False

    return search(lb, 1, 1)


def is_strictly_greater(j: VectorClass, k: VectorClass) -> bool:
    """Strict order on knots via their vector classes.

    True when some representative of j has a fold >= 3 parsing with
    respect to a representative of k.  A parsing survives negating or
    reversing both vectors at once, so the four representatives of j
    against one fixed representative of k cover all sixteen pairs.
    """
    if j == k:
        return False
    base = k.representative
    need = 3 * len(base) + 2
    for a in j.representatives():
        if len(a) < need:
            return False
        if parses_with_respect_to(a, base, min_fold=3):
            return True
    return False


@dataclass(frozen=True)
class TwoConnectorForm:
    """A vector as 2P+1 never-negated alternating tiles with connectors m, n.

    ``count`` = 2P+1 is the number of generator tiles (>= 3); connectors
    alternate m, n, ..., m, n between consecutive tiles.  The generator
    may be empty, in which case both connectors must be nonzero and the
    vector is just the 2P connector runs.
    """

    generator: SEvenVector
    m: int
    n: int
    count: int

    def __post_init__(self) -> None:
        if self.count < 3 or self.count % 2 == 0:
            raise ValueError(f"tile count {self.count} must be odd and >= 3")
        if self.m % 2 or self.n % 2:
            raise ValueError("connectors must be even")
        if self.generator.is_empty and (self.m == 0 or self.n == 0):
            raise ValueError("an empty generator needs nonzero connectors")

    def assemble(self) -> SEvenVector:
        return assemble_two_connector(self.generator, self.m, self.n, self.count)


def assemble_two_connector(g: SEvenVector, m: int, n: int, count: int) -> SEvenVector:
    """Assemble (g, m, g', n, g, m, g', n, ..., g) with count tiles, g' = g reversed."""
    if count < 1 or count % 2 == 0:
        raise ValueError(f"tile count {count} must be odd and positive")
    fwd = g.entries
    bwd = fwd[::-1]
    out: list[int] = []
    for i in range(1, count + 1):
        out.extend(fwd if i % 2 else bwd)
        if i < count:
            out.extend(connector_vector(m if i % 2 else n))
    return SEvenVector(tuple(out))


def two_connector_decompose(v: SEvenVector) -> Optional[TwoConnectorForm]:
    """The two-connector form of v built on its shortest generator, if any.

    Searches the empty generator first, then even generator lengths
    ascending; the first assembly that reproduces v wins.  The connector
    pair is unique when a form exists, and a generator found this way
    never decomposes again with the same connectors, so the returned
    form is the fully generated one.
    """
    entries = v.entries
    lv = len(entries)
    if lv == 0:
        return None

    # Empty generator: v must be P >= 1 repeats of the block (m-run, n-run).
    for m, mlen in _connector_reads(entries, 0, lv):
        if m == 0:
            continue
        for n, nlen in _connector_reads(entries, mlen, lv + 1):
            if n == 0:
                continue
            block = mlen + nlen
            if lv % block:
                continue
            reps = lv // block
            if entries == entries[:block] * reps:
                return TwoConnectorForm(SEvenVector(()), m, n, 2 * reps + 1)

    glen = 2
    while 3 * glen + 2 <= lv:
        g = entries[:glen]
        if g[-1] != 0:
            gv = SEvenVector(g)
            grev = g[::-1]
            for m, mlen in _connector_reads(entries, glen, lv):
                pos = glen + mlen
                if entries[pos : pos + glen] != grev:
                    continue
                for n, nlen in _connector_reads(entries, pos + glen, lv + 1):
                    period = 2 * glen + mlen + nlen
                    if (lv - glen) % period:
                        continue
                    reps = (lv - glen) // period
                    if reps < 1:
                        continue
                    count = 2 * reps + 1
                    if assemble_two_connector(gv, m, n, count).entries == entries:
                        return TwoConnectorForm(gv, m, n, count)
        glen += 2
    return None


def _odd_divisors_below(count: int) -> list[int]:
    return [d for d in range(1, count) if count % d == 0]


def smaller_knots(v: SEvenVector) -> frozenset[KnotClass]:
    """All nontrivial knots strictly below the knot of v.

    Two-connector vectors are handled by the divisor recursion on their
    generated form; everything else falls back to the complete prefix
    scan.  Both routes produce the same set where they overlap.
    """
    if v.is_empty:
        raise ValueError("the unknot has nothing below it")
    form = two_connector_decompose(v)
    if form is not None:
        return _smaller_from_form(form)
    return _smaller_by_prefix_scan(v)


def _smaller_from_form(form: TwoConnectorForm) -> frozenset[KnotClass]:
    out: set[KnotClass] = set()
    g = form.generator
    for d in _odd_divisors_below(form.count):
        if g.is_empty and d == 1:
            continue  # the bare tile is the empty vector: the unknot
        w = assemble_two_connector(g, form.m, form.n, d)
        out.add(knot_from_vector(w))
    if not g.is_empty:
        out |= smaller_knots(g)
        out.add(knot_from_vector(g))
    return frozenset(out)


def _smaller_by_prefix_scan(v: SEvenVector) -> frozenset[KnotClass]:
    out: set[KnotClass] = set()
    for a in canonical_vector(v).representatives():
        ea = a.entries
        la = len(ea)
        for blen in range(2, (la - 2) // 3 + 1, 2):
            if ea[blen - 1] == 0:
                continue
            if parses_with_respect_to(a, SEvenVector(ea[:blen]), min_fold=3):
                out.add(knot_from_vector(SEvenVector(ea[:blen])))
    return frozenset(out)


class NoCommonFamilyError(ValueError):
    """The inputs do not share a two-connector family, so the construction fails."""


def minimal_upper_bound(vectors: Sequence[SEvenVector]) -> SEvenVector:
    """The shortest vector parsing with respect to every input.

    The inputs must be pairwise incomparable members of one two-connector
    family g with fixed connectors; the bound is the assembly over the
    least common multiple of their tile counts.  A single input is its
    own bound.
    """
    if not vectors:
        raise ValueError("need at least one vector")
    if len(vectors) == 1:
        return vectors[0]
    forms = []
    for v in vectors:
        form = two_connector_decompose(v)
        if form is None:
            raise NoCommonFamilyError(f"{v} has no two-connector form")
        forms.append(form)
    families = {(f.generator.entries, f.m, f.n) for f in forms}
    if len(families) != 1:
        raise NoCommonFamilyError(
            "inputs do not share a common family: " + "; ".join(sorted(map(str, families)))
        )
    counts = [f.count for f in forms]
    for i, ci in enumerate(counts):
        for cj in counts[i + 1 :]:
            if ci % cj == 0 or cj % ci == 0:
                raise ValueError(
                    f"tile counts {ci} and {cj} divide one another; inputs must be incomparable"
                )
    first = forms[0]
    return assemble_two_connector(first.generator, first.m, first.n, math.lcm(*counts))
