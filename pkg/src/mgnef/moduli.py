"""Combinatorics of marked-genus pairs and boundary indices.

A moduli signature is a pair (g, T): genus plus a finite set of marking
labels.  Boundary indices name the one-node degenerations: the irreducible
node, or an unordered pair {(i, I), (j, J)} with i + j = g and I, J a
partition of T.  Everything here is immutable and hashable so boundary
indices can serve as dict keys for sparse divisor coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DuplicateLabel, InvalidPair, UnstableSignature


@dataclass(frozen=True, order=True)
class GenusMarking:
    """One side (i, I) of a separating boundary index."""

    genus: int
    labels: tuple[int, ...]  # sorted

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @property
    def label_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    def sort_key(self):
        return (self.genus, self.labels)

    def __str__(self):
        return "({},[{}])".format(self.genus, ",".join(map(str, self.labels)))


@dataclass(frozen=True)
class ModuliSignature:
    """The pair (g, T) identifying the space of T-pointed genus-g curves."""

    genus: int
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @property
    def label_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __str__(self):
        return "({},{{{}}})".format(self.genus, ",".join(map(str, self.labels)))


def validate_signature(g: int, labels) -> ModuliSignature:
    """Build a signature, enforcing stability 2g - 2 + |T| > 0."""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("marking labels must be distinct: {}".format(labels))
    if 2 * g - 2 + len(labels) <= 0:
        raise UnstableSignature(
            "2*{} - 2 + {} <= 0: no stable curves".format(g, len(labels))
        )
    if g < 0:
        raise UnstableSignature("genus must be non-negative")
    return ModuliSignature(g, tuple(labels))


def _marking_ok(i: int, labels: frozenset[int], g: int) -> bool:
    if not (0 <= i <= g):
        return False
    # the excluded markings (0, {}) and (0, {t})
    if i == 0 and len(labels) <= 1:
        return False
    return True


@dataclass(frozen=True)
class BoundaryIndex:
    """Either the irreducible node or a canonical separating pair."""

    pair: tuple[GenusMarking, GenusMarking] | None  # None encodes Irr

    @property
    def is_irr(self) -> bool:
        return self.pair is None

    def sort_key(self):
        if self.pair is None:
            return ((),)
        return (self.pair[0].sort_key(), self.pair[1].sort_key())

    def __str__(self):
        if self.pair is None:
            return "dirr"
        return "d{{{},{}}}".format(self.pair[0], self.pair[1])


IRR = BoundaryIndex(None)


def canonical_pair(m1: GenusMarking, m2: GenusMarking, sig: ModuliSignature) -> BoundaryIndex:
    """Validate {m1, m2} as a separating index of sig and order it canonically."""
    g, T = sig.genus, sig.label_set
    if m1.genus + m2.genus != g:
        raise InvalidPair("genus parts {} + {} != {}".format(m1.genus, m2.genus, g))
    s1, s2 = m1.label_set, m2.label_set
    if s1 & s2 or (s1 | s2) != T:
        raise InvalidPair("label sets {} | {} do not partition T = {}".format(s1, s2, set(T)))
    for m in (m1, m2):
        if not _marking_ok(m.genus, m.label_set, g):
            raise InvalidPair("excluded marking {}".format(m))
    first, second = sorted((m1, m2), key=GenusMarking.sort_key)
    return BoundaryIndex((first, second))


def enumerate_upsilon(sig: ModuliSignature) -> list[GenusMarking]:
    """All admissible (i, I), i ascending then sorted labels lexicographic."""
    out = []
    labels = sorted(sig.labels)
    for i in range(sig.genus + 1):
        subsets = []
        for k in range(len(labels) + 1):
            for sub in combinations(labels, k):
                subsets.append(sub)
        for sub in sorted(subsets):
            if _marking_ok(i, frozenset(sub), sig.genus):
                out.append(GenusMarking(i, sub))
    return out


def enumerate_boundary(sig: ModuliSignature) -> list[BoundaryIndex]:
    """Irr followed by every separating index, each unordered pair once."""
    seen = set()
    seps = []
    T = sig.label_set
    for m in enumerate_upsilon(sig):
        partner = GenusMarking(sig.genus - m.genus, tuple(T - m.label_set))
        if not _marking_ok(partner.genus, partner.label_set, sig.genus):
            continue
        idx = canonical_pair(m, partner, sig)
        if idx not in seen:
            seen.add(idx)
            seps.append(idx)
    seps.sort(key=BoundaryIndex.sort_key)
    return [IRR] + seps


def halving_weight(upsilon: BoundaryIndex, sig: ModuliSignature) -> Fraction:
    """Cycle-class normalization: 1/2 on {(1, {}), (g-1, T)}, else 1.

    Metadata only; divisor coordinates elsewhere always refer to the
    normalized delta classes.
    """
    if upsilon.is_irr:
        return Fraction(1)
    distinguished = BoundaryIndex(
        tuple(
            sorted(
                (
                    GenusMarking(1, ()),
                    GenusMarking(sig.genus - 1, tuple(sig.labels)),
                ),
                key=GenusMarking.sort_key,
            )
        )
    )
    return Fraction(1, 2) if upsilon == distinguished else Fraction(1)


def sep_index(sig: ModuliSignature, i: int, labels_i, j: int, labels_j) -> BoundaryIndex:
    """Convenience constructor from raw parts."""
    return canonical_pair(
        GenusMarking(i, tuple(labels_i)), GenusMarking(j, tuple(labels_j)), sig
    )
