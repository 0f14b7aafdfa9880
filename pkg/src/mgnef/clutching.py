"""Pullbacks along the clutching maps and their closed-form decompositions.

The index surgery is organized by SOURCE boundary index: each source index
is classified (attachment labels together or apart) and the matching
TARGET coefficient is looked up.  This mirrors how the printed coefficient
formulas are grouped and avoids multi-valued preimages.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .divisors import (
    D_IRR,
    LAM,
    DivisorClass,
    MuCoordinates,
    basis_sort_key,
    d_sep,
    psi,
)
from .errors import (
    BadSplit,
    DependentGenerators,
    GenusTooSmall,
    NotInSpan,
    SpecMismatch,
)
from .moduli import (
    GenusMarking,
    ModuliSignature,
    canonical_pair,
    enumerate_boundary,
    validate_signature,
)


@dataclass(frozen=True)
class AlphaMapSpec:
    """Gluing a point of the left factor to a point of the right factor."""

    left: ModuliSignature
    left_label: int
    right: ModuliSignature
    right_label: int

    def __post_init__(self):
        if self.left_label not in self.left.label_set:
            raise SpecMismatch("attachment label {} not on {}".format(self.left_label, self.left))
        if self.right_label not in self.right.label_set:
            raise SpecMismatch("attachment label {} not on {}".format(self.right_label, self.right))
        if self.left.label_set & self.right.label_set:
            raise SpecMismatch("left and right label sets must be disjoint")

    @property
    def left_rest(self) -> tuple[int, ...]:
        return tuple(l for l in self.left.labels if l != self.left_label)

    @property
    def right_rest(self) -> tuple[int, ...]:
        return tuple(l for l in self.right.labels if l != self.right_label)

    @property
    def target(self) -> ModuliSignature:
        return validate_signature(
            self.left.genus + self.right.genus, self.left_rest + self.right_rest
        )


@dataclass(frozen=True)
class BetaMapSpec:
    """Identifying the two extra marked points of the source, genus up by one."""

    target: ModuliSignature
    fresh: tuple[int, int]

    def __post_init__(self):
        t, tp = self.fresh
        if t == tp:
            raise SpecMismatch("the two fresh labels must be distinct")
        if t in self.target.label_set or tp in self.target.label_set:
            raise SpecMismatch("fresh labels collide with target labels")

    @property
    def source(self) -> ModuliSignature:
        return validate_signature(self.target.genus - 1, self.target.labels + self.fresh)


def _sep_coeff(D: DivisorClass, sig: ModuliSignature, m1: GenusMarking, m2: GenusMarking):
    return D.coeff(d_sep(canonical_pair(m1, m2, sig)))


def alpha_pullback(spec: AlphaMapSpec, D: DivisorClass):
    """Split the target class into its two factor components (E, F)."""
    target = spec.target
    if D.sig != target:
        raise SpecMismatch("class lives on {}, map targets {}".format(D.sig, target))
    node_coeff = _sep_coeff(
        D,
        target,
        GenusMarking(spec.left.genus, spec.left_rest),
        GenusMarking(spec.right.genus, spec.right_rest),
    )

    def component(side: ModuliSignature, attach: int, other: ModuliSignature, other_rest):
        coords = {
            LAM: D.coeff(LAM),
            D_IRR: D.coeff(D_IRR),
            psi(attach): -node_coeff,
        }
        for l in side.labels:
            if l != attach:
                coords[psi(l)] = D.coeff(psi(l))
        for idx in enumerate_boundary(side):
            if idx.is_irr:
                continue
            m1, m2 = idx.pair
            if attach in m1.label_set:
                m1, m2 = m2, m1
            # attach sits in m2; bump that part by the other factor
            bumped = GenusMarking(
                m2.genus + other.genus,
                tuple((m2.label_set - {attach}) | frozenset(other_rest)),
            )
            coords[d_sep(idx)] = _sep_coeff(D, target, m1, bumped)
        return DivisorClass(side, coords)

    E = component(spec.left, spec.left_label, spec.right, spec.right_rest)
    F = component(spec.right, spec.right_label, spec.left, spec.left_rest)
    return E, F


def beta_pullback(spec: BetaMapSpec, D: DivisorClass) -> DivisorClass:
    """Pull a target class back along the genus-raising clutching map."""
    target = spec.target
    if D.sig != target:
        raise SpecMismatch("class lives on {}, map targets {}".format(D.sig, target))
    source = spec.source
    t, tp = spec.fresh
    e_irr = D.coeff(D_IRR)
    coords = {
        LAM: D.coeff(LAM),
        D_IRR: e_irr,
        psi(t): -e_irr,
        psi(tp): -e_irr,
    }
    for l in target.labels:
        coords[psi(l)] = D.coeff(psi(l))
    from .moduli import enumerate_boundary

    for idx in enumerate_boundary(source):
        if idx.is_irr:
            continue
        m1, m2 = idx.pair
        both = {t, tp}
        if both <= m1.label_set:
            m1, m2 = m2, m1
        if both <= m2.label_set:
            bumped = GenusMarking(m2.genus + 1, tuple(m2.label_set - both))
            coords[d_sep(idx)] = _sep_coeff(D, target, m1, bumped)
        elif t in m1.label_set and tp in m2.label_set or tp in m1.label_set and t in m2.label_set:
            coords[d_sep(idx)] = e_irr
        else:
            raise AssertionError("source index missing the fresh labels: {}".format(idx))
    return DivisorClass(source, coords)


def decompose(D: DivisorClass, generators) -> list[Fraction]:
    """Exact coefficients of D over independent generators, or NotInSpan.

    Deterministic fraction-free style elimination: rows are basis elements
    in canonical order, pivots are the first nonzero entry per column.
    """
    generators = list(generators)
    sig = D.sig
    for G in generators:
        if G.sig != sig:
            raise SpecMismatch("generator on {}, class on {}".format(G.sig, sig))
    rows = set(D.coords)
    for G in generators:
        rows.update(G.coords)
    rows = sorted(rows, key=basis_sort_key)
    k = len(generators)
    # augmented matrix [A | y], one row per basis element
    mat = [[G.coeff(r) for G in generators] + [D.coeff(r)] for r in rows]
    pivots = []
    used = set()
    for col in range(k):
        piv = None
        for ri in range(len(mat)):
            if ri not in used and mat[ri][col] != 0:
                piv = ri
                break
        if piv is None:
            raise DependentGenerators("generator {} depends on the earlier ones".format(col))
        used.add(piv)
        pivots.append(piv)
        pv = mat[piv][col]
        for ri in range(len(mat)):
            if ri == piv or mat[ri][col] == 0:
                continue
            f = mat[ri][col] / pv
            for cj in range(col, k + 1):
                mat[ri][cj] -= f * mat[piv][cj]
    for ri, row in enumerate(mat):
        if ri not in used and row[k] != 0:
            raise NotInSpan(
                "no combination matches coordinate {}".format(rows[ri]), witness=rows[ri]
            )
    # back substitution is immediate: each pivot row is diagonal in its column
    coeffs = [Fraction(0)] * k
    for col, piv in enumerate(pivots):
        coeffs[col] = mat[piv][k] / mat[piv][col]
    return coeffs


@dataclass(frozen=True)
class BetaDecomposition:
    """Coefficients of a pulled-back class over (mu', theta', sigma, d_i)."""

    mu_coeff: Fraction
    theta_coeff: Fraction
    sigma_coeff: Fraction
    deltas: tuple[Fraction, ...]

    def as_list(self):
        return [self.mu_coeff, self.theta_coeff, self.sigma_coeff, *self.deltas]


def beta_star_closed_form(g: int, m: MuCoordinates, printed_alpha: bool = False) -> BetaDecomposition:
    """Closed-form decomposition of the genus-raising pullback.

    The mu' numerator as printed, (g-1)(g-2)(2g-1)a - 3b_irr, is
    inconsistent with the generic pullback; the default uses the
    corrected numerator (g-1)*g*(2g-1)*a - 3b_irr.  Set printed_alpha to
    reproduce the printed variant.
    """
    if g < 3:
        raise GenusTooSmall("closed form needs g >= 3")
    if m.g != g:
        raise SpecMismatch("coordinates are for genus {}".format(m.g))
    a, b_irr = m.a, m.b_irr
    mid = (g - 2) if printed_alpha else g
    alpha = Fraction((g - 1) * mid * (2 * g - 1) * a - 3 * b_irr, g * (g - 2) * (2 * g - 1))
    beta = Fraction(a * g - b_irr, g * (g - 2))
    s_coeff = Fraction((g - 1) * (2 * g + 1) * b_irr, g * (2 * g - 1))
    deltas = tuple(
        m.b_split(i, g - i) - Fraction(4 * i * (2 * i + 1), g * (2 * g - 1)) * b_irr
        for i in range(1, g)
    )
    return BetaDecomposition(alpha, beta, s_coeff, deltas)


@dataclass(frozen=True)
class AlphaComponentCoefficients:
    """Coefficients of one factor component over (mu'_e, theta'_e, dirr, d_l)."""

    mu_coeff: Fraction
    theta_coeff: Fraction
    irr_coeff: Fraction
    deltas: tuple[Fraction, ...]

    def as_list(self):
        return [self.mu_coeff, self.theta_coeff, self.irr_coeff, *self.deltas]


def alpha_star_closed_form(g: int, s: int, t: int, m: MuCoordinates):
    """Closed-form coefficients of both components of the two-factor pullback."""
    if g < 3:
        raise GenusTooSmall("closed form needs g >= 3")
    if s + t != g or s < 1 or t < 1:
        raise BadSplit("need s + t = g with both parts >= 1, got ({}, {})".format(s, t))
    if m.g != g:
        raise SpecMismatch("coordinates are for genus {}".format(m.g))
    a, b_irr = m.a, m.b_irr
    b_st = m.b_split(s, t)

    def component(e: int) -> AlphaComponentCoefficients:
        w = e * (2 * e + 1)
        return AlphaComponentCoefficients(
            Fraction(4 * (g - 1) * w * a - 3 * b_st, 4 * w),
            Fraction(4 * s * t * a - b_st, 4 * e),
            b_irr - Fraction(b_st, 4 * w),
            tuple(
                m.b_split(l, g - l) - Fraction(l * (2 * l + 1), w) * b_st
                for l in range(1, e)
            ),
        )

    return component(s), component(t)


def genus_one_point_reduction(D: DivisorClass) -> Fraction:
    """Length of a class on a one-pointed genus-one space along dirr.

    The free basis is degenerate there: lambda and psi both equal dirr/12
    on the actual Picard group.  Used only to close the oracle loop for
    split parts of size one, where the scaled slope generators vanish.
    """
    sig = D.sig
    if sig.genus != 1 or sig.n != 1:
        raise SpecMismatch("reduction only applies on one-pointed genus-one spaces")
    extra = set(D.coords) - {LAM, D_IRR, psi(sig.labels[0])}
    if extra:
        raise SpecMismatch("unexpected coordinates: {}".format(extra))
    return (
        Fraction(D.coeff(LAM), 12)
        + Fraction(D.coeff(psi(sig.labels[0])), 12)
        + D.coeff(D_IRR)
    )


def standard_beta_spec(g: int) -> BetaMapSpec:
    """The map from the two-pointed genus g-1 space onto the unmarked space."""
    if g < 3:
        raise GenusTooSmall("needs g >= 3")
    return BetaMapSpec(validate_signature(g, ()), (1, 2))


def standard_alpha_spec(g: int, s: int, t: int) -> AlphaMapSpec:
    """The map gluing (s,{1}) to (t,{2}) onto the unmarked genus-g space."""
    if s + t != g or s < 1 or t < 1:
        raise BadSplit("need s + t = g with both parts >= 1, got ({}, {})".format(s, t))
    return AlphaMapSpec(validate_signature(s, (1,)), 1, validate_signature(t, (2,)), 2)
