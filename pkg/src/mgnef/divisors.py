"""Exact rational divisor classes on moduli of pointed stable curves.

Coordinates live in the free basis {lambda, psi_t, delta_irr, delta_v}
attached to one signature.  The basis is treated as linearly free, which
is correct for g >= 3; low-genus relations are deliberately not modeled
and operations that would need them reject small genus instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    GenusTooSmall,
    SignatureMismatch,
    UnsupportedBasisElement,
    WrongHomeSpace,
)
from .moduli import (
    IRR,
    BoundaryIndex,
    GenusMarking,
    ModuliSignature,
    enumerate_boundary,
    sep_index,
)

# Basis elements are plain tagged tuples so they sort and hash cheaply:
#   ("lam",) < ("psi", t) < ("irr",) < ("sep", index-sort-key, index)
LAM = ("lam",)
D_IRR = ("irr",)


def psi(t: int):
    return ("psi", t)


def d_sep(idx: BoundaryIndex):
    return ("sep", idx)


_TAG_ORDER = {"lam": 0, "psi": 1, "irr": 2, "sep": 3}


def basis_sort_key(elem):
    tag = elem[0]
    if tag == "lam" or tag == "irr":
        return (_TAG_ORDER[tag],)
    if tag == "psi":
        return (1, elem[1])
    return (3,) + elem[1].sort_key()


class DivisorClass:
    """Sparse exact-rational coordinate record over one signature."""

    __slots__ = ("sig", "coords")

    def __init__(self, sig: ModuliSignature, coords=None):
        self.sig = sig
        clean = {}
        for k, v in (coords or {}).items():
            v = Fraction(v)
            if v != 0:
                clean[k] = v
        self.coords = clean

    def coeff(self, elem) -> Fraction:
        return self.coords.get(elem, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coords

    def items(self):
        return sorted(self.coords.items(), key=lambda kv: basis_sort_key(kv[0]))

    def __eq__(self, other):
        return (
            isinstance(other, DivisorClass)
            and self.sig == other.sig
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.sig, tuple(self.items())))

    def __add__(self, other):
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other):
        return linear_combine([(1, self), (-1, other)])

    def __rmul__(self, c):
        return linear_combine([(c, self)])

    def __neg__(self):
        return linear_combine([(-1, self)])

    def __repr__(self):
        return "DivisorClass({}, {})".format(self.sig, render(self))


def zero(sig: ModuliSignature) -> DivisorClass:
    return DivisorClass(sig, {})


def linear_combine(pairs) -> DivisorClass:
    """Exact linear combination; all classes must share one signature."""
    pairs = list(pairs)
    if not pairs:
        raise SignatureMismatch("empty combination has no signature")
    sig = pairs[0][1].sig
    acc: dict = {}
    for c, D in pairs:
        if D.sig != sig:
            raise SignatureMismatch("{} vs {}".format(D.sig, sig))
        c = Fraction(c)
        for k, v in D.coords.items():
            acc[k] = acc.get(k, Fraction(0)) + c * v
    return DivisorClass(sig, acc)


def gamma_L(L, upsilon: BoundaryIndex) -> int:
    """Determinant coefficient (d + |L&I|)(d - |L&J|), d = i|L&J| - j|L&I|.

    Symmetric in the two markings of the pair.
    """
    L = frozenset(L)
    (m1, m2) = upsilon.pair
    i, j = m1.genus, m2.genus
    li = len(L & m1.label_set)
    lj = len(L & m2.label_set)
    d = i * lj - j * li
    return (d + li) * (d - lj)


def theta(sig: ModuliSignature, L) -> DivisorClass:
    """The pointed slope class for a subset L of the markings."""
    L = frozenset(L)
    if not L <= sig.label_set:
        raise WrongHomeSpace("L = {} is not a subset of T = {}".format(set(L), set(sig.label_set)))
    g = sig.genus
    nL = len(L)
    coords = {LAM: Fraction(-12 * nL * nL), D_IRR: Fraction(nL * nL)}
    for t in L:
        coords[psi(t)] = Fraction(4 * (g - 1 + nL) * (g - 1))
    for idx in enumerate_boundary(sig):
        if idx.is_irr:
            continue
        coords[d_sep(idx)] = Fraction(-4 * gamma_L(L, idx))
    return DivisorClass(sig, coords)


def mu(sig: ModuliSignature) -> DivisorClass:
    """(8g+4)*lambda - g*dirr - sum 4ij over all separating indices."""
    g = sig.genus
    coords = {LAM: Fraction(8 * g + 4), D_IRR: Fraction(-g)}
    for idx in enumerate_boundary(sig):
        if idx.is_irr:
            continue
        i, j = idx.pair[0].genus, idx.pair[1].genus
        coords[d_sep(idx)] = Fraction(-4 * i * j)
    return DivisorClass(sig, coords)


def _one_point_delta(sig: ModuliSignature, i: int) -> BoundaryIndex:
    # delta_i on (g,{1}): {(i, {}), (g-i, {1})}
    return sep_index(sig, i, (), sig.genus - i, (sig.labels[0],))


def theta1(sig: ModuliSignature) -> DivisorClass:
    """The one-pointed slope class 4g(g-1)psi - 12*lambda + dirr - sum 4i(i-1)d_i."""
    if sig.n != 1:
        raise WrongHomeSpace("theta1 lives on one-pointed spaces")
    g = sig.genus
    t = sig.labels[0]
    coords = {
        psi(t): Fraction(4 * g * (g - 1)),
        LAM: Fraction(-12),
        D_IRR: Fraction(1),
    }
    for i in range(1, g):
        coords[d_sep(_one_point_delta(sig, i))] = Fraction(-4 * i * (i - 1))
    return DivisorClass(sig, coords)


def _two_point_indices(sig: ModuliSignature):
    """(delta_i for 1<=i<=g, sigma_i for 1<=i<=g-1) on (g,{1,2})."""
    g = sig.genus
    a, b = sig.labels
    deltas = {i: sep_index(sig, i, (), g - i, (a, b)) for i in range(1, g + 1)}
    sigmas = {i: sep_index(sig, i, (a,), g - i, (b,)) for i in range(1, g)}
    return deltas, sigmas


def theta12(sig: ModuliSignature) -> DivisorClass:
    """The rescaled two-pointed slope class (the theta(sig, T)/4 display)."""
    if sig.n != 2:
        raise WrongHomeSpace("theta12 needs exactly two markings")
    g = sig.genus
    a, b = sig.labels
    deltas, sigmas = _two_point_indices(sig)
    coords = {
        psi(a): Fraction((g - 1) * (g + 1)),
        psi(b): Fraction((g - 1) * (g + 1)),
        LAM: Fraction(-12),
        D_IRR: Fraction(1),
    }
    for i in range(1, g):
        coords[d_sep(sigmas[i])] = Fraction(-(2 * i - g - 1) * (2 * i - g + 1))
    for i in range(1, g + 1):
        coords[d_sep(deltas[i])] = Fraction(-4 * i * (i - 1))
    return DivisorClass(sig, coords)


def sigma(sig: ModuliSignature) -> DivisorClass:
    """dirr + sum of the sigma_i on (g,{1,2})."""
    if sig.n != 2:
        raise WrongHomeSpace("sigma needs exactly two markings")
    _, sigmas = _two_point_indices(sig)
    coords = {D_IRR: Fraction(1)}
    for idx in sigmas.values():
        coords[d_sep(idx)] = Fraction(1)
    return DivisorClass(sig, coords)


def mu_prime(sig: ModuliSignature) -> DivisorClass:
    """(8g+4)*lambda - g*sigma - sum 4i(g-i)d_i on (g,{1,2})."""
    if sig.n != 2:
        raise WrongHomeSpace("mu_prime needs exactly two markings")
    g = sig.genus
    deltas, _ = _two_point_indices(sig)
    out = linear_combine(
        [
            (8 * g + 4, DivisorClass(sig, {LAM: 1})),
            (-g, sigma(sig)),
        ]
    )
    extra = {d_sep(deltas[i]): Fraction(-4 * i * (g - i)) for i in range(1, g + 1)}
    return out + DivisorClass(sig, extra)


def theta12_prime(sig: ModuliSignature) -> DivisorClass:
    """(g-1)(g+1)(psi1+psi2) - 12*lambda + sigma - sum 4i(i-1)d_i on (g,{1,2})."""
    if sig.n != 2:
        raise WrongHomeSpace("theta12_prime needs exactly two markings")
    g = sig.genus
    a, b = sig.labels
    deltas, _ = _two_point_indices(sig)
    coords = {
        psi(a): Fraction((g - 1) * (g + 1)),
        psi(b): Fraction((g - 1) * (g + 1)),
        LAM: Fraction(-12),
    }
    for i in range(1, g + 1):
        coords[d_sep(deltas[i])] = Fraction(-4 * i * (i - 1))
    return DivisorClass(sig, coords) + sigma(sig)


def mu_prime_e(sig: ModuliSignature) -> DivisorClass:
    """The 1/(e-1)-scaled slope generator on (e,{1}); zero when e = 1."""
    if sig.n != 1:
        raise WrongHomeSpace("mu_prime_e lives on one-pointed spaces")
    e = sig.genus
    if e == 1:
        return zero(sig)
    coords = {LAM: Fraction(8 * e + 4, e - 1), D_IRR: Fraction(-e, e - 1)}
    for l in range(1, e):
        coords[d_sep(_one_point_delta(sig, l))] = Fraction(-4 * l * (e - l), e - 1)
    return DivisorClass(sig, coords)


def theta_prime_e(sig: ModuliSignature) -> DivisorClass:
    """The 1/(e-1)-scaled pointed slope generator on (e,{1}); zero when e = 1."""
    if sig.n != 1:
        raise WrongHomeSpace("theta_prime_e lives on one-pointed spaces")
    e = sig.genus
    if e == 1:
        return zero(sig)
    return Fraction(1, e - 1) * theta1(sig)


_NAMED = {
    "mu": mu,
    "theta1": theta1,
    "theta12": theta12,
    "sigma": sigma,
    "mu_prime": mu_prime,
    "theta_prime": theta12_prime,
    "mu_dprime": mu_prime,
    "theta12_dprime": theta12_prime,
    "mu_prime_e": mu_prime_e,
    "theta_prime_e": theta_prime_e,
}


def named_class(name: str, sig: ModuliSignature) -> DivisorClass:
    if name not in _NAMED:
        raise WrongHomeSpace("unknown named class {!r}".format(name))
    return _NAMED[name](sig)


@dataclass(frozen=True)
class MuCoordinates:
    """A class a*mu + b_irr*dirr + sum b_i*d_i on the unmarked space."""

    g: int
    a: Fraction
    b_irr: Fraction
    b: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b_irr", Fraction(self.b_irr))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        if len(self.b) != self.g // 2:
            raise ValueError(
                "expected {} chain coefficients, got {}".format(self.g // 2, len(self.b))
            )

    def b_split(self, s: int, t: int) -> Fraction:
        """Coefficient attached to the split {s, t}, s + t = g."""
        return self.b[min(s, t) - 1]

    def scale(self, c) -> "MuCoordinates":
        c = Fraction(c)
        return MuCoordinates(self.g, c * self.a, c * self.b_irr, tuple(c * x for x in self.b))


def _unmarked_delta(sig: ModuliSignature, i: int) -> BoundaryIndex:
    return sep_index(sig, i, (), sig.genus - i, ())


def to_mu_basis(D: DivisorClass) -> MuCoordinates:
    """Rewrite a class on (g, {}) in the (mu, dirr, d_i) coordinates."""
    sig = D.sig
    g = sig.genus
    if sig.n != 0:
        raise UnsupportedBasisElement("mu coordinates live on unmarked spaces")
    if g < 3:
        raise GenusTooSmall("mu coordinates need g >= 3")
    for elem in D.coords:
        if elem[0] == "psi":
            raise UnsupportedBasisElement("psi class present: {}".format(elem))
    a = D.coeff(LAM) / (8 * g + 4)
    b_irr = D.coeff(D_IRR) + a * g
    b = tuple(
        D.coeff(d_sep(_unmarked_delta(sig, i))) + a * 4 * i * (g - i)
        for i in range(1, g // 2 + 1)
    )
    return MuCoordinates(g, a, b_irr, b)


def from_mu_basis(m: MuCoordinates) -> DivisorClass:
    """Inverse of to_mu_basis."""
    if m.g < 3:
        raise GenusTooSmall("mu coordinates need g >= 3")
    sig = ModuliSignature(m.g, ())
    pairs = [(m.a, mu(sig)), (m.b_irr, DivisorClass(sig, {D_IRR: 1}))]
    for i, bi in enumerate(m.b, start=1):
        pairs.append((bi, DivisorClass(sig, {d_sep(_unmarked_delta(sig, i)): 1})))
    return linear_combine(pairs)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "{}/{}".format(x.numerator, x.denominator)


def atom_name(elem, sig: ModuliSignature) -> str:
    """Canonical text atom for a basis element on sig (shorthands when they exist)."""
    tag = elem[0]
    if tag == "lam":
        return "lambda"
    if tag == "irr":
        return "dirr"
    if tag == "psi":
        return "psi{}".format(elem[1])
    idx = elem[1]
    m1, m2 = idx.pair
    g = sig.genus
    if sig.n == 0:
        return "d{}".format(min(m1.genus, m2.genus))
    if sig.labels == (1,):
        unmarked = m1 if not m1.labels else m2
        if not unmarked.labels and 1 <= unmarked.genus <= g - 1:
            return "d{}".format(unmarked.genus)
    if sig.labels == (1, 2):
        if not m1.labels and m2.labels == (1, 2):
            return "d{}".format(m1.genus)
        if not m2.labels and m1.labels == (1, 2):
            return "d{}".format(m2.genus)
        if m1.labels == (1,) and m2.labels == (2,):
            return "s{}".format(m1.genus)
        if m1.labels == (2,) and m2.labels == (1,):
            return "s{}".format(m2.genus)
    return str(idx)


def render(D: DivisorClass) -> str:
    """Canonical text form: terms in basis order, exact 'p/q' rationals."""
    if D.is_zero():
        return "0"
    parts = []
    for elem, c in D.items():
        atom = atom_name(elem, D.sig)
        mag = abs(c)
        body = atom if mag == 1 else "{}*{}".format(_frac_str(mag), atom)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
