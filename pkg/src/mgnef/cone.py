"""Nefness over the one-node locus: inequality systems and verdicts.

The decision lives in the coordinates (a, b_irr, b_1..b_[g/2]) of
MuCoordinates.  theorem_system is the characterization (chain
monotonicity plus the a-bounds), proof_system is the redundant family it
is proved equivalent to, and the slice operations cut the cone with the
normalization a = 1/(8g+4) to get a polytope in the figure coordinates
(c_0, c_i) of lambda - c_0*dirr - sum c_i*d_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .divisors import DivisorClass, MuCoordinates, to_mu_basis
from .divisors import LAM, D_IRR, psi, d_sep, _one_point_delta, _two_point_indices
from .errors import GenusTooSmall, NegativeSeed, WrongHomeSpace
from .polyhedra import HRep, LinearInequality, VRep, h_to_v


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "{}/{}".format(x.numerator, x.denominator)


def _variables(g: int) -> tuple[str, ...]:
    return ("a", "b_irr") + tuple("b_{}".format(i) for i in range(1, g // 2 + 1))


def _require_genus(g: int):
    if g < 3:
        raise GenusTooSmall("need g >= 3, got g = {}".format(g))


@dataclass(frozen=True)
class ChainValues:
    """The two normalized boundary-coefficient chains B_i and B*_i."""

    g: int
    B: tuple[Fraction, ...]
    Bstar: tuple[Fraction, ...]


def chain_values(m: MuCoordinates) -> ChainValues:
    g = m.g
    _require_genus(g)
    B = [Fraction(4) * m.b_irr]
    Bs = [Fraction(4) * m.b_irr / (g * (2 * g - 1))]
    for i in range(1, g // 2 + 1):
        B.append(m.b[i - 1] / (i * (2 * i + 1)))
        Bs.append(m.b[i - 1] / ((g - i) * (2 * (g - i) + 1)))
    return ChainValues(g, tuple(B), tuple(Bs))


def theorem_system(g: int) -> HRep:
    """The characterizing inequalities, integer-cleared and named.

    A_i:      4i(g-i)a - b_i >= 0
    B_{i,i+1}: chain step B_i >= B_{i+1}   (descending)
    Bs_{i+1,i}: chain step B*_{i+1} >= B*_i (ascending)
    """
    _require_genus(g)
    variables = _variables(g)
    h = g // 2
    n = len(variables)

    def row(label, a=0, b_irr=0, **bs):
        coeffs = [Fraction(a), Fraction(b_irr)] + [Fraction(0)] * h
        for key, val in bs.items():
            coeffs[1 + int(key[1:])] = Fraction(val)
        return (label, 0, coeffs)

    rows = []
    for i in range(1, h + 1):
        rows.append(row("A_{}".format(i), a=4 * i * (g - i), **{"i" + str(i): -1}))
    # B-chain: B_0 = 4 b_irr, B_i = b_i / (i(2i+1))
    for i in range(0, h):
        coeffs = [Fraction(0)] * n
        if i == 0:
            coeffs[1] = Fraction(4)
        else:
            coeffs[1 + i] = Fraction(1, i * (2 * i + 1))
        coeffs[2 + i] -= Fraction(1, (i + 1) * (2 * i + 3))
        rows.append(("B_{{{},{}}}".format(i, i + 1), 0, coeffs))
    # B*-chain: B*_0 = 4 b_irr / (g(2g-1)), B*_i = b_i / ((g-i)(2(g-i)+1))
    for i in range(0, h):
        coeffs = [Fraction(0)] * n
        coeffs[2 + i] = Fraction(1, (g - i - 1) * (2 * (g - i - 1) + 1))
        if i == 0:
            coeffs[1] -= Fraction(4, g * (2 * g - 1))
        else:
            coeffs[1 + i] -= Fraction(1, (g - i) * (2 * (g - i) + 1))
        rows.append(("Bs_{{{},{}}}".format(i + 1, i), 0, coeffs))
    return HRep.make(variables, rows)


def proof_system(g: int, include_D: bool = False) -> HRep:
    """The redundant split-indexed family the characterization is proved from.

    b_{s,t} means the coordinate b_min(s,t).  Families:
      PA_{s,t}:  4st a >= b_{s,t}                  for every split s+t=g
      PB1_{s,t}: 4 b_irr >= b_{s,t}/(s(2s+1))
      PB2_{s,t}: b_{s,t}/(t(2t+1)) >= 4 b_irr/(g(2g-1))
      PC1_{l,s}, PC2_{l,s}: the quadruple family for l < s <= t < k
      nonneg_*:  optional nonnegativity of every coordinate
    """
    _require_genus(g)
    variables = _variables(g)
    h = g // 2
    n = len(variables)

    def blank():
        return [Fraction(0)] * n

    rows = []
    for s in range(1, h + 1):
        t = g - s
        coeffs = blank()
        coeffs[0] = Fraction(4 * s * t)
        coeffs[1 + s] = Fraction(-1)
        rows.append(("PA_{{{},{}}}".format(s, t), 0, coeffs))
    for s in range(1, h + 1):
        t = g - s
        coeffs = blank()
        coeffs[1] = Fraction(4)
        coeffs[1 + s] = Fraction(-1, s * (2 * s + 1))
        rows.append(("PB1_{{{},{}}}".format(s, t), 0, coeffs))
        coeffs = blank()
        coeffs[1 + s] = Fraction(1, t * (2 * t + 1))
        coeffs[1] = Fraction(-4, g * (2 * g - 1))
        rows.append(("PB2_{{{},{}}}".format(s, t), 0, coeffs))
    for l in range(1, h + 1):
        for s in range(l + 1, h + 1):
            t, k = g - s, g - l
            coeffs = blank()
            coeffs[1 + l] = Fraction(1, l * (2 * l + 1))
            coeffs[1 + s] = Fraction(-1, s * (2 * s + 1))
            rows.append(("PC1_{{{},{}}}".format(l, s), 0, coeffs))
            coeffs = blank()
            coeffs[1 + s] = Fraction(1, t * (2 * t + 1))
            coeffs[1 + l] = Fraction(-1, k * (2 * k + 1))
            rows.append(("PC2_{{{},{}}}".format(l, s), 0, coeffs))
    if include_D:
        for j, name in enumerate(variables):
            coeffs = blank()
            coeffs[j] = Fraction(1)
            rows.append(("nonneg_{}".format(name), 0, coeffs))
    return HRep.make(variables, rows)


@dataclass(frozen=True)
class MembershipVerdict:
    g: int
    coordinates: tuple[Fraction, ...]
    decision: str  # "Member" | "NotMember"
    binding: tuple[str, ...]
    violated: tuple[str, ...]

    def __bool__(self):
        return self.decision == "Member"

    def to_json(self, basis: str = "mu") -> dict:
        return {
            "g": self.g,
            "basis": basis,
            "coordinates": [_frac_str(x) for x in self.coordinates],
            "decision": self.decision,
            "binding": list(self.binding),
            "violated": list(self.violated),
        }


def is_nef_over_M1(g: int, m) -> MembershipVerdict:
    """Exact membership in the cone nef over the one-node locus.

    Accepts MuCoordinates or an unmarked DivisorClass (converted, psi
    support rejected).  binding collects names satisfied with equality.
    """
    _require_genus(g)
    if isinstance(m, DivisorClass):
        m = to_mu_basis(m)
    if m.g != g:
        raise ValueError("coordinates are for g = {}, not {}".format(m.g, g))
    point = (m.a, m.b_irr) + m.b
    binding = []
    violated = []
    for q in theorem_system(g).inequalities:
        val = q.evaluate(point)
        if val == 0:
            binding.append(q.label)
        elif val < 0:
            violated.append(q.label)
    decision = "Member" if not violated else "NotMember"
    return MembershipVerdict(g, point, decision, tuple(binding), tuple(violated))


def slice_system(g: int) -> HRep:
    """theorem_system pulled back along lambda - c_0*dirr - sum c_i*d_i.

    The substitution a = 1/(8g+4), b_irr = g/(8g+4) - c_0,
    b_i = 4i(g-i)/(8g+4) - c_i turns the cone into a polytope in c.
    """
    _require_genus(g)
    h = g // 2
    variables = ("c_0",) + tuple("c_{}".format(i) for i in range(1, h + 1))
    denom = Fraction(1, 8 * g + 4)
    base = [denom, g * denom] + [4 * i * (g - i) * denom for i in range(1, h + 1)]
    rows = []
    for q in theorem_system(g).inequalities:
        const = sum(c * v for c, v in zip(q.coefficients, base))
        coeffs = [-c for c in q.coefficients[1:]]
        rows.append((q.label, const, coeffs))
    return HRep.make(variables, rows)


def slice_vertices(g: int) -> VRep:
    return h_to_v(slice_system(g))


def generator_walk_bounds(g: int, stage: int, value) -> tuple[Fraction, Fraction]:
    """Closed interval the next chain coordinate may take.

    stage 1 maps b_irr to the b_1 interval; stage i+1 maps b_i to the
    b_{i+1} interval.
    """
    _require_genus(g)
    h = g // 2
    if not 1 <= stage <= h:
        raise ValueError("stage must be in 1..{}".format(h))
    value = Fraction(value)
    if stage == 1:
        if value < 0:
            raise NegativeSeed("b_irr must be nonnegative")
        return (Fraction(4 * (g - 1), g) * value, 12 * value)
    i = stage - 1
    lo = Fraction((g - 1 - i) * (2 * (g - i) - 1), (g - i) * (2 * (g - i) + 1)) * value
    hi = Fraction((i + 1) * (2 * i + 3), i * (2 * i + 1)) * value
    return (lo, hi)


def walk_check(g: int, b_irr, b, a) -> bool:
    """Inductive-interval membership test, equivalent to is_nef_over_M1.

    Requires b_irr >= 0 (positivity of b_irr is implied by the system, so
    nothing is lost).
    """
    _require_genus(g)
    b_irr = Fraction(b_irr)
    b = tuple(Fraction(x) for x in b)
    a = Fraction(a)
    if b_irr < 0:
        raise NegativeSeed("b_irr must be nonnegative")
    if len(b) != g // 2:
        raise ValueError("expected {} chain coordinates".format(g // 2))
    prev = b_irr
    for stage in range(1, g // 2 + 1):
        lo, hi = generator_walk_bounds(g, stage, prev)
        if not lo <= b[stage - 1] <= hi:
            return False
        prev = b[stage - 1]
    floor = max(b[i - 1] / (4 * i * (g - i)) for i in range(1, g // 2 + 1))
    return a >= floor


@dataclass(frozen=True)
class PartialVerdict:
    """What the inner-cone/necessary-condition pair can actually decide."""

    state: str  # "InnerCone" | "ViolatesNecessary" | "Indeterminate"
    coefficients: dict | None = None
    violated: tuple[str, ...] = field(default_factory=tuple)
    reason: str | None = None


def _partial_verdict(coeffs: dict, unchecked: tuple[str, ...]) -> PartialVerdict:
    """unchecked: coefficient names the necessary conditions do not constrain."""
    bad = tuple(k for k, v in coeffs.items() if k not in unchecked and v < 0)
    if bad:
        return PartialVerdict("ViolatesNecessary", coeffs, bad)
    if all(v >= 0 for v in coeffs.values()):
        return PartialVerdict("InnerCone", coeffs)
    return PartialVerdict("Indeterminate", coeffs)


def mgn1_subcone_check(g: int, D: DivisorClass) -> PartialVerdict:
    """Decompose in (mu, theta_1, dirr, d_i) on (g,{1}) and classify.

    The inner cone has every coefficient nonnegative; the necessary
    conditions constrain all but a.  For g = 1 the single condition
    c_irr >= 0 is a complete decision.
    """
    sig = D.sig
    if sig.genus != g or sig.n != 1:
        raise WrongHomeSpace("expected a class on ({},{{1}})".format(g))
    t = sig.labels[0]
    if g == 1:
        c_irr = D.coeff(LAM) / 12 + D.coeff(psi(t)) / 12 + D.coeff(D_IRR)
        coeffs = {"c_irr": c_irr}
        if c_irr < 0:
            return PartialVerdict("ViolatesNecessary", coeffs, ("c_irr",))
        return PartialVerdict("InnerCone", coeffs)
    b = D.coeff(psi(t)) / (4 * g * (g - 1))
    a = (D.coeff(LAM) + 12 * b) / (8 * g + 4)
    coeffs = {"a": a, "b": b, "c_irr": D.coeff(D_IRR) + g * a - b}
    for i in range(1, g):
        c = D.coeff(d_sep(_one_point_delta(sig, i))) + 4 * i * (g - i) * a + 4 * i * (i - 1) * b
        coeffs["c_{}".format(i)] = c
    return _partial_verdict(coeffs, ("a",))


def mgn2_subcone_check(g: int, D: DivisorClass, variant: str = "plain") -> PartialVerdict:
    """Decompose on (g,{1,2}) and classify against the two-pointed cones.

    plain: generators (mu, theta_{1,2}, dirr, sigma_i, delta_i) with
    coefficients (a, b, c_irr, c_i, d_i); primed: (mu', theta'_{1,2},
    sigma, delta_i) with (a, b, c, d_i).  Classes with unequal psi_1 and
    psi_2 coefficients, or (primed) outside the sigma-symmetric span, are
    Indeterminate with reason OutsideSpan.
    """
    if variant not in ("plain", "primed"):
        raise ValueError("variant must be plain or primed")
    sig = D.sig
    if sig.genus != g or sig.n != 2:
        raise WrongHomeSpace("expected a class on ({},{{1,2}})".format(g))
    if g < 2:
        raise GenusTooSmall("two-pointed checks need g >= 2")
    t1, t2 = sig.labels
    p1, p2 = D.coeff(psi(t1)), D.coeff(psi(t2))
    if p1 != p2:
        return PartialVerdict("Indeterminate", reason="OutsideSpan")
    deltas, sigmas = _two_point_indices(sig)
    b = p1 / ((g - 1) * (g + 1))
    a = (D.coeff(LAM) + 12 * b) / (8 * g + 4)
    if variant == "plain":
        coeffs = {"a": a, "b": b, "c_irr": D.coeff(D_IRR) + g * a - b}
        for i in range(1, g):
            c = (
                D.coeff(d_sep(sigmas[i]))
                + 4 * i * (g - i) * a
                + (2 * i - g - 1) * (2 * i - g + 1) * b
            )
            coeffs["c_{}".format(i)] = c
        for i in range(1, g + 1):
            d = D.coeff(d_sep(deltas[i])) + 4 * i * (g - i) * a + 4 * i * (i - 1) * b
            coeffs["d_{}".format(i)] = d
        return _partial_verdict(coeffs, ("a",))
    c = D.coeff(D_IRR) + g * a - b
    for i in range(1, g):
        if D.coeff(d_sep(sigmas[i])) + g * a - b != c:
            return PartialVerdict("Indeterminate", reason="OutsideSpan")
    coeffs = {"a": a, "b": b, "c": c}
    for i in range(1, g + 1):
        d = D.coeff(d_sep(deltas[i])) + 4 * i * (g - i) * a + 4 * i * (i - 1) * b
        coeffs["d_{}".format(i)] = d
    return _partial_verdict(coeffs, ("a",))
