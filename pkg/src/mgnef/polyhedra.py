"""Exact rational polyhedral kernel.

H-representations are lists of inequalities constant + coeffs . x >= 0.
V-representations are vertices and rays.  Conversion both ways runs the
double description method on the homogenization; every number is a
Fraction and rays are stored as primitive integer vectors so canonical
forms compare exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import DegenerateInput, DimensionTooLarge


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else "{}/{}".format(x.numerator, x.denominator)


def primitive(vec) -> tuple[Fraction, ...]:
    """Scale a rational vector to primitive integers, direction preserved."""
    vec = [Fraction(x) for x in vec]
    if all(x == 0 for x in vec):
        return tuple(vec)
    mult = lcm(*[x.denominator for x in vec])
    ints = [x.numerator * (mult // x.denominator) for x in vec]
    g = gcd(*[abs(i) for i in ints])
    return tuple(Fraction(i // g) for i in ints)


@dataclass(frozen=True)
class LinearInequality:
    """constant + sum coefficients[i] * x_i >= 0 over named variables."""

    variables: tuple[str, ...]
    coefficients: tuple[Fraction, ...]
    constant: Fraction
    label: str | None = None

    @staticmethod
    def make(variables, coefficients, constant=0, label=None) -> "LinearInequality":
        row = primitive([Fraction(constant)] + [Fraction(c) for c in coefficients])
        return LinearInequality(tuple(variables), row[1:], row[0], label)

    def evaluate(self, point) -> Fraction:
        return self.constant + sum(c * Fraction(x) for c, x in zip(self.coefficients, point))

    def row(self):
        return (self.constant,) + self.coefficients

    def render(self) -> str:
        return " ".join(_frac_str(c) for c in self.row()) + " >= 0"


@dataclass(frozen=True)
class HRep:
    variables: tuple[str, ...]
    inequalities: tuple[LinearInequality, ...]

    @staticmethod
    def make(variables, rows) -> "HRep":
        """rows: iterable of (label, constant, coefficients)."""
        variables = tuple(variables)
        ineqs = tuple(
            LinearInequality.make(variables, coeffs, const, label)
            for label, const, coeffs in rows
        )
        return HRep(variables, ineqs)

    @property
    def dim(self) -> int:
        return len(self.variables)

    def render(self) -> str:
        return "\n".join(q.render() for q in self.inequalities)


@dataclass(frozen=True)
class VRep:
    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def make(dim, vertices, rays) -> "VRep":
        verts = sorted({tuple(Fraction(x) for x in v) for v in vertices})
        rr = sorted({primitive(r) for r in rays})
        return VRep(dim, tuple(verts), tuple(rr))

    @property
    def is_empty(self) -> bool:
        return not self.vertices and not self.rays

    def render(self) -> str:
        lines = ["V: " + " ".join(_frac_str(x) for x in v) for v in self.vertices]
        lines += ["R: " + " ".join(_frac_str(x) for x in r) for r in self.rays]
        return "\n".join(lines)


def _dot(a, b) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def _cone_rays(rows, n):
    """Double description for {y : row . y >= 0 for all rows}.

    Returns (rays, lineality), primitive and sorted.  Rays are extreme
    modulo the lineality space.
    """
    lineality = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    rays: list[tuple[Fraction, ...]] = []
    processed: list[tuple[Fraction, ...]] = []

    def zero_set(r):
        return frozenset(i for i, a in enumerate(processed) if _dot(a, r) == 0)

    for a in rows:
        a = tuple(Fraction(x) for x in a)
        pivot = next((v for v in lineality if _dot(a, v) != 0), None)
        if pivot is not None:
            if _dot(a, pivot) < 0:
                pivot = tuple(-x for x in pivot)
            pv = _dot(a, pivot)
            lineality = [
                primitive(tuple(l[j] - (_dot(a, l) / pv) * pivot[j] for j in range(n)))
                for l in lineality
                if l != pivot and tuple(-x for x in l) != pivot
            ]
            rays = [
                primitive(tuple(r[j] - (_dot(a, r) / pv) * pivot[j] for j in range(n)))
                for r in rays
            ]
            rays.append(primitive(pivot))
            rays = list(dict.fromkeys(r for r in rays if any(x != 0 for x in r)))
        else:
            vals = [_dot(a, r) for r in rays]
            keep = [r for r, v in zip(rays, vals) if v >= 0]
            pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
            neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
            if neg:
                zsets = {r: zero_set(r) for r in rays}
                for rp, vp in pos:
                    for rm, vm in neg:
                        z = zsets[rp] & zsets[rm]
                        if any(
                            r is not rp and r is not rm and z <= zsets[r] for r in rays
                        ):
                            continue
                        combo = primitive(
                            tuple(vp * rm[j] - vm * rp[j] for j in range(n))
                        )
                        if any(x != 0 for x in combo):
                            keep.append(combo)
                seen = set()
                rays = []
                for r in keep:
                    if r not in seen:
                        seen.add(r)
                        rays.append(r)
            else:
                rays = keep
        processed.append(a)
    lineality = [primitive(l) for l in lineality if any(x != 0 for x in l)]
    # canonical sign for lineality directions: first nonzero positive
    fixed = []
    for l in lineality:
        lead = next(x for x in l if x != 0)
        fixed.append(l if lead > 0 else tuple(-x for x in l))
    return sorted(set(rays)), sorted(set(fixed))


def h_to_v(h: HRep) -> VRep:
    """Exact minimal V-representation; empty VRep for empty polyhedra."""
    n = h.dim + 1
    hom_rows = sorted(primitive(q.row()) for q in h.inequalities)
    rows = [tuple(Fraction(int(j == 0)) for j in range(n))] + hom_rows
    rays, lineality = _cone_rays(rows, n)
    vertices = []
    recession = []
    for r in rays:
        if r[0] > 0:
            vertices.append(tuple(x / r[0] for x in r[1:]))
        else:
            recession.append(r[1:])
    if not vertices:
        return VRep.make(h.dim, [], [])
    for l in lineality:
        recession.append(l[1:])
        recession.append(tuple(-x for x in l[1:]))
    return VRep.make(h.dim, vertices, recession)


def v_to_h(v: VRep, variables=None) -> HRep:
    """Minimal H-representation of conv(vertices) + cone(rays).

    Lower-dimensional hulls are not an error: the affine-hull equalities
    come back as pairs of opposite inequalities.
    """
    if v.is_empty:
        raise DegenerateInput("empty V-representation has no H-representation")
    if not v.vertices:
        raise DegenerateInput("V-representation without vertices")
    n = v.dim + 1
    variables = tuple(variables) if variables else tuple("x{}".format(i + 1) for i in range(v.dim))
    rows = [(Fraction(1),) + vert for vert in v.vertices]
    rows += [(Fraction(0),) + ray for ray in v.rays]
    rays, lineality = _cone_rays(sorted(rows), n)
    ineq_rows = []
    for z in rays:
        if all(x == 0 for x in z[1:]):
            continue  # the trivial 1 >= 0 direction
        ineq_rows.append(z)
    for z in lineality:
        ineq_rows.append(z)
        ineq_rows.append(tuple(-x for x in z))
    ineq_rows.sort()
    return HRep(
        variables,
        tuple(
            LinearInequality(variables, z[1:], z[0], None) for z in ineq_rows
        ),
    )


def _solve_square(rows, rhs):
    """Unique solution of a square rational system, or None."""
    d = len(rhs)
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(d):
        piv = next((i for i in range(col, d) if mat[i][col] != 0), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        for i in range(d):
            if i != col and mat[i][col] != 0:
                f = mat[i][col] / pv
                for j in range(col, d + 1):
                    mat[i][j] -= f * mat[col][j]
    return [mat[i][d] / mat[i][i] for i in range(d)]


def brute_force_vertices(h: HRep) -> VRep:
    """Independent oracle: solve every d-subset of binding hyperplanes."""
    d = h.dim
    m = len(h.inequalities)
    if d > 5 or m > 25:
        raise DimensionTooLarge("brute force limited to d <= 5 and <= 25 inequalities")
    found = set()
    for subset in combinations(range(m), d):
        rows = [h.inequalities[i].coefficients for i in subset]
        rhs = [-h.inequalities[i].constant for i in subset]
        x = _solve_square(rows, rhs)
        if x is None:
            continue
        if all(q.evaluate(x) >= 0 for q in h.inequalities):
            found.add(tuple(x))
    return VRep.make(d, sorted(found), [])


def _simplex_phase1(E, f):
    """Exact x >= 0 with E x = f, or None.  Bland's rule, Fractions."""
    m = len(E)
    n = len(E[0]) if m else 0
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in E[i]]
        rhs = Fraction(f[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        tab.append(row + [Fraction(int(j == i)) for j in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    total = n + m
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    while True:
        # reduced costs r_j = c_j - sum_i c_basis[i] * tab[i][j]
        entering = None
        for j in range(total):
            if j in basis:
                continue
            r = cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m))
            if r < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            if tab[i][entering] > 0:
                ratio = tab[i][total] / tab[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            return None  # unbounded phase-1 cannot happen, guard anyway
        pv = tab[leaving][entering]
        tab[leaving] = [x / pv for x in tab[leaving]]
        for i in range(m):
            if i != leaving and tab[i][entering] != 0:
                fmul = tab[i][entering]
                tab[i] = [a - fmul * b for a, b in zip(tab[i], tab[leaving])]
        basis[leaving] = entering

    value = sum(cost[basis[i]] * tab[i][total] for i in range(m))
    if value != 0:
        return None
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][total]
    return x


@dataclass(frozen=True)
class ImpliesResult:
    implied: bool
    multipliers: tuple[Fraction, ...] | None = None
    slack: Fraction | None = None
    system_infeasible: bool = False
    witness: tuple[Fraction, ...] | None = None

    def __bool__(self):
        return self.implied


def implies(sys: HRep, ineq: LinearInequality) -> ImpliesResult:
    """Farkas certificate that sys entails ineq, or a witness point.

    Certificate: nonnegative multipliers with
    sum lam_i * coeffs_i = coeffs and sum lam_i * const_i + slack = const.
    For an infeasible system the multipliers instead derive -1 >= 0.
    """
    if tuple(ineq.variables) != tuple(sys.variables):
        raise ValueError("variable lists differ")
    d = sys.dim
    m = len(sys.inequalities)
    cols = [q.row() for q in sys.inequalities]
    # unknowns: lam_1..lam_m, slack s; equations: d coefficient rows + constant row
    E = [[cols[k][1 + j] for k in range(m)] + [Fraction(0)] for j in range(d)]
    f = [ineq.coefficients[j] for j in range(d)]
    E.append([cols[k][0] for k in range(m)] + [Fraction(1)])
    f.append(ineq.constant)
    sol = _simplex_phase1(E, f)
    if sol is not None:
        return ImpliesResult(True, tuple(sol[:m]), sol[m])
    # maybe the system itself is infeasible: lam >= 0, sum lam*coeffs = 0, sum lam*const = -1
    E2 = [[cols[k][1 + j] for k in range(m)] for j in range(d)]
    f2 = [Fraction(0)] * d
    E2.append([cols[k][0] for k in range(m)])
    f2.append(Fraction(-1))
    sol2 = _simplex_phase1(E2, f2)
    if sol2 is not None:
        return ImpliesResult(True, tuple(sol2[:m]), None, system_infeasible=True)
    return ImpliesResult(False, witness=_violating_point(sys, ineq))


def _violating_point(sys: HRep, ineq: LinearInequality):
    v = h_to_v(sys)
    for vert in v.vertices:
        if ineq.evaluate(vert) < 0:
            return vert
    for ray in v.rays:
        slope = sum(c * x for c, x in zip(ineq.coefficients, ray))
        if slope < 0:
            base = v.vertices[0]
            k = (ineq.evaluate(base) / -slope) + 1
            return tuple(b + k * r for b, r in zip(base, ray))
    return None


@dataclass(frozen=True)
class SystemsEqualResult:
    equal: bool
    failures: tuple[tuple[str, LinearInequality], ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.equal


def systems_equal(s1: HRep, s2: HRep) -> SystemsEqualResult:
    """Mutual Farkas implication of the two solution sets."""
    if tuple(s1.variables) != tuple(s2.variables):
        raise ValueError("variable lists differ")
    failures = []
    for direction, src, dst in (("1=>2", s1, s2), ("2=>1", s2, s1)):
        for q in dst.inequalities:
            if not implies(src, q):
                failures.append((direction, q))
    return SystemsEqualResult(not failures, tuple(failures))


def fm_eliminate(h: HRep, var: str) -> HRep:
    """Fourier-Motzkin projection of one variable; exact."""
    if var not in h.variables:
        raise ValueError("unknown variable {!r}".format(var))
    k = h.variables.index(var)
    new_vars = tuple(v for v in h.variables if v != var)

    def strip(row):
        return (row[0],) + row[1 : 1 + k] + row[2 + k :]

    zero_rows = []
    pos = []
    neg = []
    for q in h.inequalities:
        row = q.row()
        c = row[1 + k]
        if c == 0:
            zero_rows.append(strip(row))
        elif c > 0:
            pos.append((row, c))
        else:
            neg.append((row, c))
    combined = list(zero_rows)
    for rp, cp in pos:
        for rm, cm in neg:
            combo = tuple(cp * b - cm * a for a, b in zip(rp, rm))
            combined.append(strip(combo))
    out = []
    seen = set()
    for row in combined:
        row = primitive(row)
        if all(c == 0 for c in row[1:]) and row[0] >= 0:
            continue  # tautology
        if row not in seen:
            seen.add(row)
            out.append(row)
    out.sort()
    return HRep(
        new_vars,
        tuple(LinearInequality(new_vars, r[1:], r[0], None) for r in out),
    )
