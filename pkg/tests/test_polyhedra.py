import random
from fractions import Fraction

import pytest

from mgnef import (
    DegenerateInput,
    DimensionTooLarge,
    HRep,
    LinearInequality,
    VRep,
    brute_force_vertices,
    fm_eliminate,
    h_to_v,
    implies,
    primitive,
    systems_equal,
    v_to_h,
)


def square():
    # unit square: x >= 0, y >= 0, 1 - x >= 0, 1 - y >= 0
    return HRep.make(
        ("x", "y"),
        [
            ("x_lo", 0, (1, 0)),
            ("y_lo", 0, (0, 1)),
            ("x_hi", 1, (-1, 0)),
            ("y_hi", 1, (0, -1)),
        ],
    )


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert primitive([4, -6]) == (2, -3)
    assert primitive([0, 0]) == (0, 0)


def test_h_to_v_square():
    v = h_to_v(square())
    assert v.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert v.rays == ()


def test_h_to_v_unbounded_and_empty():
    quadrant = HRep.make(("x", "y"), [("a", 0, (1, 0)), ("b", 0, (0, 1))])
    v = h_to_v(quadrant)
    assert v.vertices == ((0, 0),)
    assert set(v.rays) == {(1, 0), (0, 1)}
    empty = HRep.make(("x",), [("lo", -1, (1,)), ("hi", 0, (-1,))])  # x >= 1 and x <= 0
    assert h_to_v(empty).is_empty


def test_h_to_v_lineality():
    # slab 0 <= x <= 1 in the plane: y is free
    slab = HRep.make(("x", "y"), [("lo", 0, (1, 0)), ("hi", 1, (-1, 0))])
    v = h_to_v(slab)
    assert set(v.rays) == {(0, 1), (0, -1)}
    xs = sorted(p[0] for p in v.vertices)
    assert xs == [0, 1]


def test_v_to_h_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        d = rng.randint(1, 3)
        pts = [
            tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(d))
            for _ in range(rng.randint(1, 6))
        ]
        v = h_to_v(v_to_h(VRep.make(d, pts, [])))
        hull_twice = h_to_v(v_to_h(v))
        assert hull_twice == v  # extreme points are a fixed point of the pair


def test_v_to_h_empty_rejected():
    with pytest.raises(DegenerateInput):
        v_to_h(VRep.make(2, [], []))


def test_brute_force_matches_dd_random():
    rng = random.Random(41)
    for _ in range(100):
        d = rng.randint(1, 4)
        m = rng.randint(d, 8)
        rows = []
        for k in range(m):
            coeffs = [rng.randint(-4, 4) for _ in range(d)]
            rows.append(("q{}".format(k), rng.randint(0, 5), coeffs))
        # keep it bounded so vertices describe everything
        for j in range(d):
            lo = [0] * d
            lo[j] = 1
            hi = [0] * d
            hi[j] = -1
            rows.append(("lo{}".format(j), 6, lo))
            rows.append(("hi{}".format(j), 6, hi))
        h = HRep.make(tuple("x{}".format(j) for j in range(d)), rows)
        assert set(h_to_v(h).vertices) == set(brute_force_vertices(h).vertices)


def test_brute_force_limit():
    h = HRep.make(
        tuple("x{}".format(j) for j in range(6)),
        [("q", 1, (1, 1, 1, 1, 1, 1))],
    )
    with pytest.raises(DimensionTooLarge):
        brute_force_vertices(h)


def test_implies_with_certificate():
    h = square()
    q = LinearInequality.make(("x", "y"), (1, 1), 0, "sum")  # x + y >= 0
    res = implies(h, q)
    assert res
    # the multipliers really recombine: sum lam_i row_i + slack-row = target
    rows = [ineq.row() for ineq in h.inequalities]
    combo = [
        sum(lam * row[j] for lam, row in zip(res.multipliers, rows))
        for j in range(3)
    ]
    combo[0] += res.slack
    assert tuple(combo) == q.row()
    assert all(lam >= 0 for lam in res.multipliers) and res.slack >= 0


def test_implies_witness():
    h = square()
    q = LinearInequality.make(("x", "y"), (1, 1), Fraction(-3, 2), "deep")  # x+y >= 3/2
    res = implies(h, q)
    assert not res
    assert res.witness is not None
    assert q.evaluate(res.witness) < 0
    assert all(ineq.evaluate(res.witness) >= 0 for ineq in h.inequalities)


def test_implies_infeasible_system():
    # x >= 1 and x <= 0: everything is implied
    empty = HRep.make(("x",), [("lo", -1, (1,)), ("hi", 0, (-1,))])
    q = LinearInequality.make(("x",), (-1,), -100, "anything")
    res = implies(empty, q)
    assert res
    # a target whose coefficients no combination can reach forces the
    # explicit -1 >= 0 certificate
    empty2 = HRep.make(("x", "y"), [("lo", -1, (1, 0)), ("hi", 0, (-1, 0))])
    q2 = LinearInequality.make(("x", "y"), (0, 1), 0, "y_nonneg")
    res2 = implies(empty2, q2)
    assert res2 and res2.system_infeasible
    combo = sum(
        lam * row.constant for lam, row in zip(res2.multipliers, empty2.inequalities)
    )
    assert combo < 0  # the multipliers really derive a negative constant


def test_systems_equal():
    h1 = square()
    h2 = HRep.make(
        ("x", "y"),
        [
            ("a", 0, (1, 0)),
            ("b", 0, (0, 1)),
            ("c", 1, (-1, 0)),
            ("d", 1, (0, -1)),
            ("redundant", 2, (-1, -1)),
        ],
    )
    assert systems_equal(h1, h2)
    h3 = HRep.make(("x", "y"), [("a", 0, (1, 0)), ("b", 0, (0, 1))])
    res = systems_equal(h1, h3)
    assert not res and res.failures


def test_fm_eliminate_projects():
    h = square()
    proj = fm_eliminate(h, "y")
    v = h_to_v(proj)
    assert v.vertices == ((0,), (1,))
    # projecting a random bounded polytope agrees with projecting its vertices
    rng = random.Random(9)
    for _ in range(30):
        rows = []
        for k in range(6):
            rows.append(("q{}".format(k), rng.randint(1, 4), [rng.randint(-3, 3), rng.randint(-3, 3)]))
        for j, var in enumerate(("x", "y")):
            lo = [0, 0]
            lo[j] = 1
            hi = [0, 0]
            hi[j] = -1
            rows.append(("lo" + var, 5, lo))
            rows.append(("hi" + var, 5, hi))
        h2 = HRep.make(("x", "y"), rows)
        shadow = h_to_v(fm_eliminate(h2, "y"))
        direct = sorted({(p[0],) for p in h_to_v(h2).vertices})
        assert min(direct) in shadow.vertices and max(direct) in shadow.vertices
        xs = [p[0] for p in shadow.vertices]
        assert min(xs) == min(direct)[0] and max(xs) == max(direct)[0]
