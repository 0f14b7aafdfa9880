import random
from fractions import Fraction

import pytest

from mgnef import (
    D_IRR,
    LAM,
    DivisorClass,
    MuCoordinates,
    SignatureMismatch,
    UnsupportedBasisElement,
    WrongHomeSpace,
    d_sep,
    enumerate_boundary,
    from_mu_basis,
    linear_combine,
    mu,
    mu_prime,
    mu_prime_e,
    psi,
    render,
    sep_index,
    sigma,
    theta,
    theta1,
    theta12,
    theta12_prime,
    theta_prime_e,
    to_mu_basis,
    validate_signature,
    zero,
)
from mgnef.divisors import gamma_L


def test_mu_unmarked_small():
    assert render(mu(validate_signature(3, ()))) == "28*lambda - 3*dirr - 8*d1"
    assert render(mu(validate_signature(4, ()))) == "36*lambda - 4*dirr - 12*d1 - 16*d2"


def test_theta_specializes_to_one_point_display():
    for g in range(2, 21):
        sig = validate_signature(g, (1,))
        assert theta(sig, (1,)) == theta1(sig)


def test_theta_specializes_to_two_point_display():
    for g in range(2, 21):
        sig = validate_signature(g, (1, 2))
        assert theta(sig, (1, 2)) == 4 * theta12(sig)


def test_gamma_orientation_symmetric():
    rng = random.Random(11)
    for _ in range(200):
        g = rng.randint(2, 8)
        n = rng.randint(0, 3)
        sig = validate_signature(g, tuple(range(1, n + 1)))
        L = frozenset(t for t in sig.labels if rng.random() < 0.5)
        for idx in enumerate_boundary(sig):
            if idx.is_irr:
                continue
            m1, m2 = idx.pair
            i, j = m1.genus, m2.genus
            li = len(L & m1.label_set)
            lj = len(L & m2.label_set)
            d = i * lj - j * li
            assert gamma_L(L, idx) == (d + li) * (d - lj)
            # the swapped orientation gives the same value
            d2 = j * li - i * lj
            assert gamma_L(L, idx) == (d2 + lj) * (d2 - li)


def test_linear_algebra_and_zero():
    sig = validate_signature(3, ())
    D = mu(sig)
    assert D - D == zero(sig)
    assert Fraction(1, 2) * (D + D) == D
    assert (-D) + D == zero(sig)
    assert zero(sig).is_zero()
    with pytest.raises(SignatureMismatch):
        linear_combine([(1, D), (1, mu(validate_signature(4, ())))])


def test_named_classes_reject_wrong_spaces():
    with pytest.raises(WrongHomeSpace):
        theta1(validate_signature(3, ()))
    with pytest.raises(WrongHomeSpace):
        theta12(validate_signature(3, (1,)))
    with pytest.raises(WrongHomeSpace):
        sigma(validate_signature(3, (1,)))
    with pytest.raises(WrongHomeSpace):
        theta(validate_signature(3, (1,)), (2,))


def test_mu_basis_round_trip():
    rng = random.Random(5)
    for _ in range(200):
        g = rng.randint(3, 8)
        m = MuCoordinates(
            g,
            Fraction(rng.randint(-30, 30), rng.randint(1, 9)),
            Fraction(rng.randint(-30, 30), rng.randint(1, 9)),
            tuple(
                Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(g // 2)
            ),
        )
        assert to_mu_basis(from_mu_basis(m)) == m


def test_mu_basis_rejects_psi_support():
    sig = validate_signature(3, (1,))
    with pytest.raises(UnsupportedBasisElement):
        to_mu_basis(DivisorClass(sig, {psi(1): 1}))


def test_b_split_symmetric():
    m = MuCoordinates(7, 1, 2, (Fraction(3), Fraction(4), Fraction(5)))
    for s in range(1, 7):
        assert m.b_split(s, 7 - s) == m.b_split(7 - s, s) == m.b[min(s, 7 - s) - 1]


def test_primed_generators_match_displays():
    for g in range(2, 8):
        sig = validate_signature(g, (1, 2))
        deltas = {
            i: sep_index(sig, i, (), g - i, (1, 2)) for i in range(1, g + 1)
        }
        expect = DivisorClass(sig, {LAM: 8 * g + 4})
        expect = expect + (-g) * sigma(sig)
        expect = expect + DivisorClass(
            sig, {d_sep(deltas[i]): -4 * i * (g - i) for i in range(1, g + 1)}
        )
        assert mu_prime(sig) == expect
        tp = theta12_prime(sig)
        assert tp.coeff(psi(1)) == tp.coeff(psi(2)) == (g - 1) * (g + 1)
        assert tp.coeff(LAM) == -12
        assert tp.coeff(D_IRR) == 1


def test_scaled_one_point_generators():
    sig = validate_signature(1, (1,))
    assert mu_prime_e(sig).is_zero()
    assert theta_prime_e(sig).is_zero()
    for e in range(2, 7):
        sig = validate_signature(e, (1,))
        assert (e - 1) * theta_prime_e(sig) == theta1(sig)
        scaled = (e - 1) * mu_prime_e(sig)
        assert scaled.coeff(LAM) == 8 * e + 4
        assert scaled.coeff(D_IRR) == -e


def test_render_zero_and_signs():
    sig = validate_signature(3, ())
    assert render(zero(sig)) == "0"
    D = DivisorClass(sig, {LAM: Fraction(-1, 2), D_IRR: 1})
    assert render(D) == "-1/2*lambda + dirr"
