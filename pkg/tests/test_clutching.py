import random
from fractions import Fraction

import pytest

from mgnef import (
    BadSplit,
    D_IRR,
    DependentGenerators,
    DivisorClass,
    LAM,
    MuCoordinates,
    NotInSpan,
    SpecMismatch,
    alpha_pullback,
    alpha_star_closed_form,
    beta_pullback,
    beta_star_closed_form,
    decompose,
    from_mu_basis,
    genus_one_point_reduction,
    mu,
    mu_prime,
    mu_prime_e,
    psi,
    sigma,
    standard_alpha_spec,
    standard_beta_spec,
    theta12_prime,
    theta_prime_e,
    validate_signature,
)
from mgnef.divisors import _one_point_delta, _two_point_indices, d_sep


def rand_coords(rng, g):
    def r():
        return Fraction(rng.randint(-40, 40), rng.randint(1, 12))

    return MuCoordinates(g, r(), r(), tuple(r() for _ in range(g // 2)))


def beta_generators(src):
    gens = [mu_prime(src), theta12_prime(src), sigma(src)]
    deltas, _ = _two_point_indices(src)
    for i in range(1, src.genus + 1):
        gens.append(DivisorClass(src, {d_sep(deltas[i]): 1}))
    return gens


def alpha_generators(sig):
    gens = [mu_prime_e(sig), theta_prime_e(sig), DivisorClass(sig, {D_IRR: 1})]
    for l in range(1, sig.genus):
        gens.append(DivisorClass(sig, {d_sep(_one_point_delta(sig, l)): 1}))
    return gens


def test_beta_pullback_of_mu_g4():
    g = 4
    spec = standard_beta_spec(g)
    pulled = beta_pullback(spec, mu(validate_signature(g, ())))
    coeffs = decompose(pulled, beta_generators(spec.source))
    assert coeffs == [Fraction(3, 2), Fraction(1, 2), 0, 0, 0, 0]


def test_beta_closed_form_oracle():
    rng = random.Random(17)
    for g in range(3, 8):
        spec = standard_beta_spec(g)
        gens = beta_generators(spec.source)
        for _ in range(30):
            m = rand_coords(rng, g)
            pulled = beta_pullback(spec, from_mu_basis(m))
            assert decompose(pulled, gens) == beta_star_closed_form(g, m).as_list()


def test_printed_numerator_variant_fails_off_the_a_axis():
    rng = random.Random(23)
    for g in range(3, 8):
        spec = standard_beta_spec(g)
        gens = beta_generators(spec.source)
        for _ in range(20):
            m = rand_coords(rng, g)
            if m.a == 0:
                continue
            pulled = beta_pullback(spec, from_mu_basis(m))
            printed = beta_star_closed_form(g, m, printed_alpha=True)
            assert decompose(pulled, gens) != printed.as_list()
        # on a = 0 the two variants agree
        m0 = MuCoordinates(g, 0, m.b_irr, m.b)
        assert (
            beta_star_closed_form(g, m0).as_list()
            == beta_star_closed_form(g, m0, printed_alpha=True).as_list()
        )


def test_alpha_closed_form_oracle_every_split():
    rng = random.Random(29)
    for g in range(3, 8):
        for s in range(1, g // 2 + 1):
            t = g - s
            spec = standard_alpha_spec(g, s, t)
            for _ in range(15):
                m = rand_coords(rng, g)
                E, F = alpha_pullback(spec, from_mu_basis(m))
                CE, CF = alpha_star_closed_form(g, s, t, m)
                for comp, closed, e in ((E, CE, s), (F, CF, t)):
                    if e == 1:
                        assert genus_one_point_reduction(comp) == closed.irr_coeff
                    else:
                        assert decompose(comp, alpha_generators(comp.sig)) == closed.as_list()


def test_alpha_components_live_on_the_right_spaces():
    spec = standard_alpha_spec(5, 2, 3)
    E, F = alpha_pullback(spec, mu(validate_signature(5, ())))
    assert E.sig == validate_signature(2, (1,))
    assert F.sig == validate_signature(3, (2,))


def test_decompose_errors():
    sig = validate_signature(3, ())
    D = mu(sig)
    with pytest.raises(DependentGenerators):
        decompose(D, [D, 2 * D])
    with pytest.raises(NotInSpan) as exc:
        decompose(D, [DivisorClass(sig, {D_IRR: 1})])
    assert exc.value.witness is not None


def test_spec_validation():
    with pytest.raises(BadSplit):
        standard_alpha_spec(5, 0, 5)
    with pytest.raises(BadSplit):
        standard_alpha_spec(5, 2, 4)
    spec = standard_beta_spec(4)
    with pytest.raises(SpecMismatch):
        beta_pullback(spec, mu(validate_signature(5, ())))


def test_genus_one_point_reduction():
    sig = validate_signature(1, (1,))
    D = DivisorClass(sig, {LAM: 36, psi(1): 12, D_IRR: -4})
    assert genus_one_point_reduction(D) == Fraction(36, 12) + 1 - 4
    with pytest.raises(SpecMismatch):
        genus_one_point_reduction(mu(validate_signature(3, ())))
