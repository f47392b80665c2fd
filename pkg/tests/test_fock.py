from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nekagt.errors import CrossCheckFailure, SingularGram, TruncationExceeded
from nekagt.fock import (
    A_op,
    alpha,
    alpha_esum,
    alpha_strips,
    character,
    charge_decompose,
    d_prime,
    gamma_element,
    gamma_element_operator,
    gamma_join,
    gamma_split,
    generator,
    inner,
    kac_prediction,
    mainprop_block,
    omega_check,
    rho_E,
    schur_inverse,
    schur_transition,
    sugawara_L,
    vacuum_vector,
    verma_embedding,
)
from nekagt.fock import boson
from nekagt.fock.vertex import gcrq_check, omega_product_check
from nekagt.partitions import partitions_of, partitions_upto, staircase
from nekagt.virasoro import VirParams, gram
from nekagt.nekrasov import W_element
from oracles import z_lambda

VAC = {(): Fraction(1)}
rats = st.fractions(min_value=-3, max_value=3, max_denominator=6)
small = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def commutator(a, b, v):
    return boson.combine((1, a(b(v))), (-1, b(a(v))))


# ---------------------------------------------------------------- wedge

def test_rho_E_on_vacuum():
    assert rho_E(0, 0, VAC) == {}
    assert rho_E(1, 1, VAC) == {}
    assert rho_E(1, 0, VAC) == {(1,): 1}


def test_central_extension_sign():
    # [E_10, E_01] v_0 = (E_11 - E_00) v_0 + eps v_0, and the projective action gives eps = -1
    lhs = commutator(lambda v: rho_E(1, 0, v), lambda v: rho_E(0, 1, v), VAC)
    rhs = boson.combine((1, rho_E(1, 1, VAC)), (-1, rho_E(0, 0, VAC)))
    assert boson.combine((1, lhs), (-1, rhs)) == {(): -1}


def test_alpha_examples():
    assert alpha(-1, VAC) == {(1,): 1}
    assert alpha(-2, VAC) == {(2,): 1, (1, 1): -1}
    assert alpha(1, {(1,): Fraction(1)}) == {(): 1}


@settings(max_examples=60)
@given(small, st.integers(-4, 4).filter(bool))
def test_alpha_routes_agree(mu, n):
    state = {mu: Fraction(1)}
    assert alpha_esum(n, state) == alpha_strips(n, state)
    alpha(n, state, check=True)


def test_alpha_rejects_zero_mode():
    with pytest.raises(ValueError):
        alpha_strips(0, VAC)


@settings(max_examples=60)
@given(small, st.integers(1, 4), st.integers(1, 4))
def test_heisenberg_relations(mu, m, n):
    v = {mu: Fraction(1)}
    a = lambda k: (lambda s: alpha(k, s))
    assert commutator(a(m), a(-n), v) == (boson.scale(v, m) if m == n else {})
    assert commutator(a(m), a(n), v) == {}


def test_alpha_cross_check_failure_is_reported(monkeypatch):
    from nekagt.fock import wedge
    monkeypatch.setattr(wedge, "alpha_esum", lambda n, s: {(9,): 1})
    with pytest.raises(CrossCheckFailure):
        wedge.alpha(-1, VAC, check=True)


def test_schur_examples():
    assert schur_transition(VAC) == {(): 1}
    assert schur_transition({(1,): Fraction(1)}) == {(1,): 1}
    assert schur_transition({(2,): Fraction(1)}) == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}


def test_schur_round_trip_up_to_eight():
    for n in range(9):
        for mu in partitions_of(n):
            v = {mu: Fraction(1)}
            assert schur_inverse(schur_transition(v)) == v


def test_character_orthogonality():
    for n in range(1, 7):
        parts = partitions_of(n)
        for mu in parts:
            for nu in parts:
                total = sum(Fraction(character(mu, lam) * character(nu, lam), z_lambda(lam)) for lam in parts)
                assert total == (1 if mu == nu else 0)


def test_schur_is_an_isometry():
    # wedge basis is orthonormal, power sums have <p_lam, p_lam> = z_lam
    for mu in partitions_upto(5):
        for nu in partitions_upto(5):
            u = schur_transition({mu: Fraction(1)})
            w = schur_transition({nu: Fraction(1)})
            assert inner(u, w) == (1 if mu == nu else 0)


# ---------------------------------------------------------------- vertex operators

def test_gamma_element_examples():
    for m in (Fraction(2, 3), Fraction(-5, 4)):
        assert gamma_element(m, (), ()) == 1
        assert gamma_element(m, (1, 1), (2, 1)) == m * (m - 1) * (m - 2) * (m + 3) * (m + 1) / 6
    for mu in partitions_upto(3):
        for nu in partitions_upto(3):
            assert gamma_element(0, mu, nu) == (1 if mu == nu else 0)


@settings(max_examples=40)
@given(small, small, rats, st.sampled_from(["full", "even", "odd"]))
def test_gamma_element_two_routes(mu, nu, m, variant):
    assert gamma_element(m, mu, nu, variant) == gamma_element_operator(m, mu, nu, variant)


@pytest.mark.parametrize("mu,nu", [((1, 1), (2, 1)), ((2,), (1,)), ((3, 1), (2, 2, 1)), ((), (2,))])
def test_gamma_matches_rank_one_weight(mu, nu):
    for m in (Fraction(1, 3), Fraction(-7, 5)):
        assert gamma_element(m, mu, nu) == W_element((mu,), (nu,), [0], [0], m).value


@pytest.mark.parametrize("variant", ["e", "o", "full"])
def test_omega_relations(variant):
    count, bad = omega_check(variant, Fraction(2, 3), Fraction(-3, 5), 4)
    assert count > 0 and not bad
    count, bad = omega_check(variant, 0, Fraction(1, 2), 2)
    assert not bad


def test_omega_product_and_grading():
    assert omega_product_check(6)
    for parity in ("even", "odd", "full"):
        count, bad = gcrq_check(parity, 4)
        assert count > 0 and not bad


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_even_odd_split_round_trip(lam):
    v = {lam: Fraction(3)}
    assert gamma_join(gamma_split(v)) == v


# ---------------------------------------------------------------- affine sl2 and Sugawara

def gens(picture):
    return lambda name, i: (lambda v: generator(picture, name, i, v))


def sample_states(picture, bound):
    if picture == "principal":
        return [{lam: Fraction(1)} for n in range(bound + 1) for lam in boson.odd_partitions(n)]
    return [{lam: Fraction(1)} for lam in partitions_upto(bound)]


@pytest.mark.parametrize("picture", ["principal", "homogeneous"])
def test_affine_relations(picture):
    g = gens(picture)
    for v in sample_states(picture, 4):
        for i in range(-2, 3):
            for j in range(-2, 3):
                level = i if i == -j else 0
                assert commutator(g("e", i), g("f", j), v) == boson.combine((1, g("h", i + j)(v)), (level, v))
                assert commutator(g("h", i), g("h", j), v) == boson.scale(v, 2 * level)
                assert commutator(g("h", i), g("e", j), v) == boson.scale(g("e", i + j)(v), 2)
                assert commutator(g("h", i), g("f", j), v) == boson.scale(g("f", i + j)(v), -2)


@pytest.mark.parametrize("picture", ["principal", "homogeneous"])
def test_sugawara_virasoro_relations(picture):
    L = lambda k: (lambda v: sugawara_L(k, 0, picture, v))
    for v in sample_states(picture, 3):
        for k in range(-3, 4):
            for j in range(-3, 4):
                central = Fraction(k ** 3 - k, 12) if k == -j else 0
                assert commutator(L(k), L(j), v) == boson.combine((k - j, L(k + j)(v)), (central, v))


def test_principal_h0_kills_vacuum():
    assert generator("principal", "h", 0, VAC) == {}


def test_sugawara_L0_is_d_prime_in_principal_picture():
    for v in sample_states("principal", 6):
        assert sugawara_L(0, 0, "principal", v) == d_prime("principal", v)


@pytest.mark.parametrize("k", range(-2, 3))
@pytest.mark.parametrize("s", [Fraction(1, 4), Fraction(-2, 3), Fraction(0)])
def test_vacuum_eigenvalue(k, s):
    v = vacuum_vector(k)
    assert all(all(p % 2 for p in lam) for lam in v)
    assert sugawara_L(0, s, "principal", v) == boson.scale(v, (k + s) ** 2)
    assert generator("principal", "h", 0, v) == boson.scale(v, 2 * k)
    for j in (1, 2):
        assert sugawara_L(j, s, "principal", v) == {}


def test_homogeneous_vacuum_is_staircase():
    assert vacuum_vector(1, "homogeneous") == {staircase(1): 1}


def test_kac_multiplicities():
    decomposition = charge_decompose(10)
    for key, value in kac_prediction(4).items():
        assert decomposition.get(key, 0) == value
    assert kac_prediction(1) == {(0, 0): 1, (0, 1): 1, (2, 1): 1, (-2, 1): 1}


def test_A0_spectrum_is_even():
    for lam in boson.odd_partitions(3):
        image = A_op(0, {lam: Fraction(1)})
        assert all(sum(mu) == 3 for mu in image)


@pytest.mark.parametrize("k", [0, 1, -1])
def test_verma_embedding_preserves_shapovalov_form(k):
    s = Fraction(1, 4)
    p = VirParams(Fraction(1), (k + s) ** 2)
    for n in range(4):
        basis = partitions_of(n)
        images = [verma_embedding(k, s, mu) for mu in basis]
        vac = inner(vacuum_vector(k), vacuum_vector(k))
        matrix = [[inner(a, b) / vac for b in images] for a in images]
        assert matrix == gram(n, p)
        for mu, img in zip(basis, images):
            assert sugawara_L(0, s, "principal", img) == boson.scale(img, (k + s) ** 2 + n)


def test_verma_embedding_detects_reducible_module():
    # weight (k + s)^2 = 0 has a singular vector at level one
    with pytest.raises(SingularGram):
        verma_embedding(0, 0, (1,))


def test_truncation_window_is_enforced():
    with pytest.raises(TruncationExceeded):
        sugawara_L(0, 0, "principal", {(5,): Fraction(1)}, D=3)
    with pytest.raises(TruncationExceeded):
        verma_embedding(2, Fraction(1, 4), (2, 1), D=4)


@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_induced_commutator_blocks(k):
    m = Fraction(3, 7)
    for lam in [(), (1,), (3,), (1, 1, 1), (3, 1), (5, 1)]:
        for twice_p in range(-8, 9):
            lhs, rhs = mainprop_block(m, k, Fraction(twice_p, 2), lam)
            assert lhs == rhs
