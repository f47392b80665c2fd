"""Matrix elements of the vertex operators Gamma^{(m)}, and the Omega relations."""
from fractions import Fraction
from functools import lru_cache

from ..exactmath import QSeries
from ..partitions import partitions_upto
from . import boson
from .wedge import schur_transition

VARIANTS = {"full": "full", "even": "even", "odd": "odd"}


@lru_cache(maxsize=None)
def _boson_image(mu):
    return tuple(schur_transition({tuple(mu): Fraction(1)}).items())


def gamma_pair(m, u, w, parity="full"):
    """<Gamma^{(m)}_parity u, w> for boson states u, w (single graded piece).

    Uses <Gamma_-^m(x) Gamma_+^{-m}(1/x) u, w> = <Gamma_+^{-m} u, Gamma_+^{m} w>,
    the Taylor shifts p_k -> p_k -/+ m restricted to the modes of the parity.
    """
    m = Fraction(m)
    return boson.inner(boson.shift(u, -m, parity), boson.shift(w, m, parity))


@lru_cache(maxsize=None)
def _shifted(lam, s, parity):
    return tuple(boson.shift({lam: Fraction(1)}, s, parity).items())


@lru_cache(maxsize=None)
def gamma_monomials(m, lam, mu, parity="full"):
    """<Gamma^{(m)}_parity p_lam, p_mu> for power-sum monomials."""
    m = Fraction(m)
    return boson.inner(dict(_shifted(lam, -m, parity)), dict(_shifted(mu, m, parity)))


def gamma_element(m, mu, nu, variant="full"):
    """Coefficient of <Gamma^{(m)}(x) v_mu, v_nu> on the wedge basis.

    The x-power is |nu| - |mu| for the full operator; for the even and odd
    parts with argument x^{1/2} it is (|nu| - |mu|)/2.
    """
    parity = VARIANTS[variant]
    u = dict(_boson_image(tuple(mu)))
    w = dict(_boson_image(tuple(nu)))
    return gamma_pair(m, u, w, parity)


def gamma_element_operator(m, mu, nu, variant="full"):
    """Same element, by applying the expanded operator and pairing (second route)."""
    parity = VARIANTS[variant]
    u = dict(_boson_image(tuple(mu)))
    w = dict(_boson_image(tuple(nu)))
    image = boson.vertex_coefficient(m, sum(nu) - sum(mu), u, parity)
    return boson.inner(image, w)


# ---------------------------------------------------------------- Omega relations

def omega_series(variant, order):
    """Omega_s(x, y) as a two-variable series to total degree ``order``."""
    xy = QSeries.monomial(2, order, (1, 1))
    one = QSeries.one(2, order)
    x2y2 = xy * xy
    if variant == "e":
        return (one - x2y2).pow(Fraction(-1, 2))
    if variant == "o":
        return (one - x2y2).pow(Fraction(1, 2)) * (one - xy).invert()
    if variant == "full":
        return (one - xy).invert()
    raise ValueError("variant must be e, o or full")


def _gamma_plus_coeff(s, parity, a, state):
    """[x^a] Gamma_{s,+}(x) state = [x^a] exp(s sum x^k alpha_k / k) state."""
    graded = boson.shift_graded(state, s, parity)
    return graded[a] if a < len(graded) else {}


def _gamma_minus_coeff(s, parity, b, state):
    table = boson.exp_raise(s, parity, b)
    return boson.multiply(table[b], state)


def omega_check(variant, m, n, degrees):
    """Blockwise check of Gamma_+^m(x) Gamma_-^n(y) = Omega^{mn} Gamma_-^n(y) Gamma_+^m(x).

    Each block is the coefficient of x^a y^b applied to a basis monomial of
    degree <= ``degrees``.  Returns (comparisons, mismatches).
    """
    parity = {"e": "even", "o": "odd", "full": "full"}[variant]
    m, n = Fraction(m), Fraction(n)
    order = 2 * degrees
    omega = omega_series(variant, order).pow(m * n)
    comparisons = 0
    mismatches = []
    for lam in partitions_upto(degrees):
        if not all(boson.parity_ok(k, parity) for k in lam):
            continue
        state = {lam: Fraction(1)}
        for a in range(degrees + 1):
            for b in range(degrees + 1 - a):
                lhs = _gamma_plus_coeff(m, parity, a, _gamma_minus_coeff(n, parity, b, state))
                rhs = {}
                for (i, j), c in omega.coeffs.items():
                    if i <= a and j <= b:
                        inner = _gamma_minus_coeff(n, parity, b - j, _gamma_plus_coeff(m, parity, a - i, state))
                        boson.add_into(rhs, inner, c)
                comparisons += 1
                if lhs != rhs:
                    mismatches.append((f"lam={lam}, x^{a} y^{b}", rhs, lhs))
    return comparisons, mismatches


def omega_product_check(order):
    """Omega_e * Omega_o = Omega as two-variable series."""
    return omega_series("e", order) * omega_series("o", order) == omega_series("full", order)


def gcrq_check(parity, degrees):
    """q^d Gamma_{s,pm}(x) = Gamma_{s,pm}(x q^{-/+1}) q^d, blockwise.

    On the x^a block of Gamma_{+}, the operator lowers degree by a, so the
    identity says q^{deg - a} = q^{-a} q^{deg}: compare degrees directly.
    """
    comparisons = 0
    mismatches = []
    for lam in partitions_upto(degrees):
        state = {lam: Fraction(1)}
        d = sum(lam)
        for a in range(d + 1):
            piece = _gamma_plus_coeff(1, parity, a, state)
            comparisons += 1
            if any(sum(k) != d - a for k in piece):
                mismatches.append((f"+ lam={lam}, x^{a}", d - a, None))
            piece = _gamma_minus_coeff(1, parity, a, state)
            comparisons += 1
            if any(sum(k) != d + a for k in piece):
                mismatches.append((f"- lam={lam}, x^{a}", d + a, None))
    return comparisons, mismatches
