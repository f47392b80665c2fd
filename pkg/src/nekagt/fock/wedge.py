"""Semi-infinite wedge space with its partition basis.

v_mu = v_{mu_1} ^ v_{mu_2 - 1} ^ v_{mu_3 - 2} ^ ..., so the vacuum occupies
positions 0, -1, -2, ...  States are dicts partition -> coefficient.
"""
from fractions import Fraction
from functools import lru_cache

from ..errors import CrossCheckFailure
from ..partitions import border_strips, make_partition, part, partitions_of, removable_strips
from .boson import add_into, z_lambda


def positions(mu, length):
    return [part(mu, i) - i + 1 for i in range(1, length + 1)]


def _window(mu, *indices):
    return len(mu) + max((abs(i) for i in indices), default=0) + 2


@lru_cache(maxsize=None)
def _move(mu, i, j):
    """rho'(E_ij) v_mu for i != j, as (sign, partition) or None."""
    L = _window(mu, i, j)
    pos = positions(mu, L)
    if j not in pos or i in pos:
        return None
    lo, hi = min(i, j), max(i, j)
    sign = (-1) ** sum(1 for p in pos if lo < p < hi)
    new = sorted([p for p in pos if p != j] + [i], reverse=True)
    return sign, make_partition(p + k - 1 for k, p in enumerate(new, start=1))


def occupied(mu, i):
    if i <= -len(mu):
        return True
    return i in positions(mu, len(mu))


def rho_E(i, j, state):
    """The projective action of the elementary matrix E_ij."""
    out = {}
    for mu, c in state.items():
        if i == j:
            value = int(occupied(mu, i)) - int(i <= 0)
            if value:
                add_into(out, {mu: c * value})
            continue
        moved = _move(mu, i, j)
        if moved:
            add_into(out, {moved[1]: c * moved[0]})
    return out


def wedge_degree_op(state):
    return {mu: c * sum(mu) for mu, c in state.items() if sum(mu)}


def alpha_esum(n, state):
    """alpha_n = sum_i rho(E_{i, i+n}), summed over the finitely many nonzero terms."""
    if n == 0:
        raise ValueError("n must be nonzero")
    out = {}
    for mu, c in state.items():
        L = _window(mu, n)
        pos = positions(mu, L)
        for j in pos:
            moved = _move(mu, j - n, j) if j - n >= -L + 1 else None
            if moved:
                add_into(out, {moved[1]: c * moved[0]})
    return out


def alpha_strips(n, state):
    """Border-strip rule: alpha_{-n} adds n-strips, alpha_n removes them."""
    if n == 0:
        raise ValueError("n must be nonzero")
    out = {}
    for mu, c in state.items():
        strips = border_strips(mu, -n) if n < 0 else removable_strips(mu, n)
        for lam, height in strips:
            add_into(out, {lam: c * (-1) ** height})
    return out


def alpha(n, state, check=False):
    out = alpha_strips(n, state)
    if check:
        other = alpha_esum(n, state)
        if other != out:
            raise CrossCheckFailure(f"alpha_{n} disagrees on {state}", other, out)
    return out


# ---------------------------------------------------------------- Schur <-> power sums

@lru_cache(maxsize=None)
def character(mu, lam):
    """chi^mu(lam) by Murnaghan-Nakayama: strip off the parts of lam in turn."""
    if not lam:
        return 1 if not mu else 0
    return sum((-1) ** h * character(nu, lam[1:]) for nu, h in removable_strips(mu, lam[0]))


@lru_cache(maxsize=None)
def _p_to_wedge(lam):
    """alpha_lam v_0 = alpha_{-lam_1} ... alpha_{-lam_l} v_0 as a wedge state."""
    state = {(): Fraction(1)}
    for k in reversed(lam):
        state = alpha_strips(-k, state)
    return tuple(state.items())


def schur_transition(state):
    """Wedge state -> boson state: v_mu = sum_lam chi^mu(lam)/z_lam p_lam."""
    out = {}
    for mu, c in state.items():
        for lam in partitions_of(sum(mu)):
            chi = character(mu, lam)
            if chi:
                add_into(out, {lam: Fraction(c * chi, z_lambda(lam))})
    return out


def schur_inverse(boson):
    """Boson state -> wedge state, by applying the power sums to the vacuum."""
    out = {}
    for lam, c in boson.items():
        add_into(out, dict(_p_to_wedge(lam)), c)
    return out


def wedge_inner(u, w):
    return sum((c * w[mu] for mu, c in u.items() if mu in w), Fraction(0))
