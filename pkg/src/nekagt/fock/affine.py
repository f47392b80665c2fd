"""Affine sl2 at level one on the Fock space, and its Segal-Sugawara operators.

Two pictures are provided.  In the homogeneous picture the generators are
sums of elementary matrices acting on wedge states.  In the principal picture
they act on boson states in the odd modes only (the space Lambda_o), through
the coefficients A_j of Gamma_o^{(2)}(x) - 1 = 2 sum_i A_{-i} x^i.

Every generator X_i lowers the relevant degree by a fixed amount
(e_i: 2i-1, h_i: 2i, f_i: 2i+1), which keeps the Sugawara sums finite.
"""
from fractions import Fraction
from functools import lru_cache

from ..errors import SingularGram, TruncationExceeded
from ..exactmath import mat_rank
from ..partitions import partitions_of, staircase
from ..virasoro import VirParams, gram
from . import boson
from .boson import add_into, scale
from .wedge import rho_E, schur_transition

PICTURES = ("homogeneous", "principal")
LOWERING = {"e": -1, "h": 0, "f": 1}


def lowering(name, i):
    return 2 * i + LOWERING[name]


# ---------------------------------------------------------------- principal

@lru_cache(maxsize=None)
def _A_monomial(j, lam):
    state = {lam: Fraction(1)}
    out = boson.vertex_coefficient(2, -j, state, "odd")
    if j == 0:
        add_into(out, state, -1)
    return tuple(scale(out, Fraction(1, 2)).items())


def A_op(j, state):
    """A_j = (1/2) [x^{-j}] (Gamma_o^{(2)}(x) - 1), lowering odd degree by j."""
    out = {}
    for lam, c in state.items():
        add_into(out, dict(_A_monomial(j, lam)), c)
    return out


def _alpha_or_zero(n, state):
    return boson.alpha(n, state) if n else {}


@lru_cache(maxsize=None)
def _principal_monomial(name, i, lam):
    state = {lam: Fraction(1)}
    if name == "h":
        out = A_op(2 * i, state)
    elif name == "e":
        out = boson.combine((Fraction(1, 2), _alpha_or_zero(2 * i - 1, state)),
                            (Fraction(-1, 2), A_op(2 * i - 1, state)))
    elif name == "f":
        out = boson.combine((Fraction(1, 2), _alpha_or_zero(2 * i + 1, state)),
                            (Fraction(1, 2), A_op(2 * i + 1, state)))
    else:
        raise ValueError(f"unknown generator {name}")
    return tuple(out.items())


# ---------------------------------------------------------------- homogeneous

def _esum(state, start_parity, shift, sign=1, out=None):
    """sum over a of rho(E_{a, a + shift}), a running over integers of the parity."""
    out = {} if out is None else out
    for mu, c in state.items():
        L = len(mu) + abs(shift) + 4
        top = (mu[0] if mu else 0) + abs(shift) + 2
        for a in range(-L, top + 1):
            if a % 2 != start_parity:
                continue
            add_into(out, rho_E(a, a + shift, {mu: c}), sign)
    return out


@lru_cache(maxsize=None)
def _homogeneous_monomial(name, i, mu):
    state = {mu: Fraction(1)}
    if name == "e":
        out = _esum(state, 0, 2 * i - 1)
    elif name == "f":
        out = _esum(state, 1, 2 * i + 1)
    elif name == "h":
        out = _esum(state, 0, 2 * i)
        _esum(state, 1, 2 * i, -1, out)
    else:
        raise ValueError(f"unknown generator {name}")
    return tuple(out.items())


def generator(picture, name, i, state):
    """Apply e_i, h_i or f_i in the given picture."""
    table = {"principal": _principal_monomial, "homogeneous": _homogeneous_monomial}[picture]
    out = {}
    for lam, c in state.items():
        add_into(out, dict(table(name, i, lam)), c)
    return out


def sl2_generators(picture):
    """Dict name -> callable (i, state) for e, h, f, plus degree operators."""
    if picture not in PICTURES:
        raise ValueError(f"picture must be one of {PICTURES}")
    gens = {name: (lambda i, v, name=name: generator(picture, name, i, v)) for name in "ehf"}
    gens["d_prime"] = lambda v: d_prime(picture, v)
    gens["K"] = lambda v: dict(v)
    return gens


def degree(state):
    return {lam: c * sum(lam) for lam, c in state.items() if sum(lam)}


def d_prime(picture, state):
    """d' = (d - h_0/2)/2, with d the (odd-mode) degree."""
    return boson.combine((Fraction(1, 2), degree(state)),
                         (Fraction(-1, 4), generator(picture, "h", 0, state)))


# ---------------------------------------------------------------- Sugawara

def _normal_pair(picture, a, i, b, j, state):
    """:a_i b_j: state."""
    if i <= 0:
        return generator(picture, a, i, generator(picture, b, j, state))
    return generator(picture, b, j, generator(picture, a, i, state))


@lru_cache(maxsize=None)
def _sugawara_monomial(picture, k, lam):
    state = {lam: Fraction(1)}
    D = sum(lam)
    bound = (D + 1) // 2 + 1
    out = {}
    for i in range(k - bound - 1, bound + 2):
        add_into(out, _normal_pair(picture, "e", i, "f", k - i, state), 2)
        add_into(out, _normal_pair(picture, "f", i, "e", k - i, state), 2)
        add_into(out, _normal_pair(picture, "h", i, "h", k - i, state))
    return tuple(scale(out, Fraction(1, 12)).items())


def sugawara_L(k, s, picture, state, D=None):
    """L_{k,s} = L_k + s h_k + s^2 delta_{k,0} applied to a state.

    If D is given, states of degree above D are refused.
    """
    if D is not None and boson.max_degree(state) > D:
        raise TruncationExceeded(f"state degree exceeds window {D}")
    s = Fraction(s)
    out = {}
    for lam, c in state.items():
        add_into(out, dict(_sugawara_monomial(picture, k, lam)), c)
    if s:
        add_into(out, generator(picture, "h", k, state), s)
        if k == 0:
            add_into(out, state, s * s)
    return out


def vacuum_vector(k, picture="principal"):
    """Lowest vector v_k: the staircase basis vector, as a boson or wedge state."""
    wedge = {staircase(k): Fraction(1)}
    return schur_transition(wedge) if picture == "principal" else wedge


# ---------------------------------------------------------------- Kac decomposition

def odd_basis(n):
    return boson.odd_partitions(n)


def charge_decompose(D):
    """Multiplicities of the joint (h_0, d') eigenvalues on Lambda_o in degrees <= D.

    Returns a dict (h0 eigenvalue, d' eigenvalue) -> multiplicity, obtained as
    nullities of A_0 - 2k on each odd-degree block (h_0 commutes with the degree).
    """
    out = {}
    for n in range(D + 1):
        basis = odd_basis(n)
        index = {lam: i for i, lam in enumerate(basis)}
        size = len(basis)
        matrix = [[Fraction(0)] * size for _ in range(size)]
        for col, lam in enumerate(basis):
            for mu, c in A_op(0, {lam: Fraction(1)}).items():
                matrix[index[mu]][col] = c
        found = 0
        for k in range(-n - 1, n + 2):
            shifted = [[matrix[r][c] - (2 * k if r == c else 0) for c in range(size)] for r in range(size)]
            nullity = size - mat_rank(shifted)
            if nullity:
                out[(2 * k, Fraction(n - k, 2))] = nullity
                found += nullity
        if found != size:
            raise ArithmeticError(f"A_0 is not diagonalizable with even integer spectrum at degree {n}")
    return out


def kac_prediction(max_dprime):
    """Coefficients of sum_k y^{2k} q^{k^2} / (q;q)_inf up to q^{max_dprime}."""
    out = {}
    k = 0
    while k * k <= max_dprime:
        for sign in {k, -k}:
            for d in range(k * k, max_dprime + 1):
                out[(2 * sign, Fraction(d))] = len(partitions_of(d - k * k))
        k += 1
    return out


# ---------------------------------------------------------------- Verma embedding

def verma_embedding(k, s, mu, D=None):
    """Image of L_{-mu} v_0 in V_k, via L_{-mu_1,s} ... L_{-mu_l,s} v_k."""
    s = Fraction(s)
    weight = (k + s) ** 2
    n = sum(mu)
    for level in range(1, n + 1):
        matrix = gram(level, VirParams(Fraction(1), weight))
        if mat_rank(matrix) < len(matrix):
            raise SingularGram(f"Verma module of weight {weight} is reducible at level {level}", level)
    state = vacuum_vector(k)
    for part_ in reversed(mu):
        state = sugawara_L(-part_, s, "principal", state)
        if D is not None and boson.max_degree(state) > D:
            raise TruncationExceeded(f"degree {boson.max_degree(state)} exceeds window {D}")
    return state


# ---------------------------------------------------------------- the induced commutator

def gamma_block(m, p, state):
    """Gamma_p: the x^p coefficient of Gamma_o^{(2m)}(x^{1/2}), p a half-integer."""
    j = Fraction(p) * 2
    if j.denominator != 1:
        raise ValueError("p must be a half-integer")
    return boson.vertex_coefficient(2 * Fraction(m), int(j), state, "odd")


def mainprop_block(m, k, p, lam, s=Fraction(1, 4)):
    """Both sides of [L_{k,s}, Gamma_p] lam = (m^2 k + p - k) Gamma_{p-k} lam."""
    m, p = Fraction(m), Fraction(p)
    state = {lam: Fraction(1)}
    lhs = boson.combine(
        (1, sugawara_L(k, s, "principal", gamma_block(m, p, state))),
        (-1, gamma_block(m, p, sugawara_L(k, s, "principal", state))),
    )
    rhs = scale(gamma_block(m, p - k, state), m * m * k + p - k)
    return lhs, rhs
