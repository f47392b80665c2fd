"""Torus characters of the Ext bundle at fixed points, and their Euler classes.

The rank-one character E_{mu,nu}(z1, z2) is available from two independent
formulas: the closed form in terms of the box generating functions Q_mu, and
the arm/leg sum.  Under z1 = z, z2 = 1/z it becomes a one-variable Laurent
polynomial, which is also computed a third way from the beta-number series f_mu.
"""
from fractions import Fraction
from functools import lru_cache

from .errors import CrossCheckFailure, DegenerateParameters, TailMismatch
from .exactmath import LaurentPoly
from .partitions import arm_leg, boxes, part

Z12 = ("z1", "z2")


def Q_mu(mu):
    """Sum of z1^col z2^row over boxes, 0-based."""
    return LaurentPoly(Z12, {(j - 1, i - 1): 1 for i, j in boxes(mu)})


_M = LaurentPoly(Z12, {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})


@lru_cache(maxsize=None)
def E_pair_closed(mu, nu):
    """E = z1^-1 z2^-1 conj(Q_mu) + conj(1 - M Q_mu) Q_nu.

    This is chi(R,R) - conj(M ch I_mu) ch I_nu with the M^{-1} terms cancelled
    using conj(M)/M = z1^-1 z2^-1.
    """
    q_mu = Q_mu(mu)
    one = LaurentPoly.const(Z12)
    first = LaurentPoly.monomial(Z12, (-1, -1)) * q_mu.conjugate()
    return first + (one - _M * q_mu).conjugate() * Q_mu(nu)


@lru_cache(maxsize=None)
def E_pair_hooks(mu, nu):
    terms = {}
    for s in boxes(mu):
        a, l = arm_leg(mu, nu, s)
        terms[(-a - 1, l)] = terms.get((-a - 1, l), 0) + 1
    for s in boxes(nu):
        a, l = arm_leg(nu, mu, s)
        terms[(a, -l - 1)] = terms.get((a, -l - 1), 0) + 1
    return LaurentPoly(Z12, terms)


E_pair = E_pair_hooks


def ranked_vars(r):
    return Z12 + tuple(f"w{i}" for i in range(1, r + 1)) + tuple(f"v{i}" for i in range(1, r + 1))


def E_ranked(mus, nus):
    """sum_{i,j} w_i^-1 v_j E_{mu_i, nu_j}(z1, z2)."""
    r = len(mus)
    if len(nus) != r:
        raise ValueError("tuples must have the same rank")
    variables = ranked_vars(r)
    terms = {}
    for i, mu in enumerate(mus):
        for j, nu in enumerate(nus):
            for (a, b), c in E_pair(mu, nu).terms.items():
                e = [a, b] + [0] * (2 * r)
                e[2 + i] -= 1
                e[2 + r + j] += 1
                e = tuple(e)
                terms[e] = terms.get(e, 0) + c
    return LaurentPoly(variables, terms)


# ---------------------------------------------------------------- t1 + t2 = 0

def f_mu(mu, L=None):
    """Beta-number series sum_{i>=1} z^{mu_i - i + 1} as (finite part, L).

    The series equals ``finite + z^{-L} / (1 - z^{-1})`` where the finite part
    runs over i = 1..L.
    """
    if L is None:
        L = len(mu)
    if L < len(mu):
        raise ValueError("L must be at least the length of mu")
    finite = {}
    for i in range(1, L + 1):
        e = part(mu, i) - i + 1
        finite[e] = finite.get(e, 0) + 1
    return finite, L


def _div_one_minus_z(p):
    """Exact quotient of a one-variable Laurent polynomial by (1 - z)."""
    if not p:
        return {}
    lo, hi = min(p), max(p)
    out = {}
    acc = 0
    for e in range(lo, hi + 1):
        acc += p.get(e, 0)
        if acc:
            out[e] = acc
    if acc != 0:
        raise TailMismatch("tail terms do not cancel")
    return out


def _mul1(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return out


def E_from_f(mu, nu):
    """E_{mu,nu}(z) = chi_{0,0}(z) - f_mu(1/z) f_nu(z) with tails cancelled."""
    L = max(len(mu), len(nu))
    fm, _ = f_mu(mu, L)
    fn, _ = f_mu(nu, L)
    A = {-e: c for e, c in fm.items()}
    B = fn
    # f_mu(1/z) = A + z^L/(1-z), f_nu(z) = B - z^{1-L}/(1-z); the pure-tail
    # product is chi_{0,0}.  What remains is -AB + (A z^{1-L} - B z^L)/(1-z).
    tail = {}
    for e, c in A.items():
        tail[e + 1 - L] = tail.get(e + 1 - L, 0) + c
    for e, c in B.items():
        tail[e + L] = tail.get(e + L, 0) - c
    tail = {e: c for e, c in tail.items() if c}
    out = _div_one_minus_z(tail)
    for e, c in _mul1(A, B).items():
        out[e] = out.get(e, 0) - c
    return LaurentPoly(("z",), {(e,): c for e, c in out.items() if c})


@lru_cache(maxsize=None)
def E_specialized(mu, nu):
    """E_{mu,nu}(z, 1/z), computed from the arm/leg sum and from f_mu."""
    via_hooks = E_pair_hooks(mu, nu).substitute(("z",), [(1,), (-1,)])
    via_f = E_from_f(mu, nu)
    if via_hooks != via_f:
        raise CrossCheckFailure(f"E_{mu},{nu}(z) disagrees", via_hooks, via_f)
    return via_hooks


def _sub_weights(mus, nus, a, b):
    """Yield (z-exponent, coefficient, framing offset b_j - a_i)."""
    for i, mu in enumerate(mus):
        for j, nu in enumerate(nus):
            off = Fraction(b[j]) - Fraction(a[i])
            for (alpha,), c in E_specialized(mu, nu).terms.items():
                yield alpha, c, off


def w_weight(mus, nus, a, b, m, t=1):
    """e_m of the specialized ranked character at t1 = t, t2 = -t."""
    m = Fraction(m)
    t = Fraction(t)
    num = Fraction(1)
    den = Fraction(1)
    zero = False
    for alpha, c, off in _sub_weights(mus, nus, a, b):
        wt = m + alpha * t + off
        if wt == 0:
            if c < 0:
                raise DegenerateParameters(f"zero weight for {mus}->{nus}", (mus, nus))
            zero = True
        elif c > 0:
            num *= wt ** c
        else:
            den *= wt ** (-c)
    return Fraction(0) if zero else num / den


def w_weight_general(mus, nus, a, b, m, t1, t2):
    """e_m of the ranked character with independent t1, t2."""
    m, t1, t2 = Fraction(m), Fraction(t1), Fraction(t2)
    out = Fraction(1)
    zero = False
    for i, mu in enumerate(mus):
        for j, nu in enumerate(nus):
            off = Fraction(b[j]) - Fraction(a[i])
            for (x, y), c in E_pair(mu, nu).terms.items():
                wt = m + x * t1 + y * t2 + off
                if wt == 0:
                    if c < 0:
                        raise DegenerateParameters(f"zero weight for {mus}->{nus}", (mus, nus))
                    zero = True
                else:
                    out *= wt ** c
    return Fraction(0) if zero else out


def _is_positive_form(alpha, i, j):
    """Sign rule for the canonical square root.

    The weight alpha*t + a_j - a_i is read as a linear form in (t, a_1, a_2, ...)
    and kept when its first nonzero coefficient is positive.
    """
    if alpha:
        return alpha > 0
    if i == j:
        return None
    return j < i


def half_weight(mus, a, t=1):
    """Canonical square root w_mu(a) of the diagonal weight.

    Satisfies w_{mu,mu}(a, a, 0) = (-1)^{r|mu|} half_weight(mu, a)^2.
    """
    t = Fraction(t)
    out = Fraction(1)
    for i, mu in enumerate(mus):
        for j, nu in enumerate(mus):
            off = Fraction(a[j]) - Fraction(a[i])
            for (alpha,), c in E_specialized(mu, nu).terms.items():
                sign = _is_positive_form(alpha, i, j)
                if sign is None:
                    raise DegenerateParameters("zero weight form in diagonal character", mus)
                if not sign:
                    continue
                wt = alpha * t + off
                if wt == 0:
                    raise DegenerateParameters(f"zero diagonal weight for {mus}", mus)
                out *= wt ** c
    return out
