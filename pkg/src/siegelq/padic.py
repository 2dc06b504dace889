"""p-adic valuations and congruences of Fourier expansions.

Valuations are exact integers (or +inf for zero); congruence F = G mod p^m
means every coefficient difference up to the shared trace bound has
valuation >= m, optionally shifted by the valuation of F itself
(normalized mode, which makes the relation scale-invariant).

The module also carries the two constructive congruence pipelines: the
Frobenius descent (G^p)|U(p) = G mod p for p-integral G, and the bracket
congruence that checks the Rankin-Cohen bracket of f against a dilated
power of a unit theta series reduces, modulo a prescribed p-power, to the
derivative-free theta-operator term.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .diffops import BracketParams, half_rising, rankin_cohen, theta_operator
from .halfint import key_sort, key_trace, mat_sub, zero_matrix
from .qexpansion import SCALAR, FourierExpansion
from .theta import direct_sum, gram_a, rep_numbers


def require_odd_prime(p):
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError("p must be an odd prime")
        d += 2
    return p


def vp(x, p):
    """p-adic valuation of a rational: vp(p) = 1, vp(0) = +inf."""
    require_odd_prime(p)
    x = Fraction(x)
    if x == 0:
        return math.inf
    count = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        count += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        count -= 1
    return count


def vp_expansion(f, p):
    """Minimum valuation over all stored coefficients (block entries
    included); +inf for the zero expansion."""
    require_odd_prime(p)
    best = math.inf
    for value in f.coeffs.values():
        if f.shape == SCALAR:
            entries = (value,)
        else:
            entries = (x for row in value for x in row)
        for x in entries:
            v = vp(x, p)
            if v < best:
                best = v
    return best


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of a congruence check mod p^m up to a trace bound.

    min_valuation is the smallest valuation of a coefficient difference
    (math.inf when they all vanish), witness the first key in
    (trace, entries) order attaining it, bound the trace bound actually
    compared, normalized whether the threshold was shifted by vp(F)."""

    prime: int
    power: int
    holds: bool
    min_valuation: object
    witness: object
    bound: int
    normalized: bool

    def to_json_dict(self):
        return {
            "p": self.prime,
            "m": self.power,
            "holds": self.holds,
            "min_valuation": (
                "inf" if self.min_valuation == math.inf else int(self.min_valuation)
            ),
            "witness_t2": (
                None if self.witness is None else [list(row) for row in self.witness]
            ),
            "bound": self.bound,
            "normalized": self.normalized,
        }


def congruent(f, g, p, m, normalized=False):
    """Check f = g mod p^m coefficientwise up to the shared trace bound.

    Plain mode requires vp(a_f(T) - a_g(T)) >= m for every T; normalized
    mode requires vp(a_f(T) - a_g(T)) >= m + vp_expansion(f) instead, so
    it is invariant under rescaling both sides.  A zero f in normalized
    mode sets the threshold to +inf, reachable only by g vanishing up to
    the bound as well."""
    require_odd_prime(p)
    if not isinstance(m, int) or m < 1:
        raise ValueError("the power m must be a positive integer")
    if f.degree != g.degree:
        raise ValueError("degree mismatch")
    if f.shape != g.shape:
        raise ValueError("shape mismatch")
    bound = min(f.trace_bound, g.trace_bound)
    scalar = f.shape == SCALAR
    keys = {k for k in f.coeffs if key_trace(k) <= bound}
    keys |= {k for k in g.coeffs if key_trace(k) <= bound}
    best = math.inf
    witness = None
    for key in sorted(keys, key=key_sort):
        if scalar:
            diff = f.coeffs.get(key, Fraction(0)) - g.coeffs.get(key, Fraction(0))
            v = vp(diff, p)
        else:
            size = f.block_size
            zero = tuple((Fraction(0),) * size for _ in range(size))
            d = mat_sub(f.coeffs.get(key, zero), g.coeffs.get(key, zero))
            v = min((vp(x, p) for row in d for x in row), default=math.inf)
        if v < best:
            best = v
            witness = key
    threshold = m
    if normalized:
        threshold = m + vp_expansion(f.truncate(bound), p)
    return CongruenceReport(
        prime=p, power=m, holds=best >= threshold,
        min_valuation=best, witness=witness, bound=bound,
        normalized=normalized)


def frobenius_descent(g, p):
    """(g^p)|U(p), congruent to g mod p for p-integral scalar g; the
    result keeps g's trace bound.  (Raising to the p-th power puts every
    cross term of the multinomial in p Z, and U(p) picks the diagonal
    back out.)"""
    require_odd_prime(p)
    if g.shape != SCALAR:
        raise ValueError("needs a scalar expansion")
    if vp_expansion(g, p) < 0:
        raise ValueError("expansion is not p-integral")
    return (g ** p).u_p(p)


def unit_ladder(base, k, i, p):
    """Product of the weight-k(p-1)p^j powers of a unit form for j < i:
    base ** (k (p^i - 1) / (p - 1)), tagged with weight k (p^i - 1).

    If base = 1 mod p and carries weight k(p-1), each factor is = 1 mod p,
    and the whole ladder satisfies ladder^(p^(i-1)) = 1 mod p^i."""
    require_odd_prime(p)
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if not isinstance(i, int) or i < 1:
        raise ValueError("i must be a positive integer")
    one = FourierExpansion.constant(1, base.degree, base.trace_bound)
    if not congruent(base, one, p, 1).holds:
        raise ValueError("base must be congruent to 1 mod p")
    exponent = k * (p ** i - 1) // (p - 1)
    out = base ** exponent
    out.weight = Fraction(k * (p ** i - 1))
    return out


def limit_profile(seq, target, p):
    """Valuation profile of a sequence against its target: entry m is the
    min_valuation of seq[m] - target up to the shared bound.  A p-adically
    convergent sequence shows a profile increasing without bound."""
    require_odd_prime(p)
    if not seq:
        raise ValueError("empty sequence")
    out = []
    for member in seq:
        report = congruent(member, target, p, 1)
        out.append(report.min_valuation)
    return out


def bracket_theta_congruence(f, k, p, m, r, m_dilate):
    """Congruence between the bracket of f against a dilated unit theta
    power and the derivative-free reference term.

    With F the degree-n theta series of A_{p-1} + A_{p-1} (a unit form:
    F = 1 mod p, weight p - 1), set

        g = (F ** p^(m-1)) dilated by p^(m_dilate - 1),
        l = (p - 1) p^(m-1)  (the weight of g),
        reference = (-1)^r half_rising(l - (r-1)/2, r) theta_operator(f, r).

    The report compares rankin_cohen(f, g) with the reference mod
    p^(m + nu), nu the valuation of the reference's scalar factor, up to
    f's trace bound.  F is built at bound ceil(N_f / p^(m_dilate - 1)) so
    the dilation covers N_f exactly."""
    require_odd_prime(p)
    if f.shape != SCALAR:
        raise ValueError("needs a scalar expansion")
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    if not isinstance(m_dilate, int) or m_dilate < 1:
        raise ValueError("m_dilate must be a positive integer")
    n = f.degree
    if not 1 <= r <= n:
        raise ValueError("minor order out of range")
    if vp_expansion(f, p) < 0:
        raise ValueError("expansion is not p-integral")
    k = Fraction(k)
    dil = p ** (m_dilate - 1)
    base_bound = -(-f.trace_bound // dil)
    unit = rep_numbers(direct_sum(gram_a(p - 1), gram_a(p - 1)), n, base_bound)
    one = FourierExpansion.constant(1, n, base_bound)
    if not congruent(unit, one, p, 1).holds:
        raise ValueError("theta series failed the unit congruence")
    g = (unit ** (p ** (m - 1))).dilate(dil)
    if g.trace_bound < f.trace_bound:
        raise ValueError("insufficient trace bound")
    weight_g = Fraction((p - 1) * p ** (m - 1))
    g.weight = weight_g
    params = BracketParams(n, r, k, weight_g)
    bracket = rankin_cohen(f, g, params)
    c = (-1) ** r * half_rising(weight_g - Fraction(r - 1, 2), r)
    if c == 0:
        raise ValueError("vanishing reference factor")
    nu = vp(c, p)
    reference = theta_operator(f, r).scale(c)
    return congruent(bracket, reference, p, m + nu)
