"""Truncated generalized q-expansions sum_T a(T) q^T.

Coefficients live in Q (Fraction); keys are doubled index matrices 2T as
produced by halfint.  An expansion of degree n with trace bound N stores
exactly the coefficients with trace(T) <= N, zeros omitted.  Since traces
add under matrix addition, products of expansions are exact up to the
minimum of the two bounds, which is the bound every binary operation
returns.

Values are scalars, or square blocks of size comb(n, r) for the image of
an order-r minor theta operator; the shape field is "scalar" or
("compound", r).
"""

import json
from fractions import Fraction
from math import comb

from .halfint import (
    HalfIntegralMatrix,
    freeze,
    key_sort,
    key_trace,
    mat_add,
    mat_scale,
    zero_matrix,
)

SCALAR = "scalar"


def rational_to_str(x):
    f = Fraction(x)
    return "%d/%d" % (f.numerator, f.denominator)


def rational_from_str(s):
    """Parse 'a/b' or a plain integer string."""
    return Fraction(str(s))


def _normalize_shape(shape, degree):
    if shape == SCALAR:
        return shape
    if (
        isinstance(shape, tuple)
        and len(shape) == 2
        and shape[0] == "compound"
        and isinstance(shape[1], int)
        and 1 <= shape[1] <= degree
    ):
        return shape
    raise ValueError("shape must be 'scalar' or ('compound', r) with 1 <= r <= degree")


def _zero_block(size):
    return tuple((Fraction(0),) * size for _ in range(size))


class FourierExpansion:
    """Exact truncated Fourier expansion over half-integral indices.

    Arithmetic (+, -, *, **) tracks trace bounds; metadata (weight, level,
    character) is informational, propagated when determined and dropped
    otherwise, and never takes part in equality."""

    __slots__ = ("degree", "trace_bound", "shape", "coeffs", "weight", "level", "character")

    def __init__(self, degree, trace_bound, coeffs=None, shape=SCALAR,
                 weight=None, level=None, character=None):
        if not isinstance(degree, int) or degree < 1:
            raise ValueError("degree must be a positive integer")
        if not isinstance(trace_bound, int) or trace_bound < 0:
            raise ValueError("trace bound must be a nonnegative integer")
        self.degree = degree
        self.trace_bound = trace_bound
        self.shape = _normalize_shape(shape, degree)
        self.weight = None if weight is None else Fraction(weight)
        self.level = None if level is None else int(level)
        self.character = character
        size = self.block_size
        stored = {}
        for key, value in (coeffs or {}).items():
            t = key if isinstance(key, HalfIntegralMatrix) else HalfIntegralMatrix(key)
            if t.degree != degree:
                raise ValueError("key degree mismatch")
            if t.trace > trace_bound:
                raise ValueError("key exceeds the trace bound")
            if not t.is_psd():
                raise ValueError("keys must be positive semidefinite")
            if self.shape == SCALAR:
                v = Fraction(value)
                if v == 0:
                    continue
            else:
                v = freeze([[Fraction(x) for x in row] for row in value])
                if len(v) != size:
                    raise ValueError("block size mismatch")
                if all(x == 0 for row in v for x in row):
                    continue
            stored[t.doubled] = v
        self.coeffs = stored

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, degree, trace_bound, shape=SCALAR):
        return cls(degree, trace_bound, {}, shape)

    @classmethod
    def constant(cls, value, degree, trace_bound, weight=None, level=None):
        key = zero_matrix(degree)
        return cls(degree, trace_bound, {key: Fraction(value)},
                   weight=weight, level=level)

    # -- basic access ---------------------------------------------------

    @property
    def block_size(self):
        return 1 if self.shape == SCALAR else comb(self.degree, self.shape[1])

    def support(self):
        """Keys with nonzero coefficient, sorted by (trace, entries)."""
        return sorted(self.coeffs, key=key_sort)

    def coefficient(self, key):
        """Coefficient at T (doubled matrix, nested sequence of ints, or a
        HalfIntegralMatrix).  Asking beyond the trace bound is an error."""
        if isinstance(key, HalfIntegralMatrix):
            t = key
        else:
            t = HalfIntegralMatrix(key)
        if t.degree != self.degree:
            raise ValueError("key degree mismatch")
        if t.trace > self.trace_bound:
            raise ValueError("coefficient beyond the trace bound")
        if self.shape == SCALAR:
            return self.coeffs.get(t.doubled, Fraction(0))
        return self.coeffs.get(t.doubled, _zero_block(self.block_size))

    def truncate(self, new_bound):
        """Forget coefficients above new_bound (<= current bound)."""
        if new_bound > self.trace_bound:
            raise ValueError("cannot extend a truncated expansion")
        kept = {k: v for k, v in self.coeffs.items() if key_trace(k) <= new_bound}
        return self._build(new_bound, kept, self.shape,
                           self.weight, self.level, self.character)

    def _build(self, bound, coeffs, shape, weight, level, character):
        out = FourierExpansion.__new__(FourierExpansion)
        out.degree = self.degree
        out.trace_bound = bound
        out.shape = shape
        out.coeffs = coeffs
        out.weight = weight
        out.level = level
        out.character = character
        return out

    # -- ring operations ------------------------------------------------

    def _require_compatible(self, other):
        if not isinstance(other, FourierExpansion):
            raise TypeError("expected a FourierExpansion")
        if other.degree != self.degree:
            raise ValueError("degree mismatch")

    def __add__(self, other):
        self._require_compatible(other)
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        bound = min(self.trace_bound, other.trace_bound)
        acc = {k: v for k, v in self.coeffs.items() if key_trace(k) <= bound}
        scalar = self.shape == SCALAR
        for k, v in other.coeffs.items():
            if key_trace(k) > bound:
                continue
            if k in acc:
                s = acc[k] + v if scalar else mat_add(acc[k], v)
                if (s == 0) if scalar else all(x == 0 for row in s for x in row):
                    del acc[k]
                else:
                    acc[k] = s
            else:
                acc[k] = v
        weight = self.weight if self.weight == other.weight else None
        level = self.level if self.level == other.level else None
        character = self.character if self.character == other.character else None
        return self._build(bound, acc, self.shape, weight, level, character)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply every coefficient by the rational c."""
        c = Fraction(c)
        if c == 0:
            coeffs = {}
        elif self.shape == SCALAR:
            coeffs = {k: c * v for k, v in self.coeffs.items()}
        else:
            coeffs = {k: mat_scale(c, v) for k, v in self.coeffs.items()}
        return self._build(self.trace_bound, coeffs, self.shape,
                           self.weight, self.level, self.character)

    def __mul__(self, other):
        if isinstance(other, FourierExpansion):
            return self._convolve(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def _convolve(self, other):
        self._require_compatible(other)
        if self.shape != SCALAR and other.shape != SCALAR:
            raise ValueError("cannot multiply two block-valued expansions")
        shape = other.shape if self.shape == SCALAR else self.shape
        bound = min(self.trace_bound, other.trace_bound)
        left = sorted(
            ((key_trace(k), k, v) for k, v in self.coeffs.items()),
            key=lambda item: item[0],
        )
        right = sorted(
            ((key_trace(k), k, v) for k, v in other.coeffs.items()),
            key=lambda item: item[0],
        )
        scalar = shape == SCALAR
        acc = {}
        for ta, ka, va in left:
            if ta > bound:
                break
            for tb, kb, vb in right:
                if ta + tb > bound:
                    break
                key = mat_add(ka, kb)
                if scalar:
                    term = va * vb
                elif self.shape == SCALAR:
                    term = mat_scale(va, vb)
                else:
                    term = mat_scale(vb, va)
                if key in acc:
                    acc[key] = acc[key] + term if scalar else mat_add(acc[key], term)
                else:
                    acc[key] = term
        if scalar:
            acc = {k: v for k, v in acc.items() if v != 0}
        else:
            acc = {k: v for k, v in acc.items()
                   if any(x != 0 for row in v for x in row)}
        weight = None
        if self.weight is not None and other.weight is not None:
            weight = self.weight + other.weight
        level = self.level if self.level == other.level else None
        character = self.character if self.character == other.character else None
        return self._build(bound, acc, shape, weight, level, character)

    def __pow__(self, exponent):
        if self.shape != SCALAR:
            raise ValueError("powers are defined for scalar expansions only")
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = FourierExpansion.constant(
            1, self.degree, self.trace_bound,
            weight=0 if self.weight is not None else None,
            level=self.level)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- index reparametrizations ----------------------------------------

    def u_p(self, p):
        """Coefficient extraction a(T) -> a(pT); the bound drops to N // p."""
        if not isinstance(p, int) or p < 2:
            raise ValueError("p must be an integer >= 2")
        coeffs = {}
        for k, v in self.coeffs.items():
            if all(x % p == 0 for row in k for x in row):
                coeffs[tuple(tuple(x // p for x in row) for row in k)] = v
        return self._build(self.trace_bound // p, coeffs, self.shape,
                           self.weight, self.level, self.character)

    def dilate(self, c):
        """Substitution q^T -> q^(cT); the bound grows to c * N."""
        if not isinstance(c, int) or c < 1:
            raise ValueError("dilation factor must be a positive integer")
        coeffs = {
            tuple(tuple(c * x for x in row) for row in k): v
            for k, v in self.coeffs.items()
        }
        level = None if self.level is None else c * self.level
        return self._build(c * self.trace_bound, coeffs, self.shape,
                           self.weight, level, self.character)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FourierExpansion)
            and self.degree == other.degree
            and self.shape == other.shape
            and self.trace_bound == other.trace_bound
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return "FourierExpansion(degree=%d, trace_bound=%d, shape=%r, %d terms)" % (
            self.degree, self.trace_bound, self.shape, len(self.coeffs))


# -- classical degree-1 fixtures ------------------------------------------

_BERNOULLI = [Fraction(1)]


def bernoulli(n):
    """Bernoulli number B_n (B_1 = -1/2 convention), by the standard
    recurrence over exact rationals."""
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        s = sum(comb(m + 1, k) * _BERNOULLI[k] for k in range(m))
        _BERNOULLI.append(-s / (m + 1))
    return _BERNOULLI[n]


def divisor_power_sum(k, m):
    return sum(d ** k for d in range(1, m + 1) if m % d == 0)


def eisenstein(weight, trace_bound):
    """Degree-1 Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(m) q^m,
    for even weight k >= 4."""
    if not isinstance(weight, int) or weight < 4 or weight % 2:
        raise ValueError("unsupported Eisenstein weight")
    c = Fraction(-2 * weight) / bernoulli(weight)
    coeffs = {((0,),): Fraction(1)}
    for m in range(1, trace_bound + 1):
        coeffs[((2 * m,),)] = c * divisor_power_sum(weight - 1, m)
    return FourierExpansion(1, trace_bound, coeffs, weight=weight, level=1)


def delta(trace_bound):
    """The degree-1 cusp form of weight 12, as (E4^3 - E6^2) / 1728."""
    e4 = eisenstein(4, trace_bound)
    e6 = eisenstein(6, trace_bound)
    out = (e4 ** 3 - e6 ** 2).scale(Fraction(1, 1728))
    out.weight = Fraction(12)
    out.level = 1
    return out


# -- JSON serialization ----------------------------------------------------


def _shape_to_json(shape):
    if shape == SCALAR:
        return SCALAR
    return {"compound": shape[1]}


def _shape_from_json(obj):
    if obj == SCALAR:
        return SCALAR
    if isinstance(obj, dict) and set(obj) == {"compound"}:
        return ("compound", int(obj["compound"]))
    raise ValueError("bad shape field")


def to_json_dict(f):
    """Schema: degree, trace_bound, shape, meta, and coeffs as a list of
    {"t2": rows of 2T, "value": "a/b" | [["a/b", ...], ...]} sorted by
    (trace, entries)."""
    entries = []
    for k in f.support():
        v = f.coeffs[k]
        if f.shape == SCALAR:
            value = rational_to_str(v)
        else:
            value = [[rational_to_str(x) for x in row] for row in v]
        entries.append({"t2": [list(row) for row in k], "value": value})
    return {
        "degree": f.degree,
        "trace_bound": f.trace_bound,
        "shape": _shape_to_json(f.shape),
        "meta": {
            "weight": None if f.weight is None else rational_to_str(f.weight),
            "level": f.level,
            "character": f.character,
        },
        "coeffs": entries,
    }


def from_json_dict(d):
    shape = _shape_from_json(d["shape"])
    meta = d.get("meta") or {}
    weight = meta.get("weight")
    coeffs = {}
    for entry in d["coeffs"]:
        key = tuple(tuple(int(x) for x in row) for row in entry["t2"])
        value = entry["value"]
        if shape == SCALAR:
            coeffs[key] = rational_from_str(value)
        else:
            coeffs[key] = [[rational_from_str(x) for x in row] for row in value]
    return FourierExpansion(
        int(d["degree"]), int(d["trace_bound"]), coeffs, shape,
        weight=None if weight is None else rational_from_str(weight),
        level=meta.get("level"), character=meta.get("character"))


def dumps(f):
    return json.dumps(to_json_dict(f), sort_keys=True, indent=2) + "\n"


def loads(text):
    return from_json_dict(json.loads(text))
