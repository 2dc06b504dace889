"""Even positive-definite lattices and their degree-n theta series.

A lattice is its Gram matrix Q (integral, symmetric, even diagonal,
positive definite).  The theta series of degree n collects the exact
representation numbers a(T) = #{X integral m x n : X^t Q X = 2T}, which
is a Fourier expansion of weight m/2 over half-integral indices.

Vector enumeration runs on an exact rational quadratic completion
(Cholesky without square roots): Q = sum_i c_i (x_i + sum_{j>i} u_ij x_j)^2
with c_i > 0, so coordinate ranges are exact integer intervals and the
backtracking search never touches floating point.
"""

from fractions import Fraction
from math import lcm

from .halfint import det, freeze, identity, mat_inverse, mat_mul, transpose
from .qexpansion import FourierExpansion


class GramLattice:
    """Even positive-definite Gram matrix with exact invariants."""

    __slots__ = ("rank", "gram")

    def __init__(self, gram):
        g = freeze(gram)
        m = len(g)
        if m < 1:
            raise ValueError("rank must be at least 1")
        for i in range(m):
            for j in range(m):
                if not isinstance(g[i][j], int):
                    raise ValueError("Gram matrix must be integral")
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
            if g[i][i] % 2:
                raise ValueError("Gram matrix must have even diagonal")
        for k in range(1, m + 1):
            sub = [row[:k] for row in g[:k]]
            if det(sub) <= 0:
                raise ValueError("Gram matrix must be positive definite")
        self.rank = m
        self.gram = g

    def det(self):
        return det(self.gram)

    def inverse(self):
        return mat_inverse(self.gram)

    def level(self):
        """Smallest positive integer l with l * Q^{-1} even integral."""
        inv = self.inverse()
        l = lcm(*[x.denominator for row in inv for x in row])
        if any((l * inv[i][i]) % 2 for i in range(self.rank)):
            l *= 2
        return l

    def __eq__(self, other):
        return isinstance(other, GramLattice) and self.gram == other.gram

    def __repr__(self):
        return "GramLattice(rank=%d, det=%d)" % (self.rank, self.det())


def gram_a(m):
    """Root lattice A_m: tridiagonal Gram with 2 on the diagonal and -1 off
    it; rank m, determinant m + 1."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("rank must be a positive integer")
    g = [[0] * m for _ in range(m)]
    for i in range(m):
        g[i][i] = 2
        if i + 1 < m:
            g[i][i + 1] = -1
            g[i + 1][i] = -1
    return GramLattice(g)


def direct_sum(a, b):
    """Orthogonal direct sum of two lattices (block-diagonal Gram)."""
    m, k = a.rank, b.rank
    g = [[0] * (m + k) for _ in range(m + k)]
    for i in range(m):
        for j in range(m):
            g[i][j] = a.gram[i][j]
    for i in range(k):
        for j in range(k):
            g[m + i][m + j] = b.gram[i][j]
    return GramLattice(g)


def cycle_isometry(m):
    """The coordinate (m+1)-cycle of A_m in the root basis: order m + 1,
    fixes only the origin.  Columns: e_i -> e_{i+1} for i < m - 1 and
    e_{m-1} -> -(e_0 + ... + e_{m-1})."""
    s = [[0] * m for _ in range(m)]
    for i in range(m):
        s[i][m - 1] = -1
        if i + 1 < m:
            s[i + 1][i] = 1
    return freeze(s)


def is_free_isometry(lattice, sigma, p):
    """True iff sigma is an isometry of the Gram form of exact order p
    whose only fixed vector is zero (det(sigma - 1) != 0).

    A lattice carrying such an isometry for an odd prime p has every
    theta coefficient at T != 0 divisible by p: the isometry acts freely
    on nonzero representations, cutting them into orbits of size p."""
    s = freeze(sigma)
    m = lattice.rank
    if len(s) != m:
        raise ValueError("size mismatch")
    if any(not isinstance(x, int) for row in s for x in row):
        raise ValueError("the isometry must be integral")
    q = lattice.gram
    if mat_mul(transpose(s), mat_mul(q, s)) != q:
        return False
    power = s
    for _ in range(p - 1):
        power = mat_mul(power, s)
    if power != identity(m):
        return False
    if s == identity(m):
        return False
    shifted = [[s[i][j] - (1 if i == j else 0) for j in range(m)] for i in range(m)]
    return det(shifted) != 0


def _quadratic_completion(gram):
    """Exact c_i > 0 and u_ij (j > i) with
    v^t Q v = sum_i c_i (v_i + sum_{j>i} u_ij v_j)^2."""
    m = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    cs = []
    us = []
    for i in range(m):
        c = a[i][i]
        cs.append(c)
        row = [a[i][j] / c for j in range(m)]
        us.append(row)
        for k in range(i + 1, m):
            for l in range(i + 1, m):
                a[k][l] -= a[i][k] * a[i][l] / c
    return cs, us


def _short_vectors(gram, norm_bound):
    """All integer vectors v with v^t Q v <= norm_bound, by backtracking on
    the quadratic completion from the last coordinate down."""
    m = len(gram)
    cs, us = _quadratic_completion(gram)
    out = []
    coords = [0] * m

    def descend(i, remaining):
        if i < 0:
            out.append(tuple(coords))
            return
        shift = sum(us[i][j] * coords[j] for j in range(i + 1, m))
        base = int(-shift) if shift <= 0 else -int(shift)
        # walk down from floor(-shift), then up from floor(-shift) + 1;
        # the constraint c_i (v + shift)^2 <= remaining is convex in v
        v = base
        while v + shift > 0:
            v -= 1
        while True:
            term = cs[i] * (v + shift) ** 2
            if term > remaining:
                break
            coords[i] = v
            descend(i - 1, remaining - term)
            v -= 1
        v = base
        while v + shift <= 0:
            v += 1
        while True:
            term = cs[i] * (v + shift) ** 2
            if term > remaining:
                break
            coords[i] = v
            descend(i - 1, remaining - term)
            v += 1
        coords[i] = 0

    descend(m - 1, Fraction(norm_bound))
    return sorted(out)


def rep_numbers(lattice, degree, trace_bound):
    """Degree-n theta series of the lattice, exact to the trace bound.

    Coefficient at T counts integral m x n matrices X with X^t Q X = 2T.
    Degrees 1..3 supported; weight metadata m/2, level the Gram level."""
    n = degree
    if not isinstance(n, int) or not 1 <= n <= 3:
        raise ValueError("degree out of supported range 1..3")
    if not isinstance(trace_bound, int) or trace_bound < 0:
        raise ValueError("trace bound must be a nonnegative integer")
    q = lattice.gram
    budget = 2 * trace_bound
    vectors = _short_vectors(q, budget)
    qvs = [
        tuple(sum(q[i][j] * v[j] for j in range(lattice.rank))
              for i in range(lattice.rank))
        for v in vectors
    ]
    norms = [sum(x * y for x, y in zip(v, qv)) for v, qv in zip(vectors, qvs)]
    by_norm = sorted(range(len(vectors)), key=lambda i: norms[i])
    counts = {}
    chosen = [0] * n

    def place(col, used):
        if col == n:
            d = [[0] * n for _ in range(n)]
            for i in range(n):
                d[i][i] = norms[chosen[i]]
                vi = vectors[chosen[i]]
                for j in range(i + 1, n):
                    cross = sum(x * y for x, y in zip(vi, qvs[chosen[j]]))
                    d[i][j] = cross
                    d[j][i] = cross
            key = tuple(tuple(row) for row in d)
            counts[key] = counts.get(key, 0) + 1
            return
        for idx in by_norm:
            if norms[idx] + used > budget:
                break
            chosen[col] = idx
            place(col + 1, used + norms[idx])

    place(0, 0)
    return FourierExpansion(
        n, trace_bound, counts,
        weight=Fraction(lattice.rank, 2), level=lattice.level())


def gram_to_json(lattice):
    return {"rank": lattice.rank, "gram": [list(row) for row in lattice.gram]}


def gram_from_json(d):
    g = [[int(x) for x in row] for row in d["gram"]]
    lattice = GramLattice(g)
    if "rank" in d and int(d["rank"]) != lattice.rank:
        raise ValueError("rank field disagrees with the Gram matrix")
    return lattice
