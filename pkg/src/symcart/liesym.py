"""Reductive Lie algebras given by structure constants, involutions with
their h/q eigenspace split, invariant forms, centralizers, and a small
catalog of symmetric pairs built from explicit matrix representations.

All validation is exact; a pair that constructs without raising satisfies
every structural identity on the nose.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactalg import (
    GaussianRational,
    LinearSpan,
    MultiPoly,
    Qi,
    kernel_basis,
    mat_det,
    mat_mul,
    mat_vec,
    matrix_min_poly,
    parse_scalar,
    univ_derivative,
    univ_gcd,
    univ_is_squarefree,
)


def _scalar(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return GaussianRational(x)


def _vec(v):
    return [_scalar(x) for x in v]


def _mat(rows):
    return [_vec(r) for r in rows]


def _is_zero_vec(v):
    return all(x.is_zero() for x in v)


def _render_univ(coeffs):
    p = MultiPoly(1, {(k,): c for k, c in enumerate(coeffs)})
    return p.render(names=["t"])


class LieAlgebra:
    """Lie algebra over Q(i) by structure constants c[i][j][k]."""

    def __init__(self, dim, structure_constants):
        self.dim = dim
        c = [[_vec(structure_constants[i][j]) for j in range(dim)] for i in range(dim)]
        self.c = c
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    if c[i][j][k] != -c[j][i][k]:
                        raise ValueError(
                            f"structure constants violate antisymmetry at ({i}, {j}, {k})"
                        )
        # Jacobi on basis triples; bilinearity extends it to everything
        for i in range(dim):
            for j in range(i + 1, dim):
                for k in range(j + 1, dim):
                    ei, ej, ek = (self._unit(t) for t in (i, j, k))
                    s = self.bracket(self.bracket(ei, ej), ek)
                    s = [a + b for a, b in zip(s, self.bracket(self.bracket(ej, ek), ei))]
                    s = [a + b for a, b in zip(s, self.bracket(self.bracket(ek, ei), ej))]
                    if not _is_zero_vec(s):
                        raise ValueError(
                            f"Jacobi identity fails at basis triple ({i}, {j}, {k})"
                        )

    def _unit(self, i):
        v = [Qi(0)] * self.dim
        v[i] = Qi(1)
        return v

    def bracket(self, x, y):
        x = _vec(x)
        y = _vec(y)
        out = [Qi(0)] * self.dim
        for i in range(self.dim):
            if x[i].is_zero():
                continue
            for j in range(self.dim):
                if y[j].is_zero():
                    continue
                f = x[i] * y[j]
                row = self.c[i][j]
                for k in range(self.dim):
                    if not row[k].is_zero():
                        out[k] = out[k] + f * row[k]
        return out

    def ad(self, x):
        """The matrix of ad(x): column j holds [x, e_j]."""
        x = _vec(x)
        n = self.dim
        M = [[Qi(0)] * n for _ in range(n)]
        for i in range(n):
            if x[i].is_zero():
                continue
            for j in range(n):
                for k in range(n):
                    v = self.c[i][j][k]
                    if not v.is_zero():
                        M[k][j] = M[k][j] + x[i] * v
        return M

    def killing(self):
        ads = [self.ad(self._unit(i)) for i in range(self.dim)]
        n = self.dim
        B = [[Qi(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                t = Qi(0)
                for r in range(n):
                    for s in range(n):
                        t = t + ads[i][r][s] * ads[j][s][r]
                B[i][j] = t
                B[j][i] = t
        return B


class CartanSubspace:
    """Span of exact commuting semisimple q-vectors; validated against a pair."""

    def __init__(self, basis):
        self.basis = [_vec(v) for v in basis]
        self.rank = len(self.basis)

    def embed(self, coords):
        coords = _vec(coords)
        if len(coords) != self.rank:
            raise ValueError("coordinate count does not match the rank")
        n = len(self.basis[0]) if self.basis else 0
        out = [Qi(0)] * n
        for c, v in zip(coords, self.basis):
            out = [a + c * b for a, b in zip(out, v)]
        return out


class SymmetricPair:
    """A reductive algebra with involution sigma and invariant form kappa.

    The basis must be sigma-adapted: every basis vector is a +1 or -1
    eigenvector, giving the h/q index split directly.
    """

    def __init__(self, algebra, sigma, kappa, name="", cartan=None, seed=0):
        self.algebra = algebra
        self.sigma = _mat(sigma)
        self.kappa = _mat(kappa)
        self.name = name
        n = algebra.dim
        if len(self.sigma) != n or any(len(r) != n for r in self.sigma):
            raise ValueError("sigma matrix has the wrong shape")
        if len(self.kappa) != n or any(len(r) != n for r in self.kappa):
            raise ValueError("kappa matrix has the wrong shape")

        if mat_mul(self.sigma, self.sigma) != _identity(n):
            raise ValueError("sigma squared is not the identity")

        self.h_basis = []
        self.q_basis = []
        for i in range(n):
            col = [self.sigma[r][i] for r in range(n)]
            if col == algebra._unit(i):
                self.h_basis.append(i)
            elif col == [-x for x in algebra._unit(i)]:
                self.q_basis.append(i)
            else:
                raise ValueError(
                    f"basis vector {i} is not a sigma eigenvector; "
                    "the basis must be sigma-adapted"
                )

        eps = [Qi(1) if i in set(self.h_basis) else Qi(-1) for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = mat_vec(self.sigma, algebra.c[i][j])
                rhs = [eps[i] * eps[j] * v for v in algebra.c[i][j]]
                if lhs != rhs:
                    raise ValueError(
                        f"sigma is not a Lie algebra automorphism at basis pair ({i}, {j})"
                    )

        K = self.kappa
        for i in range(n):
            for j in range(i + 1, n):
                if K[i][j] != K[j][i]:
                    raise ValueError("kappa is not symmetric")
        if mat_det(K).is_zero():
            raise ValueError("kappa is degenerate")
        Kq = [[K[i][j] for j in self.q_basis] for i in self.q_basis]
        if self.q_basis and mat_det(Kq).is_zero():
            raise ValueError("kappa is degenerate on q")
        for i in range(n):
            for j in range(n):
                s = Qi(0)
                for r in range(n):
                    s = s + self.sigma[r][i] * sum(
                        (K[r][t] * self.sigma[t][j] for t in range(n)), Qi(0)
                    )
                if s != K[i][j]:
                    raise ValueError("kappa is not sigma-invariant")
        for i in range(n):
            for j in range(n):
                bij = algebra.c[i][j]
                for k in range(n):
                    lhs = self.kappa_form(bij, algebra._unit(k))
                    rhs = self.kappa_form(algebra._unit(j), algebra.c[i][k])
                    if not (lhs + rhs).is_zero():
                        raise ValueError(
                            f"kappa is not invariant at basis triple ({i}, {j}, {k})"
                        )

        if cartan is not None and cartan.rank == 0:
            cartan = None
        self.cartan = cartan
        if cartan is not None:
            _validate_cartan(self, cartan, seed)

    def kappa_form(self, x, y):
        x = _vec(x)
        y = _vec(y)
        acc = Qi(0)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            row = self.kappa[i]
            for j, yj in enumerate(y):
                if not yj.is_zero():
                    acc = acc + xi * row[j] * yj
        return acc

    def gram(self, vectors):
        return [[self.kappa_form(v, w) for w in vectors] for v in vectors]

    def kappa_on_cartan(self):
        if self.cartan is None:
            raise ValueError("pair has no Cartan subspace attached")
        return self.gram(self.cartan.basis)


def _identity(n):
    return [[Qi(1) if i == j else Qi(0) for j in range(n)] for i in range(n)]


def _min_poly_of_ad(pair, point):
    return matrix_min_poly(pair.algebra.ad(point))


def _validate_cartan(pair, cart, seed=0):
    alg = pair.algebra
    n = alg.dim
    if any(len(v) != n for v in cart.basis):
        raise ValueError("Cartan basis vector has the wrong length")
    for i, v in enumerate(cart.basis):
        if mat_vec(pair.sigma, v) != [-x for x in v]:
            raise ValueError(f"Cartan basis vector {i} is not in q")
    span = LinearSpan(n)
    for v in cart.basis:
        if not span.add(v):
            raise ValueError("Cartan basis is linearly dependent")
    for i in range(cart.rank):
        for j in range(i + 1, cart.rank):
            if not _is_zero_vec(alg.bracket(cart.basis[i], cart.basis[j])):
                raise ValueError(f"Cartan subspace is not abelian: basis pair ({i}, {j})")
    for i, v in enumerate(cart.basis):
        if not univ_is_squarefree(_min_poly_of_ad(pair, v)):
            raise ValueError(f"Cartan basis vector {i} is not semisimple")
    # maximality: at a generic point the centralizer in q collapses to a
    rng = random.Random(seed)
    for _ in range(12):
        coords = [rng.randint(-9, 9) for _ in range(cart.rank)]
        x0 = cart.embed(coords)
        if not univ_is_squarefree(_min_poly_of_ad(pair, x0)):
            continue
        q_a, _ = centralizer_in_q(pair, x0)
        if len(q_a) == cart.rank and all(span.contains(v) for v in q_a):
            return
    raise ValueError(
        "Cartan subspace is not maximal abelian: "
        "its centralizer in q exceeds it at every sampled point"
    )


def centralizer_in_q(pair, a_point):
    """Split q = q_a + m at a semisimple point: the ad-kernel and its
    kappa-orthocomplement, both returned as lists of exact g-vectors."""
    a_point = _vec(a_point)
    alg = pair.algebra
    n = alg.dim
    mp = _min_poly_of_ad(pair, a_point)
    if not univ_is_squarefree(mp):
        rep = univ_gcd(mp, univ_derivative(mp))
        raise ValueError(
            "a_point is not semisimple: minimal polynomial of ad has "
            f"repeated factor {_render_univ(rep)}"
        )
    A = alg.ad(a_point)
    qb = pair.q_basis
    M = [[A[r][j] for j in qb] for r in range(n)]
    q_a = []
    for u in kernel_basis(M):
        v = [Qi(0)] * n
        for c, j in zip(u, qb):
            v[j] = c
        q_a.append(v)
    # m = kappa-orthocomplement of q_a inside q
    rows = []
    for z in q_a:
        rows.append([pair.kappa_form(z, alg._unit(j)) for j in qb])
    m = []
    if rows:
        for u in kernel_basis(rows):
            v = [Qi(0)] * n
            for c, j in zip(u, qb):
                v[j] = c
            m.append(v)
    total = LinearSpan(n)
    for v in q_a + m:
        if not total.add(v):
            raise AssertionError("q_a and m do not form a direct sum")
    assert total.dim == len(qb)
    return q_a, m


# ---------------------------------------------------------------- catalog

def _mtx(rows):
    return [[_scalar(x) for x in row] for row in rows]


def _commutator(x, y):
    return [
        [a - b for a, b in zip(r1, r2)]
        for r1, r2 in zip(mat_mul(x, y), mat_mul(y, x))
    ]


def _trace_prod(x, y):
    n = len(x)
    acc = Qi(0)
    for i in range(n):
        for j in range(n):
            acc = acc + x[i][j] * y[j][i]
    return acc


def _pair_from_matrices(name, h_mats, q_mats, cartan_coords, seed=0):
    """Assemble a SymmetricPair from a faithful matrix representation;
    kappa is the trace form, sigma is +1 on h_mats and -1 on q_mats."""
    mats = [_mtx(m) for m in h_mats] + [_mtx(m) for m in q_mats]
    dim = len(mats)
    size = len(mats[0])
    # express commutators in the basis by exact linear solve
    from .exactalg import solve_exact

    cols = [[m[r][c] for m in mats] for r in range(size) for c in range(size)]
    structure = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        structure[i][i] = [Qi(0)] * dim
    for i in range(dim):
        for j in range(i + 1, dim):
            target = _commutator(mats[i], mats[j])
            flat = [target[r][c] for r in range(size) for c in range(size)]
            sol = solve_exact(cols, flat)
            if sol.particular is None:
                raise AssertionError("matrix basis is not closed under brackets")
            structure[i][j] = sol.particular
            structure[j][i] = [-x for x in sol.particular]
    algebra = LieAlgebra(dim, structure)
    nh = len(h_mats)
    sigma = [
        [
            (Qi(1) if i < nh else Qi(-1)) if i == j else Qi(0)
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    kappa = [[_trace_prod(mats[i], mats[j]) for j in range(dim)] for i in range(dim)]
    cartan = CartanSubspace(cartan_coords)
    return SymmetricPair(algebra, sigma, kappa, name=name, cartan=cartan, seed=seed)


def _build_sl2_so2():
    r = [[0, 1], [-1, 0]]
    e = [[1, 0], [0, -1]]
    f = [[0, 1], [1, 0]]
    return _pair_from_matrices("sl2-so2", [r], [e, f], [[0, 1, 0]])


def _build_sl3_so21():
    h1 = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    h2 = [[0, 0, 1], [0, 0, 0], [1, 0, 0]]
    h3 = [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
    q1 = [[1, 0, 0], [0, 0, 0], [0, 0, -1]]
    q2 = [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    q3 = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
    q4 = [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
    q5 = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
    # Cartan subspace: x-direction q1 - 2*q4, y-direction q3
    cartan = [
        [0, 0, 0, 1, 0, 0, -2, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
    ]
    return _pair_from_matrices(
        "sl3-so21", [h1, h2, h3], [q1, q2, q3, q4, q5], cartan
    )


def _build_abelian2():
    zero = [[[Qi(0)] * 2 for _ in range(2)] for _ in range(2)]
    algebra = LieAlgebra(2, zero)
    sigma = [[-1, 0], [0, -1]]
    kappa = [[1, 0], [0, 1]]
    cartan = CartanSubspace([[1, 0], [0, 1]])
    return SymmetricPair(algebra, sigma, kappa, name="abelian2", cartan=cartan)


def _build_sl2_diagonal():
    H = [[1, 0], [0, -1]]
    E = [[0, 1], [0, 0]]
    F = [[0, 0], [1, 0]]

    def block(u, v):
        out = [[0] * 4 for _ in range(4)]
        for r in range(2):
            for c in range(2):
                out[r][c] = u[r][c]
                out[2 + r][2 + c] = v[r][c]
        return out

    h_mats = [block(u, u) for u in (H, E, F)]
    q_mats = [block(u, [[-x for x in row] for row in u]) for u in (H, E, F)]
    cartan = [[0, 0, 0, 1, 0, 0]]
    return _pair_from_matrices("sl2-diagonal", h_mats, q_mats, cartan)


_CATALOG = None


def catalog():
    """The built-in symmetric pairs, fully validated on first use."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = [
            _build_sl2_so2(),
            _build_sl3_so21(),
            _build_abelian2(),
            _build_sl2_diagonal(),
        ]
    return list(_CATALOG)


def catalog_pair(name):
    for p in catalog():
        if p.name == name:
            return p
    raise ValueError(f"unknown pair {name!r}")


# ---------------------------------------------------------------- loading

def load_pair(definition):
    """Build a SymmetricPair from its JSON-style definition document."""
    try:
        dim = int(definition["dim"])
        brackets = definition["brackets"]
        sigma = definition["sigma"]
    except KeyError as e:
        raise ValueError(f"pair definition is missing key {e.args[0]!r}") from None
    name = definition.get("name", "")

    c = [[[Qi(0)] * dim for _ in range(dim)] for _ in range(dim)]
    given = {}
    for entry in brackets:
        if len(entry) != 4:
            raise ValueError(f"bad bracket entry {entry!r}")
        i, j, k = int(entry[0]), int(entry[1]), int(entry[2])
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise ValueError(f"bracket entry {entry!r} is out of range")
        if (i, j, k) in given:
            raise ValueError(f"duplicate bracket entry for ({i}, {j}, {k})")
        val = _scalar(entry[3])
        given[(i, j, k)] = val
        c[i][j][k] = val
    for (i, j, k), val in given.items():
        if (j, i, k) not in given:
            c[j][i][k] = -val
    algebra = LieAlgebra(dim, c)

    if "kappa" in definition and definition["kappa"] is not None:
        kappa = _mat(definition["kappa"])
    else:
        kappa = algebra.killing()

    cartan_rows = definition.get("cartan") or []
    cartan = CartanSubspace(_mat(cartan_rows)) if cartan_rows else None
    return SymmetricPair(algebra, _mat(sigma), kappa, name=name, cartan=cartan)
