"""Restricted root systems with multiplicities, the reduced subset, Weyl
groups as finite matrix groups over Q(i), and local subsystems at a
semisimple point.

Roots are functionals on the real Cartan basis; a pair whose joint spectrum
leaves Q(i) is refused rather than approximated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .exactalg import (
    GaussianRational,
    LinearSpan,
    Qi,
    gaussian_rational_roots,
    kernel_basis,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_vec,
    matrix_min_poly,
    univ_is_squarefree,
)


class SpectrumError(ValueError):
    """The restricted-root spectrum does not split over Q(i)."""


def _scalar(x):
    if isinstance(x, GaussianRational):
        return x
    from .exactalg import parse_scalar

    if isinstance(x, str):
        return parse_scalar(x)
    return GaussianRational(x)


def _vec(v):
    return [_scalar(x) for x in v]


def _mat_key(m):
    return tuple(tuple((x.real, x.imag) for x in row) for row in m)


@dataclass
class RestrictedRoot:
    functional: list
    multiplicity: int
    is_reduced: bool = True


@dataclass
class RestrictedRootSystem:
    roots: list
    rank: int
    zero_dim: int


class WeylGroup:
    """Finite matrix group on a_C, generated by root reflections."""

    def __init__(self, dim, generators, elements, kappa_on_a):
        self.dim = dim
        self.generators = generators
        self.elements = elements
        self.order = len(elements)
        self.kappa_on_a = kappa_on_a
        self._keys = {_mat_key(m) for m in elements}

    def contains(self, m):
        return _mat_key(m) in self._keys


def reduced_subset(functionals):
    """Flag each functional whose half is not itself in the set."""
    fs = [_vec(f) for f in functionals]
    keys = {tuple((x.real, x.imag) for x in f) for f in fs}
    flags = []
    for f in fs:
        half = tuple(((x / 2).real, (x / 2).imag) for x in f)
        flags.append(half not in keys)
    return flags


def restricted_roots(pair, cartan=None, seed=0):
    """Joint-eigenspace decomposition of g under ad of the Cartan subspace.

    A single generic rational point drives the computation; the point is
    re-drawn until every ad(a_i) acts by a scalar on each of its
    eigenspaces, which certifies genuine joint eigenspaces.
    """
    cart = cartan if cartan is not None else pair.cartan
    if cart is None:
        raise ValueError("pair has no Cartan subspace attached")
    alg = pair.algebra
    n = alg.dim
    rank = cart.rank
    ads = [alg.ad(v) for v in cart.basis]
    z_dim = len(kernel_basis([row for A in ads for row in A]))

    rng = random.Random(seed)
    for _ in range(24):
        coords = [Qi(rng.randint(-5, 5)) for _ in range(rank)]
        if all(c.is_zero() for c in coords):
            continue
        A0 = [[Qi(0)] * n for _ in range(n)]
        for c, A in zip(coords, ads):
            if c.is_zero():
                continue
            for r in range(n):
                for s in range(n):
                    if not A[r][s].is_zero():
                        A0[r][s] = A0[r][s] + c * A[r][s]
        mp = matrix_min_poly(A0)
        if not univ_is_squarefree(mp):
            continue
        eigs, split = gaussian_rational_roots(mp)
        if not split:
            raise SpectrumError(
                "restricted roots lie outside Q(i); pair unsupported"
            )
        decomposition = _joint_decomposition(A0, ads, eigs, coords, n)
        if decomposition is None:
            continue
        roots, zero_dim = decomposition
        assert zero_dim == z_dim
        flags = reduced_subset([f for f, _ in roots])
        mults = {tuple((x.real, x.imag) for x in f): m for f, m in roots}
        for f, m in roots:
            neg = tuple(((-x).real, (-x).imag) for x in f)
            assert mults.get(neg) == m, "root system is not symmetric"
        out = [
            RestrictedRoot(list(f), m, flag)
            for (f, m), flag in zip(roots, flags)
        ]
        out.sort(key=lambda r: tuple((x.real, x.imag) for x in r.functional))
        return RestrictedRootSystem(out, rank, zero_dim)
    raise ValueError("no generic point found in the Cartan subspace")


def _joint_decomposition(A0, ads, eigs, coords, n):
    roots = []
    zero_dim = 0
    total = 0
    for lam in eigs:
        M = [
            [A0[r][s] - (lam if r == s else Qi(0)) for s in range(n)]
            for r in range(n)
        ]
        E = kernel_basis(M)
        func = []
        for A in ads:
            mu = None
            for v in E:
                w = mat_vec(A, v)
                t = next(i for i, x in enumerate(v) if not x.is_zero())
                ratio = w[t] / v[t]
                if w != [ratio * x for x in v]:
                    return None  # eigenspace not joint: point not generic
                if mu is None:
                    mu = ratio
                elif mu != ratio:
                    return None
            func.append(mu if mu is not None else Qi(0))
        check = sum((f * c for f, c in zip(func, coords)), Qi(0))
        assert check == lam
        if all(f.is_zero() for f in func):
            zero_dim += len(E)
        else:
            roots.append((tuple(func), len(E)))
        total += len(E)
    assert total == n, "minimal polynomial was squarefree yet space not split"
    return roots, zero_dim


def weyl_group(roots, kappa_on_a, max_elements=100000):
    """Breadth-first closure of the root reflections s_a built from the
    kappa-induced form; every element is checked to permute the roots."""
    if isinstance(roots, RestrictedRootSystem):
        root_list = roots.roots
    else:
        root_list = [
            r if isinstance(r, RestrictedRoot) else RestrictedRoot(_vec(r), 1)
            for r in roots
        ]
    dim = len(kappa_on_a)
    kinv = mat_inverse(kappa_on_a)
    generators = []
    seen_gen = set()
    for r in root_list:
        alpha = _vec(r.functional)
        t_alpha = mat_vec(kinv, alpha)
        norm = sum((a * t for a, t in zip(alpha, t_alpha)), Qi(0))
        if norm.is_zero():
            raise ValueError("isotropic root; reflection undefined")
        two_over = Qi(2) / norm
        S = [
            [
                (Qi(1) if i == j else Qi(0)) - two_over * t_alpha[i] * alpha[j]
                for j in range(dim)
            ]
            for i in range(dim)
        ]
        key = _mat_key(S)
        if key not in seen_gen:
            assert mat_mul(S, S) == mat_identity(dim)
            seen_gen.add(key)
            generators.append(S)

    ident = mat_identity(dim)
    elements = {_mat_key(ident): ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for w in frontier:
            for g in generators:
                p = mat_mul(w, g)
                k = _mat_key(p)
                if k not in elements:
                    if len(elements) >= max_elements:
                        raise ValueError(
                            f"Weyl closure exceeded the safety bound of {max_elements} elements"
                        )
                    elements[k] = p
                    fresh.append(p)
        frontier = fresh
    ordered = [elements[k] for k in sorted(elements)]

    mults = {}
    for r in root_list:
        k = tuple((x.real, x.imag) for x in r.functional)
        mults[k] = mults.get(k, 0) + r.multiplicity
    for w in ordered:
        moved = {}
        for r in root_list:
            f = tuple(
                sum((r.functional[k] * w[k][j] for k in range(dim)), Qi(0))
                for j in range(dim)
            )
            key = tuple((x.real, x.imag) for x in f)
            moved[key] = moved.get(key, 0) + r.multiplicity
        if moved != mults:
            raise ValueError("Weyl element does not permute the root system")
    return WeylGroup(dim, generators, ordered, kappa_on_a)


def local_subsystem(system, weyl, a_point):
    """Roots vanishing at the point, the subgroup they generate, and the
    induced split a = b + c into the root span and the fixed space."""
    pt = _vec(a_point)
    dim = weyl.dim
    roots_a = [
        r
        for r in system.roots
        if sum((f * x for f, x in zip(r.functional, pt)), Qi(0)).is_zero()
    ]
    W_a = weyl_group(roots_a, weyl.kappa_on_a)
    assert all(weyl.contains(m) for m in W_a.elements)

    kinv = mat_inverse(weyl.kappa_on_a)
    b_span = LinearSpan(dim)
    for r in roots_a:
        b_span.add(mat_vec(kinv, r.functional))
    b_basis = b_span.basis

    rows = []
    for g in W_a.generators:
        for i in range(dim):
            rows.append([g[i][j] - (Qi(1) if i == j else Qi(0)) for j in range(dim)])
    if rows:
        c_basis = kernel_basis(rows)
    else:
        c_basis = [row[:] for row in mat_identity(dim)]

    total = LinearSpan(dim)
    for v in b_basis + c_basis:
        ok = total.add(v)
        assert ok, "b and c overlap"
    assert total.dim == dim, "b and c do not span a"
    for w in W_a.elements:
        assert mat_vec(w, pt) == pt
        for v in c_basis:
            assert mat_vec(w, v) == v
    return roots_a, W_a, (b_basis, c_basis)
