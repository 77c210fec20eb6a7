"""Polynomial vector fields on a and the chart calculus built on them.

Covers the decomposition of invariant fields over the chart gradients,
ideal stability and Cramer lifting of derivations given by generator
images, the transition matrix between a global chart and a local one,
and a truncated graded jet algebra with the gradient action.
"""

from dataclasses import dataclass

from .exactalg import (
    GaussianRational,
    LinearSpan,
    MultiPoly,
    det_adjugate,
    mat_inverse,
    solve_exact,
)
from .invariants import gradient, monomials_of_degree, reynolds

Qi = GaussianRational


class PolyVectorField:
    """Derivation sum_i X_i d/dx_i with polynomial components."""

    def __init__(self, components):
        if not components:
            raise ValueError("a vector field needs at least one component")
        n = components[0].num_vars
        if len(components) != n:
            raise ValueError("component count must match the variable count")
        for c in components:
            if c.num_vars != n:
                raise ValueError("components disagree on the variable count")
        self.components = list(components)
        self.dim = n

    @staticmethod
    def zero(n):
        return PolyVectorField([MultiPoly.zero(n) for _ in range(n)])

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def apply_to(self, f):
        """Directional derivative of f along the field."""
        acc = MultiPoly.zero(self.dim)
        for i, c in enumerate(self.components):
            acc = acc + c * f.partial(i)
        return acc

    def evaluate(self, point):
        return [c.evaluate(point) for c in self.components]

    def __add__(self, other):
        return PolyVectorField(
            [a + b for a, b in zip(self.components, other.components)]
        )

    def __sub__(self, other):
        return PolyVectorField(
            [a - b for a, b in zip(self.components, other.components)]
        )

    def __neg__(self):
        return PolyVectorField([-c for c in self.components])

    def __mul__(self, other):
        # scalar or polynomial factor, applied componentwise
        return PolyVectorField([c * other for c in self.components])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.components == other.components

    def __repr__(self):
        return "PolyVectorField(%r)" % (self.components,)


class InvariantDerivation:
    """Derivation of the invariant algebra, recorded by generator images."""

    def __init__(self, images, weyl=None):
        self.images = list(images)
        if weyl is not None:
            for img in self.images:
                if reynolds(weyl, img) != img:
                    raise ValueError("derivation image is not invariant")


@dataclass
class NotLiftable:
    """Witness that the adjugate system has a non-divisible entry."""

    index: int
    psi: MultiPoly
    remainder: MultiPoly


def is_invariant_field(X, weyl):
    """Exact check of w . X(w^{-1} x) = X(x) for every group element."""
    for w in weyl.elements:
        winv = mat_inverse(w)
        moved = [c.compose_linear(winv) for c in X.components]
        for i in range(X.dim):
            pushed = MultiPoly.zero(X.dim)
            for j in range(X.dim):
                pushed = pushed + w[i][j] * moved[j]
            if pushed != X.components[i]:
                return False
    return True


def _invariant_basis(weyl, n, k, cache):
    # basis of the degree-k invariant polynomials, built by averaging
    if k not in cache:
        monos = monomials_of_degree(n, k)
        span = LinearSpan(len(monos))
        polys = []
        for e in monos:
            avg = reynolds(weyl, MultiPoly(n, {e: Qi(1)}))
            if avg.is_zero():
                continue
            if span.add(avg.coefficient_vector(monos)):
                polys.append(avg)
        cache[k] = polys
    return cache[k]


def solomon_decompose(X, chart, weyl):
    """Unique coefficients R_i with X = sum R_i grad(p_i), R_i invariant.

    Works degree by degree in the chart's shifted variable; each degree
    is one exact linear solve over invariant-polynomial coefficients,
    and uniqueness is certified by the kernel being trivial.
    """
    if not is_invariant_field(X, weyl):
        raise ValueError("field is not invariant under the chart group")
    n = X.dim
    a = chart.base_point
    shifted = any(not x.is_zero() for x in a)
    comp_u = [c.shift(a) if shifted else c for c in X.components]
    grads_u = [
        [c.shift(a) if shifted else c for c in g.components]
        for g in chart.gradients
    ]
    degs = chart.degrees
    ell = len(degs)
    R_u = [MultiPoly.zero(n) for _ in range(ell)]
    cache = {}
    present = sorted({d for c in comp_u for d in c.homogeneous_components()})
    for d in present:
        targets = [
            c.homogeneous_components().get(d, MultiPoly.zero(n))
            for c in comp_u
        ]
        cols = []
        for j in range(ell):
            k = d - degs[j] + 1
            if k < 0:
                continue
            for b in _invariant_basis(weyl, n, k, cache):
                cols.append((j, b))
        monos = monomials_of_degree(n, d)
        rhs = []
        for t in targets:
            rhs.extend(t.coefficient_vector(monos))
        if not cols:
            if any(not x.is_zero() for x in rhs):
                raise RuntimeError(
                    "internal error: decomposition system is inconsistent"
                )
            continue
        colvecs = []
        for j, b in cols:
            vec = []
            for i in range(n):
                vec.extend((b * grads_u[j][i]).coefficient_vector(monos))
            colvecs.append(vec)
        A = [[col[r] for col in colvecs] for r in range(len(rhs))]
        sol = solve_exact(A, rhs)
        if sol.particular is None:
            raise RuntimeError(
                "internal error: decomposition system is inconsistent"
            )
        if sol.kernel:
            raise RuntimeError(
                "internal error: decomposition is not unique"
            )
        for coeff, (j, b) in zip(sol.particular, cols):
            if not coeff.is_zero():
                R_u[j] = R_u[j] + coeff * b
    for i in range(n):
        acc = MultiPoly.zero(n)
        for j in range(ell):
            acc = acc + R_u[j] * grads_u[j][i]
        assert acc == comp_u[i], "decomposition does not reassemble"
    if not shifted:
        return R_u
    neg = [-x for x in a]
    return [r.shift(neg) for r in R_u]


def field_from_coefficients(coeffs, chart):
    """The field sum coeff_i grad(p_i)."""
    n = chart.weyl.dim
    comps = [MultiPoly.zero(n) for _ in range(n)]
    for f, g in zip(coeffs, chart.gradients):
        for i in range(n):
            comps[i] = comps[i] + f * g.components[i]
    return PolyVectorField(comps)


def induce_derivation(coeffs, chart):
    """Generator images of the derivation along sum coeff_i grad(p_i)."""
    X = field_from_coefficients(coeffs, chart)
    images = [X.apply_to(p) for p in chart.generators]
    return InvariantDerivation(images, chart.weyl)


def _check_images(D, chart):
    if len(D.images) != chart.rank:
        raise ValueError("one image per generator is required")
    for img in D.images:
        if img.num_vars != chart.weyl.dim:
            raise ValueError("image variable count does not match the chart")
        if reynolds(chart.weyl, img) != img:
            raise ValueError("derivation image is not invariant")


def _weighted_exponents(degrees, total):
    out = []

    def rec(i, remaining, acc):
        if i == len(degrees):
            if remaining == 0:
                out.append(tuple(acc))
            return
        k = 0
        while k * degrees[i] <= remaining:
            rec(i + 1, remaining - k * degrees[i], acc + [k])
            k += 1

    rec(0, total, [])
    return out


def _phi_in_generators(chart):
    # exact subalgebra membership: phi as a polynomial in p_1..p_l
    phi = chart.phi
    gens = chart.generators
    exps = _weighted_exponents(chart.degrees, phi.degree())
    basis = []
    for e in exps:
        p = MultiPoly.one(chart.weyl.dim)
        for g, k in zip(gens, e):
            if k:
                p = p * g**k
        basis.append(p)
    monos = set(phi.terms)
    for p in basis:
        monos.update(p.terms)
    monos = sorted(monos)
    A = [[p.terms.get(m, Qi(0)) for p in basis] for m in monos]
    rhs = [phi.terms.get(m, Qi(0)) for m in monos]
    sol = solve_exact(A, rhs)
    if sol.particular is None:
        raise RuntimeError(
            "internal error: root product is not a polynomial in the "
            "generators"
        )
    assert not sol.kernel, "generator products are dependent"
    return {e: c for e, c in zip(exps, sol.particular) if not c.is_zero()}


def ideal_stable(D, chart):
    """Whether the derivation preserves the ideal of the root product.

    Returns (True, quotient) when phi divides D(phi), computed through
    the expression of phi in the generators and the formal chain rule;
    otherwise (False, nonzero remainder).
    """
    _check_images(D, chart)
    coeffs = _phi_in_generators(chart)
    n = chart.rank
    dphi = MultiPoly.zero(chart.weyl.dim)
    for e, c in coeffs.items():
        for j in range(n):
            if not e[j]:
                continue
            term = MultiPoly.constant(chart.weyl.dim, c * e[j])
            for idx, (g, k) in enumerate(zip(chart.generators, e)):
                kk = k - 1 if idx == j else k
                if kk:
                    term = term * g**kk
            term = term * D.images[j]
            dphi = dphi + term
    q, r = dphi.divmod_by(chart.phi)
    if r.is_zero():
        return True, q
    return False, r


def lift_derivation(D, chart):
    """Coefficients phi_i with D = sum phi_i grad(p_i), or NotLiftable.

    The adjugate of the Gram matrix solves the defining system exactly;
    divisibility of each entry by the root product decides liftability.
    """
    _check_images(D, chart)
    n = chart.rank
    nvars = chart.weyl.dim
    adj = chart.gram_adjugate
    cinv = Qi(1) / chart.gram_constant
    psi = []
    for i in range(n):
        acc = MultiPoly.zero(nvars)
        for j in range(n):
            acc = acc + adj[j][i] * D.images[j]
        psi.append(acc * cinv)
    for j in range(n):
        lhs = chart.phi * D.images[j]
        rhs = MultiPoly.zero(nvars)
        for i in range(n):
            rhs = rhs + psi[i] * chart.gram_matrix[i][j]
        assert lhs == rhs, "adjugate system identity fails"
    phis = []
    for i, s in enumerate(psi):
        q, r = s.divmod_by(chart.phi)
        if not r.is_zero():
            return NotLiftable(i, s, r)
        phis.append(q)
    X = field_from_coefficients(phis, chart)
    for img, p in zip(D.images, chart.generators):
        assert X.apply_to(p) == img, "lift does not reconstruct the images"
    for f in phis:
        assert reynolds(chart.weyl, f) == f
    return phis


def transition_matrix(chart, local, weyl_a):
    """Matrix m with grad(p_j) = sum_i m_ij grad(q_i) over the local chart."""
    ell = chart.rank
    m = [[None] * ell for _ in range(ell)]
    for j in range(ell):
        col = solomon_decompose(chart.gradients[j], local, weyl_a)
        for i in range(ell):
            m[i][j] = col[i]
    det, _ = det_adjugate(m)
    if det.evaluate(local.base_point).is_zero():
        raise ValueError("transition matrix is singular at the base point")
    return m


class Jet:
    """Truncated series at a base point; component k is homogeneous of
    degree k in the shifted variable x - base_point."""

    def __init__(self, base_point, truncation_order, components):
        if truncation_order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(components) != truncation_order + 1:
            raise ValueError("one component per degree up to truncation")
        for k, p in enumerate(components):
            if not p.is_zero() and not (p.is_homogeneous() and p.degree() == k):
                raise ValueError(
                    "jet component %d is not homogeneous of its index degree"
                    % k
                )
        self.base_point = [
            x if isinstance(x, Qi) else Qi._coerce(x) for x in base_point
        ]
        self.truncation_order = truncation_order
        self.components = list(components)

    def polynomial(self):
        """Sum of the components, written back in the ambient variable."""
        n = self.components[0].num_vars
        acc = MultiPoly.zero(n)
        for p in self.components:
            acc = acc + p
        return acc.shift([-x for x in self.base_point])

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (
            self.base_point == other.base_point
            and self.truncation_order == other.truncation_order
            and self.components == other.components
        )

    def __repr__(self):
        return "Jet(base=%r, N=%d, %r)" % (
            self.base_point,
            self.truncation_order,
            self.components,
        )


def jet_of(f, a_point, N):
    """Exact re-expansion of f around a_point, truncated at order N."""
    pt = [x if isinstance(x, Qi) else Qi._coerce(x) for x in a_point]
    g = f.shift(pt)
    parts = g.homogeneous_components()
    comps = [parts.get(k, MultiPoly.zero(f.num_vars)) for k in range(N + 1)]
    return Jet(pt, N, comps)


def jet_unit(a_point, N, num_vars):
    comps = [MultiPoly.one(num_vars)]
    comps.extend(MultiPoly.zero(num_vars) for _ in range(N))
    return Jet(a_point, N, comps)


def _check_compatible(J1, J2):
    if J1.base_point != J2.base_point or (
        J1.truncation_order != J2.truncation_order
    ):
        raise ValueError("jets disagree on base point or truncation")


def jet_mul(J1, J2):
    """Graded convolution product."""
    _check_compatible(J1, J2)
    N = J1.truncation_order
    n = J1.components[0].num_vars
    comps = []
    for k in range(N + 1):
        acc = MultiPoly.zero(n)
        for j in range(k + 1):
            acc = acc + J1.components[j] * J2.components[k - j]
        comps.append(acc)
    return Jet(J1.base_point, N, comps)


def jet_invert(J):
    """Multiplicative inverse up to truncation; needs a nonzero constant
    term."""
    c = J.components[0].constant_term()
    if c.is_zero():
        raise ValueError("jet is not invertible: constant term vanishes")
    n = J.components[0].num_vars
    cinv = Qi(1) / c
    out = [MultiPoly.constant(n, cinv)]
    for k in range(1, J.truncation_order + 1):
        acc = MultiPoly.zero(n)
        for j in range(1, k + 1):
            acc = acc + J.components[j] * out[k - j]
        out.append(acc * (-cinv))
    return Jet(J.base_point, J.truncation_order, out)


def jet_gradient_action(R, J, kappa):
    """Action of the gradient field of R on a jet, slot by slot.

    R must be homogeneous of degree d >= 1 in x - base_point; output
    slot k receives grad(R) applied to input slot k - d + 2 and the
    truncation drops to N + d - 2 when d = 1.
    """
    Ru = R.shift(J.base_point)
    if Ru.is_zero() or not Ru.is_homogeneous():
        raise ValueError("R must be homogeneous in the shifted variable")
    d = Ru.degree()
    if d < 1:
        raise ValueError("R must have positive degree")
    grad = gradient(Ru, kappa)
    N = J.truncation_order
    n_out = min(N, N + d - 2)
    if n_out < 0:
        raise ValueError("truncation order too small for the action")
    n = Ru.num_vars
    comps = []
    for k in range(n_out + 1):
        if k < d - 1:
            comps.append(MultiPoly.zero(n))
            continue
        comps.append(grad.apply_to(J.components[k - d + 2]))
    return Jet(J.base_point, n_out, comps)


def default_truncation(chart):
    """Truncation order large enough for every chart identity."""
    return max(chart.degrees) + chart.phi.degree() + 2
