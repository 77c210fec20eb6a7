"""Basic invariants of the small Weyl group and the charts they carry.

The chart of a pair records a complete set of homogeneous generating
invariants, their gradients with respect to the invariant form, the
product of the reduced restricted roots, and the Gram determinant
identity that ties the two together.
"""

from fractions import Fraction

from .exactalg import (
    GaussianRational,
    LinearSpan,
    MultiPoly,
    _grevlex_key,
    det_adjugate,
    mat_inverse,
    mat_mul,
    mat_transpose,
    poly_divides,
)
from .rootsys import WeylGroup, local_subsystem, restricted_roots, weyl_group

Qi = GaussianRational


def reynolds(weyl, f):
    """Group average of f, the exact projector onto invariants."""
    acc = MultiPoly.zero(f.num_vars)
    for w in weyl.elements:
        acc = acc + f.compose_linear(w)
    return acc * Qi(Fraction(1, weyl.order))


def monomials_of_degree(num_vars, d):
    """All exponent tuples of total degree d, ascending grevlex."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining + 1):
            rec(prefix + (k,), remaining - k, slots - 1)

    rec((), d, num_vars)
    out.sort(key=_grevlex_key)
    return out


def _weighted_products(gens, degrees, d, num_vars):
    # every product of adopted generators whose weighted degree is exactly d
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(acc)
            return
        if i == len(gens):
            return
        rec(i + 1, remaining, acc)
        if degrees[i] <= remaining:
            rec(i, remaining - degrees[i], acc * gens[i])

    rec(0, d, MultiPoly.one(num_vars))
    return out


def invariant_generators(weyl):
    """Degree-by-degree search for a complete set of basic invariants.

    Monomial averages are scanned in ascending grevlex order; an average
    is adopted when it is new modulo products of the generators already
    found.  The result is certified by the degree product against the
    group order and by a nonvanishing Jacobian.
    """
    n = weyl.dim
    adopted = []
    degrees = []
    cap = 2 * weyl.order
    for d in range(1, cap + 1):
        monos = monomials_of_degree(n, d)
        span = LinearSpan(len(monos))
        for prod in _weighted_products(adopted, degrees, d, n):
            span.add(prod.coefficient_vector(monos))
        for e in monos:
            img = reynolds(weyl, MultiPoly(n, {e: Qi(1)}))
            if img.is_zero():
                continue
            if not span.add(img.coefficient_vector(monos)):
                continue
            _, lc = img.leading_term()
            adopted.append(img * (Qi(1) / lc))
            degrees.append(d)
        if len(adopted) >= n:
            break
    if len(adopted) != n:
        raise RuntimeError(
            "internal error: generator search ended with %d generators "
            "below degree %d" % (len(adopted), cap)
        )
    prod = 1
    for d in degrees:
        prod *= d
    if prod != weyl.order:
        raise RuntimeError(
            "internal error: generator degrees %r do not multiply to the "
            "group order %d" % (degrees, weyl.order)
        )
    jac = [[p.partial(j) for j in range(n)] for p in adopted]
    jdet, _ = det_adjugate(jac)
    if jdet.is_zero():
        raise RuntimeError("internal error: generators are not independent")
    return adopted, degrees


def phi_from_roots(roots, rank=None):
    """Product of the reduced restricted roots, as a polynomial on a."""
    if hasattr(roots, "roots"):
        rank = roots.rank
        roots = roots.roots
    if rank is None:
        if not roots:
            raise ValueError("rank is required when the root list is empty")
        rank = len(roots[0].functional)
    phi = MultiPoly.one(rank)
    for r in roots:
        if r.is_reduced:
            phi = phi * MultiPoly.linear_form(r.functional)
    return phi


def gradient(f, kappa_on_a):
    """Field dual to df through the invariant form, K^{-1} applied to
    the partials."""
    from .vecfields import PolyVectorField

    n = f.num_vars
    if len(kappa_on_a) != n:
        raise ValueError("form dimension does not match the variable count")
    try:
        kinv = mat_inverse(kappa_on_a)
    except ValueError:
        raise ValueError("invariant form is degenerate on a") from None
    parts = [f.partial(i) for i in range(n)]
    comps = [
        sum((kinv[i][j] * parts[j] for j in range(n)), MultiPoly.zero(n))
        for i in range(n)
    ]
    return PolyVectorField(comps)


def _gram(generators, gradients, phi):
    n = len(generators)
    A = [
        [gradients[i].apply_to(generators[j]) for j in range(n)]
        for i in range(n)
    ]
    det, adj = det_adjugate(A)
    q = poly_divides(det, phi)
    if q is None or q.degree() > 0:
        raise ValueError(
            "Gram determinant is not a constant multiple of the root product"
        )
    c = q.constant_term()
    if c.is_zero():
        raise ValueError("Gram determinant vanishes identically")
    return A, adj, det, c


def gram_phi(generators, gradients, phi):
    """Gram determinant det(grad p_i . p_j) and its constant ratio to
    the root product."""
    _, _, det, c = _gram(generators, gradients, phi)
    return det, c


class InvariantChart:
    """Global chart carried by a complete set of basic invariants."""

    def __init__(self, generators, degrees, gradients, phi, gram_constant,
                 gram_matrix, gram_adjugate, gram_det, weyl, kappa_on_a,
                 system):
        self.generators = generators
        self.degrees = degrees
        self.gradients = gradients
        self.phi = phi
        self.gram_constant = gram_constant
        self.gram_matrix = gram_matrix
        self.gram_adjugate = gram_adjugate
        self.gram_det = gram_det
        self.weyl = weyl
        self.kappa_on_a = kappa_on_a
        self.system = system
        self.rank = len(generators)
        self.base_point = [Qi(0)] * weyl.dim


class LocalChart:
    """Chart adapted to a base point: invariants of the vanishing-root
    subgroup on its span, affine coordinates on the fixed space."""

    def __init__(self, base_point, local_generators, degrees, gradients,
                 psi_a, phi_a_local, weyl, kappa_on_a, b_basis, c_basis,
                 roots_a):
        self.base_point = base_point
        self.local_generators = local_generators
        self.degrees = degrees
        self.gradients = gradients
        self.psi_a = psi_a
        self.phi_a_local = phi_a_local
        self.weyl = weyl
        self.kappa_on_a = kappa_on_a
        self.b_basis = b_basis
        self.c_basis = c_basis
        self.roots_a = roots_a

    @property
    def generators(self):
        return self.local_generators


def build_chart(pair, seed=0):
    """Assemble the invariant chart of a pair from its restricted roots."""
    system = restricted_roots(pair, seed=seed)
    K = pair.kappa_on_cartan()
    weyl = weyl_group(system, K)
    generators, degrees = invariant_generators(weyl)
    phi = phi_from_roots(system)
    for w in weyl.elements:
        assert phi.compose_linear(w) == phi, "root product is not invariant"
    gradients = [gradient(p, K) for p in generators]
    A, adj, det, c = _gram(generators, gradients, phi)
    return InvariantChart(
        generators, degrees, gradients, phi, c, A, adj, det, weyl, K, system
    )


def local_chart(roots, weyl, chart, a_point):
    """Chart at a base point, factoring the root product through the
    roots that vanish there."""
    pt = [Qi._coerce(x) if not isinstance(x, Qi) else x for x in a_point]
    n = weyl.dim
    roots_a, W_a, (b_basis, c_basis) = local_subsystem(roots, weyl, pt)
    r = len(b_basis)

    cols = b_basis + c_basis
    T = [[cols[j][i] for j in range(n)] for i in range(n)]
    Tinv = mat_inverse(T)

    if r:
        blocks = []
        gen_blocks = []
        for src, dst in ((W_a.elements, blocks), (W_a.generators, gen_blocks)):
            for g in src:
                gp = mat_mul(Tinv, mat_mul(g, T))
                for i in range(n):
                    for j in range(n):
                        if (i < r) != (j < r):
                            assert gp[i][j].is_zero(), "frame does not split"
                        elif i >= r and gp[i][j] != (Qi(1) if i == j else Qi(0)):
                            raise AssertionError("fixed block is not trivial")
                dst.append([row[:r] for row in gp[:r]])
        Kp = mat_mul(mat_transpose(T), mat_mul(weyl.kappa_on_a, T))
        Kb = [row[:r] for row in Kp[:r]]
        Wb = WeylGroup(r, gen_blocks, blocks, Kb)
        bgens, bdegs = invariant_generators(Wb)
    else:
        bgens, bdegs = [], []

    # coordinates of u = x - a in the adapted frame
    urows = [MultiPoly.linear_form(row) for row in Tinv]
    local_u = [g.compose(urows[:r]) for g in bgens]
    local_u.extend(urows[r:])
    degrees = list(bdegs) + [1] * (n - r)
    for f in local_u:
        for w in W_a.elements:
            assert f.compose_linear(w) == f, "local generator not invariant"

    neg = [-x for x in pt]
    local_x = [f.shift(neg) for f in local_u]
    gradients = [gradient(f, weyl.kappa_on_a) for f in local_x]

    psi = MultiPoly.one(n)
    phi_local = MultiPoly.one(n)
    root_list = roots.roots if hasattr(roots, "roots") else roots
    for rt in root_list:
        if not rt.is_reduced:
            continue
        form = MultiPoly.linear_form(rt.functional)
        if form.evaluate(pt).is_zero():
            phi_local = phi_local * form
        else:
            psi = psi * form
    assert psi * phi_local == chart.phi, "root product fails to factor"
    assert not psi.evaluate(pt).is_zero()

    return LocalChart(
        pt, local_x, degrees, gradients, psi, phi_local, W_a,
        weyl.kappa_on_a, b_basis, c_basis, roots_a
    )
