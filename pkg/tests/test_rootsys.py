from fractions import Fraction

import pytest

from _oracles import SL3_ROOT_SET, matrix_key, same_span, sl3_weyl_matrices_by_weight_permutations
from symcart.exactalg import GaussianRational as Qi
from symcart.exactalg import mat_vec
from symcart.liesym import catalog, catalog_pair, load_pair
from symcart.rootsys import (
    SpectrumError,
    local_subsystem,
    reduced_subset,
    restricted_roots,
    weyl_group,
)


def _roots_of(name):
    pair = catalog_pair(name)
    return pair, restricted_roots(pair)


def _functional_multiset(system):
    out = {}
    for r in system.roots:
        out[tuple(r.functional)] = out.get(tuple(r.functional), 0) + 0 + r.multiplicity
    return out


def test_sl2_roots_oracle():
    pair, system = _roots_of("sl2-so2")
    assert system.rank == 1
    assert _functional_multiset(system) == {(Qi(2),): 1, (Qi(-2),): 1}
    assert all(r.is_reduced for r in system.roots)
    assert system.zero_dim == 1
    assert pair.algebra.dim == system.zero_dim + 2


def test_sl3_roots_oracle():
    pair, system = _roots_of("sl3-so21")
    assert len(system.roots) == 6
    assert _functional_multiset(system) == {f: 1 for f in SL3_ROOT_SET}
    assert all(r.is_reduced for r in system.roots)
    assert system.zero_dim == 2


def test_abelian_and_diagonal_roots():
    _, system = _roots_of("abelian2")
    assert system.roots == []
    assert system.zero_dim == 2

    pair, system = _roots_of("sl2-diagonal")
    assert _functional_multiset(system) == {(Qi(2),): 2, (Qi(-2),): 2}
    assert system.zero_dim == 2
    assert pair.algebra.dim == 2 + 2 + 2


def test_root_bookkeeping_every_pair():
    for pair in catalog():
        system = restricted_roots(pair)
        total = sum(r.multiplicity for r in system.roots)
        assert pair.algebra.dim == system.zero_dim + total
        mults = _functional_multiset(system)
        for f, m in mults.items():
            assert mults[tuple(-x for x in f)] == m


def test_reduced_subset_definition():
    # synthetic BC1: {a, -a, 2a, -2a} keeps only the short pair
    fns = [[Qi(1)], [Qi(-1)], [Qi(2)], [Qi(-2)]]
    assert reduced_subset(fns) == [True, True, False, False]
    # A2 configuration: everything reduced
    a2 = [list(f) for f in SL3_ROOT_SET]
    assert reduced_subset(a2) == [True] * 6
    assert reduced_subset([]) == []


def test_weyl_orders():
    expected = {"sl2-so2": 2, "sl3-so21": 6, "abelian2": 1, "sl2-diagonal": 2}
    for pair in catalog():
        system = restricted_roots(pair)
        W = weyl_group(system, pair.kappa_on_cartan())
        assert W.order == expected[pair.name]
        assert len(W.elements) == W.order
        for g in W.generators:
            gg = [[sum((g[i][k] * g[k][j] for k in range(len(g))), Qi(0)) for j in range(len(g))] for i in range(len(g))]
            assert gg == [[Qi(1) if i == j else Qi(0) for j in range(len(g))] for i in range(len(g))]


def test_sl2_weyl_is_sign_flip():
    pair = catalog_pair("sl2-so2")
    W = weyl_group(restricted_roots(pair), pair.kappa_on_cartan())
    assert {matrix_key(m) for m in W.elements} == {((Qi(1),),), ((Qi(-1),),)}


def test_sl3_weyl_matches_weight_permutations():
    # independent enumeration: the group permutes the three weights
    pair = catalog_pair("sl3-so21")
    W = weyl_group(restricted_roots(pair), pair.kappa_on_cartan())
    expected = set(sl3_weyl_matrices_by_weight_permutations())
    assert {matrix_key(m) for m in W.elements} == expected
    # the y-axis sign flip is the reflection of the root (0, 2i)
    assert matrix_key([[Qi(1), Qi(0)], [Qi(0), Qi(-1)]]) in expected
    # hand-computed reflection of the root (3, i)
    s = [
        [Qi(Fraction(-1, 2)), Qi(0, Fraction(-1, 2))],
        [Qi(0, Fraction(3, 2)), Qi(Fraction(1, 2))],
    ]
    assert matrix_key(s) in {matrix_key(m) for m in W.elements}


def test_weyl_elements_permute_roots():
    for pair in catalog():
        system = restricted_roots(pair)
        W = weyl_group(system, pair.kappa_on_cartan())
        mults = _functional_multiset(system)
        for w in W.elements:
            moved = {}
            for r in system.roots:
                f = tuple(
                    sum((r.functional[k] * w[k][j] for k in range(len(w))), Qi(0))
                    for j in range(len(w))
                )
                moved[f] = moved.get(f, 0) + r.multiplicity
            assert moved == mults or not system.roots


def test_weyl_closure_bound():
    pair = catalog_pair("sl3-so21")
    system = restricted_roots(pair)
    with pytest.raises(ValueError, match="closure"):
        weyl_group(system, pair.kappa_on_cartan(), max_elements=3)


def test_local_subsystem_regular_and_origin():
    pair = catalog_pair("sl2-so2")
    system = restricted_roots(pair)
    W = weyl_group(system, pair.kappa_on_cartan())

    roots_a, W_a, (b, c) = local_subsystem(system, W, [Qi(1)])
    assert roots_a == []
    assert W_a.order == 1
    assert b == [] and same_span(c, [[Qi(1)]], 1)

    roots_0, W_0, (b0, c0) = local_subsystem(system, W, [Qi(0)])
    assert len(roots_0) == 2
    assert W_0.order == W.order
    assert same_span(b0, [[Qi(1)]], 1) and c0 == []


def test_local_subsystem_subregular_sl3():
    pair = catalog_pair("sl3-so21")
    system = restricted_roots(pair)
    W = weyl_group(system, pair.kappa_on_cartan())
    point = [Qi(1), Qi(0)]  # only the (0, 2i) root pair vanishes here
    roots_a, W_a, (b, c) = local_subsystem(system, W, point)
    assert len(roots_a) == 2
    assert {tuple(r.functional) for r in roots_a} == {
        (Qi(0), Qi(0, 2)),
        (Qi(0), Qi(0, -2)),
    }
    assert W_a.order == 2
    assert matrix_key([[Qi(1), Qi(0)], [Qi(0), Qi(-1)]]) in {
        matrix_key(m) for m in W_a.elements
    }
    assert same_span(b, [[Qi(0), Qi(1)]], 2)
    assert same_span(c, [[Qi(1), Qi(0)]], 2)
    # W_a fixes the base point and all of c
    for w in W_a.elements:
        assert mat_vec(w, point) == point
        for v in c:
            assert mat_vec(w, v) == v
    # W_a is a subgroup of W
    keys = {matrix_key(m) for m in W.elements}
    assert all(matrix_key(m) in keys for m in W_a.elements)


def test_spectrum_outside_qi_is_refused():
    # compact-type fixture rigged so ad has eigenvalues +-i*sqrt(2)
    definition = {
        "name": "so3-twisted",
        "dim": 3,
        "brackets": [[0, 1, 2, "1"], [1, 2, 0, "2"], [2, 0, 1, "1"]],
        "sigma": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]],
        "cartan": [["0", "1", "0"]],
    }
    pair = load_pair(definition)
    with pytest.raises(SpectrumError, match="pair unsupported"):
        restricted_roots(pair)
