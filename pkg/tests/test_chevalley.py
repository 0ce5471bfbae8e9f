from fractions import Fraction as F

import pytest

from seaweedcoh import rootsystem
from seaweedcoh.chevalley import (JacobiError, construct, direct_sum,
                                  loads_fixture, subalgebra)
from seaweedcoh.exactlin import Matrix


def test_construct_a1():
    L = construct(rootsystem.build("A", 1))
    assert L.dim == 3
    # [e, f] is a nonzero Cartan element and [h, e] = 2e
    ef = L.bracket(0, 1)
    assert set(ef) == {2}
    h_on_e = L.bracket(2, 0)
    assert h_on_e == {0: 2}


def test_construct_a2_killing_nondegenerate():
    L = construct(rootsystem.build("A", 2))
    assert L.dim == 8
    assert L.killing_matrix().rank() == 8


def test_construct_g2():
    L = construct(rootsystem.build("G", 2))
    assert L.dim == 14
    L.check_jacobi()  # exhaustive triple check


def test_construct_exceptional_types():
    assert construct(rootsystem.build("F", 4)).dim == 52
    assert construct(rootsystem.build("E", 6)).dim == 78
    assert construct(rootsystem.build("E", 7)).dim == 133
    assert construct(rootsystem.build("E", 8)).dim == 248


def test_weight_vectors_and_cartan_action():
    L = construct(rootsystem.build("B", 2))
    rs = L.root_system
    for i, ci in L.root_of.items():
        beta = sum_root(rs, ci)
        for pos, h in enumerate(L.cartan):
            b = L.bracket(h, i)
            expect = rs.cartan_integer(beta, rs.simple_roots[pos])
            assert b.get(i, 0) == expect
            assert set(b) <= {i}


def sum_root(rs, coeffs):
    v = None
    for c, a in zip(coeffs, rs.simple_roots):
        t = tuple(c * x for x in a)
        v = t if v is None else tuple(p + q for p, q in zip(v, t))
    return v


def test_root_space_grading():
    L = construct(rootsystem.build("A", 3))
    rs = L.root_system
    for (i, j), vec in L.brackets.items():
        if i in L.root_of and j in L.root_of:
            s = tuple(a + b for a, b in
                      zip(L.root_of[i], L.root_of[j]))
            if any(s):
                targets = {k for k in vec}
                assert targets <= {k for k, c in L.root_of.items() if c == s}
            else:
                assert set(vec) <= set(L.cartan)


def test_root_string_bracket_eigenvalue_canonical():
    # [e_-a, [e_a, e_b]] = q(r+1) e_b in a coroot-normalized Chevalley basis
    for t, r in [("A", 2), ("G", 2)]:
        L = construct(rootsystem.build(t, r))
        rs = L.root_system
        idx = {c: i for i, c in L.root_of.items()}
        for a_c, i_a in idx.items():
            for b_c, i_b in idx.items():
                if b_c == a_c or b_c == tuple(-x for x in a_c):
                    continue
                alpha, beta = sum_root(rs, a_c), sum_root(rs, b_c)
                rr, qq = rs.root_string(alpha, beta)
                val = L.bracket_vec({idx[tuple(-x for x in a_c)]: 1},
                                    L.bracket_vec({i_a: 1}, {i_b: 1}))
                assert val.get(i_b, 0) == qq * (rr + 1)
                assert set(val) <= {i_b}


def test_cartan_sum_identity():
    # sum_i [h^i, [h_i, e_b]] = (b, b) e_b with Killing-dual Cartan partners
    for t, r in [("A", 2), ("G", 2)]:
        L = construct(rootsystem.build(t, r))
        rs = L.root_system
        dual = L.dual_basis()
        kappa_ratio = None
        for i, ci in L.root_of.items():
            beta = sum_root(rs, ci)
            acc = {}
            for h in L.cartan:
                hd = {k: c for k, c in enumerate(dual[h]) if c != 0}
                inner = L.bracket_vec({h: 1}, {i: 1})
                for k, v in L.bracket_vec(hd, inner).items():
                    acc[k] = acc.get(k, 0) + v
            assert set(acc) <= {i}
            got = acc.get(i, 0)
            ratio = got / rs.pairing(beta, beta)
            if kappa_ratio is None:
                kappa_ratio = ratio
            # a single proportionality constant relates the Killing-induced
            # form to the long-squared-2 normalization
            assert ratio == kappa_ratio


def test_cartan_sum_identity_fixture(a2_fixture):
    # with the fixture's declared form, the Cartan dual pair reproduces a
    # single consistent (beta, beta) ratio on every root vector
    L = a2_fixture
    dual = L.dual_basis()
    rs = L.root_system
    ratio = None
    for i, ci in L.root_of.items():
        beta = sum_root(rs, ci)
        acc = {}
        for h in L.cartan:
            hd = {k: c for k, c in enumerate(dual[h]) if c != 0}
            inner = L.bracket_vec({h: 1}, {i: 1})
            for k, v in L.bracket_vec(hd, inner).items():
                acc[k] = acc.get(k, 0) + v
        assert set(acc) == {i}
        got = acc[i] / rs.pairing(beta, beta)
        ratio = got if ratio is None else ratio
        assert got == ratio
    assert ratio == F(2, 3)   # (theta,theta)_B / 2 for the kappa/4 form


FIXTURE_TEXT = """
dim 2
labels a b
"""


def test_load_abelian():
    L = loads_fixture(FIXTURE_TEXT)
    assert L.dim == 2
    assert L.bracket(0, 1) == {}
    assert L.killing_matrix() == Matrix.zero(2, 2)


def test_load_a2_table(a2_fixture):
    L = a2_fixture
    assert L.bracket(0, 1) == {2: -2}          # [e1,e2] = -2 e3
    assert L.bracket(2, 5) == {6: 2, 7: 2}     # [e3,e6] = 2e7 + 2e8
    assert L.bracket(5, 7) == {5: 2}           # [e6,e8] = 2 e6
    assert L.bracket(1, 0) == {2: 2}           # antisymmetric completion
    assert L.cartan == (6, 7)
    assert L.form_scale == F(1, 4)


def test_load_g2_fixture(g2_fixture):
    L = g2_fixture
    assert L.dim == 3
    assert L.bracket(0, 1) == {0: 6}
    assert L.bracket(0, 2) == {0: -4}


def test_jacobi_violation_reported():
    bad = """
dim 3
bracket 1 2 : 3 1
bracket 1 3 : 1 1
"""
    with pytest.raises(JacobiError) as err:
        loads_fixture(bad)
    assert "e1" in str(err.value)


def test_parse_errors():
    with pytest.raises(ValueError):
        loads_fixture("dim 2\nbracket 1 5 : 1 1\n")
    with pytest.raises(ValueError):
        loads_fixture("bracket 1 2 : 1 1\n")
    with pytest.raises(ValueError):
        loads_fixture("dim 2\nbracket 1 2 : 1\n")
    with pytest.raises(ValueError):
        loads_fixture("dim 3\nlabels a b\n")   # label count != dim


def test_killing_values_literal_and_scaled(a2_fixture):
    # the published dual tables correspond to kappa/4, not kappa itself;
    # both values are pinned here so the discrepancy stays visible
    k = a2_fixture.killing_matrix()
    assert k.data[0][3] == 24
    assert a2_fixture.form_scale * k.data[0][3] == 6
    assert k.data[6][6] == 48
    assert k == k.transpose()


TABLE2 = {
    0: {3: F(1, 6)}, 1: {4: F(1, 6)}, 2: {5: F(1, 6)},
    3: {0: F(1, 6)}, 4: {1: F(1, 6)}, 5: {2: F(1, 6)},
    6: {6: F(1, 9), 7: F(1, 18)}, 7: {6: F(1, 18), 7: F(1, 9)},
}


def test_dual_basis_table2(a2_fixture):
    dual = a2_fixture.dual_basis()
    for j, expect in TABLE2.items():
        got = {i: c for i, c in enumerate(dual[j]) if c != 0}
        assert got == expect


def test_dual_basis_defining_property(a2_fixture):
    kappa = a2_fixture.killing_matrix()
    scaled = Matrix([[a2_fixture.form_scale * x for x in row]
                     for row in kappa.data])
    dual = a2_fixture.dual_basis()
    for i in range(8):
        for j in range(8):
            val = sum(scaled.data[i][k] * dual[j][k] for k in range(8))
            assert val == (1 if i == j else 0)


def test_dual_basis_degenerate_rejected(g2_fixture):
    with pytest.raises(ValueError):
        g2_fixture.dual_basis()


def test_subalgebra_closure_error():
    L = construct(rootsystem.build("A", 2))
    with pytest.raises(ValueError):
        subalgebra(L, [{0: 1}, {3: 1}])  # e_a and e_-a generate a Cartan too


def test_direct_sum_and_rescale(g2_fixture):
    D = direct_sum(g2_fixture, g2_fixture)
    assert D.dim == 6
    D.check_jacobi()
    scaled = g2_fixture.rescaled([2, 3, F(1, 2)])
    scaled.check_jacobi()
    assert scaled.bracket(0, 1) == {0: 6 * 3}
