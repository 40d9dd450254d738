import itertools
import random

import numpy as np
import pytest

from gelfand_wreath import group as grp
from gelfand_wreath import model as mdl
from gelfand_wreath.characters import decompose, inner_product, irreducible_character
from gelfand_wreath.classes import SymmetricClassLabel, class_size, enumerate_symmetric_classes, symmetric_class_of
from gelfand_wreath.cyclotomic import CyclotomicError
from gelfand_wreath.tableaux import multipartition_list


def dense_rho(g, rep="rho"):
    """Dense complex matrix built straight from the defining formula."""
    basis = list(grp.enumerate_absolute_involutions(g.r, g.n))
    index = {v: i for i, v in enumerate(basis)}
    zeta = np.exp(2j * np.pi / g.r)
    m = np.zeros((len(basis), len(basis)), dtype=complex)
    for j, v in enumerate(basis):
        pair = sum(a * b for a, b in zip(g.colors, v.colors))
        coeff = zeta**pair
        if rep == "rho":
            coeff *= (-1) ** grp.inv_v(g, v)
        m[index[grp.absolute_conjugate(g, v)], j] = coeff
    return m


def test_identity_matrix():
    for r, n in [(2, 3), (3, 2)]:
        e = mdl.model_matrix(grp.identity(r, n))
        assert e.columns == tuple((j, 1) for j in range(e.dimension))
        assert e.trace() == len(mdl.model_basis(r, n))
        assert mdl.aux_matrix(grp.identity(r, n)) == e


@pytest.mark.parametrize("r, n", [(2, 2), (1, 3), (3, 2)])
def test_homomorphism_against_dense_matrices(r, n):
    elems = list(grp.enumerate_group(r, n))
    dense = {g: dense_rho(g) for g in elems}
    for g, h in itertools.product(elems, repeat=2):
        assert np.allclose(dense[grp.multiply(g, h)], dense[g] @ dense[h])
        assert mdl.model_matrix(grp.multiply(g, h)) == mdl.model_matrix(g) @ mdl.model_matrix(h)


def test_sparse_matches_dense():
    rng = random.Random(3)
    for r, n in [(2, 3), (3, 3), (4, 2)]:
        for _ in range(5):
            g = grp.random_element(r, n, rng)
            sparse = mdl.model_matrix(g)
            d = np.zeros_like(dense_rho(g))
            zeta = np.exp(2j * np.pi / r)
            for j, (i, a) in enumerate(sparse.columns):
                d[i, j] = sum(c * zeta**k for k, c in enumerate(a.coeffs))
            assert np.allclose(d, dense_rho(g))
            assert sparse.is_generalized_permutation()


def test_aux_is_homomorphism_on_g32():
    elems = list(grp.enumerate_group(3, 2))
    for g, h in itertools.product(elems, repeat=2):
        assert mdl.aux_matrix(grp.multiply(g, h)) == mdl.aux_matrix(g) @ mdl.aux_matrix(h)


def test_literal_sign_variant_is_not_a_representation_for_r3():
    elems = list(grp.enumerate_group(3, 2))
    failures = sum(
        1
        for g, h in itertools.product(elems, repeat=2)
        if mdl.aux_matrix(grp.multiply(g, h), literal=True) != mdl.aux_matrix(g, literal=True) @ mdl.aux_matrix(h, literal=True)
    )
    assert failures > 0
    # for r = 2 both readings agree
    for g in grp.enumerate_group(2, 2):
        assert mdl.aux_matrix(g, literal=True) == mdl.aux_matrix(g)


def test_aux_and_model_differ_by_inversion_signs():
    for g in grp.enumerate_group(2, 3):
        rho, phi = mdl.model_matrix(g), mdl.aux_matrix(g)
        for v, (i, a), (k, b) in zip(mdl.model_basis(2, 3), rho.columns, phi.columns):
            assert i == k and a == b * (-1) ** grp.inv_v(g, v)


def test_block_structure():
    rng = random.Random(5)
    for r, n in [(2, 4), (3, 3)]:
        basis = mdl.model_basis(r, n)
        for _ in range(20):
            g = grp.random_element(r, n, rng)
            for j, (i, _) in enumerate(mdl.model_matrix(g).columns):
                assert symmetric_class_of(basis[i]) == symmetric_class_of(basis[j])


def test_model_character_identity_values():
    chi = mdl.model_character(2, 4)
    assert chi.degree == len(mdl.model_basis(2, 4)) == 76
    c = SymmetricClassLabel(2, 6, (1, 1), (1, 1))
    assert mdl.model_character(2, 6, classes=c).degree == class_size(c) == 180


@pytest.mark.parametrize("r, n", [(2, 3), (3, 2)])
def test_trace_formula_matches_matrix_traces(r, n):
    chi = mdl.model_character(r, n, exhaustive=True)
    phi = mdl.model_character(r, n, "phi", exhaustive=True)
    for g in grp.enumerate_group(r, n):
        assert chi(g) == mdl.model_matrix(g).trace()
        assert phi(g) == mdl.aux_matrix(g).trace()


def test_literal_variant_trace_is_not_a_character():
    chi = mdl.model_character(3, 2, "phi-literal")
    with pytest.raises(CyclotomicError):
        decompose(chi)


@pytest.mark.parametrize("r, n", [(1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_gelfand_property(r, n):
    chi = mdl.model_character(r, n)
    for mu in multipartition_list(r, n):
        assert inner_product(chi, irreducible_character(mu)) == 1


def test_worked_decomposition():
    c = symmetric_class_of(grp.parse_window(2, [-6, 4, 3, 2, -5, -1]))
    report = mdl.decompose_class(c)
    expected = set(itertools.product([(2, 1), (1, 1, 1)], repeat=2))
    assert report.computed == {mu: 1 for mu in expected}
    assert report.verified
    data = report.to_json(diff=False)
    assert data["class"] == {"f": [1, 1], "p": [1, 1]}
    assert sorted(tuple(tuple(p) for p in s["multipartition"]) for s in data["summands"]) == sorted(expected)
    assert all(s["multiplicity"] == 1 for s in data["summands"])


def test_identity_class_decomposition():
    for r, n in [(2, 3), (3, 2)]:
        c = SymmetricClassLabel(r, n, (n,) + (0,) * (r - 1), (0,) * r)
        assert mdl.decompose_class(c).computed == {((n,),) + ((),) * (r - 1): 1}


@pytest.mark.parametrize("r, n", [(1, 4), (2, 3), (2, 4), (3, 3)])
def test_every_class_matches_shapes(r, n):
    for c in enumerate_symmetric_classes(r, n):
        report = mdl.decompose_class(c)
        assert report.verified, report.to_json()
        assert not report.missing and not report.unexpected


def test_report_diff_on_wrong_prediction():
    c = SymmetricClassLabel(2, 2, (2, 0), (0, 0))
    report = mdl.decompose_class(c)
    report.predicted = {((1, 1), ())}
    assert not report.verified
    data = report.to_json()
    assert data["missing"] == [[[1, 1], []]] and data["unexpected"] == [[[2], []]]


def test_no_fixed_point_examples():
    r1 = mdl.no_fixed_point_module_check(2, 1)
    assert r1.passed
    assert decompose(mdl.fixed_point_free_character(2, 1)) == {((2,), ()): 1, ((), (2,)): 1}
    r0 = mdl.no_fixed_point_module_check(2, 0)
    assert r0.passed
    assert mdl.fixed_point_free_character(2, 0).degree == 1
    r3 = mdl.no_fixed_point_module_check(3, 1)
    assert r3.passed
    assert decompose(mdl.fixed_point_free_character(3, 1)) == {
        ((2,), (), ()): 1,
        ((), (2,), ()): 1,
        ((), (), (2,)): 1,
    }
    assert [c.name for c in r1.checks][-1] == "phi: restriction = induction"


@pytest.mark.parametrize("r, m", [(2, 2), (2, 3), (3, 2)])
def test_no_fixed_point_larger(r, m):
    assert mdl.no_fixed_point_module_check(r, m).passed


def test_no_fixed_point_literal_variant_fails_for_r3():
    report = mdl.no_fixed_point_module_check(3, 1, "phi-literal")
    assert not report.passed
    assert mdl.no_fixed_point_module_check(2, 2, "phi-literal").passed


def test_rho_and_phi_on_one_fixed_point_free_class():
    # rho gives the diagrams with no odd columns, phi those with no odd rows
    c = SymmetricClassLabel(2, 4, (0, 0), (2, 0))
    assert decompose(mdl.model_character(2, 4, classes=c)) == {((2, 2), ()): 1, ((1, 1, 1, 1), ()): 1}
    assert decompose(mdl.model_character(2, 4, "phi", classes=c)) == {((4,), ()): 1, ((2, 2), ()): 1}


@pytest.mark.parametrize("p", [(2, 0), (1, 1), (0, 2)])
def test_delta_sums_span_one_row_module(p):
    chi, invariant = mdl.delta_sum_character(2, p)
    assert invariant
    assert decompose(chi) == {tuple((2 * q,) if q else () for q in p): 1}


def test_delta_sums_r3():
    chi, invariant = mdl.delta_sum_character(3, (1, 0, 1))
    assert invariant
    assert decompose(chi) == {((2,), (), (2,)): 1}


def test_unknown_representation():
    with pytest.raises(ValueError):
        mdl.coefficient(grp.identity(2, 2), grp.identity(2, 2), "psi")
