import math
import random

import numpy as np
import pytest

from sicpovm import analysis
from sicpovm.analysis import (
    apply,
    conjecture_scan,
    conjugate,
    cyclic_subgroup,
    d3_representative,
    diag_order3,
    eigenspace_dims,
    exact_fiducial,
    is_eigenvector,
    orbit_stats,
    stabilizer,
    table_conjugator,
    table_order3_element,
    verify_fiducial,
    zauner_check,
)
from sicpovm.clifford import (
    canonicalize,
    compose,
    element_order,
    enumerate_group,
    group_order,
    identity,
    inverse,
    is_canonical_order3,
    validate_element,
)
from sicpovm.errors import CapExceeded, DimensionMismatch, NonDivisible, NonIntegerTrace, UnknownRecipe
from sicpovm.search import SearchConfig, search_fiducial
from sicpovm.tables import ORDER3_ROWS, ZAUNER_CONJUGATORS
from sicpovm.weyl import OperatorMatrix

ALL_RECIPES = [("d2", None), ("d3", 0.0), ("d3", math.pi / 12), ("d3", math.pi / 6), ("d3", 0.3),
               ("d4", None), ("d7a", None), ("d7b", None), ("d19", None)]


def _same_ray(u, v, tol=1e-9):
    return abs(abs(np.vdot(u, v)) - np.linalg.norm(u) * np.linalg.norm(v)) < tol


@pytest.mark.parametrize("recipe,t", ALL_RECIPES)
def test_recipes_unit_norm_and_fiducial(recipe, t):
    psi = exact_fiducial(recipe, t)
    assert abs(np.linalg.norm(psi) - 1) < 1e-12
    rep = verify_fiducial(psi)
    assert rep.passed and rep.max_deviation < 1e-10
    assert len(rep.overlaps) == rep.d**2 - 1 and (0, 0) not in rep.overlaps


def test_recipe_errors():
    with pytest.raises(UnknownRecipe):
        exact_fiducial("d8")
    with pytest.raises(ValueError):
        exact_fiducial("d3")


def test_uniform_vector_fails():
    psi = np.ones(5) / np.sqrt(5)
    rep = verify_fiducial(psi)
    assert not rep.passed
    assert abs(rep.overlaps[(1, 0)] - 1) < 1e-12


def test_report_pass_rule():
    psi = exact_fiducial("d4") * 1.001
    rep = verify_fiducial(psi, tol=1e-6)
    assert rep.max_deviation < 1e-2 and not rep.passed
    assert rep.passed == (rep.max_deviation <= rep.tolerance and rep.norm_error <= rep.tolerance)


def test_known_eigenvectors():
    assert is_eigenvector(validate_element((-2, 0, 0, -3), (0, 0), 7), exact_fiducial("d7b"))
    assert is_eigenvector(validate_element((-3, 0, 0, 2), (0, 0), 7), exact_fiducial("d7a"))
    assert is_eigenvector(validate_element((-9, 0, 0, -2), (0, 0), 19), exact_fiducial("d19"))
    assert not is_eigenvector(validate_element((1, 0, 0, 1), (1, 0), 7), exact_fiducial("d7a"))
    with pytest.raises(DimensionMismatch):
        is_eigenvector(identity(5), exact_fiducial("d7a"))
    with pytest.raises(DimensionMismatch):
        apply(identity(5), exact_fiducial("d4"))


def test_apply_identity_and_conjugation():
    psi = exact_fiducial("d7b")
    assert _same_ray(apply(identity(7), psi), psi)
    j = validate_element((1, 0, 0, -1), (0, 0), 7)
    assert _same_ray(apply(j, psi), psi.conj())


@pytest.mark.parametrize("recipe,t", [("d2", None), ("d3", 0.3), ("d4", None)])
def test_action_covariance_all_elements(recipe, t):
    psi = exact_fiducial(recipe, t)
    base = verify_fiducial(psi).max_deviation
    for e in enumerate_group(psi.shape[0]):
        out = apply(e, psi)
        assert abs(np.linalg.norm(out) - 1) < 1e-12
        rep = verify_fiducial(out)
        assert rep.passed and abs(rep.max_deviation - base) < 1e-9


@pytest.mark.parametrize("recipe", ["d7a", "d7b"])
def test_action_covariance_sampled_d7(recipe):
    psi = exact_fiducial(recipe)
    base = verify_fiducial(psi).max_deviation
    rnd = random.Random(11)
    elems = list(enumerate_group(7))
    for e in rnd.sample(elems, 300):
        rep = verify_fiducial(apply(e, psi))
        assert rep.passed and abs(rep.max_deviation - base) < 1e-9


def test_eigenspace_examples():
    assert eigenspace_dims(validate_element((-1, -1, 1, 0), (2, 2), 5)) == (1, 2, 2)
    assert eigenspace_dims(validate_element((-4, 11, 1, 3), (4, -5), 12)) == (3, 4, 5)
    assert eigenspace_dims(identity(4)) == (4,)
    with pytest.raises(ValueError):
        eigenspace_dims(validate_element((1, 0, 0, -1), (0, 0), 5))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_eigenspace_dims_sum_to_d(d):
    for e in enumerate_group(d):
        if e.is_unitary:
            assert sum(eigenspace_dims(e)) == d


def test_eigenspace_dims_phase_invariant(monkeypatch):
    e = table_order3_element(12)
    base = eigenspace_dims(e)
    real = analysis.synthesize
    for j in range(1, 3):
        root = np.exp(2j * np.pi * j / 3)
        monkeypatch.setattr(analysis, "synthesize", lambda x, r=root: OperatorMatrix(r * real(x).matrix))
        assert eigenspace_dims(e) == base
    monkeypatch.undo()


def test_eigenspace_non_integer_trace(monkeypatch):
    e = table_order3_element(5)
    bad = OperatorMatrix(np.diag(np.exp(1j * np.array([0.1, 0.7, 1.3, 2.0, 2.9]))))
    monkeypatch.setattr(analysis, "synthesize", lambda x: bad)
    with pytest.raises(NonIntegerTrace):
        eigenspace_dims(e)


@pytest.mark.parametrize("d", sorted(ORDER3_ROWS))
def test_all_table_rows(d):
    F, chi, dims, _ = ORDER3_ROWS[d]
    e = validate_element(F, chi, d)
    assert is_canonical_order3(e) and element_order(e) == 3
    assert eigenspace_dims(e) == tuple(sorted(dims))
    assert zauner_check(d)
    assert d in ZAUNER_CONJUGATORS


def test_conjugate_examples():
    l5 = validate_element((1, 0, 1, 1), (0, -2), 5)
    z5 = canonicalize(validate_element((0, -1, 1, -1), (0, 0), 5))
    assert conjugate(l5, validate_element((-1, -1, 1, 0), (2, 2), 5)) == z5
    e = table_order3_element(7)
    assert conjugate(identity(7), e) == canonicalize(e)
    assert conjugate(table_conjugator(7), e) == canonicalize(validate_element((0, -1, 1, -1), (0, 0), 7))
    with pytest.raises(DimensionMismatch):
        conjugate(identity(5), e)


def _brute_stabilizer(psi):
    return {e for e in enumerate_group(psi.shape[0]) if is_eigenvector(e, psi)}


@pytest.mark.parametrize("recipe,t", [("d2", None), ("d3", 0.0), ("d3", math.pi / 6), ("d3", 0.3), ("d4", None)])
def test_stabilizer_matches_brute_force(recipe, t):
    psi = exact_fiducial(recipe, t)
    assert set(stabilizer(psi).elements) == _brute_stabilizer(psi)


def test_stabilizer_matches_brute_force_searched_d5():
    psi = search_fiducial(SearchConfig(5, restarts=4, seed=5)).best_vector
    assert set(stabilizer(psi).elements) == _brute_stabilizer(psi)


def test_stabilizer_of_generic_vector_is_trivial():
    rng = np.random.default_rng(0)
    psi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    res = stabilizer(psi)
    assert res.order == 1 and res.elements == [canonicalize(identity(3))]
    assert orbit_stats(psi) == (432, 48)


@pytest.mark.parametrize("recipe,t", ALL_RECIPES[:-1])
def test_stabilizer_is_subgroup(recipe, t):
    psi = exact_fiducial(recipe, t)
    res = stabilizer(psi)
    elems = set(res.elements)
    assert len(elems) == res.order
    assert group_order(psi.shape[0]) % res.order == 0
    for a in elems:
        assert canonicalize(inverse(a)) in elems
        for b in elems:
            assert canonicalize(compose(a, b)) in elems
    if res.generator_hint is not None:
        assert set(cyclic_subgroup(res.generator_hint)) == elems


def test_stabilizer_generators():
    s7a = stabilizer(exact_fiducial("d7a"))
    assert s7a.order == 3
    assert set(cyclic_subgroup(validate_element((-3, 0, 0, 2), (0, 0), 7))) == set(s7a.elements)
    s7b = stabilizer(exact_fiducial("d7b"))
    assert s7b.order == 6
    assert set(cyclic_subgroup(validate_element((-2, 0, 0, -3), (0, 0), 7))) == set(s7b.elements)
    assert stabilizer(exact_fiducial("d3", math.pi / 6)).generator_hint is None


@pytest.mark.parametrize("recipe,t", [("d2", None), ("d3", 0.3), ("d4", None)])
def test_stabilizer_conjugation(recipe, t):
    psi = exact_fiducial(recipe, t)
    base = stabilizer(psi).elements
    rnd = random.Random(2)
    for l in rnd.sample(list(enumerate_group(psi.shape[0])), 5):
        moved = set(stabilizer(apply(l, psi)).elements)
        assert moved == {conjugate(l, s) for s in base}


def test_stabilizer_d19_needs_opt_in():
    psi = exact_fiducial("d19")
    with pytest.raises(CapExceeded):
        stabilizer(psi)


def test_stabilizer_d19_full_sweep():
    res = stabilizer(exact_fiducial("d19"), full_sweep=True)
    assert res.order == 18
    assert set(cyclic_subgroup(validate_element((-9, 0, 0, -2), (0, 0), 19))) == set(res.elements)


def test_orbit_non_divisible(monkeypatch):
    fake = analysis.StabilizerResult([], 5)
    monkeypatch.setattr(analysis, "stabilizer", lambda *a, **k: fake)
    with pytest.raises(NonDivisible):
        orbit_stats(exact_fiducial("d2"))


def test_diag_order3_examples():
    e = diag_order3(7)
    assert e.F[0] in (2, 4) and is_canonical_order3(e)
    assert validate_element((4, 0, 0, -5), (0, 0), 7) == validate_element((-3, 0, 0, 2), (0, 0), 7)
    assert diag_order3(9) is None and diag_order3(5) is None
    assert diag_order3(3) is None


def test_conjecture_scan_d2():
    rep = conjecture_scan(exact_fiducial("d2"))
    assert rep.has_canonical_order3 and rep.stabilizer_order == 6
    f2 = canonicalize(validate_element((0, 1, -1, -1), (0, 0), 2))
    assert f2 in rep.canonical_order3
    assert rep.conjugate_to_zauner


def test_conjecture_scan_witness_is_valid():
    for recipe, t in [("d3", 0.3), ("d7a", None), ("d4", None)]:
        psi = exact_fiducial(recipe, t)
        rep = conjecture_scan(psi)
        assert rep.has_canonical_order3
        l, s = rep.zauner_witness
        d = psi.shape[0]
        assert conjugate(l, s) == canonicalize(validate_element((0, -1, 1, -1), (0, 0), d))
        assert is_eigenvector(s, psi)
        # l maps psi to an eigenvector of [Z, 0]
        assert is_eigenvector(validate_element((0, -1, 1, -1), (0, 0), d), apply(l, psi))
    rep7 = conjecture_scan(exact_fiducial("d7a"))
    assert canonicalize(validate_element((-3, 0, 0, 2), (0, 0), 7)) in rep7.canonical_order3


@pytest.mark.parametrize("t", [0.1, 0.3, 0.5, -0.2, 2.0])
def test_d3_orbit_relations(t):
    shift = validate_element((1, 0, 0, 1), (0, 1), 3)
    flip = validate_element((1, 0, 0, -1), (0, 0), 3)
    assert _same_ray(apply(shift, exact_fiducial("d3", t)), exact_fiducial("d3", t + math.pi / 3))
    assert _same_ray(apply(flip, exact_fiducial("d3", t)), exact_fiducial("d3", -t))
    r = d3_representative(t)
    assert 0 <= r <= math.pi / 6 + 1e-15
    n = round((t - r) / (math.pi / 3))
    m = round((t + r) / (math.pi / 3))
    assert min(abs(t - r - n * math.pi / 3), abs(t + r - m * math.pi / 3)) < 1e-12
    assert stabilizer(exact_fiducial("d3", t)).order == stabilizer(exact_fiducial("d3", r)).order
