import random
from fractions import Fraction

import numpy as np
import pytest

from spectral_stokes import hor, matrices as mx, orbit, seifert as sf
from spectral_stokes.errors import LeftT, Unclassified
from spectral_stokes.polycore import RealPoly

F = Fraction


def random_triangular(rng, n, lo=-2, hi=2):
    return mx.to_matrix([[1 if i == j else (rng.randrange(lo, hi + 1) if j > i else 0)
                          for j in range(n)] for i in range(n)])


class TestSignAction:
    def test_trivial(self):
        S = random_triangular(random.Random(0), 3)
        assert mx.mat_eq(orbit.sign_act((1, 1, 1), S), S)

    def test_family_exchange(self):
        # conjugation by (1,-1,1) carries the symmetric band to the
        # antisymmetric band in size 3
        p1 = F(3, 2)
        S1 = hor.poly_to_matrix(RealPoly([1, p1, p1, 1]), 1).S
        S2 = orbit.sign_act((1, -1, 1), S1)
        assert S2.tolist() == [[1, -p1, p1], [0, 1, -p1], [0, 0, 1]]
        q, k2 = hor.negate_poly_transform(RealPoly([1, p1, p1, 1]), 1)

    def test_size2_negation(self):
        S = mx.to_matrix([[1, F(3, 4)], [0, 1]])
        S2 = orbit.sign_act((1, -1), S)
        assert S2.tolist() == [[1, F(-3, 4)], [0, 1]]
        mono1 = mx.char_poly_exact(mx.solve_unit_upper(S, S.T.copy()))
        mono2 = mx.char_poly_exact(mx.solve_unit_upper(S2, S2.T.copy()))
        assert mono1 == mono2


class TestBraidAction:
    def test_identity_fixed(self):
        E = mx.identity(4)
        for i in (1, 2, 3):
            assert mx.mat_eq(orbit.braid_act(i, E), E)

    def test_involution_and_invariance(self):
        rng = random.Random(41)
        for _ in range(50):
            n = rng.randrange(2, 5)
            S = random_triangular(rng, n)
            i = rng.randrange(1, n)
            cp = mx.char_poly_exact(mx.solve_unit_upper(S, S.T.copy()))
            S2 = orbit.braid_act(i, S)
            assert mx.is_unit_upper_triangular(S2)
            assert mx.char_poly_exact(mx.solve_unit_upper(S2, S2.T.copy())) == cp
            assert mx.mat_eq(orbit.braid_act(i, S2, -1), S)
            assert mx.mat_eq(orbit.braid_act(i, orbit.braid_act(i, S, -1)), S)

    def test_involution_bulk_size4(self):
        rng = random.Random(47)
        for _ in range(500):
            S = random_triangular(rng, 4, -3, 3)
            i = rng.randrange(1, 4)
            assert mx.mat_eq(orbit.braid_act(i, orbit.braid_act(i, S), -1), S)

    def test_class_invariance(self):
        rng = random.Random(43)
        for _ in range(20):
            S = random_triangular(rng, 3, -1, 1)
            try:
                before = sf.classify(sf.SeifertPair.from_triangular(S))
            except Unclassified:
                continue
            S2 = orbit.braid_act(rng.randrange(1, 3), S)
            eps = [rng.choice((1, -1)) for _ in range(3)]
            S3 = orbit.sign_act(eps, S2)
            after = sf.classify(sf.SeifertPair.from_triangular(S3))
            assert sf.types_multiset_equal(before, after)


class TestOrbitExplore:
    def test_identity_orbit(self):
        rep = orbit.orbit_explore(mx.identity(3), depth=4, budget=100)
        assert len(rep.nodes) == 1 and not rep.exhausted

    def test_simple_orbit_finite(self):
        S = mx.to_matrix([[1, 1], [0, 1]])
        rep = orbit.orbit_explore(S, depth=12, budget=1000)
        assert not rep.exhausted
        assert len(rep.nodes) == 1  # one class modulo sign conjugation

    def test_invariant_char_poly_per_node(self):
        S = hor.poly_to_matrix(RealPoly([1, 1, 0, 1, 1]), 1).S
        rep = orbit.orbit_explore(S, depth=3, budget=64)
        cp = mx.char_poly_exact(mx.solve_unit_upper(S, S.T.copy()))
        for key in rep.nodes:
            T = mx.to_matrix([list(r) for r in key])
            assert mx.char_poly_exact(mx.solve_unit_upper(T, T.T.copy())) == cp

    def test_budget_exhaustion_reported(self):
        S = hor.poly_to_matrix(RealPoly([1, 3, 3, 1]), 1).S
        rep = orbit.orbit_explore(S, depth=50, budget=10)
        assert rep.exhausted


class TestConjectureExperiment:
    def test_sign_related_members_grouped(self):
        M1 = hor.poly_to_matrix(RealPoly([1, F(3, 2), F(3, 2), 1]), 1)
        q, k2 = hor.negate_poly_transform(M1.p, 1)
        M2 = hor.poly_to_matrix(q, k2)
        rep = orbit.conjecture16_check([("a", M1), ("b", M2)])
        assert len(rep.violations) == 0

    def test_distinct_polys_grouped_apart(self):
        M1 = hor.poly_to_matrix(RealPoly([1, 1, 1]), 1)
        M2 = hor.poly_to_matrix(RealPoly([1, 2, 1]), 1)
        rep = orbit.conjecture16_check([("a", M1), ("b", M2)])
        assert len(rep.groups) == 2 and not rep.violations

    def test_report_schema(self):
        M = hor.poly_to_matrix(RealPoly([1, 1, 1]), 1)
        rep = orbit.conjecture16_check([("a", M)])
        data = rep.to_json()
        assert set(data) == {"groups", "violations"}

    def test_same_fiber_different_spectrum_is_reported(self):
        # two members with equal monodromy polynomial but different spectra:
        # fibers of the eigenvalue map are coarser than its strata, so this
        # lands in the candidate list (it does not contradict anything)
        from spectral_stokes.polycore import poly_from_cyclotomic_mults
        p_a = poly_from_cyclotomic_mults({2: 2, 10: 1})
        p_b = poly_from_cyclotomic_mults({3: 1, 5: 1})
        M_a = hor.poly_to_matrix(p_a, 1)
        M_b = hor.poly_to_matrix(p_b, 1)
        rep = orbit.conjecture16_check([("a", M_a), ("b", M_b)])
        assert len(rep.groups) == 1
        assert len(rep.violations) == 1


class TestGenericTrack:
    def test_constant_path(self):
        res = orbit.generic_path_track([np.eye(3), np.eye(3)], steps=16)
        assert np.allclose(res.alphas, 0.0)
        assert not res.path_dependent

    def test_boundary_collision_flagged(self):
        res = orbit.generic_path_track(
            [np.eye(2), np.array([[1.0, 2.0], [0.0, 1.0]])], steps=300)
        assert sorted(res.endpoint) == pytest.approx([-0.5, 0.5], abs=1e-6)
        assert res.path_dependent
        assert any(abs(r - 1.0) < 1e-9 for r, _, _ in res.collisions)

    def test_must_start_at_identity(self):
        with pytest.raises(ValueError):
            orbit.generic_path_track([np.array([[1.0, 1.0], [0.0, 1.0]])] * 2)

    def test_leaving_the_set_detected(self):
        bad = np.array([[1.0, 3.0], [0.0, 1.0]])  # eigenvalues off the circle
        with pytest.raises(LeftT):
            orbit.generic_path_track([np.eye(2), bad], steps=64)

    def test_matches_family_tracking(self):
        p = RealPoly([1.0, 0.7, 0.7, 1.0])
        M = hor.poly_to_matrix(p, 1)
        Sf = np.asarray(M.S, dtype=float)
        res = orbit.generic_path_track([np.eye(3), Sf], steps=600)
        fam = hor.simplex_path_track(hor.poly_to_matrix(p, 1), steps=600)
        assert sorted(res.endpoint) == pytest.approx(
            sorted(float(x) for x in fam.endpoint), abs=1e-6)
