import random
from fractions import Fraction

import pytest

from spectral_stokes import hor, lowdim as ld, matrices as mx, seifert as sf
from spectral_stokes.errors import OutOfFamily, OutOfT
from spectral_stokes.polycore import RealPoly
from spectral_stokes.spectra import Spp

F = Fraction


class TestMembership:
    def test_identity(self):
        assert ld.f3((0, 0, 0)) == 4 and ld.member3((0, 0, 0))

    def test_cone_point(self):
        assert ld.f3((2, 2, 2)) == 0 and ld.member3((2, 2, 2))

    def test_outside(self):
        assert ld.f3((1, 2, 0)) == -1 and not ld.member3((1, 2, 0))

    def test_char_poly_formula_random(self):
        rng = random.Random(31)
        for _ in range(1000):
            a = tuple(F(rng.randrange(-16, 17), 4) for _ in range(3))
            S = ld.s3_matrix(a)
            mono = mx.solve_unit_upper(S, S.T.copy())
            assert mx.char_poly_exact(mono) == ld.char_poly3(a)


class TestClassify3:
    def test_interior_positive(self):
        c = ld.classify3((1, 1, 1))
        assert c.stratum == ld.Stratum3.INTERIOR_POS
        labels = sf.type_label_multiset(c.types)
        assert "Seif(1,1,1,1)" in labels and "F2" not in labels

    def test_exceptional(self):
        c = ld.classify3((2, 2, 2))
        assert c.stratum == ld.Stratum3.EXCEPTIONAL
        assert sf.type_label_multiset(c.types) == "Seif(1,1,1,1)+Seif(-1,2,1)"

    def test_triple_jordan(self):
        c = ld.classify3((3, 3, 3))
        assert c.stratum == ld.Stratum3.JORDAN3_BOUNDARY
        assert sf.type_label_multiset(c.types) == "Seif(1,1,3,1)"

    def test_all_strata_agree_with_direct_classification(self):
        for a, f, stratum, types in ld.scan3(step=F(1, 2)):
            got = sf.classify(sf.SeifertPair.from_triangular(ld.s3_matrix(a)))
            assert sf.types_multiset_equal(types, got), (a, stratum)

    def test_signature_regions(self):
        # interior positive component, indefinite components, the exterior
        # component, and the boundary parts
        assert mx.signature_exact(ld.s3_matrix((0, 0, 0)) * 2) == (3, 0, 0)
        samples = {
            (F(1, 2), F(1, 2), F(1, 2)): (3, 0, 0),     # near the identity
            (3, 3, 3): (1, 0, 2),                        # past the cone point
            (1, 2, 0): (2, 0, 1),                        # outside (f = -1)
            (-1, -1, -1): (2, 1, 0),                     # definite-side boundary
            (2, 2, 2): (1, 2, 0),                        # cone point
        }
        for a, want in samples.items():
            S = ld.s3_matrix(a)
            assert mx.signature_exact(S + S.T) == want


class TestSolve2:
    def test_boundary(self):
        beta1, alpha1, spp, types = ld.solve2(2)
        assert (beta1, alpha1) == (F(1, 2), F(1, 2))
        assert spp == Spp([(F(-1, 2), 2), (F(1, 2), 0)])
        assert sf.type_label_multiset(types) == "Seif(-1,1,2,1)"

    def test_origin(self):
        beta1, alpha1, spp, types = ld.solve2(0)
        assert (beta1, alpha1) == (F(1, 4), F(0))
        assert spp == Spp([(F(0), 1), (F(0), 1)])
        assert sf.type_label_multiset(types) == "Seif(1,1,1,1)+Seif(1,1,1,1)"

    def test_unit_value(self):
        _, alpha1, _, _ = ld.solve2(1)
        assert alpha1 == F(1, 6)

    def test_out_of_range(self):
        with pytest.raises(OutOfT):
            ld.solve2(5)

    def test_agrees_with_generic_machinery(self):
        for a in (-2, -1, 0, 1, 2):
            _, _, spp, types = ld.solve2(a)
            M = hor.poly_to_matrix(RealPoly([1, a, 1]), 1)
            assert spp == hor.recipe_spectral_pairs(hor.matrix_to_scal(M))
            got = sf.classify(sf.SeifertPair.from_triangular(M.S))
            assert sf.types_multiset_equal(types, got)


class TestLine3:
    def test_left_end(self):
        beta, alpha, spp = ld.hor1_line3(F(-1))
        assert beta == (F(0), F(1, 2), F(1))
        assert spp == Spp([(F(0), 1), (F(-1, 2), 2), (F(1, 2), 0)])

    def test_right_end(self):
        _, alpha, spp = ld.hor1_line3(F(3))
        assert alpha == (F(1), F(0), F(-1))
        assert spp == Spp([(F(-1), 3), (F(0), 1), (F(1), -1)])

    def test_middle(self):
        beta, alpha, _ = ld.hor1_line3(F(1))
        assert beta[0] == F(1, 4)
        assert alpha == (F(1, 4), F(0), F(-1, 4))

    def test_out_of_family(self):
        with pytest.raises(OutOfFamily):
            ld.hor1_line3(4)

    def test_agrees_with_generic_machinery(self):
        for p1 in (F(-1), F(0), F(1), F(2), F(3)):
            _, _, spp = ld.hor1_line3(p1)
            M = hor.poly_to_matrix(RealPoly([1, p1, p1, 1]), 1)
            assert spp == hor.recipe_spectral_pairs(hor.matrix_to_scal(M))

    def test_agrees_with_generic_machinery_floats(self):
        # band values with irrational angles: both code paths within 1e-9
        for p1 in (0.5, 1.7, 2.3, -0.4):
            _, alpha, spp = ld.hor1_line3(p1)
            M = hor.poly_to_matrix(RealPoly([1.0, p1, p1, 1.0]), 1)
            generic = hor.recipe_spectral_pairs(hor.matrix_to_scal(M))
            assert spp.equals(generic, tol=1e-9)

    def test_monotone_alpha1(self):
        vals = [ld.hor1_line3(F(i, 25))[1][0] for i in range(-25, 76)]
        assert all(float(vals[i]) <= float(vals[i + 1]) + 1e-12
                   for i in range(len(vals) - 1))

    def test_stratum_visit_counts(self):
        # scanning the band parameter: the positive interior family is met
        # in two runs, the indefinite interior in one, the definite-side
        # two-block boundary once, the cone point once, the triple-Jordan
        # boundary once, and the indefinite-side two-block boundary never
        step = F(1, 100)
        runs = []
        prev = None
        p1 = F(-1)
        while p1 <= 3:
            stratum = ld.classify3((p1, p1, p1)).stratum
            if stratum != prev:
                runs.append(stratum)
                prev = stratum
            p1 += step
        counts = {s: runs.count(s) for s in set(runs)}
        assert counts[ld.Stratum3.INTERIOR_POS] == 2
        assert counts[ld.Stratum3.INTERIOR_IND] == 1
        assert counts[ld.Stratum3.BOUNDARY_POS_SPHERE] == 1
        assert counts[ld.Stratum3.EXCEPTIONAL] == 1
        assert counts[ld.Stratum3.JORDAN3_BOUNDARY] == 1
        assert counts[ld.Stratum3.IDENTITY] == 1
        assert ld.Stratum3.BOUNDARY_IND_CONE not in counts
