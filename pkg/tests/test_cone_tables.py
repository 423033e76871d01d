"""Closed-form cone descriptions as independent oracles.

Each algebra's cones have explicit coordinate descriptions (hyperboloids,
Study quadric, the e123 bilinear condition, ...); these are checked against
the generic cone_membership machinery on random elements, which exercises the
multiplication tables and involutions from a second direction.
"""

import random
from fractions import Fraction

import slicealg as sa
from slicealg.sampling import random_element

H = sa.make_builtin("H")
O = sa.make_builtin("O")
SO = sa.make_builtin("SO")
SO_ALT = sa.make_builtin("SO_ALT")
SH = sa.make_builtin("SH")
DC = sa.make_builtin("DC")
DH = sa.make_builtin("DH")
R3 = sa.make_builtin("cl-0-3")
R4 = sa.make_builtin("cl-0-4")


def _sample(alg, rng, n=40):
    out = []
    for _ in range(n):
        x = random_element(alg, rng, density=min(alg.dim, 5), num=3)
        if not x.is_zero():
            out.append(x)
    return out


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class TestDivisionAlgebras:
    def test_everything_is_every_cone(self):
        rng = random.Random(0)
        for alg in (H, O):
            for x in _sample(alg, rng):
                rep = sa.cone_membership(x)
                assert rep.in_QA and rep.in_NA and rep.in_CA
                assert rep.is_invertible
                assert sa.norm(x).coeffs[0] == _dot(x.coeffs, x.coeffs)


class TestSplitQuaternions:
    # coordinates x0 + x1 e1 + x2 e2 + x12 e12
    def test_norm_signature(self):
        rng = random.Random(1)
        for x in _sample(SH, rng):
            x0, x1, x2, x12 = x.coeffs
            n = sa.norm(x)
            assert n.is_real()
            assert n.coeffs[0] == x0 * x0 - x1 * x1 + x2 * x2 - x12 * x12

    def test_quadratic_cone_is_open_solid_cone(self):
        rng = random.Random(2)
        for x in _sample(SH, rng):
            x0, x1, x2, x12 = x.coeffs
            expected = (x1 == x2 == x12 == 0) or (x2 * x2 > x1 * x1 + x12 * x12)
            assert sa.cone_membership(x).in_QA == expected

    def test_sphere_is_two_sheet_hyperboloid(self):
        rng = random.Random(3)
        pts = _sample(SH, rng, 60)
        pts += [SH.element([0, 1, 2, 2]), SH.element([0, 3, 5, 4]),
                SH.element([0, 0, -1, 0])]
        for x in pts:
            x0, x1, x2, x12 = x.coeffs
            expected = (x0 == 0) and (x2 * x2 == 1 + x1 * x1 + x12 * x12)
            assert sa.cone_membership(x).in_SA == expected


class TestSplitOctonions:
    def test_norm_is_difference_of_quaternion_norms(self):
        rng = random.Random(4)
        for x in _sample(SO, rng):
            p, q = x.coeffs[:4], x.coeffs[4:]
            n = sa.norm(x)
            assert n.is_real()
            assert n.coeffs[0] == _dot(p, p) - _dot(q, q)

    def test_sphere_is_h6(self):
        rng = random.Random(5)
        pts = _sample(SO, rng, 60)
        pts += [SO.element([0, 1, 1, 0, 0, 1, 0, 0]),  # n(p)=2, n(q)=1
                SO.element([0, 2, 0, 0, 1, 1, 1, 0])]
        for x in pts:
            p, q = x.coeffs[:4], x.coeffs[4:]
            expected = (p[0] == 0) and (_dot(p, p) == 1 + _dot(q, q))
            assert sa.cone_membership(x).in_SA == expected

    def test_quadratic_cone_u8(self):
        rng = random.Random(6)
        for x in _sample(SO, rng):
            p, q = x.coeffs[:4], x.coeffs[4:]
            im_p = (0,) + p[1:]
            real = all(c == 0 for c in p[1:]) and all(c == 0 for c in q)
            expected = real or (_dot(im_p, im_p) > _dot(q, q))
            assert sa.cone_membership(x).in_QA == expected

    def test_alternate_involution_sphere(self):
        rng = random.Random(7)
        pts = _sample(SO_ALT, rng, 60)
        pts += [SO_ALT.basis_element(1), SO_ALT.basis_element(4)]
        for x in pts:
            p, q = x.coeffs[:4], x.coeffs[4:]
            expected = (p[0] == 0 and all(c == 0 for c in q)
                        and _dot(p, p) == 1)
            assert sa.cone_membership(x).in_SA == expected


class TestDualAlgebras:
    def test_dh_normal_cone_is_study_quadric(self):
        rng = random.Random(8)
        for x in _sample(DH, rng):
            p, q = x.coeffs[:4], x.coeffs[4:]
            expected = any(c != 0 for c in p) and _dot(p, q) == 0
            assert sa.cone_membership(x).in_NA == expected

    def test_dh_quadratic_cone(self):
        rng = random.Random(9)
        for x in _sample(DH, rng):
            p, q = x.coeffs[:4], x.coeffs[4:]
            real = all(c == 0 for c in p[1:]) and all(c == 0 for c in q)
            expected = real or (q[0] == 0 and _dot(p, q) == 0
                                and any(c != 0 for c in p[1:]))
            assert sa.cone_membership(x).in_QA == expected

    def test_dh_sphere_is_tangent_bundle(self):
        rng = random.Random(10)
        pts = _sample(DH, rng, 60)
        pts += [DH.element([0, 1, 0, 0, 0, 0, 1, 2]),
                DH.element([0, 0, 1, 0, 0, 3, 0, 4])]
        for x in pts:
            p, q = x.coeffs[:4], x.coeffs[4:]
            expected = (p[0] == 0 and q[0] == 0 and _dot(p, p) == 1
                        and _dot(p, q) == 0)
            assert sa.cone_membership(x).in_SA == expected

    def test_dc_cones(self):
        rng = random.Random(11)
        pts = _sample(DC, rng, 60)
        for x in pts:
            rep = sa.cone_membership(x)
            # central cone = everything invertible (commutative algebra)
            assert rep.in_CA == rep.is_invertible
            z, w = x.coeffs[:2], x.coeffs[2:]
            assert rep.in_NA == (any(c != 0 for c in z)
                                 and _dot(z, w) == 0)
        assert sa.cone_membership(DC.basis_element(1)).in_SA
        assert not sa.cone_membership(DC.basis_element(3)).in_SA
        assert set(DC.sa_basis_indices) == {1}


class TestCliffordTables:
    def test_r3_norm_formula(self):
        # n(x) = |x|^2 + <x, e123 x> e123
        rng = random.Random(12)
        e123 = R3.basis_element(7)
        for x in _sample(R3, rng):
            n = sa.norm(x)
            want0 = _dot(x.coeffs, x.coeffs)
            want7 = _dot(x.coeffs, (e123 * x).coeffs)
            assert n.coeffs[0] == want0
            assert n.coeffs[7] == want7
            assert all(n.coeffs[m] == 0 for m in range(1, 7))

    def test_r4_norm_formula(self):
        # grades 3 and 4 survive in n(x) over R4
        rng = random.Random(13)
        tops = {m: R4.basis_element(m)
                for m, nm in enumerate(R4.basis_names)
                if len(nm) - 1 in (3, 4)}
        for x in _sample(R4, rng, 25):
            n = sa.norm(x)
            assert n.coeffs[0] == _dot(x.coeffs, x.coeffs)
            for m, e in tops.items():
                assert n.coeffs[m] == _dot(x.coeffs, (e * x).coeffs)
            for m, nm in enumerate(R4.basis_names):
                if m and len(nm) - 1 not in (3, 4):
                    assert n.coeffs[m] == 0

    def test_r3_sphere_is_g4(self):
        rng = random.Random(14)
        pts = _sample(R3, rng, 80)
        pts += [R3.element([0, Fraction(1, 2), Fraction(1, 2), 0,
                            0, Fraction(1, 2), Fraction(1, 2), 0])]
        for x in pts:
            x0, x1, x2, x3, x12, x13, x23, x123 = x.coeffs
            e7 = x0 * x123 - x1 * x23 + x2 * x13 - x3 * x12
            expected = (x0 == 0 and x123 == 0 and e7 == 0
                        and _dot(x.coeffs, x.coeffs) == 1)
            assert sa.cone_membership(x).in_SA == expected

    def test_central_vs_normal_cone_mod4(self):
        # C = N unless the top grade is 4n-1; e.g. 1 + 2 e123 is central
        # with invertible non-real norm in R3
        x = R3.one() + 2 * R3.basis_element(7)
        rep = sa.cone_membership(x)
        assert rep.in_CA and not rep.in_NA
        rng = random.Random(15)
        for y in _sample(R4, rng, 25):
            rep = sa.cone_membership(y)
            assert rep.in_CA == rep.in_NA

    def test_paravectors_in_quadratic_cone(self):
        rng = random.Random(16)
        for alg in (R3, R4, sa.make_builtin("cl-0-5")):
            n_gen = alg.params[1]
            for _ in range(10):
                v = [Fraction(rng.randint(-4, 4)) for _ in range(n_gen + 1)]
                coeffs = [Fraction(0)] * alg.dim
                coeffs[0] = v[0]
                for i in range(1, n_gen + 1):
                    coeffs[i] = v[i]
                x = alg.element(coeffs)
                assert sa.cone_membership(x).in_QA

    def test_sa_basis_elements_mod4(self):
        # e_T lies in S_A exactly when |T| = 1, 2 mod 4 (negative signature)
        for alg in (R3, R4, sa.make_builtin("cl-0-5")):
            for m, nm in enumerate(alg.basis_names):
                if m == 0:
                    continue
                s = len(nm) - 1
                expected = s % 4 in (1, 2)
                got = sa.cone_membership(alg.basis_element(m)).in_SA
                assert got == expected, (alg.name, nm)
