import random

import pytest

import slicealg as sa
from slicealg.sampling import random_element

H = sa.make_builtin("H")
SO = sa.make_builtin("SO")
R3 = sa.make_builtin("cl-0-3")


class TestConstruction:
    def test_dimensions_and_names(self):
        hc = sa.complexify(H)
        assert hc.derived.dim == 8
        assert hc.derived.basis_names == ("1", "i", "j", "k", "I1", "Ii", "Ij", "Ik")

    def test_iota_central_square_minus_one(self):
        hc = sa.complexify(H)
        iota = hc.iota
        assert iota * iota == -hc.derived.one()
        for idx in range(hc.derived.dim):
            b = hc.derived.basis_element(idx)
            assert iota * b == b * iota

    def test_product_rule_random(self):
        rng = random.Random(0)
        for alg in (H, SO):
            cs = sa.complexify(alg)
            for _ in range(25):
                x, y, xp, yp = (random_element(alg, rng) for _ in range(4))
                lhs = cs.make(x, y) * cs.make(xp, yp)
                rhs = cs.make(x * xp - y * yp, x * yp + y * xp)
                assert lhs == rhs

    def test_embedding_homomorphism(self):
        rng = random.Random(1)
        cs = sa.complexify(R3)
        for _ in range(20):
            x, y = random_element(R3, rng), random_element(R3, rng)
            assert cs.embed(x) * cs.embed(y) == cs.embed(x * y)

    def test_alternative_reverified(self):
        assert sa.complexify(SO).derived.is_alternative

    def test_requires_alternative_base(self):
        # commutative but not alternative: u*u = v, u*v = 1, v*v = 0
        tbl = (
            (((0, 1),), ((1, 1),), ((2, 1),)),
            (((1, 1),), ((2, 1),), ((0, 1),)),
            (((2, 1),), ((0, 1),), ()),
        )
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        bad = sa.AlgebraSpec("bad", ["1", "u", "v"], tbl, eye)
        assert not bad.is_alternative
        with pytest.raises(sa.AlgebraError):
            sa.complexify(bad)

    def test_flags_inherit(self):
        assert sa.complexify(H).derived.is_compatible == H.is_compatible
        assert sa.complexify(H).derived.is_associative == H.is_associative
        soalt = sa.make_builtin("SO_ALT")
        assert sa.complexify(soalt).derived.is_compatible == soalt.is_compatible

    def test_complexified_is_singular(self):
        hc = sa.complexify(H)
        one_pl_ii = hc.make(H.one(), H.basis_element(1))
        assert sa.norm(one_pl_ii).is_zero()


class TestInvolutions:
    def test_c_involution_example(self):
        hc = sa.complexify(H)
        z = hc.make(H.one(), H.basis_element(1))  # 1 + iota i
        assert sa.c_involution(hc, z) == hc.make(H.one(), -H.basis_element(1))

    def test_complex_conj_fixes_embedded(self):
        rng = random.Random(2)
        hc = sa.complexify(H)
        for _ in range(10):
            x = random_element(H, rng)
            assert sa.complex_conj(hc, hc.embed(x)) == hc.embed(x)

    def test_both_are_involutions(self):
        rng = random.Random(3)
        cs = sa.complexify(SO)
        for _ in range(15):
            z = random_element(cs.derived, rng)
            assert sa.c_involution(cs, sa.c_involution(cs, z)) == z
            assert sa.complex_conj(cs, sa.complex_conj(cs, z)) == z

    def test_c_involution_antihomomorphism(self):
        rng = random.Random(4)
        cs = sa.complexify(R3)
        for _ in range(15):
            z, w = random_element(cs.derived, rng), random_element(cs.derived, rng)
            assert sa.c_involution(cs, z * w) == \
                sa.c_involution(cs, w) * sa.c_involution(cs, z)

    def test_norm_component_formula(self):
        # F F^c = n(F1) - n(F2) + iota t(F1 F2^c)
        rng = random.Random(5)
        for alg in (H, SO, R3):
            cs = sa.complexify(alg)
            for _ in range(20):
                f1, f2 = random_element(alg, rng), random_element(alg, rng)
                z = cs.make(f1, f2)
                lhs = z * sa.c_involution(cs, z)
                rhs = cs.make(sa.norm(f1) - sa.norm(f2),
                              sa.trace(f1 * sa.conj(f2)))
                assert lhs == rhs


def test_rc_in_center():
    # R + iota R lies in the computed center of the derived algebra
    for name in ("H", "SO", "cl-0-3"):
        cs = sa.complexify(sa.make_builtin(name))
        assert sa.in_center(cs.iota)
        assert sa.in_center(cs.derived.one() + 2 * cs.iota)
