import random
from fractions import Fraction

import pytest

import slicealg as sa
from slicealg.sampling import random_element, random_poly, random_qa_point, sample_sa
from slicealg.slicefn import DomainError

H = sa.make_builtin("H")
O = sa.make_builtin("O")
SO = sa.make_builtin("SO")
SH = sa.make_builtin("SH")
R3 = sa.make_builtin("cl-0-3")
R4 = sa.make_builtin("cl-0-4")


def el(alg, name):
    return alg.basis_element(alg.basis_index(name))


def unit_slope_callable(alg, j0):
    """f(x) = 1 + (im x/|im x|) J0 on the complement of the reals."""
    one = alg.one()

    def ev(a, b):
        if isinstance(b, float):
            sgn = 1.0 if b > 0 else -1.0
            return alg.element([1.0] + [0.0] * (alg.dim - 1), "float"), \
                sgn * alg.element([float(c) for c in j0.coeffs], "float")
        sgn = 1 if b > 0 else -1
        return one, sgn * j0

    return sa.from_callable(alg, ev, domain=lambda a, b: b != 0,
                            domain_kind="product")


class TestEvaluate:
    def test_root_of_binomial(self):
        i = el(H, "i")
        assert sa.evaluate(sa.binomial(i), i).is_zero()

    def test_delta_vanishes_on_sphere(self):
        f = sa.parse_poly("x^2+1", H)  # Delta_i
        assert sa.evaluate(f, el(H, "j")).is_zero()
        assert sa.evaluate(f, el(H, "k")).is_zero()

    def test_callable_half_slice(self):
        f = unit_slope_callable(H, el(H, "i"))
        j = el(H, "j")
        assert sa.evaluate(f, j) == H.one() + j * el(H, "i")

    def test_outside_cone_rejected(self):
        f = sa.parse_poly("x", SH)
        with pytest.raises(sa.AlgebraError):
            sa.evaluate(f, el(SH, "e1"))

    def test_powers_match_horner_free_eval(self):
        rng = random.Random(0)
        for alg in (H, O, R3):
            for _ in range(10):
                f = random_poly(alg, rng, max_degree=4)
                x = random_qa_point(alg, rng)
                direct = alg.zero()
                for m, a in enumerate(f.stem.coeffs):
                    direct = direct + (x ** m) * a
                assert sa.evaluate(f, x) == direct


class TestSpherical:
    def test_square_at_i(self):
        f = sa.parse_poly("x^2", H)
        i = el(H, "i")
        assert sa.spherical_value(f, i) == -H.one()
        assert sa.spherical_derivative(f, i).is_zero()

    def test_identity_derivative(self):
        for alg in (H, SO, R3):
            f = sa.parse_poly("x", alg)
            x = alg.from_scalar(2) + 3 * alg.basis_element(alg.sa_basis_indices[0])
            assert sa.spherical_derivative(f, x) == alg.one()

    def test_r4_binomial(self):
        f = sa.parse_poly("x-e4", R4)
        e4 = el(R4, "e4")
        assert sa.spherical_value(f, e4) == -e4
        assert sa.spherical_derivative(f, e4) == R4.one()

    def test_constant_on_sphere(self):
        rng = random.Random(1)
        for alg in (H, SO):
            f = random_poly(alg, rng, max_degree=3)
            alpha, beta = Fraction(1, 2), Fraction(2)
            x1 = alg.from_scalar(alpha) + beta * sample_sa(alg, rng)
            x2 = alg.from_scalar(alpha) + beta * sample_sa(alg, rng)
            assert sa.spherical_value(f, x1) == sa.spherical_value(f, x2)
            assert sa.spherical_derivative(f, x1) == sa.spherical_derivative(f, x2)

    def test_derivative_rejects_reals(self):
        f = sa.parse_poly("x", H)
        with pytest.raises(sa.AlgebraError):
            sa.spherical_derivative(f, H.one())

    def test_formula_definition(self):
        rng = random.Random(2)
        for _ in range(10):
            f = random_poly(R3, rng, max_degree=3)
            x = random_qa_point(R3, rng)
            if sa.imag_part(x).is_zero():
                continue
            fx = sa.evaluate(f, x)
            fxc = sa.evaluate(f, sa.conj(x))
            assert sa.spherical_value(f, x) == Fraction(1, 2) * (fx + fxc)
            im_inv = sa.invert(sa.imag_part(x))
            assert sa.spherical_derivative(f, x) == \
                im_inv * (Fraction(1, 2) * (fx - fxc))


class TestConjugateProductNormal:
    def test_binomial_conjugate(self):
        rng = random.Random(3)
        for alg in (H, SO, R3):
            y = random_qa_point(alg, rng)
            assert sa.slice_conjugate(sa.binomial(y)) == sa.binomial(sa.conj(y))

    def test_so_conjugate_example(self):
        f = sa.parse_poly("x-2*l", SO)
        assert sa.slice_conjugate(f) == sa.parse_poly("x+2*l", SO)

    def test_slice_preserving_fixed_by_conj(self):
        f = sa.parse_poly("x^2+3*x+1/2", H)
        assert sa.slice_conjugate(f) == f

    def test_product_convolution_example(self):
        f = sa.parse_poly("(x-e1)*(x-e2)", R3)
        assert f == sa.parse_poly("x^2-x*(e1+e2)+e12", R3)

    def test_constant_product(self):
        f = sa.constant(el(H, "i")) * sa.constant(el(H, "j"))
        assert f == sa.constant(el(H, "k"))

    def test_conjugate_pair(self):
        f = sa.parse_poly("(x-i)*(x+i)", H)
        assert f == sa.parse_poly("x^2+1", H)

    def test_normal_is_delta(self):
        rng = random.Random(4)
        for alg in (H, SO, R3):
            for _ in range(8):
                y = random_qa_point(alg, rng)
                nf = sa.normal(sa.binomial(y))
                t = sa.trace(y)
                expected = sa.poly(alg, [sa.norm(y), -t, alg.one()])
                assert nf == expected

    def test_normal_singular_constant(self):
        one_l = SO.element([1, 0, 0, 0, 1, 0, 0, 0])
        assert not sa.normal(sa.constant(one_l)).stem.coeffs

    def test_normal_null_binomial(self):
        # a != 0 with n(a) = 0: N(x - a) = x (x - t(a))
        a = SH.one() + el(SH, "e1")
        assert sa.norm(a).is_zero()
        nf = sa.normal(sa.binomial(a))
        assert nf == sa.parse_poly("x^2-2*x", SH)

    def test_mismatch_rejected(self):
        with pytest.raises(sa.AlgebraMismatch):
            sa.slice_product(sa.parse_poly("x", H), sa.parse_poly("x", O))


class TestPredicates:
    def test_slice_preserving(self):
        assert sa.is_slice_preserving(sa.parse_poly("x^2+1", H))
        assert not sa.is_slice_preserving(sa.parse_poly("x-i", H))
        f = sa.parse_poly("(x-e4)*(1+e123)", R4)
        assert not sa.is_slice_preserving(sa.normal(f))

    def test_tameness(self):
        rng = random.Random(5)
        for _ in range(10):
            assert sa.is_tame(random_poly(H, rng, max_degree=4))
        f = sa.parse_poly("(x-e4)*(1+e123)", R4)
        assert not sa.is_tame(f)
        assert sa.is_tame(sa.constant(H.one()))

    def test_every_so_poly_tame(self):
        rng = random.Random(6)
        for _ in range(10):
            assert sa.is_tame(random_poly(SO, rng, max_degree=3))


class TestRepresentation:
    def test_square(self):
        f = sa.parse_poly("x^2", H)
        i, j = el(H, "i"), el(H, "j")
        got = sa.rep_two_points(sa.evaluate(f, i), i, sa.evaluate(f, -i), -i, j)
        assert got == sa.evaluate(f, j)

    def test_constant(self):
        c = el(R3, "e12")
        f = sa.constant(c)
        y = el(R3, "e1")
        got = sa.rep_two_points(c, y, c, -y, el(R3, "e2"))
        assert got == c

    def test_identity_function(self):
        f = sa.parse_poly("x", R3)
        e1, e2 = el(R3, "e1"), el(R3, "e2")
        got = sa.rep_two_points(e1, e1, -e1, -e1, e2)
        assert got == e2

    def test_rep2_reduction(self):
        # K = -J gives f(x) = (f(y)+f(y^c))/2 - (I/2)(J (f(y)-f(y^c)))
        rng = random.Random(7)
        for _ in range(15):
            f = random_poly(H, rng, max_degree=4)
            alpha, beta = Fraction(1), Fraction(2)
            j = sample_sa(H, rng)
            i = sample_sa(H, rng)
            y = H.from_scalar(alpha) + beta * j
            fy, fyc = sa.evaluate(f, y), sa.evaluate(f, sa.conj(y))
            got = sa.rep_two_points(fy, y, fyc, sa.conj(y), i)
            half = Fraction(1, 2)
            rep2 = half * (fy + fyc) - i * (half * (j * (fy - fyc)))
            assert got == rep2
            assert got == sa.evaluate(f, H.from_scalar(alpha) + beta * i)

    def test_inconsistent_sphere_rejected(self):
        f = sa.parse_poly("x", H)
        i, j = el(H, "i"), el(H, "j")
        with pytest.raises(sa.AlgebraError):
            sa.rep_two_points(i, i, 2 * j, 2 * j, el(H, "k"))


class TestProductFormula:
    def test_cross_check_both_modes(self):
        rng = random.Random(8)
        for alg, mode in ((H, "associative"), (R3, "associative"),
                          (O, "general"), (SO, "general")):
            for _ in range(15):
                f = random_poly(alg, rng, max_degree=3)
                g = random_poly(alg, rng, max_degree=3)
                x = random_qa_point(alg, rng)
                if sa.imag_part(x).is_zero():
                    continue
                got = sa.product_eval_formula(f, g, x, mode)
                want = sa.evaluate(sa.slice_product(f, g), x)
                assert got == want

    def test_zero_factor_associative(self):
        i = el(H, "i")
        f = sa.binomial(i)
        g = sa.parse_poly("x^2+j", H)
        assert sa.product_eval_formula(f, g, i, "associative").is_zero()
        assert sa.evaluate(sa.slice_product(f, g), i).is_zero()

    def test_circular_factor_reduction(self):
        # g constant on spheres: (f.g)(x) = f(x)g(x) - (im(x), f'_s(x), g(x))
        rng = random.Random(9)
        for _ in range(10):
            f = random_poly(SO, rng, max_degree=3)
            g = sa.constant(random_element(SO, rng))
            x = random_qa_point(SO, rng)
            if sa.imag_part(x).is_zero():
                continue
            lhs = sa.evaluate(sa.slice_product(f, g), x)
            fx = sa.evaluate(f, x)
            gx = sa.evaluate(g, x)
            ds = sa.spherical_derivative(f, x)
            rhs = fx * gx - sa.associator(sa.imag_part(x), ds, gx)
            assert lhs == rhs

    def test_mode_requires_associativity(self):
        f = sa.parse_poly("x", O)
        x = el(O, "i")
        with pytest.raises(sa.AlgebraError):
            sa.product_eval_formula(f, f, x, "associative")


class TestRegularity:
    def test_poly_exact_zero(self):
        assert sa.regularity_residual(sa.parse_poly("x^5-i", H), (0.3, 0.7)) == 0.0

    def test_half_slice_function_regular(self):
        f = unit_slope_callable(H, el(H, "i"))
        assert sa.regularity_residual(f, (0.5, 1.0), h=1e-4) <= 1e-6

    def test_antiholomorphic_stem(self):
        def ev(a, b):
            return H.from_scalar(a), H.from_scalar(-b)  # F(z) = conj(z)

        f = sa.from_callable(H, ev)
        assert abs(sa.regularity_residual(f, (0.2, 0.4), h=1e-4) - 1.0) <= 1e-6


class TestStructuralIdentities:
    def test_decomposition(self):
        rng = random.Random(10)
        for alg in (H, SO, R3, SH):
            for _ in range(10):
                f = random_poly(alg, rng, max_degree=4)
                x = random_qa_point(alg, rng)
                if sa.imag_part(x).is_zero():
                    continue
                assert sa.evaluate(f, x) == \
                    sa.spherical_value(f, x) + sa.imag_part(x) * sa.spherical_derivative(f, x)

    def test_decomposed_product(self):
        rng = random.Random(11)
        for alg in (H, SO, R3):
            for _ in range(10):
                f = random_poly(alg, rng, max_degree=3)
                g = random_poly(alg, rng, max_degree=3)
                x = random_qa_point(alg, rng)
                im = sa.imag_part(x)
                if im.is_zero():
                    continue
                h = sa.slice_product(f, g)
                vf, df = sa.spherical_value(f, x), sa.spherical_derivative(f, x)
                vg, dg = sa.spherical_value(g, x), sa.spherical_derivative(g, x)
                bsq = sa.norm(im).coeffs[0]
                assert sa.spherical_value(h, x) == vf * vg - bsq * (df * dg)
                assert sa.spherical_derivative(h, x) == vf * dg + df * vg

    def test_decomposed_normal(self):
        rng = random.Random(12)
        for alg in (H, SO, R3, SH):
            for _ in range(10):
                f = random_poly(alg, rng, max_degree=3)
                x = random_qa_point(alg, rng)
                im = sa.imag_part(x)
                if im.is_zero():
                    continue
                nf = sa.normal(f)
                vf, df = sa.spherical_value(f, x), sa.spherical_derivative(f, x)
                bsq = sa.norm(im).coeffs[0]
                vs_expected = sa.norm(vf) - bsq * sa.norm(df)
                ds_expected = sa.trace(vf * sa.conj(df))
                assert sa.spherical_value(nf, x) == vs_expected
                assert sa.spherical_derivative(nf, x) == ds_expected

    def test_slice_preserving_central(self):
        rng = random.Random(13)
        for alg in (SO, R3):
            f = sa.parse_poly("x^2-3*x+2", alg)
            for _ in range(8):
                g = random_poly(alg, rng, max_degree=3)
                assert sa.slice_product(f, g) == sa.slice_product(g, f)
                x = random_qa_point(alg, rng)
                assert sa.evaluate(sa.slice_product(f, g), x) == \
                    sa.evaluate(f, x) * sa.evaluate(g, x)

    def test_unique_normal_so_r3(self):
        rng = random.Random(14)
        for alg in (SO, R3):
            for _ in range(10):
                f = random_poly(alg, rng, max_degree=4)
                assert sa.normal(f) == sa.normal(sa.slice_conjugate(f))

    def test_conjugation_antihomomorphism(self):
        rng = random.Random(15)
        for alg in (H, O, SO, R3):
            for _ in range(10):
                f = random_poly(alg, rng, max_degree=3)
                g = random_poly(alg, rng, max_degree=3)
                assert sa.slice_conjugate(sa.slice_product(f, g)) == \
                    sa.slice_product(sa.slice_conjugate(g), sa.slice_conjugate(f))


class TestCallableStems:
    def test_symmetry_enforced(self):
        def bad(a, b):
            return H.from_scalar(b), H.zero()  # F1 odd in beta: not a stem

        with pytest.raises(sa.AlgebraError):
            sa.from_callable(H, bad)

    def test_domain_respected(self):
        f = unit_slope_callable(H, el(H, "i"))
        with pytest.raises(DomainError):
            sa.evaluate(f, H.from_scalar(2))  # real points excluded

    def test_pointwise_vs_poly_product(self):
        # mixed product evaluates like the stem product
        rng = random.Random(16)
        f = unit_slope_callable(H, el(H, "i"))
        g = sa.parse_poly("x-j", H)
        fg = sa.slice_product(f, g)
        for _ in range(10):
            x = random_qa_point(H, rng)
            if sa.imag_part(x).is_zero():
                continue
            got = sa.evaluate(fg, x)
            want = sa.product_eval_formula(f, g, x, "associative")
            assert got == want

    def test_stencil_domain_error(self):
        f = unit_slope_callable(H, el(H, "i"))
        with pytest.raises(DomainError):
            sa.regularity_residual(f, (0.5, 1e-4), h=1e-4)  # stencil hits beta = 0
