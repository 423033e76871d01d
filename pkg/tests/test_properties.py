"""Property-based checks of the algebraic identities, over several algebras."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

import slicealg as sa
from slicealg.algebra import moufang_residuals

ALGEBRAS = [sa.make_builtin(n) for n in ("H", "O", "SO", "SH", "DH", "cl-0-3")]


def elements(alg, max_terms=4):
    scalars = st.integers(min_value=-6, max_value=6)
    idx = st.integers(min_value=0, max_value=alg.dim - 1)
    pairs = st.lists(st.tuples(idx, scalars), min_size=1, max_size=max_terms)

    def build(ps):
        v = [Fraction(0)] * alg.dim
        for i, c in ps:
            v[i] += c
        return alg.element(v)

    return pairs.map(build)


def algebra_and_elements(n):
    return st.sampled_from(ALGEBRAS).flatmap(
        lambda alg: st.tuples(*([st.just(alg)] + [elements(alg)] * n)))


@settings(max_examples=60, deadline=None)
@given(algebra_and_elements(2))
def test_alternativity(data):
    alg, x, y = data
    assert sa.associator(x, x, y).is_zero()
    assert sa.associator(y, x, x).is_zero()


@settings(max_examples=60, deadline=None)
@given(algebra_and_elements(3))
def test_moufang(data):
    alg, x, a, y = data
    for r in moufang_residuals(x, a, y):
        assert r.is_zero()


@settings(max_examples=60, deadline=None)
@given(algebra_and_elements(2))
def test_involution_antihomomorphism(data):
    alg, x, y = data
    assert sa.conj(x * y) == sa.conj(y) * sa.conj(x)
    assert sa.conj(sa.conj(x)) == x


@settings(max_examples=40, deadline=None)
@given(algebra_and_elements(2))
def test_cone_ordering(data):
    alg, x, _ = data
    if x.is_zero():
        return
    rep = sa.cone_membership(x)
    assert not rep.in_SA or rep.in_QA
    assert not rep.in_QA or rep.in_NA
    assert not rep.in_NA or rep.in_CA
    assert not rep.in_CA or rep.is_invertible


@settings(max_examples=40, deadline=None)
@given(algebra_and_elements(2))
def test_central_norm_multiplicativity(data):
    alg, x, y = data
    if x.is_zero() or y.is_zero():
        return
    if sa.cone_membership(x).in_CA and sa.cone_membership(y).in_CA:
        assert sa.norm(x * y) == sa.norm(x) * sa.norm(y)
        assert sa.norm(x * y) == sa.norm(y * x)


@settings(max_examples=40, deadline=None)
@given(algebra_and_elements(2))
def test_inverse_pair_law(data):
    alg, x, y = data
    if x.is_zero() or y.is_zero():
        return
    xi, yi = sa.try_invert(x), sa.try_invert(y)
    if xi is None or yi is None:
        return
    assert sa.try_invert(x * y) == yi * xi


def polys(alg, max_degree=3):
    return st.lists(elements(alg), min_size=1, max_size=max_degree + 1).map(
        lambda cs: sa.poly(alg, cs))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALGEBRAS).flatmap(
    lambda alg: st.tuples(st.just(alg), polys(alg), polys(alg))))
def test_product_conjugation(data):
    alg, f, g = data
    assert sa.slice_conjugate(f * g) == sa.slice_conjugate(g) * sa.slice_conjugate(f)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([sa.make_builtin("H"), sa.make_builtin("SO")]).flatmap(
    lambda alg: st.tuples(st.just(alg), polys(alg), elements(alg),
                          st.integers(min_value=0, max_value=2))))
def test_evaluation_decomposition(data):
    alg, f, v, seed_idx = data
    seeds = alg.sa_basis_indices
    j = alg.basis_element(seeds[seed_idx % len(seeds)])
    x = alg.from_scalar(Fraction(1, 2)) + 2 * j
    assert sa.evaluate(f, x) == \
        sa.spherical_value(f, x) + sa.imag_part(x) * sa.spherical_derivative(f, x)


@settings(max_examples=60, deadline=None)
@given(algebra_and_elements(1))
def test_element_format_parse_roundtrip(data):
    from slicealg.parsing import format_element, parse_element
    alg, x = data
    assert parse_element(format_element(x), alg) == x


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALGEBRAS).flatmap(
    lambda alg: st.tuples(st.just(alg), polys(alg))))
def test_poly_format_parse_roundtrip(data):
    from slicealg.parsing import format_poly, parse_poly
    alg, f = data
    assert parse_poly(format_poly(f), alg) == f
