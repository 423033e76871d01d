"""Deterministic rational samplers for tests and randomized verification.

Rational points of S_A are produced from basis seeds (basis elements with
t = 0, n = 1) moved around by conjugation x -> (a^{-1} x) a with random a in
the central cone: such conjugations preserve S_A exactly, so every sample is
an exact rational point of the sphere.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    Element, AlgebraError, cone_membership, conj, norm, trace, try_invert,
)
from .slicefn import SliceFunction, binomial, constant, poly, slice_product


def random_rational(rng, num=4, den=(1, 2, 3)):
    return Fraction(rng.randint(-num, num), rng.choice(den))


def random_element(alg, rng, density=None, num=4) -> Element:
    d = alg.dim
    density = density if density is not None else d
    v = [Fraction(0)] * d
    for _ in range(density):
        v[rng.randrange(d)] = random_rational(rng, num)
    return alg.element(v)


def sample_sa(alg, rng, conjugations=2) -> Element:
    """A rational point of S_A = {t(x) = 0, n(x) = 1}."""
    seeds = alg.sa_basis_indices
    if not seeds:
        raise AlgebraError(f"{alg.name} has an empty sphere S_A")
    j = alg.basis_element(rng.choice(seeds))
    one = alg.one()
    for _ in range(conjugations):
        for _attempt in range(30):
            a = random_element(alg, rng, density=min(4, alg.dim))
            if a.is_zero():
                continue
            rep = cone_membership(a)
            if not (rep.in_CA and rep.is_invertible):
                continue
            cand = (try_invert(a) * j) * a
            if trace(cand).is_zero() and norm(cand) == one:
                j = cand
                break
    return j


def random_qa_point(alg, rng, real_ok=False) -> Element:
    """A rational point of the quadratic cone, alpha + beta*J."""
    alpha = random_rational(rng)
    if real_ok and rng.random() < 0.15:
        return alg.from_scalar(alpha)
    beta = abs(random_rational(rng))
    while beta == 0:
        beta = abs(random_rational(rng))
    return alg.from_scalar(alpha) + beta * sample_sa(alg, rng)


def random_poly(alg, rng, max_degree=4) -> SliceFunction:
    deg = rng.randint(0, max_degree)
    coeffs = [random_element(alg, rng, density=min(alg.dim, 3)) for _ in range(deg + 1)]
    return poly(alg, coeffs)


def random_na_constant(alg, rng) -> Element:
    """A random element of the normal cone (n(x), n(x^c) nonzero reals)."""
    for _ in range(200):
        x = random_element(alg, rng, density=min(alg.dim, 3))
        if x.is_zero():
            continue
        n = norm(x)
        nc = norm(conj(x))
        if n.is_real() and nc.is_real() and n.coeffs[0] != 0 and nc.coeffs[0] != 0:
            return x
    return alg.one()


def random_tame_poly(alg, rng, max_degree=4) -> SliceFunction:
    """A random tame polynomial: a product of tame atoms.

    Atoms are binomials x - a with a in Q_A (whose normal is the slice
    preserving Delta_a), constants from the normal cone, and real polynomials;
    products of tame functions with nonvanishing normals stay tame.
    """
    f = constant(alg.one())
    degree = 0
    for _ in range(rng.randint(1, max_degree)):
        if degree >= max_degree:
            break
        choice = rng.random()
        if choice < 0.55:
            g = binomial(random_qa_point(alg, rng))
            degree += 1
        elif choice < 0.8:
            g = constant(random_na_constant(alg, rng))
        else:
            d = min(2, max_degree - degree)
            coeffs = [alg.from_scalar(random_rational(rng)) for _ in range(d + 1)]
            if all(c.is_zero() for c in coeffs):
                coeffs[-1] = alg.one()
            g = poly(alg, coeffs)
            degree += d
        f = slice_product(f, g)
    if not f.stem.coeffs:
        return constant(alg.one())
    return f
