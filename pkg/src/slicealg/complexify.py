"""Complexification A_C = A (+) iota*A as a derived AlgebraSpec.

The derived algebra reuses all of the core machinery: its basis is the base
basis followed by iota-copies named with an `I` prefix, its product obeys
(x + iy)(x' + iy') = xx' - yy' + i(xy' + yx'), and its *-involution applies
the base involution componentwise.  Complex conjugation x + iy -> x - iy is a
separate map, not the *-involution.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgebraSpec, AlgebraError, Element


class ComplexifiedSpec:
    """Base algebra, derived algebra of dimension 2d, and the maps between them."""

    def __init__(self, base: AlgebraSpec, derived: AlgebraSpec):
        self.base = base
        self.derived = derived

    def embed(self, x: Element) -> Element:
        if x.algebra is not self.base:
            raise AlgebraError("element does not belong to the base algebra")
        return self.derived.element(list(x.coeffs) + [0] * self.base.dim, x.mode)

    def make(self, x: Element, y: Element) -> Element:
        """The element x + iota*y."""
        if x.algebra is not self.base or y.algebra is not self.base:
            raise AlgebraError("components must belong to the base algebra")
        if x.mode != y.mode:
            raise AlgebraError("components must share a scalar mode")
        return self.derived.element(list(x.coeffs) + list(y.coeffs), x.mode)

    def parts(self, z: Element):
        """(x, y) with z = x + iota*y."""
        if z.algebra is not self.derived:
            raise AlgebraError("element does not belong to the derived algebra")
        d = self.base.dim
        return (self.base.element(z.coeffs[:d], z.mode),
                self.base.element(z.coeffs[d:], z.mode))

    @property
    def iota(self) -> Element:
        return self.derived.basis_element(self.base.dim)

    def __repr__(self):
        return f"ComplexifiedSpec({self.base.name})"


@lru_cache(maxsize=None)
def _complexify_cached(base: AlgebraSpec) -> ComplexifiedSpec:
    if not base.is_alternative:
        raise AlgebraError(f"{base.name} is not alternative; cannot complexify")
    d = base.dim
    table = []
    for i in range(2 * d):
        row = []
        ib, ii = i % d, i >= d
        for j in range(2 * d):
            jb, ji = j % d, j >= d
            cell = base.table[ib][jb]
            if not ii and not ji:
                row.append(cell)
            elif ii and ji:
                row.append(tuple((k, -c) for k, c in cell))
            else:
                row.append(tuple((k + d, c) for k, c in cell))
        table.append(tuple(row))
    names = list(base.basis_names) + ["I" + nm for nm in base.basis_names]
    invol = [[0] * 2 * d for _ in range(2 * d)]
    for i in range(d):
        for k in range(d):
            invol[i][k] = base.involution[i][k]
            invol[i + d][k + d] = base.involution[i][k]
    derived = AlgebraSpec(base.name + "_C", names, tuple(table), invol,
                          family="complexified", singular=True)
    if not derived.is_alternative:
        raise AlgebraError(f"{base.name}_C failed the alternativity re-check")
    return ComplexifiedSpec(base, derived)


def complexify(base: AlgebraSpec) -> ComplexifiedSpec:
    return _complexify_cached(base)


def c_involution(cspec: ComplexifiedSpec, z: Element) -> Element:
    """(x + iy)^c = x^c + i y^c; this is the derived algebra's *-involution."""
    if z.algebra is not cspec.derived:
        raise AlgebraError("element does not belong to the derived algebra")
    from .algebra import conj
    return conj(z)


def complex_conj(cspec: ComplexifiedSpec, z: Element) -> Element:
    """x + iy -> x - iy."""
    x, y = cspec.parts(z)
    return cspec.make(x, -y)
