"""Faithful conformal representations of finite-dimensional Leibniz algebras.

Given a Leibniz algebra L and a module V over its Lie quotient, the
construction acts on M0 = V + (L (x) V):

    rho(a) . v        = abar v + z (a (x) v),
    rho(a) . (b (x) v) = b (x) abar v + [ab] (x) v.

The resulting tables have entries of degree <= 1 in the action variable and
degree 0 in T, so every image decomposes as 1 (x) a0 - T (x) a1 inside the
current algebra over End M0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .conformal import ConfMap, CurEndElement, gc_bracket
from .exact import MPoly, RatMatrix, rank_of_vectors
from .finalg import (
    LeibnizQuotient,
    StructureAlgebra,
    leibniz_quotient,
)


class LieModule:
    """Finite-dimensional module over a Lie algebra, given by action matrices."""

    __slots__ = ("lie", "dim_v", "action")

    def __init__(self, lie: StructureAlgebra, action: Sequence[RatMatrix]):
        if len(action) != lie.dim:
            raise ValueError("one action matrix per Lie-algebra basis element required")
        if not action:
            raise ValueError("modules over the zero Lie algebra are not supported")
        dim_v = action[0].rows
        if dim_v < 1:
            raise ValueError("module dimension must be at least 1")
        for mat in action:
            if mat.rows != dim_v or mat.cols != dim_v:
                raise ValueError("action matrices must be square and equal-sized")
        for p in range(lie.dim):
            for q in range(lie.dim):
                commutator = action[p] * action[q] - action[q] * action[p]
                bracket = RatMatrix.zeros(dim_v, dim_v)
                for r, coeff in enumerate(lie.c[p][q]):
                    if coeff:
                        bracket = bracket + coeff * action[r]
                if commutator != bracket:
                    raise ValueError(
                        f"module law fails on basis pair ({p}, {q})"
                    )
        self.lie = lie
        self.dim_v = dim_v
        self.action = tuple(action)

    def act(self, coords: Sequence[Fraction]) -> RatMatrix:
        """Action matrix of an arbitrary Lie-algebra element."""
        out = RatMatrix.zeros(self.dim_v, self.dim_v)
        for r, coeff in enumerate(coords):
            if coeff:
                out = out + coeff * self.action[r]
        return out


def trivial_module(lie: StructureAlgebra, dim_v: int = 1) -> LieModule:
    """Module with zero action (dimension >= 1)."""
    return LieModule(lie, [RatMatrix.zeros(dim_v, dim_v) for _ in range(lie.dim)])


def adjoint_module(lie: StructureAlgebra) -> LieModule:
    if lie.dim < 1:
        raise ValueError("adjoint module needs a nonzero Lie algebra")
    mats = []
    for p in range(lie.dim):
        mats.append(
            RatMatrix([[lie.c[p][q][r] for q in range(lie.dim)] for r in range(lie.dim)])
        )
    return LieModule(lie, mats)


class RepSpace:
    """Index bookkeeping for M0 = V + (L (x) V)."""

    __slots__ = ("algebra", "dim_v", "m0_dim", "labels")

    def __init__(self, algebra: StructureAlgebra, dim_v: int):
        self.algebra = algebra
        self.dim_v = dim_v
        self.m0_dim = dim_v + algebra.dim * dim_v
        labels = [f"v{p}" for p in range(dim_v)]
        for name in algebra.basis_names:
            labels.extend(f"{name}(x)v{p}" for p in range(dim_v))
        self.labels = tuple(labels)

    def v_index(self, p: int) -> int:
        return p

    def lv_index(self, i: int, p: int) -> int:
        return self.dim_v + i * self.dim_v + p

    def decode(self, idx: int):
        if idx < self.dim_v:
            return ("v", idx)
        rest = idx - self.dim_v
        return ("lv", rest // self.dim_v, rest % self.dim_v)


class ConformalRep:
    """A Leibniz algebra represented by conformal endomorphisms of H (x) M0."""

    __slots__ = ("algebra", "quotient", "module", "space", "maps")

    def __init__(
        self,
        algebra: StructureAlgebra,
        quotient: LeibnizQuotient,
        module: LieModule,
        space: RepSpace,
        maps: Sequence[ConfMap],
    ):
        self.algebra = algebra
        self.quotient = quotient
        self.module = module
        self.space = space
        self.maps = tuple(maps)

    def rho(self, coords: Sequence[Fraction]) -> ConfMap:
        """Image of an arbitrary element given by coordinates over the L-basis."""
        out = ConfMap.zero(self.space.labels)
        for i, coeff in enumerate(coords):
            if coeff:
                out = out + (coeff * self.maps[i])
        return out


def build_rho(algebra: StructureAlgebra, module: LieModule) -> ConformalRep:
    """Build the representation tables for every basis element of L."""
    quotient = leibniz_quotient(algebra)
    if not module.lie.same_constants(quotient.lalg):
        raise ValueError("module is not over the Lie quotient of this algebra")
    if module.dim_v < 1:
        raise ValueError("module dimension must be at least 1")
    space = RepSpace(algebra, module.dim_v)
    z = MPoly.variable("z")
    maps = []
    for i in range(algebra.dim):
        abar = module.act(quotient.project_basis(i))
        entries: dict[tuple[int, int], MPoly] = {}
        for p in range(module.dim_v):
            u = space.v_index(p)
            for q in range(module.dim_v):
                if abar.entries[q][p]:
                    _bump(entries, (u, space.v_index(q)), MPoly.const(abar.entries[q][p]))
            _bump(entries, (u, space.lv_index(i, p)), z)
        for j in range(algebra.dim):
            bracket = algebra.product_basis(i, j)
            for p in range(module.dim_v):
                u = space.lv_index(j, p)
                for q in range(module.dim_v):
                    if abar.entries[q][p]:
                        _bump(entries, (u, space.lv_index(j, q)), MPoly.const(abar.entries[q][p]))
                for k, coeff in enumerate(bracket):
                    if coeff:
                        _bump(entries, (u, space.lv_index(k, p)), MPoly.const(coeff))
        maps.append(ConfMap.from_entries(space.labels, entries))
    return ConformalRep(algebra, quotient, module, space, maps)


def _bump(entries: dict, key: tuple[int, int], poly: MPoly) -> None:
    entries[key] = entries.get(key, MPoly.zero()) + poly


def representation_violation(
    rep: ConformalRep, algebra: StructureAlgebra | None = None
) -> tuple[int, int] | None:
    """First basis pair where rho([ab]) differs from the bracket of the images.

    Passing a different ``algebra`` checks the maps against that structure
    tensor instead (negative-control hook).
    """
    alg = algebra if algebra is not None else rep.algebra
    if alg.dim != rep.algebra.dim:
        raise ValueError("algebra dimension mismatch")
    for i in range(alg.dim):
        for j in range(alg.dim):
            expected = rep.rho(alg.product_basis(i, j))
            actual = gc_bracket(rep.maps[i], rep.maps[j])
            if expected != actual:
                return (i, j)
    return None


def check_representation(rep: ConformalRep, algebra: StructureAlgebra | None = None) -> bool:
    return representation_violation(rep, algebra) is None


def rep_rank(rep: ConformalRep) -> int:
    rows = [m.flatten(max_z=1) for m in rep.maps]
    return rank_of_vectors(rows)


def check_faithful(rep: ConformalRep) -> bool:
    return rep_rank(rep) == rep.algebra.dim


def decompose(conf: ConfMap) -> tuple[RatMatrix, RatMatrix]:
    """Split a degree-one table into the constant and z-linear action matrices.

    The table must have degree <= 1 in the action variable and degree 0 in T;
    anything else signals a bug in the table construction.
    """
    n = conf.dim
    a0 = [[Fraction(0)] * n for _ in range(n)]
    a1 = [[Fraction(0)] * n for _ in range(n)]
    z = conf.action_var
    for u in range(n):
        for v in range(n):
            entry = conf.table[u][v]
            if entry.degree_in("T") > 0 or entry.degree_in(z) > 1:
                raise ValueError(
                    f"table entry ({u}, {v}) = {entry} exceeds the degree bounds"
                )
            by = entry.by_powers(z)
            a0[v][u] = by.get(0, MPoly.zero()).constant_value()
            a1[v][u] = by.get(1, MPoly.zero()).constant_value()
    return RatMatrix(a0), RatMatrix(a1)


def reconstruct(a0: RatMatrix, a1: RatMatrix) -> CurEndElement:
    """Reassemble 1 (x) a0 - T (x) a1 as a current element over End M0."""
    return CurEndElement(a0.rows, {0: a0, 1: (-1) * a1})


def cur_embedding(rep: ConformalRep) -> list[CurEndElement]:
    """Images of the L-basis inside the current algebra over End M0."""
    return [reconstruct(*decompose(m)) for m in rep.maps]


def cur_embedding_violation(rep: ConformalRep) -> tuple[str, tuple[int, int]] | None:
    """Check the current-algebra embedding is an injective Leibniz homomorphism."""
    images = cur_embedding(rep)
    alg = rep.algebra
    for i in range(alg.dim):
        for j in range(alg.dim):
            expected = CurEndElement.zero(rep.space.m0_dim)
            for k, coeff in enumerate(alg.product_basis(i, j)):
                if coeff:
                    expected = expected + coeff * images[k]
            if images[i].minus_bracket(images[j]) != expected:
                return ("homomorphism", (i, j))
    rows = [img.flatten(max_power=1) for img in images]
    if rank_of_vectors(rows) != alg.dim:
        return ("injectivity", (-1, -1))
    return None
