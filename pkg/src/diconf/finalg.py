"""Finite-dimensional algebras and dialgebras via structure constants.

Holds the polylinear identity engine, the translation of a one-product
identity family into two-product (dialgebra) identities, the conversions
between Leibniz algebras and Lie dialgebras, and the quotient of a Leibniz
algebra onto its Lie algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact import RatMatrix, rat, format_rat, rank_of_vectors

# Operation tags for two-product monomial trees.
DASHV = "<"  # left product  a -| b
VDASH = ">"  # right product a |- b

Vector = tuple[Fraction, ...]


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def vec_zero(n: int) -> Vector:
    return (Fraction(0),) * n


def _tree_leaves(tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    if len(tree) == 2:
        return _tree_leaves(tree[0]) + _tree_leaves(tree[1])
    return _tree_leaves(tree[1]) + _tree_leaves(tree[2])


def _format_tree(tree, ops=False) -> str:
    if isinstance(tree, int):
        return f"x{tree}"
    if not ops:
        return f"({_format_tree(tree[0])} {_format_tree(tree[1])})"
    symbol = "-|" if tree[0] == DASHV else "|-"
    return f"({_format_tree(tree[1], True)} {symbol} {_format_tree(tree[2], True)})"


class _TermBase:
    """Shared plumbing for Rat-linear combinations of monomial trees."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for tree, coeff in items:
            c = rat(coeff)
            if not c:
                continue
            tree = self._check_tree(tree)
            leaves = sorted(_tree_leaves(tree))
            if leaves != list(range(1, nvars + 1)):
                raise ValueError(
                    f"monomial {tree!r} is not polylinear in x1..x{nvars}"
                )
            c += clean.get(tree, Fraction(0))
            if c:
                clean[tree] = c
            else:
                clean.pop(tree, None)
        self.nvars = nvars
        self.terms = clean

    def monomial_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))


class IdentityTerm(_TermBase):
    """Polylinear identity in a single binary multiplication.

    Monomial trees are nested pairs with 1-based variable indices as leaves,
    e.g. ``((1, 2), 3)`` for (x1 x2) x3.
    """

    @classmethod
    def _check_tree(cls, tree):
        if isinstance(tree, int):
            return tree
        if not (isinstance(tree, tuple) and len(tree) == 2):
            raise ValueError(f"bad monomial node {tree!r}")
        return (cls._check_tree(tree[0]), cls._check_tree(tree[1]))

    def __str__(self) -> str:
        chunks = []
        for tree, coeff in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            prefix = "" if coeff == 1 else ("-" if coeff == -1 else f"{format_rat(coeff)}*")
            chunks.append(prefix + _format_tree(tree))
        return " + ".join(chunks).replace("+ -", "- ") or "0"


class DiTerm(_TermBase):
    """Polylinear identity in the two dialgebra multiplications.

    Monomial trees are ``(op, left, right)`` with op one of DASHV/VDASH.
    """

    @classmethod
    def _check_tree(cls, tree):
        if isinstance(tree, int):
            return tree
        if not (isinstance(tree, tuple) and len(tree) == 3 and tree[0] in (DASHV, VDASH)):
            raise ValueError(f"bad dialgebra monomial node {tree!r}")
        return (tree[0], cls._check_tree(tree[1]), cls._check_tree(tree[2]))

    def __str__(self) -> str:
        chunks = []
        for tree, coeff in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            prefix = "" if coeff == 1 else ("-" if coeff == -1 else f"{format_rat(coeff)}*")
            chunks.append(prefix + _format_tree(tree, ops=True))
        return " + ".join(chunks).replace("+ -", "- ") or "0"


def associativity() -> IdentityTerm:
    return IdentityTerm(3, {((1, 2), 3): 1, (1, (2, 3)): -1})


def left_leibniz() -> IdentityTerm:
    # x1(x2 x3) - (x1 x2)x3 - x2(x1 x3)
    return IdentityTerm(3, {(1, (2, 3)): 1, ((1, 2), 3): -1, (2, (1, 3)): -1})


def assoc_sigma() -> list[IdentityTerm]:
    return [associativity()]


def lie_sigma() -> list[IdentityTerm]:
    anti = IdentityTerm(2, {(1, 2): 1, (2, 1): 1})
    jacobi = IdentityTerm(3, {(1, (2, 3)): 1, (2, (1, 3)): -1, ((1, 2), 3): -1})
    return [anti, jacobi]


class StructureAlgebra:
    """Algebra with one bilinear product, as an exact structure-constant tensor.

    ``c[i][j][k]`` is the coefficient of e_k in e_i * e_j.
    """

    __slots__ = ("dim", "basis_names", "c")

    def __init__(self, basis_names: Sequence[str], c):
        names = tuple(str(n) for n in basis_names)
        dim = len(names)
        tensor = tuple(
            tuple(tuple(rat(v) for v in row) for row in plane) for plane in c
        )
        if len(tensor) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane)
            for plane in tensor
        ):
            raise ValueError("structure tensor shape must be dim x dim x dim")
        self.dim = dim
        self.basis_names = names
        self.c = tensor

    @classmethod
    def zero(cls, basis_names: Sequence[str]) -> "StructureAlgebra":
        n = len(basis_names)
        return cls(basis_names, [[[0] * n for _ in range(n)] for _ in range(n)])

    @classmethod
    def from_products(
        cls, basis_names: Sequence[str], products: Mapping[tuple[int, int], Mapping[int, object]]
    ) -> "StructureAlgebra":
        """Build from a sparse {(i, j): {k: coeff}} table."""
        n = len(basis_names)
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), value in products.items():
            for k, coeff in value.items():
                c[i][j][k] = rat(coeff)
        return cls(basis_names, c)

    def product_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def product(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, coeff in enumerate(self.c[i][j]):
                    if coeff:
                        out[k] += ab * coeff
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if k == i else Fraction(0) for k in range(self.dim))

    def with_entry(self, i: int, j: int, k: int, value) -> "StructureAlgebra":
        """Copy with one structure constant replaced (negative-control helper)."""
        c = [[list(row) for row in plane] for plane in self.c]
        c[i][j][k] = rat(value)
        return StructureAlgebra(self.basis_names, c)

    def same_constants(self, other: "StructureAlgebra") -> bool:
        return self.dim == other.dim and self.c == other.c

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return self.basis_names == other.basis_names and self.c == other.c

    def __repr__(self) -> str:
        return f"StructureAlgebra({', '.join(self.basis_names)})"


class StructureDialgebra:
    """Dialgebra with two bilinear products -| and |- via structure constants."""

    __slots__ = ("dim", "basis_names", "c_left", "c_right")

    def __init__(self, basis_names: Sequence[str], c_left, c_right):
        left = StructureAlgebra(basis_names, c_left)
        right = StructureAlgebra(basis_names, c_right)
        self.dim = left.dim
        self.basis_names = left.basis_names
        self.c_left = left.c
        self.c_right = right.c

    def _algebra(self, op: str) -> StructureAlgebra:
        tensor = self.c_left if op == DASHV else self.c_right
        alg = object.__new__(StructureAlgebra)
        alg.dim = self.dim
        alg.basis_names = self.basis_names
        alg.c = tensor
        return alg

    def left(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        return self._algebra(DASHV).product(u, v)

    def right(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        return self._algebra(VDASH).product(u, v)

    def product(self, op: str, u, v) -> Vector:
        return self._algebra(op).product(u, v)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if k == i else Fraction(0) for k in range(self.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureDialgebra):
            return NotImplemented
        return (
            self.basis_names == other.basis_names
            and self.c_left == other.c_left
            and self.c_right == other.c_right
        )

    def __repr__(self) -> str:
        return f"StructureDialgebra({', '.join(self.basis_names)})"


def _eval_tree(tree, args, mult) -> Vector:
    if isinstance(tree, int):
        return args[tree - 1]
    if len(tree) == 2:
        return mult(None, _eval_tree(tree[0], args, mult), _eval_tree(tree[1], args, mult))
    return mult(tree[0], _eval_tree(tree[1], args, mult), _eval_tree(tree[2], args, mult))


def eval_identity_on(alg: StructureAlgebra, term: IdentityTerm, args: Sequence[Vector]) -> Vector:
    """Value of the identity on a concrete tuple of elements."""

    def mult(_op, u, v):
        return alg.product(u, v)

    total = vec_zero(alg.dim)
    for tree, coeff in term.terms.items():
        total = vec_add(total, vec_scale(coeff, _eval_tree(tree, args, mult)))
    return total


def eval_di_identity_on(
    dialg: StructureDialgebra, term: DiTerm, args: Sequence[Vector]
) -> Vector:
    def mult(op, u, v):
        return dialg.product(op, u, v)

    total = vec_zero(dialg.dim)
    for tree, coeff in term.terms.items():
        total = vec_add(total, vec_scale(coeff, _eval_tree(tree, args, mult)))
    return total


def identity_violation(
    alg: StructureAlgebra, term: IdentityTerm
) -> tuple[int, ...] | None:
    """First basis tuple on which the identity fails, or None.

    Exhaustive over basis tuples, which suffices by polylinearity.
    """
    for combo in itertools.product(range(alg.dim), repeat=term.nvars):
        args = [alg.basis_vector(i) for i in combo]
        if any(eval_identity_on(alg, term, args)):
            return combo
    return None


def di_identity_violation(
    dialg: StructureDialgebra, term: DiTerm
) -> tuple[int, ...] | None:
    for combo in itertools.product(range(dialg.dim), repeat=term.nvars):
        args = [dialg.basis_vector(i) for i in combo]
        if any(eval_di_identity_on(dialg, term, args)):
            return combo
    return None


def eval_identity(alg: StructureAlgebra, term: IdentityTerm) -> bool:
    return identity_violation(alg, term) is None


def eval_di_identity(dialg: StructureDialgebra, term: DiTerm) -> bool:
    return di_identity_violation(dialg, term) is None


def di_translate(term: IdentityTerm, i: int) -> DiTerm:
    """Translate a one-product identity to the two-product identity centered at x_i.

    In each monomial the flat word x_{j1}..x_{jn} becomes
    x_{j1} |- ... |- x_i -| ... -| x_{jn} with the original bracketing kept:
    a multiplication node becomes |- exactly when the leaf x_i sits at or
    after the start of the node's right subtree in word order.
    """
    if not 1 <= i <= term.nvars:
        raise IndexError(f"variable index {i} out of range 1..{term.nvars}")

    def mark(tree, start: int, center: int):
        if isinstance(tree, int):
            return tree, 1
        lt, lsize = mark(tree[0], start, center)
        rt, rsize = mark(tree[1], start + lsize, center)
        op = VDASH if center >= start + lsize else DASHV
        return (op, lt, rt), lsize + rsize

    out: dict = {}
    for tree, coeff in term.terms.items():
        word = _tree_leaves(tree)
        center = word.index(i) + 1
        dtree, _ = mark(tree, 1, center)
        out[dtree] = out.get(dtree, Fraction(0)) + coeff
    return DiTerm(term.nvars, out)


def bar_identities() -> list[DiTerm]:
    """The two identities every dialgebra variety includes."""
    first = DiTerm(3, {(VDASH, (DASHV, 1, 2), 3): 1, (VDASH, (VDASH, 1, 2), 3): -1})
    second = DiTerm(3, {(DASHV, 1, (VDASH, 2, 3)): 1, (DASHV, 1, (DASHV, 2, 3)): -1})
    return [first, second]


def variety_identities(sigma: Iterable[IdentityTerm]) -> list[DiTerm]:
    """The full dialgebra identity family for a polylinear variety."""
    out = bar_identities()
    for term in sigma:
        out.extend(di_translate(term, i) for i in range(1, term.nvars + 1))
    return out


def variety_violation(
    dialg: StructureDialgebra, sigma: Iterable[IdentityTerm]
) -> tuple[int, tuple[int, ...]] | None:
    """(identity index, basis tuple) of the first failing family member."""
    for idx, term in enumerate(variety_identities(sigma)):
        witness = di_identity_violation(dialg, term)
        if witness is not None:
            return idx, witness
    return None


def check_variety(dialg: StructureDialgebra, sigma: Iterable[IdentityTerm]) -> bool:
    return variety_violation(dialg, sigma) is None


def is_leibniz(alg: StructureAlgebra) -> bool:
    return eval_identity(alg, left_leibniz())


def lie_violation(alg: StructureAlgebra) -> tuple[str, tuple[int, ...]] | None:
    """Check [x x] = 0 (on all of L, via the symmetrized constants) plus Jacobi."""
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if any(vec_add(alg.product_basis(i, j), alg.product_basis(j, i))):
                return ("alternating", (i, j))
    witness = identity_violation(alg, left_leibniz())
    if witness is not None:
        return ("jacobi", witness)
    return None


def is_lie(alg: StructureAlgebra) -> bool:
    return lie_violation(alg) is None


def leibniz_to_dialgebra(alg: StructureAlgebra) -> StructureDialgebra:
    """View a Leibniz algebra as a Lie dialgebra: x |- y = [xy], x -| y = -[yx]."""
    if not is_leibniz(alg):
        raise ValueError("input does not satisfy the left Leibniz identity")
    n = alg.dim
    c_right = alg.c
    c_left = [
        [[-alg.c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)
    ]
    return StructureDialgebra(alg.basis_names, c_left, c_right)


def minus_functor(dialg: StructureDialgebra) -> StructureAlgebra:
    """The Leibniz algebra on an associative dialgebra: [ab] = a |- b - b -| a."""
    violation = variety_violation(dialg, assoc_sigma())
    if violation is not None:
        raise ValueError(
            f"input is not an associative dialgebra (identity {violation[0]}, tuple {violation[1]})"
        )
    n = dialg.dim
    c = [
        [
            [dialg.c_right[i][j][k] - dialg.c_left[j][i][k] for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return StructureAlgebra(dialg.basis_names, c)


@dataclass(frozen=True)
class LeibnizQuotient:
    """Quotient of a Leibniz algebra onto its Lie algebra.

    ``proj`` maps L-coordinates to quotient coordinates; ``lift_indices`` are
    the original basis positions whose images form the quotient basis;
    ``kernel_basis`` spans the span of all symmetrized brackets.
    """

    algebra: StructureAlgebra
    lalg: StructureAlgebra
    proj: RatMatrix
    kernel_basis: tuple[Vector, ...]
    lift_indices: tuple[int, ...]

    def project(self, vector: Sequence[Fraction]) -> Vector:
        return self.proj.apply(vector)

    def project_basis(self, i: int) -> Vector:
        return self.proj.apply(self.algebra.basis_vector(i))


def leibniz_quotient(alg: StructureAlgebra) -> LeibnizQuotient:
    """Split L into kernel + lifted quotient basis and return the quotient data."""
    n = alg.dim
    sym_rows = [
        vec_add(alg.product_basis(i, j), alg.product_basis(j, i))
        for i in range(n)
        for j in range(i, n)
    ]
    reduced, pivots = RatMatrix(sym_rows).rref() if sym_rows else (RatMatrix.identity(0), ())
    kernel_basis = tuple(
        tuple(reduced.entries[r]) for r in range(len(pivots))
    )
    lift = tuple(j for j in range(n) if j not in pivots)
    # Base change: columns are lifted basis vectors followed by kernel vectors.
    columns = [alg.basis_vector(j) for j in lift] + [list(v) for v in kernel_basis]
    base = RatMatrix(list(zip(*columns))) if columns else RatMatrix.identity(0)
    base_inv = base.inverse()
    proj = RatMatrix(base_inv.entries[: len(lift)])

    dim_q = len(lift)
    c_q = [[[Fraction(0)] * dim_q for _ in range(dim_q)] for _ in range(dim_q)]
    for p, ip in enumerate(lift):
        for q, iq in enumerate(lift):
            image = proj.apply(alg.product_basis(ip, iq))
            for r in range(dim_q):
                c_q[p][q][r] = image[r]
    lalg = StructureAlgebra([alg.basis_names[j] for j in lift], c_q)

    # The kernel must be a two-sided ideal or the quotient is meaningless.
    for kappa in kernel_basis:
        for i in range(n):
            e = alg.basis_vector(i)
            if any(proj.apply(alg.product(kappa, e))) or any(
                proj.apply(alg.product(e, kappa))
            ):
                raise ValueError("symmetrized-bracket span is not an ideal; input is not Leibniz")
    bad = lie_violation(lalg)
    if bad is not None:
        raise ValueError(f"quotient fails the Lie checks at {bad}")
    return LeibnizQuotient(alg, lalg, proj, kernel_basis, lift)
