"""A small corpus of Leibniz algebras, Lie algebras, and associative samples.

Used by the test suite and handy for driving the CLI; every builder returns
fresh immutable structure-constant data.
"""

from __future__ import annotations

from fractions import Fraction

from .finalg import StructureAlgebra, StructureDialgebra


def nilpotent2() -> StructureAlgebra:
    """Two-dimensional Leibniz algebra with [a,a] = b, all other products zero."""
    return StructureAlgebra.from_products(["a", "b"], {(0, 0): {1: 1}})


def bad_idempotent() -> StructureAlgebra:
    """One-dimensional non-example: [a,a] = a fails the Leibniz identity."""
    return StructureAlgebra.from_products(["a"], {(0, 0): {0: 1}})


def abelian(n: int) -> StructureAlgebra:
    return StructureAlgebra.zero([f"e{i}" for i in range(n)])


def nonabelian2() -> StructureAlgebra:
    """The nonabelian two-dimensional Lie algebra: [e,f] = f."""
    return StructureAlgebra.from_products(
        ["e", "f"], {(0, 1): {1: 1}, (1, 0): {1: -1}}
    )


def heisenberg3() -> StructureAlgebra:
    """[x,y] = c with c central."""
    return StructureAlgebra.from_products(
        ["x", "y", "c"], {(0, 1): {2: 1}, (1, 0): {2: -1}}
    )


def sl2() -> StructureAlgebra:
    """Basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return StructureAlgebra.from_products(
        ["e", "h", "f"],
        {
            (0, 2): {1: 1},
            (2, 0): {1: -1},
            (1, 0): {0: 2},
            (0, 1): {0: -2},
            (1, 2): {2: -2},
            (2, 1): {2: 2},
        },
    )


def leibniz3() -> StructureAlgebra:
    """Three-dimensional non-Lie Leibniz algebra: the nonabelian 2-dimensional
    Lie algebra acting on a one-dimensional space m ([e,m] = m, [m,e] = 0)."""
    return StructureAlgebra.from_products(
        ["e", "f", "m"],
        {(0, 1): {1: 1}, (1, 0): {1: -1}, (0, 2): {2: 1}},
    )


def nilpotent2_plus_line() -> StructureAlgebra:
    """Direct sum of nilpotent2 with a one-dimensional abelian algebra."""
    return StructureAlgebra.from_products(["a", "b", "c"], {(0, 0): {1: 1}})


def random_central_leibniz(rng, dim: int) -> StructureAlgebra:
    """Random Leibniz algebra whose brackets land in a central last basis
    element: [e_i, e_j] = s_ij z for i, j < dim-1, all products with z zero."""
    if dim < 2:
        raise ValueError("need dimension at least 2")
    names = [f"e{i}" for i in range(dim - 1)] + ["z"]
    products = {}
    for i in range(dim - 1):
        for j in range(dim - 1):
            s = rng.randint(-2, 2)
            if s:
                products[(i, j)] = {dim - 1: s}
    return StructureAlgebra.from_products(names, products)


def leibniz_corpus(rng=None, extra_random: int = 3) -> list[tuple[str, StructureAlgebra]]:
    """At least ten Leibniz algebras: the named ones plus random central ones."""
    corpus = [
        ("nilpotent2", nilpotent2()),
        ("abelian1", abelian(1)),
        ("abelian2", abelian(2)),
        ("abelian3", abelian(3)),
        ("nonabelian2", nonabelian2()),
        ("heisenberg3", heisenberg3()),
        ("sl2", sl2()),
        ("leibniz3", leibniz3()),
        ("nilpotent2_plus_line", nilpotent2_plus_line()),
    ]
    if rng is not None:
        for idx in range(extra_random):
            corpus.append(
                (f"random_central_{idx}", random_central_leibniz(rng, 3 + idx % 2))
            )
    return corpus


def matrix_algebra(n: int) -> StructureAlgebra:
    """Full matrix algebra on matrix units E[p,q]."""
    names = [f"E[{p},{q}]" for p in range(n) for q in range(n)]
    dim = n * n
    products = {}
    for p in range(n):
        for q in range(n):
            for s in range(n):
                products[(p * n + q, q * n + s)] = {p * n + s: 1}
    return StructureAlgebra.from_products(names, products)


def truncated_poly_algebra(k: int) -> StructureAlgebra:
    """Commutative algebra on 1, t, ..., t^(k-1) with t^k = 0."""
    names = [f"t{i}" for i in range(k)]
    products = {}
    for i in range(k):
        for j in range(k):
            if i + j < k:
                products[(i, j)] = {i + j: 1}
    return StructureAlgebra.from_products(names, products)


def algebra_as_dialgebra(alg: StructureAlgebra) -> StructureDialgebra:
    """View an ordinary algebra as a dialgebra with both products equal."""
    return StructureDialgebra(alg.basis_names, alg.c, alg.c)


def associative_dialgebra_samples() -> list[tuple[str, StructureDialgebra]]:
    """Associative dialgebras: diagonal embeddings of associative algebras and
    truncated free dialgebras (where the two products genuinely differ)."""
    from .envelope import free_truncated_dialgebra

    return [
        ("mat2_diag", algebra_as_dialgebra(matrix_algebra(2))),
        ("poly3_diag", algebra_as_dialgebra(truncated_poly_algebra(3))),
        ("free1_len3", free_truncated_dialgebra(["x"], 3)),
        ("free2_len2", free_truncated_dialgebra(["x", "y"], 2)),
    ]
