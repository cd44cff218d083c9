"""Exact scalars, multivariate polynomials, and dense rational linear algebra.

Everything downstream is built on the three types in this module.  All
arithmetic is exact: no operation ever rounds.  Values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Rat = Fraction

# Display/serialization order for the formal variables that actually occur in
# this project; anything else sorts after them alphabetically.  The order is
# an internal canonicalization and carries no meaning.
_VAR_RANK = {"z": 0, "y": 1, "w": 2, "x": 3, "T": 4}


def rat(value: int | str | Fraction) -> Fraction:
    """Parse an exact rational from an int, a Fraction, or a "p/q" string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rat(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def _as_coeff(value) -> int | Fraction:
    """Exact coefficient, stored as int whenever integral (much faster math).

    int and Fraction mix transparently: sums and products stay exact and
    compare/hash equal across the two representations.
    """
    if isinstance(value, int):
        return value
    f = rat(value)
    return f.numerator if f.denominator == 1 else f


def _var_key(name: str) -> tuple[int, str]:
    return (_VAR_RANK.get(name, len(_VAR_RANK)), name)


@lru_cache(maxsize=1 << 18)
def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for var, e in m2:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


class MPoly:
    """Multivariate polynomial in named formal variables over the rationals.

    Terms map canonical monomials (sorted tuples of (variable, exponent)
    pairs, exponents > 0) to nonzero coefficients; equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean: dict[tuple, int | Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                c = _as_coeff(coeff)
                if not c:
                    continue
                key = tuple(sorted((v, int(e)) for v, e in mono if int(e)))
                if any(e < 0 for _, e in key):
                    raise ValueError("negative exponent in monomial")
                c += clean.get(key, 0)
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _make(cls, clean: dict) -> "MPoly":
        # internal: keys already canonical, zero coefficients already dropped
        p = object.__new__(cls)
        p._terms = clean
        return p

    @classmethod
    def zero(cls) -> "MPoly":
        return cls._make({})

    @classmethod
    def one(cls) -> "MPoly":
        return cls.const(1)

    @classmethod
    def const(cls, value) -> "MPoly":
        c = _as_coeff(value)
        return cls._make({(): c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MPoly":
        return cls._make({((name, 1),): 1})

    @classmethod
    def coerce(cls, value) -> "MPoly":
        if isinstance(value, MPoly):
            return value
        return cls.const(value)

    @property
    def terms(self) -> dict:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def constant_value(self) -> Fraction:
        """The coefficient of the empty monomial (requires a constant poly)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self._terms.get((), 0))

    def constant_coefficient(self) -> Fraction:
        return Fraction(self._terms.get((), 0))

    def variables(self) -> tuple[str, ...]:
        seen = {v for mono in self._terms for v, _ in mono}
        return tuple(sorted(seen, key=_var_key))

    def degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self._terms)

    def degree_in(self, var: str) -> int:
        deg = 0
        for mono in self._terms:
            for v, e in mono:
                if v == var and e > deg:
                    deg = e
        return deg

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "MPoly":
        other = MPoly.coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MPoly._make(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._make({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return MPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "MPoly":
        other = MPoly.coerce(other)
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = _mono_mul(m1, m2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MPoly._make(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def subs(self, mapping: Mapping[str, "MPoly | Fraction | int"]) -> "MPoly":
        """Simultaneous substitution of variables by polynomials."""
        live = {v: MPoly.coerce(p) for v, p in mapping.items()}
        if not any(v in live for v in self.variables()):
            return self
        powers: dict[tuple[str, int], MPoly] = {}

        def power(var: str, e: int) -> MPoly:
            key = (var, e)
            got = powers.get(key)
            if got is None:
                got = powers[key] = live[var] ** e
            return got

        out: dict[tuple, Fraction] = {}
        for mono, coeff in self._terms.items():
            keep = tuple((v, e) for v, e in mono if v not in live)
            factor: MPoly | None = None
            for v, e in mono:
                if v in live:
                    factor = power(v, e) if factor is None else factor * power(v, e)
            if factor is None:
                s = out.get(keep, 0) + coeff
                if s:
                    out[keep] = s
                else:
                    out.pop(keep, None)
                continue
            for m2, c2 in factor._terms.items():
                key = _mono_mul(keep, m2)
                s = out.get(key, 0) + coeff * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MPoly._make(out)

    def by_powers(self, var: str) -> dict[int, "MPoly"]:
        """Expansion by powers of one variable: {k: coefficient polynomial}."""
        out: dict[int, dict] = {}
        for mono, coeff in self._terms.items():
            k = 0
            rest = []
            for v, e in mono:
                if v == var:
                    k = e
                else:
                    rest.append((v, e))
            out.setdefault(k, {})[tuple(rest)] = coeff
        return {k: MPoly._make(d) for k, d in sorted(out.items())}

    def coefficient(self, var: str, power: int) -> "MPoly":
        return self.by_powers(var).get(power, MPoly.zero())

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for v, e in mono:
                if v not in assignment:
                    raise KeyError(f"no value for variable {v!r}")
                value *= rat(assignment[v]) ** e
            total += value
        return total

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded-lexicographic order (highest first)."""

        def key(item):
            mono, _ = item
            total = sum(e for _, e in mono)
            exps = tuple(
                -next((e for v, e in mono if v == name), 0)
                for name in self.variables()
            )
            return (-total, exps)

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, coeff in self.sorted_terms():
            factors = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in sorted(mono, key=lambda p: _var_key(p[0]))
            )
            if not factors:
                chunks.append(format_rat(coeff))
            elif coeff == 1:
                chunks.append(factors)
            elif coeff == -1:
                chunks.append(f"-{factors}")
            else:
                chunks.append(f"{format_rat(coeff)}*{factors}")
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def to_payload(self) -> dict:
        """Serialize as {variables, terms:[{exponents, coefficient}]}."""
        names = self.variables()
        pos = {v: i for i, v in enumerate(names)}
        terms = []
        for mono, coeff in self.sorted_terms():
            exps = [0] * len(names)
            for v, e in mono:
                exps[pos[v]] = e
            terms.append({"exponents": exps, "coefficient": format_rat(coeff)})
        return {"variables": list(names), "terms": terms}

    @classmethod
    def from_payload(cls, payload: Mapping) -> "MPoly":
        names = list(payload["variables"])
        terms = {}
        for rec in payload["terms"]:
            mono = tuple(
                (names[i], int(e)) for i, e in enumerate(rec["exponents"]) if int(e)
            )
            terms[mono] = rat(rec["coefficient"])
        return cls(terms)


class RatMatrix:
    """Dense matrix over exact rationals with elimination-based rank tools."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(rat(v) for v in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        return cls(rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self) -> bool:
        return all(not v for row in self.entries for v in row)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-v for v in row] for row in self.entries])

    def _same_shape(self, other: "RatMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("inner dimension mismatch")
            cols = list(zip(*other.entries)) if other.entries else []
            return RatMatrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in cols]
                    for row in self.entries
                ]
            )
        c = rat(other)
        return RatMatrix([[c * v for v in row] for row in self.entries])

    def __rmul__(self, other):
        return self * other

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        vec = [rat(v) for v in vector]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.entries)) if self.entries else [])

    def rref(self) -> tuple["RatMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [v * inv for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    factor = m[i][c]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return RatMatrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """A basis of the right kernel {v : M v = 0}."""
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for r, p in enumerate(pivots):
                vec[p] = -reduced.entries[r][f]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "RatMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = RatMatrix(
            [list(self.entries[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        )
        reduced, pivots = aug.rref()
        if tuple(range(n)) != pivots[:n] or len(pivots) != n:
            raise ValueError("matrix is singular")
        return RatMatrix([row[n:] for row in reduced.entries])

    def __str__(self) -> str:
        return "\n".join(
            "[" + "  ".join(format_rat(v) for v in row) + "]" for row in self.entries
        )

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"

    def to_payload(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rat(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_payload(cls, payload: Mapping) -> "RatMatrix":
        return cls(payload["entries"])


def rank(matrix: RatMatrix) -> int:
    return matrix.rank()


def nullspace(matrix: RatMatrix) -> list[tuple[Fraction, ...]]:
    return matrix.nullspace()


def rank_of_vectors(vectors: Sequence[Sequence]) -> int:
    vecs = [list(v) for v in vectors]
    if not vecs:
        return 0
    return RatMatrix(vecs).rank()


def in_span(vectors: Sequence[Sequence], candidate: Sequence) -> bool:
    base = [list(v) for v in vectors]
    return rank_of_vectors(base) == rank_of_vectors(base + [list(candidate)])
