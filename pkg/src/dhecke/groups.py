"""Finite group elements acting linearly on F^n, plus full enumerations.

Two element kinds: permutations of {1..n} (the symmetric-group
specialization, 1-indexed one-line images) and invertible n x n matrices
over a FieldSpec.  Composition is fixed globally as (gh)(i) = g(h(i)),
i.e. "apply h, then g" -- a left action, the only convention consistent
with the cocycle identity checked by the PBW machinery.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence, Union

from . import linalg
from .linalg import Vector
from .scalars import FieldSpec, Scalar


class ClosureCapExceeded(RuntimeError):
    """Group closure grew past the configured cap."""


class Perm:
    """A permutation of {1..n} stored as the tuple of images (g(1), ..., g(n))."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]) -> None:
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "_hash", hash(imgs))

    def __setattr__(self, *_):
        raise AttributeError("Perm is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(range(1, n + 1))

    @staticmethod
    def from_cycles(n: int, *cycles: Sequence[int]) -> "Perm":
        """Build from cycles; (1 2 3) means 1->2->3->1."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return Perm(images)

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Perm":
        return Perm.from_cycles(n, (i, j))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @staticmethod
    def _raw(images: tuple[int, ...]) -> "Perm":
        """Internal constructor for products of already-valid permutations."""
        out = Perm.__new__(Perm)
        object.__setattr__(out, "images", images)
        object.__setattr__(out, "_hash", hash(images))
        return out

    def __mul__(self, other: "Perm") -> "Perm":
        if not isinstance(other, Perm):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("mismatched permutation sizes")
        si = self.images
        return Perm._raw(tuple(si[o - 1] for o in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Perm._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def act_on_vector(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of ^g v in the fixed basis: v_i maps to v_{g(i)}."""
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        out = list(v)
        for i, img in enumerate(self.images, start=1):
            out[img - 1] = v[i - 1]
        return tuple(out)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its minimum."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                cyc.append(i)
                i = self.images[i - 1]
            out.append(tuple(cyc))
        return out

    def reflection_length(self) -> int:
        """Minimal number of transpositions: n minus the number of cycles."""
        return self.n - len(self.cycles())

    def fixed_space_codim(self) -> int:
        return self.reflection_length()

    def fixed_space_basis(self, fs: FieldSpec) -> list[Vector]:
        """Orbit sums: one indicator vector per cycle spans the fixed space."""
        basis = []
        for cyc in self.cycles():
            vec = [fs.zero] * self.n
            for i in cyc:
                vec[i - 1] = fs.one
            basis.append(tuple(vec))
        return basis

    def matrix(self, fs: FieldSpec) -> tuple[Vector, ...]:
        rows = [[fs.zero] * self.n for _ in range(self.n)]
        for i, img in enumerate(self.images, start=1):
            rows[img - 1][i - 1] = fs.one
        return tuple(tuple(r) for r in rows)

    def sort_key(self):
        return self.images

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"g[{','.join(map(str, self.images))}]"


class MatrixElement:
    """An invertible n x n matrix over a FieldSpec, acting on column coordinates."""

    __slots__ = ("rows", "field", "_hash")

    def __init__(self, field_spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> None:
        rs = tuple(tuple(field_spec(x) for x in row) for row in rows)
        n = len(rs)
        if any(len(row) != n for row in rs):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "field", field_spec)
        object.__setattr__(self, "_hash", hash(tuple(s.value for row in rs for s in row)))
        if linalg.rank(rs) != n:
            raise ValueError("matrix is singular")

    def __setattr__(self, *_):
        raise AttributeError("MatrixElement is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(fs: FieldSpec, n: int) -> "MatrixElement":
        return MatrixElement(
            fs, [[fs.one if i == j else fs.zero for j in range(n)] for i in range(n)]
        )

    def __mul__(self, other: "MatrixElement") -> "MatrixElement":
        if not isinstance(other, MatrixElement):
            return NotImplemented
        if other.n != self.n or other.field != self.field:
            raise ValueError("mismatched matrices")
        n = self.n
        rows = [
            [
                sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), self.field.zero)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return MatrixElement(self.field, rows)

    def inverse(self) -> "MatrixElement":
        n = self.n
        fs = self.field
        aug = [list(self.rows[i]) + [fs.one if j == i else fs.zero for j in range(n)] for i in range(n)]
        red, pivots = linalg.rref(aug)
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return MatrixElement(fs, [row[n:] for row in red])

    def is_identity(self) -> bool:
        fs = self.field
        return all(
            self.rows[i][j] == (fs.one if i == j else fs.zero)
            for i in range(self.n)
            for j in range(self.n)
        )

    def act_on_vector(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((self.rows[i][j] * v[j] for j in range(self.n)), self.field.zero)
            for i in range(self.n)
        )

    def fixed_space_codim(self) -> int:
        return linalg.rank(self._minus_identity())

    def fixed_space_basis(self, fs: FieldSpec) -> list[Vector]:
        return linalg.nullspace(fs, self._minus_identity(), self.n)

    def _minus_identity(self) -> list[list[Scalar]]:
        fs = self.field
        return [
            [self.rows[i][j] - (fs.one if i == j else fs.zero) for j in range(self.n)]
            for i in range(self.n)
        ]

    def matrix(self, fs: FieldSpec) -> tuple[Vector, ...]:
        return self.rows

    def sort_key(self):
        return tuple(s.value for row in self.rows for s in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixElement)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = "],[".join(",".join(str(s) for s in row) for row in self.rows)
        return f"M[[{body}]]"


GroupElement = Union[Perm, MatrixElement]


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The composite acting as "apply h, then g"."""
    if type(g) is not type(h):
        raise ValueError("mismatched element representations")
    return g * h


def reflection_length(g: Perm) -> int:
    if not isinstance(g, Perm):
        raise ValueError("reflection length is defined for permutations")
    return g.reflection_length()


def fixed_space_codim(g: GroupElement) -> int:
    return g.fixed_space_codim()


class GroupTable:
    """Immutable full enumeration of a finite group with product/inverse lookup.

    Elements are sorted by a canonical key (one-line images for permutations,
    flattened entries for matrices) so all downstream iteration is
    deterministic.
    """

    def __init__(self, elements: Iterable[GroupElement], n: int, field_spec: FieldSpec | None = None) -> None:
        self.elements: tuple[GroupElement, ...] = tuple(
            sorted(elements, key=lambda e: e.sort_key())
        )
        self.n = n
        self.field = field_spec
        self._index = {g: i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        ident = [g for g in self.elements if g.is_identity()]
        if not ident:
            raise ValueError("enumeration is missing the identity")
        self.identity: GroupElement = ident[0]
        self._inverses = {g: g.inverse() for g in self.elements}
        for g, gi in self._inverses.items():
            if gi not in self._index:
                raise ValueError(f"enumeration not closed under inverse: {g!r}")
        self._products: dict[tuple[GroupElement, GroupElement], GroupElement] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._index

    def index(self, g: GroupElement) -> int:
        return self._index[g]

    def product(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Memoized product; the full table is built on first use."""
        if self._products is None:
            self._products = {
                (a, b): a * b for a in self.elements for b in self.elements
            }
        return self._products[(g, h)]

    def inverse(self, g: GroupElement) -> GroupElement:
        return self._inverses[g]

    def is_permutation_group(self) -> bool:
        return all(isinstance(g, Perm) for g in self.elements)

    def is_symmetric_group(self) -> bool:
        import math

        return self.is_permutation_group() and len(self) == math.factorial(self.n)

    def adjacent_transposition(self, k: int) -> Perm:
        """s_k = (k k+1) for k < n, and s_n = (n 1); indices wrap modulo n."""
        n = self.n
        k = (k - 1) % n + 1
        if k == n:
            return Perm.from_cycles(n, (n, 1))
        return Perm.from_cycles(n, (k, k + 1))


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> GroupTable:
    """All n! permutations of {1..n}.  Cached: tables are immutable."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return GroupTable((Perm(p) for p in permutations(range(1, n + 1))), n)


def enumerate_group(
    generators: Sequence[GroupElement], cap: int = 10**6, field_spec: FieldSpec | None = None
) -> GroupTable:
    """Close a generating set under products; errors past the cap."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise ValueError("mismatched dimensions among generators")
    if isinstance(generators[0], MatrixElement):
        ident: GroupElement = MatrixElement.identity(generators[0].field, n)
        field_spec = generators[0].field
    else:
        ident = Perm.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(f"closure exceeded cap {cap}")
        frontier = nxt
    return GroupTable(seen, n, field_spec)
