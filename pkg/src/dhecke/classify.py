"""The symmetric-group classification of PBW deformations.

Every PBW pair for S_n permuting coordinates (n > 2, char != 2) is the
expansion of a tuple mu = (a_ij, b_k, c):

  lambda(g, v_i) = sum_{k=0}^{g(i)-i+n-1} b_{i+k} g
                   + sum_{j != i} (a_ij - a_{g(i) g(j)}) g(i j)
  kappa(v_i, v_j) = sum_{k != i,j} (c - a_123 + a_ijk) ((i j k) - (i k j))

with a_ji = -a_ij, a_ijk = a_ij a_jk + a_jk a_ki + a_ki a_ij, indices on b
modulo n, and b_n = -(b_1 + ... + b_{n-1}).  The b-sum is kept literal:
when g(i) = i it runs over a full period and cancels to zero on its own,
which the test suite checks rather than assumes.
"""

from __future__ import annotations

from typing import Sequence

from .groups import GroupElement, GroupTable, Perm, symmetric_group
from .group_algebra import AlgebraElement
from .parameters import KappaParam, LambdaParam, extract_alpha_beta
from .scalars import CharTwoUnsupported, FieldSpec, Scalar


class DistinctnessViolation(ValueError):
    """The a_{1i} of the invariant-kappa family must be pairwise distinct."""


class MuParams:
    """The classification tuple: C(n,2) a-values, n-1 b-values, and c."""

    def __init__(
        self,
        field_spec: FieldSpec,
        n: int,
        a: dict[tuple[int, int], Scalar],
        b: Sequence[Scalar],
        c: Scalar,
    ) -> None:
        if n <= 2:
            raise ValueError("the mu tuple is defined for n > 2")
        self.field = field_spec
        self.n = n
        self.a = {k: v for k, v in a.items() if v}
        for i, j in self.a:
            if not 1 <= i < j <= n:
                raise ValueError(f"a-table key must have 1 <= i < j <= n, got {(i, j)}")
        if len(b) != n - 1:
            raise ValueError(f"need exactly {n - 1} b-values, got {len(b)}")
        self.b = tuple(b)
        self.c = c

    def a_at(self, i: int, j: int) -> Scalar:
        if i == j:
            raise ValueError("a is defined for distinct indices")
        if i < j:
            return self.a.get((i, j), self.field.zero)
        return -self.a.get((j, i), self.field.zero)

    def b_at(self, k: int) -> Scalar:
        """Indices modulo n; b_n is derived as minus the sum of the others."""
        k = (k - 1) % self.n + 1
        if k < self.n:
            return self.b[k - 1]
        total = self.field.zero
        for x in self.b:
            total = total + x
        return -total

    def a_triple(self, i: int, j: int, k: int) -> Scalar:
        a = self.a_at
        return a(i, j) * a(j, k) + a(j, k) * a(k, i) + a(k, i) * a(i, j)

    def free_parameter_count(self) -> int:
        n = self.n
        return n * (n - 1) // 2 + (n - 1) + 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MuParams)
            and self.field == other.field
            and self.n == other.n
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
        )

    def __repr__(self) -> str:
        return f"MuParams(n={self.n}, a={self.a}, b={self.b}, c={self.c})"

    @staticmethod
    def zero(field_spec: FieldSpec, n: int) -> "MuParams":
        return MuParams(field_spec, n, {}, (field_spec.zero,) * (n - 1), field_spec.zero)


def build_H_mu(mu: MuParams, group: GroupTable | None = None) -> tuple[LambdaParam, KappaParam]:
    """Expand a mu tuple into full (lambda, kappa) tables over S_n."""
    fs = mu.field
    n = mu.n
    if group is None:
        group = symmetric_group(n)
    lam_table: dict[tuple[GroupElement, int], AlgebraElement] = {}
    for g in group:
        for i in range(1, n + 1):
            coeffs: dict[GroupElement, Scalar] = {}
            total = fs.zero
            for k in range(0, g(i) - i + n):
                total = total + mu.b_at(i + k)
            if total:
                coeffs[g] = total
            for j in range(1, n + 1):
                if j == i:
                    continue
                c = mu.a_at(i, j) - mu.a_at(g(i), g(j))
                if c:
                    t = g * Perm.transposition(n, i, j)
                    coeffs[t] = coeffs.get(t, fs.zero) + c
            val = AlgebraElement(fs, coeffs)
            if not val.is_zero():
                lam_table[(g, i)] = val
    a123 = mu.a_triple(1, 2, 3)
    kap_table: dict[tuple[int, int], AlgebraElement] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coeffs = {}
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                c = mu.c - a123 + mu.a_triple(i, j, k)
                if c:
                    fwd = Perm.from_cycles(n, (i, j, k))
                    bwd = Perm.from_cycles(n, (i, k, j))
                    coeffs[fwd] = coeffs.get(fwd, fs.zero) + c
                    coeffs[bwd] = coeffs.get(bwd, fs.zero) - c
            val = AlgebraElement(fs, coeffs)
            if not val.is_zero():
                kap_table[(i, j)] = val
    return LambdaParam(group, fs, lam_table), KappaParam(fs, n, kap_table)


def extract_mu(lam: LambdaParam, kappa: KappaParam) -> MuParams:
    """Read the mu tuple off a PBW pair (the caller vouches for PBW-ness)."""
    fs = lam.field
    n = lam.n
    if fs.characteristic == 2:
        raise CharTwoUnsupported("mu extraction divides by 4 and 2")
    if n <= 2:
        raise ValueError("mu extraction needs n > 2 (no 3-cycles exist below)")
    if not lam.group.is_symmetric_group():
        raise ValueError("mu extraction is defined for the full symmetric group")
    ab = extract_alpha_beta(lam)
    a = {
        (i, j): ab.alpha_at(i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if ab.alpha_at(i, j)
    }
    b = tuple(ab.beta[k] for k in range(n - 1))
    c = kappa.coefficient(Perm.from_cycles(n, (1, 2, 3)), 1, 2)
    return MuParams(fs, n, a, b, c)


def low_dim_family(n: int, params: Sequence[Scalar], field_spec: FieldSpec) -> tuple[LambdaParam, KappaParam]:
    """The explicit families in dimensions 1 and 2.

    n=1 admits only the trivial pair.  n=2 is the two-parameter family
    (a, b) with kappa = 0; with the characteristic-2 override a
    four-parameter family (a, b, c, d) appears, with kappa(v1, v2) = c + d(1 2)
    and both lambda values equal to a + b(1 2).
    """
    if n not in (1, 2):
        raise ValueError("low-dimensional families exist for n in {1, 2}")
    group = symmetric_group(n)
    fs = field_spec
    if n == 1:
        if len(params) != 0:
            raise ValueError("the n=1 family has no parameters; only (0, 0) is PBW")
        return LambdaParam.zero(group, fs), KappaParam(fs, 1)
    s = Perm.transposition(2, 1, 2)
    ident = Perm.identity(2)
    if len(params) == 2:
        a, b = params
        val = AlgebraElement(fs, {ident: a, s: b})
        lam = LambdaParam(group, fs, {(s, 1): val, (s, 2): -val})
        return lam, KappaParam(fs, 2)
    if len(params) == 4:
        if fs.characteristic != 2:
            raise ValueError("the four-parameter n=2 family exists only in characteristic 2")
        a, b, c, d = params
        val = AlgebraElement(fs, {ident: a, s: b})
        lam = LambdaParam(group, fs, {(s, 1): val, (s, 2): val})
        kap = KappaParam(fs, 2, {(1, 2): AlgebraElement(fs, {ident: c, s: d})})
        return lam, kap
    raise ValueError(f"n=2 takes 2 parameters (or 4 under the char-2 override), got {len(params)}")


def invariant_kappa_params(
    c: Scalar,
    d: Scalar,
    a_first_row: Sequence[Scalar],
    b: Sequence[Scalar],
    n: int,
    field_spec: FieldSpec,
) -> MuParams:
    """The mu tuple whose expansion has G-invariant kappa.

    a_first_row lists a_{1i} for i = 2..n (pairwise distinct); the rest of
    the a-table is a_ij = (d + a_{1i} a_{1j}) / (a_{1i} - a_{1j}), which makes
    every a_ijk equal to d, so the kappa coefficient is uniformly c.
    """
    if n <= 2:
        raise ValueError("needs n > 2")
    if len(a_first_row) != n - 1:
        raise ValueError(f"need a_1i for i = 2..{n}, got {len(a_first_row)} values")
    vals = list(a_first_row)
    for x in range(len(vals)):
        for y in range(x + 1, len(vals)):
            if vals[x] == vals[y]:
                raise DistinctnessViolation(
                    f"a_1{x + 2} == a_1{y + 2}; the first-row values must be pairwise distinct"
                )
    a: dict[tuple[int, int], Scalar] = {}
    first = {i: vals[i - 2] for i in range(2, n + 1)}
    for i in range(2, n + 1):
        if first[i]:
            a[(1, i)] = first[i]
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            val = (d + first[i] * first[j]) / (first[i] - first[j])
            if val:
                a[(i, j)] = val
    return MuParams(field_spec, n, a, tuple(b), c)


def two_param_family(a: Scalar, b: Scalar, n: int, field_spec: FieldSpec) -> tuple[LambdaParam, KappaParam]:
    """lambda(g, v_i) = a (g(i) - i) g with kappa = b sum ((i j k) - (i k j))."""
    if n <= 2:
        raise ValueError("needs n > 2")
    fs = field_spec
    group = symmetric_group(n)
    lam_table: dict[tuple[GroupElement, int], AlgebraElement] = {}
    for g in group:
        for i in range(1, n + 1):
            c = fs(g(i) - i) * a
            if c:
                lam_table[(g, i)] = AlgebraElement.term(fs, g, c)
    kap_table: dict[tuple[int, int], AlgebraElement] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coeffs: dict[GroupElement, Scalar] = {}
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                coeffs[Perm.from_cycles(n, (i, j, k))] = b
                coeffs[Perm.from_cycles(n, (i, k, j))] = -b
            val = AlgebraElement(fs, coeffs)
            if not val.is_zero():
                kap_table[(i, j)] = val
    return LambdaParam(group, fs, lam_table), KappaParam(fs, n, kap_table)


def golden_rule(n: int, field_spec: FieldSpec, scale: Scalar | None = None) -> tuple[LambdaParam, KappaParam]:
    """lambda(g, v_i) = (g(i) - i) g with kappa = 0, optionally scaled."""
    s = scale if scale is not None else field_spec.one
    return two_param_family(s, field_spec.zero, n, field_spec)


def bump_c(mu: MuParams, delta: Scalar) -> MuParams:
    """Shift the c-parameter; every kappa block coefficient gains delta."""
    return MuParams(mu.field, mu.n, mu.a, mu.b, mu.c + delta)


def scale_params(c: Scalar, lam: LambdaParam, kappa: KappaParam) -> tuple[LambdaParam, KappaParam]:
    """(lambda, kappa) -> (c lambda, c^2 kappa), the PBW-preserving scaling."""
    return lam.scale(c), kappa.scale(c * c)


# -- mu JSON ------------------------------------------------------------------


def mu_to_json(mu: MuParams):
    return {
        "characteristic": mu.field.characteristic,
        "n": mu.n,
        "a": {f"{i},{j}": str(v) for (i, j), v in sorted(mu.a.items())},
        "b": [str(x) for x in mu.b],
        "c": str(mu.c),
    }


def mu_from_json(data, field_spec: FieldSpec | None = None, n: int | None = None) -> MuParams:
    if field_spec is None:
        p = int(data["characteristic"])
        field_spec = FieldSpec(p, allow_char2=(p == 2))
    if n is None:
        n = int(data["n"]) if "n" in data else len(data["b"]) + 1
    a: dict[tuple[int, int], Scalar] = {}
    for key, sval in data.get("a", {}).items():
        i_s, j_s = key.split(",")
        a[(int(i_s), int(j_s))] = field_spec.parse(sval)
    b = tuple(field_spec.parse(s) for s in data["b"])
    c = field_spec.parse(data["c"])
    return MuParams(field_spec, n, a, b, c)
