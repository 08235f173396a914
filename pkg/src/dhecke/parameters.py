"""Parameter functions for deformations of S(V)#G.

kappa : V (x) V -> FG   (alternating; stored on index pairs i < j)
lambda: FG (x) V -> FG  (stored on (group element, basis index); absent
                         entries read as zero)

Also here: the conjugation-twisted group action on parameters, the
alpha/beta scalar extraction for the symmetric group, seeded random
parameter generation, and the JSON parameter-file format shared by the
CLI and the fixture corpus.
"""

from __future__ import annotations

import random
from typing import Sequence

from .groups import GroupElement, GroupTable, MatrixElement, Perm, enumerate_group, symmetric_group
from .group_algebra import AlgebraElement
from .linalg import basis_vector
from .scalars import CharTwoUnsupported, FieldSpec, Scalar


class KappaParam:
    """Alternating bilinear map V x V -> FG, tabulated on pairs i < j."""

    def __init__(self, field_spec: FieldSpec, n: int, table: dict[tuple[int, int], AlgebraElement] | None = None) -> None:
        self.field = field_spec
        self.n = n
        self.table: dict[tuple[int, int], AlgebraElement] = {}
        if table:
            for (i, j), val in table.items():
                if not 1 <= i < j <= n:
                    raise ValueError(f"kappa table key must have 1 <= i < j <= n, got {(i, j)}")
                if not val.is_zero():
                    self.table[(i, j)] = val

    def at(self, i: int, j: int) -> AlgebraElement:
        """kappa(v_i, v_j) with the alternating convention built in."""
        if i == j:
            return AlgebraElement.zero(self.field)
        if i < j:
            return self.table.get((i, j), AlgebraElement.zero(self.field))
        return -self.table.get((j, i), AlgebraElement.zero(self.field))

    def coefficient(self, g: GroupElement, i: int, j: int) -> Scalar:
        return self.at(i, j).coefficient(g)

    def eval(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> AlgebraElement:
        """Bilinear alternating extension to arbitrary coefficient vectors."""
        out = AlgebraElement.zero(self.field)
        for (i, j), val in self.table.items():
            c = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]
            if c:
                out = out + val.scale(c)
        return out

    def support(self) -> list[GroupElement]:
        seen: set[GroupElement] = set()
        for val in self.table.values():
            seen.update(val.terms)
        return sorted(seen, key=lambda g: g.sort_key())

    def is_zero(self) -> bool:
        return not self.table

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KappaParam)
            and self.field == other.field
            and self.n == other.n
            and self.table == other.table
        )

    def scale(self, c: Scalar) -> "KappaParam":
        return KappaParam(self.field, self.n, {k: v.scale(c) for k, v in self.table.items()})


class LambdaParam:
    """Bilinear map FG x V -> FG tabulated on (group element, basis index)."""

    def __init__(
        self,
        group: GroupTable,
        field_spec: FieldSpec,
        table: dict[tuple[GroupElement, int], AlgebraElement] | None = None,
    ) -> None:
        self.group = group
        self.field = field_spec
        self.n = group.n
        self.table: dict[tuple[GroupElement, int], AlgebraElement] = {}
        if table:
            for (g, i), val in table.items():
                if g not in group:
                    raise ValueError(f"lambda table key {g!r} is not in the enumerated group")
                if not 1 <= i <= self.n:
                    raise ValueError(f"basis index {i} out of range")
                if not val.is_zero():
                    self.table[(g, i)] = val

    def at(self, g: GroupElement, i: int) -> AlgebraElement:
        return self.table.get((g, i), AlgebraElement.zero(self.field))

    def coefficient(self, h: GroupElement, g: GroupElement, i: int) -> Scalar:
        """The scalar lambda_h(g, v_i)."""
        return self.at(g, i).coefficient(h)

    def eval_vector(self, g: GroupElement, v: Sequence[Scalar]) -> AlgebraElement:
        out = AlgebraElement.zero(self.field)
        for i in range(1, self.n + 1):
            c = v[i - 1]
            if c:
                out = out + self.at(g, i).scale(c)
        return out

    def eval(self, x: AlgebraElement, v: Sequence[Scalar]) -> AlgebraElement:
        """Bilinear extension with an FG-valued first slot."""
        out = AlgebraElement.zero(self.field)
        for g, c in x.terms.items():
            out = out + self.eval_vector(g, v).scale(c)
        return out

    def is_zero(self) -> bool:
        return not self.table

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LambdaParam)
            and self.field == other.field
            and self.group.elements == other.group.elements
            and self.table == other.table
        )

    def scale(self, c: Scalar) -> "LambdaParam":
        return LambdaParam(self.group, self.field, {k: v.scale(c) for k, v in self.table.items()})

    @staticmethod
    def zero(group: GroupTable, field_spec: FieldSpec) -> "LambdaParam":
        return LambdaParam(group, field_spec)


# -- group action on parameters ---------------------------------------------


def act_on_kappa(h: GroupElement, kappa: KappaParam) -> KappaParam:
    """(^h kappa)(u, v) = ^h(kappa(^{h^-1} u, ^{h^-1} v)), conjugating values."""
    fs = kappa.field
    n = kappa.n
    hinv = h.inverse()
    table: dict[tuple[int, int], AlgebraElement] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            u = hinv.act_on_vector(basis_vector(fs, n, i))
            v = hinv.act_on_vector(basis_vector(fs, n, j))
            val = kappa.eval(u, v).conjugate_by(h)
            if not val.is_zero():
                table[(i, j)] = val
    return KappaParam(fs, n, table)


def act_on_lambda(h: GroupElement, lam: LambdaParam) -> LambdaParam:
    """(^h lambda)(g, v) = ^h(lambda(h^-1 g h, ^{h^-1} v))."""
    fs = lam.field
    n = lam.n
    hinv = h.inverse()
    table: dict[tuple[GroupElement, int], AlgebraElement] = {}
    for g in lam.group:
        conj = hinv * g * h
        for i in range(1, n + 1):
            v = hinv.act_on_vector(basis_vector(fs, n, i))
            val = lam.eval_vector(conj, v).conjugate_by(h)
            if not val.is_zero():
                table[(g, i)] = val
    return LambdaParam(lam.group, fs, table)


# -- alpha/beta extraction (symmetric group, char != 2) ----------------------


class AlphaBeta:
    """The scalars determining lambda on a symmetric group.

    alpha is antisymmetric (alpha_ji = -alpha_ij); beta indices are read
    modulo n with representative in {1..n}.
    """

    def __init__(self, field_spec: FieldSpec, n: int, alpha: dict[tuple[int, int], Scalar], beta: Sequence[Scalar]) -> None:
        self.field = field_spec
        self.n = n
        self.alpha = dict(alpha)
        self.beta = tuple(beta)
        if len(self.beta) != n:
            raise ValueError("need one beta per index 1..n")

    def alpha_at(self, i: int, j: int) -> Scalar:
        if i == j:
            raise ValueError("alpha is defined for distinct indices")
        if i < j:
            return self.alpha.get((i, j), self.field.zero)
        return -self.alpha.get((j, i), self.field.zero)

    def beta_at(self, k: int) -> Scalar:
        return self.beta[(k - 1) % self.n]

    def alpha_triple(self, i: int, j: int, k: int) -> Scalar:
        a = self.alpha_at
        return a(i, j) * a(j, k) + a(j, k) * a(k, i) + a(k, i) * a(i, j)

    def alpha_under(self, g: Perm, i: int, j: int) -> Scalar:
        """^g alpha_ij = alpha_{g(i) g(j)}."""
        return self.alpha_at(g(i), g(j))


def extract_alpha_beta(lam: LambdaParam) -> AlphaBeta:
    """Read off alpha_ij = (1/4) lambda_1((i j), v_i - v_j) and the betas."""
    fs = lam.field
    n = lam.n
    if fs.characteristic == 2:
        raise CharTwoUnsupported("alpha/beta extraction divides by 4 and 2")
    if n <= 2:
        raise ValueError("alpha/beta extraction needs n > 2")
    if not lam.group.is_permutation_group():
        raise ValueError("alpha/beta extraction needs a permutation group")
    quarter = fs.inverse_of_integer(4)
    half = fs.inverse_of_integer(2)
    ident = lam.group.identity
    alpha: dict[tuple[int, int], Scalar] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            t = Perm.transposition(n, i, j)
            c = (lam.at(t, i) - lam.at(t, j)).coefficient(ident)
            val = quarter * c
            if val:
                alpha[(i, j)] = val
    beta = []
    for k in range(1, n + 1):
        s_k = lam.group.adjacent_transposition(k)
        kk = (k % n) + 1  # k+1 modulo n, in {1..n}
        c = (lam.at(s_k, k) - lam.at(s_k, kk)).coefficient(s_k)
        beta.append(half * c)
    return AlphaBeta(fs, n, alpha, beta)


# -- random parameters -------------------------------------------------------


def _random_scalar(rng: random.Random, fs: FieldSpec, nonzero: bool = False) -> Scalar:
    if fs.characteristic:
        lo = 1 if nonzero else 0
        return fs(rng.randrange(lo, fs.characteristic))
    while True:
        s = fs(rng.randint(-5, 5))
        if s or not nonzero:
            return s


def _random_algebra_element(rng: random.Random, fs: FieldSpec, group: GroupTable, max_terms: int) -> AlgebraElement:
    k = rng.randint(0, max_terms)
    acc: dict[GroupElement, Scalar] = {}
    for _ in range(k):
        g = group.elements[rng.randrange(len(group))]
        acc[g] = _random_scalar(rng, fs, nonzero=True)
    return AlgebraElement(fs, acc)


def random_params(
    n: int, field_spec: FieldSpec, seed: int, profile: str = "general"
) -> tuple[LambdaParam, KappaParam]:
    """Deterministic pseudo-random (lambda, kappa) for the symmetric group.

    Profiles: "general" draws sparse unconstrained tables; "mu-family"
    draws a random classification tuple and expands it (always PBW);
    "perturbed-mu" additionally bumps one random table entry by a nonzero
    delta (never PBW for n > 2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if profile not in ("general", "mu-family", "perturbed-mu"):
        raise ValueError(f"unknown profile {profile!r}")
    rng = random.Random(f"{profile}|n={n}|p={field_spec.characteristic}|seed={seed}")
    group = symmetric_group(n)
    if profile == "general":
        lam_table: dict[tuple[GroupElement, int], AlgebraElement] = {}
        for g in group:
            for i in range(1, n + 1):
                if rng.random() < 0.5:
                    lam_table[(g, i)] = _random_algebra_element(rng, field_spec, group, 2)
        kap_table: dict[tuple[int, int], AlgebraElement] = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.random() < 0.5:
                    kap_table[(i, j)] = _random_algebra_element(rng, field_spec, group, 2)
        return LambdaParam(group, field_spec, lam_table), KappaParam(field_spec, n, kap_table)

    from .classify import MuParams, build_H_mu

    a = {
        (i, j): _random_scalar(rng, field_spec)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    b = tuple(_random_scalar(rng, field_spec) for _ in range(n - 1))
    c = _random_scalar(rng, field_spec)
    mu = MuParams(field_spec, n, a, b, c)
    lam, kappa = build_H_mu(mu)
    if profile == "mu-family":
        return lam, kappa

    delta = _random_scalar(rng, field_spec, nonzero=True)
    target = group.elements[rng.randrange(len(group))]
    if rng.random() < 0.5:
        g = group.elements[rng.randrange(len(group))]
        i = rng.randint(1, n)
        bump = AlgebraElement.term(field_spec, target, delta)
        lam_table = dict(lam.table)
        lam_table[(g, i)] = lam.at(g, i) + bump
        return LambdaParam(group, field_spec, lam_table), kappa
    i = rng.randint(1, n - 1)
    j = rng.randint(i + 1, n)
    bump = AlgebraElement.term(field_spec, target, delta)
    kap_table = dict(kappa.table)
    kap_table[(i, j)] = kappa.at(i, j) + bump
    return lam, KappaParam(field_spec, n, kap_table)


# -- JSON parameter files -----------------------------------------------------


def element_to_json(g: GroupElement):
    if isinstance(g, Perm):
        return list(g.images)
    return [str(s) for row in g.rows for s in row]


def element_from_json(data, group: GroupTable) -> GroupElement:
    if group.is_permutation_group():
        g: GroupElement = Perm([int(x) for x in data])
    else:
        n = group.n
        if len(data) != n * n:
            raise ValueError(f"matrix entry list must have {n * n} entries")
        fs = group.field
        rows = [[fs.parse(str(data[r * n + c])) for c in range(n)] for r in range(n)]
        g = MatrixElement(fs, rows)
    if g not in group:
        raise ValueError(f"element {g!r} is not in the declared group")
    return g


def algebra_element_to_json(x: AlgebraElement):
    return [
        {"g": element_to_json(g), "coeff": str(c)}
        for g, c in sorted(x.terms.items(), key=lambda t: t[0].sort_key())
    ]


def algebra_element_from_json(data, group: GroupTable, fs: FieldSpec) -> AlgebraElement:
    pairs = [(element_from_json(t["g"], group), fs.parse(t["coeff"])) for t in data]
    return AlgebraElement.from_pairs(fs, pairs)


def group_to_json(group: GroupTable, generators: Sequence[GroupElement] | None = None):
    if group.is_symmetric_group():
        return {"type": "symmetric_permutation", "n": group.n}
    gens = list(generators) if generators is not None else list(group.elements)
    return {"type": "matrix", "generators": [element_to_json(g) for g in gens]}


def group_from_json(data, fs: FieldSpec, n: int) -> GroupTable:
    kind = data.get("type")
    if kind == "symmetric_permutation":
        if int(data["n"]) != n:
            raise ValueError("group n disagrees with the file n")
        return symmetric_group(n)
    if kind == "matrix":
        gens = []
        for flat in data["generators"]:
            if len(flat) != n * n:
                raise ValueError(f"matrix generator must have {n * n} entries")
            rows = [[fs.parse(str(flat[r * n + c])) for c in range(n)] for r in range(n)]
            gens.append(MatrixElement(fs, rows))
        return enumerate_group(gens, field_spec=fs)
    raise ValueError(f"unknown group type {kind!r}")


def params_to_json(lam: LambdaParam, kappa: KappaParam, generators: Sequence[GroupElement] | None = None):
    """Full-table parameter file; entries are explicit even when zero."""
    group = lam.group
    n = lam.n
    lam_entries = []
    for g in group:
        for i in range(1, n + 1):
            lam_entries.append(
                {"g": element_to_json(g), "i": i, "value": algebra_element_to_json(lam.at(g, i))}
            )
    kap_entries = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            kap_entries.append({"i": i, "j": j, "value": algebra_element_to_json(kappa.at(i, j))})
    return {
        "characteristic": lam.field.characteristic,
        "n": n,
        "group": group_to_json(group, generators),
        "lambda": lam_entries,
        "kappa": kap_entries,
    }


def params_from_json(data) -> tuple[LambdaParam, KappaParam]:
    p = int(data["characteristic"])
    # A file that declares characteristic 2 is an explicit request for it;
    # the five-condition checker still refuses such inputs on its own.
    fs = FieldSpec(p, allow_char2=(p == 2))
    n = int(data["n"])
    group = group_from_json(data["group"], fs, n)
    lam_table: dict[tuple[GroupElement, int], AlgebraElement] = {}
    for entry in data.get("lambda", []):
        g = element_from_json(entry["g"], group)
        i = int(entry["i"])
        val = algebra_element_from_json(entry["value"], group, fs)
        if not val.is_zero():
            if (g, i) in lam_table:
                raise ValueError(f"duplicate lambda entry for {(g, i)}")
            lam_table[(g, i)] = val
    kap_table: dict[tuple[int, int], AlgebraElement] = {}
    for entry in data.get("kappa", []):
        i, j = int(entry["i"]), int(entry["j"])
        if not i < j:
            raise ValueError(f"kappa entries require i < j, got {(i, j)}")
        val = algebra_element_from_json(entry["value"], group, fs)
        if not val.is_zero():
            if (i, j) in kap_table:
                raise ValueError(f"duplicate kappa entry for {(i, j)}")
            kap_table[(i, j)] = val
    return LambdaParam(group, fs, lam_table), KappaParam(fs, n, kap_table)
