"""Rewriting engine for the filtered quadratic algebras H_{lambda,kappa}.

Words are tuples mixing basis-vector indices (ints, 1-based) and group
elements.  Three oriented rule families:

  R1:  g . h          ->  (gh)
  R2:  g . v_i        ->  (^g v_i expanded) . g  +  lambda(g, v_i)
  R3:  v_j . v_i      ->  v_i . v_j  -  kappa(v_i, v_j)        (j > i)

Fully reduced words are nondecreasing runs of variables followed by at
most one group token, i.e. exactly the monomials v_1^{e_1}...v_n^{e_n} g.

Termination: each application strictly decreases the ranking
(v-degree, group-tokens-left-of-a-variable, variable inversions,
group-token count) lexicographically -- R2's main term may raise the
inversion count, which is why the disorder count outranks it.  The
correction terms of R2/R3 drop the v-degree outright.

Confluence of all overlap ambiguities is, by the diamond lemma, exactly
the PBW property; a failed overlap is a verdict, never repaired.
No division appears anywhere, so characteristic 2 is fully supported.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Union

from .groups import GroupElement, MatrixElement, Perm
from .group_algebra import AlgebraElement
from .parameters import KappaParam, LambdaParam
from .scalars import FieldSpec, Scalar

Token = Union[int, Perm, MatrixElement]
Word = tuple[Token, ...]
NCSum = dict[Word, Scalar]


class StepBudgetExceeded(RuntimeError):
    """Reduction ran past the step budget (termination bug guard)."""


class NotConfluent(RuntimeError):
    """An operation that requires a confluent system was called without one."""


DEFAULT_STEP_BUDGET = 10**7


@dataclass(frozen=True)
class NormalMonomial:
    """A PBW monomial v_1^{e_1}...v_n^{e_n} g."""

    exponents: tuple[int, ...]
    g: GroupElement

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def sort_key(self):
        """Descending degree, then exponents, then the group part."""
        return (-self.degree, self.exponents, self.g.sort_key())


@dataclass(frozen=True)
class OverlapWitness:
    """An overlap ambiguity whose two one-step reductions disagree."""

    family: str
    word: Word
    difference: tuple[tuple[NormalMonomial, Scalar], ...]


def _is_var(tok: Token) -> bool:
    return isinstance(tok, int)


def ranking(word: Word) -> tuple[int, int, int, int]:
    """Strictly decreasing under every rule application; see module docstring."""
    degree = 0
    disorder = 0
    group_tokens = 0
    inversions = 0
    vars_seen: list[int] = []
    for tok in word:
        if _is_var(tok):
            degree += 1
            disorder += group_tokens
            inversions += sum(1 for w in vars_seen if w > tok)
            vars_seen.append(tok)
        else:
            group_tokens += 1
    return (degree, disorder, inversions, group_tokens)


class RewriteSystem:
    """The oriented presentation of H_{lambda,kappa} over an enumerated group."""

    def __init__(self, lam: LambdaParam, kappa: KappaParam, step_budget: int = DEFAULT_STEP_BUDGET) -> None:
        if lam.field != kappa.field or lam.n != kappa.n:
            raise ValueError("lambda and kappa disagree on field or dimension")
        self.lam = lam
        self.kappa = kappa
        self.group = lam.group
        self.field: FieldSpec = lam.field
        self.n = lam.n
        self.step_budget = step_budget
        self._confluent: Optional[bool] = None

    # -- rules ---------------------------------------------------------------

    def _find_redex(self, word: Word, strategy: str) -> Optional[int]:
        rng = range(len(word) - 1)
        if strategy == "rightmost":
            rng = range(len(word) - 2, -1, -1)
        for pos in rng:
            a, b = word[pos], word[pos + 1]
            if not _is_var(a):
                return pos  # group followed by anything rewrites (R1/R2)
            if _is_var(b) and a > b:
                return pos  # R3
        return None

    def _apply_rule(self, word: Word, pos: int) -> list[tuple[Word, Scalar]]:
        pre, post = word[:pos], word[pos + 2 :]
        a, b = word[pos], word[pos + 1]
        one = self.field.one
        if not _is_var(a) and not _is_var(b):
            return [(pre + (a * b,) + post, one)]
        if not _is_var(a):
            g, i = a, b
            out: list[tuple[Word, Scalar]] = []
            if isinstance(g, Perm):
                out.append((pre + (g(i), g) + post, one))
            else:
                for r in range(1, self.n + 1):
                    c = g.rows[r - 1][i - 1]
                    if c:
                        out.append((pre + (r, g) + post, c))
            for h, c in self.lam.at(g, i).terms.items():
                out.append((pre + (h,) + post, c))
            return out
        j, i = a, b
        out = [(pre + (i, j) + post, one)]
        for h, c in self.kappa.at(i, j).terms.items():
            out.append((pre + (h,) + post, -c))
        return out

    # -- reduction -------------------------------------------------------------

    def normal_form(
        self, x: Union[NCSum, Iterable[tuple[Word, Scalar]]], strategy: str = "leftmost"
    ) -> dict[NormalMonomial, Scalar]:
        """Fully reduce a noncommutative sum to PBW monomials."""
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        items = x.items() if isinstance(x, dict) else x
        stack: list[tuple[Word, Scalar]] = [(w, c) for w, c in items if c]
        out: dict[NormalMonomial, Scalar] = {}
        steps = 0
        while stack:
            word, coeff = stack.pop()
            pos = self._find_redex(word, strategy)
            if pos is None:
                mono = self._canonical(word)
                prev = out.get(mono)
                total = coeff if prev is None else prev + coeff
                if total:
                    out[mono] = total
                elif mono in out:
                    del out[mono]
                continue
            steps += 1
            if steps > self.step_budget:
                raise StepBudgetExceeded(f"exceeded {self.step_budget} reduction steps")
            for new_word, factor in self._apply_rule(word, pos):
                c = coeff * factor
                if c:
                    stack.append((new_word, c))
        return out

    def _canonical(self, word: Word) -> NormalMonomial:
        exps = [0] * self.n
        g: Optional[GroupElement] = None
        for tok in word:
            if _is_var(tok):
                exps[tok - 1] += 1
            else:
                g = tok
        return NormalMonomial(tuple(exps), g if g is not None else self.group.identity)

    # -- confluence --------------------------------------------------------------

    def overlap_words(self) -> list[tuple[str, Word]]:
        """All overlap ambiguities, in deterministic order.

        Families: (g, h, v_i); (g, v_j, v_i) with j > i; (v_k, v_j, v_i)
        with k > j > i.  Triple-group words (g, h, k) are resolved by group
        associativity -- both parses collapse to the product ghk -- and are
        skipped.
        """
        out: list[tuple[str, Word]] = []
        for g in self.group:
            for h in self.group:
                for i in range(1, self.n + 1):
                    out.append(("group-group-var", (g, h, i)))
        for g in self.group:
            for j in range(self.n, 0, -1):
                for i in range(j - 1, 0, -1):
                    out.append(("group-var-var", (g, j, i)))
        for k in range(self.n, 0, -1):
            for j in range(k - 1, 0, -1):
                for i in range(j - 1, 0, -1):
                    out.append(("var-var-var", (k, j, i)))
        return out

    def check_confluence(self) -> tuple[bool, Optional[OverlapWitness]]:
        """Resolve every overlap both ways; pass iff all pairs agree."""
        for family, word in self.overlap_words():
            left = self.normal_form(self._apply_rule(word, 0))
            right = self.normal_form(self._apply_rule(word, 1))
            if left != right:
                diff: dict[NormalMonomial, Scalar] = dict(left)
                for mono, c in right.items():
                    prev = diff.get(mono)
                    total = -c if prev is None else prev - c
                    if total:
                        diff[mono] = total
                    elif mono in diff:
                        del diff[mono]
                witness = OverlapWitness(
                    family,
                    word,
                    tuple(sorted(diff.items(), key=lambda t: t[0].sort_key())),
                )
                self._confluent = False
                return False, witness
        self._confluent = True
        return True, None

    def is_confluent(self) -> bool:
        if self._confluent is None:
            self.check_confluence()
        return bool(self._confluent)

    def filtered_dimension(self, m: int) -> int:
        """Number of PBW monomials of v-degree <= m: |G| * sum C(n+k-1, k)."""
        if not self.is_confluent():
            raise NotConfluent("filtered dimension is only meaningful for confluent systems")
        return len(self.group) * sum(comb(self.n + k - 1, k) for k in range(m + 1))


# -- sums, parsing, printing ---------------------------------------------------


def nc_mul(field_spec: FieldSpec, x: NCSum, y: NCSum) -> NCSum:
    out: NCSum = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            w = wx + wy
            c = cx * cy
            prev = out.get(w)
            total = c if prev is None else prev + c
            if total:
                out[w] = total
            elif w in out:
                del out[w]
    return out


def nc_add(x: NCSum, y: NCSum) -> NCSum:
    out = dict(x)
    for w, c in y.items():
        prev = out.get(w)
        total = c if prev is None else prev + c
        if total:
            out[w] = total
        elif w in out:
            del out[w]
    return out


def nc_neg(x: NCSum) -> NCSum:
    return {w: -c for w, c in x.items()}


def nc_sub(x: NCSum, y: NCSum) -> NCSum:
    return nc_add(x, nc_neg(y))


def from_algebra_element(x: AlgebraElement) -> NCSum:
    return {(g,): c for g, c in x.terms.items()}


_VAR_RE = re.compile(r"^v(\d+)(?:\^(\d+))?$")
_PERM_RE = re.compile(r"^g\[([\d,]+)\]$")
_MAT_RE = re.compile(r"^M\[\[(.+)\]\]$")
_SCALAR_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_word_sum(text: str, field_spec: FieldSpec, n: int) -> NCSum:
    """Parse CLI word syntax into a noncommutative sum.

    Tokens: "v3" (basis vector), "g[2,1,3]" (permutation by images),
    "M[[1,1],[0,1]]" (matrix, row lists).  Terms are "+"/"-"-separated
    words of whitespace- or interpunct-separated tokens with an optional
    leading scalar, e.g. "2 v1 v2 - g[2,1,3] v1".
    """
    text = text.replace("·", " ").strip()
    if not text:
        raise ValueError("empty word expression")
    terms: list[tuple[str, str]] = []
    sign = "+"
    buf: list[str] = []
    depth = 0
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch in "+-" and depth == 0:
            chunk = "".join(buf).strip()
            if chunk:
                terms.append((sign, chunk))
            elif terms or sign != "+":
                raise ValueError("dangling sign in word expression")
            sign = ch
            buf = []
        else:
            buf.append(ch)
    chunk = "".join(buf).strip()
    if not chunk:
        raise ValueError("dangling sign in word expression")
    terms.append((sign, chunk))

    out: NCSum = {}
    for sgn, chunk in terms:
        coeff = field_spec.one if sgn == "+" else -field_spec.one
        word: list[Token] = []
        for tok in chunk.split():
            m = _VAR_RE.match(tok)
            if m:
                i = int(m.group(1))
                if not 1 <= i <= n:
                    raise ValueError(f"variable index out of range: {tok}")
                word.extend([i] * int(m.group(2) or 1))
                continue
            m = _PERM_RE.match(tok)
            if m:
                word.append(Perm([int(x) for x in m.group(1).split(",")]))
                continue
            m = _MAT_RE.match(tok)
            if m:
                rows = [
                    [field_spec.parse(entry) for entry in row.split(",")]
                    for row in m.group(1).split("],[")
                ]
                word.append(MatrixElement(field_spec, rows))
                continue
            if _SCALAR_RE.match(tok):
                if word:
                    raise ValueError(f"scalar {tok} must prefix its word")
                coeff = coeff * field_spec.parse(tok)
                continue
            raise ValueError(f"cannot parse token {tok!r}")
        w = tuple(word)
        prev = out.get(w)
        total = coeff if prev is None else prev + coeff
        if total:
            out[w] = total
        elif w in out:
            del out[w]
    return out


def format_normal_form(nf: dict[NormalMonomial, Scalar]) -> str:
    """Deterministic PBW-monomial rendering, re-parseable by parse_word_sum."""
    if not nf:
        return "0"
    parts: list[str] = []
    for idx, (mono, coeff) in enumerate(sorted(nf.items(), key=lambda t: t[0].sort_key())):
        factors = [
            f"v{i}" if e == 1 else f"v{i}^{e}"
            for i, e in enumerate(mono.exponents, start=1)
            if e
        ]
        factors.append(repr(mono.g))
        body = "·".join(factors)
        cs = str(coeff)
        neg = cs.startswith("-")
        if neg:
            cs = str(-coeff)
        term = body if cs == "1" else f"{cs}·{body}"
        if idx == 0:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)
