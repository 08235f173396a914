"""The five-condition PBW test with per-condition failure witnesses.

Each condition is multilinear in every vector slot, so quantification over
basis vectors suffices (see tests/test_pbw.py for the multilinearity
check).  Conditions (3) and (4) are equalities of coefficient vectors in V;
the rest live in FG.  Witnesses are the first failure in deterministic
iteration order: group elements in table order, then ascending indices.

Characteristic 2 is refused outright here -- the condition set divides by
nothing, but its verdict is only backed by theory away from 2; callers are
directed to the rewrite/confluence oracle instead.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Union

from .groups import GroupElement, Perm
from .group_algebra import AlgebraElement
from .linalg import (
    Vector,
    basis_vector,
    is_zero_vector,
    nullspace,
    same_subspace,
    vec_add,
    vec_scale,
    vec_sub,
)
from .parameters import (
    KappaParam,
    LambdaParam,
    algebra_element_to_json,
    element_to_json,
    extract_alpha_beta,
)
from .scalars import CharTwoUnsupported


@dataclass
class Witness:
    """A concrete quantifier instance at which a condition fails."""

    condition: int
    g: Optional[GroupElement]
    h: Optional[GroupElement]
    indices: tuple[int, ...]
    discrepancy: Union[AlgebraElement, Vector]

    def to_json(self):
        if isinstance(self.discrepancy, AlgebraElement):
            disc = algebra_element_to_json(self.discrepancy)
        else:
            disc = [str(s) for s in self.discrepancy]
        return {
            "condition": self.condition,
            "g": element_to_json(self.g) if self.g is not None else None,
            "h": element_to_json(self.h) if self.h is not None else None,
            "indices": list(self.indices),
            "discrepancy": disc,
        }


@dataclass
class ConditionReport:
    verdicts: dict[int, bool] = field(default_factory=dict)
    witnesses: dict[int, Witness] = field(default_factory=dict)
    timing_ms: float = 0.0

    @property
    def pbw(self) -> bool:
        return all(self.verdicts.get(k, False) for k in range(1, 6))

    def first_witness(self) -> Optional[Witness]:
        for k in range(1, 6):
            if k in self.witnesses:
                return self.witnesses[k]
        return None

    def to_json(self):
        w = self.first_witness()
        return {
            "pbw": self.pbw,
            "conditions": {str(k): self.verdicts[k] for k in sorted(self.verdicts)},
            "witness": w.to_json() if w else None,
            "timing_ms": self.timing_ms,
        }


def _refuse_char2(lam: LambdaParam) -> None:
    if lam.field.characteristic == 2:
        raise CharTwoUnsupported(
            "the five-condition test is not available in characteristic 2; "
            "use the rewrite/confluence oracle (method=confluence)"
        )


def _cond1(lam: LambdaParam, kappa: KappaParam) -> Optional[Witness]:
    fs = lam.field
    n = lam.n
    perm_case = lam.group.is_permutation_group()
    for g in lam.group:
        for h in lam.group:
            gh = lam.group.product(g, h)
            for i in range(1, n + 1):
                if perm_case:
                    lg = lam.at(g, h(i))
                else:
                    lg = lam.eval_vector(g, h.act_on_vector(basis_vector(fs, n, i)))
                rhs = lg.mul_right(h) + lam.at(h, i).mul_left(g)
                lhs = lam.at(gh, i)
                if lhs != rhs:
                    return Witness(1, g, h, (i,), lhs - rhs)
    return None


def _cond2(lam: LambdaParam, kappa: KappaParam) -> Optional[Witness]:
    fs = lam.field
    n = lam.n
    perm_case = lam.group.is_permutation_group()
    for g in lam.group:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if perm_case:
                    twisted = kappa.at(g(i), g(j))
                else:
                    gu = g.act_on_vector(basis_vector(fs, n, i))
                    gv = g.act_on_vector(basis_vector(fs, n, j))
                    twisted = kappa.eval(gu, gv)
                lhs = twisted.mul_right(g) - kappa.at(i, j).mul_left(g)
                rhs = lam.eval(lam.at(g, j), basis_vector(fs, n, i)) - lam.eval(
                    lam.at(g, i), basis_vector(fs, n, j)
                )
                diff = lhs - rhs
                if not diff.is_zero():
                    return Witness(2, g, None, (i, j), diff)
    return None


def _cond3(lam: LambdaParam, kappa: KappaParam) -> Optional[Witness]:
    fs = lam.field
    n = lam.n
    for g in lam.group:
        basis_g = [g.act_on_vector(basis_vector(fs, n, i)) for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                supp = set(lam.at(g, i).terms) | set(lam.at(g, j).terms)
                if not supp:
                    continue
                for h in lam.group:
                    if h not in supp:
                        continue
                    cu = lam.coefficient(h, g, i)
                    cv = lam.coefficient(h, g, j)
                    hu = h.act_on_vector(basis_vector(fs, n, i))
                    hv = h.act_on_vector(basis_vector(fs, n, j))
                    lhs = vec_scale(cv, vec_sub(hu, basis_g[i - 1]))
                    rhs = vec_scale(cu, vec_sub(hv, basis_g[j - 1]))
                    diff = vec_sub(lhs, rhs)
                    if not is_zero_vector(diff):
                        return Witness(3, g, h, (i, j), diff)
    return None


def _cond4(lam: LambdaParam, kappa: KappaParam) -> Optional[Witness]:
    fs = lam.field
    n = lam.n
    support = set(kappa.support())
    for g in lam.group:
        if g not in support:
            continue
        moved = [
            vec_sub(g.act_on_vector(basis_vector(fs, n, i)), basis_vector(fs, n, i))
            for i in range(1, n + 1)
        ]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    total = vec_add(
                        vec_add(
                            vec_scale(kappa.coefficient(g, i, j), moved[k - 1]),
                            vec_scale(kappa.coefficient(g, j, k), moved[i - 1]),
                        ),
                        vec_scale(kappa.coefficient(g, k, i), moved[j - 1]),
                    )
                    if not is_zero_vector(total):
                        return Witness(4, g, None, (i, j, k), total)
    return None


def _cond5(lam: LambdaParam, kappa: KappaParam) -> Optional[Witness]:
    fs = lam.field
    n = lam.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                total = (
                    lam.eval(kappa.at(i, j), basis_vector(fs, n, k))
                    + lam.eval(kappa.at(j, k), basis_vector(fs, n, i))
                    + lam.eval(kappa.at(k, i), basis_vector(fs, n, j))
                )
                if not total.is_zero():
                    return Witness(5, None, None, (i, j, k), total)
    return None


_CONDITIONS = {1: _cond1, 2: _cond2, 3: _cond3, 4: _cond4, 5: _cond5}


def check_condition(k: int, lam: LambdaParam, kappa: KappaParam) -> tuple[bool, Optional[Witness]]:
    if k not in _CONDITIONS:
        raise ValueError(f"condition number must be 1..5, got {k}")
    _refuse_char2(lam)
    w = _CONDITIONS[k](lam, kappa)
    return w is None, w


def check_pbw(lam: LambdaParam, kappa: KappaParam) -> ConditionReport:
    """Conjunction of the five conditions; the verdict is exact."""
    _refuse_char2(lam)
    t0 = time.perf_counter()
    report = ConditionReport()
    for k in range(1, 6):
        ok, w = check_condition(k, lam, kappa)
        report.verdicts[k] = ok
        if w is not None:
            report.witnesses[k] = w
    report.timing_ms = (time.perf_counter() - t0) * 1000.0
    return report


# -- diagnostics on PBW-true inputs -------------------------------------------


def diagnose_kappa_support(lam: LambdaParam, kappa: KappaParam) -> tuple[bool, list[str]]:
    """Support constraints every PBW kappa must satisfy.

    Each g with kappa_g not identically zero acts as the identity, or is a
    reflection vanishing on its fixed space, or is a bireflection whose
    kappa-kernel is exactly the fixed space.  For symmetric groups the
    support must consist of 3-cycles.
    """
    fs = kappa.field
    n = kappa.n
    problems: list[str] = []
    for g in kappa.support():
        codim = g.fixed_space_codim()
        fixed = g.fixed_space_basis(fs)
        if codim == 0:
            continue
        if codim == 1:
            for a in range(len(fixed)):
                for b in range(len(fixed)):
                    coeff = _kappa_on_vectors(kappa, g, fixed[a], fixed[b])
                    if coeff:
                        problems.append(f"reflection {g!r} has nonzero kappa_g on its fixed space")
        elif codim == 2:
            rows = [
                [kappa.coefficient(g, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)
            ]
            ker = nullspace(fs, rows, n)
            if not same_subspace(ker, fixed):
                problems.append(f"bireflection {g!r} has ker kappa_g != fixed space")
        else:
            problems.append(f"{g!r} in kappa support has fixed-space codim {codim} > 2")
    if lam.group.is_symmetric_group() and kappa.n > 2:
        for g in kappa.support():
            cycles = [c for c in g.cycles() if len(c) > 1]
            if not (len(cycles) == 1 and len(cycles[0]) == 3):
                problems.append(f"kappa support contains the non-3-cycle {g!r}")
    return not problems, problems


def _kappa_on_vectors(kappa: KappaParam, g: GroupElement, u: Vector, v: Vector):
    total = kappa.field.zero
    for i in range(1, kappa.n + 1):
        for j in range(1, kappa.n + 1):
            c = u[i - 1] * v[j - 1]
            if c:
                total = total + c * kappa.coefficient(g, i, j)
    return total


def diagnose_lambda(lam: LambdaParam) -> tuple[bool, list[str]]:
    """Consequences of the PBW property for lambda, checked exhaustively.

    (1) lambda(1, *) = 0; (2) g lambda(g^-1, v) = -lambda(g, ^{g^-1} v) g^-1;
    (3) the power recursion; (4) support on h with h^-1 g a reflection or
    identity, vanishing on the reflecting hyperplane; (5) identity
    coefficients vanish unless g is a reflection and v is off its
    hyperplane.
    """
    fs = lam.field
    n = lam.n
    group = lam.group
    ident = group.identity
    problems: list[str] = []

    for i in range(1, n + 1):
        if not lam.at(ident, i).is_zero():
            problems.append(f"lambda(1, v_{i}) != 0")

    for g in group:
        ginv = group.inverse(g)
        g_elt = AlgebraElement.term(fs, g)
        ginv_elt = AlgebraElement.term(fs, ginv)
        for i in range(1, n + 1):
            lhs = g_elt * lam.at(ginv, i)
            rhs = -(lam.eval_vector(g, ginv.act_on_vector(basis_vector(fs, n, i))) * ginv_elt)
            if lhs != rhs:
                problems.append(f"inverse identity fails at ({g!r}, v_{i})")

    for g in group:
        order = 1
        p = g
        while not p.is_identity():
            p = p * g
            order += 1
        for j in range(1, order + 1):
            gj = ident
            for _ in range(j):
                gj = gj * g
            for i in range(1, n + 1):
                expected = AlgebraElement.zero(fs)
                for m in range(j):
                    pre = ident
                    for _ in range(j - 1 - m):
                        pre = pre * g
                    post = ident
                    for _ in range(m):
                        post = post * g
                    v = post.act_on_vector(basis_vector(fs, n, i))
                    expected = expected + AlgebraElement.term(fs, pre) * lam.eval_vector(
                        g, v
                    ) * AlgebraElement.term(fs, post)
                if lam.at(gj, i) != expected:
                    problems.append(f"power recursion fails at ({g!r}^{j}, v_{i})")

    for g in group:
        for i in range(1, n + 1):
            for h in lam.at(g, i).support():
                r = h.inverse() * g
                codim = r.fixed_space_codim()
                if codim > 1:
                    problems.append(f"lambda({g!r}, v_{i}) supported on {h!r} with h^-1 g not a reflection")
                elif codim == 1:
                    for w in r.fixed_space_basis(fs):
                        if lam.eval_vector(g, w).coefficient(h):
                            problems.append(
                                f"lambda({g!r}, *) nonzero at {h!r} on the hyperplane of h^-1 g"
                            )
                            break

    for g in group:
        if g.is_identity():
            continue
        codim = g.fixed_space_codim()
        if codim == 1:
            for w in g.fixed_space_basis(fs):
                if lam.eval_vector(g, w).coefficient(ident):
                    problems.append(f"lambda_1({g!r}, .) nonzero on the fixed space")
                    break
        else:
            for i in range(1, n + 1):
                if lam.coefficient(ident, g, i):
                    problems.append(f"lambda_1({g!r}, v_{i}) != 0 for a non-reflection")
                    break
    return not problems, problems


def lemma_suite(lam: LambdaParam, kappa: KappaParam) -> dict[str, bool]:
    """Named consequences of the PBW property, for cross-checking PBW-true inputs.

    Only meaningful for the symmetric group acting by permutations.
    """
    fs = lam.field
    n = lam.n
    group = lam.group
    results: dict[str, bool] = {}

    ok, _ = diagnose_lambda(lam)
    results["lambda_corollaries"] = ok

    # lambda_c(c, v) = 0 for v in the fixed space of c
    ok = True
    for c in group:
        for w in c.fixed_space_basis(fs):
            if lam.eval_vector(c, w).coefficient(c):
                ok = False
    results["fixed_vector_vanishing"] = ok

    # lambda_{g(i j)}(g, v_i) = -lambda_{g(i j)}(g, v_j)
    ok = True
    if group.is_permutation_group():
        for g in group:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    gij = g * Perm.transposition(n, i, j)
                    if lam.coefficient(gij, g, i) != -lam.coefficient(gij, g, j):
                        ok = False
    results["transposition_antisymmetry"] = ok

    # lambda(g, v_1 + ... + v_n) = 0
    allv = tuple(fs.one for _ in range(n))
    results["row_sum_zero"] = all(lam.eval_vector(g, allv).is_zero() for g in group)

    # beta_1 + ... + beta_n = 0
    if n > 2 and fs.characteristic != 2 and group.is_symmetric_group():
        ab = extract_alpha_beta(lam)
        total = fs.zero
        for b in ab.beta:
            total = total + b
        results["beta_sum_zero"] = not total
    else:
        results["beta_sum_zero"] = True

    # kappa coefficient equalities across each 3-cycle
    ok = True
    if group.is_permutation_group() and n > 2:
        for i, j, k in permutations(range(1, n + 1), 3):
            cyc = Perm.from_cycles(n, (i, j, k))
            base = kappa.coefficient(cyc, i, j)
            if kappa.coefficient(cyc, j, k) != base or kappa.coefficient(cyc, k, i) != base:
                ok = False
    results["three_cycle_equalities"] = ok

    ok, _ = diagnose_kappa_support(lam, kappa)
    results["kappa_support"] = ok
    return results
