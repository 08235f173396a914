"""Nonmodular conversion: trade lambda away for an invariant kappa.

When char(F) does not divide |G|, any PBW pair (lambda, kappa') is
isomorphic as a filtered algebra to a pair (0, kappa) via the averaging map

  gamma(v) = (1/|G|) sum_{a,b in G} lambda_{ab}(b, ^{b^-1} v) a
           = (1/|G|) sum_{b in G} lambda(b, ^{b^-1} v) b^-1

  kappa(u,v) = gamma(u) gamma(v) - gamma(v) gamma(u)
               + lambda(gamma(u), v) - lambda(gamma(v), u) + kappa'(u, v)

and the filtered map f(v) = v + gamma(v), f(g) = g.  The isomorphism is
verified here at finite degree rather than assumed: the defining relations
of the target normalize to zero under the source's rewriting system, and
the filtered dimensions agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .group_algebra import AlgebraElement
from .linalg import basis_vector
from .parameters import KappaParam, LambdaParam
from .pbw import check_pbw
from .rewrite import NCSum, RewriteSystem, from_algebra_element, nc_mul, nc_sub
from .scalars import ModularObstruction


class NotPBWInput(ValueError):
    """Conversion is only defined on PBW pairs."""


@dataclass
class ConversionResult:
    gamma: dict[int, AlgebraElement]
    kappa_converted: KappaParam
    iso_verified_to_degree: int = 0
    checks: dict[str, bool] = field(default_factory=dict)


def gamma(lam: LambdaParam) -> dict[int, AlgebraElement]:
    """The averaging map, computed exactly; refuses the modular case."""
    fs = lam.field
    order = len(lam.group)
    inv_order = fs.inverse_of_integer(order)
    out: dict[int, AlgebraElement] = {}
    for i in range(1, lam.n + 1):
        acc = AlgebraElement.zero(fs)
        for b in lam.group:
            binv = lam.group.inverse(b)
            w = binv.act_on_vector(basis_vector(fs, lam.n, i))
            acc = acc + lam.eval_vector(b, w) * AlgebraElement.term(fs, binv)
        out[i] = acc.scale(inv_order)
    return out


def convert(lam: LambdaParam, kappa_prime: KappaParam, *, verify_input: bool = True) -> ConversionResult:
    """Build the converted kappa for a PBW pair in the nonmodular setting."""
    fs = lam.field
    if fs.characteristic and len(lam.group) % fs.characteristic == 0:
        raise ModularObstruction(
            f"|G| = {len(lam.group)} vanishes in characteristic {fs.characteristic}"
        )
    if verify_input and not check_pbw(lam, kappa_prime).pbw:
        raise NotPBWInput("conversion requires a PBW input pair")
    g = gamma(lam)
    n = lam.n
    table: dict[tuple[int, int], AlgebraElement] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            val = (
                g[i] * g[j]
                - g[j] * g[i]
                + lam.eval(g[i], basis_vector(fs, n, j))
                - lam.eval(g[j], basis_vector(fs, n, i))
                + kappa_prime.at(i, j)
            )
            if not val.is_zero():
                table[(i, j)] = val
    return ConversionResult(gamma=g, kappa_converted=KappaParam(fs, n, table))


def verify_isomorphism(
    lam: LambdaParam, kappa_prime: KappaParam, result: ConversionResult, m: int = 3
) -> bool:
    """Finite-degree certificate that f(v) = v + gamma(v) is an isomorphism.

    (i)  the commutator relations of the converted algebra map to zero,
    (ii) the group-action relations map to zero,
    (iii) filtered dimensions agree up to degree m.
    """
    fs = lam.field
    n = lam.n
    rs = RewriteSystem(lam, kappa_prime)
    checks = {"commutator_relations": True, "group_relations": True, "filtered_dimensions": True}
    if not rs.is_confluent():
        raise NotPBWInput("the source pair does not define a confluent system")

    f_images: dict[int, NCSum] = {}
    for i in range(1, n + 1):
        s: NCSum = {(i,): fs.one}
        for h, c in result.gamma[i].terms.items():
            s[(h,)] = s.get((h,), fs.zero) + c
        f_images[i] = {w: c for w, c in s.items() if c}

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = nc_sub(
                nc_mul(fs, f_images[i], f_images[j]), nc_mul(fs, f_images[j], f_images[i])
            )
            rel = nc_sub(lhs, from_algebra_element(result.kappa_converted.at(i, j)))
            if rs.normal_form(rel):
                checks["commutator_relations"] = False

    for g_elt in lam.group:
        g_sum: NCSum = {(g_elt,): fs.one}
        for i in range(1, n + 1):
            lhs = nc_mul(fs, g_sum, f_images[i])
            gv = g_elt.act_on_vector(basis_vector(fs, n, i))
            f_gv: NCSum = {}
            for k in range(1, n + 1):
                if gv[k - 1]:
                    for w, c in f_images[k].items():
                        f_gv[w] = f_gv.get(w, fs.zero) + gv[k - 1] * c
            f_gv = {w: c for w, c in f_gv.items() if c}
            rel = nc_sub(lhs, nc_mul(fs, f_gv, g_sum))
            if rs.normal_form(rel):
                checks["group_relations"] = False

    converted_rs = RewriteSystem(LambdaParam.zero(lam.group, fs), result.kappa_converted)
    if not converted_rs.is_confluent():
        checks["filtered_dimensions"] = False
    else:
        for d in range(m + 1):
            if rs.filtered_dimension(d) != converted_rs.filtered_dimension(d):
                checks["filtered_dimensions"] = False
    result.checks = checks
    ok = all(checks.values())
    if ok:
        result.iso_verified_to_degree = m
    return ok
