from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhecke import (
    FieldSpec,
    MatrixElement,
    Perm,
    compose,
    enumerate_group,
    fixed_space_codim,
    reflection_length,
    symmetric_group,
)
from dhecke.groups import ClosureCapExceeded
from dhecke.linalg import basis_vector, same_subspace


def test_compose_convention():
    # (1 2) after (2 3): i=1 -> 1 -> 2, i=2 -> 3, i=3 -> 2 -> 1
    g = Perm.from_cycles(3, (1, 2))
    h = Perm.from_cycles(3, (2, 3))
    assert compose(g, h).images == (2, 3, 1)
    assert compose(g, h) == Perm.from_cycles(3, (1, 2, 3))


def test_compose_inverse():
    g = Perm([3, 1, 4, 2])
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()


def test_compose_mismatched():
    with pytest.raises(ValueError):
        compose(Perm([2, 1]), Perm([2, 1, 3]))
    with pytest.raises(ValueError):
        compose(Perm([2, 1]), MatrixElement(FieldSpec(5), [[FieldSpec(5).one]]))


def test_matrix_involution_over_f2():
    fs = FieldSpec(2, allow_char2=True)
    g = MatrixElement(fs, [[fs.one, fs.one], [fs.zero, fs.one]])
    assert (g * g).is_identity()


def test_act_on_vector():
    fs = FieldSpec(5)
    g = Perm.from_cycles(3, (1, 2, 3))
    e1 = basis_vector(fs, 3, 1)
    assert g.act_on_vector(e1) == basis_vector(fs, 3, 2)
    ident = Perm.identity(3)
    v = (fs(1), fs(2), fs(3))
    assert ident.act_on_vector(v) == v


def test_matrix_action_example():
    # [[1,1],[0,1]] over F2 sends the second basis vector to v + w
    fs = FieldSpec(2, allow_char2=True)
    g = MatrixElement(fs, [[fs.one, fs.one], [fs.zero, fs.one]])
    assert g.act_on_vector(basis_vector(fs, 2, 2)) == (fs.one, fs.one)


def test_reflection_length():
    assert reflection_length(Perm.identity(3)) == 0
    assert reflection_length(Perm.from_cycles(3, (1, 2, 3))) == 2
    assert reflection_length(Perm.from_cycles(4, (1, 2), (3, 4))) == 2


def test_fixed_space_codim():
    assert fixed_space_codim(Perm.from_cycles(4, (2, 3))) == 1
    assert fixed_space_codim(Perm.from_cycles(3, (1, 2, 3))) == 2
    fs = FieldSpec(2, allow_char2=True)
    g = MatrixElement(fs, [[fs.one, fs.one], [fs.zero, fs.one]])
    assert fixed_space_codim(g) == 1


def test_perm_codim_matches_matrix_rank():
    # cycle-count formula vs rank of (M - I), over a couple of fields
    for fs in (FieldSpec(5), FieldSpec(0)):
        for g in symmetric_group(4):
            m = MatrixElement(fs, g.matrix(fs))
            assert g.fixed_space_codim() == m.fixed_space_codim()


def test_enumerate_symmetric_groups():
    s1 = Perm.from_cycles(3, (1, 2))
    s2 = Perm.from_cycles(3, (2, 3))
    assert len(enumerate_group([s1, s2])) == 6
    gens4 = [Perm.from_cycles(4, (k, k + 1)) for k in (1, 2, 3)]
    assert len(enumerate_group(gens4)) == 24


def test_enumerate_matrix_group():
    fs = FieldSpec(2, allow_char2=True)
    g = MatrixElement(fs, [[fs.one, fs.one], [fs.zero, fs.one]])
    table = enumerate_group([g])
    assert len(table) == 2


def test_enumerate_cap():
    gens4 = [Perm.from_cycles(4, (k, k + 1)) for k in (1, 2, 3)]
    with pytest.raises(ClosureCapExceeded):
        enumerate_group(gens4, cap=10)


def test_singular_matrix_rejected():
    fs = FieldSpec(5)
    with pytest.raises(ValueError):
        MatrixElement(fs, [[fs.one, fs.one], [fs.one, fs.one]])


def test_group_table_lookup(S3):
    for g in S3:
        assert S3.inverse(g) * g == S3.identity
        for h in S3:
            assert S3.product(g, h) in S3


def test_adjacent_transpositions(S3):
    assert S3.adjacent_transposition(1) == Perm.from_cycles(3, (1, 2))
    assert S3.adjacent_transposition(2) == Perm.from_cycles(3, (2, 3))
    # s_n = (n 1), and indices wrap modulo n
    assert S3.adjacent_transposition(3) == Perm.from_cycles(3, (3, 1))
    assert S3.adjacent_transposition(4) == S3.adjacent_transposition(1)


def test_cycle_notation_parse():
    # "(1 2 3)" means 1->2->3->1, i.e. images [2, 3, 1]
    assert Perm.from_cycles(3, (1, 2, 3)).images == (2, 3, 1)
    assert Perm.from_cycles(4, (2, 4)).images == (1, 4, 3, 2)


perms3 = st.sampled_from(list(symmetric_group(3)))


@settings(max_examples=50, derandomize=True)
@given(perms3, perms3, st.integers(1, 3))
def test_action_is_homomorphism(g, h, i):
    fs = FieldSpec(5)
    v = basis_vector(fs, 3, i)
    assert (g * h).act_on_vector(v) == g.act_on_vector(h.act_on_vector(v))


def test_length_additivity_implies_fixed_space_intersection(S4):
    """When lengths add, the fixed space of the product is the intersection."""
    fs = FieldSpec(5)
    checked = 0
    for g in S4:
        for h in S4:
            gh = g * h
            if g.reflection_length() + h.reflection_length() != gh.reflection_length():
                continue
            checked += 1
            inter_rank_input = g.fixed_space_basis(fs) + h.fixed_space_basis(fs)
            # V^g cap V^h = V^{gh} iff dim(V^g) + dim(V^h) - dim(V^g + V^h) = dim(V^{gh})
            from dhecke.linalg import rank

            dim_sum_space = rank(inter_rank_input)
            dim_inter = len(g.fixed_space_basis(fs)) + len(h.fixed_space_basis(fs)) - dim_sum_space
            assert dim_inter == len(gh.fixed_space_basis(fs))
            # and the intersection is contained in V^{gh}, hence equal
            assert same_subspace(
                _intersect(fs, g.fixed_space_basis(fs), h.fixed_space_basis(fs)),
                gh.fixed_space_basis(fs),
            )
    assert checked > 24  # the additive pairs are plentiful in S4


def _intersect(fs, basis_a, basis_b):
    """Intersection of two row spans via the kernel of the stacked system."""
    from dhecke.linalg import nullspace

    n = len(basis_a[0]) if basis_a else len(basis_b[0])
    # x in span(A) cap span(B): solve [A^T | -B^T] coefficients
    cols = len(basis_a) + len(basis_b)
    system = [
        [basis_a[j][i] if j < len(basis_a) else -basis_b[j - len(basis_a)][i] for j in range(cols)]
        for i in range(n)
    ]
    out = []
    for coeffs in nullspace(fs, system, cols):
        vec = [fs.zero] * n
        for j in range(len(basis_a)):
            for i in range(n):
                vec[i] = vec[i] + coeffs[j] * basis_a[j][i]
        if any(vec):
            out.append(tuple(vec))
    return out
