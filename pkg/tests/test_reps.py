from fractions import Fraction

import pytest

from qdouble.cyclotomic import cyc, root_of_unity
from qdouble.groups import FiniteGroup, class_context
from qdouble.reps import (
    trivial_rep,
    sign_rep,
    cyclic_rep,
    seminormal_rep,
    product_rep,
    user_rep,
    irrep_catalog,
    abelian_characters,
    character_inner_product,
    decompose,
    group_projector,
    induced_rep,
    centralizer_character,
)
import qdouble.linalg as la


@pytest.fixture(scope="module")
def s3():
    return FiniteGroup.s3_with_uvw_labels()


@pytest.fixture(scope="module")
def ctx2(s3):
    return class_context(s3, "uv", q_override={"uv": "e", "vu": "u"})


def test_cyclic_character(s3):
    z3 = FiniteGroup.cyclic(3)
    rep = cyclic_rep(z3, 1)
    assert rep.matrices[z3.element("r")][0][0] == root_of_unity(3, 1)


def test_sign_rep(s3):
    rep = sign_rep(s3)
    assert rep.matrices[s3.element("u")][0][0] == cyc(-1)
    assert rep.character()[1] == cyc(-1)  # the 2-cycle class


def test_two_dim_characters(s3):
    two = seminormal_rep(s3, (2, 1))
    chi = two.character()
    # class order: {e}, {u,v,w}, {uv,vu}
    assert chi[0] == cyc(2)
    assert chi[1] == cyc(0)
    assert chi[2] == cyc(-1)
    norm = two.normalized_character()
    assert norm[0] == cyc(1)
    assert norm[2] == cyc(Fraction(-1, 2))


def test_trivial_character(s3):
    assert all(x == cyc(1) for x in trivial_rep(s3).character())


def test_user_rep_validation(s3):
    bad = [[[cyc(1)]] for _ in range(s3.n)]
    bad[s3.element("u")] = [[cyc(2)]]
    with pytest.raises(ValueError):
        user_rep(s3, bad)


def test_non_homomorphism_rejected():
    z2 = FiniteGroup.cyclic(2)
    with pytest.raises(ValueError):
        user_rep(z2, [[[cyc(1)]], [[cyc(2)]]])


def test_group_projector_z3():
    z3 = FiniteGroup.cyclic(3)
    p0 = group_projector(z3, cyclic_rep(z3, 0))
    third = cyc(Fraction(1, 3))
    assert p0 == {0: third, 1: third, 2: third}
    p1 = group_projector(z3, cyclic_rep(z3, 1))
    z = root_of_unity(3, 1)
    assert p1[z3.element("r")] == z * z * third
    assert p1[z3.word(z3.element("r"), z3.element("r"))] == z * third


def test_group_projectors_orthogonal_idempotent():
    z3 = FiniteGroup.cyclic(3)
    reps = [cyclic_rep(z3, j) for j in range(3)]
    projectors = [group_projector(z3, r) for r in reps]

    def convolve(p, q):
        out = {}
        for a, ca in p.items():
            for b, cb in q.items():
                k = z3.table[a][b]
                out[k] = out.get(k, cyc(0)) + ca * cb
        return {k: v for k, v in out.items() if v}

    for i, p in enumerate(projectors):
        assert convolve(p, p) == p
        for j, q in enumerate(projectors):
            if i != j:
                assert convolve(p, q) == {}
    total = {}
    for p in projectors:
        for k, v in p.items():
            total[k] = total.get(k, cyc(0)) + v
    assert {k: v for k, v in total.items() if v} == {0: cyc(1)}


def test_reducible_rejected_by_projector(s3):
    ind = induced_rep(
        class_context(s3, "uv", q_override={"uv": "e", "vu": "u"}),
        centralizer_character(class_context(s3, "uv"), 0),
    )
    with pytest.raises(ValueError):
        group_projector(s3, ind)


def test_induced_rep_decompositions(s3, ctx2):
    names = {r.dim: r.name for r in irrep_catalog(s3)}
    dec0 = decompose(induced_rep(ctx2, centralizer_character(ctx2, 0)))
    assert sorted(dec0.values()) == [1, 1]
    assert names[2] not in dec0
    for j in (1, 2):
        dec = decompose(induced_rep(ctx2, centralizer_character(ctx2, j)))
        assert dec == {names[2]: 1}


def test_induced_rep_case_iii(s3):
    ctx3 = class_context(s3, "v", q_override={"v": "e", "u": "w", "w": "u"})
    plus = decompose(induced_rep(ctx3, centralizer_character(ctx3, 0)))
    names = {r.name: r for r in irrep_catalog(s3)}
    trivial = next(n for n, r in names.items() if r.dim == 1 and r.matrices[1][0][0] == cyc(1))
    assert plus[trivial] == 1 and sum(m * d for m, d in zip(plus.values(), [names[k].dim for k in plus])) == 3
    minus = decompose(induced_rep(ctx3, centralizer_character(ctx3, 1)))
    assert trivial not in minus


def test_schur_orthogonality_s4():
    s4 = FiniteGroup.symmetric(4)
    irreps = irrep_catalog(s4)
    assert sorted(r.dim for r in irreps) == [1, 1, 2, 3, 3]
    chi = [r.character() for r in irreps]
    for i, a in enumerate(irreps):
        for j, b in enumerate(irreps):
            inner = character_inner_product(s4, chi[i], chi[j])
            assert inner == (cyc(1) if i == j else cyc(0))


def test_seminormal_rational_entries():
    s4 = FiniteGroup.symmetric(4)
    rep = seminormal_rep(s4, (2, 2))
    for m in rep.matrices:
        for row in m:
            for x in row:
                assert x.is_rational()


def test_product_rep_on_centralizer():
    s4 = FiniteGroup.symmetric(4)
    ctx = class_context(s4, s4.element("s3"))
    sub = ctx.centralizer
    # the centralizer of (34) is {e,(34)} x {e,(12)}
    a = [g for g in sub.embedding if g in (0, s4.element("s3"))]
    b = [g for g in sub.embedding if g in (0, s4.element("s1"))]
    za = FiniteGroup.cyclic(2)
    sign_z2 = cyclic_rep(za, 1)
    triv_z2 = cyclic_rep(za, 0)
    rep = product_rep(sub, sign_z2, [sub.position[x] for x in a], triv_z2, [sub.position[x] for x in b])
    assert rep.matrices[sub.position[s4.element("s3")]][0][0] == cyc(-1)
    assert rep.matrices[sub.position[s4.element("s1")]][0][0] == cyc(1)


def test_abelian_characters_complete():
    z6 = FiniteGroup.cyclic(6)
    chars = abelian_characters(z6)
    assert len(chars) == 6
    values = {tuple(c.matrices[g][0][0].to_complex().real for g in range(6)) for c in chars}
    assert len(values) == 6


def test_centralizer_character_pins_value(s3, ctx2):
    q = root_of_unity(3, 1)
    for j in range(3):
        pi = centralizer_character(ctx2, j)
        pos = ctx2.centralizer.position[ctx2.rep]
        assert pi.matrices[pos][0][0] == q ** j
