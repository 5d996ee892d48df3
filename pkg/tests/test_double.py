import random

import pytest

from qdouble.cyclotomic import cyc, root_of_unity
from qdouble.groups import FiniteGroup, class_context
from qdouble.reps import centralizer_character
from qdouble.double import (
    DoubleElement,
    build_VCpi,
    bdg_crossed_module,
    regular_crossed_module,
    wedderburn_element,
    block_idempotent,
    double_irreps,
    decompose_DG_module,
    pairing,
    killing_Q,
    beta,
    quasi_R,
)
import qdouble.linalg as la


@pytest.fixture(scope="module")
def s3():
    return FiniteGroup.s3_with_uvw_labels()


@pytest.fixture(scope="module")
def ctx2(s3):
    return class_context(s3, "uv", q_override={"uv": "e", "vu": "u"})


def test_cross_relation(s3):
    u, uv = s3.element("u"), s3.element("uv")
    lhs = DoubleElement.group_like(s3, u).dg_mul(DoubleElement.delta(s3, uv))
    rhs = DoubleElement.basis(s3, s3.conj(u, uv), u)
    assert lhs == rhs


def test_star_involutive_on_random_elements(s3):
    rng = random.Random(3)
    for _ in range(50):
        terms = {
            (rng.randrange(6), rng.randrange(6)): cyc(rng.randint(-3, 3))
            for _ in range(3)
        }
        x = DoubleElement(s3, terms)
        assert x.star().star() == x


def test_quantum_killing_form_formula(s3):
    for u in range(6):
        for v in range(6):
            for g in range(6):
                for h in range(6):
                    val = killing_Q(
                        DoubleElement.basis(s3, g, h), DoubleElement.basis(s3, u, v)
                    )
                    expected = cyc(1) if (g == s3.conj(u, v) and h == u) else cyc(0)
                    assert val == expected


def test_pairing_formula(s3):
    a = DoubleElement.basis(s3, s3.element("uv"), s3.element("u"))
    b = DoubleElement.basis(s3, s3.inv[s3.element("u")], s3.inv[s3.element("uv")])
    assert pairing(a, b) == cyc(1)


def test_factorisability_identity(s3):
    """The Killing pairing composed with the duality map is the identity."""
    n = s3.n
    for g in range(n):
        for h in range(n):
            x = DoubleElement.basis(s3, g, h)
            rebuilt = DoubleElement(s3)
            for gg in range(n):
                for hh in range(n):
                    c = killing_Q(
                        x, DoubleElement.basis(s3, gg, s3.conj(s3.inv[gg], hh))
                    )
                    if c:
                        rebuilt = rebuilt + DoubleElement.basis(s3, hh, gg, c)
            assert rebuilt == x


def test_quasi_R_shape(s3):
    r = quasi_R(s3)
    assert len(r) == s3.n
    total = DoubleElement(s3)
    for a, _ in r:
        total = total + a
    assert total == DoubleElement.unit(s3)


def test_beta_map(s3):
    g, h = s3.element("uv"), s3.element("u")
    image = beta(DoubleElement.basis(s3, g, h))
    assert image == DoubleElement.basis(s3, g, s3.conj(s3.inv[g], h))


def test_VCpi_action_case_ii(s3, ctx2):
    q = root_of_unity(3, 1)
    for j in (0, 1, 2):
        module = build_VCpi(ctx2, centralizer_character(ctx2, j))
        u, v = s3.element("u"), s3.element("v")
        uv, vu = s3.element("uv"), s3.element("vu")
        vec_uv = [cyc(1), cyc(0)]
        vec_vu = [cyc(0), cyc(1)]
        assert module.act(u, vec_uv) == vec_vu
        assert module.act(u, vec_vu) == vec_uv
        assert module.act(v, vec_uv) == [cyc(0), q**j]
        assert module.act(v, vec_vu) == [q ** (-j), cyc(0)]
        # delta action picks the grading
        assert module.act_delta(uv, vec_uv) == vec_uv
        assert module.act_delta(vu, vec_uv) == [cyc(0), cyc(0)]


def test_dimension_sum(s3):
    pairs = double_irreps(s3)
    assert sum((len(c.cls) * p.dim) ** 2 for c, p in pairs) == 36


def test_wedderburn_multiplicativity(s3, ctx2):
    pi = centralizer_character(ctx2, 1)
    cls_ = ctx2.cls
    for c in cls_:
        for d in cls_:
            for c2 in cls_:
                for d2 in cls_:
                    prod = wedderburn_element(ctx2, pi, c, 0, d, 0).dg_mul(
                        wedderburn_element(ctx2, pi, c2, 0, d2, 0)
                    )
                    if d == c2:
                        assert prod == wedderburn_element(ctx2, pi, c, 0, d2, 0)
                    else:
                        assert not prod


def test_projector_action_on_blocks(s3):
    pairs = double_irreps(s3)
    for ctx, pi in pairs:
        p = block_idempotent(ctx, pi)
        module = build_VCpi(ctx, pi)
        for j in range(module.dim):
            vec = [cyc(1) if i == j else cyc(0) for i in range(module.dim)]
            assert module.act_double(p, vec) == vec
        for ctx2_, pi2 in pairs:
            if ctx2_ is ctx and pi2 is pi:
                continue
            other = build_VCpi(ctx2_, pi2)
            for j in range(other.dim):
                vec = [cyc(1) if i == j else cyc(0) for i in range(other.dim)]
                assert all(not x for x in other.act_double(p, vec))


def test_decompose_self(s3, ctx2):
    pi = centralizer_character(ctx2, 1)
    module = build_VCpi(ctx2, pi)
    dec = decompose_DG_module(module)
    assert list(dec.values()) == [1]
    ((label, _),) = dec.keys()
    assert label == "uv"


def test_decompose_direct_sum(s3, ctx2):
    pi = centralizer_character(ctx2, 1)
    module = build_VCpi(ctx2, pi)
    doubled = module.direct_sum(module)
    dec = decompose_DG_module(doubled)
    assert list(dec.values()) == [2]
    ((label, _),) = dec.keys()
    assert label == "uv"


def test_decompose_regular_module(s3):
    reg = regular_crossed_module(s3)
    dec = decompose_DG_module(reg)
    for ctx, pi in double_irreps(s3):
        assert dec[(s3.labels[ctx.rep], pi.name)] == len(ctx.cls) * pi.dim


def test_crossed_module_compatibility(s3):
    for ctx, pi in double_irreps(s3):
        module = build_VCpi(ctx, pi)
        module.verify()
    bdg_crossed_module(s3).verify()
    regular_crossed_module(s3).verify()


def test_braiding_braid_relation(s3, ctx2):
    module = build_VCpi(ctx2, centralizer_character(ctx2, 1))
    psi = module.braiding_with(module)

    def ap12(vec):
        out = {}
        for (i, j, k), c in vec.items():
            for (a, b), c2 in psi(i, j):
                out[(a, b, k)] = out.get((a, b, k), cyc(0)) + c * c2
        return {k: v for k, v in out.items() if v}

    def ap23(vec):
        out = {}
        for (i, j, k), c in vec.items():
            for (a, b), c2 in psi(j, k):
                out[(i, a, b)] = out.get((i, a, b), cyc(0)) + c * c2
        return {k: v for k, v in out.items() if v}

    for i in range(module.dim):
        for j in range(module.dim):
            for k in range(module.dim):
                start = {(i, j, k): cyc(1)}
                assert ap12(ap23(ap12(start))) == ap23(ap12(ap23(start)))


def test_braiding_invertible(s3, ctx2):
    module = build_VCpi(ctx2, centralizer_character(ctx2, 2))
    m = module.braiding_matrix(module)
    assert la.rank(m) == module.dim * module.dim
