import pytest

from qdouble.cyclotomic import cyc, root_of_unity
from qdouble.poly import Poly, RatFunc, poly_gcd, resultant
from qdouble.quadalg import QuadAlg
import qdouble.linalg as la


def test_poly_arithmetic():
    V = ("x", "y")
    x, y = Poly.variable("x", V), Poly.variable("y", V)
    p = (x + y) ** 2
    assert p == x * x + x * y * 2 + y * y
    assert p.substitute({"x": 1, "y": 2}).as_cyc() == cyc(9)
    assert p.degree("x") == 2 and p.degree() == 2
    assert (p - p).is_zero()


def test_poly_conj_fixes_real_parameters():
    V = ("t",)
    t = Poly.variable("t", V)
    i = root_of_unity(4, 1)
    p = t * i + Poly.constant(3, V)
    assert p.conj() == t * root_of_unity(4, 3) + Poly.constant(3, V)


def test_gcd_and_resultant():
    V = ("x", "y")
    x, y = Poly.variable("x", V), Poly.variable("y", V)
    a = (x - y) * (x + cyc(2))
    b = (x - y) * (x * x + y)
    g = poly_gcd(a, b)
    assert g.monic_normalize() == (x - y).monic_normalize()
    r = resultant(x * x - y, x + cyc(3), "x")
    assert r == Poly.constant(9, V) - y


def test_resultant_detects_common_roots():
    V = ("x",)
    x = Poly.variable("x", V)
    assert resultant((x - 1) * (x - 2), (x - 2) * (x + 5), "x").is_zero()
    assert not resultant((x - 1) * (x - 2), (x - 3), "x").is_zero()


def test_ratfunc_field():
    V = ("x",)
    x = Poly.variable("x", V)
    f = RatFunc(x * x - Poly.constant(1, V), x - Poly.constant(1, V))
    assert f.as_poly() == x + Poly.constant(1, V)
    g = RatFunc(Poly.constant(1, V), x)
    assert (g * RatFunc(x)).as_poly() == Poly.constant(1, V)
    with pytest.raises(ZeroDivisionError):
        g / RatFunc(Poly.constant(0, V))


def test_exact_dense_linear_algebra():
    m = [[cyc(2), cyc(1)], [cyc(1), cyc(1)]]
    inv = la.inverse(m)
    assert la.mat_eq(la.mat_mul(m, inv), la.identity(2, cyc(1), cyc(0)))
    assert la.det(m) == cyc(1)
    assert la.rank(m) == 2
    singular = [[cyc(1), cyc(2)], [cyc(2), cyc(4)]]
    assert la.rank(singular) == 1
    ns = la.nullspace(singular, cyc(1), cyc(0))
    assert len(ns) == 1
    assert la.solve(singular, [cyc(1), cyc(2)]) is not None
    assert la.solve(singular, [cyc(1), cyc(3)]) is None


def test_sparse_span():
    span = la.SparseSpan()
    assert span.add({0: cyc(1), 1: cyc(2)})
    assert span.add({1: cyc(1)})
    assert not span.add({0: cyc(3), 1: cyc(1)})
    assert span.rank == 2
    assert span.contains({0: cyc(5), 1: cyc(-1)})
    assert not span.contains({2: cyc(1)})


def test_quadalg_symmetric_square():
    """Anticommutation relations leave the symmetric square: n(n+1)/2."""
    n = 3
    relations = []
    for i in range(n):
        for j in range(i + 1, n):
            relations.append({(i, j): cyc(1), (j, i): cyc(-1)})
    alg = QuadAlg([f"x{i}" for i in range(n)], relations)
    assert alg.graded_dimension(2) == 6
    assert alg.graded_dimension(3) == 10


def test_quadalg_grassmann():
    n = 3
    relations = [{(i, j): cyc(1), (j, i): cyc(1)} for i in range(n) for j in range(i, n)]
    alg = QuadAlg([f"x{i}" for i in range(n)], relations)
    assert alg.hilbert_prefix(3) == [1, 3, 3, 1]


def test_quadalg_inhomogeneous_parts_count():
    # one homogeneous + one inhomogeneous relation with the same top part
    relations = [{(0, 1): cyc(1)}]
    inhom = [({(0, 1): cyc(1)}, cyc(-1))]
    alg = QuadAlg(["a", "b"], relations, inhomogeneous=inhom)
    assert alg.graded_dimension(2) == 3
