"""Matrix representations over the cyclotomic field.

The catalogue covers what the engine needs without a general character
table algorithm: trivial and sign representations, characters of cyclic
and abelian groups, Young seminormal representations of S_n for n <= 5
(rational entries), a dihedral 2-dimensional representation, internal
products, and user-supplied matrices.  Everything is validated as a
homomorphism on construction.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclotomic import Cyc, cyc, root_of_unity
from .groups import FiniteGroup, Subgroup
from . import linalg

ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


class Rep:
    """A matrix representation: one dim x dim Cyc matrix per group element."""

    def __init__(self, group: FiniteGroup, matrices, name: str = "rep", check: bool = True):
        self.group = group
        self.matrices = [[list(row) for row in m] for m in matrices]
        self.dim = len(self.matrices[0])
        self.name = name
        if check:
            self._validate()

    def _validate(self):
        g_ = self.group
        ident = linalg.identity(self.dim, ONE, ZERO)
        if not linalg.mat_eq(self.matrices[0], ident):
            raise ValueError(f"{self.name}: identity does not map to the identity matrix")
        for a in range(g_.n):
            for b in range(g_.n):
                lhs = linalg.mat_mul(self.matrices[a], self.matrices[b])
                if not linalg.mat_eq(lhs, self.matrices[g_.table[a][b]]):
                    raise ValueError(f"{self.name}: not a homomorphism at ({a},{b})")

    def matrix(self, g: int):
        return self.matrices[g]

    def entry(self, g: int, i: int, j: int) -> Cyc:
        return self.matrices[g][i][j]

    def trace(self, g: int) -> Cyc:
        m = self.matrices[g]
        t = ZERO
        for i in range(self.dim):
            t = t + m[i][i]
        return t

    def character(self) -> list[Cyc]:
        """Plain trace character as a class function (one value per class)."""
        return [self.trace(c[0]) for c in self.group.conjugacy_classes()]

    def normalized_character(self) -> list[Cyc]:
        """Trace over dimension; value 1 on the identity class."""
        d = Cyc.rational(Fraction(1, self.dim))
        return [v * d for v in self.character()]

    def is_irreducible(self) -> bool:
        total = ZERO
        for g in range(self.group.n):
            t = self.trace(g)
            total = total + t * t.conj()
        return total == cyc(self.group.n)

    def is_real_orthogonal(self) -> bool:
        """Entries fixed by conjugation and rho(g) rho(g)^T = 1 for all g."""
        ident = linalg.identity(self.dim, ONE, ZERO)
        for m in self.matrices:
            for row in m:
                for x in row:
                    if x.conj() != x:
                        return False
            if not linalg.mat_eq(linalg.mat_mul(m, linalg.transpose(m)), ident):
                return False
        return True

    def tensor(self, other: "Rep") -> "Rep":
        mats = [
            _kron(self.matrices[g], other.matrices[g]) for g in range(self.group.n)
        ]
        return Rep(self.group, mats, name=f"{self.name}(x){other.name}", check=False)

    def __repr__(self):
        return f"Rep({self.name}, dim={self.dim}, group order {self.group.n})"


def _kron(a, b):
    na, nb = len(a), len(b)
    out = [[ZERO] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            if True:
                for k in range(nb):
                    for l in range(nb):
                        out[i * nb + k][j * nb + l] = a[i][j] * b[k][l]
    return out


# -- catalogue ----------------------------------------------------------------


def trivial_rep(group: FiniteGroup) -> Rep:
    return Rep(group, [[[ONE]] for _ in range(group.n)], name="trivial", check=False)


def sign_rep(group: FiniteGroup) -> Rep:
    """Sign of the underlying permutations (requires permutation images)."""
    if group.perms is None:
        raise ValueError("sign representation needs permutation images")
    mats = []
    for p in group.perms:
        mats.append([[cyc(_perm_sign(p))]])
    return Rep(group, mats, name="sign")


def _perm_sign(p) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cyclic_rep(group: FiniteGroup, j: int, generator: int | None = None) -> Rep:
    """Character g^k -> zeta_n^(jk) of a cyclic group."""
    n = group.n
    if generator is None:
        generator = next((g for g in range(n) if group.order_of(g) == n), None)
        if generator is None:
            raise ValueError("group is not cyclic")
    mats = [None] * n
    x, k = 0, 0
    for _ in range(n):
        mats[x] = [[root_of_unity(n, j * k)]]
        x = group.table[x][generator]
        k += 1
    if any(m is None for m in mats):
        raise ValueError("chosen generator does not generate the group")
    return Rep(group, mats, name=f"cyclic_{j}")


def abelian_characters(group: FiniteGroup) -> list[Rep]:
    """All 1-dimensional representations of an abelian group."""
    if not group.is_abelian():
        raise ValueError("character enumeration requires an abelian group")
    gens = []
    generated = {0}
    for g in range(1, group.n):
        if g not in generated:
            gens.append(g)
            generated = set(group.subgroup_generated(gens))
        if len(generated) == group.n:
            break
    orders = [group.order_of(g) for g in gens]
    chars = []
    for exps in itertools.product(*(range(o) for o in orders)):
        values = {0: cyc(1)}
        ok = True
        # propagate multiplicatively; consistency checked as we go
        for g, o, k in zip(gens, orders, exps):
            base = root_of_unity(o, k)
            new = {}
            for x, vx in values.items():
                y, vy = x, vx
                for _ in range(o - 1):
                    y = group.table[y][g]
                    vy = vy * base
                    if y in values and values[y] != vy:
                        ok = False
                    new[y] = vy
            values.update(new)
        if not ok or len(values) != group.n:
            continue
        mats = [[[values[g]]] for g in range(group.n)]
        try:
            chars.append(Rep(group, mats, name=f"chi{exps}"))
        except ValueError:
            continue
    if len(chars) != group.n:
        raise RuntimeError("abelian character enumeration failed")
    return chars


def _axial_distance(tab_pos, k):
    (r1, c1), (r2, c2) = tab_pos[k], tab_pos[k + 1]
    return (c2 - r2) - (c1 - r1)


def _standard_tableaux(partition):
    n = sum(partition)
    rows = len(partition)
    out = []

    def grow(placement, k):
        if k > n:
            out.append(dict(placement))
            return
        counts = [0] * rows
        for (r, c) in placement.values():
            counts[r] += 1
        for r in range(rows):
            c = counts[r]
            if c < partition[r] and (r == 0 or counts[r - 1] > c):
                placement[k] = (r, c)
                grow(placement, k + 1)
                del placement[k]

    grow({}, 1)
    return out


def seminormal_rep(group: FiniteGroup, partition) -> Rep:
    """Young seminormal form of S_n, rational matrix entries."""
    if group.perms is None:
        raise ValueError("seminormal representation needs permutation images")
    n = len(group.perms[0])
    if sum(partition) != n or n > 5:
        raise ValueError(f"unsupported partition {partition} for degree {n}")
    partition = tuple(sorted(partition, reverse=True))
    tableaux = _standard_tableaux(partition)
    index = {frozenset(t.items()): i for i, t in enumerate(tableaux)}
    dim = len(tableaux)

    def transposition_matrix(k):
        m = [[ZERO] * dim for _ in range(dim)]
        for i, t in enumerate(tableaux):
            d = _axial_distance(t, k)
            dd = Fraction(1, d)
            swapped = dict(t)
            swapped[k], swapped[k + 1] = t[k + 1], t[k]
            key = frozenset(swapped.items())
            if key in index:
                j = index[key]
                m[i][i] = cyc(dd)
                if j > i:
                    m[i][j] = cyc(1 - dd * dd)
                    m[j][i] = cyc(1)
            else:
                m[i][i] = cyc(dd)  # +1 or -1, same row or column
        return m

    smat = {k: transposition_matrix(k) for k in range(1, n)}
    mats = []
    for p in group.perms:
        word = _perm_to_adjacent_word(p)
        m = linalg.identity(dim, ONE, ZERO)
        for k in word:
            m = linalg.mat_mul(m, smat[k])
        mats.append(m)
    return Rep(group, mats, name=f"seminormal{partition}")


def _perm_to_adjacent_word(p):
    """Write p as a product of adjacent transpositions (applied right to left)."""
    p = list(p)
    word = []
    # bubble sort; composition convention matches _compose (q first, then p)
    arr = list(p)
    n = len(arr)
    for i in range(n):
        for j in range(n - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                word.append(j + 1)
    word.reverse()
    return word


def dihedral_two_dim(group: FiniteGroup) -> Rep:
    """2-dimensional representation of a dihedral group of order 8."""
    rot = next((g for g in range(group.n) if group.order_of(g) == 4), None)
    if rot is None or group.n != 8:
        raise ValueError("not a dihedral group of order 8")
    rot_sub = group.subgroup_generated([rot])
    ref = next(g for g in range(group.n) if g not in rot_sub and group.order_of(g) == 2)
    i = root_of_unity(4, 1)
    rot_m = [[ZERO, -ONE], [ONE, ZERO]]
    ref_m = [[ONE, ZERO], [ZERO, -ONE]]
    mats = [None] * group.n
    mats[0] = linalg.identity(2, ONE, ZERO)
    frontier = [0]
    gens = [(rot, rot_m), (ref, ref_m)]
    while frontier:
        x = frontier.pop()
        for g, gm in gens:
            y = group.table[x][g]
            if mats[y] is None:
                mats[y] = linalg.mat_mul(mats[x], gm)
                frontier.append(y)
    return Rep(group, mats, name="dihedral2")


def product_rep(group: FiniteGroup, rep_a: Rep, sub_a: list[int], rep_b: Rep, sub_b: list[int]) -> Rep:
    """Representation of an internal direct product A x B from reps of the factors.

    sub_a, sub_b list the parent indices of A and B; rep_a, rep_b are
    representations of the corresponding Subgroup views.
    """
    pos_a = {g: i for i, g in enumerate(sub_a)}
    pos_b = {g: i for i, g in enumerate(sub_b)}
    mats = []
    for g in range(group.n):
        found = None
        for a in sub_a:
            b = group.table[group.inv[a]][g]
            if b in pos_b:
                found = (a, b)
                break
        if found is None:
            raise ValueError("element outside the internal product")
        a, b = found
        mats.append(_kron(rep_a.matrices[pos_a[a]], rep_b.matrices[pos_b[b]]))
    return Rep(group, mats, name=f"product({rep_a.name},{rep_b.name})")


def user_rep(group: FiniteGroup, matrices, name="user") -> Rep:
    return Rep(group, matrices, name=name)


def catalog(group: FiniteGroup, kind: str, **params) -> Rep:
    """Named constructor dispatch used by configuration files."""
    if kind == "trivial":
        return trivial_rep(group)
    if kind == "sign":
        return sign_rep(group)
    if kind == "cyclic":
        return cyclic_rep(group, params["j"])
    if kind == "s3_two_dim":
        return seminormal_rep(group, (2, 1))
    if kind == "seminormal":
        return seminormal_rep(group, tuple(params["partition"]))
    if kind == "dihedral2":
        return dihedral_two_dim(group)
    if kind == "product":
        return product_rep(
            group, params["rep_a"], params["sub_a"], params["rep_b"], params["sub_b"]
        )
    if kind == "user":
        return user_rep(group, params["matrices"])
    raise ValueError(f"unknown representation kind {kind!r}")


def irrep_catalog(group: FiniteGroup) -> list[Rep]:
    """All irreducibles for the supported group families."""
    n = group.n
    if group.is_abelian():
        reps = abelian_characters(group)
    elif group.perms is not None and n in (6, 24, 120) and _looks_symmetric(group):
        deg = len(group.perms[0])
        reps = [seminormal_rep(group, p) for p in _partitions(deg)]
    elif n == 8:
        reps = _order8_nonabelian_irreps(group)
    else:
        raise ValueError(f"no irreducible catalogue for this group (order {n})")
    total = sum(r.dim * r.dim for r in reps)
    if total != n:
        raise RuntimeError("irreducible catalogue is incomplete")
    return reps


def _looks_symmetric(group: FiniteGroup) -> bool:
    deg = len(group.perms[0])
    import math

    return group.n == math.factorial(deg)


def _partitions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def _order8_nonabelian_irreps(group: FiniteGroup) -> list[Rep]:
    two = dihedral_two_dim(group)
    rot = next(g for g in range(group.n) if group.order_of(g) == 4)
    rot_sub = group.subgroup_generated([rot])
    ref = next(g for g in range(group.n) if g not in rot_sub and group.order_of(g) == 2)
    linear = []
    for er, ef in itertools.product([1, -1], repeat=2):
        mats = [None] * group.n
        mats[0] = [[ONE]]
        frontier = [0]
        gens = [(rot, [[cyc(er)]]), (ref, [[cyc(ef)]])]
        while frontier:
            x = frontier.pop()
            for g, gm in gens:
                y = group.table[x][g]
                if mats[y] is None:
                    mats[y] = linalg.mat_mul(mats[x], gm)
                    frontier.append(y)
        try:
            linear.append(Rep(group, mats, name=f"chi({er},{ef})"))
        except ValueError:
            continue
    return linear + [two]


# -- character tools ----------------------------------------------------------


def character_inner_product(group: FiniteGroup, chi1: list[Cyc], chi2: list[Cyc]) -> Cyc:
    """(1/|G|) sum over g of chi1(g) conj(chi2(g)), by classes."""
    total = ZERO
    for cls_, v1, v2 in zip(group.conjugacy_classes(), chi1, chi2):
        total = total + cyc(len(cls_)) * v1 * v2.conj()
    return total * cyc(Fraction(1, group.n))


def decompose(rep: Rep, irreps: list[Rep] | None = None) -> dict[str, int]:
    """Multiplicities of the catalogue irreducibles inside rep."""
    if irreps is None:
        irreps = irrep_catalog(rep.group)
    chi = rep.character()
    out = {}
    total = 0
    for irr in irreps:
        m = character_inner_product(rep.group, chi, irr.character())
        if not m.is_rational() or m.as_rational().denominator != 1:
            raise ValueError("non-integer multiplicity; catalogue incomplete?")
        mult = int(m.as_rational())
        if mult:
            out[irr.name] = mult
            total += mult * irr.dim
    if total != rep.dim:
        raise ValueError("catalogue does not cover this group")
    return out


def group_projector(subgroup: FiniteGroup, pi: Rep) -> dict[int, Cyc]:
    """Central idempotent P_pi = (dim/|H|) sum Tr_pi(n^-1) n, as {element: coeff}."""
    if not pi.is_irreducible():
        raise ValueError("group projector requires an irreducible representation")
    scale = cyc(Fraction(pi.dim, subgroup.n))
    return {
        n: scale * pi.trace(subgroup.inv[n])
        for n in range(subgroup.n)
        if pi.trace(subgroup.inv[n])
    }


def centralizer_character(ctx, j: int) -> Rep:
    """Character pi_j of a cyclic centralizer, pinned by pi_j(r) = zeta^j."""
    sub = ctx.centralizer
    return cyclic_rep(sub, j, generator=sub.position[ctx.rep])


def induced_rep(ctx, pi: Rep) -> Rep:
    """Representation of G on C-class x V_pi induced from pi on the centralizer.

    Basis (c, i) with c running over the class in sorted order; the matrix
    of g sends (d, j) to sum_i pi(zeta_d(g))^i_j (g d g^-1, i).
    """
    group = ctx.group
    cls_ = ctx.cls
    pos = {c: k for k, c in enumerate(cls_)}
    dim = len(cls_) * pi.dim
    mats = []
    for g in range(group.n):
        m = [[ZERO] * dim for _ in range(dim)]
        for d in cls_:
            c = group.conj(g, d)
            zeta = ctx.zeta_in_centralizer(d, g)
            block = pi.matrices[zeta]
            for i in range(pi.dim):
                for j in range(pi.dim):
                    m[pos[c] * pi.dim + i][pos[d] * pi.dim + j] = block[i][j]
        mats.append(m)
    return Rep(group, mats, name=f"induced({pi.name})", check=False)
