"""The quantum double of a finite group and its modules.

``DoubleElement`` is a sparse vector over the basis delta_g (x) h carried
by both the double D(G) (semidirect product algebra, tensor coalgebra) and
its dual D~(G) (tensor algebra, semidirect coproduct); which product or
coproduct applies is chosen by the caller, matching how the braided theory
mixes them.  ``CrossedModule`` realizes G-graded G-modules, which are the
same thing as D(G)-modules; the irreducibles V_{C,pi} are built from a
class context and a centralizer irrep.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc, cyc
from .groups import FiniteGroup, ClassContext
from .reps import Rep, irrep_catalog, abelian_characters
from . import linalg

ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


class DoubleElement:
    """Finitely supported map (g, h) -> Cyc over the basis delta_g (x) h."""

    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteGroup, terms=None):
        self.group = group
        self.terms: dict[tuple[int, int], Cyc] = {}
        if terms:
            for key, coeff in terms.items():
                c = coeff if isinstance(coeff, Cyc) else cyc(coeff)
                if c:
                    self.terms[key] = c

    @staticmethod
    def basis(group, g, h, coeff=1) -> "DoubleElement":
        return DoubleElement(group, {(g, h): coeff})

    @staticmethod
    def unit(group) -> "DoubleElement":
        """1 = sum_g delta_g (x) e."""
        return DoubleElement(group, {(g, 0): ONE for g in range(group.n)})

    @staticmethod
    def delta(group, g) -> "DoubleElement":
        return DoubleElement(group, {(g, 0): ONE})

    @staticmethod
    def group_like(group, h) -> "DoubleElement":
        return DoubleElement(group, {(g, h): ONE for g in range(group.n)})

    def _require_same_group(self, other):
        if self.group is not other.group:
            raise ValueError("elements over different groups")

    def __add__(self, other):
        self._require_same_group(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return DoubleElement(self.group, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DoubleElement(self.group, {k: -v for k, v in self.terms.items()})

    def scale(self, coeff) -> "DoubleElement":
        c = coeff if isinstance(coeff, Cyc) else cyc(coeff)
        if not c:
            return DoubleElement(self.group)
        return DoubleElement(self.group, {k: v * c for k, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, DoubleElement):
            return NotImplemented
        return self.group is other.group and not (self - other)

    def dg_mul(self, other: "DoubleElement") -> "DoubleElement":
        """Product of D(G): (delta_g h)(delta_u v) = delta_{g,hu h^-1} delta_g (x) hv."""
        self._require_same_group(other)
        g_ = self.group
        out: dict[tuple[int, int], Cyc] = {}
        for (g, h), a in self.terms.items():
            for (u, v), b in other.terms.items():
                if g == g_.conj(h, u):
                    key = (g, g_.table[h][v])
                    c = a * b
                    s = out.get(key)
                    s = c if s is None else s + c
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return DoubleElement(g_, out)

    def dvee_mul(self, other: "DoubleElement") -> "DoubleElement":
        """Product of the dual double: tensor product algebra."""
        self._require_same_group(other)
        g_ = self.group
        out: dict[tuple[int, int], Cyc] = {}
        for (g, h), a in self.terms.items():
            for (u, v), b in other.terms.items():
                if g == u:
                    key = (g, g_.table[h][v])
                    c = a * b
                    s = out.get(key)
                    s = c if s is None else s + c
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return DoubleElement(g_, out)

    def dg_coproduct(self) -> dict:
        """Tensor coalgebra of D(G): {((a,h),(b,h)): coeff} with ab = g."""
        g_ = self.group
        out = {}
        for (g, h), coeff in self.terms.items():
            for a in range(g_.n):
                b = g_.table[g_.inv[a]][g]
                key = ((a, h), (b, h))
                out[key] = out.get(key, ZERO) + coeff
        return {k: v for k, v in out.items() if v}

    def dvee_coproduct(self) -> dict:
        """Semidirect coproduct of the dual double."""
        g_ = self.group
        out = {}
        for (g, h), coeff in self.terms.items():
            ghg = g_.word(g, h, g_.inv[g])
            for f in range(g_.n):
                key = ((f, g_.conj(g_.inv[f], ghg)), (g_.table[g_.inv[f]][g], h))
                out[key] = out.get(key, ZERO) + coeff
        return {k: v for k, v in out.items() if v}

    def counit(self) -> Cyc:
        total = ZERO
        for (g, h), coeff in self.terms.items():
            if g == 0:
                total = total + coeff
        return total

    def dg_antipode(self) -> "DoubleElement":
        g_ = self.group
        return DoubleElement(
            g_,
            _accumulate(
                ((g_.conj(g_.inv[h], g_.inv[g]), g_.inv[h]), c) for (g, h), c in self.terms.items()
            ),
        )

    def dvee_antipode(self) -> "DoubleElement":
        g_ = self.group
        return DoubleElement(
            g_,
            _accumulate(
                ((g_.inv[g], g_.word(g, g_.inv[h], g_.inv[g])), c)
                for (g, h), c in self.terms.items()
            ),
        )

    def star(self) -> "DoubleElement":
        """Hopf-star of D(G): (delta_g h)* = delta_{h^-1 g h} (x) h^-1."""
        g_ = self.group
        return DoubleElement(
            g_,
            _accumulate(
                ((g_.conj(g_.inv[h], g), g_.inv[h]), c.conj()) for (g, h), c in self.terms.items()
            ),
        )

    def braided_antipode(self) -> "DoubleElement":
        """Antipode of the transmuted double BD(G)."""
        g_ = self.group
        out = {}
        for (g, h), c in self.terms.items():
            comm = g_.commutator(g_.inv[g], h)
            key = (g_.table[comm][g_.inv[g]], g_.word(g, g_.inv[h], g_.inv[g]))
            out[key] = out.get(key, ZERO) + c
        return DoubleElement(g_, {k: v for k, v in out.items() if v})

    def grading(self) -> int:
        """Group grading of a basis element in the transmuted double."""
        if len(self.terms) != 1:
            raise ValueError("grading is defined on basis elements")
        (g, h), _ = next(iter(self.terms.items()))
        return self.group.commutator(self.group.inv[g], h)

    def adjoint_act(self, f: int) -> "DoubleElement":
        """G-action of the transmuted double: f (delta_g h) f^-1 in both slots."""
        g_ = self.group
        return DoubleElement(
            g_,
            _accumulate(((g_.conj(f, g), g_.conj(f, h)), c) for (g, h), c in self.terms.items()),
        )

    def to_vector(self) -> list[Cyc]:
        n = self.group.n
        vec = [ZERO] * (n * n)
        for (g, h), c in self.terms.items():
            vec[g * n + h] = c
        return vec

    def to_json(self) -> list[dict]:
        labels = self.group.labels
        return [
            {"g": labels[g], "h": labels[h], "coeff": c.to_json()}
            for (g, h), c in sorted(self.terms.items())
        ]

    def __repr__(self):
        labels = self.group.labels
        bits = [
            f"({c!r})*d_{labels[g]}|{labels[h]}" for (g, h), c in sorted(self.terms.items())
        ]
        return " + ".join(bits) if bits else "0"


def _accumulate(pairs):
    out = {}
    for key, c in pairs:
        s = out.get(key)
        s = c if s is None else s + c
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return out


def pairing(a: DoubleElement, b: DoubleElement) -> Cyc:
    """Duality pairing <delta_g h, delta_u v> = [g = v^-1][h = u^-1]."""
    g_ = a.group
    total = ZERO
    for (g, h), ca in a.terms.items():
        cb = b.terms.get((g_.inv[h], g_.inv[g]))
        if cb:
            total = total + ca * cb
    return total


def killing_Q(a: DoubleElement, b: DoubleElement) -> Cyc:
    """Quantum Killing form Q(delta_g h, delta_u v) = [g = uvu^-1][h = u]."""
    g_ = a.group
    total = ZERO
    for (u, v), cb in b.terms.items():
        ca = a.terms.get((g_.conj(u, v), u))
        if ca:
            total = total + ca * cb
    return total


def beta(a: DoubleElement) -> DoubleElement:
    """Isomorphism from the linear dual onto the dual double.

    Input keys (g, h) are read as h (x) delta_g; output is in the
    delta_g (x) h basis via h (x) delta_g -> delta_g (x) g^-1 h g.
    """
    g_ = a.group
    return DoubleElement(
        g_,
        _accumulate(((g, g_.conj(g_.inv[g], h)), c) for (g, h), c in a.terms.items()),
    )


def quasi_R(group: FiniteGroup) -> list[tuple[DoubleElement, DoubleElement]]:
    """Quasitriangular structure sum_h delta_h (x) h as tensor factors."""
    out = []
    for h in range(group.n):
        out.append((DoubleElement.delta(group, h), DoubleElement.group_like(group, h)))
    return out


# -- crossed modules ----------------------------------------------------------


class CrossedModule:
    """Finite-dimensional G-graded G-module, i.e. a D(G)-module."""

    def __init__(self, group: FiniteGroup, basis_labels, action, grading, check: bool = True):
        self.group = group
        self.basis = list(basis_labels)
        self.dim = len(self.basis)
        self.action = action  # list over g of dim x dim Cyc matrices
        self.grading = list(grading)
        if check:
            self.verify()

    def verify(self):
        g_ = self.group
        ident = linalg.identity(self.dim, ONE, ZERO)
        if not linalg.mat_eq(self.action[0], ident):
            raise ValueError("identity must act as the identity")
        for a in range(g_.n):
            for b in range(g_.n):
                if not linalg.mat_eq(
                    linalg.mat_mul(self.action[a], self.action[b]),
                    self.action[g_.table[a][b]],
                ):
                    raise ValueError("action is not a homomorphism")
        for h in range(g_.n):
            m = self.action[h]
            for j in range(self.dim):
                target = g_.conj(h, self.grading[j])
                for i in range(self.dim):
                    if m[i][j] and self.grading[i] != target:
                        raise ValueError("action does not intertwine the grading")

    def act(self, h: int, vec):
        return linalg.mat_vec(self.action[h], vec)

    def act_delta(self, g: int, vec):
        return [v if self.grading[i] == g else ZERO for i, v in enumerate(vec)]

    def act_double(self, x: DoubleElement, vec):
        """Action of sum coeff delta_g (x) h."""
        out = [ZERO] * self.dim
        for (g, h), coeff in x.terms.items():
            moved = self.act(h, vec)
            for i in range(self.dim):
                if moved[i] and self.grading[i] == g:
                    out[i] = out[i] + coeff * moved[i]
        return out

    def braiding_with(self, other: "CrossedModule"):
        """Psi(v_i (x) w_j) = |v_i| |> w_j (x) v_i as a sparse map."""
        def psi(i: int, j: int):
            col = [row[j] for row in other.action[self.grading[i]]]
            return [((k, i), c) for k, c in enumerate(col) if c]

        return psi

    def braiding_matrix(self, other: "CrossedModule"):
        dim = self.dim * other.dim
        m = [[ZERO] * dim for _ in range(dim)]
        psi = self.braiding_with(other)
        for i in range(self.dim):
            for j in range(other.dim):
                for (k, l), c in psi(i, j):
                    m[k * self.dim + l][i * other.dim + j] = c
        return m

    def direct_sum(self, other: "CrossedModule") -> "CrossedModule":
        dim = self.dim + other.dim
        action = []
        for g in range(self.group.n):
            m = [[ZERO] * dim for _ in range(dim)]
            for i in range(self.dim):
                for j in range(self.dim):
                    m[i][j] = self.action[g][i][j]
            for i in range(other.dim):
                for j in range(other.dim):
                    m[self.dim + i][self.dim + j] = other.action[g][i][j]
            action.append(m)
        return CrossedModule(
            self.group,
            list(self.basis) + list(other.basis),
            action,
            self.grading + other.grading,
            check=False,
        )


def build_VCpi(ctx: ClassContext, pi: Rep) -> CrossedModule:
    """Irreducible crossed module on basis c (x) v_i with grading c."""
    group = ctx.group
    cls_ = ctx.cls
    pos = {c: k for k, c in enumerate(cls_)}
    dim = len(cls_) * pi.dim
    action = []
    for h in range(group.n):
        m = [[ZERO] * dim for _ in range(dim)]
        for c in cls_:
            target = group.conj(h, c)
            block = pi.matrices[ctx.zeta_in_centralizer(c, h)]
            for i in range(pi.dim):
                for j in range(pi.dim):
                    m[pos[target] * pi.dim + i][pos[c] * pi.dim + j] = block[i][j]
        action.append(m)
    grading = [c for c in cls_ for _ in range(pi.dim)]
    labels = [
        (group.labels[c], i) for c in cls_ for i in range(pi.dim)
    ]
    return CrossedModule(group, labels, action, grading)


def regular_crossed_module(group: FiniteGroup) -> CrossedModule:
    """The double as a module over itself by left multiplication."""
    n = group.n
    basis = [(g, h) for g in range(n) for h in range(n)]
    pos = {b: i for i, b in enumerate(basis)}
    action = []
    for f in range(n):
        m = [[ZERO] * len(basis) for _ in range(len(basis))]
        for (g, h) in basis:
            m[pos[(group.conj(f, g), group.table[f][h])]][pos[(g, h)]] = ONE
        action.append(m)
    grading = [g for (g, h) in basis]
    return CrossedModule(group, basis, action, grading, check=False)


def bdg_crossed_module(group: FiniteGroup) -> CrossedModule:
    """The double itself as a crossed module: adjoint action, commutator grading."""
    n = group.n
    basis = [(g, h) for g in range(n) for h in range(n)]
    pos = {b: i for i, b in enumerate(basis)}
    action = []
    for f in range(n):
        m = [[ZERO] * len(basis) for _ in range(len(basis))]
        for (g, h) in basis:
            m[pos[(group.conj(f, g), group.conj(f, h))]][pos[(g, h)]] = ONE
        action.append(m)
    grading = [group.commutator(group.inv[g], h) for (g, h) in basis]
    return CrossedModule(group, basis, action, grading, check=False)


# -- Artin-Wedderburn ----------------------------------------------------------


def wedderburn_element(ctx: ClassContext, pi: Rep, c: int, i: int, d: int, j: int) -> DoubleElement:
    """Matrix unit image s_{ci}^{dj} = (dim/|C_G|) sum_n pi(n^-1)^j_i delta_c (x) q_c n q_d^-1."""
    group = ctx.group
    sub = ctx.centralizer
    scale = cyc(Fraction(pi.dim, sub.n))
    terms = {}
    for n_idx in range(sub.n):
        coeff = pi.matrices[sub.inv[n_idx]][j][i] * scale
        if coeff:
            n_parent = sub.embedding[n_idx]
            h = group.word(ctx.q[c], n_parent, group.inv[ctx.q[d]])
            key = (c, h)
            terms[key] = terms.get(key, ZERO) + coeff
    return DoubleElement(group, terms)


def block_idempotent(ctx: ClassContext, pi: Rep) -> DoubleElement:
    total = DoubleElement(ctx.group)
    for c in ctx.cls:
        for i in range(pi.dim):
            total = total + wedderburn_element(ctx, pi, c, i, c, i)
    return total


def centralizer_irreps(ctx: ClassContext) -> list[Rep]:
    """Irreducibles of the centralizer subgroup (catalogue families only)."""
    sub = ctx.centralizer
    if sub.n == ctx.group.n:
        parent_irreps = irrep_catalog(ctx.group)
        return [
            Rep(sub, [r.matrices[g] for g in sub.embedding], name=r.name, check=False)
            for r in parent_irreps
        ]
    if sub.is_abelian():
        return abelian_characters(sub)
    if sub.n == 8:
        from .reps import _order8_nonabelian_irreps

        return _order8_nonabelian_irreps(sub)
    raise ValueError("no centralizer irreducible catalogue for this class")


def double_irreps(group: FiniteGroup):
    """All (context, pi) pairs labelling the irreducibles of the double."""
    out = []
    for cls_ in group.conjugacy_classes():
        ctx = ClassContext(group, cls_[0])
        for pi in centralizer_irreps(ctx):
            out.append((ctx, pi))
    return out


def decompose_DG_module(module: CrossedModule, pairs=None) -> dict:
    """Multiplicity of each V_{C,pi} inside the module, via block idempotent ranks."""
    group = module.group
    if pairs is None:
        pairs = double_irreps(group)
    out = {}
    total = 0
    for ctx, pi in pairs:
        p = block_idempotent(ctx, pi)
        cols = []
        for j in range(module.dim):
            vec = [ONE if i == j else ZERO for i in range(module.dim)]
            cols.append(module.act_double(p, vec))
        r = linalg.rank(cols)
        dim_v = len(ctx.cls) * pi.dim
        if r % dim_v:
            raise RuntimeError("idempotent rank is not a multiple of the block dimension")
        mult = r // dim_v
        if mult:
            out[(group.labels[ctx.rep], pi.name)] = mult
        total += r
    if total != module.dim:
        raise ValueError("blocks do not exhaust the module; incomplete catalogue")
    return out
