"""First-order differential calculi on the function algebra, the group
algebra and the dual double, with the gamma/rho matrices and partial
derivatives feeding the geometry layer.

Three concrete carriers:

* ``FunctionCalculus``     -- Cayley-graph calculus on C(G) from an
  ad-stable subset S, basis one-forms e_c, d = sum_c (R_c - id) (x) e_c.
* ``GroupAlgebraCalculus`` -- calculus on the group algebra from a matrix
  representation, with invariant forms e^g = rho(g) - 1 inside End(V).
* ``DoubleCalculus``       -- the calculus on the dual double whose
  invariant forms are End(V_{C,pi}).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc
from .groups import FiniteGroup, ClassContext
from .reps import Rep, induced_rep, decompose, irrep_catalog
from .double import build_VCpi
from . import linalg

ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


# -- calculus on C(G) -----------------------------------------------------------


class FunctionCalculus:
    """Bicovariant calculus on C(G) attached to an ad-stable S not containing e."""

    def __init__(self, group: FiniteGroup, subset):
        subset = sorted({group.element(s) if isinstance(s, str) else s for s in subset})
        if 0 in subset:
            raise ValueError("the identity cannot generate an arrow")
        for c in subset:
            for g in range(group.n):
                if group.conj(g, c) not in subset:
                    raise ValueError("subset is not stable under conjugation")
        self.group = group
        self.subset = subset

    @property
    def dim(self) -> int:
        return len(self.subset)

    def is_connected(self) -> bool:
        return len(self.group.subgroup_generated(self.subset)) == self.group.n

    def d(self, fun):
        """d(f) = sum_c (R_c - id)(f) (x) e_c as dict (x, c) -> coeff."""
        out = {}
        for c in self.subset:
            for x in range(self.group.n):
                val = fun[self.group.table[x][c]] - fun[x]
                if val:
                    out[(x, c)] = out.get((x, c), ZERO) + val
        return out

    def right_translate(self, fun, c):
        """(R_c f) with e_c . delta_g = R_c(delta_g) e_c, R_c(delta_g) = delta_{g c^-1}."""
        out = [ZERO] * self.group.n
        for x in range(self.group.n):
            out[self.group.table[x][self.group.inv[c]]] = fun[x]
        return out

    def one_form_times_function(self, form, fun):
        """(sum delta_x e_c) . f using e_c f = R_c(f) e_c."""
        out = {}
        for (x, c), coeff in form.items():
            val = coeff * fun[self.group.table[x][c]]
            if val:
                out[(x, c)] = out.get((x, c), ZERO) + val
        return out

    def function_times_one_form(self, fun, form):
        out = {}
        for (x, c), coeff in form.items():
            val = fun[x] * coeff
            if val:
                out[(x, c)] = out.get((x, c), ZERO) + val
        return out

    def leibniz_holds(self) -> bool:
        n = self.group.n
        for g in range(n):
            for h in range(n):
                fg = [ONE if x == g else ZERO for x in range(n)]
                fh = [ONE if x == h else ZERO for x in range(n)]
                prod = [a * b for a, b in zip(fg, fh)]
                lhs = self.d(prod)
                rhs = self.one_form_times_function(self.d(fg), fh)
                for k, v in self.function_times_one_form(fg, self.d(fh)).items():
                    rhs[k] = rhs.get(k, ZERO) + v
                keys = set(lhs) | set(rhs)
                if any(lhs.get(k, ZERO) != rhs.get(k, ZERO) for k in keys):
                    return False
        return True

    def is_inner(self) -> bool:
        """theta = sum_c e_c satisfies df = [theta, f]."""
        n = self.group.n
        for g in range(n):
            fun = [ONE if x == g else ZERO for x in range(n)]
            comm = {}
            for c in self.subset:
                theta_c = {(x, c): ONE for x in range(n)}
                left = self.one_form_times_function(theta_c, fun)
                right = self.function_times_one_form(fun, theta_c)
                for k, v in left.items():
                    comm[k] = comm.get(k, ZERO) + v
                for k, v in right.items():
                    comm[k] = comm.get(k, ZERO) - v
            dg = self.d(fun)
            keys = set(comm) | set(dg)
            if any(comm.get(k, ZERO) != dg.get(k, ZERO) for k in keys):
                return False
        return True

    def right_coaction_check(self) -> bool:
        """Delta_R(h dg) = h_1 dg_1 (x) h_2 g_2 on the delta basis, exactly."""
        group = self.group
        n = group.n
        for h in range(n):
            for g in range(n):
                fh = [ONE if x == h else ZERO for x in range(n)]
                fg = [ONE if x == g else ZERO for x in range(n)]
                form = self.function_times_one_form(fh, self.d(fg))
                # Delta_R(delta_x (x) e_c) = sum_{ab=x} delta_a (x) e_{b c b^-1} (x) delta_b
                lhs = {}
                for (x, c), coeff in form.items():
                    for a in range(n):
                        b = group.table[group.inv[a]][x]
                        key = (a, group.conj(b, c), b)
                        lhs[key] = lhs.get(key, ZERO) + coeff
                rhs = {}
                for a in range(n):
                    b = group.table[group.inv[a]][g]
                    for cc in range(n):
                        dd = group.table[group.inv[cc]][h]
                        if dd != b:
                            continue
                        fcc = [ONE if x == cc else ZERO for x in range(n)]
                        fa = [ONE if x == a else ZERO for x in range(n)]
                        part = self.function_times_one_form(fcc, self.d(fa))
                        for (x, c), coeff in part.items():
                            key = (x, c, b)
                            rhs[key] = rhs.get(key, ZERO) + coeff
                keys = set(lhs) | set(rhs)
                if any(lhs.get(k, ZERO) != rhs.get(k, ZERO) for k in keys):
                    return False
        return True

    def quotient_graph(self, ctx: ClassContext):
        """Arrows c -> d c d^-1 (where different) on the class as vertex set."""
        arrows = set()
        for c in ctx.cls:
            for d in ctx.cls:
                target = ctx.group.conj(d, c)
                if target != c:
                    arrows.add((c, target))
        return sorted(arrows)


def fodc_functions(group: FiniteGroup, subset) -> FunctionCalculus:
    return FunctionCalculus(group, subset)


# -- calculus on the group algebra ----------------------------------------------


class GroupAlgebraCalculus:
    """Calculus on the group algebra with invariant forms rho(kG+) in End(V)."""

    def __init__(self, rho: Rep):
        self.group = rho.group
        self.rho = rho
        self.e_matrices = [
            [
                [rho.matrices[g][i][j] - (ONE if i == j else ZERO) for j in range(rho.dim)]
                for i in range(rho.dim)
            ]
            for g in range(self.group.n)
        ]
        flat = [self._flatten(m) for m in self.e_matrices]
        rows, pivots = linalg.rref(flat)
        self.lambda_dim = len(rows)

    def _flatten(self, m):
        return [x for row in m for x in row]

    def e_matrix(self, g: int):
        return self.e_matrices[g]

    def is_connected(self) -> bool:
        """Connected iff the representation is faithful."""
        ident = linalg.identity(self.rho.dim, ONE, ZERO)
        return sum(1 for m in self.rho.matrices if linalg.mat_eq(m, ident)) == 1

    def is_inner(self) -> tuple[bool, list | None]:
        """Solve theta rho(g) - theta = rho(g) - 1 for theta in the span of the e^g."""
        span = [self._flatten(self.e_matrices[g]) for g in range(self.group.n)]
        rows, pivots = linalg.rref(span)
        d2 = self.rho.dim * self.rho.dim
        constraints = []
        rhs_vec = []
        # unknown theta expressed in the rref basis of Lambda^1
        for g in range(self.group.n):
            for i in range(self.rho.dim):
                for j in range(self.rho.dim):
                    row = []
                    for base in rows:
                        bm = [base[k * self.rho.dim: (k + 1) * self.rho.dim] for k in range(self.rho.dim)]
                        prod = linalg.mat_mul(bm, self.rho.matrices[g])
                        row.append(prod[i][j] - bm[i][j])
                    constraints.append(row)
                    rhs_vec.append(self.e_matrices[g][i][j])
        sol = linalg.solve(constraints, rhs_vec)
        if sol is None:
            return False, None
        theta = [[ZERO] * self.rho.dim for _ in range(self.rho.dim)]
        for coeff, base in zip(sol, rows):
            for i in range(self.rho.dim):
                for j in range(self.rho.dim):
                    theta[i][j] = theta[i][j] + coeff * base[i * self.rho.dim + j]
        return True, theta

    def lambda_content(self) -> dict:
        """Irreducible content of the forms: all non-trivial blocks of rho."""
        full = decompose(self.rho)
        out = {}
        for irr in irrep_catalog(self.group):
            if irr.name in full and not _is_trivial(irr):
                out[irr.name] = irr.dim * irr.dim
        return out


def _is_trivial(rep: Rep) -> bool:
    return rep.dim == 1 and all(m[0][0] == ONE for m in rep.matrices)


def fodc_group_algebra(rho: Rep) -> GroupAlgebraCalculus:
    return GroupAlgebraCalculus(rho)


class LambdaBasis:
    """A chosen basis B of invariant forms with its gamma and rho matrices."""

    def __init__(self, calculus: GroupAlgebraCalculus, preferred=None):
        group = calculus.group
        candidates = []
        if preferred is not None:
            candidates = [group.element(x) if isinstance(x, str) else x for x in preferred]
        else:
            candidates = [g for g in range(1, group.n)]
        chosen = []
        chosen_rows = []
        for g in candidates:
            row = calculus._flatten(calculus.e_matrices[g])
            if not any(row):
                continue
            if chosen_rows and linalg.row_space_contains(chosen_rows, row):
                if preferred is not None:
                    raise ValueError("preferred basis is linearly dependent")
                continue
            chosen.append(g)
            chosen_rows.append(row)
        if len(chosen) != calculus.lambda_dim:
            raise ValueError("basis does not span the invariant forms")
        self.calculus = calculus
        self.group = group
        self.basis = chosen  # group elements labelling e^i
        self._rows = chosen_rows
        self._coord_cache: dict[int, list] = {}
        self._gamma_cache: dict[int, list] = {}
        self._rho_cache: dict[int, list] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, g: int):
        """Coordinates of e^g in the chosen basis."""
        if g not in self._coord_cache:
            target = self.calculus._flatten(self.calculus.e_matrices[g])
            sol = linalg.solve(
                [list(col) for col in zip(*self._rows)], target
            )
            if sol is None:
                raise RuntimeError("basis fails to span e^g")
            self._coord_cache[g] = sol
        return self._coord_cache[g]

    def gamma(self, g: int):
        """gamma(g)^i_j: coordinates of e^{ig} - e^g in the basis (rows: i)."""
        if g not in self._gamma_cache:
            group = self.group
            base = self.coords(g)
            rows = []
            for i in self.basis:
                top = self.coords(group.table[i][g])
                rows.append([a - b for a, b in zip(top, base)])
            self._gamma_cache[g] = rows
        return self._gamma_cache[g]

    def rho_matrix(self, g: int):
        """rho(g)^i_j: coordinates of e^{g^-1 i g}."""
        if g not in self._rho_cache:
            group = self.group
            self._rho_cache[g] = [
                self.coords(group.conj(group.inv[g], i)) for i in self.basis
            ]
        return self._rho_cache[g]

    def partial_coefficients(self, g: int):
        """d g = partial_i g (x) e^i with partial_i g = g <e_i, e^g>; the scalars."""
        return self.coords(g)

    def gamma_rho_commutation_holds(self, conjugators=None) -> bool:
        """gamma(g) rho(k) = rho(k) gamma(k^-1 g k); conjugators defaults to
        the whole group (a generating set suffices)."""
        group = self.group
        ks = range(group.n) if conjugators is None else conjugators
        for g in range(group.n):
            for k in ks:
                lhs = linalg.mat_mul(self.gamma(g), self.rho_matrix(k))
                rhs = linalg.mat_mul(self.rho_matrix(k), self.gamma(group.conj(group.inv[k], g)))
                if not linalg.mat_eq(lhs, rhs):
                    return False
        return True

    def gamma_well_defined(self) -> bool:
        """e^g = e^h must imply gamma(g) = gamma(h)."""
        group = self.group
        for g in range(group.n):
            for h in range(g + 1, group.n):
                if linalg.mat_eq(self.calculus.e_matrices[g], self.calculus.e_matrices[h]):
                    if not linalg.mat_eq(self.gamma(g), self.gamma(h)):
                        return False
        return True


def lambda_basis(calculus: GroupAlgebraCalculus, preferred=None) -> LambdaBasis:
    return LambdaBasis(calculus, preferred)


# -- calculus on the dual double -------------------------------------------------


class DoubleCalculus:
    """Coirreducible calculus on the dual double with forms End(V_{C,pi}).

    One-form elements are dicts ((g, h), (c, i, d, j)) -> Cyc standing for
    (delta_g (x) h) (x) E_{ci}^{dj}.
    """

    def __init__(self, ctx: ClassContext, pi: Rep):
        if ctx.rep == 0 and _is_trivial(pi):
            raise ValueError("the trivial pair does not define a calculus")
        self.ctx = ctx
        self.pi = pi
        self.group = ctx.group
        self.module = build_VCpi(ctx, pi)
        self.cls = ctx.cls

    def form_indices(self):
        for c in self.cls:
            for i in range(self.pi.dim):
                for d in self.cls:
                    for j in range(self.pi.dim):
                        yield (c, i, d, j)

    def grading(self, c, i, d, j) -> int:
        return self.group.table[c][self.group.inv[d]]

    def _act_dual(self, h, d, j):
        """h |> E^{dj} = pi(zeta_d(h)^-1)^j_l E^{(h d h^-1) l}."""
        group = self.group
        z = self.ctx.zeta_in_centralizer(d, h)
        zinv = self.ctx.centralizer.inv[z]
        target = group.conj(h, d)
        return [(target, l, self.pi.matrices[zinv][j][l]) for l in range(self.pi.dim)]

    def d_delta(self, g: int):
        """d(delta_g) = sum_c (delta_{g c^-1} - delta_g) (x) sum_i E_{ci}^{ci}."""
        group = self.group
        out = {}
        for c in self.cls:
            for i in range(self.pi.dim):
                for sign, x in ((ONE, group.table[g][group.inv[c]]), (-ONE, g)):
                    key = ((x, 0), (c, i, c, i))
                    out[key] = out.get(key, ZERO) + sign
        return {k: v for k, v in out.items() if v}

    def d_group(self, h: int):
        """d h = sum_c chc^-1 (x) E_{ci} (x) h^-1 |> E^{ci}  -  h (x) sum E_{ci}^{ci}."""
        group = self.group
        out = {}
        hinv = group.inv[h]
        for c in self.cls:
            mid = group.conj(c, h)
            for i in range(self.pi.dim):
                for (dtar, l, coeff) in self._act_dual(hinv, c, i):
                    if coeff:
                        for x in range(group.n):
                            key = ((x, mid), (c, i, dtar, l))
                            out[key] = out.get(key, ZERO) + coeff
                key0 = None
                for x in range(group.n):
                    key0 = ((x, h), (c, i, c, i))
                    out[key0] = out.get(key0, ZERO) - ONE
        return {k: v for k, v in out.items() if v}

    def d_basis(self, g: int, h: int):
        """d(delta_g (x) h) by the Leibniz rule on delta_g . (1 (x) h)."""
        out = {}
        for ((x, y), form), coeff in self.d_delta(g).items():
            # (d delta_g) . (1 (x) h)
            for (key, c2) in self._right_mult_group({((x, y), form): coeff}, h).items():
                out[key] = out.get(key, ZERO) + c2
        dh = self.d_group(h)
        # delta_g . dh  (left multiplication in the tensor algebra)
        for ((x, y), form), coeff in dh.items():
            if x == g:
                key = ((x, y), form)
                out[key] = out.get(key, ZERO) + coeff
        return {k: v for k, v in out.items() if v}

    def _right_mult_delta(self, form_elt, g: int):
        """omega . delta_g with E_{ci}^{dj} . delta_g = delta_{g c^-1} (x) E_{ci}^{dj}."""
        group = self.group
        out = {}
        for ((x, y), (c, i, d, j)), coeff in form_elt.items():
            if x == group.table[g][group.inv[c]]:
                key = ((x, y), (c, i, d, j))
                out[key] = out.get(key, ZERO) + coeff
        return {k: v for k, v in out.items() if v}

    def _right_mult_group(self, form_elt, h: int):
        """omega . h with E_{ci}^{dj} . h = chc^-1 (x) E_{ci} (x) h^-1 |> E^{dj}."""
        group = self.group
        hinv = group.inv[h]
        out = {}
        for ((x, y), (c, i, d, j)), coeff in form_elt.items():
            mid = group.table[y][group.conj(c, h)]
            for (dtar, l, cc) in self._act_dual(hinv, d, j):
                val = coeff * cc
                if val:
                    key = ((x, mid), (c, i, dtar, l))
                    out[key] = out.get(key, ZERO) + val
        return {k: v for k, v in out.items() if v}

    def right_mult(self, form_elt, g: int, h: int):
        """omega . (delta_g (x) h)."""
        return self._right_mult_group(self._right_mult_delta(form_elt, g), h)

    def left_mult(self, g: int, h: int, form_elt):
        group = self.group
        out = {}
        for ((x, y), form), coeff in form_elt.items():
            if x == g:
                key = ((x, group.table[h][y]), form)
                out[key] = out.get(key, ZERO) + coeff
        return {k: v for k, v in out.items() if v}

    def theta(self):
        out = {}
        for x in range(self.group.n):
            for c in self.cls:
                for i in range(self.pi.dim):
                    out[((x, 0), (c, i, c, i))] = ONE
        return out

    def inner_check(self) -> bool:
        """d a = theta a - a theta on the algebra basis."""
        theta = self.theta()
        group = self.group
        for g in range(group.n):
            for h in range(group.n):
                lhs = self.d_basis(g, h)
                rhs = self.right_mult(theta, g, h)
                for key, coeff in self.left_mult(g, h, theta).items():
                    rhs[key] = rhs.get(key, ZERO) - coeff
                keys = set(lhs) | set(rhs)
                if any(lhs.get(k, ZERO) != rhs.get(k, ZERO) for k in keys):
                    return False
        return True

    def leibniz_check(self) -> bool:
        """d(ab) = (da) b + a (db) over all pairs of algebra basis elements."""
        group = self.group
        for g1 in range(group.n):
            for h1 in range(group.n):
                da = self.d_basis(g1, h1)
                for g2 in range(group.n):
                    for h2 in range(group.n):
                        # tensor product algebra: delta functions must agree
                        lhs = self.d_basis(g1, group.table[h1][h2]) if g2 == g1 else {}
                        rhs = self.right_mult(da, g2, h2)
                        db = self.d_basis(g2, h2)
                        for key, coeff in self.left_mult(g1, h1, db).items():
                            rhs[key] = rhs.get(key, ZERO) + coeff
                        keys = set(lhs) | set(rhs)
                        if any(lhs.get(k, ZERO) != rhs.get(k, ZERO) for k in keys):
                            return False
        return True

    def pushforward_dims(self):
        """Dimensions of the induced form spaces on the two quotients.

        p1 keeps delta_pi,1 |C| arrow generators on C(G); p2 keeps
        delta_C,{e} dim(pi)^2 generators on the group algebra.
        """
        p1 = len(self.cls) if _is_trivial(self.pi) else 0
        p2 = self.pi.dim * self.pi.dim if self.ctx.rep == 0 else 0
        return p1, p2


def fodc_double(ctx: ClassContext, pi: Rep) -> DoubleCalculus:
    return DoubleCalculus(ctx, pi)


# -- base calculi of the two bundles ----------------------------------------------


def base_calculus_group_algebra(ctx: ClassContext, pi: Rep):
    """Base and structure calculi of the bundle over the group algebra.

    Returns (GroupAlgebraCalculus from the induced representation,
    FunctionCalculus or None on the structure quantum group, ver_is_zero).
    """
    rho = induced_rep(ctx, pi)
    base = GroupAlgebraCalculus(rho)
    structure = None
    if _is_trivial(pi) and ctx.rep != 0:
        structure = FunctionCalculus(ctx.group, ctx.cls)
    ver_is_zero = not _is_trivial(pi)
    return base, structure, ver_is_zero


def base_calculus_functions(ctx: ClassContext, pi: Rep):
    """Base calculus on C(G) and the coset quotient graph.

    Returns (FunctionCalculus or None, arrows of the quotient graph).
    """
    if ctx.rep == 0:
        return None, []
    calc = FunctionCalculus(ctx.group, ctx.cls)
    return calc, calc.quotient_graph(ctx)
