"""Kazhdan-Lusztig cells of S_n and right cell modules with exact C-basis action.

Cells are computed combinatorially (P-symbol / Q-symbol / shape classes) as the
production path; the operational pre-orders from C-basis multiplication are
exposed at small n as an independent oracle against the characterizations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .combinat import Partition, check_partition, dominates, enumerate_standard
from .errors import InfeasibleError
from .hecke import (
    BASIS_C,
    BASIS_T,
    HeckeElt,
    KLTable,
    kl_table,
    mul_gen_right,
    multiply_t,
    to_c,
    to_t,
)
from .laurent import ONE, FieldSpec, Laurent
from .rsk import RskPair, rsk, rsk_inverse, rsk_shape
from .symgroup import Perm, all_perms, has_right_descent, identity

Matrix = list  # list[list[Laurent]]


@dataclass
class CellDecomposition:
    n: int
    left_cells: list[frozenset[Perm]]
    right_cells: list[frozenset[Perm]]
    two_sided_cells: list[frozenset[Perm]]
    shape_of: dict[frozenset[Perm], Partition] = field(default_factory=dict)


def cell_decomposition(n: int) -> CellDecomposition:
    """Cells via RSK: left by Q-symbol, right by P-symbol, two-sided by shape."""
    by_q: dict[tuple, set[Perm]] = {}
    by_p: dict[tuple, set[Perm]] = {}
    by_shape: dict[Partition, set[Perm]] = {}
    for w in all_perms(n):
        pair = rsk(w)
        by_q.setdefault(pair.Q.rows, set()).add(w)
        by_p.setdefault(pair.P.rows, set()).add(w)
        by_shape.setdefault(pair.shape, set()).add(w)
    left = [frozenset(v) for _, v in sorted(by_q.items())]
    right = [frozenset(v) for _, v in sorted(by_p.items())]
    two = [frozenset(v) for _, v in sorted(by_shape.items())]
    shape_of = {}
    for cell in left + right + two:
        shape_of[cell] = rsk_shape(next(iter(cell)))
    return CellDecomposition(n, left, right, two, shape_of)


def leq_lr(y: Perm, w: Perm) -> bool:
    """The two-sided KL pre-order, combinatorially: shape(y) dominated by shape(w)."""
    if len(y) != len(w):
        raise ValueError("mixed sizes")
    return dominates(rsk_shape(w), rsk_shape(y))


def _elementary_edges(n: int, table: KLTable, side: str) -> dict[Perm, set[Perm]]:
    """y is an edge target of w iff C_y occurs in C_s C_w (left) or C_w C_s (right)."""
    edges: dict[Perm, set[Perm]] = {w: set() for w in all_perms(n)}
    for w in edges:
        cw = table.c_elt(w)
        for i in range(1, n):
            s_elt = to_t(HeckeElt(n, BASIS_C, {_simple(n, i): ONE}), table)
            if side == "left":
                prod = multiply_t(s_elt, cw)
            else:
                prod = multiply_t(cw, s_elt)
            for y, c in to_c(prod, table).terms.items():
                if c:
                    edges[w].add(y)
    return edges


def _simple(n: int, i: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _reachability(edges: dict[Perm, set[Perm]]) -> dict[Perm, set[Perm]]:
    reach: dict[Perm, set[Perm]] = {}
    for w in edges:
        seen = {w}
        stack = [w]
        while stack:
            u = stack.pop()
            for y in edges[u]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        reach[w] = seen
    return reach


def operational_preorder(n: int, side: str = "left", max_n: int = 4, force: bool = False) -> set[tuple[Perm, Perm]]:
    """The KL pre-order from C-basis multiplication: pairs (y, w) with y <= w.

    Exposed as an oracle against the combinatorial characterizations; the cost
    grows sharply, hence the default bound.
    """
    if n > max_n and not force:
        raise InfeasibleError(
            f"operational pre-order is bounded to n <= {max_n} (got n={n}); pass force=True",
            size=n,
            bound=max_n,
        )
    table = kl_table(n)
    if side in ("left", "right"):
        edges = _elementary_edges(n, table, side)
    elif side == "two":
        left = _elementary_edges(n, table, "left")
        right = _elementary_edges(n, table, "right")
        edges = {w: left[w] | right[w] for w in left}
    else:
        raise ValueError(f"unknown side {side!r}")
    reach = _reachability(edges)
    return {(y, w) for w, ys in reach.items() for y in ys}


def operational_cells(n: int, side: str = "left", max_n: int = 4, force: bool = False) -> list[frozenset[Perm]]:
    """Cells as mutual-equivalence classes of the operational pre-order."""
    pre = operational_preorder(n, side, max_n, force)
    perms = all_perms(n)
    cells = []
    assigned: set[Perm] = set()
    for w in perms:
        if w in assigned:
            continue
        cls = frozenset(
            y for y in perms if (y, w) in pre and (w, y) in pre
        )
        assigned |= cls
        cells.append(cls)
    return sorted(cells, key=lambda c: sorted(c))


def _mat_zero(d: int) -> Matrix:
    return [[Laurent() for _ in range(d)] for _ in range(d)]


def _mat_identity(d: int) -> Matrix:
    m = _mat_zero(d)
    for i in range(d):
        m[i][i] = ONE
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    out = _mat_zero(d)
    for i in range(d):
        ai = a[i]
        oi = out[i]
        for k in range(d):
            x = ai[k]
            if not x:
                continue
            bk = b[k]
            for j in range(d):
                y = bk[j]
                if y:
                    oi[j] = oi[j] + x * y
    return out


def mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


class CellModule:
    """The right cell module R(lam) on the cell with a fixed P-symbol.

    The basis is indexed by standard Q-symbols in enumerate_standard order with
    t_lam first; the default anchor cell (p_index=0) has P-symbol t_lam, the
    cell containing w_{0,lam'}.  Generator action matrices are obtained by
    multiplying in H and keeping, modulo lower terms, only coefficients of C_z
    with shape(z) = lam in the anchored cell.
    """

    def __init__(self, lam: Partition, table: KLTable | None = None, p_index: int = 0):
        self.lam = check_partition(lam)
        self.n = sum(self.lam)
        self.table = table or kl_table(self.n)
        self.tableaux = enumerate_standard(self.lam)
        self.p_symbol = self.tableaux[p_index]
        self.dim = len(self.tableaux)
        self.perms = tuple(
            rsk_inverse(RskPair(self.p_symbol, q)) for q in self.tableaux
        )
        self.index = {w: i for i, w in enumerate(self.perms)}
        self._gen: dict[int, Matrix] = {}
        self._word_cache: dict[Perm, Matrix] = {identity(self.n): _mat_identity(self.dim)}

    def gen_matrix(self, i: int) -> Matrix:
        """Matrix of the right action of T_{s_i} on the C-basis classes."""
        if i in self._gen:
            return self._gen[i]
        mat = _mat_zero(self.dim)
        for row_idx, w in enumerate(self.perms):
            cw = self.table.c_elt(w)
            prod = to_c(mul_gen_right(cw, i), self.table)
            for z, c in prod.terms.items():
                col = self.index.get(z)
                if col is not None:
                    mat[row_idx][col] = c
                else:
                    shp = rsk_shape(z)
                    # everything outside the cell must sit strictly below lam
                    if shp == self.lam or not dominates(self.lam, shp):
                        raise AssertionError(
                            f"cell reduction leak at {z} (shape {shp}) for lam={self.lam}"
                        )
        self._gen[i] = mat
        return mat

    def generator_matrices(self) -> list[Matrix]:
        return [self.gen_matrix(i) for i in range(1, self.n)]

    def word_matrix(self, u: Perm) -> Matrix:
        """Matrix of T_u, built along the weak order."""
        cached = self._word_cache.get(u)
        if cached is not None:
            return cached
        stack = [u]
        while stack:
            x = stack[-1]
            if x in self._word_cache:
                stack.pop()
                continue
            i = next(i for i in range(1, self.n) if has_right_descent(x, i))
            x1 = tuple(i + 1 if t == i else i if t == i + 1 else t for t in x)
            if x1 not in self._word_cache:
                stack.append(x1)
                continue
            self._word_cache[x] = mat_mul(self._word_cache[x1], self.gen_matrix(i))
            stack.pop()
        return self._word_cache[u]

    def act_elt(self, h: HeckeElt) -> Matrix:
        """Matrix of the right action of an arbitrary element."""
        ht = to_t(h, self.table)
        acc = _mat_zero(self.dim)
        for u, c in ht.terms.items():
            m = self.word_matrix(u)
            for i in range(self.dim):
                mi = m[i]
                ai = acc[i]
                for j in range(self.dim):
                    x = mi[j]
                    if x:
                        ai[j] = ai[j] + c * x
        return acc

    def act_c(self, w: Perm) -> Matrix:
        """Matrix of the C-basis element C_w."""
        return self.act_elt(self.table.c_elt(w))

    def specialized_generators(self, fieldspec: FieldSpec) -> list[list[list]]:
        """Generator matrices with entries evaluated at v = a in the field."""
        out = []
        for i in range(1, self.n):
            m = self.gen_matrix(i)
            out.append([[x.evaluate(fieldspec) for x in row] for row in m])
        return out

    def relabel(self, p_index: int) -> "CellModule":
        """The same module presented on the cell with P-symbol P_{p_index}."""
        return CellModule(self.lam, self.table, p_index)


def right_cell_module(lam: Partition, table: KLTable | None = None) -> CellModule:
    return CellModule(lam, table)


@lru_cache(maxsize=None)
def cached_cell_module(lam: Partition) -> CellModule:
    """Shared anchored cell module per shape (the KL table is memoized too)."""
    return CellModule(check_partition(lam))


def killing_rule_holds(module: CellModule, y: Perm) -> bool:
    """C_y acts as zero on R(lam) whenever lam is not dominated by shape(y)."""
    expected_zero = not dominates(rsk_shape(y), module.lam)
    is_zero = mat_is_zero(module.act_c(y))
    if expected_zero:
        return is_zero
    return True


def quadratic_braid_check(module: CellModule) -> bool:
    """Generator matrices satisfy T_s^2 = 1 + (v - v^-1) T_s and the braid relations."""
    from .laurent import V_MINUS_V_INV

    d = module.dim
    ident = _mat_identity(d)
    gens = module.generator_matrices()
    for g in gens:
        sq = mat_mul(g, g)
        expect = [
            [ident[i][j] + V_MINUS_V_INV * g[i][j] for j in range(d)] for i in range(d)
        ]
        if sq != expect:
            return False
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            a, b = gens[i], gens[j]
            if j == i + 1:
                if mat_mul(mat_mul(a, b), a) != mat_mul(mat_mul(b, a), b):
                    return False
            else:
                if mat_mul(a, b) != mat_mul(b, a):
                    return False
    return True
