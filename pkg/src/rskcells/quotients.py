"""RSK bases for quotients of the group ring: the Schur-Weyl ideal J(n,d) and
its permutation basis, tabloid representations and their kernels, endomorphism
basis certificates, and the invariant-theory span checks."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

from .cells import CellModule, cached_cell_module
from .combinat import (
    Partition,
    Tableau,
    Tabloid,
    all_tabloids,
    check_partition,
    count_standard,
    dominates,
    enumerate_standard,
    lambda_nd,
    partitions,
    t_up,
    transpose,
)
from .errors import InfeasibleError
from .laurent import FieldSpec
from .linalg import RrefP, RrefQ, hnf_rows, in_lattice, left_nullspace
from .rsk import rsk_shape
from .symgroup import (
    Perm,
    all_perms,
    identity,
    inverse,
    length,
    longest_decreasing_subsequence,
    multiply,
    sign,
)


class GroupAlgebraElt:
    """A sparse element of the group algebra over a FieldSpec."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: FieldSpec, n: int, terms=None):
        self.field = field
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if not field.is_zero(c)}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElt)
            and self.n == other.n
            and self.field == other.field
            and self.terms == other.terms
        )

    def __add__(self, other: "GroupAlgebraElt") -> "GroupAlgebraElt":
        f = self.field
        r = dict(self.terms)
        for w, c in other.terms.items():
            r[w] = f.add(r.get(w, f.zero), c)
        return GroupAlgebraElt(f, self.n, r)

    def __mul__(self, other: "GroupAlgebraElt") -> "GroupAlgebraElt":
        f = self.field
        r: dict[Perm, object] = {}
        for u, cu in self.terms.items():
            for w, cw in other.terms.items():
                uw = multiply(u, w)
                r[uw] = f.add(r.get(uw, f.zero), f.mul(cu, cw))
        return GroupAlgebraElt(f, self.n, r)

    def scale(self, c) -> "GroupAlgebraElt":
        f = self.field
        return GroupAlgebraElt(f, self.n, {w: f.mul(x, c) for w, x in self.terms.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {c}" for w, c in sorted(self.terms.items()))
        return f"GroupAlgebraElt({{{inner}}})"


def from_hecke_specialization(terms: dict, field: FieldSpec, n: int) -> GroupAlgebraElt:
    return GroupAlgebraElt(field, n, terms)


def y_d_elt(n: int, d: int, field: FieldSpec | None = None) -> GroupAlgebraElt:
    """y_d: the alternating sum over the copy of S_{d+1} fixing d+2 .. n."""
    if not 1 <= d < n:
        raise ValueError(f"y_d requires 1 <= d < n (J(n,d) = 0 for d >= n); got d={d}, n={n}")
    field = field or FieldSpec(0, 1)
    terms = {}
    tail = tuple(range(d + 2, n + 1))
    for head in itertools.permutations(range(1, d + 2)):
        w = head + tail
        terms[w] = field.coerce(sign(w))
    return GroupAlgebraElt(field, n, terms)


def quotient_basis_perms(n: int, d: int) -> list[Perm]:
    """Permutations with no decreasing subsequence longer than d, sorted by word."""
    return [w for w in all_perms(n) if longest_decreasing_subsequence(w) <= d]


def expected_quotient_dim(n: int, d: int) -> int:
    """Sum of d(mu)^2 over partitions of n with at most d rows."""
    return sum(count_standard(mu) ** 2 for mu in partitions(n) if len(mu) <= d)


def _perm_index(n: int) -> tuple[list[Perm], dict[Perm, int]]:
    perms = all_perms(n)
    return perms, {w: i for i, w in enumerate(perms)}


def j_ideal_rref(n: int, d: int, field: FieldSpec):
    """Row-echelon basis of the two-sided ideal J(n,d) inside the group algebra.

    Built by closing the span of y_d under left and right multiplication by the
    simple transpositions; both act as coordinate permutations, so the ideal is
    swept with no generator products beyond the seed.
    """
    perms, index = _perm_index(n)
    p = field.characteristic
    basis = RrefQ() if p == 0 else RrefP(p)
    if d >= n:
        return basis, perms, index
    simples = []
    for i in range(1, n):
        s = list(range(1, n + 1))
        s[i - 1], s[i] = s[i], s[i - 1]
        simples.append(tuple(s))
    left_maps = [[index[multiply(s, w)] for w in perms] for s in simples]
    right_maps = [[index[multiply(w, s)] for w in perms] for s in simples]

    yd = y_d_elt(n, d, FieldSpec(0, 1))
    seed = {index[w]: int(c) for w, c in yd.terms.items()}
    res = basis.reduce(seed)
    basis.rows[min(res)] = res
    work = [res]
    while work:
        vec = work.pop()
        for maps in (left_maps, right_maps):
            for mp in maps:
                img = {mp[j]: x for j, x in vec.items()}
                r = basis.reduce(img)
                if r:
                    basis.rows[min(r)] = r
                    work.append(r)
    return basis, perms, index


def verify_quotient_basis(n: int, d: int, field: FieldSpec, bound: int = 6) -> bool:
    """Theorem-1 certificate: dim J(n,d) is complementary and the low-LDS
    permutations are independent modulo J."""
    if n > bound:
        raise InfeasibleError(
            f"quotient basis verification bounded to n <= {bound}", size=n, bound=bound
        )
    candidates = quotient_basis_perms(n, d)
    if d >= n:
        return len(candidates) == _factorial(n)
    basis, perms, index = j_ideal_rref(n, d, field)
    if basis.rank != _factorial(n) - expected_quotient_dim(n, d):
        return False
    if len(candidates) != expected_quotient_dim(n, d):
        return False
    for w in candidates:
        if not basis.add({index[w]: 1}):
            return False
    return basis.rank == _factorial(n)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@lru_cache(maxsize=None)
def tabloid_basis(lam: Partition) -> tuple[Tabloid, ...]:
    return tuple(all_tabloids(check_partition(lam)))


@lru_cache(maxsize=None)
def tabloid_action(lam: Partition, w: Perm) -> tuple[int, ...]:
    """The index permutation of the right action of w on tabloids of shape lam."""
    tabs = tabloid_basis(lam)
    index = {t: i for i, t in enumerate(tabs)}
    return tuple(index[t.apply(w)] for t in tabs)


def rho_vec(lam: Partition, w: Perm) -> dict[int, int]:
    """vec of the permutation matrix of w on tabloids (sparse, 0/1)."""
    act = tabloid_action(lam, w)
    t_count = len(act)
    return {i * t_count + act[i]: 1 for i in range(t_count)}


def tabloid_kernel_expected_dim(lam: Partition) -> int:
    n = sum(lam)
    return sum(
        count_standard(mu) ** 2 for mu in partitions(n) if not dominates(mu, lam)
    )


def tabloid_kernel_basis_check(lam: Partition, field: FieldSpec | None = None) -> bool:
    """Theorem-2 certificate over a characteristic-0 field: the kernel of the
    tabloid representation has the predicted dimension and permutations of
    dominating shape are independent modulo it."""
    lam = check_partition(lam)
    field = field or FieldSpec(0, 1)
    if field.characteristic != 0:
        raise ValueError("the tabloid kernel basis statement is a characteristic-0 claim")
    n = sum(lam)
    perms = all_perms(n)
    rows = [rho_vec(lam, w) for w in perms]
    basis = RrefQ()
    for row in rows:
        basis.add(row)
    kernel_dim = _factorial(n) - basis.rank
    if kernel_dim != tabloid_kernel_expected_dim(lam):
        return False
    candidates = [w for w in perms if dominates(rsk_shape(w), lam)]
    cand_basis = RrefQ()
    for w in candidates:
        if not cand_basis.add(rho_vec(lam, w)):
            return False
    return cand_basis.rank == len(candidates)


def kernel_rref_of_rho(lam: Partition) -> tuple:
    """Canonical RREF of ker(rho_lam) inside Q S_n, coordinates in word order."""
    lam = check_partition(lam)
    n = sum(lam)
    perms = all_perms(n)
    rows = [rho_vec(lam, w) for w in perms]
    null = left_nullspace(rows, 0)
    basis = RrefQ()
    for row in null:
        basis.add(row)
    return basis.canonical()


def j_equals_tabloid_kernel(n: int, d: int) -> bool:
    """J(n,d) coincides with ker(rho) for the dominance-least shape with <= d rows."""
    lam = lambda_nd(n, d)
    if d >= n:
        return not kernel_rref_of_rho(lam)
    basis, _, _ = j_ideal_rref(n, d, FieldSpec(0, 1))
    return basis.canonical() == kernel_rref_of_rho(lam)


CHAR2_WORDS = (
    (2, 1, 3, 4),
    (2, 3, 4, 1),
    (2, 3, 1, 4),
    (1, 3, 4, 2),
    (3, 1, 2, 4),
    (1, 2, 4, 3),
    (4, 1, 2, 3),
    (1, 4, 2, 3),
)


def char_p_counterexample() -> dict:
    """The characteristic-2 failure of the tabloid kernel basis at n=4, (2,2):
    eight shape-(3,1) permutations whose sum annihilates GF(2)-tabloids."""
    lam = (2, 2)
    shapes_ok = all(rsk_shape(w) == (3, 1) for w in CHAR2_WORDS)
    t_count = len(tabloid_basis(lam))
    acc = [[0] * t_count for _ in range(t_count)]
    for w in CHAR2_WORDS:
        act = tabloid_action(lam, w)
        for i in range(t_count):
            acc[i][act[i]] += 1
    acts_zero_gf2 = all(x % 2 == 0 for row in acc for x in row)
    nonzero_over_q = any(x for row in acc for x in row)
    return {
        "shapes_ok": shapes_ok,
        "acts_zero_gf2": acts_zero_gf2,
        "nonzero_over_q": nonzero_over_q,
        "ok": shapes_ok and acts_zero_gf2 and nonzero_over_q,
    }


def _specialized_c_matrix(module: CellModule, w: Perm, field: FieldSpec):
    mat = module.act_c(w)
    return [[x.evaluate(field) for x in row] for row in mat]


def _vec_field_matrix(mat, d: int, field: FieldSpec) -> dict[int, int]:
    """Integer sparse vec of a field matrix (clearing denominators over Q)."""
    if field.characteristic == 0:
        denom = 1
        for row in mat:
            for x in row:
                fx = Fraction(x)
                denom = denom * fx.denominator // _gcd(denom, fx.denominator)
        out = {}
        for i in range(d):
            for j in range(d):
                x = Fraction(mat[i][j]) * denom
                if x:
                    out[i * d + j] = int(x)
        return out
    out = {}
    for i in range(d):
        for j in range(d):
            x = mat[i][j] % field.characteristic
            if x:
                out[i * d + j] = x
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def endomorphism_basis_check(lam: Partition, field: FieldSpec) -> bool:
    """Theorem-3/5 certificate: the C-basis elements indexed by permutations of
    shape lam act on R(lam) with full rank d(lam)^2."""
    lam = check_partition(lam)
    n = sum(lam)
    module = cached_cell_module(lam)
    d = module.dim
    members = [w for w in all_perms(n) if rsk_shape(w) == lam]
    if len(members) != d * d:
        return False
    p = field.characteristic
    basis = RrefQ() if p == 0 else RrefP(p)
    for w in members:
        basis.add(_vec_field_matrix(_specialized_c_matrix(module, w, field), d, field))
    return basis.rank == d * d


def plain_permutation_endo_report(lam: Partition, field: FieldSpec) -> dict:
    """How the plain permutations of shape lam act on R(lam) after specialization:
    their span rank and which of them act as the identity."""
    lam = check_partition(lam)
    n = sum(lam)
    module = cached_cell_module(lam)
    d = module.dim
    members = [w for w in all_perms(n) if rsk_shape(w) == lam]
    p = field.characteristic
    basis = RrefQ() if p == 0 else RrefP(p)
    identity_actors = []
    for w in members:
        mat = module.word_matrix(w)
        spec = [[x.evaluate(field) for x in row] for row in mat]
        if all(
            field.is_zero(field.sub(spec[i][j], field.one if i == j else field.zero))
            for i in range(d)
            for j in range(d)
        ):
            identity_actors.append(w)
        basis.add(_vec_field_matrix(spec, d, field))
    return {
        "members": members,
        "rank": basis.rank,
        "full": basis.rank == d * d,
        "identity_actors": identity_actors,
    }


def mixed_module_basis_check(shapes, field: FieldSpec) -> bool:
    """Theorem-4 certificate on U = direct sum of R(lam): images of all C_x with
    shape(x) among the given shapes span a space of dimension sum d(lam)^2."""
    shapes = sorted({check_partition(s) for s in shapes}, reverse=True)
    if not shapes:
        raise ValueError("need at least one shape")
    n = sum(shapes[0])
    if any(sum(s) != n for s in shapes):
        raise ValueError("all shapes must partition the same n")
    modules = [cached_cell_module(s) for s in shapes]
    dims = [m.dim for m in modules]
    offsets = []
    total = 0
    for d in dims:
        offsets.append(total)
        total += d * d
    members = [w for w in all_perms(n) if rsk_shape(w) in set(shapes)]
    p = field.characteristic
    basis = RrefQ() if p == 0 else RrefP(p)
    for w in members:
        row: dict[int, int] = {}
        for module, d, off in zip(modules, dims, offsets):
            block = _vec_field_matrix(
                _specialized_c_matrix(module, w, field), d, field
            )
            for k, x in block.items():
                row[off + k] = x
        basis.add(row)
    return basis.rank == sum(d * d for d in dims) and len(members) == sum(
        d * d for d in dims
    )


def column_stabilizer(t: Tableau) -> list[Perm]:
    """All permutations preserving each column of the tableau setwise."""
    n = t.n
    cols: list[list[int]] = []
    for j in range(t.shape[0]):
        col = [t.rows[i][j] for i in range(len(t.rows)) if j < len(t.rows[i])]
        cols.append(col)
    out = []
    for combo in itertools.product(*[itertools.permutations(c) for c in cols]):
        word = list(range(1, n + 1))
        for col, img in zip(cols, combo):
            for src, dst in zip(col, img):
                word[src - 1] = dst
        out.append(tuple(word))
    return out


def classical_specht_vector(t: Tableau) -> dict[Tabloid, int]:
    """The signed tabloid sum e_T over the column stabilizer of T."""
    acc: dict[Tabloid, int] = {}
    base = Tabloid(t.rows)
    for sigma in column_stabilizer(t):
        tab = base.apply(sigma)
        acc[tab] = acc.get(tab, 0) + sign(sigma)
    return {k: v for k, v in acc.items() if v}


def classical_specht_independent(lam: Partition) -> bool:
    """Standard-tableau Specht vectors are independent and d(lam) many."""
    lam = check_partition(lam)
    tabs = tabloid_basis(lam)
    index = {t: i for i, t in enumerate(tabs)}
    basis = RrefQ()
    count = 0
    for t in enumerate_standard(lam):
        vec = {index[tab]: c for tab, c in classical_specht_vector(t).items()}
        if not basis.add(vec):
            return False
        count += 1
    return count == count_standard(lam)


def y_d_kills_tabloids(n: int, d: int) -> bool:
    """y_d annihilates the tabloid space of shape lambda(n,d)."""
    lam = lambda_nd(n, d)
    yd = y_d_elt(n, d)
    for tab in tabloid_basis(lam):
        acc: dict[Tabloid, Fraction] = {}
        for w, c in yd.terms.items():
            img = tab.apply(w)
            acc[img] = acc.get(img, Fraction(0)) + c
        if any(acc.values()):
            return False
    return True


def theorem2_over_Z_check(lam: Partition) -> bool:
    """The kernel basis statement with integer coefficients: dominating-shape
    permutations generate the image lattice of rho over Z."""
    lam = check_partition(lam)
    n = sum(lam)
    perms = all_perms(n)
    candidates = [w for w in perms if dominates(rsk_shape(w), lam)]
    cand_basis = RrefQ()
    for w in candidates:
        if not cand_basis.add(rho_vec(lam, w)):
            return False
    lattice = hnf_rows([rho_vec(lam, w) for w in candidates])
    return all(in_lattice(rho_vec(lam, w), lattice) for w in perms)


def monomial_invariant_product(sig: Perm, tau: Perm) -> Perm:
    """Block concatenation: the product of the monomial invariant basis."""
    m = len(sig)
    return tuple(sig) + tuple(x + m for x in tau)


def _cycles_with_fixed_points(w: Perm) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = w[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = w[x - 1]
        out.append(cyc)
    return out


def trace_monomial_value(sigma: Perm, nu, matrices) -> int:
    """f(sigma, nu): the product over cycles of traces of the matrix words."""
    dim = len(matrices[0])
    total = 1
    for cyc in _cycles_with_fixed_points(sigma):
        prod = [[int(i == j) for j in range(dim)] for i in range(dim)]
        for i in cyc:
            a = matrices[nu[i - 1] - 1]
            prod = [
                [sum(prod[r][k] * a[k][c] for k in range(dim)) for c in range(dim)]
                for r in range(dim)
            ]
        total *= sum(prod[i][i] for i in range(dim))
    return total


def trace_monomial_span_check(
    n: int, m: int, d: int, trials: int = 50, seed: int = 0, attempts: int = 3
) -> bool:
    """Rank of the LDS-restricted trace-monomial family equals the rank of the
    unrestricted family on random integer matrix tuples (re-sampled on bad luck:
    the spanning claim is generic)."""
    rng = random.Random(seed)
    sigmas = all_perms(n)
    nus = list(itertools.product(range(1, m + 1), repeat=n))
    restricted = [s for s in sigmas if longest_decreasing_subsequence(s) <= d]
    for _ in range(attempts):
        samples = [
            [
                [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]
                for _ in range(m)
            ]
            for _ in range(trials)
        ]
        full_rank = _family_rank(sigmas, nus, samples)
        restr_rank = _family_rank(restricted, nus, samples)
        if restr_rank == full_rank:
            return True
    return False


def _family_rank(sigmas, nus, samples) -> int:
    basis = RrefQ()
    for sigma in sigmas:
        for nu in nus:
            row = {}
            for t, mats in enumerate(samples):
                val = trace_monomial_value(sigma, nu, mats)
                if val:
                    row[t] = val
            basis.add(row)
    return basis.rank
