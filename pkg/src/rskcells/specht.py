"""Permutation modules M^lam, Specht modules with the standard basis, the
Dipper-James form, and the structure-constant matrix G(lam) with both
evaluations of its determinant."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import inf

from .cells import CellModule, cached_cell_module
from .combinat import (
    Partition,
    beta_sequence,
    carter_condition,
    check_partition,
    count_standard,
    hook_lengths,
    power_diagram,
    signed_d,
    transpose,
)
from .errors import InfeasibleError
from .hecke import BASIS_T, HeckeElt, KLTable, multiply_t, z_lambda
from .laurent import ONE, V_MINUS_V_INV, FieldSpec, Laurent, quantum_int_v
from .linalg import RrefP, RrefQ, det_laurent
from .rsk import RskPair, rsk_inverse
from .symgroup import (
    Perm,
    length,
    mult_s_right,
    multiply,
    parabolic,
    prefix_list,
    reduced_word,
)

Coords = dict  # coset-rep index -> Laurent


class PermutationModule:
    """M^lam on the coset basis x_lam T_d, d in D_lam."""

    def __init__(self, lam: Partition):
        self.lam = check_partition(lam)
        self.par = parabolic(self.lam)
        self.n = self.par.n
        self.reps = self.par.coset_reps

    def coords_from_hecke(self, h: HeckeElt) -> Coords:
        """Coordinates of an element of x_lam H: read the T-coefficients at D_lam."""
        if h.basis != BASIS_T:
            raise ValueError("convert to the T-basis first")
        out: Coords = {}
        for i, d in enumerate(self.reps):
            c = h.terms.get(d)
            if c:
                out[i] = c
        return out

    def coords_to_hecke(self, coords: Coords) -> HeckeElt:
        """Reassemble sum c_d x_lam T_d as an honest Hecke element (for oracles)."""
        terms: dict[Perm, Laurent] = {}
        for i, c in coords.items():
            d = self.reps[i]
            for w in self.par.subgroup:
                wd = multiply(w, d)
                x = terms.get(wd)
                x = c.shift(length(w)) if x is None else x + c.shift(length(w))
                if x:
                    terms[wd] = x
                else:
                    terms.pop(wd, None)
        return HeckeElt(self.n, BASIS_T, terms)

    def act_gen(self, coords: Coords, i: int) -> Coords:
        """Right action of T_{s_i} resolved by the three coset cases."""
        out: Coords = {}

        def accum(idx: int, c: Laurent) -> None:
            x = out.get(idx)
            x = c if x is None else x + c
            if x:
                out[idx] = x
            else:
                out.pop(idx, None)

        for idx, c in coords.items():
            d = self.reps[idx]
            ds = mult_s_right(d, i)
            j = self.par.rep_index(ds)
            if j is not None:
                if length(ds) > length(d):
                    accum(j, c)
                else:
                    accum(j, c)
                    accum(idx, c * V_MINUS_V_INV)
            else:
                # ds = r d with r a simple reflection of W_lam; x_lam T_r = v x_lam
                assert length(ds) == length(d) + 1
                accum(idx, c.shift(1))
        return out

    def act_word(self, coords: Coords, word) -> Coords:
        for i in word:
            coords = self.act_gen(coords, i)
        return coords

    def act_elt(self, coords: Coords, h: HeckeElt) -> Coords:
        if h.basis != BASIS_T:
            raise ValueError("convert to the T-basis first")
        acc: Coords = {}
        for u, cu in h.terms.items():
            part = self.act_word(coords, reduced_word(u))
            for idx, c in part.items():
                x = acc.get(idx)
                x = cu * c if x is None else x + cu * c
                if x:
                    acc[idx] = x
                else:
                    acc.pop(idx, None)
        return acc


def bilinear_form(c1: Coords, c2: Coords) -> Laurent:
    """The Dipper-James form: the coset basis is orthonormal."""
    out = Laurent()
    small, big = (c1, c2) if len(c1) <= len(c2) else (c2, c1)
    for idx, a in small.items():
        b = big.get(idx)
        if b:
            out = out + a * b
    return out


class SpechtBasis:
    """The standard basis v_e z_lam T_e of S^lam, e over prefixes of w_{lam'}."""

    def __init__(self, lam: Partition):
        self.lam = check_partition(lam)
        self.module = PermutationModule(self.lam)
        par_t = parabolic(transpose(self.lam))
        self.prefixes = prefix_list(par_t.w_lambda)
        z = z_lambda(self.lam)
        z_coords = self.module.coords_from_hecke(z)
        self.vectors: list[Coords] = []
        for e in self.prefixes:
            vec = self.module.act_word(z_coords, reduced_word(e))
            vec = {i: c.shift(length(e)) for i, c in vec.items()}
            self.vectors.append(vec)
        if len(self.vectors) != count_standard(self.lam):
            raise AssertionError(
                f"standard basis of {self.lam} has wrong size {len(self.vectors)}"
            )


@lru_cache(maxsize=None)
def specht_basis(lam: Partition) -> SpechtBasis:
    return SpechtBasis(lam)


def gram_matrix(lam: Partition) -> list[list[Laurent]]:
    basis = specht_basis(check_partition(lam))
    vecs = basis.vectors
    m = len(vecs)
    out = [[Laurent() for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            val = bilinear_form(vecs[i], vecs[j])
            out[i][j] = val
            out[j][i] = val
    return out


def gram_det(lam: Partition) -> Laurent:
    return det_laurent(gram_matrix(lam))


def g_matrix(lam: Partition, table: KLTable | None = None) -> list[list[Laurent]]:
    """The matrix G(lam) = (g_j^k), row index k, column index j.

    g_j^k is the coefficient of C(P_1,P_1) in C(P_1,P_j) C(P_k,P_1) modulo
    lower terms, computed in the anchored right cell module with P_1 = t_lam.
    """
    lam = check_partition(lam)
    module = cached_cell_module(lam) if table is None else CellModule(lam, table)
    m = module.dim
    out = [[Laurent() for _ in range(m)] for _ in range(m)]
    for k in range(m):
        w_k1 = rsk_inverse(RskPair(module.tableaux[k], module.tableaux[0]))
        mat = module.act_c(w_k1)
        for j in range(m):
            # e_j . C(k,1) must land on e_1 alone
            for col in range(1, m):
                if mat[j][col]:
                    raise AssertionError(
                        f"C({k + 1},1) moves basis vector {j + 1} off C(1,1) for lam={lam}"
                    )
            out[k][j] = mat[j][0]
    for row in out:
        for entry in row:
            if not entry.is_bar_invariant():
                raise AssertionError(f"G({lam}) entry {entry.text()} not bar-invariant")
    return out


def g_det(lam: Partition, table: KLTable | None = None) -> Laurent:
    return det_laurent(g_matrix(lam, table))


def big_matrix(lam: Partition, table: KLTable | None = None) -> list[list[Laurent]]:
    """The d^2 x d^2 matrix of coefficients of all C(P_k,P_l) acting on R(lam).

    Row (k,l) holds the coordinates of the action of C(P_k,P_l) over the
    endomorphism basis, blocks of size d ordered with k (rows) and i (columns)
    varying fastest.
    """
    lam = check_partition(lam)
    module = cached_cell_module(lam) if table is None else CellModule(lam, table)
    m = module.dim
    size = m * m
    big = [[Laurent() for _ in range(size)] for _ in range(size)]
    for l in range(m):
        for k in range(m):
            w_kl = rsk_inverse(RskPair(module.tableaux[k], module.tableaux[l]))
            mat = module.act_c(w_kl)
            row = big[l * m + k]
            for i in range(m):
                for j in range(m):
                    row[j * m + i] = mat[i][j]
    return big


def big_matrix_is_block_scalar(lam: Partition, table: KLTable | None = None) -> bool:
    """Prop-style check: only diagonal blocks are populated and all equal G(lam)."""
    lam = check_partition(lam)
    big = big_matrix(lam, table)
    g = g_matrix(lam, table)
    m = len(g)
    for l in range(m):
        for k in range(m):
            row = big[l * m + k]
            for j in range(m):
                for i in range(m):
                    expected = g[k][i] if j == l else Laurent()
                    if row[j * m + i] != expected:
                        return False
    return True


def hook_formula_det(lam: Partition) -> Laurent:
    """The closed determinant formula for G(lam): a signed product of quantum
    hook-length ratios with signed-d exponents, resolved by one exact division."""
    lam = check_partition(lam)
    beta = list(beta_sequence(lam))
    hooks = hook_lengths(lam)
    d = count_standard(lam)
    lamt = transpose(lam)
    len_w0_lamt = sum(p * (p - 1) // 2 for p in lamt)
    sign_unit = -1 if (len_w0_lamt * d) % 2 else 1
    num = ONE
    den = ONE
    r = len(lam)
    for b in range(1, r):
        for a in range(b):
            for c in range(lam[b]):
                h_ac = hooks[a][c]
                h_bc = hooks[b][c]
                seq = list(beta)
                seq[a] += h_bc
                seq[b] -= h_bc
                expo = signed_d(seq)
                if expo > 0:
                    num = num * quantum_int_v(h_ac) ** expo
                    den = den * quantum_int_v(h_bc) ** expo
                elif expo < 0:
                    num = num * quantum_int_v(h_bc) ** (-expo)
                    den = den * quantum_int_v(h_ac) ** (-expo)
    return num.divide_exact(den) * sign_unit


def gram_relation_check(lam: Partition) -> bool:
    """Exact identity between det G(lam) and the Gram determinant."""
    lam = check_partition(lam)
    d = count_standard(lam)
    lamt = transpose(lam)
    par = parabolic(lam)
    par_t = parabolic(lamt)
    len_w0_lamt = sum(p * (p - 1) // 2 for p in lamt)
    eps = -1 if (len_w0_lamt * d) % 2 else 1
    exponent = d * (len_w0_lamt - 2 * length(par.w_lambda))
    exponent -= 2 * sum(length(e) for e in prefix_list(par_t.w_lambda))
    unit = Laurent({exponent: eps})
    return g_det(lam) == unit * gram_det(lam)


def specialized_det_nonzero(lam: Partition, field: FieldSpec, via: str = "hook") -> bool:
    """Whether det G(lam) survives specialization at v = a (certifies irreducibility)."""
    if via == "hook":
        det = hook_formula_det(lam)
    elif via == "gmatrix":
        det = g_det(lam)
    else:
        raise ValueError(f"unknown determinant route {via!r}")
    return not field.is_zero(det.evaluate(field))


def columns_constant(lam: Partition, field: FieldSpec) -> bool:
    """No column of the (e,p)-power diagram contains different numbers."""
    lam = check_partition(lam)
    p = field.characteristic if field.characteristic else inf
    values = power_diagram(lam, field.e, p).values
    return all(
        len({values[i][j] for i in range(len(values)) if j < len(values[i])}) == 1
        for j in range(lam[0])
    )


def carter_certificate(lam: Partition, field: FieldSpec) -> dict:
    """The Carter-type certificate.

    carter: the two-sided power-diagram condition (constant columns or rows).
    det_nonzero: det G(lam) survives specialization.
    The determinant argument runs in the column-constant orientation; when
    only the rows are constant the certificate transposes (irreducibility is
    transpose-symmetric), and det_nonzero for lam itself can genuinely fail,
    e.g. at lam = (1,1) in characteristic 2.  oriented_det_nonzero is the
    determinant statement the condition actually certifies.
    """
    lam = check_partition(lam)
    e = field.e
    p = field.characteristic if field.characteristic else inf
    diagram = power_diagram(lam, e, p)
    carter = carter_condition(diagram)
    det_nonzero = specialized_det_nonzero(lam, field)
    report: list[dict] = []
    transposed = False
    oriented_det_nonzero = det_nonzero
    if carter:
        shape = lam
        if not columns_constant(lam, field):
            transposed = True
            shape = transpose(lam)
            oriented_det_nonzero = specialized_det_nonzero(shape, field)
        hooks = hook_lengths(shape)
        for b in range(1, len(shape)):
            for a in range(b):
                for c in range(shape[b]):
                    h_ac, h_bc = hooks[a][c], hooks[b][c]
                    value = _ratio_in_field(h_ac, h_bc, field)
                    report.append(
                        {
                            "triple": (a + 1, b + 1, c + 1),
                            "h_ac": h_ac,
                            "h_bc": h_bc,
                            "value": str(value),
                            "nonzero": not field.is_zero(value),
                        }
                    )
    return {
        "carter": carter,
        "det_nonzero": det_nonzero,
        "oriented_det_nonzero": oriented_det_nonzero,
        "transposed": transposed,
        "factors": report,
    }


def _ratio_in_field(h_num: int, h_den: int, field: FieldSpec):
    """The image of [h_num]_v/[h_den]_v in the field, under the column-constant
    hypothesis: when e divides both hooks the ratio equals the reduced rational
    h_num/h_den read in the field."""
    num = quantum_int_v(h_num).evaluate(field)
    den = quantum_int_v(h_den).evaluate(field)
    if not field.is_zero(den):
        return field.mul(num, field.inv(den))
    fr = Fraction(h_num, h_den)
    return field.mul(field.coerce(fr.numerator), field.inv(field.coerce(fr.denominator)))


def irreducibility_oracle(lam: Partition, field: FieldSpec, bound: int = 10**6) -> bool:
    """Independent ground truth: spin every nonzero vector over a finite field,
    or compare the generated matrix algebra dimension with d^2 over Q."""
    lam = check_partition(lam)
    d = count_standard(lam)
    if d == 1:
        return True
    module = cached_cell_module(lam)
    gens = module.specialized_generators(field)
    if field.characteristic == 0:
        return _algebra_dimension_q(gens, d) == d * d
    p = field.characteristic
    total = p**d
    if total > bound:
        raise InfeasibleError(
            f"spin oracle infeasible: {p}^{d} = {total} exceeds bound {bound}",
            size=total,
            bound=bound,
        )
    return _spin_all_vectors(gens, d, p)


def _algebra_dimension_q(gens: list, d: int) -> int:
    from math import gcd

    def vec(mat) -> dict[int, int]:
        denom = 1
        for row in mat:
            for x in row:
                denom = denom * x.denominator // gcd(denom, x.denominator)
        out = {}
        for i in range(d):
            for j in range(d):
                x = mat[i][j] * denom
                if x:
                    out[i * d + j] = int(x)
        return out

    def matmul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]

    ident = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    basis = RrefQ()
    worklist = [ident]
    basis.add(vec(ident))
    while worklist:
        m = worklist.pop()
        for g in gens:
            mg = matmul(m, g)
            if basis.add(vec(mg)):
                worklist.append(mg)
    return basis.rank


def _spin_all_vectors(gens: list, d: int, p: int) -> bool:
    import itertools

    def apply(vecr: tuple, g) -> tuple:
        return tuple(
            sum(vecr[i] * g[i][j] for i in range(d)) % p for j in range(d)
        )

    # spins are scale-invariant, so normalize the leading coordinate to 1
    for lead in range(d):
        for tail in itertools.product(range(p), repeat=d - lead - 1):
            seed = (0,) * lead + (1,) + tail
            basis = RrefP(p)
            basis.add({i: x for i, x in enumerate(seed) if x})
            frontier = [seed]
            while frontier and basis.rank < d:
                vecr = frontier.pop()
                for g in gens:
                    img = apply(vecr, g)
                    if basis.add({i: x for i, x in enumerate(img) if x}):
                        frontier.append(img)
            if basis.rank < d:
                return False
    return True


def theta_coords(lam: Partition, h: HeckeElt) -> Coords:
    """Transport an element of the cell-side ideal into M^lam coordinates via
    m -> v_{w_lam} x_lam T_{w_lam} m (the explicit cell/Specht isomorphism)."""
    lam = check_partition(lam)
    par = parabolic(lam)
    wl = par.w_lambda
    shifted = HeckeElt(
        par.n,
        BASIS_T,
        {
            multiply(w, wl): Laurent.v_power(length(w) + length(wl))
            for w in par.subgroup
        },
    )
    module = PermutationModule(lam)
    return module.coords_from_hecke(multiply_t(shifted, h))
