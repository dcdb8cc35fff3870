"""The Iwahori-Hecke algebra of S_n over Z[v,v^-1].

T-basis products, the bar/j/dagger involutions and the star anti-automorphism,
the Kazhdan-Lusztig C and C' bases with exact change-of-basis, and
specialization to group algebras.

Elements carry their basis tag; mixed-basis arithmetic is a contract violation
rather than an implicit conversion.
"""

from __future__ import annotations

import os

from .combinat import Partition
from .laurent import ONE, V_MINUS_V_INV, FieldSpec, Laurent
from .symgroup import (
    Perm,
    all_perms,
    has_left_descent,
    has_right_descent,
    identity,
    inverse,
    length,
    mult_s_left,
    mult_s_right,
    parabolic,
    reduced_word,
    sign,
)
from .combinat import transpose

BASIS_T = "T"
BASIS_C = "C"
BASIS_CPRIME = "Cprime"

Terms = dict  # Perm -> Laurent


class BasisMismatchError(ValueError):
    """An operation received elements in an unexpected basis."""


class HeckeElt:
    """A Hecke algebra element: sparse permutation -> Laurent map plus basis tag."""

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n: int, basis: str, terms: Terms | None = None):
        self.n = n
        self.basis = basis
        self.terms = {w: c for w, c in terms.items() if c} if terms else {}

    def copy(self) -> "HeckeElt":
        return HeckeElt(self.n, self.basis, dict(self.terms))

    def coeff(self, w: Perm) -> Laurent:
        return self.terms.get(w, Laurent())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElt)
            and self.n == other.n
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check_compatible(other)
        r = dict(self.terms)
        for w, c in other.terms.items():
            y = r.get(w)
            y = c if y is None else y + c
            if y:
                r[w] = y
            else:
                r.pop(w, None)
        return HeckeElt(self.n, self.basis, r)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        self._check_compatible(other)
        r = dict(self.terms)
        for w, c in other.terms.items():
            y = r.get(w)
            y = -c if y is None else y - c
            if y:
                r[w] = y
            else:
                r.pop(w, None)
        return HeckeElt(self.n, self.basis, r)

    def scale(self, c) -> "HeckeElt":
        if isinstance(c, int):
            c = Laurent.const(c)
        if not c:
            return HeckeElt(self.n, self.basis)
        return HeckeElt(self.n, self.basis, {w: x * c for w, x in self.terms.items()})

    def _check_compatible(self, other: "HeckeElt") -> None:
        if self.n != other.n:
            raise ValueError(f"mixed sizes n={self.n} and n={other.n}")
        if self.basis != other.basis:
            raise BasisMismatchError(f"mixed bases {self.basis} and {other.basis}")

    def __repr__(self) -> str:
        parts = ", ".join(f"{w}: {c.text()}" for w, c in sorted(self.terms.items()))
        return f"HeckeElt[{self.basis}]({{{parts}}})"


def unit(n: int) -> HeckeElt:
    return HeckeElt(n, BASIS_T, {identity(n): ONE})


def t_elt(w: Perm, coeff: Laurent = ONE) -> HeckeElt:
    return HeckeElt(len(w), BASIS_T, {w: coeff})


def _gen_left(i: int, terms: Terms) -> Terms:
    """T-expansion of T_{s_i} * (sum of terms)."""
    out: Terms = {}
    for y, c in terms.items():
        sy = mult_s_left(i, y)
        if has_left_descent(y, i):
            # T_s T_y = (v - v^-1) T_y + T_{sy}
            x = out.get(y)
            x = c * V_MINUS_V_INV if x is None else x + c * V_MINUS_V_INV
            if x:
                out[y] = x
            else:
                out.pop(y, None)
        x = out.get(sy)
        x = c if x is None else x + c
        if x:
            out[sy] = x
        else:
            out.pop(sy, None)
    return out


def _gen_right(terms: Terms, i: int) -> Terms:
    """T-expansion of (sum of terms) * T_{s_i}."""
    out: Terms = {}
    for y, c in terms.items():
        ys = mult_s_right(y, i)
        if has_right_descent(y, i):
            x = out.get(y)
            x = c * V_MINUS_V_INV if x is None else x + c * V_MINUS_V_INV
            if x:
                out[y] = x
            else:
                out.pop(y, None)
        x = out.get(ys)
        x = c if x is None else x + c
        if x:
            out[ys] = x
        else:
            out.pop(ys, None)
    return out


def mul_gen_left(i: int, h: HeckeElt) -> HeckeElt:
    if h.basis != BASIS_T:
        raise BasisMismatchError("generator products are defined on the T-basis")
    return HeckeElt(h.n, BASIS_T, _gen_left(i, h.terms))


def mul_gen_right(h: HeckeElt, i: int) -> HeckeElt:
    if h.basis != BASIS_T:
        raise BasisMismatchError("generator products are defined on the T-basis")
    return HeckeElt(h.n, BASIS_T, _gen_right(h.terms, i))


def multiply_t(h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
    """Product in the T-basis, by generator decomposition of the left factor."""
    if h1.basis != BASIS_T or h2.basis != BASIS_T:
        raise BasisMismatchError("multiply_t requires both factors in the T-basis")
    if h1.n != h2.n:
        raise ValueError("mixed sizes")
    acc: Terms = {}
    for u, cu in h1.terms.items():
        cur = h2.terms
        for i in reversed(reduced_word(u)):
            cur = _gen_left(i, cur)
        for w, c in cur.items():
            x = acc.get(w)
            x = cu * c if x is None else x + cu * c
            if x:
                acc[w] = x
            else:
                acc.pop(w, None)
    return HeckeElt(h1.n, BASIS_T, acc)


_T_INV_ROWS: dict[int, dict[Perm, Terms]] = {}


def t_inverse_row(n: int, w: Perm) -> Terms:
    """T-expansion of T_w^{-1}, grown lazily along left descents."""
    cache = _T_INV_ROWS.setdefault(n, {identity(n): {identity(n): ONE}})
    if w in cache:
        return cache[w]
    stack = [w]
    while stack:
        u = stack[-1]
        if u in cache:
            stack.pop()
            continue
        i = next(i for i in range(1, n) if has_left_descent(u, i))
        u1 = mult_s_left(i, u)
        if u1 not in cache:
            stack.append(u1)
            continue
        # T_u = T_s T_{u1}  =>  T_u^{-1} = T_{u1}^{-1} T_s^{-1},
        # with T_s^{-1} = T_s - (v - v^-1)
        prev = cache[u1]
        row = _gen_right(prev, i)
        for y, c in prev.items():
            x = row.get(y)
            d = c * V_MINUS_V_INV
            x = -d if x is None else x - d
            if x:
                row[y] = x
            else:
                row.pop(y, None)
        cache[u] = row
        stack.pop()
    return cache[w]


def bar_elt(h: HeckeElt) -> HeckeElt:
    """The ring involution: sum a_x T_x -> sum bar(a_x) T^{-1}_{x^{-1}}."""
    if h.basis != BASIS_T:
        raise BasisMismatchError("bar is computed on the T-basis")
    acc: Terms = {}
    for x, a in h.terms.items():
        ab = a.bar()
        for y, c in t_inverse_row(h.n, inverse(x)).items():
            z = acc.get(y)
            z = ab * c if z is None else z + ab * c
            if z:
                acc[y] = z
            else:
                acc.pop(y, None)
    return HeckeElt(h.n, BASIS_T, acc)


def j_elt(h: HeckeElt) -> HeckeElt:
    """The ring involution j: sum a_x T_x -> sum eps_x bar(a_x) T_x."""
    if h.basis != BASIS_T:
        raise BasisMismatchError("j is computed on the T-basis")
    return HeckeElt(
        h.n,
        BASIS_T,
        {x: a.bar() if sign(x) == 1 else -(a.bar()) for x, a in h.terms.items()},
    )


def dagger_elt(h: HeckeElt) -> HeckeElt:
    """The algebra involution: composition of bar and j (they commute)."""
    return j_elt(bar_elt(h))


def star_elt(h: HeckeElt) -> HeckeElt:
    """The anti-automorphism: sum a_x T_x -> sum a_x T_{x^{-1}}."""
    if h.basis != BASIS_T:
        raise BasisMismatchError("star is computed on the T-basis")
    return HeckeElt(h.n, BASIS_T, {inverse(x): a for x, a in h.terms.items()})


class KLValidityError(AssertionError):
    """A computed Kazhdan-Lusztig basis element failed its defining conditions."""


class KLTable:
    """T-expansions of all C'_w for one n, with the mu-coefficients derived.

    rows[w] maps y -> p_{y,w} (including the leading y = w with coefficient 1);
    every off-diagonal p_{y,w} lies in v^-1 Z[v^-1].
    """

    def __init__(self, n: int, rows: dict[Perm, dict[Perm, Laurent]]):
        self.n = n
        self.rows = rows
        self._structural_check()

    def _structural_check(self) -> None:
        for w, row in self.rows.items():
            lead = row.get(w)
            if lead != ONE:
                raise KLValidityError(f"C'_{w} lacks leading coefficient 1")
            for y, c in row.items():
                if y != w and not c.is_strictly_negative():
                    raise KLValidityError(
                        f"p_({y},{w}) = {c.text()} has a non-negative exponent"
                    )

    def p(self, y: Perm, w: Perm) -> Laurent:
        if y == w:
            return ONE
        return self.rows[w].get(y, Laurent())

    def mu(self, y: Perm, w: Perm) -> int:
        return self.p(y, w).coeff(-1)

    def cprime_elt(self, w: Perm) -> HeckeElt:
        """C'_w in the T-basis."""
        return HeckeElt(self.n, BASIS_T, dict(self.rows[w]))

    def c_elt(self, w: Perm) -> HeckeElt:
        """C_w in the T-basis: eps twists and bars of the C' coefficients."""
        ew = sign(w)
        return HeckeElt(
            self.n,
            BASIS_T,
            {y: c.bar() if sign(y) == ew else -(c.bar()) for y, c in self.rows[w].items()},
        )

    def verify_element(self, w: Perm) -> None:
        """Check both defining conditions for C'_w; raises on failure."""
        row = self.rows[w]
        if row.get(w) != ONE:
            raise KLValidityError(f"C'_{w} not unitriangular")
        for y, c in row.items():
            if y != w and not c.is_strictly_negative():
                raise KLValidityError(f"C'_{w} has offending coefficient at {y}")
        elt = HeckeElt(self.n, BASIS_T, dict(row))
        if bar_elt(elt) != elt:
            raise KLValidityError(f"C'_{w} is not bar-invariant")

    def verify_all(self) -> None:
        for w in self.rows:
            self.verify_element(w)

    def save(self, path: str) -> None:
        lines = []
        for w in sorted(self.rows, key=lambda u: (length(u), u)):
            for y in sorted(self.rows[w], key=lambda u: (length(u), u)):
                if y == w:
                    continue
                lines.append(
                    "%s;%s;%s"
                    % (
                        ",".join(map(str, y)),
                        ",".join(map(str, w)),
                        self.rows[w][y].text(),
                    )
                )
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
        os.replace(tmp, path)

    @classmethod
    def load(cls, n: int, path: str) -> "KLTable":
        rows: dict[Perm, dict[Perm, Laurent]] = {w: {w: ONE} for w in all_perms(n)}
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                ys, ws, ps = line.split(";")
                y = tuple(int(t) for t in ys.split(","))
                w = tuple(int(t) for t in ws.split(","))
                rows[w][y] = Laurent.from_text(ps)
        return cls(n, rows)

    @classmethod
    def build(cls, n: int, progress=None) -> "KLTable":
        """Generator recursion for the C' basis, in increasing length order."""
        elements = sorted(all_perms(n), key=lambda u: (length(u), u))
        rows: dict[Perm, dict[Perm, Laurent]] = {identity(n): {identity(n): ONE}}
        vinv = Laurent.v_power(-1)
        for idx, w in enumerate(elements[1:], start=1):
            i = next(i for i in range(1, n) if has_left_descent(w, i))
            x = mult_s_left(i, w)
            row_x = rows[x]
            # (T_s + v^-1) * C'_x
            p = _gen_left(i, row_x)
            for y, c in row_x.items():
                z = p.get(y)
                z = c * vinv if z is None else z + c * vinv
                if z:
                    p[y] = z
                else:
                    p.pop(y, None)
            # subtract mu(z, x) C'_z over z < x with s_i z < z
            for z in list(row_x):
                if z == x or not has_left_descent(z, i):
                    continue
                m = row_x[z].coeff(-1)
                if not m:
                    continue
                row_z = rows[z]
                for y, c in row_z.items():
                    t = p.get(y)
                    t = c * (-m) if t is None else t - c * m
                    if t:
                        p[y] = t
                    else:
                        p.pop(y, None)
            rows[w] = p
            if progress and idx % 64 == 0:
                progress(f"kl n={n}: {idx + 1}/{len(elements)} elements")
        return cls(n, rows)


_TABLES: dict[int, KLTable] = {}


def cache_directory() -> str:
    return os.environ.get("RSKCELLS_CACHE", ".cache")


def kl_table(n: int, verify: bool | None = None, cache_dir: str | None = None, progress=None) -> KLTable:
    """The KL table for S_n, memoized in-process and persisted on disk.

    verify=None runs the full defining-condition check (bar-invariance
    included) for n <= 5; the strictly-negative/unitriangular half is always
    enforced structurally.  Recomputation at n = 6 is about a minute; the
    disk cache makes later runs instant.
    """
    if n in _TABLES:
        table = _TABLES[n]
    else:
        cdir = cache_dir if cache_dir is not None else cache_directory()
        path = os.path.join(cdir, f"klpolys_n{n}.txt")
        table = None
        if os.path.exists(path):
            try:
                table = KLTable.load(n, path)
            except Exception:
                table = None
        if table is None:
            table = KLTable.build(n, progress=progress)
            try:
                os.makedirs(cdir, exist_ok=True)
                table.save(path)
            except OSError:
                pass
        _TABLES[n] = table
    if verify is None:
        verify = n <= 5
    if verify:
        table.verify_all()
    return table


def to_t(h: HeckeElt, table: KLTable | None = None) -> HeckeElt:
    if h.basis == BASIS_T:
        return h.copy()
    table = table or kl_table(h.n)
    acc: Terms = {}
    for w, a in h.terms.items():
        row = table.rows[w] if h.basis == BASIS_CPRIME else table.c_elt(w).terms
        for y, c in row.items():
            z = acc.get(y)
            z = a * c if z is None else z + a * c
            if z:
                acc[y] = z
            else:
                acc.pop(y, None)
    return HeckeElt(h.n, BASIS_T, acc)


def _triangular_reduce(h: HeckeElt, table: KLTable, target: str) -> HeckeElt:
    """Express a T-basis element over the C or C' basis, longest terms first."""
    terms = dict(h.terms)
    out: Terms = {}
    while terms:
        w = max(terms, key=lambda u: (length(u), u))
        a = terms.pop(w)
        out[w] = a
        row = table.rows[w] if target == BASIS_CPRIME else table.c_elt(w).terms
        for y, c in row.items():
            if y == w:
                continue
            z = terms.get(y)
            z = -(a * c) if z is None else z - a * c
            if z:
                terms[y] = z
            else:
                terms.pop(y, None)
    return HeckeElt(h.n, target, out)


def to_cprime(h: HeckeElt, table: KLTable | None = None) -> HeckeElt:
    if h.basis == BASIS_CPRIME:
        return h.copy()
    table = table or kl_table(h.n)
    return _triangular_reduce(to_t(h, table), table, BASIS_CPRIME)


def to_c(h: HeckeElt, table: KLTable | None = None) -> HeckeElt:
    if h.basis == BASIS_C:
        return h.copy()
    table = table or kl_table(h.n)
    return _triangular_reduce(to_t(h, table), table, BASIS_C)


def x_lambda(lam: Partition) -> HeckeElt:
    """x_lam = sum over W_lam of v^l(w) T_w."""
    par = parabolic(lam)
    return HeckeElt(
        par.n, BASIS_T, {w: Laurent.v_power(length(w)) for w in par.subgroup}
    )


def y_lambda(lam: Partition) -> HeckeElt:
    """y_lam = sum over W_lam of eps_w v^-l(w) T_w."""
    par = parabolic(lam)
    return HeckeElt(
        par.n,
        BASIS_T,
        {w: Laurent({-length(w): sign(w)}) for w in par.subgroup},
    )


def z_lambda(lam: Partition) -> HeckeElt:
    """z_lam = v_{w_lam} x_lam T_{w_lam} y_{lam'}."""
    par = parabolic(lam)
    wl = par.w_lambda
    # lengths add on W_lam * D_lam, so x_lam T_{w_lam} needs no expansion
    shifted = HeckeElt(
        par.n,
        BASIS_T,
        {
            tuple(wl[x - 1] for x in w): Laurent.v_power(length(w))
            for w in par.subgroup
        },
    )
    out = multiply_t(shifted, y_lambda(transpose(lam)))
    return out.scale(Laurent.v_power(length(wl)))


def specialize_elt(h: HeckeElt, field: FieldSpec) -> dict[Perm, object]:
    """Coefficientwise specialization v -> a; T_w maps to the permutation w."""
    if h.basis != BASIS_T:
        raise BasisMismatchError("specialize on the T-basis (convert first)")
    out = {}
    for w, c in h.terms.items():
        val = c.evaluate(field)
        if not field.is_zero(val):
            out[w] = val
    return out


def is_semisimple(field: FieldSpec, n: int) -> bool:
    """Semisimplicity of H over the field: fails iff a^2 = 1 with 0 < char <= n,
    or a^2 is a primitive r-th root of unity for some 2 <= r <= n."""
    q = field.mul(field.a, field.a)
    if q == field.one:
        return not (0 < field.characteristic <= n)
    if field.characteristic == 0:
        return True  # a rational with a^2 != 1 is never a root of unity
    r, x = 1, q
    while x != field.one:
        x = field.mul(x, q)
        r += 1
    return not (2 <= r <= n)
