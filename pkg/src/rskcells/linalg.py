"""Exact linear algebra plumbing: sparse RREF over Q and GF(p), integer HNF,
and fraction-free (Bareiss) determinants over the Laurent ring."""

from __future__ import annotations

from math import gcd

from .laurent import Laurent


def _normalize_int_row(row: dict[int, int]) -> dict[int, int]:
    """Scale a sparse integer row to primitive form with positive pivot."""
    if not row:
        return row
    g = 0
    for x in row.values():
        g = gcd(g, x)
    piv = min(row)
    if row[piv] < 0:
        g = -g
    return {j: x // g for j, x in row.items()}


class RrefQ:
    """Incremental sparse row-echelon basis over Q (integer rows, primitive)."""

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        """Return the residue of row after elimination against the basis."""
        row = dict(row)
        while row:
            piv = min(row)
            base = self.rows.get(piv)
            if base is None:
                return _normalize_int_row(row)
            a, b = base[piv], row[piv]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            # row := ma*row - mb*base  (kills the pivot, stays integral)
            new = {}
            for j, x in row.items():
                new[j] = ma * x
            for j, x in base.items():
                y = new.get(j, 0) - mb * x
                if y:
                    new[j] = y
                else:
                    new.pop(j, None)
            row = new
        return {}

    def add(self, row: dict[int, int]) -> bool:
        """Insert a row; True iff it enlarged the span."""
        res = self.reduce(row)
        if not res:
            return False
        self.rows[min(res)] = res
        return True

    def contains(self, row: dict[int, int]) -> bool:
        return not self.reduce(row)

    def canonical(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Canonical form of the row space: fully reduced, primitive, sorted."""
        pivots = sorted(self.rows)
        reduced: dict[int, dict[int, int]] = {p: dict(self.rows[p]) for p in pivots}
        # back-substitute above each pivot, keeping integral rows
        for p in reversed(pivots):
            base = reduced[p]
            for q in pivots:
                if q >= p:
                    break
                row = reduced[q]
                if p in row:
                    a, b = base[p], row[p]
                    g = gcd(a, b)
                    ma, mb = a // g, b // g
                    for j in list(row):
                        row[j] = ma * row[j]
                    for j, x in base.items():
                        y = row.get(j, 0) - mb * x
                        if y:
                            row[j] = y
                        else:
                            row.pop(j, None)
        return tuple(
            tuple(sorted(_normalize_int_row(reduced[p]).items())) for p in pivots
        )


class RrefP:
    """Incremental sparse row-echelon basis over GF(p)."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        p = self.p
        row = {j: x % p for j, x in row.items() if x % p}
        while row:
            piv = min(row)
            base = self.rows.get(piv)
            if base is None:
                inv = pow(row[piv], p - 2, p)
                return {j: x * inv % p for j, x in row.items()}
            c = row[piv]
            new = dict(row)
            for j, x in base.items():
                y = (new.get(j, 0) - c * x) % p
                if y:
                    new[j] = y
                else:
                    new.pop(j, None)
            row = new
        return {}

    def add(self, row: dict[int, int]) -> bool:
        res = self.reduce(row)
        if not res:
            return False
        self.rows[min(res)] = res
        return True

    def contains(self, row: dict[int, int]) -> bool:
        return not self.reduce(row)


def rank_rows(rows, p: int = 0) -> int:
    """Rank of an iterable of sparse rows over Q (p=0) or GF(p)."""
    basis = RrefQ() if p == 0 else RrefP(p)
    for row in rows:
        basis.add(row)
    return basis.rank


def left_nullspace(rows: list[dict[int, int]], p: int = 0) -> list[dict[int, int]]:
    """Basis of {x : sum_i x_i rows[i] = 0}, as sparse coefficient rows.

    Works by eliminating [A | I] and collecting the I-parts of rows whose
    A-part vanished.  Column indices of the identity block are offset by a
    tag large enough not to clash.
    """
    if not rows:
        return []
    offset = 1 + max((max(r) for r in rows if r), default=0)
    basis = RrefQ() if p == 0 else RrefP(p)
    null: list[dict[int, int]] = []
    for i, row in enumerate(rows):
        aug = dict(row)
        aug[offset + i] = 1
        res = basis.reduce(aug)
        if not res:
            continue  # dependent on earlier rows and null combinations
        basis.rows[min(res)] = res
        if min(res) >= offset:
            null.append({j - offset: x for j, x in res.items()})
    return null


def hnf_rows(rows: list[dict[int, int]]) -> list[dict[int, int]]:
    """Row-style Hermite normal form of an integer row lattice (sparse rows)."""
    work = [dict(r) for r in rows if r]
    hnf: dict[int, dict[int, int]] = {}
    while work:
        row = work.pop()
        while row:
            piv = min(row)
            base = hnf.get(piv)
            if base is None:
                if row[piv] < 0:
                    row = {j: -x for j, x in row.items()}
                hnf[piv] = row
                break
            a, b = base[piv], row[piv]
            if b % a == 0:
                q = b // a
                new = dict(row)
                for j, x in base.items():
                    y = new.get(j, 0) - q * x
                    if y:
                        new[j] = y
                    else:
                        new.pop(j, None)
                row = new
            else:
                # replace base by the gcd combination, push the rest back
                g = gcd(a, b)
                # extended gcd: u*a + v*b = g
                u, v = _ext_gcd(a, b)
                comb: dict[int, int] = {}
                for j, x in base.items():
                    comb[j] = u * x
                for j, x in row.items():
                    y = comb.get(j, 0) + v * x
                    if y:
                        comb[j] = y
                    else:
                        comb.pop(j, None)
                rest: dict[int, int] = {}
                qa, qb = a // g, b // g
                for j, x in base.items():
                    rest[j] = -qb * x
                for j, x in row.items():
                    y = rest.get(j, 0) + qa * x
                    if y:
                        rest[j] = y
                    else:
                        rest.pop(j, None)
                hnf[piv] = comb
                row = rest
    # reduce entries above pivots to canonical range
    pivots = sorted(hnf)
    for p_ in reversed(pivots):
        base = hnf[p_]
        for q_ in pivots:
            if q_ >= p_:
                break
            row = hnf[q_]
            if p_ in row:
                k = row[p_] // base[p_]
                if k:
                    for j, x in base.items():
                        y = row.get(j, 0) - k * x
                        if y:
                            row[j] = y
                        else:
                            row.pop(j, None)
    return [hnf[p_] for p_ in pivots]


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_s, old_t


def in_lattice(row: dict[int, int], hnf: list[dict[int, int]]) -> bool:
    """Integer membership of a row in a lattice given by its HNF rows."""
    by_pivot = {min(r): r for r in hnf}
    row = dict(row)
    while row:
        piv = min(row)
        base = by_pivot.get(piv)
        if base is None or row[piv] % base[piv]:
            return False
        q = row[piv] // base[piv]
        for j, x in base.items():
            y = row.get(j, 0) - q * x
            if y:
                row[j] = y
            else:
                row.pop(j, None)
    return True


def det_laurent(matrix: list[list[Laurent]]) -> Laurent:
    """Fraction-free Bareiss determinant of a square Laurent matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return Laurent({0: 1})
    sign_flip = False
    prev = Laurent({0: 1})
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return Laurent()
            m[k], m[swap] = m[swap], m[k]
            sign_flip = not sign_flip
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev)
            m[i][k] = Laurent()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign_flip else det
