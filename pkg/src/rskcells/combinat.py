"""Partitions, tableaux, tabloids, dominance, hook data, and (e,p)-power diagrams."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, inf

Partition = tuple[int, ...]


class SizeMismatchError(ValueError):
    """Two partitions or permutations of different total size were combined."""


def check_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if not lam:
        raise ValueError("partition must have at least one part")
    for i, p in enumerate(lam):
        if p <= 0:
            raise ValueError(f"parts must be positive, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse the comma-joined form, e.g. '3,3,2'."""
    return check_partition(int(t) for t in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order, (n) first."""
    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def transpose(lam: Partition) -> Partition:
    lam = check_partition(lam)
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff mu dominates lam: every prefix sum of mu is >= that of lam."""
    if sum(mu) != sum(lam):
        raise SizeMismatchError(f"cannot compare {mu} and {lam}: unequal sizes")
    s_mu = s_lam = 0
    for i in range(max(len(mu), len(lam))):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu < s_lam:
            return False
    return True


def strictly_dominates(mu: Partition, lam: Partition) -> bool:
    return mu != lam and dominates(mu, lam)


def lambda_nd(n: int, d: int) -> Partition:
    """The dominance-least partition of n with at most d parts.

    Closed form: (n mod d) parts of ceil(n/d) and d - (n mod d) parts of
    floor(n/d); validated against lambda_nd_exhaustive in the test suite.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if d >= n:
        return (1,) * n
    q, r = divmod(n, d)
    return check_partition((q + 1,) * r + (q,) * (d - r))


def lambda_nd_exhaustive(n: int, d: int) -> Partition:
    """Ground truth for lambda_nd: scan all partitions with at most d parts."""
    candidates = [lam for lam in partitions(n) if len(lam) <= d]
    for lam in candidates:
        if all(dominates(mu, lam) for mu in candidates):
            return lam
    raise RuntimeError(f"no dominance minimum among partitions of {n} with <= {d} parts")


def hook_lengths(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Per-box hook lengths: arm + leg + 1."""
    lam = check_partition(lam)
    lamt = transpose(lam)
    return tuple(
        tuple(lam[i] - j - 1 + lamt[j] - i - 1 + 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


def count_standard(lam: Partition) -> int:
    """d(lambda) = n! / product of hook lengths."""
    lam = check_partition(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    num = factorial(sum(lam))
    assert num % prod == 0
    return num // prod


class Tableau:
    """A bijective filling of the boxes of a shape by 1..n."""

    __slots__ = ("rows", "shape", "n")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.shape = check_partition(len(row) for row in self.rows)
        self.n = sum(self.shape)
        seen = {x for row in self.rows for x in row}
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"entries must be exactly 1..{self.n}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self.text()})"

    def is_row_standard(self) -> bool:
        return all(all(row[j] < row[j + 1] for j in range(len(row) - 1)) for row in self.rows)

    def is_column_standard(self) -> bool:
        for i in range(len(self.rows) - 1):
            row, below = self.rows[i], self.rows[i + 1]
            if any(row[j] >= below[j] for j in range(len(below))):
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_row_standard() and self.is_column_standard()

    def row_reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def position_of(self, value: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x == value:
                    return i, j
        raise ValueError(f"{value} not in tableau")

    def text(self) -> str:
        """Serialized form: rows joined by '/', entries by ',', e.g. '1,3,5/2,4/6'."""
        return "/".join(",".join(str(x) for x in row) for row in self.rows)

    @staticmethod
    def from_text(s: str) -> "Tableau":
        return Tableau([[int(x) for x in row.split(",")] for row in s.split("/")])


def t_up(lam: Partition) -> Tableau:
    """The row-superstandard tableau: 1..n along successive rows."""
    lam = check_partition(lam)
    rows, k = [], 1
    for p in lam:
        rows.append(tuple(range(k, k + p)))
        k += p
    return Tableau(rows)


def t_low(lam: Partition) -> Tableau:
    """The column-superstandard tableau: 1..n down successive columns."""
    lam = check_partition(lam)
    lamt = transpose(lam)
    grid = [[0] * p for p in lam]
    k = 1
    for j in range(len(lamt)):
        for i in range(lamt[j]):
            grid[i][j] = k
            k += 1
    return Tableau(grid)


def enumerate_standard(lam: Partition) -> list[Tableau]:
    """All standard tableaux of shape lam: t_low first, then by row-reading word."""
    lam = check_partition(lam)
    n = sum(lam)
    grid = [[0] * p for p in lam]
    fill_heights = [0] * lam[0]
    out: list[Tableau] = []

    def place(k: int):
        if k > n:
            out.append(Tableau([tuple(row) for row in grid]))
            return
        for i, p in enumerate(lam):
            # next free box in row i must exist and sit under a filled column
            j = next((jj for jj in range(p) if grid[i][jj] == 0), None)
            if j is None:
                continue
            if fill_heights[j] != i:
                continue
            grid[i][j] = k
            fill_heights[j] += 1
            place(k + 1)
            grid[i][j] = 0
            fill_heights[j] -= 1

    place(1)
    first = t_low(lam)
    rest = sorted((t for t in out if t != first), key=Tableau.row_reading_word)
    return [first] + rest


def beta_sequence(lam: Partition) -> tuple[int, ...]:
    """First-column hook lengths (h_11, h_21, ..., h_r1); invertible back to lam."""
    lam = check_partition(lam)
    r = len(lam)
    return tuple(lam[i] + r - i - 1 for i in range(r))


def shape_from_beta(beta) -> Partition:
    beta = tuple(beta)
    r = len(beta)
    if any(beta[i] <= beta[i + 1] for i in range(r - 1)):
        raise ValueError(f"beta-sequence must be strictly decreasing, got {beta}")
    return check_partition(beta[i] - (r - i - 1) for i in range(r))


def signed_d(beta) -> int:
    """Signed (alternating) extension of the standard-tableau count to
    sequences of distinct non-negative integers, at most one of them zero.

    Zero on repeated entries.  Otherwise sort decreasingly with the sign of
    the sorting permutation; a trailing zero is stripped by reducing the
    remaining entries by one (recursively).  d() of the empty sequence is 1.
    The alternating normalization is forced by the hook determinant formula:
    without the sort sign the product fails to be a Laurent polynomial
    already at shape (1,1,1).
    """
    beta = tuple(beta)
    if any(b < 0 for b in beta):
        raise ValueError(f"entries must be non-negative, got {beta}")
    if beta.count(0) > 1:
        raise ValueError(f"at most one zero entry allowed, got {beta}")
    if len(set(beta)) < len(beta):
        return 0
    # sign of the permutation arranging beta in decreasing order
    sign = 1
    items = list(beta)
    for i in range(len(items)):
        m = items.index(max(items[i:]), i)
        if m != i:
            items[i], items[m] = items[m], items[i]
            sign = -sign
    srt = tuple(items)
    while srt and srt[-1] == 0:
        srt = tuple(b - 1 for b in srt[:-1])
    if not srt:
        return sign
    return sign * count_standard(shape_from_beta(srt))


def nu_p(h: int, p) -> int:
    """Largest power of p dividing h (0 when p is the infinity sentinel)."""
    if p is inf or p == inf:
        return 0
    k = 0
    while h % p == 0:
        h //= p
        k += 1
    return k


def nu_ep(h: int, e, p) -> int:
    """nu_{e,p}(h): 0 if e is infinite or does not divide h, else 1 + nu_p(h/e)."""
    if e is inf or e == inf or h % e:
        return 0
    return 1 + nu_p(h // e, p)


class PowerDiagram:
    """Per-box values nu_{e,p}(hook length) over a shape."""

    __slots__ = ("shape", "values")

    def __init__(self, shape: Partition, values):
        self.shape = check_partition(shape)
        self.values = tuple(tuple(row) for row in values)
        if tuple(len(row) for row in self.values) != self.shape:
            raise ValueError("value rows must match the shape")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PowerDiagram)
            and self.shape == other.shape
            and self.values == other.values
        )

    def __repr__(self) -> str:
        return f"PowerDiagram({self.shape}, {self.values})"


def power_diagram(lam: Partition, e, p) -> PowerDiagram:
    """The (e,p)-power diagram of a shape; e >= 2 or inf, p prime or inf."""
    if not (e is inf or e == inf or (isinstance(e, int) and e >= 2)):
        raise ValueError(f"e must be >= 2 or infinity, got {e}")
    if not (p is inf or p == inf or (isinstance(p, int) and p >= 2)):
        raise ValueError(f"p must be prime or infinity, got {p}")
    hooks = hook_lengths(lam)
    return PowerDiagram(lam, [[nu_ep(h, e, p) for h in row] for row in hooks])


def carter_condition(diagram: PowerDiagram) -> bool:
    """True iff every column is constant, or every row is constant."""
    rows = diagram.values
    cols_ok = all(
        len({rows[i][j] for i in range(len(rows)) if j < len(rows[i])}) == 1
        for j in range(diagram.shape[0])
    )
    if cols_ok:
        return True
    return all(len(set(row)) == 1 for row in rows)


class Tabloid:
    """An ordered partition of {1..n} into rows of sizes lam; rows stored sorted."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        self.rows = tuple(tuple(sorted(int(x) for x in row)) for row in rows)
        self.shape = check_partition(len(row) for row in self.rows)
        n = sum(self.shape)
        seen = {x for row in self.rows for x in row}
        if seen != set(range(1, n + 1)):
            raise ValueError(f"rows must partition 1..{n}")

    @property
    def n(self) -> int:
        return sum(self.shape)

    def apply(self, w: tuple[int, ...]) -> "Tabloid":
        """Right action: replace each entry x by xw."""
        return Tabloid([[w[x - 1] for x in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, Tabloid) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Tabloid(%s)" % "/".join(",".join(map(str, row)) for row in self.rows)


def tabloid_from_tableau(t: Tableau) -> Tabloid:
    return Tabloid(t.rows)


def all_tabloids(lam: Partition) -> list[Tabloid]:
    """All tabloids of shape lam, deterministically ordered."""
    lam = check_partition(lam)
    n = sum(lam)

    def split(remaining: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        from itertools import combinations

        for first in combinations(remaining, sizes[0]):
            rest = tuple(x for x in remaining if x not in first)
            for tail in split(rest, sizes[1:]):
                yield (first,) + tail

    out = [Tabloid(rows) for rows in split(tuple(range(1, n + 1)), lam)]
    out.sort(key=lambda t: t.rows)
    return out
