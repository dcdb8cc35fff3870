"""Permutations of {1..n} acting on the right, Coxeter combinatorics, parabolic data.

A permutation is a tuple w with w[i-1] = iw (one-line word).  Composition is
right-to-left in the action sense: i(ab) = (ia)b.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .combinat import Partition, SizeMismatchError, check_partition, t_low, t_up

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(word) -> bool:
    n = len(word)
    return sorted(word) == list(range(1, n + 1))


def check_perm(word) -> Perm:
    w = tuple(int(x) for x in word)
    if not is_perm(w):
        raise ValueError(f"not a permutation word: {word}")
    return w


def multiply(a: Perm, b: Perm) -> Perm:
    """Composition with actions on the right: i(ab) = (ia)b.

    >>> multiply((2, 1, 3), (1, 3, 2))
    (3, 1, 2)
    """
    if len(a) != len(b):
        raise SizeMismatchError(f"cannot compose permutations of sizes {len(a)} and {len(b)}")
    return tuple(b[x - 1] for x in a)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Coxeter length = inversion count of the one-line word."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def sign(w: Perm) -> int:
    return -1 if length(w) & 1 else 1


def simple(n: int, i: int) -> Perm:
    """The simple transposition s_i = (i, i+1) inside S_n."""
    if not 1 <= i < n:
        raise ValueError(f"simple reflection index {i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def mult_s_right(w: Perm, i: int) -> Perm:
    """w * s_i: swap the values i and i+1 in the word."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def mult_s_left(i: int, w: Perm) -> Perm:
    """s_i * w: swap positions i and i+1 of the word."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def has_left_descent(w: Perm, i: int) -> bool:
    """True iff l(s_i w) < l(w)."""
    return w[i - 1] > w[i]


def has_right_descent(w: Perm, i: int) -> bool:
    """True iff l(w s_i) < l(w): i appears after i+1 in the word."""
    return w.index(i) > w.index(i + 1)


def reduced_word(w: Perm) -> tuple[int, ...]:
    """One reduced expression w = s_{i1} ... s_{ik}, letters returned in order.

    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    """
    word = list(w)
    out = []
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                # s_{i+1} is a left descent: w = s_{i+1} * (shorter)
                out.append(i + 1)
                word[i], word[i + 1] = word[i + 1], word[i]
                changed = True
                break
    return tuple(out)


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def bruhat_leq(y: Perm, w: Perm) -> bool:
    """Bruhat-Chevalley order via the prefix-sort criterion."""
    if len(y) != len(w):
        raise SizeMismatchError("Bruhat comparison requires equal n")
    return _bruhat_leq_cached(y, w)


@lru_cache(maxsize=1 << 20)
def _bruhat_leq_cached(y: Perm, w: Perm) -> bool:
    n = len(y)
    ys: list[int] = []
    ws: list[int] = []
    for i in range(n - 1):
        _insort(ys, y[i])
        _insort(ws, w[i])
        if any(a > b for a, b in zip(ys, ws)):
            return False
    return True


def _insort(lst: list[int], x: int) -> None:
    import bisect

    bisect.insort(lst, x)


def longest_decreasing_subsequence(w: Perm) -> int:
    """Length of the longest strictly decreasing subsequence of the word."""
    best = [0] * len(w)
    for i, x in enumerate(w):
        best[i] = 1 + max((best[j] for j in range(i) if w[j] > x), default=0)
    return max(best, default=0)


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def perm_from_cycles(cycles: list[list[int]], n: int) -> Perm:
    word = list(range(1, n + 1))
    for cyc in cycles:
        for k, x in enumerate(cyc):
            word[x - 1] = cyc[(k + 1) % len(cyc)]
    return check_perm(word)


def cycles(w: Perm) -> list[list[int]]:
    """Disjoint cycle decomposition, fixed points omitted."""
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
        if len(cyc) > 1:
            out.append(cyc)
    return out


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse '5,1,6,2,4,3' or cycle notation '(1 5 4 2)(3 6)'."""
    text = text.strip()
    if text.startswith("("):
        body = text.replace(")", ")|").strip("|")
        cycs = []
        for chunk in body.split("|"):
            chunk = chunk.strip().lstrip("(").rstrip(")")
            if chunk:
                cycs.append([int(t) for t in chunk.replace(",", " ").split()])
        size = n if n is not None else max(x for c in cycs for x in c)
        return perm_from_cycles(cycs, size)
    word = check_perm(int(t) for t in text.split(","))
    if n is not None and len(word) != n:
        raise SizeMismatchError(f"expected a word of length {n}")
    return word


def format_perm(w: Perm) -> str:
    return ",".join(str(x) for x in w)


@dataclass(frozen=True)
class ParabolicData:
    """The parabolic package of a shape: W_lam, its longest element, coset reps, w_lam."""

    lam: Partition
    n: int
    generators: tuple[int, ...]
    subgroup: tuple[Perm, ...]
    w0: Perm
    coset_reps: tuple[Perm, ...]
    w_lambda: Perm

    def __post_init__(self):
        object.__setattr__(self, "_rep_index", {d: i for i, d in enumerate(self.coset_reps)})

    def rep_index(self, d: Perm) -> int | None:
        """Index of d in the coset-rep list, or None if d is not reduced."""
        return self._rep_index.get(d)


@lru_cache(maxsize=None)
def parabolic(lam: Partition) -> ParabolicData:
    lam = check_partition(lam)
    n = sum(lam)
    rows = t_up(lam).rows

    gens = tuple(
        i for row in rows for i in row[:-1]
    )  # s_i with i, i+1 in the same row of t_up

    # W_lam = direct product of the row symmetric groups
    blocks = [list(itertools.permutations(row)) for row in rows]
    subgroup = []
    for combo in itertools.product(*blocks):
        word = [0] * n
        for row, perm_row in zip(rows, combo):
            for src, dst in zip(row, perm_row):
                word[src - 1] = dst
        subgroup.append(tuple(word))
    subgroup.sort()

    w0_word = [0] * n
    for row in rows:
        for src, dst in zip(row, reversed(row)):
            w0_word[src - 1] = dst
    w0 = tuple(w0_word)

    # D_lam from row-standard fillings of the shape
    reps = []
    for filling in _row_standard_fillings(lam):
        word = [0] * n
        for row, fill_row in zip(rows, filling):
            for src, dst in zip(row, fill_row):
                word[src - 1] = dst
        reps.append(tuple(word))
    reps.sort(key=lambda d: (length(d), d))

    tl = t_low(lam).rows
    wl_word = [0] * n
    for row_up, row_low in zip(rows, tl):
        for src, dst in zip(row_up, row_low):
            wl_word[src - 1] = dst
    w_lambda = tuple(wl_word)

    return ParabolicData(lam, n, gens, tuple(subgroup), w0, tuple(reps), w_lambda)


def _row_standard_fillings(lam: Partition):
    n = sum(lam)

    def go(sizes, remaining):
        if not sizes:
            yield ()
            return
        for first in itertools.combinations(remaining, sizes[0]):
            rest = tuple(x for x in remaining if x not in first)
            for tail in go(sizes[1:], rest):
                yield (first,) + tail

    yield from go(lam, tuple(range(1, n + 1)))


def prefixes(w: Perm) -> set[Perm]:
    """All products of initial segments of reduced expressions of w (incl. 1 and w).

    u is a prefix of w iff l(u) + l(u^-1 w) = l(w); computed by breadth-first
    search upward in weak order.
    """
    n = len(w)
    lw = length(w)
    out = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        fresh = []
        for u in frontier:
            lu = length(u)
            for i in range(1, n):
                if has_right_descent(u, i):
                    continue
                u2 = mult_s_right(u, i)
                if u2 in out:
                    continue
                if lu + 1 + length(multiply(inverse(u2), w)) == lw:
                    out.add(u2)
                    fresh.append(u2)
        frontier = fresh
    return out


def prefix_list(w: Perm) -> list[Perm]:
    """Prefixes of w in a fixed order: by length, then word."""
    return sorted(prefixes(w), key=lambda u: (length(u), u))
