"""The flipped RSK correspondence: w <-> (recording tableau, insertion tableau).

Row insertion is applied to the one-line word (1w, ..., nw).  The P-symbol is
the recording tableau and the Q-symbol the insertion tableau, so that

    [5, 1, 6, 2, 4, 3]  <->  (P, Q) = (1,3,5/2,4/6, 1,2,3/4,6/5)

which fixes the convention against the constructions this package rests on.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .combinat import Partition, Tableau
from .symgroup import Perm, check_perm


@dataclass(frozen=True)
class RskPair:
    """A pair of same-shape standard tableaux: P (recording), Q (insertion)."""

    P: Tableau
    Q: Tableau

    def __post_init__(self):
        if self.P.shape != self.Q.shape:
            raise ValueError("P and Q must have the same shape")
        if not (self.P.is_standard() and self.Q.is_standard()):
            raise ValueError("P and Q must be standard")

    @property
    def shape(self) -> Partition:
        return self.P.shape


def rsk(w: Perm) -> RskPair:
    """Row-insert the word of w; return (recording, insertion).

    >>> pair = rsk((5, 1, 6, 2, 4, 3))
    >>> pair.P.text(), pair.Q.text()
    ('1,3,5/2,4/6', '1,2,3/4,6/5')
    """
    w = check_perm(w)
    ins: list[list[int]] = []
    rec: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(ins):
                ins.append([x])
                rec.append([step])
                break
            row = ins[r]
            k = bisect.bisect_left(row, x)
            if k == len(row):
                row.append(x)
                rec[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return RskPair(Tableau(rec), Tableau(ins))


def rsk_inverse(pair: RskPair) -> Perm:
    """Reverse bumping: recover w with rsk(w) == pair."""
    ins = [list(row) for row in pair.Q.rows]
    pos = {pair.P.rows[i][j]: i for i in range(len(pair.P.rows)) for j in range(len(pair.P.rows[i]))}
    n = pair.P.n
    word: list[int] = [0] * n
    for step in range(n, 0, -1):
        r = pos[step]
        x = ins[r].pop()
        if not ins[r]:
            ins.pop()
        for rr in range(r - 1, -1, -1):
            row = ins[rr]
            k = bisect.bisect_left(row, x) - 1
            row[k], x = x, row[k]
        word[step - 1] = x
    return tuple(word)


def rsk_shape(w: Perm) -> Partition:
    """The common shape of the RSK pair of w."""
    return rsk(w).shape
