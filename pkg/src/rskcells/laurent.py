"""Exact arithmetic in Z[v, v^-1]: Laurent polynomials, quantum integers, specialization.

Coefficients are arbitrary-precision integers throughout; structure constants
and Gram determinants overflow 64-bit machine words already at n = 6.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf


class ExactDivisionError(ArithmeticError):
    """A division that the theory guarantees to be exact left a remainder."""


class Laurent:
    """Sparse Laurent polynomial over Z: map from exponent to nonzero coefficient."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.c = {e: x for e, x in coeffs.items() if x} if coeffs else {}

    @staticmethod
    def const(k: int) -> "Laurent":
        return Laurent({0: k})

    @staticmethod
    def v_power(k: int) -> "Laurent":
        return Laurent({k: 1})

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        return isinstance(other, Laurent) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other: "Laurent") -> "Laurent":
        r = dict(self.c)
        for e, x in other.c.items():
            y = r.get(e, 0) + x
            if y:
                r[e] = y
            else:
                r.pop(e, None)
        out = Laurent.__new__(Laurent)
        out.c = r
        return out

    def __sub__(self, other: "Laurent") -> "Laurent":
        r = dict(self.c)
        for e, x in other.c.items():
            y = r.get(e, 0) - x
            if y:
                r[e] = y
            else:
                r.pop(e, None)
        out = Laurent.__new__(Laurent)
        out.c = r
        return out

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out.c = {e: -x for e, x in self.c.items()}
        return out

    def __mul__(self, other) -> "Laurent":
        if isinstance(other, int):
            out = Laurent.__new__(Laurent)
            out.c = {e: x * other for e, x in self.c.items()} if other else {}
            return out
        r: dict[int, int] = {}
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                e = e1 + e2
                y = r.get(e, 0) + x1 * x2
                if y:
                    r[e] = y
                else:
                    del r[e]
        out = Laurent.__new__(Laurent)
        out.c = r
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            raise ValueError("negative powers are not defined in Z[v, v^-1] elementwise")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        return f"Laurent({self.text()})"

    def bar(self) -> "Laurent":
        """The ring involution v -> v^-1 (exponent negation)."""
        out = Laurent.__new__(Laurent)
        out.c = {-e: x for e, x in self.c.items()}
        return out

    def shift(self, k: int) -> "Laurent":
        """Multiply by v^k."""
        out = Laurent.__new__(Laurent)
        out.c = {e + k: x for e, x in self.c.items()}
        return out

    def coeff(self, e: int) -> int:
        return self.c.get(e, 0)

    def min_exp(self) -> int:
        return min(self.c)

    def max_exp(self) -> int:
        return max(self.c)

    def is_strictly_negative(self) -> bool:
        """True iff the polynomial lies in v^-1 Z[v^-1] (zero counts)."""
        return all(e < 0 for e in self.c)

    def is_bar_invariant(self) -> bool:
        return self.c == {-e: x for e, x in self.c.items()}

    def evaluate(self, field: "FieldSpec"):
        """Ring-homomorphic evaluation at v = field.a."""
        out = field.zero
        for e, x in self.c.items():
            out = field.add(out, field.mul(field.coerce(x), field.pow_a(e)))
        return out

    def divide_exact(self, g: "Laurent") -> "Laurent":
        """Exact division; raises ExactDivisionError on any remainder."""
        if not g:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return Laurent()
        fm, gm = self.min_exp(), g.min_exp()
        fdeg, gdeg = self.max_exp() - fm, g.max_exp() - gm
        if fdeg < gdeg:
            raise ExactDivisionError("degree of dividend below divisor")
        f = [0] * (fdeg + 1)
        for e, x in self.c.items():
            f[e - fm] = x
        gg = [0] * (gdeg + 1)
        for e, x in g.c.items():
            gg[e - gm] = x
        lead = gg[gdeg]
        q = [0] * (fdeg - gdeg + 1)
        for i in range(fdeg - gdeg, -1, -1):
            top = f[i + gdeg]
            if top == 0:
                continue
            if top % lead:
                raise ExactDivisionError("leading coefficient does not divide")
            q[i] = top // lead
            for j in range(gdeg + 1):
                f[i + j] -= q[i] * gg[j]
        if any(f):
            raise ExactDivisionError("nonzero remainder")
        return Laurent({i + fm - gm: x for i, x in enumerate(q)})

    def text(self) -> str:
        """Canonical text form: terms c*v^k by ascending exponent, joined by ' + '."""
        if not self.c:
            return "0"
        return " + ".join(f"{self.c[e]}*v^{e}" for e in sorted(self.c))

    @staticmethod
    def from_text(s: str) -> "Laurent":
        s = s.strip()
        if s == "0":
            return Laurent()
        coeffs: dict[int, int] = {}
        for term in s.split(" + "):
            cs, _, es = term.partition("*v^")
            coeffs[int(es)] = coeffs.get(int(es), 0) + int(cs)
        return Laurent(coeffs)

    def to_json(self) -> dict[str, str]:
        return {str(e): str(self.c[e]) for e in sorted(self.c)}


ZERO = Laurent()
ONE = Laurent({0: 1})
V = Laurent({1: 1})
V_INV = Laurent({-1: 1})
V_MINUS_V_INV = Laurent({1: 1, -1: -1})


def quantum_int_v(m: int) -> Laurent:
    """The balanced quantum integer [m]_v = v^(1-m) + v^(3-m) + ... + v^(m-1)."""
    if m <= 0:
        raise ValueError(f"quantum integer defined for m >= 1, got {m}")
    return Laurent({1 - m + 2 * i: 1 for i in range(m)})


def quantum_int_q(m: int) -> Laurent:
    """The unbalanced quantum integer [m]_q = 1 + v^2 + ... + v^(2(m-1))."""
    if m <= 0:
        raise ValueError(f"quantum integer defined for m >= 1, got {m}")
    return Laurent({2 * i: 1 for i in range(m)})


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """A specialization target: characteristic (0 or a prime p), the point a, derived e.

    e is the least positive integer with 1 + a + ... + a^(e-1) = 0 in the field,
    or infinity when no such integer exists.  Scalars are Fraction in
    characteristic 0 and canonical residues in [0, p) otherwise.
    """

    __slots__ = ("characteristic", "a", "e", "_a_inv")

    def __init__(self, characteristic: int = 0, a=1):
        if characteristic == 0:
            self.characteristic = 0
            self.a = Fraction(a)
            if self.a == 0:
                raise ValueError("specialization point must be invertible")
            self._a_inv = 1 / self.a
            # 1 + a + ... + a^(e-1) = (a^e - 1)/(a - 1) vanishes over Q only at a = -1
            self.e = 2 if self.a == -1 else inf
        else:
            p = int(characteristic)
            if not _is_prime(p):
                raise ValueError(f"characteristic must be 0 or prime, got {p}")
            av = int(a) % p
            if av == 0:
                raise ValueError("specialization point must be invertible")
            self.characteristic = p
            self.a = av
            self._a_inv = pow(av, p - 2, p)
            if av == 1:
                self.e = p
            else:
                # partial sums vanish first at the multiplicative order of a
                e, x = 1, av
                while x != 1:
                    x = x * av % p
                    e += 1
                self.e = e

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, k):
        if self.characteristic == 0:
            return Fraction(k)
        return int(k) % self.characteristic

    def add(self, x, y):
        return x + y if self.characteristic == 0 else (x + y) % self.characteristic

    def sub(self, x, y):
        return x - y if self.characteristic == 0 else (x - y) % self.characteristic

    def mul(self, x, y):
        return x * y if self.characteristic == 0 else (x * y) % self.characteristic

    def neg(self, x):
        return -x if self.characteristic == 0 else (-x) % self.characteristic

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero field element")
        if self.characteristic == 0:
            return 1 / Fraction(x)
        return pow(x, self.characteristic - 2, self.characteristic)

    def pow_a(self, k: int):
        """a^k, valid for negative k since a is invertible."""
        if k >= 0:
            return self.a ** k if self.characteristic == 0 else pow(self.a, k, self.characteristic)
        if self.characteristic == 0:
            return self._a_inv ** (-k)
        return pow(self._a_inv, -k, self.characteristic)

    def is_zero(self, x) -> bool:
        return x == 0 if self.characteristic == 0 else x % self.characteristic == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.characteristic == other.characteristic
            and self.a == other.a
        )

    def __hash__(self):
        return hash((self.characteristic, self.a))

    def __repr__(self) -> str:
        name = "Q" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"FieldSpec({name}, a={self.a}, e={self.e})"


def specialize(f: Laurent, field: FieldSpec):
    """Evaluate a Laurent polynomial at v = field.a inside the field."""
    return f.evaluate(field)
