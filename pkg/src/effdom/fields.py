"""Arithmetic in finite fields GF(p^b) with integer-coded elements.

An element a0 + a1*x + ... + a_{b-1}*x^{b-1} of GF(p^b) is coded as the
integer a0 + a1*p + ... + a_{b-1}*p^{b-1}, i.e. its coefficient vector
packed in base p with the constant coefficient least significant.  For
b = 1 the code is the residue itself.  Extension fields reduce modulo a
fixed built-in irreducible polynomial, so codes mean the same element in
every run and on every platform.

Field elements travel through the rest of the package as plain ints; the
GF object carries the arithmetic.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

__all__ = ["GF", "MODULI"]

# Irreducible moduli for the supported extension fields, as coefficient
# tuples lowest degree first (monic, so the last entry is 1).
MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),           # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),        # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),     # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    (3, 2): (2, 2, 1),           # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),        # x^3 + 2x + 1
    (5, 2): (2, 4, 1),           # x^2 + 4x + 2
}

MAX_ORDER = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_mod(num: List[int], den: Tuple[int, ...], p: int) -> List[int]:
    """Remainder of num by the monic polynomial den, coefficients mod p."""
    num = [c % p for c in num]
    db = len(den) - 1
    for deg in range(len(num) - 1, db - 1, -1):
        c = num[deg]
        if c:
            num[deg] = 0
            for t in range(db):
                num[deg - db + t] = (num[deg - db + t] - c * den[t]) % p
    return num[:db]


def _is_irreducible(mod: Tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(mod) - 1
    for fdeg in range(1, deg // 2 + 1):
        for packed in range(p ** fdeg):
            den = []
            rem = packed
            for _ in range(fdeg):
                den.append(rem % p)
                rem //= p
            den.append(1)
            if not any(_poly_mod(list(mod), tuple(den), p)):
                return False
    return True


class GF:
    """The finite field GF(p^b), operating on integer element codes."""

    def __init__(self, p: int, b: int = 1):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if b < 1:
            raise ValueError(f"extension degree b = {b} must be >= 1")
        q = p ** b
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
        if b == 1:
            modulus: Tuple[int, ...] = ()
        else:
            try:
                modulus = MODULI[(p, b)]
            except KeyError:
                raise ValueError(f"no built-in modulus for GF({p}^{b})") from None
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus for GF({p}^{b}) is not irreducible")
        self.p = p
        self.b = b
        self.q = q
        self.modulus = modulus

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.b == 1 else f"GF({self.p}^{self.b})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.p, self.b) == (other.p, other.b)

    def __hash__(self) -> int:
        return hash((self.p, self.b))

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} outside [0, {self.q})")
        return a

    def elements(self) -> List[int]:
        """All element codes in increasing order."""
        return list(range(self.q))

    def digits(self, a: int) -> Tuple[int, ...]:
        """Coefficient vector of a, lowest degree first, length b."""
        self._check(a)
        out = []
        for _ in range(self.b):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_digits(self, digs) -> int:
        code = 0
        for i, c in enumerate(digs):
            code += (c % self.p) * self.p ** i
        return self._check(code)

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.b == 1:
            return (a + b) % self.p
        code = 0
        pw = 1
        for _ in range(self.b):
            code += ((a + b) % self.p) * pw
            a //= self.p
            b //= self.p
            pw *= self.p
        return code

    def neg(self, a: int) -> int:
        self._check(a)
        if self.b == 1:
            return (-a) % self.p
        code = 0
        pw = 1
        for _ in range(self.b):
            code += (-a % self.p) * pw
            a //= self.p
            pw *= self.p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.b == 1:
            return (a * b) % self.p
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * self.b - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] += ai * bj
        return self.from_digits(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result
