"""Arithmetic in GF(2^m) and polynomials over it.

Field elements are plain ints in [0, 2^m): the binary digits are the
coefficients of a polynomial over GF(2), reduced modulo an irreducible
polynomial of degree m.  Addition is XOR (characteristic 2, so addition
and subtraction coincide); multiplication goes through log/antilog tables
built from the primitive element alpha = x (the int 2).  The tables cost
2 * 2^m ints of memory, which is why m is capped at 16.

Polynomials over the field are lists of ints, index = power of x, with no
trailing zeros; the zero polynomial is the empty list and has degree -1.
"""

from __future__ import annotations

from typing import Sequence

FieldPoly = list[int]

# Default irreducible polynomials with x primitive, one per degree.
DEFAULT_PRIMITIVE_POLY: dict[int, int] = {
    2: 0b111,               # x^2 + x + 1
    3: 0b1011,              # x^3 + x + 1
    4: 0b10011,             # x^4 + x + 1
    5: 0b100101,            # x^5 + x^2 + 1
    6: 0b1000011,           # x^6 + x + 1
    7: 0b10001001,          # x^7 + x^3 + 1
    8: 0b100011101,         # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,               # x^9 + x^4 + 1
    10: 0x409,              # x^10 + x^3 + 1
    11: 0x805,              # x^11 + x^2 + 1
    12: 0x1053,             # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,             # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,             # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,             # x^15 + x + 1
    16: 0x1100B,            # x^16 + x^12 + x^3 + x + 1
}


class ReduciblePolynomialError(ValueError):
    """The modulus factors over GF(2), so the quotient ring is not a field."""


class NonPrimitiveGeneratorError(ValueError):
    """x does not generate the multiplicative group of the field."""


def _gf2_mod(a: int, b: int) -> int:
    """Remainder of carry-less division of a by b (bits = GF(2) coefficients)."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def gf2_is_irreducible(poly: int, m: int) -> bool:
    """Trial division by every GF(2) polynomial of degree 1..m//2."""
    if poly.bit_length() - 1 != m:
        return False
    for d in range(2, 1 << (m // 2 + 1)):
        if _gf2_mod(poly, d) == 0:
            return False
    return True


class GF2m:
    """The finite field GF(2^m), 2 <= m <= 16.

    Construction validates the modulus (irreducible of degree m, checked by
    trial division) and that alpha = x is primitive (its powers must visit
    every nonzero element exactly once while the tables are built).
    """

    __slots__ = ("m", "q", "primitive_poly", "alpha", "_exp", "_log")

    def __init__(self, m: int, primitive_poly: int | None = None):
        if not 2 <= m <= 16:
            raise ValueError(f"m must be in [2, 16], got {m}")
        if primitive_poly is None:
            primitive_poly = DEFAULT_PRIMITIVE_POLY[m]
        if primitive_poly.bit_length() - 1 != m:
            raise ValueError(
                f"modulus 0x{primitive_poly:x} has degree "
                f"{primitive_poly.bit_length() - 1}, expected {m}"
            )
        if not gf2_is_irreducible(primitive_poly, m):
            raise ReduciblePolynomialError(
                f"0x{primitive_poly:x} is reducible over GF(2)"
            )
        self.m = m
        self.q = 1 << m
        self.primitive_poly = primitive_poly
        self.alpha = 2

        # exp table doubled so mul/div never need an explicit modulo.
        order = self.q - 1
        exp = [0] * (2 * order)
        log = [0] * self.q
        val = 1
        for i in range(order):
            if val == 1 and i > 0:
                raise NonPrimitiveGeneratorError(
                    f"x has order {i} < {order} modulo 0x{primitive_poly:x}"
                )
            exp[i] = val
            log[val] = i
            val <<= 1
            if val & self.q:
                val ^= primitive_poly
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, primitive_poly=0x{self.primitive_poly:x})"

    # ------------------------------------------------------------------
    # element arithmetic
    # ------------------------------------------------------------------
    @staticmethod
    def add(a: int, b: int) -> int:
        """Field addition (XOR); doubles as subtraction."""
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    def pow(self, a: int, e: int) -> int:
        """a**e with the exponent taken modulo q-1; pow(0, 0) = 1."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def alpha_pow(self, e: int) -> int:
        """alpha^e for any integer e (negative exponents wrap)."""
        return self._exp[e % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log base alpha; undefined for 0."""
        if a == 0:
            raise ValueError("log(0) is undefined")
        return self._log[a]

    # ------------------------------------------------------------------
    # polynomials (coefficient lists, ascending powers)
    # ------------------------------------------------------------------
    @staticmethod
    def poly_trim(p: Sequence[int]) -> FieldPoly:
        """Canonical form: drop trailing zero coefficients."""
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    @staticmethod
    def poly_deg(p: Sequence[int]) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    @staticmethod
    def poly_add(a: Sequence[int], b: Sequence[int]) -> FieldPoly:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return GF2m.poly_trim(out)

    def poly_mul(self, a: Sequence[int], b: Sequence[int]) -> FieldPoly:
        a = self.poly_trim(a)
        b = self.poly_trim(b)
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] ^= self.mul(ai, bj)
        return self.poly_trim(out)

    def poly_divmod(self, a: Sequence[int], b: Sequence[int]) -> tuple[FieldPoly, FieldPoly]:
        """(quotient, remainder) with deg(remainder) < deg(b)."""
        a = self.poly_trim(a)
        b = self.poly_trim(b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        if len(a) < len(b):
            return [], a
        rem = list(a)
        quot = [0] * (len(a) - len(b) + 1)
        inv_lead = self.inv(b[-1])
        for i in range(len(a) - len(b), -1, -1):
            c = self.mul(rem[i + len(b) - 1], inv_lead)
            if c:
                quot[i] = c
                for j, bj in enumerate(b):
                    if bj:
                        rem[i + j] ^= self.mul(c, bj)
        return self.poly_trim(quot), self.poly_trim(rem)

    def poly_mod(self, a: Sequence[int], b: Sequence[int]) -> FieldPoly:
        return self.poly_divmod(a, b)[1]

    def poly_eval(self, p: Sequence[int], x: int) -> int:
        """Horner evaluation of p at x; the zero polynomial evaluates to 0."""
        acc = 0
        for c in reversed(p):
            acc = self.mul(acc, x) ^ c
        return acc
