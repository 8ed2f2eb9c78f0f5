"""Tour of GF(2^m) arithmetic: tables, axioms, polynomials.

Every value in this library is an element of a finite field GF(2^m):
an integer whose bits are coefficients of a polynomial over GF(2),
reduced modulo an irreducible polynomial.  This script pokes at the
smallest interesting field, GF(8), where everything can be printed.
"""

from rsstego import GF2m, NonPrimitiveGeneratorError, ReduciblePolynomialError

f = GF2m(3)  # x^3 + x + 1
print(f"Field: {f}")
print(f"q = {f.q} elements, alpha = {f.alpha} (the polynomial 'x')\n")

print("Powers of alpha cover every nonzero element exactly once:")
for i in range(f.q - 1):
    print(f"  alpha^{i} = {f.alpha_pow(i)}  ({f.alpha_pow(i):03b})")
print(f"  alpha^{f.q - 1} = {f.alpha_pow(f.q - 1)}  (back to 1: the group is cyclic)\n")

print("Addition is XOR, so every element is its own negative:")
print(f"  5 + 5 = {f.add(5, 5)}")
print(f"  5 + 3 = {f.add(5, 3)},  (5 + 3) + 3 = {f.add(f.add(5, 3), 3)}\n")

print("Multiplication runs on the log/antilog tables:")
a3, a5 = f.alpha_pow(3), f.alpha_pow(5)
print(f"  alpha^3 * alpha^5 = {f.mul(a3, a5)} = alpha^(8 mod 7) = alpha = {f.alpha_pow(1)}")
print(f"  inverses: 6 * inv(6) = {f.mul(6, f.inv(6))}\n")

print("Construction rejects bad moduli:")
for poly, label in [(0b1001, "x^3 + 1 (divisible by x + 1)"),
                    (0b11111, "x^4+x^3+x^2+x+1 over m=4 (irreducible, but x has order 5)")]:
    m = poly.bit_length() - 1
    try:
        GF2m(m, poly)
    except ReduciblePolynomialError as exc:
        print(f"  {label}: ReduciblePolynomialError({exc})")
    except NonPrimitiveGeneratorError as exc:
        print(f"  {label}: NonPrimitiveGeneratorError({exc})")
print()

print("Polynomials over the field (coefficient lists, ascending powers):")
p = [1, 0, 1]            # x^2 + 1
q = [f.alpha_pow(2), 1]  # x + alpha^2
prod = f.poly_mul(p, q)
print(f"  (x^2 + 1)(x + alpha^2) = {prod}")
quot, rem = f.poly_divmod(prod, q)
print(f"  divided back by (x + alpha^2): quotient {quot}, remainder {rem}")
print(f"  p(1) = {f.poly_eval(p, 1)}   (1 XOR 1 = 0 in characteristic 2)")
