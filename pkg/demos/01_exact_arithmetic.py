"""Exact arithmetic on the sphere: Gaussian rationals and binary forms.

Everything in this library is computed over Q(i) -- no floating point, no
rounding, ever.  This script walks through the scalar and form layers.
"""

from qlike import (BinaryForm, Scalar, Z0, Z1, antipodal_transform, form_gcd,
                   format_form, parse_form, parse_scalar)

print("=" * 70)
print("Gaussian rational scalars")
print("=" * 70)

a = parse_scalar("1/2+3/4*i")
b = parse_scalar("-2/3+i")
print("a        =", a)
print("b        =", b)
print("a * b    =", a * b)
print("a / b    =", a / b)
print("(a/b)*b  =", (a / b) * b, " (exactly a again)")

print()
print("=" * 70)
print("Binary forms in the sphere coordinates z0, z1")
print("=" * 70)

p = parse_form("(1/2)*z0^2 - z0*z1 + (0+1*i)*z1^2")
print("p          =", format_form(p))
print("p(2, -1)   =", p.evaluate(2, -1))
print("dp/dz0     =", p.d_z0())
print("dp/dz1     =", p.d_z1())

# Euler identity: deg * p = z0 dp/dz0 + z1 dp/dz1
euler = Z0 * p.d_z0() + Z1 * p.d_z1()
print("Euler check:", euler == p.scale(Scalar(2)))

print()
print("=" * 70)
print("The antipodal-conjugation transform")
print("=" * 70)

# p -> conj-coefficients of p evaluated at (-z1, z0); twice gives (-1)^deg
for text in ("z0", "z0^2 + z1^2", "z0*z1"):
    q = parse_form(text)
    once = antipodal_transform(q)
    twice = antipodal_transform(once)
    print("%-12s -> %-12s -> %s" % (text, format_form(once),
                                    format_form(twice)))

print()
print("=" * 70)
print("Greatest common divisors of forms")
print("=" * 70)

f = parse_form("z0^3*z1 + z0^2*z1^2")
g = parse_form("z0^2*z1^2 - z0*z1^3")
print("gcd(%s, %s) = %s" % (f, g, form_gcd(f, g)))
