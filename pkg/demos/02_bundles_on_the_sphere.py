"""Subbundles of trivial bundles over the sphere.

A polynomial matrix presents a family of subspaces; saturation produces a
free basis of its section module, whose column degrees read off the
Birkhoff-Grothendieck splitting type.  Annihilators realize duals, and
twisted section spaces have explicit bases.
"""

from qlike import (QuotientBundle, annihilator, h0_twist, is_split_extension,
                   parse_form, saturate, splitting_type,
                   subquotient_splitting, verify_canonical_sequences)
from qlike.polymatrix import PolyMatrix


def family(ambient, *columns):
    cols = [[parse_form(s) for s in col] for col in columns]
    return saturate(PolyMatrix.from_columns(ambient, cols))


print("=" * 70)
print("Saturation strips pointwise rank drops")
print("=" * 70)

# two columns that agree projectively: the image sheaf is the line (z0, z1)
raw = PolyMatrix.from_columns(2, [[parse_form("z0^2"), parse_form("z0*z1")],
                                  [parse_form("z0*z1"), parse_form("z1^2")]])
fam = saturate(raw)
print("raw degrees   : [2, 2] with generic rank 1")
print("free basis    :", [[str(f) for f in fam.basis.column(0)]])
print("splitting     :", splitting_type(fam))

print()
print("=" * 70)
print("The Euler sequence, exactly")
print("=" * 70)

line = family(2, ("z0", "z1"))
quot = QuotientBundle(2, line)
print("O(-1) inside O^2 : splitting", splitting_type(line))
print("quotient         : splitting", splitting_type(quot))
print("h0 of twists of the line:",
      {m: h0_twist(line, m)[0] for m in range(-1, 4)})
print("retraction exists?", is_split_extension(line))

print()
print("=" * 70)
print("A conic and its annihilator")
print("=" * 70)

conic = family(3, ("z0^2", "z0*z1", "z1^2"))
ann = annihilator(conic)
print("conic splitting     :", splitting_type(conic))
print("annihilator degrees :", list(ann.degrees))
print("quotient splitting  :", splitting_type(QuotientBundle(3, conic)))

print()
print("=" * 70)
print("Subquotients and twists")
print("=" * 70)

full3 = family(3, ("1", "0", "0"), ("0", "1", "0"), ("0", "0", "1"))
print("(O^3 / conic) twisted by O(2):",
      subquotient_splitting(conic, full3, 2))

print()
print("=" * 70)
print("Canonical resolutions of a nonnegative bundle")
print("=" * 70)

report = verify_canonical_sequences(QuotientBundle(3, conic))
for key in ("splitting", "h0_minus1", "h0", "h0_minus2", "h1_minus2",
            "serre_h1_check", "evaluation_surjective", "ok"):
    print("%-22s: %s" % (key, report[key]))
