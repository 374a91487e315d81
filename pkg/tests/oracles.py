"""Independent oracles used to freeze expected values.

These deliberately take different routes than the library: determinants by
permutation expansion, section spaces by the (r+1)-minor membership system
rather than the annihilator kernel, twisted dimensions by the splitting
formula.
"""

from itertools import combinations, permutations

from qlike.forms import BinaryForm
from qlike.linalg import kernel_basis
from qlike.scalars import ONE, ZERO


def naive_det(m):
    """Permutation-expansion determinant (small matrices only)."""
    n = len(m)
    if n == 0:
        return ONE
    total = ZERO
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = ONE
        for i in range(n):
            term = term * m[i][perm[i]]
            if term.is_zero():
                break
        total = total + (term if sign > 0 else -term)
    return total


def naive_form_det(m):
    """Permutation-expansion determinant for matrices of forms."""
    n = len(m)
    if n == 0:
        return BinaryForm.constant(1)
    total = None
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = BinaryForm.constant(1)
        zero = False
        for i in range(n):
            f = m[i][perm[i]]
            if f.is_zero():
                zero = True
                break
            term = term * f
        if zero:
            continue
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        deg = sum(f.degree for f in
                  (m[i][i] for i in range(n)))
        return BinaryForm.zero(deg)
    return total


def minor_system_h0(family, m):
    """dim of degree-m sections by the pointwise membership minor system.

    A vector v of degree-m forms lies in the fiber span everywhere iff all
    (k+1) x (k+1) minors of [basis | v] vanish identically; each minor is
    linear in v's coefficients.
    """
    n, k = family.ambient, family.rank
    if m < 0:
        return 0
    if k == 0:
        return 0
    cols = family.columns()
    cofactor = {}
    for rows in combinations(range(n), k):
        sub = [[cols[j][i] for j in range(k)] for i in rows]
        cofactor[rows] = naive_form_det(sub)
    unknowns = n * (m + 1)
    equations = []
    total_deg = sum(family.degrees) + m
    for big in combinations(range(n), k + 1):
        block = [[ZERO] * unknowns for _ in range(total_deg + 1)]
        hit = False
        for pos, alpha in enumerate(big):
            rest = tuple(r for r in big if r != alpha)
            minor = cofactor[rest]
            if minor.is_zero():
                continue
            sign = 1 if (k + pos) % 2 == 0 else -1
            for u, c in enumerate(minor.coeffs):
                if c.is_zero():
                    continue
                cc = c if sign > 0 else -c
                for t in range(m + 1):
                    block[u + t][alpha * (m + 1) + t] = \
                        block[u + t][alpha * (m + 1) + t] + cc
                    hit = True
        if hit:
            equations.extend(block)
    if not equations:
        return unknowns
    return len(kernel_basis(equations))


def splitting_h0(summands, m):
    return sum(max(0, a + m + 1) for a in summands)
