"""
Exact univariate polynomial helpers over the rationals.

Coefficient lists are indexed by power (index 0 is the constant term).
Integer roots come from the rational-root theorem applied to the primitive
integer form: every integer root divides the lowest nonzero coefficient.
"""

import math
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Union

from sympy import divisors

Number = Union[int, Fraction]

# Below this many candidates a modulo scan beats asking sympy for divisors
SCAN_LIMIT = 4096


def trim(coeffs: Sequence[Number]) -> List[Number]:
    """Drop vanishing leading coefficients"""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def horner(coeffs: Sequence[Number], x: Number) -> Number:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def primitive_integer_form(coeffs: Sequence[Number]) -> List[int]:
    """Scale to coprime integers with the same roots"""
    coeffs = trim(coeffs)
    if not coeffs:
        return []
    fracs = [Fraction(c) for c in coeffs]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (f.denominator for f in fracs), 1)
    ints = [int(f * lcm) for f in fracs]
    g = reduce(math.gcd, (abs(i) for i in ints if i), 0) or 1
    if ints[-1] < 0:
        g = -g
    return [i // g for i in ints]


def cauchy_bound(ints: Sequence[int]) -> int:
    """Every root z satisfies |z| <= 1 + max|a_i / a_n|"""
    lead = abs(ints[-1])
    biggest = max((abs(c) for c in ints[:-1]), default=0)
    return 1 + -(-biggest // lead)


def integer_roots(coeffs: Sequence[Number], bound: Optional[int] = None) -> List[int]:
    """Sorted distinct integer roots; `bound` optionally caps |root| further.

    Raises ValueError on the zero polynomial, whose root set is all of Z.
    """
    ints = primitive_integer_form(coeffs)
    if not ints:
        raise ValueError("zero polynomial has every integer as a root")

    roots = set()
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.add(0)
    reduced = ints[shift:]
    if len(reduced) == 1:
        return sorted(roots)

    limit = cauchy_bound(reduced)
    if bound is not None:
        limit = min(limit, bound)
    constant = abs(reduced[0])

    if limit <= SCAN_LIMIT:
        candidates = (r for r in range(1, limit + 1) if constant % r == 0)
    else:
        candidates = (r for r in divisors(constant) if r <= limit)

    for r in candidates:
        for z in (r, -r):
            if horner(reduced, z) == 0:
                roots.add(z)
    return sorted(roots)


def reflect(coeffs: Sequence[Number], s: int) -> List[Number]:
    """Coefficients of k -> p(s - k)"""
    out: List[Number] = [0] * len(coeffs)
    for j, a in enumerate(coeffs):
        if a == 0:
            continue
        for i in range(j + 1):
            term = a * math.comb(j, i) * s ** (j - i)
            out[i] += -term if i % 2 else term
    return out
