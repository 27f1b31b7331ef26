"""Divided-power monomials and tensors, comultiplication, and the exterior
realization map sending a shape-mu tensor into the column wedge space.

Monomials are tuples of (entry, exponent) pairs with entries ascending, so
1^(3)2^(2)4 is ((1, 3), (2, 2), (4, 1)).  Multiplication of divided powers
x^(a) x^(b) = C(a+b, a) x^(a+b) is the only source of coefficients;
comultiplication splits exponents coefficient-free.
"""

from __future__ import annotations

import math

from .gfp import binom_mod

Monomial = tuple[tuple[int, int], ...]
ExtMonomial = tuple[tuple[int, ...], ...]


class ExpansionLimitError(RuntimeError):
    """The exterior expansion of a tensor would exceed the configured term budget."""


def mono(items) -> Monomial:
    """Canonical monomial from (entry, exponent) pairs or a dict."""
    if isinstance(items, dict):
        items = items.items()
    agg: dict[int, int] = {}
    for e, c in items:
        if c < 0:
            raise ValueError(f"negative exponent for entry {e}")
        if c:
            agg[e] = agg.get(e, 0) + c
    return tuple(sorted(agg.items()))


def mono_degree(m: Monomial) -> int:
    return sum(c for _, c in m)


def dp_mult(m1: Monomial, m2: Monomial, p: int) -> tuple[int, Monomial]:
    """Product in the divided power algebra: exponents add, coefficient is the
    product over entries of C(e1+e2, e1)."""
    coeff = 1
    counts = dict(m1)
    for e, c in m2:
        have = counts.get(e, 0)
        if have:
            coeff = (coeff * binom_mod(have + c, c, p)) % p
            if coeff == 0:
                return 0, ()
        counts[e] = have + c
    return coeff, tuple(sorted(counts.items()))


def dp_comult(m: Monomial, degrees) -> list[tuple[Monomial, ...]]:
    """All splittings of m into slots of the given degrees, coefficient-free.

    Each entry's exponent is distributed independently; a component is one
    choice per entry, so the list has no repeats and every coefficient is 1.
    """
    degrees = tuple(int(d) for d in degrees)
    if any(d < 0 for d in degrees):
        raise ValueError("negative slot degree")
    if sum(degrees) != mono_degree(m):
        raise ValueError(
            f"degree mismatch: monomial has degree {mono_degree(m)}, slots sum to {sum(degrees)}"
        )
    k = len(degrees)
    results: list[tuple[Monomial, ...]] = []
    slots: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    entries = list(m)

    def rec(idx, remaining):
        if idx == len(entries):
            results.append(tuple(tuple(s) for s in slots))
            return
        e, c = entries[idx]
        parts = [0] * k

        def split(slot, left):
            if slot == k - 1:
                if left > remaining[slot]:
                    return
                parts[slot] = left
                emit()
                return
            for v in range(0, min(left, remaining[slot]) + 1):
                parts[slot] = v
                split(slot + 1, left - v)

        def emit():
            for s in range(k):
                if parts[s]:
                    slots[s].append((e, parts[s]))
            rec(idx + 1, tuple(r - parts[s] for s, r in enumerate(remaining)))
            for s in range(k):
                if parts[s]:
                    slots[s].pop()

        split(0, c)

    rec(0, degrees)
    return results


def tensor_expansion_count(shape, factors) -> int:
    """Number of raw terms the exterior expansion of the tensor would touch:
    the product over rows of multinomial(mu_i; entry counts)."""
    total = 1
    for mu_i, factor in zip(shape, factors):
        row = math.factorial(mu_i)
        for _, c in factor:
            row //= math.factorial(c)
        total *= row
    return total


def _sorted_sign(stack) -> tuple[int, tuple[int, ...]] | None:
    """Sort a column ascending; None on a repeated entry, else (sign, column)."""
    column = sorted(stack)
    for a, b in zip(column, column[1:]):
        if a == b:
            return None
    sign = 1
    seen = list(stack)
    for i in range(len(seen)):
        m = min(range(i, len(seen)), key=seen.__getitem__)
        if m != i:
            seen[i], seen[m] = seen[m], seen[i]
            sign = -sign
    return sign, tuple(column)


def dprime(shape, factors, p: int, coeff: int = 1, limit: int | None = None) -> dict[ExtMonomial, int]:
    """Exterior realization of a shape-`shape` tensor of monomials.

    Row i's entries are dealt into columns 1..shape[i], one per column, over
    all distinct arrangements; each column then wedges its cells top to
    bottom (zero on repeats, sign from sorting).  The result is a sparse
    vector over column-strict exterior monomials mod p.
    """
    shape = tuple(shape)
    factors = tuple(mono(f) for f in factors)
    if len(factors) != len(shape):
        raise ValueError(f"tensor has {len(factors)} factors for shape {shape}")
    for mu_i, f in zip(shape, factors):
        if mono_degree(f) != mu_i:
            raise ValueError(f"factor {f} does not have degree {mu_i}")
    coeff %= p
    if not coeff:
        return {}
    if limit is not None and tensor_expansion_count(shape, factors) > limit:
        raise ExpansionLimitError(
            f"expansion of shape {shape} tensor exceeds {limit} terms"
        )
    acc: dict[ExtMonomial, int] = {}
    ncols = shape[0] if shape else 0
    stacks: list[list[int]] = [[] for _ in range(ncols)]
    col_sets: list[set[int]] = [set() for _ in range(ncols)]

    def place_row(i):
        if i == len(shape):
            sign = 1
            key = []
            for stack in stacks:
                res = _sorted_sign(stack)
                if res is None:
                    return
                s, column = res
                sign *= s
                key.append(column)
            k = tuple(key)
            v = (acc.get(k, 0) + sign * coeff) % p
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
            return
        width = shape[i]
        counts = dict(factors[i])

        def fill(j):
            if j == width:
                place_row(i + 1)
                return
            for e in sorted(counts):
                if counts[e] == 0 or e in col_sets[j]:
                    continue
                counts[e] -= 1
                stacks[j].append(e)
                col_sets[j].add(e)
                fill(j + 1)
                col_sets[j].remove(e)
                stacks[j].pop()
                counts[e] += 1

        fill(0)

    place_row(0)
    return acc
