"""Shared independent oracles for the test suite.

These are deliberately separate implementations: brute-force filling
enumeration for Kostka numbers, the raw exterior-realization solve for
straightening, and exact big-integer binomials.  They never call into the
code paths they check.
"""

from __future__ import annotations

import pytest

from weylhom.gfp import Echelon, MatrixGFp
from weylhom.polyalg import dprime, mono
from weylhom.tableaux import Tableau, enumerate_standard


def distinct_permutations(items):
    """All distinct orderings of a multiset, without relying on the library."""
    items = sorted(items)
    n = len(items)
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        last = None
        for i, v in enumerate(remaining):
            if v == last:
                continue
            last = v
            rec(prefix + [v], remaining[:i] + remaining[i + 1 :])

    rec([], items)
    return out


def kostka_bruteforce(mu, alpha) -> int:
    """Count column-strict fillings of shape mu with weight alpha by trying
    every distinct arrangement of the entry multiset on the grid."""
    mu = tuple(mu)
    entries = []
    for j, c in enumerate(alpha):
        entries.extend([j + 1] * c)
    if sum(mu) != len(entries):
        raise ValueError("degree mismatch")
    count = 0
    for arrangement in distinct_permutations(entries):
        rows = []
        pos = 0
        for length in mu:
            rows.append(arrangement[pos : pos + length])
            pos += length
        ok = True
        for row in rows:
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                ok = False
                break
        if ok:
            for i in range(1, len(rows)):
                for j in range(len(rows[i])):
                    if rows[i - 1][j] >= rows[i][j]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            count += 1
    return count


def tableau_monomials(tab: Tableau):
    return [mono({j + 1: c for j, c in enumerate(row)}) for row in tab.counts]


def reference_straighten(mu, tab: Tableau, p: int) -> dict[Tableau, int]:
    """Straighten [tab] purely by solving against the exterior realizations of
    the standard tableaux; shares nothing with the closed-form paths."""
    mu = tuple(mu)
    std = enumerate_standard(mu, tab.weight)
    images = [dprime(mu, tableau_monomials(t), p) for t in std]
    target = dprime(mu, tableau_monomials(tab), p)
    if not std:
        assert not target, f"{tab.render()} nonzero in an empty weight space"
        return {}
    keys = sorted(set(target) | {k for img in images for k in img})
    index = {k: i for i, k in enumerate(keys)}
    matrix = MatrixGFp(len(keys), len(std), p)
    for col, img in enumerate(images):
        for k, v in img.items():
            matrix.set(index[k], col, v)
    solution = Echelon(matrix, with_transform=True).solve(
        {index[k]: v for k, v in target.items()}
    )
    return {std[i]: v for i, v in enumerate(solution) if v}


def compositions_of(total: int, parts: int):
    """All compositions of `total` into exactly `parts` nonnegative entries."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for head in range(total + 1):
        for tail in compositions_of(total - head, parts - 1):
            out.append((head,) + tail)
    return out


@pytest.fixture(autouse=True)
def _fresh_caches():
    import weylhom

    weylhom.clear_caches()
    yield
