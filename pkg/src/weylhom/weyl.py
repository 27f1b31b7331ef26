"""Weyl module coordinates over the standard tableau basis.

A module element is a GF(p)-combination of classes [T] of tableaux of shape
mu; every class has a unique expansion over the standard tableaux of its
weight.  Straightening computes that expansion.  Three mechanisms cooperate:

* the two-row ones-elimination closed form, applied to rows 1 and 2 (valid
  inside any shape because a relation supported on two adjacent rows stays a
  relation when the other rows ride along unchanged);
* first-row peeling: once no 1 appears below row 1 and row 1 holds at least
  mu_2 ones, the expansion of the tableau is the expansion of its row-deleted
  part with the first row reattached, which recurses into a strictly smaller
  shape;
* an exact linear solve against the exterior realizations of the standard
  tableaux, for the residual small cases the closed forms do not reach.

The first two cover every computation in the stabilized regime (mu_2 <=
lambda_1), where first rows grow without bound; the solve only ever sees
weight spaces of the original, small degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import config
from .gfp import Echelon, InconsistentSystemError, MatrixGFp, binom_mod, check_prime
from .polyalg import ExpansionLimitError, Monomial, dprime, mono
from .shapes import partition
from .tableaux import Tableau, enumerate_standard


class StraighteningLimitError(RuntimeError):
    """The generic solve would need an exterior expansion beyond the term budget.

    Raised instead of silently truncating; the budget is WEYLHOM_EXPANSION_LIMIT.
    """


@dataclass(frozen=True)
class RelationGenerator:
    """Cyclic generator of the (i, t) relation summand: the shape-lambda tensor
    whose factor i is i^(lam_i) and factor i+1 is i^(t)(i+1)^(lam_{i+1}-t)."""

    i: int
    t: int
    factors: tuple[Monomial, ...]

    @property
    def weight(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for f in self.factors:
            for e, c in f:
                counts[e] = counts.get(e, 0) + c
        width = max(counts) if counts else 0
        return tuple(counts.get(e, 0) for e in range(1, width + 1))


def relation_generators(lam) -> list[RelationGenerator]:
    """All x_{i,t} for i = 1..len(lam)-1 and t = 1..lam_{i+1}, in (i, t) order."""
    lam = partition(lam)
    n = len(lam)
    out = []
    for i in range(1, n):
        for t in range(1, lam[i] + 1):
            factors = []
            for j in range(1, n + 1):
                if j == i + 1:
                    factors.append(mono({i: t, i + 1: lam[i] - t}))
                else:
                    factors.append(mono({j: lam[j - 1]}))
            out.append(RelationGenerator(i, t, tuple(factors)))
    return out


@dataclass
class WeylCoords:
    """Coordinates of an element of the weight-alpha subspace of Delta(shape),
    as a sparse combination of standard tableaux."""

    shape: tuple[int, ...]
    weight: tuple[int, ...]
    p: int
    coeffs: dict[Tableau, int] = field(default_factory=dict)

    def vector(self) -> list[int]:
        std = enumerate_standard(self.shape, self.weight)
        return [self.coeffs.get(t, 0) for t in std]

    def is_zero(self) -> bool:
        return not self.coeffs


def _bounded_compositions(total: int, caps) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    n = len(caps)
    comp = [0] * n

    def rec(j, left):
        if j == n:
            if left == 0:
                out.append(tuple(comp))
            return
        for v in range(0, min(caps[j], left) + 1):
            comp[j] = v
            rec(j + 1, left - v)
        comp[j] = 0

    rec(0, total)
    return out


class WeylContext:
    """Straightening engine for one (shape, p), with memoized expansions."""

    def __init__(self, mu, p: int):
        check_prime(p)
        self.mu = partition(mu)
        self.p = p
        self.fallback_solves = 0
        self._expansions: dict[Tableau, dict[Tableau, int]] = {}
        self._solvers: dict[tuple[int, ...], tuple[tuple[Tableau, ...], Echelon, dict]] = {}

    # -- public ---------------------------------------------------------

    def straighten_tableau(self, tab: Tableau) -> dict[Tableau, int]:
        """Expansion of [tab] over the standard tableaux of its weight."""
        if tab.shape != self.mu:
            raise ValueError(f"tableau of shape {tab.shape} in context {self.mu}")
        cached = self._expansions.get(tab)
        if cached is None:
            cached = self._compute(tab)
            self._expansions[tab] = cached
        return cached

    def straighten_terms(self, terms) -> dict[Tableau, int]:
        """Expansion of a combination sum(coeff * [tab]) given as (coeff, tab) pairs."""
        p = self.p
        acc: dict[Tableau, int] = {}
        for coeff, tab in terms:
            coeff %= p
            if not coeff:
                continue
            for s, c in self.straighten_tableau(tab).items():
                v = (acc.get(s, 0) + coeff * c) % p
                if v:
                    acc[s] = v
                else:
                    acc.pop(s, None)
        return acc

    # -- straightening cases ---------------------------------------------

    def _compute(self, tab: Tableau) -> dict[Tableau, int]:
        if tab.is_standard():
            return {tab: 1}
        counts = tab.counts
        if len(counts) >= 2 and counts[1][0] > 0:
            expanded = self._ones_step(tab)
            return self.straighten_terms(expanded)
        ones_below = any(row[0] for row in counts[1:])
        mu2 = self.mu[1] if len(self.mu) > 1 else 0
        if not ones_below and counts and counts[0][0] >= mu2:
            return self._peel(tab)
        return self._solve(tab)

    def _ones_step(self, tab: Tableau) -> list[tuple[int, Tableau]]:
        """Move every 1 out of row 2, trading them against larger row-1 entries.

        Closed form of the two-row straightening: with a_s, b_s the row-1 and
        row-2 multiplicities, either a_1 + b_1 exceeds mu_1 and the class is
        zero, or
        [T] = (-1)^{b_1} sum over i_s >= 0, sum i_s = b_1, i_s <= a_s of
              prod_s C(b_s + i_s, b_s) [T'],
        where T' has rows 1, 2 replaced by 1^(a_1+b_1) s^(a_s - i_s) and
        s^(b_s + i_s).  Rows below ride along unchanged.
        """
        p = self.p
        a, b = tab.counts[0], tab.counts[1]
        b1 = b[0]
        if a[0] + b1 > self.mu[0]:
            return []
        width = tab.width
        sign = (-1) ** b1 % p
        terms = []
        caps = [a[j] for j in range(1, width)]
        for comp in _bounded_compositions(b1, caps):
            coeff = sign
            for j, i_s in enumerate(comp, start=1):
                if i_s:
                    coeff = (coeff * binom_mod(b[j] + i_s, b[j], p)) % p
            if not coeff:
                continue
            new_a = (a[0] + b1,) + tuple(a[j] - comp[j - 1] for j in range(1, width))
            new_b = (0,) + tuple(b[j] + comp[j - 1] for j in range(1, width))
            terms.append((coeff, Tableau((new_a, new_b) + tab.counts[2:])))
        return terms

    def _peel(self, tab: Tableau) -> dict[Tableau, int]:
        """Straighten rows 2.. in the first-row-deleted shape and reattach row 1.

        Sound whenever no 1 lives below row 1 and row 1 carries at least mu_2
        ones: every reattachment is then automatically standard.
        """
        sub_ctx = get_context(self.mu[1:], self.p)
        bar = Tableau(tuple(row[1:] for row in tab.counts[1:]))
        row1 = tab.counts[0]
        out: dict[Tableau, int] = {}
        for sbar, c in sub_ctx.straighten_tableau(bar).items():
            attached = Tableau((row1,) + tuple((0,) + r for r in sbar.counts))
            out[attached] = (out.get(attached, 0) + c) % self.p
        return {t: c for t, c in out.items() if c}

    def _solve(self, tab: Tableau) -> dict[Tableau, int]:
        """Express the exterior realization of tab over the standard images."""
        self.fallback_solves += 1
        alpha = tab.weight
        try:
            std, ech, index = self._solver(alpha)
            image = dprime(
                self.mu,
                [mono({j + 1: c for j, c in enumerate(row)}) for row in tab.counts],
                self.p,
                limit=config.expansion_limit(),
            )
        except ExpansionLimitError as exc:
            raise StraighteningLimitError(
                f"straightening {tab.render()} in shape {self.mu} needs an exterior "
                f"expansion beyond the budget: {exc}"
            ) from exc
        if not std:
            if image:
                raise InconsistentSystemError(
                    f"nonzero class {tab.render()} in an empty weight space"
                )
            return {}
        rhs = {}
        for k, v in image.items():
            if k not in index:
                raise InconsistentSystemError(
                    f"class {tab.render()} leaves the span of standard images"
                )
            rhs[index[k]] = v
        coeffs = ech.solve(rhs)
        return {std[i]: c for i, c in enumerate(coeffs) if c}

    def _solver(self, alpha):
        entry = self._solvers.get(alpha)
        if entry is not None:
            return entry
        std = enumerate_standard(self.mu, alpha)
        limit = config.expansion_limit()
        images = []
        index: dict = {}
        for t in std:
            img = dprime(
                self.mu,
                [mono({j + 1: c for j, c in enumerate(row)}) for row in t.counts],
                self.p,
                limit=limit,
            )
            images.append(img)
            for k in img:
                if k not in index:
                    index[k] = len(index)
        matrix = MatrixGFp(len(index), len(std), self.p)
        for col, img in enumerate(images):
            for k, v in img.items():
                matrix.set(index[k], col, v)
        ech = Echelon(matrix, with_transform=True)
        if ech.rank != len(std):
            raise InconsistentSystemError(
                f"standard images of shape {self.mu}, weight {alpha} are dependent"
            )
        entry = (std, ech, index)
        self._solvers[alpha] = entry
        return entry


_contexts: dict[tuple[tuple[int, ...], int], WeylContext] = {}


def get_context(mu, p: int) -> WeylContext:
    key = (partition(mu), p)
    ctx = _contexts.get(key)
    if ctx is None:
        ctx = _contexts[key] = WeylContext(*key)
    return ctx


def clear_caches() -> None:
    _contexts.clear()


def straighten(mu, tab: Tableau, coeff: int, p: int) -> WeylCoords:
    """Standard-basis coordinates of coeff * [tab] in Delta(mu)."""
    mu = partition(mu)
    ctx = get_context(mu, p)
    expansion = ctx.straighten_terms([(coeff, tab)])
    return WeylCoords(mu, tab.weight, p, expansion)


def two_row_straighten(tab: Tableau, p: int) -> WeylCoords:
    """Straightening specialized to shapes with at most two rows."""
    if len(tab.shape) > 2:
        raise ValueError(f"two_row_straighten needs at most two rows, got shape {tab.shape}")
    return straighten(tab.shape, tab, 1, p)


def standard_image_matrix(mu, alpha, p: int) -> MatrixGFp:
    """Matrix of exterior realizations of the standard tableaux of shape mu,
    weight alpha: one column per tableau over a shared row index of exterior
    monomials (sorted), full column rank."""
    mu = partition(mu)
    std = enumerate_standard(mu, alpha)
    limit = config.expansion_limit()
    images = [
        dprime(
            mu,
            [mono({j + 1: c for j, c in enumerate(row)}) for row in t.counts],
            p,
            limit=limit,
        )
        for t in std
    ]
    keys = sorted({k for img in images for k in img})
    index = {k: i for i, k in enumerate(keys)}
    matrix = MatrixGFp(len(keys), len(std), p)
    for col, img in enumerate(images):
        for k, v in img.items():
            matrix.set(index[k], col, v)
    return matrix
