"""Hom spaces between Weyl modules via the relation criterion.

A candidate map out of the shape-lambda Weyl module is a combination
sum c_T phi_T over standard tableaux T of shape mu and weight lambda; it
induces an honest module map exactly when it kills every relation generator
x_{i,t}.  Evaluating each phi_T on each generator, straightening, and
stacking the coordinates gives a sparse matrix whose kernel is the Hom
space.  The Schur algebra itself is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfp import MatrixGFp, binom_mod, check_prime
from .polyalg import dp_comult, mono_degree
from .shapes import composition, partition, stabilize
from .tableaux import Tableau, enumerate_standard
from .weyl import WeylCoords, get_context, relation_generators


@dataclass(frozen=True)
class HomElement:
    """A GF(p) coefficient vector over the standard tableaux of shape mu and
    weight lambda, representing sum coeffs[T] * phi_T."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]
    p: int
    coeffs: tuple[int, ...]

    def support(self):
        std = enumerate_standard(self.mu, self.lam)
        return [(t, c) for t, c in zip(std, self.coeffs) if c]


def phi_eval_terms(tab: Tableau, factors, p: int) -> list[tuple[int, Tableau]]:
    """Raw image of a tensor under phi_tab, before straightening.

    Factor j is comultiplied into the column-j multiplicities of tab (piece s
    routed to row s); the pieces landing in one row multiply in the divided
    power algebra, which is where all binomial coefficients originate.
    Terms whose coefficient vanishes mod p are dropped.
    """
    check_prime(p)
    nrows = len(tab.shape)
    if len(factors) != tab.width:
        raise ValueError(
            f"tensor has {len(factors)} factors but tableau weight has {tab.width} entries"
        )
    splits_per_factor = []
    for j, factor in enumerate(factors):
        degrees = tuple(tab.counts[i][j] for i in range(nrows))
        if mono_degree(factor) != sum(degrees):
            raise ValueError(
                f"factor {j + 1} has degree {mono_degree(factor)}, tableau column needs {sum(degrees)}"
            )
        splits_per_factor.append(dp_comult(factor, degrees))
    terms: list[tuple[int, Tableau]] = []

    def rec(j, row_counts, coeff):
        if j == len(factors):
            width = max((max(rc) for rc in row_counts if rc), default=0)
            rows = tuple(
                tuple(rc.get(e, 0) for e in range(1, width + 1)) for rc in row_counts
            )
            terms.append((coeff, Tableau(rows)))
            return
        for split in splits_per_factor[j]:
            c = coeff
            new_rows = [dict(rc) for rc in row_counts]
            for i, piece in enumerate(split):
                for e, cexp in piece:
                    have = new_rows[i].get(e, 0)
                    if have:
                        c = (c * binom_mod(have + cexp, cexp, p)) % p
                        if not c:
                            break
                    new_rows[i][e] = have + cexp
                if not c:
                    break
            if c:
                rec(j + 1, new_rows, c)

    rec(0, [{} for _ in range(nrows)], 1)
    return terms


def phi_eval(tab: Tableau, factors, p: int) -> WeylCoords:
    """Standard-basis coordinates of phi_tab applied to a shape-compatible tensor."""
    mu = tab.shape
    ctx = get_context(mu, p)
    expansion = ctx.straighten_terms(phi_eval_terms(tab, factors, p))
    weight_counts: dict[int, int] = {}
    for f in factors:
        for e, c in f:
            weight_counts[e] = weight_counts.get(e, 0) + c
    width = max(weight_counts) if weight_counts else 0
    weight = composition(weight_counts.get(e, 0) for e in range(1, width + 1))
    return WeylCoords(partition(mu), weight, p, expansion)


def relation_matrix(lam, mu, p: int) -> MatrixGFp:
    """Rows: standard-basis coordinates of phi_T(x_{i,t}) for every generator,
    stacked in (i, t) order; columns: T over Std_lambda(mu).  The kernel is
    the space of induced Hom maps."""
    lam = partition(lam)
    mu = partition(mu)
    check_prime(p)
    std = enumerate_standard(mu, lam)
    ctx = get_context(mu, p)
    rows: list[dict[int, int]] = []
    for gen in relation_generators(lam):
        target_std = enumerate_standard(mu, gen.weight)
        block = [dict() for _ in target_std]
        tindex = {t: i for i, t in enumerate(target_std)}
        for col, tab in enumerate(std):
            coords = ctx.straighten_terms(phi_eval_terms(tab, gen.factors, p))
            for s, v in coords.items():
                block[tindex[s]][col] = v
        rows.extend(block)
    return MatrixGFp(len(rows), len(std), p, rows)


_hom_cache: dict[tuple, tuple[int, tuple[tuple[int, ...], ...]]] = {}


def hom_dim(lam, mu, p: int) -> tuple[int, list[HomElement]]:
    """Dimension and deterministic basis of Hom(Delta(lam), Delta(mu)) over GF(p)."""
    lam = partition(lam)
    mu = partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"degree mismatch: {lam} vs {mu}")
    check_prime(p)
    key = (lam, mu, p)
    cached = _hom_cache.get(key)
    if cached is None:
        if not enumerate_standard(mu, lam):
            cached = (0, ())
        else:
            kernel = relation_matrix(lam, mu, p).kernel_basis()
            cached = (len(kernel), tuple(tuple(v) for v in kernel))
        _hom_cache[key] = cached
    dim, vectors = cached
    return dim, [HomElement(lam, mu, p, v) for v in vectors]


def clear_caches() -> None:
    _hom_cache.clear()


def stabilize_hom(h: HomElement, k: int, d: int) -> HomElement:
    """Transport a Hom candidate along the tableau bijection T -> T^+ obtained
    by prepending k*p^d ones to the top row.  Needs mu_2 <= lambda_1 so that
    the bijection onto Std_{lambda^+}(mu^+) is available."""
    p = h.p
    lam, mu = h.lam, h.mu
    mu2 = mu[1] if len(mu) > 1 else 0
    lam1 = lam[0] if lam else 0
    if mu2 > lam1:
        raise ValueError(f"transport needs mu_2 <= lambda_1, got {mu2} > {lam1}")
    m = k * p**d
    lam_plus = stabilize(lam, k, d, p)
    mu_plus = stabilize(mu, k, d, p)
    std = enumerate_standard(mu, lam)
    std_plus = enumerate_standard(mu_plus, lam_plus)
    index_plus = {t: i for i, t in enumerate(std_plus)}
    coeffs = [0] * len(std_plus)
    for t, c in zip(std, h.coeffs):
        coeffs[index_plus[t.plus(m)]] = c
    return HomElement(lam_plus, mu_plus, p, tuple(coeffs))


@dataclass(frozen=True)
class StabilizationReport:
    """Outcome of one row-stabilization check.

    When both hypotheses hold the two dimensions must agree and the
    transported kernel basis must again be a kernel basis; a False
    `correspondence_verified` in that regime signals a library bug, not a
    mathematical possibility.
    """

    p: int
    k: int
    d: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    lam_plus: tuple[int, ...]
    mu_plus: tuple[int, ...]
    hyp_power: bool  # p^d > min(lambda_2, mu_1 - lambda_1)
    hyp_overlap: bool  # mu_2 <= lambda_1
    dim: int
    dim_plus: int
    transport_in_kernel: bool | None
    correspondence_verified: bool | None

    @property
    def hypotheses_hold(self) -> bool:
        return self.hyp_power and self.hyp_overlap

    @property
    def theorem_violated(self) -> bool:
        return self.hypotheses_hold and self.correspondence_verified is not True


def verify_stabilization(lam, mu, p: int, k: int, d: int) -> StabilizationReport:
    """Compute both Hom dimensions, record the hypotheses, and when they hold
    check that transport carries the kernel basis into the stabilized kernel."""
    lam = partition(lam)
    mu = partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"degree mismatch: {lam} vs {mu}")
    if k < 0 or d < 0:
        raise ValueError("k and d must be nonnegative")
    check_prime(p)
    lam_plus = stabilize(lam, k, d, p)
    mu_plus = stabilize(mu, k, d, p)
    lam1 = lam[0] if lam else 0
    lam2 = lam[1] if len(lam) > 1 else 0
    mu1 = mu[0] if mu else 0
    mu2 = mu[1] if len(mu) > 1 else 0
    hyp_power = p**d > min(lam2, mu1 - lam1)
    hyp_overlap = mu2 <= lam1
    dim, basis = hom_dim(lam, mu, p)
    dim_plus, _ = hom_dim(lam_plus, mu_plus, p)
    transport_in_kernel: bool | None = None
    if hyp_overlap:
        if dim == 0:
            transport_in_kernel = True
        else:
            matrix_plus = relation_matrix(lam_plus, mu_plus, p)
            transport_in_kernel = True
            for h in basis:
                transported = stabilize_hom(h, k, d)
                if any(matrix_plus.mul_vec(list(transported.coeffs))):
                    transport_in_kernel = False
                    break
    correspondence = None
    if hyp_power and hyp_overlap:
        correspondence = (dim == dim_plus) and bool(transport_in_kernel)
    return StabilizationReport(
        p=p,
        k=k,
        d=d,
        lam=lam,
        mu=mu,
        lam_plus=lam_plus,
        mu_plus=mu_plus,
        hyp_power=hyp_power,
        hyp_overlap=hyp_overlap,
        dim=dim,
        dim_plus=dim_plus,
        transport_in_kernel=transport_in_kernel,
        correspondence_verified=correspondence,
    )
