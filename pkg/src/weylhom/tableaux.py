"""Tableaux of partition shape as entry-count matrices.

A filling is stored row by row as multiplicities: counts[i][j] is the number
of entries j+1 in row i+1.  Rows are therefore weakly increasing by
construction, which matches the exponential notation 1^(3)2^(2)4 used
throughout, and makes standardness a prefix-count comparison between
consecutive rows rather than a cell-by-cell scan.
"""

from __future__ import annotations

from functools import lru_cache

from .shapes import composition, partition


class Tableau:
    __slots__ = ("counts", "_hash")

    def __init__(self, counts):
        rows = [tuple(int(c) for c in row) for row in counts]
        width = 0
        for row in rows:
            if any(c < 0 for c in row):
                raise ValueError(f"negative multiplicity in {rows}")
            w = len(row)
            while w and row[w - 1] == 0:
                w -= 1
            width = max(width, w)
        rows = [row[:width] + (0,) * (width - len(row)) for row in rows]
        while rows and sum(rows[-1]) == 0:
            rows.pop()
        sums = [sum(row) for row in rows]
        if any(sums[i] < sums[i + 1] for i in range(len(sums) - 1)):
            raise ValueError(f"row sums {sums} are not a partition shape")
        self.counts = tuple(rows)
        self._hash = hash(self.counts)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.counts)

    @property
    def width(self) -> int:
        return len(self.counts[0]) if self.counts else 0

    @property
    def weight(self) -> tuple[int, ...]:
        return composition(
            sum(row[j] for row in self.counts) for j in range(self.width)
        )

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.counts == other.counts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.counts < other.counts

    def __repr__(self):
        return f"Tableau({self.render()!r})"

    def render(self) -> str:
        """Exponential notation, rows separated by ' | ': "1^(3)2^(2)4 | 2^(2)34 | 25"."""
        if not self.counts:
            return "(empty)"
        out = []
        for row in self.counts:
            pieces = []
            for j, c in enumerate(row):
                if c == 1:
                    pieces.append(str(j + 1))
                elif c > 1:
                    pieces.append(f"{j + 1}^({c})")
            out.append("".join(pieces) if pieces else "()")
        return " | ".join(out)

    def is_standard(self) -> bool:
        """Column-strict check: each row's entry-prefix counts fit strictly above.

        With sorted rows, column strictness says the first sum(row_i[:e])
        cells of row i sit under cells of row i-1 with entries < e, i.e.
        prefix_i(e) <= prefix_{i-1}(e-1) for every entry threshold e.
        """
        prev = None
        for row in self.counts:
            if prev is not None:
                running = 0
                prev_running = 0
                for e in range(len(row)):
                    running += row[e]
                    # prefix of previous row up to entry e-1 (0-based: e)
                    if running > prev_running:
                        return False
                    prev_running += prev[e]
            prev = row
        return True

    def plus(self, m: int) -> "Tableau":
        """Insert m extra 1s at the front of the top row."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m == 0:
            return self
        if not self.counts:
            return Tableau(((m,),))
        first = (self.counts[0][0] + m,) + self.counts[0][1:]
        return Tableau((first,) + self.counts[1:])

    def minus(self, m: int) -> "Tableau":
        """Delete m 1s from the top row; inverse of plus."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m == 0:
            return self
        if not self.counts or self.counts[0][0] < m:
            have = self.counts[0][0] if self.counts else 0
            raise ValueError(f"cannot delete {m} ones: top row has {have}")
        first = (self.counts[0][0] - m,) + self.counts[0][1:]
        return Tableau((first,) + self.counts[1:])


def from_row_entries(rows) -> Tableau:
    """Build a tableau from explicit row entry lists, e.g. [[1,1,2],[2,3]]."""
    width = max((max(row) for row in rows if row), default=0)
    counts = []
    for row in rows:
        vec = [0] * width
        for e in row:
            if e < 1:
                raise ValueError(f"entries are 1-based, got {e}")
            vec[e - 1] += 1
        counts.append(vec)
    return Tableau(counts)


def is_class_a(tab: Tableau, lam) -> bool:
    """Membership in the first-row-loaded class: row 1 starts with lam_1 + t ones
    (0 <= t <= lam_2) and no entry 1 appears below row 1."""
    lam = partition(lam)
    if not tab.counts:
        return not lam
    lam1 = lam[0] if lam else 0
    lam2 = lam[1] if len(lam) > 1 else 0
    ones_top = tab.counts[0][0]
    if not (lam1 <= ones_top <= lam1 + lam2):
        return False
    return all(row[0] == 0 for row in tab.counts[1:])


def _admissible_rows(length, caps, prev_prefix, next_row_forced):
    """Count vectors (a_1..a_n) with sum=length, a_j <= caps[j], and
    prefix(e) <= prev_prefix[e-1], in ascending lexicographic order.

    When the row below is the final one it receives exactly caps - row, so
    its column-strictness pins prefix(row, e-1) >= prefix(caps - row, e);
    checking that during the scan prunes the large-first-row shapes from
    exponential to near-output-sensitive.
    """
    n = len(caps)
    suffix_cap = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_cap[j] = suffix_cap[j + 1] + caps[j]
    out = []
    row = [0] * n

    def rec(j, remaining, running):
        if j == n:
            if remaining == 0:
                out.append(tuple(row))
            return
        if remaining > suffix_cap[j]:
            return
        hi = min(caps[j], remaining)
        if prev_prefix is not None:
            allowed = (prev_prefix[j - 1] if j >= 1 else 0) - running
            hi = min(hi, allowed)
        lo = 0
        if next_row_forced:
            # the final row receives caps - row; its prefix through entry j+1
            # must sit under ours through entry j:
            # (capsum_j - running - a) <= running, so a >= capsum_j - 2*running
            capsum_j = suffix_cap[0] - suffix_cap[j + 1]
            lo = max(0, capsum_j - 2 * running)
        for a in range(lo, hi + 1):
            row[j] = a
            rec(j + 1, remaining - a, running + a)
        row[j] = 0

    rec(0, length, 0)
    return out


@lru_cache(maxsize=None)
def enumerate_standard(mu, alpha) -> tuple[Tableau, ...]:
    """All standard tableaux of shape mu and weight alpha, in lexicographic
    order of the concatenated count rows.  Empty when the degrees differ in
    dominance (no column-strict filling exists)."""
    mu = partition(mu)
    alpha = composition(alpha)
    if sum(mu) != sum(alpha):
        raise ValueError(f"degree mismatch: shape {mu} vs weight {alpha}")
    if not mu:
        return (Tableau(()),)
    results: list[Tableau] = []
    rows: list[tuple[int, ...]] = []

    def prefix_fits(row, prev):
        running = 0
        prev_running = 0
        for e in range(len(row)):
            running += row[e]
            if running > prev_running:
                return False
            prev_running += prev[e]
        return True

    def rec(i, remaining):
        if i == len(mu) - 1:
            # the last row takes everything still unplaced
            if sum(remaining) != mu[i]:
                return
            if i > 0 and not prefix_fits(remaining, rows[-1]):
                return
            results.append(Tableau(tuple(rows) + (remaining,)))
            return
        prev_prefix = None
        if i > 0:
            prev_prefix = []
            running = 0
            for v in rows[-1]:
                running += v
                prev_prefix.append(running)
        for row in _admissible_rows(
            mu[i], remaining, prev_prefix, i == len(mu) - 2
        ):
            rows.append(row)
            rec(i + 1, tuple(r - a for r, a in zip(remaining, row)))
            rows.pop()

    rec(0, alpha)
    return tuple(results)


def clear_caches() -> None:
    enumerate_standard.cache_clear()
