"""Young tableaux: hook lengths, standard and semistandard counting, RSK,
Kostka and Littlewood-Richardson numbers, and the tableau inequalities."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .core import (
    Partition,
    Permutation,
    binomial,
    conjugate,
    diagram_union_intersection,
    partitions,
)

MAX_ENUMERATION_CELLS = 12


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_range(self, i: int) -> range:
        """0-based columns of row ``i`` (0-based) that belong to the skew diagram."""
        return range(self.inner.part(i), self.outer.part(i))

    def cells(self) -> Iterator[tuple[int, int]]:
        """1-based cells in row-major order."""
        for i in range(len(self.outer)):
            for j in self.row_range(i):
                yield (i + 1, j + 1)

    def __str__(self) -> str:
        from .core import format_partition

        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


@dataclass(frozen=True)
class Tableau:
    """Filling of a skew diagram.  ``rows[i]`` lists the entries of row i from
    left to right, skipping cells of the inner shape."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, r in enumerate(rows):
            if len(r) != len(self.shape.row_range(i)):
                raise ValueError(f"row {i + 1} has {len(r)} entries, shape needs {len(self.shape.row_range(i))}")
        if len(rows) < len(self.shape.outer):
            raise ValueError("missing rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        return cls(SkewShape(Partition(len(r) for r in rows)), tuple(tuple(r) for r in rows))

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, r in enumerate(self.rows):
            for j, v in zip(self.shape.row_range(i), r):
                out[(i + 1, j + 1)] = v
        return out

    def weight(self) -> tuple[int, ...]:
        vals = [v for r in self.rows for v in r]
        if not vals:
            return ()
        return tuple(vals.count(i) for i in range(1, max(vals) + 1))

    def is_semistandard(self) -> bool:
        ent = self.entries
        for (i, j), v in ent.items():
            if v < 1:
                return False
            if (i, j + 1) in ent and ent[(i, j + 1)] < v:
                return False
            if (i + 1, j) in ent and ent[(i + 1, j)] <= v:
                return False
        return True

    def is_standard(self) -> bool:
        vals = sorted(v for r in self.rows for v in r)
        if vals != list(range(1, len(vals) + 1)):
            return False
        return self.is_semistandard()

    def to_text(self) -> str:
        parts = []
        for i, r in enumerate(self.rows):
            skipped = ["."] * self.shape.inner.part(i)
            parts.append(",".join(skipped + [str(v) for v in r]))
        return "/".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def parse_tableau(text: str) -> Tableau:
    """Inverse of :meth:`Tableau.to_text`; '.' marks cells of the inner shape."""
    outer, inner, rows = [], [], []
    for chunk in text.strip().split("/"):
        tokens = [t.strip() for t in chunk.split(",") if t.strip()]
        skip = sum(1 for t in tokens if t == ".")
        if any(t == "." for t in tokens[skip:]):
            raise ValueError(f"inner cells must come first in {chunk!r}")
        inner.append(skip)
        outer.append(len(tokens))
        rows.append(tuple(int(t) for t in tokens[skip:]))
    shape = SkewShape(Partition(outer), Partition(inner))
    if list(shape.outer) != outer or list(shape.inner) != [x for x in inner if x]:
        raise ValueError(f"rows of {text!r} do not form a skew shape")
    return Tableau(shape, tuple(rows))


# ---------------------------------------------------------------------------
# hooks and standard tableaux


def hook_lengths(lam: Sequence[int]) -> dict[tuple[int, int], int]:
    lam = Partition(lam)
    conj = conjugate(lam)
    return {(i, j): lam[i - 1] + conj[j - 1] - i - j + 1 for i, j in lam.cells()}


def syt_count_hlf(lam: Sequence[int]) -> int:
    """f^lambda by the hook-length formula."""
    lam = Partition(lam)
    denom = prod(hook_lengths(lam).values())
    q, r = divmod(factorial(lam.size), denom)
    if r:
        raise ArithmeticError(f"hook-length division not exact for {lam}")
    return q


@lru_cache(maxsize=None)
def _skew_syt_count(outer: Partition, inner: Partition) -> int:
    if outer == inner:
        return 1
    total = 0
    # remove the cell holding the largest entry: an outer corner not in inner
    for i, row in enumerate(outer):
        if row > inner.part(i) and row > outer.part(i + 1):
            total += _skew_syt_count(Partition(outer[:i] + (row - 1,) + outer[i + 1 :]), inner)
    return total


def syt_count(shape: SkewShape) -> int:
    """f^(lambda/mu) by peeling corners, without listing tableaux."""
    return _skew_syt_count(shape.outer, shape.inner)


def syt_enumerate(shape: SkewShape) -> list[Tableau]:
    n = shape.size
    if n > MAX_ENUMERATION_CELLS:
        raise ValueError(f"{n} cells exceeds the enumeration cap of {MAX_ENUMERATION_CELLS}")
    out: list[Tableau] = []
    filled = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    rows: list[list[int]] = [[] for _ in shape.outer]

    def rec(v: int):
        if v > n:
            out.append(Tableau(shape, tuple(tuple(r) for r in rows)))
            return
        for i in range(len(shape.outer)):
            j = filled[i]
            if j < shape.outer[i] and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                rows[i].append(v)
                rec(v + 1)
                rows[i].pop()
                filled[i] -= 1

    rec(1)
    return out


def naruse_lower_bound(shape: SkewShape) -> tuple[int, int]:
    """n! times the product of 1/h over skew cells, hooks taken in the outer shape."""
    hooks = hook_lengths(shape.outer)
    bound = Fraction(factorial(shape.size), prod(hooks[c] for c in shape.cells()))
    return bound.numerator, bound.denominator


def hook_inequality_check(tau: Sequence[int]) -> tuple[int, int, bool]:
    tau = Partition(tau)
    lhs = prod(hook_lengths(tau).values())
    rhs = prod(i + j - 1 for i, j in tau.cells())
    return lhs, rhs, lhs <= rhs


# ---------------------------------------------------------------------------
# RSK


@dataclass
class RSKStep:
    letter: int
    bumps: list[tuple[int, int, int]] = field(default_factory=list)  # (row, value placed, value bumped)
    new_cell: tuple[int, int] = (0, 0)


def rsk(w: Sequence[int], trace: list[RSKStep] | None = None) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK of a permutation into a pair of standard tableaux."""
    w = Permutation(w)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for t, x in enumerate(w, start=1):
        step = RSKStep(x)
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([t])
                break
            row = P[r]
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                Q[r].append(t)
                break
            row[pos], x = x, row[pos]
            step.bumps.append((r + 1, row[pos], x))
            r += 1
        step.new_cell = (r + 1, len(P[r]))
        if trace is not None:
            trace.append(step)
    return Tableau.from_rows(P), Tableau.from_rows(Q)


def rsk_inverse(P: Tableau, Q: Tableau) -> Permutation:
    if P.shape != Q.shape or P.shape.inner:
        raise ValueError("P and Q must have the same straight shape")
    if not (P.is_standard() and Q.is_standard()):
        raise ValueError("P and Q must be standard")
    Prows = [list(r) for r in P.rows]
    where = {v: (i, j) for i, r in enumerate(Q.rows) for j, v in enumerate(r)}
    n = P.shape.size
    w = [0] * n
    for t in range(n, 0, -1):
        i, _ = where[t]
        y = Prows[i].pop()
        for r in range(i - 1, -1, -1):
            row = Prows[r]
            pos = bisect_left(row, y) - 1
            row[pos], y = y, row[pos]
        w[t - 1] = y
        if not Prows[i]:
            Prows.pop()
    return Permutation(w)


# ---------------------------------------------------------------------------
# Kostka and Littlewood-Richardson numbers


def _horizontal_strips_removed(lam: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """All kappa inside lam with lam/kappa a horizontal strip of ``size`` cells."""
    m = len(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == m:
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        lo = lam[i + 1] if i + 1 < m else 0
        for kap in range(lam[i], lo - 1, -1):
            take = lam[i] - kap
            if take > left:
                break
            acc.append(kap)
            yield from rec(i + 1, left - take, acc)
            acc.pop()

    yield from rec(0, size, [])


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], weight: tuple[int, ...]) -> int:
    if not weight:
        return 1 if not lam else 0
    return sum(_kostka(kap, weight[:-1]) for kap in _horizontal_strips_removed(lam, weight[-1]))


def kostka(lam: Sequence[int], weight: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` with content ``weight``.

    ``weight`` may be any composition (zeros allowed), not only a partition.
    """
    lam = Partition(lam)
    weight = tuple(int(x) for x in weight)
    if any(x < 0 for x in weight):
        raise ValueError("negative weight")
    if lam.size != sum(weight):
        raise ValueError(f"size mismatch: |{lam}| != {sum(weight)}")
    return _kostka(tuple(lam), weight)


@lru_cache(maxsize=None)
def _lr(outer: Partition, inner: Partition, weight: Partition) -> int:
    shape = SkewShape(outer, inner)
    cells = [(i, j) for i in range(len(outer)) for j in reversed(shape.row_range(i))]
    if not cells:
        return 1
    entry: dict[tuple[int, int], int] = {}
    counts = [0] * (len(weight) + 1)
    nvals = len(weight)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = entry.get((i, j + 1), nvals)
        lo = entry[(i - 1, j)] + 1 if (i - 1, j) in entry else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= weight[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            entry[(i, j)] = v
            total += rec(idx + 1)
            del entry[(i, j)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape lam/mu and weight nu.

    Reading word: rows top to bottom, each row right to left; it must be a
    lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}| + |{nu}|")
    if not lam.contains(mu):
        return 0
    return _lr(lam, mu, nu)


# ---------------------------------------------------------------------------
# inequality sweep


@dataclass
class InequalityReport:
    n: int
    k: int
    checked: dict[str, int] = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def _fail(self, kind: str, **data) -> None:
        self.witnesses.append({"check": kind, **data})


def yt_inequalities(n: int, k: int) -> InequalityReport:
    """Exhaustively check the three tableau inequalities, the FKG-type
    inequality and the double-counting identity at size n, split k + (n-k)."""
    if n > 9:
        raise ValueError("n is capped at 9")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    rep = InequalityReport(n, k)
    lams = list(partitions(n))
    mus = list(partitions(k))
    nus = list(partitions(n - k))
    nfact = factorial(n)
    cnk = binomial(n, k)

    rep.checked["f_squared"] = len(lams)
    for lam in lams:
        f = syt_count_hlf(lam)
        if f * f > nfact:
            rep._fail("f_squared", lam=lam, lhs=f * f, rhs=nfact)

    for mu in mus:
        for nu in nus:
            union, inter = diagram_union_intersection(mu, nu)
            fmu, fnu = syt_count_hlf(mu), syt_count_hlf(nu)
            weighted = 0
            for lam in lams:
                c = lr_coefficient(lam, mu, nu)
                weighted += c * syt_count_hlf(lam)
                if c * c > cnk:
                    rep._fail("lr_squared", lam=lam, mu=mu, nu=nu, lhs=c * c, rhs=cnk)
                c2 = lr_coefficient(lam, union, inter)
                if c > c2:
                    rep._fail("lr_union", lam=lam, mu=mu, nu=nu, lhs=c, rhs=c2)
            rhs = cnk * fmu * fnu
            if weighted != rhs:
                rep._fail("double_counting", mu=mu, nu=nu, lhs=weighted, rhs=rhs)
    rep.checked["lr_squared"] = rep.checked["lr_union"] = len(lams) * len(mus) * len(nus)
    rep.checked["double_counting"] = len(mus) * len(nus)

    for a in lams:
        for b in lams:
            union, inter = diagram_union_intersection(a, b)
            lhs = syt_count_hlf(a) * syt_count_hlf(b)
            rhs = syt_count_hlf(union) * syt_count_hlf(inter)
            if lhs > rhs:
                rep._fail("fkg", lam=a, mu=b, lhs=lhs, rhs=rhs)
    rep.checked["fkg"] = len(lams) ** 2
    return rep
