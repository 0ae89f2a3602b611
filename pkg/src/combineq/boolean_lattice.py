"""Subsets of [n]: the reflection injection, ballot sets and symmetric chain
decompositions of the Boolean lattice."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .core import binomial


@dataclass(frozen=True)
class Subset:
    ambient: int
    members: tuple[int, ...]

    def __init__(self, ambient: int, members: Iterable[int] = ()):
        ms = tuple(sorted(set(int(x) for x in members)))
        if ambient < 0:
            raise ValueError("ambient size must be nonnegative")
        if ms and (ms[0] < 1 or ms[-1] > ambient):
            raise ValueError(f"members {ms} not inside [{ambient}]")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "members", ms)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.members)

    def __le__(self, other: "Subset") -> bool:  # type: ignore[override]
        return set(self.members) <= set(other.members)

    def __lt__(self, other: "Subset") -> bool:  # type: ignore[override]
        return set(self.members) < set(other.members)

    def __str__(self) -> str:
        return f"{self.ambient}:{{{','.join(map(str, self.members))}}}"


_SUBSET_RE = re.compile(r"^\s*(\d+)\s*:\s*\{([^}]*)\}\s*$")


def parse_subset(text: str) -> Subset:
    m = _SUBSET_RE.match(text)
    if not m:
        raise ValueError(f"malformed subset {text!r}; expected like '4:{{2,4}}'")
    body = m.group(2).strip()
    return Subset(int(m.group(1)), [int(x) for x in body.split(",")] if body else [])


def k_subsets(n: int, k: int) -> Iterator[Subset]:
    for c in combinations(range(1, n + 1), k):
        yield Subset(n, c)


def reflection_level(X: Subset) -> int:
    """Smallest l with exactly l members of X in [2l+1]."""
    n = X.ambient
    ell = 0
    while 2 * ell + 1 <= n:
        if sum(1 for x in X.members if x <= 2 * ell + 1) == ell:
            return ell
        ell += 1
    raise ValueError(f"no reflection level for {X}")


def reflection_injection(X: Subset, k: int) -> Subset:
    """Map a (k-1)-subset of [n] to a k-subset by complementing X inside [2l+1]."""
    n = X.ambient
    if len(X) != k - 1:
        raise ValueError("not a (k-1)-subset")
    if k < 1 or 2 * k > n:
        raise ValueError("k exceeds n/2")
    top = 2 * reflection_level(X) + 1
    head = set(range(1, top + 1))
    return Subset(n, (set(X.members) - head) | (head - set(X.members)))


def is_ballot_set(Y: Subset) -> bool:
    count = 0
    for m in range(1, Y.ambient + 1):
        if m in Y:
            count += 1
        if 2 * count > m:
            return False
    return True


def b_count(n: int, k: int) -> int:
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    return binomial(n, k) - binomial(n, k - 1)


@dataclass(frozen=True)
class SymmetricChainDecomposition:
    ambient: int
    chains: tuple[tuple[Subset, ...], ...]

    def chain_of(self) -> dict[Subset, tuple[int, int]]:
        """Map each subset to (chain index, position in chain)."""
        return {s: (ci, pos) for ci, chain in enumerate(self.chains) for pos, s in enumerate(chain)}

    def validate(self) -> list[str]:
        """Return a list of invariant violations; empty means valid."""
        n = self.ambient
        problems = []
        seen: set[Subset] = set()
        for ci, chain in enumerate(self.chains):
            if not chain:
                problems.append(f"chain {ci} is empty")
                continue
            for a, b in zip(chain, chain[1:]):
                if not (a < b and len(b) == len(a) + 1):
                    problems.append(f"chain {ci} not saturated at {a} -> {b}")
            if len(chain[0]) + len(chain[-1]) != n:
                problems.append(f"chain {ci} not symmetric: ranks {len(chain[0])}..{len(chain[-1])}")
            for s in chain:
                if s in seen:
                    problems.append(f"{s} appears twice")
                seen.add(s)
        if len(seen) != 2**n:
            problems.append(f"covers {len(seen)} of {2**n} subsets")
        return problems


def _match_parentheses(members: set[int], n: int) -> tuple[set[int], list[int]]:
    """Members open, non-members close.  Return matched positions and the
    unmatched positions in increasing order."""
    stack: list[int] = []
    matched: set[int] = set()
    unmatched: list[int] = []
    for pos in range(1, n + 1):
        if pos in members:
            stack.append(pos)
        elif stack:
            matched.add(stack.pop())
            matched.add(pos)
        else:
            unmatched.append(pos)
    unmatched.extend(stack)
    unmatched.sort()
    return matched, unmatched


def parenthesization_successor(X: Subset) -> Subset | None:
    """Next subset in X's Greene-Kleitman chain, or None at the chain top."""
    members = set(X.members)
    _, unmatched = _match_parentheses(members, X.ambient)
    free = [p for p in unmatched if p not in members]
    if not free:
        return None
    return Subset(X.ambient, members | {free[-1]})


def scd_parenthesization(n: int) -> SymmetricChainDecomposition:
    if n < 1:
        raise ValueError("n must be positive")
    chains = []
    for bits in range(2**n):
        members = {i + 1 for i in range(n) if bits >> i & 1}
        _, unmatched = _match_parentheses(members, n)
        if any(p in members for p in unmatched):
            continue  # not a chain bottom
        chain = [Subset(n, members)]
        # unmatched positions fill from the right
        for p in reversed(unmatched):
            members = members | {p}
            chain.append(Subset(n, members))
        chains.append(tuple(chain))
    chains.sort(key=lambda c: (len(c[0]), c[0].members))
    return SymmetricChainDecomposition(n, tuple(chains))


def scd_inductive(n: int) -> SymmetricChainDecomposition:
    if n < 1:
        raise ValueError("n must be positive")
    chains: list[list[frozenset[int]]] = [[frozenset()]]
    for m in range(1, n + 1):
        nxt = []
        for c in chains:
            lifted = [s | {m} for s in c]
            nxt.append([c[0]] + lifted)
            if len(c) > 1:
                nxt.append(c[1:])
        chains = nxt
    out = [tuple(Subset(n, s) for s in c) for c in chains]
    out.sort(key=lambda c: (len(c[0]), c[0].members))
    return SymmetricChainDecomposition(n, tuple(out))


def nested_injection(X: Subset, scd: SymmetricChainDecomposition) -> Subset:
    """Successor of X in its chain of ``scd``."""
    if X.ambient != scd.ambient:
        raise ValueError("ambient mismatch")
    for chain in scd.chains:
        if len(chain[0]) <= len(X) <= len(chain[-1]):
            idx = len(X) - len(chain[0])
            if chain[idx] == X:
                if idx + 1 == len(chain):
                    raise ValueError("no successor")
                return chain[idx + 1]
    raise ValueError(f"{X} not found in decomposition")


def successor_table(scd: SymmetricChainDecomposition) -> dict[Subset, Subset]:
    """Chain successors for every non-top subset, built in one pass."""
    return {a: b for chain in scd.chains for a, b in zip(chain, chain[1:])}
