"""Bricks over the linearly oriented type-A path algebra, at desk scale.

The bricks of the path algebra of 1 -> 2 -> ... -> n are the interval
modules [a, b]; a maximal green sequence corresponds to a maximal
forward Hom-orthogonal sequence of bricks whose dimension vectors are
the c-vectors of the sequence.  Everything here is combinatorial: Hom
between intervals reduces to the closed-form overlap test in
hom_nonzero, which tests validate against a linear-algebra oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Quiver
from .search import SearchConfig, enumerate_mgs


class TruncatedSearchError(RuntimeError):
    """The green-sequence side of a cross-validation hit its depth bound."""


@dataclass(frozen=True, order=True)
class Interval:
    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise ValueError(f"need 1 <= a <= b, got [{self.a}, {self.b}]")

    def dimension_vector(self, n: int) -> tuple[int, ...]:
        if self.b > n:
            raise ValueError(f"interval [{self.a}, {self.b}] does not fit in rank {n}")
        return tuple(1 if self.a <= i <= self.b else 0 for i in range(1, n + 1))

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class BrickSequence:
    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if len(set(self.intervals)) != len(self.intervals):
            raise ValueError("bricks in a sequence must be pairwise distinct")

    def dimension_vectors(self, n: int) -> tuple[tuple[int, ...], ...]:
        return tuple(iv.dimension_vector(n) for iv in self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)


def hom_nonzero(src: Interval, tgt: Interval) -> bool:
    """Whether Hom(src, tgt) != 0 for interval right modules: a nonzero map
    is a quotient of the source onto a submodule of the target, which
    happens exactly when src.a <= tgt.a <= src.b <= tgt.b."""
    return src.a <= tgt.a <= src.b <= tgt.b


def all_intervals(n: int) -> list[Interval]:
    return [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def is_forward_orthogonal(seq: BrickSequence) -> bool:
    ivs = seq.intervals
    for i in range(len(ivs)):
        for j in range(i + 1, len(ivs)):
            if hom_nonzero(ivs[i], ivs[j]):
                return False
    return True


def _insertion_possible(ivs: tuple[Interval, ...], x: Interval, pos: int) -> bool:
    if x in ivs:
        return False
    for i in range(pos):
        if hom_nonzero(ivs[i], x):
            return False
    for j in range(pos, len(ivs)):
        if hom_nonzero(x, ivs[j]):
            return False
    return True


def is_maximal_forward_orthogonal(seq: BrickSequence, n: int) -> bool:
    """Forward orthogonal, and no interval of rank n can be inserted at any
    position without breaking that."""
    if not is_forward_orthogonal(seq):
        return False
    ivs = seq.intervals
    for x in all_intervals(n):
        for pos in range(len(ivs) + 1):
            if _insertion_possible(ivs, x, pos):
                return False
    return True


def enumerate_maximal_chains(n: int) -> list[BrickSequence]:
    """All maximal forward Hom-orthogonal sequences over the n(n+1)/2
    intervals, by depth-first extension at the end with the full insertion
    check at the leaves."""
    if not 1 <= n <= 6:
        raise ValueError("chain enumeration is limited to 1 <= n <= 6")
    ivs = all_intervals(n)
    out: list[BrickSequence] = []
    chain: list[Interval] = []

    def walk() -> None:
        extendable = [
            x
            for x in ivs
            if x not in chain and all(not hom_nonzero(s, x) for s in chain)
        ]
        if not extendable:
            candidate = BrickSequence(tuple(chain))
            if is_maximal_forward_orthogonal(candidate, n):
                out.append(candidate)
            return
        for x in extendable:
            chain.append(x)
            walk()
            chain.pop()

    walk()
    return out


def linear_quiver(n: int) -> Quiver:
    """The linearly oriented type-A quiver 1 -> 2 -> ... -> n."""
    b = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        b[i][i + 1] = 1
        b[i + 1][i] = -1
    return Quiver(tuple(tuple(row) for row in b))


def cross_validate(n: int) -> bool:
    """Compare the c-vector sequences of every maximal green sequence of
    the linear A_n quiver with the dimension-vector sequences of every
    maximal brick chain; the two sets must coincide."""
    if not 1 <= n <= 5:
        raise ValueError("cross-validation is limited to 1 <= n <= 5")
    bound = n * (n + 1) // 2
    report = enumerate_mgs(linear_quiver(n), SearchConfig(max_len=bound, dedup=True))
    if report.truncated:
        raise TruncatedSearchError(
            f"green-sequence enumeration for n={n} hit the bound {bound}"
        )
    green_side = {
        tuple(cv.entries for cv in seq.annotations) for seq in report.sequences
    }
    chains = enumerate_maximal_chains(n)
    brick_side = {chain.dimension_vectors(n) for chain in chains}
    if len(green_side) != report.count or len(brick_side) != len(chains):
        return False
    return green_side == brick_side
