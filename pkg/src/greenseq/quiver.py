"""Quivers as skew-symmetric integer exchange matrices, and their mutation.

A quiver on vertices 1..n without loops or 2-cycles is encoded by the
n x n matrix b with b[i][j] = (number of arrows i -> j) - (number of
arrows j -> i).  All public vertex indices are 1-based; the matrix is
stored as a tuple of tuples so quivers are immutable and hashable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]


def freeze_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def check_skew_symmetric(b: Matrix) -> None:
    n = len(b)
    for row in b:
        if len(row) != n:
            raise ValueError("exchange matrix must be square")
    for i in range(n):
        for j in range(i, n):
            if b[i][j] != -b[j][i]:
                raise ValueError(
                    f"matrix is not skew-symmetric at ({i + 1},{j + 1})"
                )


@dataclass(frozen=True)
class Quiver:
    b: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", freeze_matrix(self.b))
        if self.n == 0:
            raise ValueError("quiver needs at least one vertex")
        check_skew_symmetric(self.b)

    @property
    def n(self) -> int:
        return len(self.b)

    def entry(self, i: int, j: int) -> int:
        """Net number of arrows i -> j (1-based)."""
        self._check_vertex(i)
        self._check_vertex(j)
        return self.b[i - 1][j - 1]

    def _check_vertex(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise ValueError(f"vertex {k} out of range 1..{self.n}")

    def arrows(self) -> list[tuple[int, int, int]]:
        """All arrows as (source, target, multiplicity), one entry per
        unordered pair, ordered by (min, max) of the pair."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                m = self.b[i][j]
                if m > 0:
                    out.append((i + 1, j + 1, m))
                elif m < 0:
                    out.append((j + 1, i + 1, -m))
        return out

    def mutate(self, k: int) -> "Quiver":
        """Mutation at vertex k: negate row/column k, and for the other
        entries add sgn(b[i][k]) * max(0, b[i][k] * b[k][j])."""
        self._check_vertex(k)
        b = self.b
        k -= 1
        n = self.n
        new = []
        for i in range(n):
            bik = b[i][k]
            sgn = (bik > 0) - (bik < 0)
            row = []
            for j in range(n):
                if i == k or j == k:
                    row.append(-b[i][j])
                else:
                    row.append(b[i][j] + sgn * max(0, bik * b[k][j]))
            new.append(tuple(row))
        return Quiver(tuple(new))

    def mutate_sequence(self, vertices: Iterable[int]) -> "Quiver":
        q = self
        for k in vertices:
            q = q.mutate(k)
        return q

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except CyclicQuiverError:
            return False
        return True

    def topological_order(self) -> tuple[int, ...]:
        """Vertices in an order compatible with the arrows, smallest
        index first among the available sources."""
        n = self.n
        indeg = [0] * n
        for i in range(n):
            for j in range(n):
                if self.b[i][j] > 0:
                    indeg[j] += 1
        order: list[int] = []
        placed = [False] * n
        for _ in range(n):
            pick = -1
            for v in range(n):
                if not placed[v] and indeg[v] == 0:
                    pick = v
                    break
            if pick < 0:
                raise CyclicQuiverError("quiver contains an oriented cycle")
            placed[pick] = True
            order.append(pick + 1)
            for j in range(n):
                if self.b[pick][j] > 0:
                    indeg[j] -= 1
        return tuple(order)

    def full_subquiver(self, keep: Iterable[int]) -> tuple["Quiver", tuple[int, ...]]:
        """Submatrix on `keep`, vertices relabeled 1..|keep| in increasing
        original order.  Returns (subquiver, labels) where labels[v-1] is
        the original index of new vertex v."""
        labels = tuple(sorted(set(keep)))
        if not labels:
            raise ValueError("keep must be a nonempty vertex set")
        for v in labels:
            self._check_vertex(v)
        sub = tuple(
            tuple(self.b[i - 1][j - 1] for j in labels) for i in labels
        )
        return Quiver(sub), labels

    # -- JSON interchange ------------------------------------------------

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[Sequence[int]]) -> "Quiver":
        b = [[0] * n for _ in range(n)]
        for arrow in arrows:
            if len(arrow) == 2:
                i, j = arrow
                m = 1
            elif len(arrow) == 3:
                i, j, m = arrow
            else:
                raise ValueError(f"arrow {arrow!r} must be [i, j] or [i, j, m]")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"arrow {arrow!r} out of range 1..{n}")
            if i == j:
                raise ValueError(f"loop at vertex {i} is not allowed")
            if m <= 0:
                raise ValueError(f"arrow multiplicity must be positive, got {m}")
            b[i - 1][j - 1] += m
            b[j - 1][i - 1] -= m
        return cls(freeze_matrix(b))

    @classmethod
    def from_dict(cls, data: dict) -> "Quiver":
        if "b_matrix" in data:
            return cls(freeze_matrix(data["b_matrix"]))
        if "vertices" in data:
            return cls.from_arrows(int(data["vertices"]), data.get("arrows", []))
        raise ValueError("quiver JSON needs 'b_matrix' or 'vertices'/'arrows'")

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid quiver JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValueError("quiver JSON must be an object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {"vertices": self.n, "arrows": [list(a) for a in self.arrows()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class CyclicQuiverError(ValueError):
    """Raised when an operation needs an acyclic quiver."""


def triangular_extension(
    q1: Quiver, q2: Quiver, cross: Iterable[Sequence[int]]
) -> Quiver:
    """Glue q1 and q2 with extra arrows from the q1 block to the q2 block.

    Vertices of q2 are relabeled n1+1..n1+n2; every cross arrow (i, j[, m])
    must satisfy i <= n1 < j.
    """
    n1, n2 = q1.n, q2.n
    n = n1 + n2
    b = [[0] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            b[i][j] = q1.b[i][j]
    for i in range(n2):
        for j in range(n2):
            b[n1 + i][n1 + j] = q2.b[i][j]
    for arrow in cross:
        if len(arrow) == 2:
            i, j = arrow
            m = 1
        elif len(arrow) == 3:
            i, j, m = arrow
        else:
            raise ValueError(f"cross arrow {arrow!r} must be (i, j) or (i, j, m)")
        if m <= 0:
            raise ValueError(f"cross arrow multiplicity must be positive, got {m}")
        if not (1 <= i <= n1 < j <= n):
            raise ValueError(
                f"cross arrow {i}->{j} must run from the first block "
                f"(1..{n1}) to the second ({n1 + 1}..{n})"
            )
        b[i - 1][j - 1] += m
        b[j - 1][i - 1] -= m
    return Quiver(freeze_matrix(b))
