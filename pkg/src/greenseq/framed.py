"""Framed quivers, c-vectors, and green/red bookkeeping.

Framing a quiver adds one frozen vertex i' and an arrow i -> i' per
vertex.  Along a mutation path we keep the principal part together with
the c-matrix whose row i records the net arrows from mutable vertex i to
the frozen vertices.  Every row stays sign-coherent (all entries >= 0 or
all <= 0) and nonzero; a violation means the implementation is broken,
not that the input is bad.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .quiver import Matrix, Quiver, check_skew_symmetric, freeze_matrix


class SignCoherenceError(RuntimeError):
    """A c-matrix row lost sign coherence: an implementation bug."""


class NotCoframedError(ValueError):
    """The state is not the endpoint of a reddening sequence."""


@dataclass(frozen=True)
class CVector:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        has_pos = any(x > 0 for x in self.entries)
        has_neg = any(x < 0 for x in self.entries)
        if has_pos and has_neg:
            raise SignCoherenceError(f"c-vector {self.entries} mixes signs")
        if not (has_pos or has_neg):
            raise SignCoherenceError("c-vector is zero")

    @property
    def sign(self) -> int:
        """+1 for green, -1 for red."""
        return 1 if any(x > 0 for x in self.entries) else -1

    @property
    def is_green(self) -> bool:
        return self.sign > 0

    def support(self) -> frozenset[int]:
        """1-based indices of the nonzero entries."""
        return frozenset(i + 1 for i, x in enumerate(self.entries) if x != 0)


@dataclass(frozen=True)
class MutationSequence:
    """Ordered 1-based vertex indices, optionally annotated with the
    c-vector read off just before each step of a replay."""

    vertices: tuple[int, ...]
    annotations: tuple[CVector, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        for v in self.vertices:
            if v < 1:
                raise ValueError(f"vertex index {v} must be >= 1")
        if self.annotations and len(self.annotations) != len(self.vertices):
            raise ValueError("annotations must match the sequence length")

    @classmethod
    def parse(cls, text: str) -> "MutationSequence":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad mutation sequence {text!r}: {exc}") from exc

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def without_annotations(self) -> "MutationSequence":
        return MutationSequence(self.vertices)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the image tuple (sigma(1), ..., sigma(n))."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(int(x) for x in self.image))
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{self.image} is not a permutation of 1..{len(self.image)}")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    @property
    def is_identity(self) -> bool:
        return all(self.image[i] == i + 1 for i in range(len(self.image)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FramedState:
    principal: Matrix
    cmat: Matrix
    origin: Quiver
    history: MutationSequence = field(default_factory=lambda: MutationSequence(()))

    def __post_init__(self) -> None:
        object.__setattr__(self, "principal", freeze_matrix(self.principal))
        object.__setattr__(self, "cmat", freeze_matrix(self.cmat))
        check_skew_symmetric(self.principal)
        for row in self.cmat:
            CVector(row)  # raises SignCoherenceError on a bad row

    @property
    def n(self) -> int:
        return len(self.principal)

    def _check_vertex(self, k: int) -> None:
        if not 1 <= k <= self.n:
            raise ValueError(f"vertex {k} out of range 1..{self.n}")

    def c_vector(self, i: int) -> CVector:
        self._check_vertex(i)
        return CVector(self.cmat[i - 1])

    def is_green(self, i: int) -> bool:
        return self.c_vector(i).is_green

    def is_red(self, i: int) -> bool:
        return not self.is_green(i)

    @property
    def is_all_red(self) -> bool:
        return all(not self.c_vector(i).is_green for i in range(1, self.n + 1))

    def green_vertices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.is_green(i))

    def mutate(self, k: int) -> "FramedState":
        """Mutate at mutable vertex k, updating both the principal part and
        the c-matrix by the exchange-matrix rule (frozen rows included)."""
        self._check_vertex(k)
        before = self.c_vector(k)
        b = self.principal
        c = self.cmat
        n = self.n
        k0 = k - 1
        new_b = []
        new_c = []
        for i in range(n):
            bik = b[i][k0]
            sgn = (bik > 0) - (bik < 0)
            if i == k0:
                new_b.append(tuple(-x for x in b[i]))
                new_c.append(tuple(-x for x in c[i]))
                continue
            brow = b[i]
            row_b = []
            for j in range(n):
                if j == k0:
                    row_b.append(-brow[j])
                else:
                    row_b.append(brow[j] + sgn * max(0, bik * b[k0][j]))
            new_b.append(tuple(row_b))
            crow = c[i]
            new_c.append(
                tuple(
                    crow[j] + sgn * max(0, bik * c[k0][j]) for j in range(n)
                )
            )
        history = MutationSequence(
            self.history.vertices + (k,),
            (self.history.annotations or ()) + (before,),
        )
        return FramedState(tuple(new_b), tuple(new_c), self.origin, history)

    def mutate_sequence(self, vertices) -> "FramedState":
        state = self
        for k in vertices:
            state = state.mutate(k)
        return state

    def extract_permutation(self) -> Permutation:
        """The frozen isomorphism onto the coframed quiver, when it exists:
        cmat must equal minus a permutation matrix and the principal part
        must be the origin's matrix conjugated by that permutation."""
        n = self.n
        image = [0] * n
        for i in range(n):
            nonzero = [(j, x) for j, x in enumerate(self.cmat[i]) if x != 0]
            if len(nonzero) != 1 or nonzero[0][1] != -1:
                raise NotCoframedError(
                    f"c-matrix row {i + 1} is not minus a standard basis vector"
                )
            image[i] = nonzero[0][0] + 1
        sigma = Permutation(tuple(image))
        b0 = self.origin.b
        for i in range(n):
            for j in range(n):
                if self.principal[i][j] != b0[sigma(i + 1) - 1][sigma(j + 1) - 1]:
                    raise NotCoframedError(
                        "principal part is not the permuted original matrix"
                    )
        return sigma


def frame(q: Quiver) -> FramedState:
    """Initial framed state: principal part q.b, c-matrix the identity."""
    return FramedState(q.b, identity_matrix(q.n), q)
