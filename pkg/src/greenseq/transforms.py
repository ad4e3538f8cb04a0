"""Transformations producing new maximal green sequences from old ones:
rotation, restriction to full subquivers, and the triangular-extension
existence check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .framed import MutationSequence, frame
from .quiver import Quiver, triangular_extension
from .search import SearchConfig, VerifyReport, enumerate_mgs, shortest_mgs, verify_sequence


class InvalidSequenceError(ValueError):
    """The input sequence is not of the kind the transformation needs."""


class RealizationFailure(RuntimeError):
    """The restricted c-vector sequence could not be realized uniquely.
    Restriction of a maximal green sequence is always uniquely realizable
    on the subquiver, so this signals a bug in the c-vector bookkeeping
    rather than a user error."""


def _verify_for_rotation(q: Quiver, seq: MutationSequence) -> tuple[VerifyReport, str]:
    report = verify_sequence(q, seq, "maximal_green")
    if report.valid:
        return report, "maximal_green"
    report = verify_sequence(q, seq, "reddening")
    if report.valid:
        return report, "reddening"
    raise InvalidSequenceError(
        f"sequence {seq} is neither maximal green nor reddening: {report.reason}"
    )


def rotate(q: Quiver, seq: MutationSequence) -> tuple[Quiver, MutationSequence]:
    """Rotation: drop the first mutation i1 and append the unique vertex k
    receiving the arrow from the frozen copy of i1 in the final state;
    the result is a sequence of the same kind for the mutated quiver."""
    if not seq.vertices:
        raise InvalidSequenceError("cannot rotate an empty sequence")
    report, mode = _verify_for_rotation(q, seq)
    i1 = seq.vertices[0]
    col = i1 - 1
    final = report.final
    targets = [k for k in range(1, q.n + 1) if final.cmat[k - 1][col] < 0]
    if len(targets) != 1:
        raise RealizationFailure(
            f"expected one arrow out of the frozen copy of {i1}, found {len(targets)}"
        )
    k = targets[0]
    rotated_q = q.mutate(i1)
    rotated_seq = MutationSequence(seq.vertices[1:] + (k,))
    check = verify_sequence(rotated_q, rotated_seq, mode)
    if not check.valid:
        raise RealizationFailure(
            f"rotated sequence {rotated_seq} failed {mode} verification: {check.reason}"
        )
    return rotated_q, check.sequence


def restrict_mgs(
    q: Quiver, seq: MutationSequence, keep: Iterable[int]
) -> MutationSequence:
    """Restrict a maximal green sequence to a full subquiver: keep the
    c-vectors supported on the kept vertices, drop the other coordinates,
    and realize that sequence greedily on the framed subquiver (vertices
    relabeled 1..|keep|)."""
    keep_set = frozenset(keep)
    report = verify_sequence(q, seq, "maximal_green")
    if not report.valid:
        raise InvalidSequenceError(
            f"sequence {seq} is not a maximal green sequence: {report.reason}"
        )
    sub, labels = q.full_subquiver(keep_set)
    targets = []
    for step in report.steps:
        cv = step.c_vector
        if cv.support() <= keep_set:
            targets.append(tuple(cv.entries[old - 1] for old in labels))
    state = frame(sub)
    for target in targets:
        matches = [
            i for i in state.green_vertices() if state.cmat[i - 1] == target
        ]
        if len(matches) != 1:
            raise RealizationFailure(
                f"c-vector {target} matched {len(matches)} green vertices"
            )
        state = state.mutate(matches[0])
    if not state.is_all_red:
        raise RealizationFailure("restricted sequence did not end all red")
    return state.history


@dataclass(frozen=True)
class TriangularExtensionReport:
    extension: Quiver
    part1_sequence: MutationSequence | None
    part2_sequence: MutationSequence | None
    sequence: MutationSequence | None
    truncated: bool

    @property
    def parts_found(self) -> bool:
        return self.part1_sequence is not None and self.part2_sequence is not None

    @property
    def found(self) -> bool:
        return self.sequence is not None


def check_triangular_extension(
    q1: Quiver,
    q2: Quiver,
    cross: Iterable[Sequence[int]],
    max_len: int,
) -> TriangularExtensionReport:
    """Empirical check that a triangular extension of two quivers with
    maximal green sequences has one as well: when both parts have an MGS
    within the bound, search the extension for one too."""
    ext = triangular_extension(q1, q2, cross)
    s1 = shortest_mgs(q1, max_len)
    s2 = shortest_mgs(q2, max_len)
    if s1 is None or s2 is None:
        return TriangularExtensionReport(ext, s1, s2, None, False)
    found = shortest_mgs(ext, max_len)
    truncated = False
    if found is None:
        # distinguish "no MGS up to the bound" from a fully explored graph
        report = enumerate_mgs(
            ext, SearchConfig(max_len=max_len, strategy="count_only", dedup=True)
        )
        truncated = report.truncated
    return TriangularExtensionReport(ext, s1, s2, found, truncated)
