"""Search and verification over the oriented exchange graph.

A green sequence mutates only at green vertices; it is maximal green if
the final state is all red, and reddening if only the final all-red
condition is required.  Searches are depth-bounded: `truncated` in a
report means some branch was abandoned at the bound, so an empty result
is evidence up to that length, never a non-existence proof.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .framed import CVector, FramedState, MutationSequence, Permutation, frame
from .quiver import Quiver

MODES = ("green", "maximal_green", "reddening")
STRATEGIES = ("dfs_all", "bfs_shortest", "count_only")


def normalize_mode(mode: str) -> str:
    mode = mode.replace("-", "_")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class SearchConfig:
    max_len: int
    mode: str = "maximal_green"
    strategy: str = "dfs_all"
    dedup: bool = False

    def __post_init__(self) -> None:
        if self.max_len < 1:
            raise ValueError("max_len must be >= 1")
        object.__setattr__(self, "mode", normalize_mode(self.mode))
        if self.mode == "green":
            raise ValueError("search modes are maximal_green or reddening")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")


@dataclass(frozen=True)
class StepReport:
    vertex: int
    c_vector: CVector

    @property
    def green(self) -> bool:
        return self.c_vector.is_green


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    mode: str
    steps: tuple[StepReport, ...]
    all_red: bool
    final: FramedState
    permutation: Permutation | None = None
    failed_step: int | None = None
    reason: str | None = None

    @property
    def sequence(self) -> MutationSequence:
        return self.final.history


@dataclass(frozen=True)
class SearchReport:
    sequences: tuple[MutationSequence, ...]
    count: int
    states_visited: int
    truncated: bool

    def to_dict(self) -> dict:
        return {
            "sequences": [str(s) for s in self.sequences],
            "count": self.count,
            "truncated": self.truncated,
            "states_visited": self.states_visited,
        }


def verify_sequence(q: Quiver, seq: MutationSequence, mode: str) -> VerifyReport:
    """Replay seq on the framed quiver and check it in the given mode.

    Verification failures are reported, not raised; out-of-range vertices
    still raise since the replay itself is impossible.
    """
    mode = normalize_mode(mode)
    state = frame(q)
    steps = []
    failed_step = None
    reason = None
    for t, k in enumerate(seq.vertices, start=1):
        cv = state.c_vector(k)
        steps.append(StepReport(k, cv))
        if mode != "reddening" and failed_step is None and not cv.is_green:
            failed_step = t
            reason = f"vertex {k} is red at step {t}"
        state = state.mutate(k)
    all_red = state.is_all_red
    valid = failed_step is None
    if mode in ("maximal_green", "reddening") and not all_red:
        if valid:
            reason = "final state is not all red"
        valid = False
    permutation = None
    if valid and mode in ("maximal_green", "reddening"):
        permutation = state.extract_permutation()
    return VerifyReport(
        valid=valid,
        mode=mode,
        steps=tuple(steps),
        all_red=all_red,
        final=state,
        permutation=permutation,
        failed_step=failed_step,
        reason=reason,
    )


def _candidates(state: FramedState, mode: str) -> tuple[int, ...]:
    if mode == "maximal_green":
        return state.green_vertices()
    # Reddening search branches on every vertex, but never undoes the
    # previous mutation (mutation is an involution, so that move only
    # backtracks).
    last = state.history.vertices[-1] if state.history.vertices else 0
    return tuple(k for k in range(1, state.n + 1) if k != last)


def _search_dfs(q: Quiver, cfg: SearchConfig, collect: bool) -> SearchReport:
    found: list[MutationSequence] = []
    count = 0
    visited = 0
    truncated = False
    memo: dict = {}

    def walk(state: FramedState, remaining: int) -> tuple[tuple[tuple[int, ...], ...], bool]:
        """Returns (suffixes completing state to a hit, branch truncated)."""
        nonlocal visited
        visited += 1
        if state.is_all_red:
            return ((),), False
        key = None
        if cfg.dedup:
            key = (state.principal, state.cmat, remaining)
            if cfg.mode == "reddening":
                last = state.history.vertices[-1] if state.history.vertices else 0
                key = key + (last,)
            hit = memo.get(key)
            if hit is not None:
                return hit
        if remaining == 0:
            result: tuple[tuple[tuple[int, ...], ...], bool] = ((), True)
            if key is not None:
                memo[key] = result
            return result
        suffixes: list[tuple[int, ...]] = []
        cut = False
        for k in _candidates(state, cfg.mode):
            subs, sub_cut = walk(state.mutate(k), remaining - 1)
            cut = cut or sub_cut
            for s in subs:
                suffixes.append((k,) + s)
        result = (tuple(suffixes), cut)
        if key is not None:
            memo[key] = result
        return result

    start = frame(q)
    suffixes, truncated = walk(start, cfg.max_len)
    count = len(suffixes)
    if collect:
        replayed = []
        for suffix in sorted(suffixes):
            state = start.mutate_sequence(suffix)
            replayed.append(state.history)
        found = replayed
    return SearchReport(tuple(found), count, visited, truncated)


def enumerate_mgs(q: Quiver, cfg: SearchConfig) -> SearchReport:
    """Every sequence of length <= cfg.max_len reaching an all-red state,
    each exactly once, sorted lexicographically.  With mode maximal_green
    only green moves are explored, so results are maximal green sequences;
    mode reddening explores all moves and is exponential in practice.
    Strategy bfs_shortest reports only the first (shortest) hit."""
    if cfg.strategy == "bfs_shortest":
        return _search_bfs(q, cfg.max_len)
    return _search_dfs(q, cfg, collect=cfg.strategy != "count_only")


def count_mgs(q: Quiver, max_len: int) -> tuple[int, bool]:
    report = _search_dfs(
        q, SearchConfig(max_len=max_len, strategy="count_only"), collect=False
    )
    return report.count, report.truncated


def _search_bfs(q: Quiver, max_len: int) -> SearchReport:
    """Breadth-first over green moves with dedup on the exact matrix pair;
    stops at the first all-red state."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    start = frame(q)
    queue: deque[FramedState] = deque([start])
    seen = {(start.principal, start.cmat)}
    visited = 0
    truncated = False
    while queue:
        state = queue.popleft()
        visited += 1
        if state.is_all_red:
            return SearchReport((state.history,), 1, visited, False)
        if len(state.history) >= max_len:
            truncated = True
            continue
        for k in state.green_vertices():
            child = state.mutate(k)
            key = (child.principal, child.cmat)
            if key not in seen:
                seen.add(key)
                queue.append(child)
    return SearchReport((), 0, visited, truncated)


def shortest_mgs(q: Quiver, max_len: int) -> MutationSequence | None:
    """The history of the first all-red state found breadth-first, or None
    when there is none within the bound."""
    report = _search_bfs(q, max_len)
    return report.sequences[0] if report.sequences else None


def source_sequence(q: Quiver) -> MutationSequence:
    """A topological order of an acyclic quiver, replayed to confirm it is
    a maximal green sequence (raises CyclicQuiverError otherwise)."""
    order = q.topological_order()
    report = verify_sequence(q, MutationSequence(order), "maximal_green")
    if not report.valid:
        raise RuntimeError(
            f"source sequence {order} failed verification: {report.reason}"
        )
    return report.sequence
