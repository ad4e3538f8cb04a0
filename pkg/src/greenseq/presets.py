"""Named example quivers shared by the CLI, tests, and the explorer UI."""

from __future__ import annotations

from .bricks import linear_quiver
from .quiver import Quiver


def q_abc(a: int, b: int, c: int) -> Quiver:
    """Three vertices with a arrows 1->2, b arrows 2->3, c arrows 3->1."""
    return Quiver.from_arrows(3, [[1, 2, a], [2, 3, b], [3, 1, c]])


def preset(name: str) -> Quiver:
    key = name.strip().lower().replace("-", "").replace("_", "")
    if key in _PRESETS:
        return _PRESETS[key]()
    raise KeyError(f"unknown preset {name!r}; available: {', '.join(sorted(_PRESETS))}")


def preset_names() -> list[str]:
    return sorted(_PRESETS)


_PRESETS = {
    "a1": lambda: linear_quiver(1),
    "a2": lambda: linear_quiver(2),
    "a3": lambda: linear_quiver(3),
    "a4": lambda: linear_quiver(4),
    "kronecker": lambda: Quiver.from_arrows(2, [[1, 2, 2]]),
    # the 3-cycle 2->1, 1->3, 3->2
    "cycle3": lambda: Quiver.from_arrows(3, [[2, 1, 1], [1, 3, 1], [3, 2, 1]]),
    "q222": lambda: q_abc(2, 2, 2),
}
