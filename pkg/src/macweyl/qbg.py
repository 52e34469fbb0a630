"""The quantum Bruhat graph on the finite Weyl group.

Edges ``w -> w s_alpha`` are labelled by positive roots alpha of Y.  A Bruhat
edge raises the length by one; a quantum edge lowers it by
``<2 rho^{vee Y}, alpha> - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .rootdata import RootDatum, Weight

__all__ = ["QuantumBruhatGraph", "FiltrationPath", "build_qbg", "BRUHAT", "QUANTUM"]

BRUHAT = "bruhat"
QUANTUM = "quantum"


@dataclass(frozen=True)
class FiltrationPath:
    """A path sigma -> ... -> end using labels at the listed 0-based positions."""

    start: int
    steps: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def end(self) -> int:
        return self.vertices[-1]


class QuantumBruhatGraph:
    def __init__(self, datum: RootDatum):
        self.datum = datum
        W = datum.W
        self.W = W
        self.labels: tuple[Weight, ...] = datum.Y.positive_roots
        self._edges: dict[tuple[int, Weight], str] = {}
        for w in range(W.order):
            for a in self.labels:
                t = W.mul(w, W.reflection_y(a))
                drop = int(2 * datum.rho_vee_y(a)) - 1
                if W.length[t] == W.length[w] + 1:
                    self._edges[(w, a)] = BRUHAT
                elif W.length[t] == W.length[w] - drop:
                    self._edges[(w, a)] = QUANTUM

    def has_edge(self, w: int, alpha: Sequence[int]) -> str | None:
        """Kind of the edge w -> w s_alpha, or None."""
        alpha = tuple(alpha)
        if not (self.datum.Y.is_root(alpha) and self.datum.Y.is_positive_root(alpha)):
            raise ValueError(f"QBG labels are positive roots of Y, got {alpha}")
        return self._edges.get((w, alpha))

    def target(self, w: int, alpha: Sequence[int]) -> int:
        return self.W.mul(w, self.W.reflection_y(tuple(alpha)))

    def edges(self) -> list[tuple[int, Weight, int, str]]:
        """(source, label, target, kind) in a deterministic order."""
        order = self.vertex_order()
        pos = {w: i for i, w in enumerate(order)}
        out = [(w, a, self.target(w, a), k) for (w, a), k in self._edges.items()]
        out.sort(key=lambda e: (pos[e[0]], pos[e[2]], e[1]))
        return out

    def __len__(self) -> int:
        return len(self._edges)

    def vertex_order(self) -> list[int]:
        return sorted(range(self.W.order), key=lambda w: (self.W.length[w], self.W.words[w]))

    def filtration_paths(self, start: int, labels: Sequence[Weight]) -> list[FiltrationPath]:
        """All paths start -> start s_{l_{m1}} -> ... with m1 < m2 < ... along ``labels``."""
        out: list[FiltrationPath] = []

        def rec(pos: int, steps: tuple[int, ...], verts: tuple[int, ...]) -> None:
            if pos == len(labels):
                out.append(FiltrationPath(start, steps, verts))
                return
            rec(pos + 1, steps, verts)
            lab = tuple(labels[pos])
            if self._edges.get((verts[-1], lab)) is not None:
                rec(pos + 1, steps + (pos,), verts + (self.target(verts[-1], lab),))

        rec(0, (), (start,))
        out.sort(key=lambda p: (len(p.steps), p.steps))
        return out

    def to_dot(self) -> str:
        W = self.W
        Y = self.datum.Y
        lines = [f'digraph QBG_{self.datum.cartan_type}_{self.datum.kind} {{']
        for w in self.vertex_order():
            lines.append(f'  v{w} [label="{W.name(w)}"];')
        for s, a, t, kind in self.edges():
            coords = ",".join(str(c) for c in Y.root_coordinates(a))
            style = "solid" if kind == BRUHAT else "dashed"
            lines.append(f'  v{s} -> v{t} [label="({coords})", style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def build_qbg(datum: RootDatum) -> QuantumBruhatGraph:
    return QuantumBruhatGraph(datum)
