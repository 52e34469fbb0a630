"""Alcove walks of a fixed reduced type, with folds, signs and derived weights.

A walk of type ``pi s_{i1} ... s_{il}`` starting at ``sigma`` is encoded by
its fold set J (1-based positions).  Walks are produced in binary-counter
order: J corresponds to the integer sum of 2^(j-1) over j in J.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .affine_weyl import AffineWeylElement, AffineWeylGroup, ReducedWord, affine_weyl_group
from .qbg import QuantumBruhatGraph, build_qbg
from .rootdata import AffineRoot, RootDatum, Weight

__all__ = ["AlcoveWalk", "WalkType", "enumerate_walks", "filter_qb", "filter_reverse_qb"]


@dataclass(frozen=True)
class AlcoveWalk:
    start: int
    word: ReducedWord
    J: tuple[int, ...]
    signs: tuple[int, ...]  # epsilon_j for j in J, same order
    z: tuple[AffineWeylElement, ...]
    betas: tuple[AffineRoot, ...]

    @property
    def ept(self) -> AffineWeylElement:
        return self.z[-1]

    @property
    def wt(self) -> Weight:
        return self.ept.weight

    @property
    def dir(self) -> int:
        return self.ept.direction

    @property
    def Jplus(self) -> tuple[int, ...]:
        return tuple(j for j, s in zip(self.J, self.signs) if s > 0)

    @property
    def Jminus(self) -> tuple[int, ...]:
        return tuple(j for j, s in zip(self.J, self.signs) if s < 0)

    def _sum(self, positions) -> tuple[Weight, int]:
        n = len(self.betas[0].finite) if self.betas else len(self.wt)
        fin = [0] * n
        deg = 0
        for j in positions:
            b = self.betas[j - 1]
            fin = [a + c for a, c in zip(fin, b.finite)]
            deg += b.degree
        return tuple(fin), deg

    @property
    def qwt(self) -> tuple[Weight, int]:
        """Sum of beta_j over negative folds as (finite part, degree)."""
        return self._sum(self.Jminus)

    @property
    def qwt_star(self) -> tuple[Weight, int]:
        """Sum of beta_j over positive folds as (finite part, degree)."""
        return self._sum(self.Jplus)

    @property
    def counter(self) -> int:
        return sum(1 << (j - 1) for j in self.J)

    def to_json(self, datum: RootDatum) -> dict:
        return {
            "J": list(self.J),
            "wt": list(self.wt),
            "dir": datum.W.name(self.dir),
            "Jplus": list(self.Jplus),
            "Jminus": list(self.Jminus),
            "qwt_deg": self.qwt[1],
        }


class WalkType:
    """Precomputed data of a reduced word used by every walk of that type."""

    def __init__(self, datum: RootDatum, word: ReducedWord):
        self.datum = datum
        self.G: AffineWeylGroup = affine_weyl_group(datum, "Y")
        self.word = word
        self.betas = self.G.beta_sequence(word)
        self.element = self.G.evaluate(word)
        self.reflections = tuple(self.G.reflection(b) for b in self.betas)
        self.simple = tuple(self.G.aff.simple_root(i) for i in word.letters)

    def start_state(self, sigma: int) -> AffineWeylElement:
        return self.G.mul(self.G.finite(sigma), self.word.pi)

    def fold_sign(self, state: AffineWeylElement, j: int) -> int:
        """Sign of the real part of state(alpha_{i_j}) (1-based j)."""
        img = self.G.act(state, self.simple[j - 1])
        return 1 if self.datum.Y.is_positive_root(img.finite) else -1

    def walk(self, sigma: int, J: Iterable[int]) -> AlcoveWalk:
        J = tuple(sorted(J))
        G = self.G
        z = [G.mul(G.finite(sigma), self.element)]
        signs = []
        for j in J:
            zk = G.mul(z[-1], self.reflections[j - 1])
            img = G.act(zk, self.betas[j - 1])
            signs.append(1 if self.datum.Y.is_positive_root(img.finite) else -1)
            z.append(zk)
        return AlcoveWalk(sigma, self.word, J, tuple(signs), tuple(z), self.betas)

    def steps(self, sigma: int, J: Iterable[int]) -> list[AffineWeylElement]:
        """The step sequence sigma_0, ..., sigma_l with sigma_0 = sigma pi."""
        J = set(J)
        out = [self.start_state(sigma)]
        for j, i in enumerate(self.word.letters, start=1):
            out.append(out[-1] if j in J else self.G.mul(out[-1], self.G.simple_reflections[i]))
        return out

    def hatted(self, sigma: int, J: Iterable[int]) -> AffineWeylElement:
        """sigma pi s_{i1} ... (hats at J) ... s_{il}."""
        J = set(J)
        out = self.start_state(sigma)
        for j, i in enumerate(self.word.letters, start=1):
            if j not in J:
                out = self.G.mul(out, self.G.simple_reflections[i])
        return out

    def _edge_ok(self, qbg: QuantumBruhatGraph, d_from: int, d_to: int, beta: AffineRoot, reverse: bool) -> bool:
        gamma = tuple(-c for c in beta.finite)
        Y = self.datum.Y
        if not Y.is_positive_root(gamma):
            return False
        src = d_to if reverse else d_from
        return qbg.has_edge(src, gamma) is not None

    def pruned(self, sigma: int, qbg: QuantumBruhatGraph, reverse: bool = False) -> list[AlcoveWalk]:
        """QB (or reverse-QB) walks, found by depth-first search with pruning."""
        G = self.G
        ell = len(self.betas)
        out: list[AlcoveWalk] = []
        z0 = G.mul(G.finite(sigma), self.element)

        def rec(j: int, state: AffineWeylElement, J: tuple, signs: tuple, zs: tuple) -> None:
            if j > ell:
                out.append(AlcoveWalk(sigma, self.word, J, signs, zs, self.betas))
                return
            # cross position j
            rec(j + 1, G.mul(state, G.simple_reflections[self.word.letters[j - 1]]), J, signs, zs)
            # fold at position j
            znew = G.mul(zs[-1], self.reflections[j - 1])
            if self._edge_ok(qbg, zs[-1].direction, znew.direction, self.betas[j - 1], reverse):
                rec(j + 1, state, J + (j,), signs + (self.fold_sign(state, j),), zs + (znew,))

        rec(1, self.start_state(sigma), (), (), (z0,))
        out.sort(key=lambda p: p.counter)
        return out


def enumerate_walks(datum: RootDatum, sigma: int, word: ReducedWord) -> Iterator[AlcoveWalk]:
    """All 2^l walks in binary-counter order."""
    wt = WalkType(datum, word)
    ell = len(word.letters)
    for mask in range(1 << ell):
        yield wt.walk(sigma, [j + 1 for j in range(ell) if mask >> j & 1])


def _passes(datum: RootDatum, walk: AlcoveWalk, qbg: QuantumBruhatGraph, reverse: bool) -> bool:
    for k, j in enumerate(walk.J):
        gamma = tuple(-c for c in walk.betas[j - 1].finite)
        if not datum.Y.is_positive_root(gamma):
            return False
        src = walk.z[k + 1].direction if reverse else walk.z[k].direction
        if qbg.has_edge(src, gamma) is None:
            return False
    return True


def filter_qb(datum: RootDatum, walks: Iterable[AlcoveWalk]) -> list[AlcoveWalk]:
    qbg = build_qbg(datum)
    return [p for p in walks if _passes(datum, p, qbg, False)]


def filter_reverse_qb(datum: RootDatum, walks: Iterable[AlcoveWalk]) -> list[AlcoveWalk]:
    qbg = build_qbg(datum)
    return [p for p in walks if _passes(datum, p, qbg, True)]
