"""Extended affine Weyl groups acting on affine roots.

``AffineWeylGroup(datum, "Y")`` is W(Y~) = X x| W acting on the Y-side affine
roots, ``AffineWeylGroup(datum, "X")`` is W(X~) = Y x| W acting on the X-side
ones.  An element ``(x, sigma)`` is the product ``t_x sigma`` and acts by

    (x, sigma) . (y + m delta) = sigma(y) + (m - (x, sigma(y))) delta.

The affine simple reflection s_0 is not written down by hand: it is the
element ``(x0, s_beta)`` that reflects the wall of alpha_0 = beta + d delta
under the action above, and tests assert s_0(alpha_0) = -alpha_0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

import sympy

from .rootdata import AffineRoot, RootDatum, Weight

__all__ = [
    "AffineWeylElement",
    "ReducedWord",
    "AffineWeylGroup",
    "affine_weyl_group",
]


class AffineWeylElement(NamedTuple):
    """t_weight * direction, tagged with the side of the group ('X' or 'Y')."""

    weight: Weight
    direction: int
    tag: str


@dataclass(frozen=True)
class ReducedWord:
    """w = pi s_{i1} ... s_{il} with pi of length zero."""

    pi: AffineWeylElement
    letters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)


def _multiples_in(lo: int, hi: int, step: int) -> int:
    """Number of multiples of step in the half-open range [lo, hi)."""
    if hi <= lo:
        return 0
    return (hi - 1) // step - (-(-lo // step)) + 1


class AffineWeylGroup:
    """X x| W on Y-roots (side 'Y') or Y x| W on X-roots (side 'X')."""

    def __init__(self, datum: RootDatum, side: str):
        if side not in ("X", "Y"):
            raise ValueError(f"side must be 'X' or 'Y', got {side!r}")
        self.datum = datum
        self.side = side
        self.W = datum.W
        self.rank = n = datum.rank
        if side == "Y":
            self.aff = datum.Yaff
            self._act_trans = datum.W.act_x
            self._act_root = datum.W.act_y
            self._reflection = datum.W.reflection_y
            pmat = datum.P
        else:
            self.aff = datum.Xaff
            self._act_trans = datum.W.act_y
            self._act_root = datum.W.act_x
            self._reflection = datum.W.reflection_x
            pmat = tuple(tuple(datum.P[j][i] for j in range(n)) for i in range(n))
        # (x, y) = sum_j x_j (pmat y)_j with x a translation and y on the root side
        self._pair_rows = pmat
        self._pt_inverse = sympy.Matrix(pmat).T.inv()
        self.base = self.aff.base
        self._root_pair = {a: self._pair_vector(a) for a in self.base.roots}
        self.identity = AffineWeylElement((0,) * n, 0, side)
        self.simple_reflections = tuple(self._simple(i) for i in range(n + 1))
        for i in range(n + 1):
            a = self.aff.simple_root(i)
            if self.act(self.simple_reflections[i], a) != -a:
                raise AssertionError(f"s_{i} does not negate alpha_{i}")
        self._bruhat_memo: dict = {}

    # pairing ---------------------------------------------------------------
    def _pair_vector(self, y: Weight) -> tuple[int, ...]:
        vec = tuple(sum(self._pair_rows[j][k] * y[k] for k in range(self.rank)) for j in range(self.rank))
        if any(Fraction(c).denominator != 1 for c in vec):
            raise AssertionError(f"non-integral pairing with root {y}")
        return tuple(int(c) for c in vec)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """(translation x, root-side vector y)."""
        vec = self._root_pair.get(tuple(y))
        if vec is not None:
            return sum(a * b for a, b in zip(x, vec))
        return sum((x[j] * self._pair_rows[j][k] * y[k] for j in range(self.rank) for k in range(self.rank)),
                   Fraction(0))

    def translation_for(self, coroot: Sequence[int], degree: int) -> Weight:
        """The translation x with (x, y) = -degree * <coroot, y> for every y."""
        rhs = sympy.Matrix([-degree * c for c in coroot])
        sol = self._pt_inverse * rhs
        if any(not c.is_integer for c in sol):
            raise AssertionError(f"reflection translation {list(sol)} is not in the lattice")
        return tuple(int(c) for c in sol)

    # group law -------------------------------------------------------------
    def element(self, weight: Sequence[int], direction: int = 0) -> AffineWeylElement:
        return AffineWeylElement(tuple(weight), direction, self.side)

    def translation(self, weight: Sequence[int]) -> AffineWeylElement:
        return AffineWeylElement(tuple(weight), 0, self.side)

    def finite(self, sigma: int) -> AffineWeylElement:
        return AffineWeylElement((0,) * self.rank, sigma, self.side)

    def _check(self, w: AffineWeylElement) -> None:
        if w.tag != self.side:
            raise ValueError(f"element of W({w.tag}~) used in W({self.side}~)")

    def mul(self, a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
        self._check(a)
        self._check(b)
        moved = self._act_trans(a.direction, b.weight)
        return AffineWeylElement(tuple(x + y for x, y in zip(a.weight, moved)),
                                 self.W.mul(a.direction, b.direction), self.side)

    def inverse(self, a: AffineWeylElement) -> AffineWeylElement:
        self._check(a)
        inv = self.W.inverse[a.direction]
        return AffineWeylElement(tuple(-c for c in self._act_trans(inv, a.weight)), inv, self.side)

    def product(self, *elements: AffineWeylElement) -> AffineWeylElement:
        out = self.identity
        for e in elements:
            out = self.mul(out, e)
        return out

    def _simple(self, i: int) -> AffineWeylElement:
        if i > 0:
            return self.finite(self.W.simple[i - 1])
        beta, d = self.aff.alpha0
        x0 = self.translation_for(self.base.coroot(beta), d)
        return AffineWeylElement(x0, self._reflection(beta), self.side)

    def reflection(self, root: AffineRoot) -> AffineWeylElement:
        """The reflection in an affine root."""
        beta, m = root
        return AffineWeylElement(self.translation_for(self.base.coroot(beta), m), self._reflection(beta), self.side)

    def act(self, w: AffineWeylElement, root: AffineRoot) -> AffineRoot:
        self._check(w)
        y, m = root
        img = self._act_root(w.direction, y)
        c = self.pair(w.weight, img)
        new = m - c
        if isinstance(new, Fraction) and new.denominator == 1:
            new = int(new)
        return AffineRoot(img, new)

    def is_positive(self, root: AffineRoot) -> bool:
        return self.aff.is_positive(root)

    # length, descents, reduced words ---------------------------------------
    def length(self, w: AffineWeylElement) -> int:
        self._check(w)
        total = 0
        for a in self.base.roots:
            img = self._act_root(w.direction, a)
            c = self.pair(w.weight, img)
            step = self.aff.step(a)
            lo = 0 if self.base.is_positive_root(a) else 1
            total += _multiples_in(lo, c, step)
            if c >= lo and c % step == 0 and not self.base.is_positive_root(img):
                total += 1
        return total

    def inversion_set(self, w: AffineWeylElement) -> frozenset[AffineRoot]:
        """{beta > 0 : w(beta) < 0}."""
        self._check(w)
        out = set()
        for a in self.base.roots:
            img = self._act_root(w.direction, a)
            c = self.pair(w.weight, img)
            step = self.aff.step(a)
            lo = 0 if self.base.is_positive_root(a) else 1
            top = c if self.base.is_positive_root(img) else c + 1
            start = -(-lo // step) * step
            for m in range(start, top, step):
                out.add(AffineRoot(a, m))
        return frozenset(out)

    def descent(self, w: AffineWeylElement, i: int) -> bool:
        return not self.is_positive(self.act(w, self.aff.simple_root(i)))

    def reduced_word(self, w: AffineWeylElement) -> ReducedWord:
        """Greedy right-descent peeling, smallest index first."""
        self._check(w)
        letters = []
        cur = w
        while True:
            for i in range(self.rank + 1):
                if self.descent(cur, i):
                    letters.append(i)
                    cur = self.mul(cur, self.simple_reflections[i])
                    break
            else:
                break
        if self.length(cur) != 0:
            raise AssertionError(f"peeling residue {cur} has nonzero length")
        return ReducedWord(cur, tuple(reversed(letters)))

    def evaluate(self, word: ReducedWord) -> AffineWeylElement:
        out = word.pi
        for i in word.letters:
            out = self.mul(out, self.simple_reflections[i])
        return out

    def word_from_letters(self, pi: AffineWeylElement, letters: Sequence[int]) -> ReducedWord:
        rw = ReducedWord(pi, tuple(letters))
        if self.length(self.evaluate(rw)) != len(rw.letters) or self.length(pi) != 0:
            raise ValueError(f"{letters} is not a reduced expression")
        return rw

    def beta_sequence(self, word: ReducedWord) -> tuple[AffineRoot, ...]:
        """beta_j = s_{il} ... s_{i(j+1)} (alpha_{ij})."""
        letters = word.letters
        out: list[AffineRoot] = [None] * len(letters)  # type: ignore[list-item]
        right = self.identity  # s_{il} ... s_{i(j+1)}
        for j in range(len(letters) - 1, -1, -1):
            out[j] = self.act(right, self.aff.simple_root(letters[j]))
            right = self.mul(right, self.simple_reflections[letters[j]])
        if len(set(out)) != len(out) or not all(self.is_positive(b) for b in out):
            raise ValueError("beta sequence has a repeated or negative root; the word is not reduced")
        return tuple(out)

    def all_reduced_words(self, w: AffineWeylElement, limit: int | None = None) -> list[ReducedWord]:
        """Every reduced expression of w (right descents in all orders)."""
        out: list[ReducedWord] = []

        def rec(cur, suffix):
            if limit is not None and len(out) >= limit:
                return
            found = False
            for i in range(self.rank + 1):
                if self.descent(cur, i):
                    found = True
                    rec(self.mul(cur, self.simple_reflections[i]), (i,) + suffix)
            if not found:
                out.append(ReducedWord(cur, suffix))

        rec(w, ())
        return out

    # minimal coset representatives ------------------------------------------
    def antidominant(self, weight: Sequence[int]) -> Weight:
        for s in range(self.W.order):
            img = self._act_trans(s, weight)
            if all(c <= 0 for c in img):
                return img
        raise AssertionError(f"no antidominant element in the orbit of {weight}")

    def sigma_lambda(self, weight: Sequence[int]) -> int:
        """Minimal sigma with sigma(weight) antidominant."""
        target = self.antidominant(weight)
        cands = [s for s in range(self.W.order) if self._act_trans(s, weight) == target]
        return min(cands, key=lambda s: (self.W.length[s], self.W.words[s]))

    def minimal_rep(self, weight: Sequence[int]) -> tuple[AffineWeylElement, int]:
        """(m_lambda, sigma_lambda): the length-minimal element of t_lambda W and
        the minimal sigma with sigma(lambda) antidominant.

        Under the action used here the minimal element is t_lambda sigma_lambda^{-1}.
        """
        s = self.sigma_lambda(weight)
        m = self.element(weight, self.W.inverse[s])
        return m, s

    # Bruhat order -----------------------------------------------------------
    def _below(self, w: AffineWeylElement) -> frozenset:
        hit = self._bruhat_memo.get(w)
        if hit is None:
            rw = self.reduced_word(w)
            below = {rw.pi}
            for i in rw.letters:
                s = self.simple_reflections[i]
                below |= {self.mul(x, s) for x in below}
            hit = frozenset(below)
            self._bruhat_memo[w] = hit
        return hit

    def bruhat_le(self, a: AffineWeylElement, b: AffineWeylElement) -> bool:
        """Subword criterion; elements in different pi-components are incomparable."""
        if self.reduced_word(a).pi != self.reduced_word(b).pi:
            return False
        return a in self._below(b)

    def elements_up_to(self, length: int, translations: int = 3) -> Iterator[AffineWeylElement]:
        """Elements with small translations and length <= ``length``."""
        import itertools

        rng = range(-translations, translations + 1)
        for x in itertools.product(rng, repeat=self.rank):
            for s in range(self.W.order):
                w = self.element(x, s)
                if self.length(w) <= length:
                    yield w

    def format_word(self, word: ReducedWord) -> str:
        wt = ",".join(str(c) for c in word.pi.weight)
        return f"pi:{wt}/{self.W.name(word.pi.direction)};letters:[{','.join(map(str, word.letters))}]"


@lru_cache(maxsize=None)
def affine_weyl_group(datum: RootDatum, side: str) -> AffineWeylGroup:
    """Cached group constructor."""
    return AffineWeylGroup(datum, side)
