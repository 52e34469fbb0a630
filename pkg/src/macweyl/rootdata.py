"""Finite root systems, their Weyl groups, and the (u)/(d) affine root data.

Conventions
-----------
* Cartan matrix ``A[i][j] = <alpha_i^vee, alpha_j>``.  A weight is an integer
  tuple of fundamental-weight coordinates ``lam[i] = <alpha_i^vee, lam>``, so
  the simple root ``alpha_j`` is column ``j`` of ``A``.
* Indices in words and public APIs are 1-based (``s1``, ``s2``, ...); the
  affine node is 0.
* The pairing between X and Y is ``(x, y) = x^T P y`` in fundamental
  coordinates on both sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

import sympy

__all__ = [
    "CARTAN_MATRICES",
    "FiniteRootSystem",
    "FiniteWeylGroup",
    "AffineRoot",
    "AffineRootSystem",
    "RootDatum",
    "build",
    "hat_sigma",
    "hat_sigma_generator",
]

Weight = tuple

CARTAN_MATRICES: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
}

# half squared lengths of the simple roots, short roots normalized to 1
SYMMETRIZERS: dict[str, tuple[int, ...]] = {
    "A1": (1,),
    "A2": (1, 1),
    "A3": (1, 1, 1),
    "C2": (1, 2),
    "G2": (1, 3),
}


def _mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)) for i in range(n))


def _mat_vec(a, x):
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in a)


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _inverse(a) -> tuple[tuple[Fraction, ...], ...]:
    inv = sympy.Matrix(a).inv()
    return tuple(
        tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in inv.row(i))
        for i in range(inv.rows)
    )


class FiniteRootSystem:
    """A reduced crystallographic root system given by its Cartan matrix."""

    def __init__(self, name: str, cartan: Sequence[Sequence[int]], symmetrizer: Sequence[int]):
        self.name = name
        self.cartan = tuple(tuple(r) for r in cartan)
        self.rank = n = len(self.cartan)
        self.symmetrizer = tuple(symmetrizer)
        self.cartan_inverse = _inverse(self.cartan)
        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(self.cartan[i][j] for i in range(n)) for j in range(n)
        )
        self.fundamental_weights: tuple[Weight, ...] = tuple(
            tuple(int(i == j) for i in range(n)) for j in range(n)
        )
        self._root_coords: dict = {}
        self.simple_reflections = tuple(self.reflection_matrix(a) for a in self.simple_roots)
        # roots as the W-orbit of the simple roots
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for r in frontier:
                for s in self.simple_reflections:
                    img = _mat_vec(s, r)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        self._root_coords = {r: self.root_coordinates(r) for r in seen}
        self.positive_roots = tuple(sorted(
            (r for r in seen if all(c >= 0 for c in self._root_coords[r])),
            key=lambda r: (sum(self._root_coords[r]), tuple(-c for c in self._root_coords[r])),
        ))
        self.negative_roots = tuple(tuple(-c for c in r) for r in self.positive_roots)
        self.roots = self.positive_roots + self.negative_roots
        self.short_length = min(self.symmetrizer)
        self.long_length = max(self.symmetrizer)
        self.theta = self._dominant(self.long_length)
        self.vartheta = self._dominant(self.short_length)
        self.rho: Weight = (1,) * n

    # basic geometry --------------------------------------------------------
    def root_coordinates(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the basis of simple roots."""
        return _mat_vec(self.cartan_inverse, tuple(weight))

    def half_length(self, root: Weight) -> Fraction:
        """(beta, beta)/2 with short roots normalized to 1."""
        r = self._root_coords.get(root) or self.root_coordinates(root)
        n = self.rank
        return Fraction(sum(r[k] * r[l] * self.symmetrizer[k] * self.cartan[k][l]
                            for k in range(n) for l in range(n)), 2)

    def coroot(self, root: Weight) -> tuple[int, ...]:
        """Coordinates of beta^vee in the basis of simple coroots."""
        r = self._root_coords.get(root) or self.root_coordinates(root)
        d = self.half_length(root)
        out = tuple(r[k] * self.symmetrizer[k] / d for k in range(self.rank))
        if any(c.denominator != 1 for c in out):
            raise ValueError(f"{root} is not a root")
        return tuple(int(c) for c in out)

    def pair_coroot(self, root: Weight, weight: Sequence[int]) -> int:
        """<beta^vee, weight>."""
        return sum(c * w for c, w in zip(self.coroot(root), weight))

    def reflection_matrix(self, root: Weight):
        cv = self.coroot(root)
        n = self.rank
        return tuple(tuple(int(i == j) - root[i] * cv[j] for j in range(n)) for i in range(n))

    def reflect(self, root: Weight, weight: Sequence[int]) -> Weight:
        k = self.pair_coroot(root, weight)
        return tuple(w - k * r for w, r in zip(weight, root))

    def is_root(self, weight: Sequence[int]) -> bool:
        return tuple(weight) in self._root_coords

    def is_positive_root(self, root: Weight) -> bool:
        return all(c >= 0 for c in self._root_coords[root])

    def is_long(self, root: Weight) -> bool:
        return self.half_length(root) == self.long_length and self.long_length != self.short_length

    def height(self, weight: Sequence[int]) -> Fraction:
        """Sum of simple-root coordinates, i.e. <rho^vee, weight>."""
        return sum(self.root_coordinates(weight), Fraction(0))

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(c >= 0 for c in weight)

    def is_antidominant(self, weight: Sequence[int]) -> bool:
        return all(c <= 0 for c in weight)

    def _dominant(self, length) -> Weight:
        cands = [r for r in self.positive_roots if self.half_length(r) == length and self.is_dominant(r)]
        if len(cands) != 1:
            raise AssertionError(f"expected one dominant root of length {length}, got {cands}")
        return cands[0]

    def __repr__(self) -> str:
        return f"FiniteRootSystem({self.name})"


class FiniteWeylGroup:
    """The Weyl group as an indexed set of matrices on X and on Y.

    Element 0 is the identity.  ``words[w]`` is a reduced word (1-based
    letters); the element is the product ``s_{i1} ... s_{ik}`` acting on
    column vectors.
    """

    def __init__(self, xsys: FiniteRootSystem, ysys: FiniteRootSystem):
        n = xsys.rank
        self.rank = n
        self.xsys, self.ysys = xsys, ysys
        ident = _identity(n)
        mats_x = [ident]
        words: list[tuple[int, ...]] = [()]
        index = {ident: 0}
        k = 0
        while k < len(mats_x):
            for i in range(n):
                m = _mat_mul(mats_x[k], xsys.simple_reflections[i])
                if m not in index:
                    index[m] = len(mats_x)
                    mats_x.append(m)
                    words.append(words[k] + (i + 1,))
            k += 1
        self.order = len(mats_x)
        self.mats_x = tuple(mats_x)
        self.words = tuple(words)
        self.length = tuple(len(w) for w in words)
        self._index_x = index
        mats_y = []
        for w in words:
            m = ident
            for i in w:
                m = _mat_mul(m, ysys.simple_reflections[i - 1])
            mats_y.append(m)
        self.mats_y = tuple(mats_y)
        self._index_y = {m: i for i, m in enumerate(mats_y)}
        if len(self._index_y) != self.order:
            raise AssertionError("Y-representation of W is not faithful")
        self.mul_table = tuple(
            tuple(index[_mat_mul(mats_x[a], mats_x[b])] for b in range(self.order)) for a in range(self.order)
        )
        self.inverse = tuple(row.index(0) for row in self.mul_table)
        self.longest = max(range(self.order), key=lambda w: self.length[w])
        self.simple = tuple(index[xsys.simple_reflections[i]] for i in range(n))
        self._bruhat = None

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def act_x(self, w: int, weight: Sequence[int]) -> Weight:
        return _mat_vec(self.mats_x[w], tuple(weight))

    def act_y(self, w: int, weight: Sequence[int]) -> Weight:
        return _mat_vec(self.mats_y[w], tuple(weight))

    def reflection_x(self, root: Weight) -> int:
        """The element s_beta for a root beta of X."""
        return self._index_x[self.xsys.reflection_matrix(root)]

    def reflection_y(self, root: Weight) -> int:
        """The element s_beta for a root beta of Y."""
        return self._index_y[self.ysys.reflection_matrix(root)]

    def from_word(self, letters: Sequence[int]) -> int:
        w = 0
        for i in letters:
            if not 1 <= i <= self.rank:
                raise ValueError(f"letter {i} out of range for rank {self.rank}")
            w = self.mul(w, self.simple[i - 1])
        return w

    def parse(self, text: str) -> int:
        """Parse 'id', 'e', 'w0' or a word such as 's1s2' / '1,2' / '12'."""
        t = text.strip().replace(" ", "")
        if t in ("", "id", "e", "1"):
            return 0
        if t == "w0":
            return self.longest
        if t.startswith("s"):
            parts = [p for p in t.split("s") if p]
        elif "," in t:
            parts = [p for p in t.split(",") if p]
        else:
            parts = list(t)
        try:
            letters = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"cannot parse Weyl group element {text!r}") from None
        return self.from_word(letters)

    def name(self, w: int) -> str:
        return "".join(f"s{i}" for i in self.words[w]) or "id"

    def bruhat_le(self, a: int, b: int) -> bool:
        """Bruhat order via the subword property."""
        if self._bruhat is None:
            table = []
            for w in range(self.order):
                below = {0}
                for i in self.words[w]:
                    s = self.simple[i - 1]
                    below |= {self.mul(x, s) for x in below}
                table.append(frozenset(below))
            self._bruhat = tuple(table)
        return a in self._bruhat[b]

    def stabilizer_min(self, weight: Sequence[int], target: Sequence[int]) -> int:
        """Minimal-length element sending ``weight`` to ``target`` on X."""
        cands = [w for w in range(self.order) if self.act_x(w, weight) == tuple(target)]
        if not cands:
            raise ValueError(f"{target} is not in the orbit of {weight}")
        best = min(cands, key=lambda w: (self.length[w], self.words[w]))
        if sum(1 for w in cands if self.length[w] == self.length[best]) != 1:
            raise AssertionError("minimal element is not unique")
        return best


@dataclass(frozen=True)
class AffineRoot:
    """Real affine root ``finite + degree*delta``."""

    finite: Weight
    degree: int

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-c for c in self.finite), -self.degree)

    def __iter__(self):
        return iter((self.finite, self.degree))


@dataclass(frozen=True)
class AffineRootSystem:
    """Real affine roots over ``base``: short roots in every degree, long ones in r*Z."""

    base: FiniteRootSystem
    kind: str
    r: int
    alpha0: AffineRoot
    tag: str

    def contains(self, root: AffineRoot) -> bool:
        f, m = root
        if not self.base.is_root(f):
            return False
        return not (self.base.is_long(f) and m % self.r)

    def is_positive(self, root: AffineRoot) -> bool:
        f, m = root
        return m > 0 or (m == 0 and self.base.is_positive_root(f))

    def simple_root(self, i: int) -> AffineRoot:
        if i == 0:
            return self.alpha0
        return AffineRoot(self.base.simple_roots[i - 1], 0)

    def step(self, finite_root: Weight) -> int:
        """Degree stride for a given real part."""
        return self.r if self.base.is_long(finite_root) else 1


@dataclass
class RootDatum:
    """Everything attached to a (type, affinization) pair."""

    cartan_type: str
    kind: str
    X: FiniteRootSystem
    Y: FiniteRootSystem
    W: FiniteWeylGroup
    P: tuple
    e: int
    Xaff: AffineRootSystem
    Yaff: AffineRootSystem
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.X.rank

    @property
    def simply_laced(self) -> bool:
        return self.X.short_length == self.X.long_length

    def pair(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """(x, y) for x in X and y in Y, both in fundamental coordinates."""
        n = self.rank
        return sum((x[i] * self.P[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j]), Fraction(0))

    def rho_vee_y(self, y: Sequence[int]) -> Fraction:
        """<rho^{vee Y}, y> for y in Y (half the sum of positive coroots of the Y-system)."""
        return self.Y.height(y)

    def y_root_to_x(self, y: Weight) -> Weight:
        """Identify Y-roots with X-roots in simply-laced types."""
        if not self.simply_laced:
            raise ValueError("roots of X and Y are identified only in simply-laced types")
        return tuple(y)

    def __hash__(self) -> int:
        return hash((self.cartan_type, self.kind))

    def __eq__(self, other) -> bool:
        return isinstance(other, RootDatum) and (self.cartan_type, self.kind) == (other.cartan_type, other.kind)


@lru_cache(maxsize=None)
def build(cartan_type: str, kind: str = "u") -> RootDatum:
    """Root datum for ``cartan_type`` in {A1, A2, A3, C2, G2} and ``kind`` in {u, d}."""
    if cartan_type not in CARTAN_MATRICES:
        raise ValueError(f"unsupported Cartan type {cartan_type!r}; choose from {sorted(CARTAN_MATRICES)}")
    if kind not in ("u", "d"):
        raise ValueError(f"affinization must be 'u' or 'd', got {kind!r}")
    a = CARTAN_MATRICES[cartan_type]
    d = SYMMETRIZERS[cartan_type]
    n = len(a)
    xsys = FiniteRootSystem(cartan_type, a, d)
    if kind == "u":
        at = tuple(tuple(a[j][i] for j in range(n)) for i in range(n))
        dmax = max(d)
        ysys = FiniteRootSystem(cartan_type + "^vee", at, tuple(dmax // x for x in d))
        b = at  # (alpha_k, alpha_l^vee) = <alpha_l^vee, alpha_k>
        a_y = at
        r = 1
    else:
        ysys = xsys
        b = tuple(tuple(d[k] * a[k][l] for l in range(n)) for k in range(n))
        a_y = a
        r = max(d) // min(d)
    ainv_t = tuple(tuple(xsys.cartan_inverse[j][i] for j in range(n)) for i in range(n))
    ayinv = _inverse(a_y)
    pmat = _mat_mul(_mat_mul(ainv_t, b), ayinv)
    e = lcm(*(Fraction(x).denominator for row in pmat for x in row))
    w = FiniteWeylGroup(xsys, ysys)
    if kind == "u":
        xaff = AffineRootSystem(xsys, kind, 1, AffineRoot(tuple(-c for c in xsys.theta), 1), "X")
        yaff = AffineRootSystem(ysys, kind, 1, AffineRoot(tuple(-c for c in ysys.theta), 1), "Y")
    else:
        a0 = AffineRoot(tuple(-c for c in xsys.vartheta), 1)
        xaff = AffineRootSystem(xsys, kind, r, a0, "X")
        yaff = AffineRootSystem(ysys, kind, r, a0, "Y")
    return RootDatum(cartan_type, kind, xsys, ysys, w, pmat, e, xaff, yaff)


def hat_sigma(datum: RootDatum, sigma: int, root: AffineRoot) -> AffineRoot:
    """The lift of sigma to the roots alpha (degree 0) and -alpha+delta, alpha positive."""
    f, m = root
    xs = datum.X
    if (m, xs.is_positive_root(f) if xs.is_root(f) else None) not in ((0, True), (1, False)):
        raise ValueError(f"hat_sigma is defined on alpha and -alpha+delta with alpha positive, got {root}")
    img = datum.W.act_x(sigma, f)
    if m == 0:
        return AffineRoot(img, 0 if xs.is_positive_root(img) else 1)
    return AffineRoot(img, 1 if xs.is_positive_root(tuple(-c for c in img)) else 0)


def hat_sigma_generator(datum: RootDatum, sigma: int, gen: tuple[str, Weight]) -> tuple[str, Weight]:
    """Generators ('e', alpha) = e_alpha (x) 1 and ('f', alpha) = f_{-alpha} (x) t, alpha positive.

    Returns the generator of the same shape spanning the image root space.
    """
    kind, alpha = gen
    xs = datum.X
    alpha = tuple(alpha)
    if not (xs.is_root(alpha) and xs.is_positive_root(alpha)):
        raise ValueError(f"{alpha} is not a positive root")
    img = datum.W.act_x(sigma, alpha)
    neg = tuple(-c for c in img)
    positive = xs.is_positive_root(img)
    if kind == "e":
        return ("e", img) if positive else ("f", neg)
    if kind == "f":
        return ("f", img) if positive else ("e", neg)
    raise ValueError(f"unknown generator kind {kind!r}")
