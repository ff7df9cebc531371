"""Permutations, the symmetric control group, and its action on k-subsets.

Points are 1-based in all public I/O. Composition is left-to-right
throughout the package: ``p * q`` means "apply p, then q", so
``(p * q)(x) == q(p(x))``. Permutation matrices follow the same order
(see :mod:`symgen.matrices`).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a - 1] = b
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def of_subset(self, subset) -> tuple:
        """Image of a set of points, returned sorted."""
        return tuple(sorted(self.images[x - 1] for x in subset))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        p, q = self.images, other.images
        return Permutation(q[p[i] - 1] for i in range(self.degree))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def extend(self, n: int) -> "Permutation":
        """Same permutation viewed in S_n, fixing the new points."""
        if n < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree + 1, n + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        s = 1
        for cyc in self.cycles():
            if len(cyc) % 2 == 0:
                s = -s
        return s

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)

    @classmethod
    def from_cycle_string(cls, n: int, text: str) -> "Permutation":
        text = text.strip().replace(" ", "")
        if text in ("", "()"):
            return cls.identity(n)
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"bad cycle string: {text!r}")
        cycles = []
        for part in text[1:-1].split(")("):
            cycles.append(tuple(int(x) for x in part.split(",")))
        return cls.from_cycles(n, *cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, n={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply p, then q."""
    return p * q


@lru_cache(maxsize=None)
def k_subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {1..n} in lexicographic order of sorted tuples.

    Index 0 is {1..k}; this ordering is the package-wide labelling of
    symmetric generators, so it must stay stable.
    """
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return tuple(itertools.combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def subset_index(n: int, k: int) -> dict:
    return {s: i for i, s in enumerate(k_subsets(n, k))}


def validate_subset(n: int, subset, k: int | None = None) -> tuple[int, ...]:
    s = tuple(subset)
    if list(s) != sorted(set(s)) or not s or s[0] < 1 or s[-1] > n:
        raise ValueError(f"not a strictly increasing subset of 1..{n}: {subset!r}")
    if k is not None and len(s) != k:
        raise ValueError(f"expected a {k}-subset, got {subset!r}")
    return s


def subset_action(p: Permutation, k: int) -> Permutation:
    """The permutation p induces on k-subsets, as a Permutation of degree C(n,k)."""
    n = p.degree
    subs = k_subsets(n, k)
    idx = subset_index(n, k)
    return Permutation(idx[p.of_subset(s)] + 1 for s in subs)


class PermGroup:
    """A permutation group of fixed degree, given by generators.

    The element list is computed on demand by closure (or directly for
    the full symmetric group) and cached; everything downstream is brute
    force, which is fine since the degree never exceeds 8 here.
    """

    def __init__(self, degree: int, generators, _elements=None, _full=False):
        self.degree = degree
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.generators = gens
        self._elements = _elements
        self._full = _full

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n == 1:
            return cls(1, (), _elements=frozenset([Permutation.identity(1)]), _full=True)
        gens = [Permutation.transposition(n, 1, 2)]
        if n > 2:
            gens.append(Permutation.from_cycles(n, tuple(range(1, n + 1))))
        return cls(n, gens, _full=True)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, (), _elements=frozenset([Permutation.identity(n)]))

    @classmethod
    def from_elements(cls, degree: int, elements) -> "PermGroup":
        elems = frozenset(elements)
        gens = tuple(sorted((e for e in elems if not e.is_identity()),
                            key=lambda e: e.images))
        return cls(degree, gens, _elements=elems)

    def _close(self) -> frozenset:
        if self._full:
            return frozenset(Permutation(p) for p in
                             itertools.permutations(range(1, self.degree + 1)))
        ident = Permutation.identity(self.degree)
        elems = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = x * g
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return frozenset(elems)

    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = self._close()
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements()

    def same_group(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.elements() == other.elements()

    def sorted_elements(self) -> list[Permutation]:
        return sorted(self.elements(), key=lambda e: e.images)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"


def group_order(group: PermGroup) -> int:
    """Exact order by full element enumeration."""
    return group.order()


def pointwise_stabilizer(group: PermGroup, points) -> PermGroup:
    """Subgroup of ``group`` fixing every listed point."""
    pts = set(points)
    for x in pts:
        if not 1 <= x <= group.degree:
            raise ValueError(f"point {x} outside 1..{group.degree}")
    elems = [g for g in group.elements() if all(g(x) == x for x in pts)]
    return PermGroup.from_elements(group.degree, elems)


def setwise_stabilizer(group: PermGroup, subset) -> PermGroup:
    """Subgroup of ``group`` preserving the subset as a set."""
    s = validate_subset(group.degree, sorted(subset))
    elems = [g for g in group.elements() if g.of_subset(s) == s]
    return PermGroup.from_elements(group.degree, elems)


def centralizer(group: PermGroup, sub: PermGroup) -> PermGroup:
    """Elements of ``group`` commuting with every generator of ``sub``.

    Brute force over the elements of ``group``; requires sub <= group.
    """
    gens = [g for g in sub.generators if not g.is_identity()]
    for g in gens:
        if g not in group:
            raise ValueError("subgroup is not contained in the group")
    elems = [x for x in group.elements() if all(x * g == g * x for g in gens)]
    return PermGroup.from_elements(group.degree, elems)
