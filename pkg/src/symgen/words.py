"""Words of the progenitor in normal form, and the symbolic reductions.

A word is stored as a control element followed by a string of symmetric
generator letters: pi . t_{S1} ... t_{Sm}. The semidirect-product rule
t_S pi = pi t_{pi(S)} lets any interleaved product be pushed into this
shape, and t^2 = 1 is applied eagerly, so adjacent letters never repeat.

Every rewrite in this module is an equality in the target group, so the
reductions preserve the group element exactly; the advertised contracts
(single letter for the A family, pairwise disjoint letters and the
canonical double-coset representative for the D family) follow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .families import FamilySpec
from .perm import Permutation, validate_subset


def _free_reduce(letters):
    out = []
    for s in letters:
        if out and out[-1] == s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Normal-form element pi . t_{S1} ... t_{Sm} of a progenitor."""

    control: Permutation
    letters: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = self.control.degree
        letters = tuple(validate_subset(n, s) for s in self.letters)
        object.__setattr__(self, "letters", _free_reduce(letters))

    @classmethod
    def identity(cls, n: int) -> "Word":
        return cls(Permutation.identity(n))

    @classmethod
    def from_letters(cls, n: int, letters) -> "Word":
        return cls(Permutation.identity(n), tuple(tuple(s) for s in letters))

    @property
    def degree(self) -> int:
        return self.control.degree

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return self.control.is_identity() and not self.letters

    def inverse(self) -> "Word":
        # (pi w)^-1 = w^-1 pi^-1; push pi^-1 left through the letters
        inv = self.control.inverse()
        return Word(inv, tuple(inv.of_subset(s) for s in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def display(self) -> str:
        parts = " ".join("t{" + ",".join(str(x) for x in s) + "}" for s in self.letters)
        if self.control.is_identity():
            return parts if parts else "*"
        head = self.control.cycle_string()
        return f"{head} * {parts}" if parts else head

    def __str__(self) -> str:
        return self.display()


def multiply(a: Word, b: Word, spec: FamilySpec | None = None) -> Word:
    """Product in the progenitor, renormalised.

    b's control element is pushed left through a's letters, relabelling
    each index set, and the junction is freely reduced.
    """
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    moved = tuple(b.control.of_subset(s) for s in a.letters)
    return Word(a.control * b.control, moved + b.letters)


def relator_word(spec: FamilySpec) -> Word:
    """The single relator (t_{1..k}(k,k+1))^3 in normal form."""
    control, letters = spec.relator_parts()
    return Word(control, letters)


def random_word(rng: random.Random, spec: FamilySpec, max_len: int = 10) -> Word:
    images = list(range(1, spec.n + 1))
    rng.shuffle(images)
    subsets = spec.generator_subsets()
    letters = tuple(rng.choice(subsets) for _ in range(rng.randint(0, max_len)))
    return Word(Permutation(images), letters)


def _adjacent_relator(control, letters, p):
    """Rewrite t_S t_T at positions p, p+1 with |S & T| = k-1.

    t_S t_T = (x,y) t_S with x = S\\T and y = T\\S; the new control
    element is pushed left through the prefix, relabelling it.
    """
    s, t = letters[p], letters[p + 1]
    (x,) = set(s) - set(t)
    (y,) = set(t) - set(s)
    pi = Permutation.transposition(control.degree, x, y)
    prefix = [pi.of_subset(u) for u in letters[:p]]
    return control * pi, prefix + [s] + list(letters[p + 2:])


def an_reduce(w: Word, spec: FamilySpec) -> Word:
    """Collapse an A-family word to at most one letter via t_i t_j = (ij) t_i."""
    if spec.family != "A":
        raise ValueError("an_reduce applies to the A family only")
    control, letters = w.control, list(w.letters)
    while len(letters) >= 2:
        control, letters = _adjacent_relator(control, letters, 0)
        letters = list(_free_reduce(letters))
    return Word(control, tuple(letters))


def _closest_sharing_pair(letters):
    """Positions (p, q), q > p, of a closest pair of letters sharing an index."""
    best = None
    last_seen = {}
    for q, s in enumerate(letters):
        for x in s:
            if x in last_seen:
                p = last_seen[x]
                if best is None or q - p < best[1] - best[0]:
                    best = (p, q)
            last_seen[x] = q
    return best


def shorten_common_index(w: Word, spec: FamilySpec) -> Word:
    """Rewrite a D-family word so that no two letters share an index.

    Repeated indices are migrated together by inserting t_X^2 next to the
    right occurrence and absorbing the transpositions this creates into
    the control element; once adjacent, the relator shortens the word.
    The returned word equals w as a group element.
    """
    if spec.family != "D":
        raise ValueError("shorten_common_index applies to the D family only")
    control, letters = w.control, list(w.letters)
    while True:
        letters = list(_free_reduce(letters))
        pair = _closest_sharing_pair(letters)
        if pair is None:
            return Word(control, tuple(letters))
        p, q = pair
        if q == p + 1:
            control, letters = _adjacent_relator(control, letters, p)
            continue
        # Separated occurrences: insert t_X^2 with X = {a, i} just before
        # position q (a taken from the letter at q-1, i the shared index),
        # then rewrite both new adjacencies. This moves the repetition one
        # step closer without changing the group element.
        i = next(iter(set(letters[p]) & set(letters[q])))
        a, b = letters[q - 1]
        if a == i or a in letters[q]:
            a, b = b, a
        (c,) = set(letters[q]) - {i}
        pi1 = Permutation.transposition(control.degree, b, i)
        pi2 = Permutation.transposition(control.degree, a, c)
        rho = pi1 * pi2
        x_letter = tuple(sorted((a, i)))
        new_prefix = [rho.of_subset(u) for u in letters[:q - 1]]
        letters = new_prefix + [pi2.of_subset(letters[q - 1]), x_letter] + letters[q + 1:]
        control = control * rho


def dn_canonical(w: Word, spec: FamilySpec) -> Word:
    """Canonical representative t_{12} t_{34} ... of the double coset of w.

    After removing repeated indices the letters are pairwise disjoint
    pairs, and conjugating by a suitable control element relabels them to
    {1,2}, {3,4}, ...; only the double coset is preserved here.
    """
    if spec.family != "D":
        raise ValueError("dn_canonical applies to the D family only")
    reduced = shorten_common_index(w, spec)
    n = spec.n
    m = len(reduced.letters)
    canonical = tuple((2 * j + 1, 2 * j + 2) for j in range(m))
    return Word(Permutation.identity(n), canonical)
