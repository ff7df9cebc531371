"""Family parameters for the three simply laced towers.

Each family is a factored progenitor 2^(*C(n,k)) : S_n with a single
relator (t_{1..k} (k,k+1))^3, where the symmetric generators are indexed
by the k-subsets of {1..n}: k = 1 for A, 2 for D, 3 for E.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from .perm import PermGroup, Permutation, k_subsets

SUBSET_SIZE = {"A": 1, "D": 2, "E": 3}

# n-ranges for which the single relator is known to close the image.
IN_SCOPE = {
    "A": range(1, 8),
    "D": range(4, 9),
    "E": (6, 7, 8),
}


class ConfigError(ValueError):
    """Invalid family/n combination or run configuration."""


@dataclass(frozen=True)
class FamilySpec:
    """One member of a tower: family letter, rank n, derived subset size k.

    Out-of-range members (say E with n=9) are refused unless
    ``experimental`` is set, in which case enumeration demands an explicit
    coset cap since the image may be infinite.
    """

    family: str
    n: int
    experimental: bool = False
    k: int = field(init=False)

    def __post_init__(self):
        if self.family not in SUBSET_SIZE:
            raise ConfigError(f"unknown family {self.family!r}; expected A, D or E")
        object.__setattr__(self, "k", SUBSET_SIZE[self.family])
        if self.experimental:
            if self.n < self.k + 1:
                raise ConfigError(
                    f"{self.family}_{self.n}: need n >= {self.k + 1} for the relator")
        elif not self.in_scope:
            raise ConfigError(
                f"{self.family}_{self.n} is out of scope "
                f"(A: n>=1, D: n>=4, E: n in 6..8); pass experimental=True "
                f"with an enumeration cap to try it anyway")

    @property
    def in_scope(self) -> bool:
        return self.n in IN_SCOPE[self.family]

    @property
    def name(self) -> str:
        return f"{self.family}{self.n}"

    @property
    def dim(self) -> int:
        """Dimension of the standard exact representation."""
        return self.n + 1 if self.family == "A" else self.n

    def generator_subsets(self) -> tuple[tuple[int, ...], ...]:
        """Index sets of the symmetric generators, in lexicographic order."""
        return k_subsets(self.n, self.k)

    @property
    def n_generators(self) -> int:
        return comb(self.n, self.k)

    def control_group(self) -> PermGroup:
        return PermGroup.symmetric(self.n)

    def control_generators(self) -> tuple[Permutation, ...]:
        return PermGroup.symmetric(self.n).generators

    def control_order(self) -> int:
        return factorial(self.n)

    def relator_parts(self):
        """The relator in normal form: control element and three letters.

        (t_S (k,k+1))^3 rewritten with the control element on the left is
        (k,k+1) . t_S t_S' t_S with S = {1..k} and S' = {1..k-1, k+1}.
        """
        k, n = self.k, self.n
        control = Permutation.transposition(n, k, k + 1)
        first = tuple(range(1, k + 1))
        second = tuple(range(1, k)) + (k + 1,)
        return control, (first, second, first)

    def expected_index(self) -> int | None:
        """Closed-form coset count |G : S_n| for in-scope members."""
        if not self.in_scope:
            return None
        if self.family == "A":
            return self.n + 1
        if self.family == "D":
            return 2 ** (self.n - 1)
        return {6: 72, 7: 576, 8: 17280}[self.n]

    def expected_order(self) -> int | None:
        idx = self.expected_index()
        return None if idx is None else idx * factorial(self.n)
