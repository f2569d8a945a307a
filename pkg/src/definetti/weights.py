"""Weight-lattice combinatorics for symmetric irreducibles of SU(d).

Weights are integer d-tuples.  The dominance order compares prefix sums;
heights measure how many simple-root steps separate a weight from the
top (height down from lambda) or the bottom (height up from the reversal
of mu).  For the symmetric representation with weights summing to n the
two heights reduce to n - w_1 and n - w_d.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import factorial

__all__ = [
    "Weight",
    "HeightDecomposition",
    "simple_root",
    "weight_leq",
    "height_down",
    "height_up",
    "lowest_weight",
    "sym_weights",
    "w_r_set",
    "type_class_size",
    "exact_radius",
]


@dataclass(frozen=True)
class Weight:
    """An integer weight vector of dimension >= 2."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        if len(entries) < 2:
            raise ValueError("a weight needs at least two coordinates")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __add__(self, other: "Weight") -> "Weight":
        _same_dim(self, other)
        return Weight(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_dim(self, other)
        return Weight(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def shifted(self, t: int) -> "Weight":
        """Add t to every coordinate."""
        return Weight(tuple(a + t for a in self.entries))

    def reversed(self) -> "Weight":
        return Weight(self.entries[::-1])

    def normalized(self) -> "Weight":
        """Shift so the last coordinate is zero (idempotent)."""
        return self.shifted(-self.entries[-1])

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class HeightDecomposition:
    """Simple-root coefficients of a weight difference and their height.

    Integer weights with matching coordinate sums always decompose with
    integer coefficients; the height is the largest absolute coefficient.
    """

    coefficients: tuple[int, ...]
    height: int

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("decomposition needs at least one coefficient")
        expected = max(abs(c) for c in self.coefficients)
        if self.height != expected:
            raise ValueError(f"height {self.height} != max |coefficient| {expected}")


def _same_dim(a: Weight, b: Weight) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def simple_root(i: int, d: int) -> Weight:
    """The i-th simple root of SU(d), i in 1..d-1: e_i - e_(i+1)."""
    if d < 2:
        raise ValueError(f"need dimension d >= 2, got {d}")
    if not 1 <= i <= d - 1:
        raise ValueError(f"root index must lie in 1..{d - 1}, got {i}")
    v = [0] * d
    v[i - 1] = 1
    v[i] = -1
    return Weight(tuple(v))


def weight_leq(w: Weight, w2: Weight) -> bool:
    """Dominance order: every prefix sum of w is <= that of w2.

    Weights with different coordinate sums are incomparable; that case
    returns False and raises a warning.
    """
    _same_dim(w, w2)
    if w.total != w2.total:
        warnings.warn(
            "weights with different coordinate sums are incomparable",
            stacklevel=2,
        )
        return False
    acc = 0
    for a, b in zip(w, w2):
        acc += a - b
        if acc > 0:
            return False
    return True


def _prefix_coefficients(diff: Weight) -> tuple[int, ...]:
    # writing diff = sum_i c_i * alpha_i forces c_i = sum_{j<=i} diff_j
    acc = 0
    out = []
    for x in diff.entries[:-1]:
        acc += x
        out.append(acc)
    return tuple(out)


def height_down(lam: Weight, w: Weight) -> HeightDecomposition:
    """Decompose w = lam - sum_i n_i alpha_i; height is max |n_i|.

    Requires matching coordinate sums, otherwise no decomposition exists.
    """
    _same_dim(lam, w)
    if lam.total != w.total:
        raise ValueError(
            f"no root decomposition: coordinate sums differ ({lam.total} vs {w.total})"
        )
    coeffs = _prefix_coefficients(lam - w)
    return HeightDecomposition(coeffs, max(abs(c) for c in coeffs))


def height_up(mu: Weight, w: Weight) -> HeightDecomposition:
    """Decompose w = reverse(mu) + sum_i m_i alpha_i; height is max |m_i|.

    The reversal of mu is the lowest weight of the irreducible with
    highest weight mu.  Requires matching coordinate sums.
    """
    _same_dim(mu, w)
    if mu.total != w.total:
        raise ValueError(
            f"no root decomposition: coordinate sums differ ({mu.total} vs {w.total})"
        )
    coeffs = _prefix_coefficients(w - lowest_weight(mu))
    return HeightDecomposition(coeffs, max(abs(c) for c in coeffs))


def lowest_weight(mu: Weight) -> Weight:
    """Lowest weight of the irreducible with highest weight mu (reversal)."""
    return mu.reversed()


def sym_weights(n: int, d: int) -> list[Weight]:
    """All weights of the n-fold symmetric power of C^d.

    These are the nonnegative integer d-tuples summing to n, listed in
    descending lexicographic order so the highest weight (n,0,...,0)
    comes first.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if d < 2:
        raise ValueError(f"need dimension d >= 2, got {d}")
    out: list[Weight] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(Weight(tuple(prefix + [remaining])))
            return
        for first in range(remaining, -1, -1):
            rec(prefix + [first], remaining - first, slots - 1)

    rec([], n, d)
    return out


def w_r_set(n: int, d: int, r: int, direction: str = "down") -> list[Weight]:
    """Weights of the symmetric power within height r of the top or bottom.

    direction="down" keeps w with n - w_1 <= r (near the highest weight);
    direction="up" keeps w with n - w_d <= r (near the lowest weight).
    """
    if r < 0:
        raise ValueError(f"need radius r >= 0, got {r}")
    if direction == "down":
        return [w for w in sym_weights(n, d) if w[0] >= n - r]
    if direction == "up":
        return [w for w in sym_weights(n, d) if w[-1] >= n - r]
    raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")


def type_class_size(w: Weight) -> int:
    """Number of product basis vectors of type w: multinomial(sum; w)."""
    if any(x < 0 for x in w):
        raise ValueError(f"type classes need nonnegative entries, got {w}")
    size = factorial(w.total)
    for x in w:
        size //= factorial(x)
    return size


def exact_radius(lam: Weight, mu: Weight, nu: Weight) -> int:
    """Smallest r with lambda - nu inside the height-r band above mu's bottom.

    The difference lambda - nu is shifted by a multiple of (1,...,1) to
    match mu's coordinate sum; a fractional shift means the triple is not
    a valid branching configuration.
    """
    _same_dim(lam, mu)
    _same_dim(lam, nu)
    v = lam - nu
    t, rem = divmod(mu.total - v.total, lam.dim)
    if rem:
        raise ValueError(
            f"invalid triple: sum(mu) - sum(lambda - nu) = {mu.total - v.total} "
            f"is not a multiple of d = {lam.dim}"
        )
    return height_up(mu, v.shifted(t)).height
