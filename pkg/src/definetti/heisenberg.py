"""Oscillator-pair overlap functionals.

A two-mode squeezed-style family: the weight-mu and weight-nu modes pair
into states |psi_D> whose Schmidt coefficients follow a negative binomial.
The overlap of the vacuum reference against the number window {0..r} has
the closed form

    delta = (nu/(mu+nu))^(D+1) * sum_{n=0}^{r-D} C(n+D, D) (mu/(mu+nu))^n

which is exact rational whenever mu and nu are.  Float inputs fall back
to compensated floating summation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

from .report import DeltaReport

__all__ = [
    "HeisenbergTriple",
    "alpha_coeff",
    "alpha_weight",
    "alpha_weight_tail_bound",
    "delta_number_space",
    "epsilon_heisenberg",
    "coherent_bound",
]


@dataclass(frozen=True)
class HeisenbergTriple:
    """Parameters (mu, nu, Delta, r): mode weights, offset, window radius."""

    mu: Fraction | float
    nu: Fraction | float
    Delta: int
    r: int

    def __post_init__(self) -> None:
        if isinstance(self.mu, bool) or isinstance(self.nu, bool):
            raise TypeError("mode weights must be numbers")
        if not self.mu > 0 or not self.nu > 0:
            raise ValueError(f"mode weights must be positive, got mu={self.mu}, nu={self.nu}")
        if not isinstance(self.Delta, int) or self.Delta < 0:
            raise ValueError(f"need an integer offset Delta >= 0, got {self.Delta!r}")
        if not isinstance(self.r, int) or self.r < 0:
            raise ValueError(f"need an integer radius r >= 0, got {self.r!r}")

    @property
    def is_exact(self) -> bool:
        return isinstance(self.mu, (int, Fraction)) and isinstance(self.nu, (int, Fraction))


def alpha_coeff(D: int, ell: int, mu, nu):
    """Schmidt weight of |D-ell> x |ell> inside |psi_D>: C(D,ell) mu^ell nu^(D-ell) / (mu+nu)^D."""
    if not 0 <= ell <= D:
        raise ValueError(f"need 0 <= ell <= Delta, got ell={ell}, Delta={D}")
    if _exact_pair(mu, nu):
        mu, nu = Fraction(mu), Fraction(nu)
    return comb(D, ell) * mu**ell * nu ** (D - ell) / (mu + nu) ** D


def alpha_weight(D: int, n: int, mu, nu):
    """Weight of total number D+n in the paired vacuum family.

    Negative binomial: (nu/(mu+nu))^D * C(n+D, D) * (mu/(mu+nu))^n.
    """
    if D < 0 or n < 0:
        raise ValueError(f"need Delta >= 0 and n >= 0, got {D}, {n}")
    if _exact_pair(mu, nu):
        mu, nu = Fraction(mu), Fraction(nu)
    x = mu / (mu + nu)
    y = nu / (mu + nu)
    return y**D * comb(n + D, D) * x**n


def alpha_weight_tail_bound(D: int, start: int, mu, nu) -> float:
    """Geometric bound on sum_{n >= start} alpha_weight(D, n, mu, nu).

    Term ratios are x * (n+1+D)/(n+1) <= x * (1 + D/(start+1)); when that
    is below 1 the tail is dominated by a geometric series.
    """
    a = float(alpha_weight(D, start, mu, nu))
    x = float(mu) / float(mu + nu)
    rho = x * (1 + D / (start + 1))
    if rho >= 1:
        raise ValueError(f"tail not yet geometric at start={start} (ratio {rho:.3f} >= 1)")
    return a / (1 - rho)


def _exact_pair(mu, nu) -> bool:
    return isinstance(mu, (int, Fraction)) and isinstance(nu, (int, Fraction))


def _kahan(terms) -> float:
    total = 0.0
    carry = 0.0
    for t in terms:
        y = t - carry
        s = total + y
        carry = (s - total) - y
        total = s
    return total


def delta_number_space(t: HeisenbergTriple) -> DeltaReport:
    """Vacuum-reference overlap against the number window {0, ..., r}."""
    label = f"vacuum |0> at offset Delta={t.Delta}"
    formula = "oscillator-number-window"
    if t.is_exact:
        mu, nu = Fraction(t.mu), Fraction(t.nu)
        x = mu / (mu + nu)
        y = nu / (mu + nu)
        total = Fraction(0)
        for n in range(t.r - t.Delta + 1):
            total += comb(n + t.Delta, t.Delta) * x**n
        delta = y ** (t.Delta + 1) * total
        return DeltaReport.from_delta(delta, formula_id=formula, psi_label=label)
    mu, nu = float(t.mu), float(t.nu)
    x = mu / (mu + nu)
    y = nu / (mu + nu)
    terms = (comb(n + t.Delta, t.Delta) * x**n for n in range(t.r - t.Delta + 1))
    delta = y ** (t.Delta + 1) * _kahan(terms)
    return DeltaReport.from_delta(delta, formula_id=formula, psi_label=label)


def epsilon_heisenberg(t: HeisenbergTriple):
    """Error bound from the vacuum overlap: 2(1-delta) in the aligned
    multiplicity-one case Delta = r = 0, otherwise 2 sqrt(1-delta).

    Returns an exact Fraction whenever the algebra allows (exact inputs
    with Delta = 0 and the exponent (r+1)/2 integral, or r = 0).
    """
    rep = delta_number_space(t)
    if t.Delta == 0 and t.r == 0:
        return rep.bound_linear
    if t.Delta == 0 and t.is_exact:
        # 1 - delta telescopes to x^(r+1), so the bound is 2 x^((r+1)/2)
        x = Fraction(t.mu) / Fraction(t.mu + t.nu)
        if (t.r + 1) % 2 == 0:
            return 2 * x ** ((t.r + 1) // 2)
        return 2.0 * sqrt(float(x ** (t.r + 1)))
    return rep.bound_sqrt


def coherent_bound(n: int, k: int, r: int):
    """Error bound for k-of-n coherent-splitting reconstruction.

    Definitionally the oscillator bound at mu = k, nu = n - k, Delta = 0:
    2k/n at r = 0 and 2 (k/n)^((r+1)/2) otherwise.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    return epsilon_heisenberg(HeisenbergTriple(mu=Fraction(k), nu=Fraction(n - k), Delta=0, r=r))
