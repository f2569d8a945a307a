"""Acceptance gate: thirteen numbered end-to-end checks at pinned tolerances.

Each check prints one [PASS]/[FAIL] line (run pytest -s to see them all)
and enforces its runtime budget where one is pinned.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb, sqrt

import numpy as np
import pytest

from definetti.cli import figure_spec, figure_values, main, render_csv
from definetti.heisenberg import (
    HeisenbergTriple,
    coherent_bound,
    delta_number_space,
    epsilon_heisenberg,
)
from definetti.oracle import (
    brute_delta_symmetric,
    cg_oracle,
    heis_oracle,
    lambda_up_set,
    mc_theorem1,
    pair_annihilate,
    pair_tower,
)
from definetti.report import DeltaReport
from definetti import su2_cg, symmetric
from definetti.radicals import RadicalSum
from definetti.su2_cg import TwoJ, cg, delta_su2, _racah_parts
from definetti.symmetric import (
    SymTriple,
    bound_exponential,
    closed_form_sum,
    dim_sym,
    epsilon,
    exact_error_d2,
)
from definetti.weights import Weight, exact_radius, w_r_set


@contextmanager
def criterion(num: int, label: str):
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {num}: {label}")
        raise
    print(f"[PASS] criterion {num}: {label}")


def test_criterion_01_aligned_overlap_closed_form():
    with criterion(1, "top-block overlap is (2j2+1)/(2j+1), exactly"):
        t0 = time.perf_counter()
        assert delta_su2(Fraction(1, 2), Fraction(1, 2), 1, Fraction(1, 2), 0).delta == Fraction(2, 3)
        for tj1 in range(0, 41):
            for tj2 in range(0, 41):
                rep = delta_su2(TwoJ(tj1), TwoJ(tj2), TwoJ(tj1 + tj2), TwoJ(tj2), 0)
                assert rep.delta == Fraction(tj2 + 1, tj1 + tj2 + 1)
        assert time.perf_counter() - t0 < 10


def test_criterion_02_first_figure_anchor():
    with criterion(2, "figure 1 grid emits 1 - 201/401 at j=200, r=0, near 0.5"):
        t0 = time.perf_counter()
        spec = figure_spec(1, {})
        header, curves = figure_values(spec)
        text = render_csv(header, curves, spec.r_max)
        assert time.perf_counter() - t0 < 30
        assert header[1:] == [f"j={v}" for v in range(190, 201)]
        assert len(curves[0]) == 41
        col = header.index("j=200")
        assert curves[col - 1][0] == 1 - Fraction(201, 401)
        cell = text.split("\n")[1].split(",")[col]
        assert cell == "0.498753117207"
        assert abs(float(cell) - 0.5) <= 0.005


def test_criterion_03_second_figure_vanishes_inside_radius():
    with criterion(3, "figure 2 columns hit exact 0 once r reaches j"):
        t0 = time.perf_counter()
        spec = figure_spec(2, {})
        header, curves = figure_values(spec)
        assert header[1:] == [f"j={v}" for v in range(0, 31)]
        for label, col in zip(header[1:], curves):
            j = int(label.removeprefix("j="))
            for r, cell in enumerate(col):
                if r >= j:
                    assert cell == 0
                    assert isinstance(cell, (Fraction, int))
        assert time.perf_counter() - t0 < 60


def test_criterion_04_zero_radius_identity():
    with criterion(4, "epsilon at r=0 is twice the dimension-ratio deficit"):
        for n in range(1, 61):
            for k in range(1, n + 1):
                for d in range(2, 7):
                    want = 2 * (1 - Fraction(dim_sym(n - k, d), dim_sym(n, d)))
                    assert epsilon(SymTriple(n, k, d, 0)) == want


def test_criterion_05_sum_closed_form_and_recursion():
    with criterion(5, "closed-form tail sum matches the direct sum and its recursion"):
        for n in range(1, 61):
            for k in range(1, n + 1):
                direct = Fraction(0)
                for r in range(k - 1, -1, -1):
                    direct += Fraction(comb(k, r + 1), comb(n, r + 1))
                    assert closed_form_sum(n, k, r) == direct
                for r in range(1, k):
                    step = Fraction(comb(k, r), comb(n, r))
                    assert closed_form_sum(n, k, r) == closed_form_sum(n, k, r - 1) - step


def test_criterion_06_exponential_bound_chain():
    with criterion(6, "epsilon/2 <= intermediate <= headline; d=2 closed form exact"):
        for n in range(4, 61):
            for k in range(2, n - 1):
                for d in range(2, 6):
                    if d > min(k, n - k):
                        continue
                    for r in range(k + 1):
                        t = SymTriple(n, k, d, r)
                        eps = float(epsilon(t))
                        inter, head = bound_exponential(t)
                        assert eps / 2 <= inter * (1 + 1e-12), (n, k, d, r)
                        assert inter <= head * (1 + 1e-12), (n, k, d, r)
        for n in range(1, 61):
            for k in range(1, n + 1):
                for r in range(k + 1):
                    assert exact_error_d2(n, k, r) == epsilon(SymTriple(n, k, 2, r))


def test_criterion_07_dense_projector_oracle():
    with criterion(7, "dense projector overlap matches 1 - epsilon/2 to 1e-10"):
        t0 = time.perf_counter()
        for d, n_max in ((2, 12), (3, 8)):
            for n in range(1, n_max + 1):
                for k in range(1, n + 1):
                    for r in range(k + 1):
                        t = SymTriple(n, k, d, r)
                        got = brute_delta_symmetric(t)
                        want = 1 - float(epsilon(t)) / 2
                        assert abs(got - want) <= 1e-10, (n, k, d, r)
        assert time.perf_counter() - t0 < 300


def test_criterion_08_coupling_table_oracle():
    with criterion(8, "ladder-built coupling tables match the closed form"):
        for tj1 in range(0, 25):
            for tj2 in range(0, 25):
                table = cg_oracle(TwoJ(tj1), TwoJ(tj2))
                exact_zone = tj1 <= 8 and tj2 <= 8
                for (tj, tm, tm1), val in table.items():
                    if exact_zone:
                        direct = cg(TwoJ(tj1), TwoJ(tm1), TwoJ(tj2), TwoJ(tm - tm1), TwoJ(tj), TwoJ(tm))
                        assert val == direct
                    s, pre = _racah_parts(tj1, tm1, tj2, tm - tm1, tj, tm)
                    assert abs(float(val) - float(s) * sqrt(float(pre))) <= 1e-12
        # orthogonality across coupled blocks and completeness per split, exact
        for tj1 in range(0, 13):
            for tj2 in range(0, 13):
                for tm in range(-(tj1 + tj2), tj1 + tj2 + 1, 2):
                    rows = []
                    for tj in range(max(abs(tj1 - tj2), abs(tm)), tj1 + tj2 + 1, 2):
                        rows.append([
                            RadicalSum.from_exact(
                                cg(TwoJ(tj1), TwoJ(tm1), TwoJ(tj2), TwoJ(tm - tm1), TwoJ(tj), TwoJ(tm))
                            )
                            for tm1 in range(max(-tj1, tm - tj2), min(tj1, tm + tj2) + 1, 2)
                        ])
                    for a in range(len(rows)):
                        for b in range(a, len(rows)):
                            acc = RadicalSum.zero()
                            for x, y in zip(rows[a], rows[b]):
                                acc = acc + x * y
                            assert acc.as_fraction() == (1 if a == b else 0)


def test_criterion_09_oscillator_oracle():
    with criterion(9, "truncated oscillator oracle matches the number-window formula"):
        for mu in range(1, 11):
            for nu in range(1, 11):
                for D in range(0, 6):
                    for r in range(0, 11):
                        want = delta_number_space(HeisenbergTriple(mu=mu, nu=nu, Delta=D, r=r))
                        got = heis_oracle(mu, nu, D, r, r + D + 40)
                        assert abs(got - float(want.delta)) < 1e-10, (mu, nu, D, r)
        for mu in range(1, 11):
            for nu in range(1, 11):
                for D in range(0, 6):
                    tower = pair_tower(mu, nu, D, 12, 60)
                    assert np.linalg.norm(pair_annihilate(mu, nu, tower[0])) < 1e-10
                    for a in range(len(tower)):
                        for b in range(a + 1, len(tower)):
                            assert abs(float(np.sum(tower[a] * tower[b]))) < 1e-10
        # offset-zero rational path telescopes exactly
        for mu in range(1, 11):
            for nu in range(1, 11):
                x = Fraction(mu, mu + nu)
                for r in range(0, 11):
                    rep = delta_number_space(HeisenbergTriple(mu=mu, nu=nu, Delta=0, r=r))
                    assert isinstance(rep.delta, Fraction)
                    assert rep.delta == 1 - x ** (r + 1)


def test_criterion_10_coherent_splitting_bound():
    with criterion(10, "coherent splitting bound is the zero-offset oscillator bound"):
        assert coherent_bound(100, 10, 0) == Fraction(1, 5)
        assert float(coherent_bound(100, 10, 0)) == 0.2
        for n in range(2, 201):
            for k in range(1, n):
                for r in (0, 1, 2, 3):
                    t = HeisenbergTriple(mu=Fraction(k), nu=Fraction(n - k), Delta=0, r=r)
                    assert coherent_bound(n, k, r) == epsilon_heisenberg(t)


def test_criterion_11_monte_carlo_inequality():
    with criterion(11, "sampled mixtures respect the reconstruction inequality"):
        t0 = time.perf_counter()
        for r in (0, 1, 2):
            rep = mc_theorem1(4, 2, r, 10**5, 1)
            assert rep.identity_residual < 0.02
            assert rep.lhs_distance <= rep.bound + rep.mc_tolerance  # tolerance is 5 SE
            if r == 2:
                assert rep.lhs_distance < 0.02  # window covers everything
        assert time.perf_counter() - t0 < 120


def test_criterion_12_up_window_covers_coupled_block():
    with criterion(12, "coupled-block weights sit in the radius window above the bottom"):
        for tj1 in range(0, 21):
            for tj2 in range(0, 21):
                for tj in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
                    ws = lambda_up_set(TwoJ(tj1), TwoJ(tj2), TwoJ(tj))
                    assert Weight((0, tj1)) in ws
                    lam = Weight(((tj1 + tj2 + tj) // 2, (tj1 + tj2 - tj) // 2))
                    rad = exact_radius(lam, Weight((tj1, 0)), Weight((tj2, 0)))
                    assert ws <= set(w_r_set(tj1, 2, rad, "up"))


def _epsilon_sum_shifted(t: SymTriple) -> Fraction:
    # same shape as the shipped formula, with the lower summation limit off by one
    ratio = Fraction(dim_sym(t.n - t.k, t.d), dim_sym(t.n, t.d))
    total = Fraction(0)
    for i in range(t.r + 2, t.k + 1):
        total += Fraction(comb(t.k, i), comb(t.n, i)) * comb(i + t.d - 2, i)
    return 2 * ratio * total


def _delta_su2_unscaled(j1, j2, j, m2, r: int, direction: str = "down") -> DeltaReport:
    # same window sum as the shipped formula, dimension prefactor dropped
    tj1 = su2_cg.as_twoj(j1).doubled
    tj2, tm2 = su2_cg.as_twoj(j2).doubled, su2_cg.as_twoj(m2).doubled
    tj = su2_cg.as_twoj(j).doubled
    total = Fraction(0)
    for i in range(r + 1):
        tm1 = tj1 - 2 * i if direction == "down" else -tj1 + 2 * i
        if abs(tm1) > tj1:
            continue
        tm = tm1 + tm2
        if abs(tm) > tj:
            continue
        total += cg(TwoJ(tj1), TwoJ(tm1), TwoJ(tj2), TwoJ(tm2), TwoJ(tj), TwoJ(tm)).square()
    return DeltaReport.from_delta(
        total, formula_id=f"su2-cg-window/{direction}", psi_label="mutant"
    )


def test_criterion_13_mutation_sensitivity(capsys):
    with criterion(13, "verify all flags a shifted sum limit or a dropped prefactor"):
        with pytest.MonkeyPatch.context() as mp:
            mp.setattr(symmetric, "epsilon", _epsilon_sum_shifted)
            assert main(["verify", "all"]) == 1
        with pytest.MonkeyPatch.context() as mp:
            mp.setattr(su2_cg, "delta_su2", _delta_su2_unscaled)
            assert main(["verify", "all"]) == 1
        assert main(["verify", "all"]) == 0  # pristine modules pass again
        capsys.readouterr()
