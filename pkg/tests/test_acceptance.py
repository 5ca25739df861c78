"""Closed forms against the brute-force oracle across the generated equation corpus."""
import pytest

from services.counting import compute_Nl, compute_thresholds, count_solutions, enumerate_solutions, float_ceiling_Nl
from services.la2_core import make_z1_equation, reduce
from services.oracle import brute_force_solutions
from services.pell import fundamental_solution
from tests.conftest import build_corpus, corrected_family

OFFSETS = (0, 1, 7, 50, 199)


def check_equation(eq) -> None:
    reduced = reduce(eq)
    thresholds = compute_thresholds(reduced, fundamental_solution(reduced.tau))
    for offset in OFFSETS:
        x = thresholds.L + offset
        oracle = brute_force_solutions(eq, x)
        assert count_solutions(eq, x) == oracle.count, (str(eq), x)
        assert enumerate_solutions(eq, x).points() == oracle.solutions, (str(eq), x)


def test_reference_equations(e1, e2, pell2):
    for eq in (e1, e2, pell2):
        check_equation(eq)


def test_corpus_sample(corpus_sample):
    for eq in corpus_sample:
        check_equation(eq)


@pytest.mark.parametrize("t", range(1, 5))
def test_corrected_literature_family(t):
    check_equation(corrected_family(t))


def test_below_l_needs_the_oracle(e1):
    assert brute_force_solutions(e1, 33).count == 9


@pytest.mark.slow
@pytest.mark.parametrize("eq", build_corpus(), ids=str)
def test_full_corpus(eq):
    check_equation(eq)


@pytest.mark.parametrize("lam, tau, p, q", [(40, 2, 0, 0), (-40, 2, 1, -1), (25, 3, 2, 3), (100, 2, 3, -5)])
def test_large_lambda_thresholds_above_one(lam, tau, p, q):
    eq = make_z1_equation(lam, tau, p, q)
    reduced = reduce(eq)
    fund = fundamental_solution(reduced.tau)
    thresholds = compute_thresholds(reduced, fund)
    assert min(thresholds.N.values()) >= 2
    for l in (1, 2, 3, 4):
        assert compute_Nl(reduced, fund, l) == float_ceiling_Nl(reduced, fund, l)

    for x in [thresholds.L + offset for offset in OFFSETS] + [3 * thresholds.L]:
        oracle = brute_force_solutions(eq, x)
        assert count_solutions(eq, x) == oracle.count, (str(eq), x)
        assert enumerate_solutions(eq, x).points() == oracle.solutions, (str(eq), x)
