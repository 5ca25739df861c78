import itertools
from typing import List

import pytest

from core.config import get_settings
from models.equation import LA2Equation
from services.la2_core import make_z1_equation

CORPUS_LAMBDAS = range(-4, 5)
CORPUS_TAUS = (2, 3, 5, 6, 7, 8, 10, 13)
CORPUS_SHIFTS = range(-2, 3)


def build_corpus(lambdas=CORPUS_LAMBDAS, taus=CORPUS_TAUS, ps=CORPUS_SHIFTS, qs=CORPUS_SHIFTS) -> List[LA2Equation]:
    return [make_z1_equation(lam, tau, p, q) for lam, tau, p, q in itertools.product(lambdas, taus, ps, qs)]


def corrected_family(t: int) -> LA2Equation:
    """x^2 - (t^2+t)y^2 - (4t+2)x + (4t^2+4t)y = 0"""
    return LA2Equation(a=1, b=0, c=-(t * t + t), d=-(4 * t + 2), e=4 * t * t + 4 * t, f=0)


def printed_family(t: int) -> LA2Equation:
    """Same family with x-coefficient -(4t-2); reduces to j = 1 - 8t"""
    return LA2Equation(a=1, b=0, c=-(t * t + t), d=-(4 * t - 2), e=4 * t * t + 4 * t, f=0)


def shifted_norm_family(a: int, alpha: int, beta: int) -> LA2Equation:
    """x^2 - a y^2 - 2 alpha x - 2 a beta y - a beta^2 = 0, which reduces to j = alpha^2"""
    return LA2Equation(a=1, b=0, c=-a, d=-2 * alpha, e=-2 * a * beta, f=-a * beta * beta)


@pytest.fixture
def fresh_settings():
    """Settings rebuilt from the environment of the requesting test, and dropped afterwards"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def e1() -> LA2Equation:
    return LA2Equation(a=1, b=0, c=-2, d=-6, e=8, f=0)


@pytest.fixture
def e2() -> LA2Equation:
    return LA2Equation(a=1, b=2, c=-2, d=0, e=-6, f=-4)


@pytest.fixture
def pell2() -> LA2Equation:
    return LA2Equation(a=1, b=0, c=-2, d=0, e=0, f=-1)


@pytest.fixture(scope="session")
def corpus_sample() -> List[LA2Equation]:
    """A deterministic slice of the full corpus that keeps the default run fast"""
    return build_corpus(lambdas=(-4, -1, 0, 2, 3), taus=(2, 3, 7, 13), ps=(-2, 0, 1), qs=(-1, 2))
