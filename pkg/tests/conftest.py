import inspect
import random
from fractions import Fraction as F

import pytest

from quadrep.constructions import BUILDERS, build
from quadrep.exact_arith import DomainError


def rq(rng, bound=20):
    """Nonzero rational n/d with |n|, d <= bound."""
    return F(rng.randint(-bound, bound) or 1, rng.randint(1, bound))


_SEC5_KEY = {"Sec5Case2": "t", "Sec5Case3": "Y0", "Sec5Case4": "v", "Sec5Case5": "Z"}


def _sec5_params(family, rng):
    P = {"b": rq(rng), "p0": rq(rng), "q0": rq(rng)}
    key = _SEC5_KEY[family]
    P[key] = rq(rng)
    # m = a p0^2 + b q0^2 is steered so that f(m) is a square
    if family == "Sec5Case2":
        t = P["t"]
        if t in (F(1, 2), F(-4)):
            return None
        target = (1 - 2 * t) * (t + 4) * rq(rng) ** 2
    elif family in ("Sec5Case4", "Sec5Case5"):
        target = rq(rng) ** 2
    else:
        target = rq(rng)
    P["a"] = (target - P["b"] * P["q0"] ** 2) / P["p0"] ** 2
    return P


def _generic_params(family, rng):
    names = inspect.signature(BUILDERS[family]).parameters
    P = {n: rq(rng) for n in names}
    if family == "Sec3Case3":
        # b is solved from p0^2 + b q0^2 = (s^2 + 1)(s^2 + 2s - 1) r0^2 / 4s^2
        s, r0 = P["s"], P["r0"]
        rhs = (s * s + 1) * (s * s + 2 * s - 1) * r0 * r0 / (4 * s * s)
        P["b"] = (rhs - P["p0"] ** 2) / P["q0"] ** 2
    return P


def sample_construction(family, rng, tries=5000):
    """A random construction of the given family (parameters retried until
    the builder accepts them)."""
    last = None
    for _ in range(tries):
        params = _sec5_params(family, rng) if family in _SEC5_KEY else _generic_params(family, rng)
        if params is None:
            continue
        try:
            return build(family, params)
        except (DomainError, ZeroDivisionError) as exc:
            last = exc
    raise AssertionError(f"no admissible {family} parameters found: {last}")


@pytest.fixture
def rng():
    return random.Random(20261019)
