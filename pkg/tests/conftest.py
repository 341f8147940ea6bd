import pytest

from perminv.perm import Permutation, generate_group, parse_permutation


def group(n, *gens):
    return generate_group([parse_permutation(g, n) for g in gens], n=n)


CENSUS = {
    "trivial1": lambda: group(1),
    "trivial2": lambda: group(2),
    "S2": lambda: group(2, "(1 2)"),
    "C3": lambda: group(3, "(1 2 3)"),
    "S3": lambda: group(3, "(1 2)", "(1 2 3)"),
    "C4": lambda: group(4, "(1 2 3 4)"),
    "V4": lambda: group(4, "(1 2)(3 4)", "(1 3)(2 4)"),
    "D4": lambda: group(4, "(1 2 3 4)", "(1 4)(2 3)"),
    "A4": lambda: group(4, "(1 2 3)", "(2 3 4)"),
    "S4": lambda: group(4, "(1 2)", "(1 2 3 4)"),
    "C6": lambda: group(6, "(1 2 3 4 5 6)"),
}

ORDERS = {
    "trivial1": 1, "trivial2": 1, "S2": 2, "C3": 3, "S3": 6, "C4": 4,
    "V4": 4, "D4": 8, "A4": 12, "S4": 24, "C6": 6,
}

_cache = {}


def census_group(name):
    if name not in _cache:
        _cache[name] = CENSUS[name]()
    return _cache[name]


@pytest.fixture(params=sorted(CENSUS))
def census(request):
    return request.param, census_group(request.param)


@pytest.fixture(scope="session")
def s4_elements():
    return census_group("S4").elements


def perm(text, n):
    return parse_permutation(text, n)


__all__ = ["group", "census_group", "perm", "Permutation", "CENSUS", "ORDERS"]
