import pytest

import rgwa


@pytest.fixture(scope="session")
def corpus():
    return rgwa.standard_corpus()


def negation_cyclic(n: int, name: str | None = None) -> rgwa.FiniteGwaObject:
    """Z/n (n even) acted on by negation at odd exponents: x^y = (-1)^y x.

    A reduced object with a genuinely nontrivial action, used to exercise
    the action-sensitive code paths that the trivial corpus cannot reach.
    """
    assert n % 2 == 0
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    act = [[(x if y % 2 == 0 else (-x) % n) for y in range(n)] for x in range(n)]
    return rgwa.make_object(name or f"z{n}neg", n, add, act, require_reduced=True)


@pytest.fixture(scope="session")
def z4neg():
    return negation_cyclic(4)


@pytest.fixture(scope="session")
def z6neg():
    return negation_cyclic(6)


@pytest.fixture(scope="session")
def k4swap():
    """Klein four group acted on by the automorphism swapping the two
    middle elements at exponents 1 and 2."""
    base = rgwa.direct_sum(rgwa.cyclic_trivial(2), rgwa.cyclic_trivial(2))
    swap = (0, 2, 1, 3)
    act = [[(x if y in (0, 3) else swap[x]) for y in range(4)] for x in range(4)]
    return rgwa.make_object("k4swap", 4, [list(r) for r in base.add], act,
                            require_reduced=True)


def shear_object() -> rgwa.FiniteGwaObject:
    """Z/4 (+) Z/4 where the exponent (x', y') applies the shear
    (x, y) -> (x, x'x + y).

    The action family has order 4, so exponentiating by w and by -w genuinely
    differ; the trivial corpus and the negation carriers never reach that.
    """
    def idx(x, y):
        return 4 * x + y

    n = 16
    add = [[0] * n for _ in range(n)]
    act = [[0] * n for _ in range(n)]
    for x in range(4):
        for y in range(4):
            for x2 in range(4):
                for y2 in range(4):
                    add[idx(x, y)][idx(x2, y2)] = idx((x + x2) % 4, (y + y2) % 4)
                    act[idx(x, y)][idx(x2, y2)] = idx(x, (x2 * x + y) % 4)
    return rgwa.make_object("shear16", n, add, act, require_reduced=True)


@pytest.fixture(scope="session")
def shear16():
    return shear_object()
