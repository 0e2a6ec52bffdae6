import pytest

from ramcat import WordContext, cycle_action, cyclic_group, make_action, symmetric_group, trivial_action


@pytest.fixture(scope="session")
def z3_context():
    """Z3 acting on {a,b,c,d}: a->b->c->a, d fixed."""
    z3 = cyclic_group(3)
    return WordContext(cycle_action(z3, "abcd", [1, 2, 0, 3]))


@pytest.fixture(scope="session")
def swap_context():
    """Z2 swapping {a,b}."""
    z2 = cyclic_group(2)
    return WordContext(cycle_action(z2, "ab", [1, 0]))


@pytest.fixture(scope="session")
def plain_z2_context():
    return WordContext(trivial_action(cyclic_group(2)))


@pytest.fixture(scope="session")
def one_letter_context():
    """{a} with trivial G: decorated words degenerate to parameter words
    with a single constant letter."""
    return WordContext(trivial_action(cyclic_group(1), "a"))


@pytest.fixture(scope="session")
def s3_context():
    """S3 acting naturally on three letters; non-abelian, so exponent
    bookkeeping order matters."""
    from itertools import permutations

    s3 = symmetric_group(3)
    perms = sorted(permutations(range(3)), key=lambda p: (p != (0, 1, 2), p))
    table = [[perms[g][i] for g in range(6)] for i in range(3)]
    return WordContext(make_action(s3, "pqr", table))


def stirling(n: int, m: int) -> int:
    """Independent oracle: the standard two-term recurrence."""
    if n == m:
        return 1
    if m < 1 or m > n:
        return 0
    return m * stirling(n - 1, m) + stirling(n - 1, m - 1)
