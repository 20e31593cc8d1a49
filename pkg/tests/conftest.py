import pytest

# Maximally commutative sets listed in the worked examples for d = 3, 4, 8.
# The d = 8 listing omits (0,0); it is added back below.
EXAMPLE_D3 = [
    [(0, 0), (0, 1), (0, 2)],
    [(0, 0), (1, 0), (2, 0)],
    [(0, 0), (1, 1), (2, 2)],
    [(0, 0), (1, 2), (2, 1)],
]

EXAMPLE_D4 = [
    [(0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 0), (0, 2), (2, 0), (2, 2)],
    [(0, 0), (0, 2), (2, 1), (2, 3)],
    [(0, 0), (1, 0), (2, 0), (3, 0)],
    [(0, 0), (1, 1), (2, 2), (3, 3)],
    [(0, 0), (1, 2), (2, 0), (3, 2)],
    [(0, 0), (1, 3), (2, 2), (3, 1)],
]

_D8_WITHOUT_ORIGIN = [
    [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7)],
    [(0, 2), (0, 4), (0, 6), (4, 0), (4, 2), (4, 4), (4, 6)],
    [(0, 2), (0, 4), (0, 6), (4, 1), (4, 3), (4, 5), (4, 7)],
    [(0, 4), (2, 0), (2, 4), (4, 0), (4, 4), (6, 0), (6, 4)],
    [(0, 4), (2, 1), (2, 5), (4, 2), (4, 6), (6, 3), (6, 7)],
    [(0, 4), (2, 2), (2, 6), (4, 0), (4, 4), (6, 2), (6, 6)],
    [(0, 4), (2, 3), (2, 7), (4, 2), (4, 6), (6, 1), (6, 5)],
    [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0), (7, 0)],
    [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (7, 7)],
    [(1, 2), (2, 4), (3, 6), (4, 0), (5, 2), (6, 4), (7, 6)],
    [(1, 3), (2, 6), (3, 1), (4, 4), (5, 7), (6, 2), (7, 5)],
    [(1, 4), (2, 0), (3, 4), (4, 0), (5, 4), (6, 0), (7, 4)],
    [(1, 5), (2, 2), (3, 7), (4, 4), (5, 1), (6, 6), (7, 3)],
    [(1, 6), (2, 4), (3, 2), (4, 0), (5, 6), (6, 4), (7, 2)],
    [(1, 7), (2, 6), (3, 5), (4, 4), (5, 3), (6, 2), (7, 1)],
]
EXAMPLE_D8 = [[(0, 0)] + s for s in _D8_WITHOUT_ORIGIN]

# 1-based labels as printed; C_6 is the separating detector
EXAMPLE_D8_C6 = EXAMPLE_D8[5]

SEPARATING_SET = [(0, 0), (5, 6), (6, 3), (6, 5), (7, 6)]
SEPARATING_DIFF = [
    (5, 6), (6, 3), (6, 5), (7, 6), (1, 5),
    (1, 7), (2, 0), (0, 2), (1, 3), (1, 1),
]

PAPER_EXAMPLES = {3: EXAMPLE_D3, 4: EXAMPLE_D4, 8: EXAMPLE_D8}


@pytest.fixture
def ring8():
    from gbsmcs import make_ring

    return make_ring(8)


@pytest.fixture
def separating_set(ring8):
    from gbsmcs import GbsSet

    return GbsSet(ring8, SEPARATING_SET)
