import random
from fractions import Fraction

from sl4cube.linalg import Mat, independent_rows, kernel_dim, rank, spans_match


def test_mat_basics():
    a = Mat([[1, 2], [3, 4]])
    b = Mat([[0, 1], [1, 0]])
    assert a + b == Mat([[1, 3], [4, 4]])
    assert a - b == Mat([[1, 1], [2, 4]])
    assert a @ b == Mat([[2, 1], [4, 3]])
    assert a.scale(Fraction(1, 2)) == Mat([[Fraction(1, 2), 1], [Fraction(3, 2), 2]])
    assert a.transpose() == Mat([[1, 3], [2, 4]])
    assert a.trace() == 5
    assert Mat.identity(2) @ a == a
    assert a.apply([1, 0]) == [1, 3]


def test_rank_simple():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[0, 0], [0, 0]]) == 0
    assert kernel_dim([[1, 1, 0], [0, 1, 1]]) == 1


def test_rank_int_and_fraction_paths_agree():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.randint(1, 7)
        n = rng.randint(1, 7)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        if m >= 2 and rng.random() < 0.5:
            rows[-1] = [3 * a for a in rows[0]]
        frac_rows = [[Fraction(a) for a in r] for r in rows]
        assert rank(rows) == rank(frac_rows)


def test_independent_rows():
    rows = [[1, 0], [2, 0], [0, 1], [1, 1]]
    assert independent_rows(rows) == [0, 2]
    assert independent_rows([[0, 0]]) == []


def test_spans_match():
    a = [[1, 0, 0], [0, 1, 0]]
    b = [[1, 1, 0], [1, -1, 0]]
    c = [[1, 0, 0], [0, 0, 1]]
    assert spans_match(a, b)
    assert not spans_match(a, c)
