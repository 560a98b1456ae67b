"""The 4x4 matrix realization of sl4: six generators, presentation, basis, tau.

Generators come in two triples.  A_1, A_2, A_3 are the permutation matrices
swapping coordinate pairs (12)(34), (13)(24), (14)(23); the starred triple is
diagonal with entries +-1.  Together they generate all traceless 4x4 matrices,
and the involution tau = conjugation by the Hadamard-like matrix Upsilon swaps
A_i with A*_i.
"""

from fractions import Fraction
from itertools import permutations
from typing import NamedTuple

from .linalg import Mat
from .report import Report


class GeneratorId(NamedTuple):
    kind: str  # "A" or "Astar"
    index: int  # 1, 2, or 3


_A = {
    1: Mat([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    2: Mat([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    3: Mat([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
}

_ASTAR = {
    1: Mat.diag([1, 1, -1, -1]),
    2: Mat.diag([1, -1, 1, -1]),
    3: Mat.diag([1, -1, -1, 1]),
}

UPSILON = Mat(
    [
        [1, 1, 1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ]
).scale(Fraction(1, 2))


def generator(gid: GeneratorId) -> Mat:
    kind, index = gid
    if kind == "A":
        return _A[index]
    if kind == "Astar":
        return _ASTAR[index]
    raise ValueError(f"unknown generator kind {kind!r}")


def bracket(x: Mat, y: Mat) -> Mat:
    return x @ y - y @ x


def tau(m: Mat) -> Mat:
    """Conjugation by Upsilon; an involution since Upsilon squares to I."""
    return UPSILON @ m @ UPSILON


def basis15():
    """The 15 matrices spanning sl4, built from the six generators.

    Raises if the list fails to have exact rank 15 when flattened, which would
    signal a broken generator table.
    """
    a1, a2, a3 = _A[1], _A[2], _A[3]
    b1, b2, b3 = _ASTAR[1], _ASTAR[2], _ASTAR[3]
    basis = [
        a1, a2, a3, b1, b2, b3,
        bracket(a1, b2), bracket(a2, b3), bracket(a3, b1),
        bracket(b1, a2), bracket(b2, a3), bracket(b3, a1),
        bracket(b1, bracket(b2, a3)),
        bracket(b2, bracket(b3, a1)),
        bracket(b3, bracket(b1, a2)),
    ]
    from .linalg import rank

    if rank([m.flatten() for m in basis]) != 15:
        raise ArithmeticError("generator brackets do not span a 15-dimensional space")
    return basis


def _elem(i, j):
    return Mat([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(4)] for r in range(4)])


# Inverse-map formulas expressing each elementary matrix through the
# generators.  Each entry: target E_{i,j}, main generator index g, the two
# starred indices (p, q), and the three signs on the correction terms in
# (4 A_g + s1*2[A*_p, A_g] + s2*2[A*_q, A_g] + s3*[A*_p, [A*_q, A_g]]) / 16.
_OFFDIAG_FORMULAS = [
    ((1, 2), 1, 2, 3, (1, 1, 1)),
    ((2, 1), 1, 2, 3, (-1, -1, 1)),
    ((3, 4), 1, 2, 3, (1, -1, -1)),
    ((4, 3), 1, 2, 3, (-1, 1, -1)),
    ((1, 3), 2, 3, 1, (1, 1, 1)),
    ((3, 1), 2, 3, 1, (-1, -1, 1)),
    ((4, 2), 2, 3, 1, (1, -1, -1)),
    ((2, 4), 2, 3, 1, (-1, 1, -1)),
    ((1, 4), 3, 1, 2, (1, 1, 1)),
    ((4, 1), 3, 1, 2, (-1, -1, 1)),
    ((2, 3), 3, 1, 2, (1, -1, -1)),
    ((3, 2), 3, 1, 2, (-1, 1, -1)),
]

# Diagonal differences E_{i,i} - E_{i+1,i+1} as half-sums of starred generators.
_DIAG_FORMULAS = [
    (1, (2, 1), (3, 1)),   # (A*_2 + A*_3)/2
    (2, (1, 1), (2, -1)),  # (A*_1 - A*_2)/2
    (3, (2, 1), (3, -1)),  # (A*_2 - A*_3)/2
]


def elementary_from_generators(i, j):
    """Evaluate the generator-word formula for E_{i,j} (i != j) or, when i == j
    in 1..3, for the diagonal difference E_{i,i} - E_{i+1,i+1}."""
    if i == j:
        for row, (p, sp), (q, sq) in _DIAG_FORMULAS:
            if row == i:
                return (_ASTAR[p].scale(sp) + _ASTAR[q].scale(sq)).scale(Fraction(1, 2))
        raise ValueError("diagonal case must have i in 1..3")
    for (ti, tj), g, p, q, (s1, s2, s3) in _OFFDIAG_FORMULAS:
        if (ti, tj) == (i, j):
            ag = _A[g]
            t1 = bracket(_ASTAR[p], ag)
            t2 = bracket(_ASTAR[q], ag)
            t3 = bracket(_ASTAR[p], bracket(_ASTAR[q], ag))
            num = ag.scale(4) + t1.scale(2 * s1) + t2.scale(2 * s2) + t3.scale(s3)
            return num.scale(Fraction(1, 16))
    raise ValueError(f"no formula for ({i}, {j})")


def elementary_targets():
    """Pairs (formula value, expected matrix) for every inverse-map formula."""
    out = []
    for (i, j), *_ in _OFFDIAG_FORMULAS:
        out.append(((i, j), elementary_from_generators(i, j), _elem(i, j)))
    for row, *_ in _DIAG_FORMULAS:
        out.append(((row, row), elementary_from_generators(row, row), _elem(row, row) - _elem(row + 1, row + 1)))
    return out


def check_presentation() -> Report:
    """Evaluate every instance of the defining relations on the generator matrices."""
    rep = Report()
    zero = Mat.zeros(4, 4)
    for i, j in permutations((1, 2, 3), 2):
        rep.add(
            f"presentation.commute.A{i}A{j}",
            f"[A_{i}, A_{j}] = 0",
            None,
            bracket(_A[i], _A[j]) == zero,
            f"[A_{i}, A_{j}] != 0",
        )
        rep.add(
            f"presentation.commute.As{i}As{j}",
            f"[A*_{i}, A*_{j}] = 0",
            None,
            bracket(_ASTAR[i], _ASTAR[j]) == zero,
            f"[A*_{i}, A*_{j}] != 0",
        )
    for i in (1, 2, 3):
        rep.add(
            f"presentation.commute.A{i}As{i}",
            f"[A_{i}, A*_{i}] = 0",
            None,
            bracket(_A[i], _ASTAR[i]) == zero,
            f"[A_{i}, A*_{i}] != 0",
        )
    for i, j in permutations((1, 2, 3), 2):
        lhs = bracket(_A[i], bracket(_A[i], _ASTAR[j]))
        rep.add(
            f"presentation.serre.A{i}As{j}",
            f"[A_{i}, [A_{i}, A*_{j}]] = 4 A*_{j}",
            None,
            lhs == _ASTAR[j].scale(4),
            f"fails at (i, j) = ({i}, {j})",
        )
        lhs = bracket(_ASTAR[j], bracket(_ASTAR[j], _A[i]))
        rep.add(
            f"presentation.serre.As{j}A{i}",
            f"[A*_{j}, [A*_{j}, A_{i}]] = 4 A_{i}",
            None,
            lhs == _A[i].scale(4),
            f"fails at (j, i) = ({j}, {i})",
        )
    for h, i, j in permutations((1, 2, 3)):
        vals = [
            bracket(_A[h], bracket(_ASTAR[i], _A[j])),
            bracket(_ASTAR[h], bracket(_A[i], _ASTAR[j])),
            bracket(_A[j], bracket(_ASTAR[i], _A[h])),
            bracket(_ASTAR[j], bracket(_A[i], _ASTAR[h])),
        ]
        rep.add(
            f"presentation.triple.{h}{i}{j}",
            "[A_h, [A*_i, A_j]] = [A*_h, [A_i, A*_j]] = [A_j, [A*_i, A_h]] = [A*_j, [A_i, A*_h]]",
            None,
            all(v == vals[0] for v in vals[1:]),
            f"fails at (h, i, j) = ({h}, {i}, {j})",
        )
    return rep
