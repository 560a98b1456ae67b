"""The binary hypercube, its spectral decomposition, and the subconstituent algebra.

Vertices are bitmasks; bit k set means coordinate k equals -1 and the distance
between two vertices is the popcount of their xor.  For a fixed basepoint, the
pairs (x, y) are partitioned into cells by the triple
(dist(x, y), dist(x, base), dist(y, base)); the subconstituent algebra is
exactly the space of matrices constant on those cells, which makes products and
inner products cheap to compute exactly once that fact has been certified.
"""

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact import binomial
from .linalg import Mat


class TripleIndex(NamedTuple):
    h: int
    i: int
    j: int


def valid_triples(N):
    """The distance triples realizable in the N-cube, in lexicographic order."""
    out = []
    for h in range(N + 1):
        for i in range(N + 1):
            for j in range(N + 1):
                if (h + i + j) % 2 == 0 and h + i + j <= 2 * N and h <= i + j and i <= j + h and j <= h + i:
                    out.append(TripleIndex(h, i, j))
    return out


def triple_of_profile(p):
    r, s, t, u = p
    return TripleIndex(t + u, u + s, s + t)


def profile_of_triple(N, trip):
    from .polyspace import Profile

    h, i, j = trip
    return Profile((2 * N - h - i - j) // 2, (i + j - h) // 2, (j + h - i) // 2, (h + i - j) // 2)


DEFAULT_N_CAP = 8  # standard-module work is dense in 2^N; guard against accidents


class Cube:
    """The hypercube on 2^N vertices with its exact spectral data."""

    def __init__(self, N, cap=DEFAULT_N_CAP):
        if N > cap:
            raise ValueError(f"N={N} exceeds the standard-module cap {cap}; pass cap=N to override")
        self.N = N
        self.size = 1 << N
        self.pc = [bin(v).count("1") for v in range(self.size)]
        self._K = None

    def dist(self, x, y):
        return self.pc[x ^ y]

    def neighbors(self, x):
        return [x ^ (1 << k) for k in range(self.N)]

    def theta(self, i):
        return self.N - 2 * i

    def adjacency(self):
        return Mat(
            [[1 if self.pc[x ^ y] == 1 else 0 for y in range(self.size)] for x in range(self.size)]
        )

    def adjacency_apply(self, vec):
        """Apply the adjacency map to a sparse vertex -> scalar vector."""
        out = {}
        for x, c in vec.items():
            for y in self.neighbors(x):
                v = out.get(y, 0) + c
                if v:
                    out[y] = v
                else:
                    del out[y]
        return out

    def distance_op(self, i):
        return Mat(
            [[1 if self.pc[x ^ y] == i else 0 for y in range(self.size)] for x in range(self.size)]
        )

    def idempotent_numerators(self):
        """Integer matrices K_i with E_i = K_i / 2^N, via the Lagrange product.

        Exactness of the rescaling is asserted entrywise.
        """
        if self._K is not None:
            return self._K
        A = self.adjacency()
        eye = Mat.identity(self.size)
        Ks = []
        for i in range(self.N + 1):
            M = eye
            den = 1
            for j in range(self.N + 1):
                if j == i:
                    continue
                M = (A - eye.scale(self.theta(j))) @ M
                den *= self.theta(i) - self.theta(j)
            rows = []
            for row in M.rows:
                new = []
                for e in row:
                    q = Fraction(e * 2**self.N, den)
                    if q.denominator != 1:
                        raise ArithmeticError("idempotent numerator fails to be integral")
                    new.append(int(q))
                rows.append(new)
            Ks.append(Mat(rows))
        self._K = Ks
        return Ks

    def primitive_idempotent(self, i):
        return self.idempotent_numerators()[i].scale(Fraction(1, 2**self.N))


@lru_cache(maxsize=None)
def cube(N) -> Cube:
    return Cube(N)


class TElem:
    """Element of the subconstituent algebra, stored by its value on each cell.

    Valid only for matrices constant on the distance-triple cells; that the
    algebra consists exactly of those matrices is certified by the cube suite.
    """

    __slots__ = ("alg", "coords")

    def __init__(self, alg, coords):
        self.alg = alg
        self.coords = {TripleIndex(*k): v for k, v in coords.items() if v}

    def __add__(self, other):
        out = dict(self.coords)
        for k, v in other.coords.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                del out[k]
        return TElem(self.alg, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if not scalar:
            return TElem(self.alg, {})
        return TElem(self.alg, {k: scalar * v for k, v in self.coords.items()})

    def __matmul__(self, other):
        """Exact product, evaluated entrywise at one representative pair per cell."""
        alg = self.alg
        lc = self.coords.get
        rc = other.coords.get
        pc = alg.cube.pc
        d = alg.dist_to_base
        out = {}
        for trip, (x, y) in alg.cell_reps.items():
            dx = d[x]
            total = 0
            for k in range(alg.cube.size):
                a = lc((pc[x ^ k], dx, d[k]))
                if a:
                    b = rc((pc[k ^ y], d[k], d[y]))
                    if b:
                        total += a * b
            if total:
                out[trip] = total
        return TElem(alg, out)

    def __eq__(self, other):
        return isinstance(other, TElem) and self.coords == other.coords

    def __hash__(self):
        raise TypeError("TElem is unhashable")

    def is_zero(self):
        return not self.coords

    def entry(self, x, y):
        alg = self.alg
        return self.coords.get(
            (alg.cube.pc[x ^ y], alg.dist_to_base[x], alg.dist_to_base[y]), 0
        )

    def matrix(self):
        n = self.alg.cube.size
        return Mat([[self.entry(x, y) for y in range(n)] for x in range(n)])

    def transpose(self):
        return TElem(self.alg, {(h, j, i): v for (h, i, j), v in self.coords.items()})

    def inner(self, other):
        """Entrywise form; the cell indicator basis is orthogonal with norms the cell sizes."""
        total = 0
        sizes = self.alg.cell_sizes
        small, big = (self.coords, other.coords) if len(self.coords) <= len(other.coords) else (other.coords, self.coords)
        for k, v in small.items():
            w = big.get(k)
            if w:
                total += v * w * sizes[k]
        return total

    def norm_sq(self):
        return self.inner(self)

    def coord_vector(self):
        """Coordinates against the cell indicator basis, in lexicographic triple order."""
        return [self.coords.get(t, 0) for t in self.alg.triples]

    def int_scaled(self):
        """(integer-coordinate multiple, denominator): self = multiple / denominator."""
        from math import lcm

        den = 1
        for v in self.coords.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        if den == 1:
            return TElem(self.alg, {k: int(v) for k, v in self.coords.items()}), 1
        return TElem(self.alg, {k: int(v * den) for k, v in self.coords.items()}), den

    def __repr__(self):
        return f"TElem({dict(self.coords)!r})"


class TAlgebra:
    """Subconstituent algebra of the N-cube at a basepoint."""

    def __init__(self, N, basepoint=0):
        self.cube = cube(N)
        if not 0 <= basepoint < self.cube.size:
            raise ValueError(f"basepoint {basepoint} is not a vertex of the {N}-cube")
        self.N = N
        self.basepoint = basepoint
        self.dist_to_base = [self.cube.dist(x, basepoint) for x in range(self.cube.size)]
        self.triples = valid_triples(N)
        self.cell_reps = {t: self._make_rep(t) for t in self.triples}
        self.cell_sizes = self._count_cells()
        self._e_basis = None
        self._e_norms = None

    # -- cell geometry -------------------------------------------------

    def cell_of(self, x, y):
        return TripleIndex(self.cube.pc[x ^ y], self.dist_to_base[x], self.dist_to_base[y])

    def _make_rep(self, trip):
        h, i, j = trip
        a = (i + j - h) // 2
        x_pat = (1 << i) - 1
        y_pat = ((1 << a) - 1) | (((1 << (j - a)) - 1) << i)
        x = x_pat ^ self.basepoint
        y = y_pat ^ self.basepoint
        assert self.cell_of(x, y) == trip
        return (x, y)

    def _count_cells(self):
        sizes = {t: 0 for t in self.triples}
        for x in range(self.cube.size):
            for y in range(self.cube.size):
                sizes[self.cell_of(x, y)] += 1
        return sizes

    # -- distinguished elements -----------------------------------------

    def zero(self):
        return TElem(self, {})

    def identity(self):
        return TElem(self, {(0, i, i): 1 for i in range(self.N + 1) if (0, i, i) in self.cell_sizes})

    def adjacency_elem(self):
        return TElem(self, {t: 1 for t in self.triples if t.h == 1})

    def dual_adjacency_elem(self):
        return TElem(
            self,
            {(0, i, i): self.cube.theta(i) for i in range(self.N + 1) if (0, i, i) in self.cell_sizes},
        )

    def distance_elem(self, h):
        return TElem(self, {t: 1 for t in self.triples if t.h == h})

    def dual_idempotent_elem(self, i):
        return TElem(self, {(0, i, i): 1} if (0, i, i) in self.cell_sizes else {})

    def dual_distance_diag(self, h):
        """Diagonal entries of the h-th dual distance operator: column of K_h at the basepoint."""
        K = self.cube.idempotent_numerators()[h]
        return [K[x, self.basepoint] for x in range(self.cube.size)]

    def dual_distance_elem(self, h):
        diag = self.dual_distance_diag(h)
        out = {}
        for i in range(self.N + 1):
            if (0, i, i) in self.cell_sizes:
                x, _ = self.cell_reps[TripleIndex(0, i, i)]
                out[(0, i, i)] = diag[x]
        return TElem(self, out)

    def idempotent_elem_raw(self, i):
        """2^N E_i as an integer-coordinate algebra element."""
        K = self.cube.idempotent_numerators()[i]
        out = {}
        for trip, (x, y) in self.cell_reps.items():
            v = K[x, y]
            if v:
                out[trip] = v
        return TElem(self, out)

    def idempotent_elem(self, i):
        return Fraction(1, 2**self.N) * self.idempotent_elem_raw(i)

    # -- matrix-level counterparts (small N oracles) ---------------------

    def dual_adjacency(self):
        return Mat.diag([self.cube.theta(self.dist_to_base[x]) for x in range(self.cube.size)])

    def dual_idempotent(self, i):
        return Mat.diag([1 if self.dist_to_base[x] == i else 0 for x in range(self.cube.size)])

    def dual_distance_op(self, h):
        return Mat.diag(self.dual_distance_diag(h))

    # -- the two bases ----------------------------------------------------

    def estar_basis(self):
        """E*_i A_h E*_j for valid (h, i, j): the cell indicator matrices."""
        return {t: TElem(self, {t: 1}) for t in self.triples}

    def e_basis(self):
        """E_i A*_h E_j for valid (h, i, j), through the integer idempotent numerators."""
        if self._e_basis is not None:
            return self._e_basis
        Ks = self.cube.idempotent_numerators()
        size = self.cube.size
        scale = Fraction(1, 4**self.N)
        diags = {h: self.dual_distance_diag(h) for h in range(self.N + 1)}
        out = {}
        for trip in self.triples:
            h, i, j = trip
            Ki, Kj, dh = Ks[i], Ks[j], diags[h]
            coords = {}
            for target, (x, y) in self.cell_reps.items():
                kirow = Ki.rows[x]
                total = 0
                for k in range(size):
                    a = kirow[k]
                    if a:
                        b = dh[k]
                        if b:
                            c = Kj.rows[k][y]
                            if c:
                                total += a * b * c
                if total:
                    coords[target] = total * scale
            out[trip] = TElem(self, coords)
        self._e_basis = out
        return out

    def e_basis_product_matrix(self, trip):
        """Direct dense product E_i A*_h E_j; the small-N oracle for e_basis."""
        h, i, j = trip
        Ei = self.cube.primitive_idempotent(i)
        Ej = self.cube.primitive_idempotent(j)
        diag = self.dual_distance_diag(h)
        scaled = Mat([[diag[x] * e for e in Ej.rows[x]] for x in range(self.cube.size)])
        return Ei @ scaled

    def t_algebra_basis(self, which):
        if which == "Estar_A_Estar":
            return self.estar_basis()
        if which == "E_Astar_E":
            return self.e_basis()
        raise ValueError(f"unknown basis {which!r}")

    def from_matrix(self, M):
        """Interpret an exact matrix as an algebra element; raises when the matrix
        is not constant on the cells, i.e. lies outside the algebra."""
        coords = {}
        for x in range(self.cube.size):
            row = M.rows[x]
            for y in range(self.cube.size):
                t = self.cell_of(x, y)
                v = row[y]
                if t in coords:
                    if coords[t] != v:
                        raise ArithmeticError(f"matrix is not constant on cell {t}")
                else:
                    coords[t] = v
        return TElem(self, coords)

    def e_coords(self, B):
        """Coordinates of B against the orthogonal E_i A*_h E_j basis."""
        eb = self.e_basis()
        if self._e_norms is None:
            self._e_norms = {t: eb[t].norm_sq() for t in self.triples}
        return {t: B.inner(eb[t]) / self._e_norms[t] for t in self.triples}

    # -- center and Wedderburn decomposition ------------------------------

    def phi_central(self):
        """The central element (4 A^2 + 4 A*^2 - (A A* - A* A)^2) / 8."""
        A = self.adjacency_elem()
        As = self.dual_adjacency_elem()
        comm = A @ As - As @ A
        out = 4 * (A @ A) + 4 * (As @ As) - comm @ comm
        return Fraction(1, 8) * out

    def phi_eigenvalues(self):
        return [Fraction((self.N - 2 * l) * (self.N - 2 * l + 2), 2) for l in range(self.N // 2 + 1)]

    def phi_idempotents(self):
        """Lagrange idempotents of the central element; certified to resolve it."""
        phi = self.phi_central()
        eigs = self.phi_eigenvalues()
        ident = self.identity()
        out = []
        for l, lam in enumerate(eigs):
            M = ident
            den = Fraction(1)
            for m, mu in enumerate(eigs):
                if m == l:
                    continue
                M = M @ (phi - mu * ident)
                den *= lam - mu
            M = (1 / den) * M
            if M.is_zero():
                raise ArithmeticError(f"central idempotent {l} vanishes")
            out.append(M)
        resolved = self.zero()
        weighted = self.zero()
        for lam, p in zip(eigs, out):
            if not (p @ p == p):
                raise ArithmeticError("central idempotent fails to be idempotent")
            resolved = resolved + p
            weighted = weighted + lam * p
        if resolved != ident or weighted != phi:
            raise ArithmeticError("central idempotents fail to resolve the identity or phi")
        return out

    def wedderburn(self):
        """Bases of the two-sided ideals cut out by the central idempotents.

        Returns [(l, eigenvalue, [TElem basis])]; dimensions (N - 2l + 1)^2.
        """
        from .linalg import independent_rows

        idems = self.phi_idempotents()
        eigs = self.phi_eigenvalues()
        basis = self.estar_basis()
        out = []
        total = 0
        for l, (lam, p) in enumerate(zip(eigs, idems)):
            scaled, _ = p.int_scaled()  # spans are scale independent, integers multiply fast
            images = [scaled @ b for b in basis.values()]
            rows = [im.coord_vector() for im in images]
            keep = independent_rows(rows)
            ideal = [images[k] for k in keep]
            expect = (self.N - 2 * l + 1) ** 2
            if len(ideal) != expect:
                raise ArithmeticError(
                    f"ideal {l} has dimension {len(ideal)}, expected {expect}"
                )
            total += len(ideal)
            out.append((l, lam, ideal))
        if total != binomial(self.N + 3, 3):
            raise ArithmeticError("ideal dimensions fail to sum to dim T")
        return out

    # -- module structure on the algebra ----------------------------------

    def module_op(self, kind, k):
        """The six module operators, diagonal on one of the two bases.

        Plain kind scales the E-basis coordinates by an eigenvalue read off the
        triple; starred kind scales the cell coordinates.
        """
        N = self.N
        if kind == "Astar":
            slot = {1: 0, 2: 2, 3: 1}[k]  # theta*_h, theta*_j, theta*_i

            def op(B):
                return TElem(
                    self, {t: (N - 2 * t[slot]) * v for t, v in B.coords.items()}
                )

            return op
        if kind == "A":
            slot = {1: 0, 2: 1, 3: 2}[k]  # theta_h, theta_i, theta_j
            eb = self.e_basis()

            def op(B):
                coords = self.e_coords(B)
                out = self.zero()
                for t, c in coords.items():
                    if c:
                        out = out + (c * (N - 2 * t[slot])) * eb[t]
                return out

            return op
        raise ValueError(f"unknown kind {kind!r}")

    def t_module_ops(self):
        """All six module operators, keyed by (kind, index)."""
        return {(kind, k): self.module_op(kind, k) for kind in ("A", "Astar") for k in (1, 2, 3)}

    def s_antiautomorphism(self, B):
        """The basis-swapping antiautomorphism: cell indicator (h, i, j) goes to
        the E-basis element (h, j, i)."""
        eb = self.e_basis()
        out = self.zero()
        for (h, i, j), v in B.coords.items():
            out = out + v * eb[TripleIndex(h, j, i)]
        return out

    def transpose_dagger(self, B):
        return B.transpose()


@lru_cache(maxsize=None)
def t_algebra(N, basepoint=0) -> TAlgebra:
    return TAlgebra(N, basepoint)


def _frac_str(v):
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def telem_csv_rows(elem):
    """Triple-ordered CSV rows (h, i, j, value) with values as num/den strings."""
    rows = [("h", "i", "j", "value")]
    for t in elem.alg.triples:
        rows.append((str(t.h), str(t.i), str(t.j), _frac_str(elem.coords.get(t, 0))))
    return rows


def matrix_csv_rows(M):
    """Row-major CSV rows for an exact matrix, with num/den entries."""
    rows = [tuple(["row"] + [str(j) for j in range(M.ncols)])]
    for i, row in enumerate(M.rows):
        rows.append(tuple([str(i)] + [_frac_str(v) for v in row]))
    return rows


def intersection_number(N, h, i, j):
    """|Gamma_i(x) cap Gamma_j(y)| for a pair at distance h, counted directly."""
    c = cube(N)
    x = 0
    y = (1 << h) - 1
    return sum(1 for z in range(c.size) if c.pc[z] == i and c.pc[z ^ y] == j)
