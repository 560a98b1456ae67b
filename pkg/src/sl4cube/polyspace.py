"""The graded polynomial module in four variables, with both bases and all operators.

Vectors are sparse maps from exponent profiles (r, s, t, u) to exact rationals,
tagged with the basis they are written in.  The monomial basis diagonalizes the
starred generators; the starred basis (built from the half-sum change of
variables) diagonalizes the plain generators.  Degree-N slices have dimension
C(N+3, 3).
"""

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact import binomial, factorial
from .linalg import Mat, kernel_dim, rank
from .sl4core import GeneratorId

MONOMIAL = "monomial"
STARRED = "starred"

# Signs of the degree-1 change of variables: row i gives the expansion of the
# i-th variable of one basis in the other, divided by 2.  The matrix is its own
# inverse up to that factor of 2.
_SIGNS = (
    (1, 1, 1, 1),
    (1, 1, -1, -1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
)

_VARS = ("x", "y", "z", "w")
_STARRED_VARS = ("x*", "y*", "z*", "w*")


class Profile(NamedTuple):
    r: int
    s: int
    t: int
    u: int

    @property
    def degree(self):
        return self.r + self.s + self.t + self.u

    @property
    def norm_sq(self):
        return factorial(self.r) * factorial(self.s) * factorial(self.t) * factorial(self.u)


def enumerate_profiles(N):
    """All degree-N profiles in lexicographic order; C(N+3, 3) of them."""
    out = []
    for r in range(N + 1):
        for s in range(N + 1 - r):
            for t in range(N + 1 - r - s):
                out.append(Profile(r, s, t, N - r - s - t))
    assert len(out) == binomial(N + 3, 3)
    return out


class PolyVec:
    """Sparse polynomial vector tagged with its basis; zero coefficients dropped."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in (MONOMIAL, STARRED):
            raise ValueError(f"unknown basis tag {basis!r}")
        self.basis = basis
        self.coeffs = {}
        if coeffs:
            for p, c in coeffs.items():
                if not isinstance(c, (int, Fraction)):
                    # the form is implemented bilinearly, valid for rationals only
                    raise TypeError(f"coefficients must be rational, got {type(c).__name__}")
                if c:
                    self.coeffs[Profile(*p)] = c

    @classmethod
    def unit(cls, basis, profile):
        return cls(basis, {Profile(*profile): 1})

    @classmethod
    def zero(cls, basis=MONOMIAL):
        return cls(basis)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Common degree of a homogeneous vector; None for 0, error if mixed."""
        degs = {p.degree for p in self.coeffs}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("vector is not homogeneous")
        return degs.pop()

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        self._require_same_basis(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return PolyVec(self.basis, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if not scalar:
            return PolyVec(self.basis)
        return PolyVec(self.basis, {p: scalar * c for p, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, PolyVec):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True  # the zero vector is basis-independent
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("PolyVec is unhashable")

    def _require_same_basis(self, other):
        if self.basis != other.basis:
            raise ValueError("mixing basis tags; convert first")

    def __repr__(self):
        return f"PolyVec({self.basis!r}, {dict(self.coeffs)!r})"


def _shift(p, dr, ds, dt, du):
    return Profile(p.r + dr, p.s + ds, p.t + dt, p.u + du)


# Off-diagonal action of the generators: for index k, a list of
# (coefficient position, profile shift).  The coefficient is the profile
# component at that position.
_FOUR_TERM = {
    1: ((0, (-1, 1, 0, 0)), (1, (1, -1, 0, 0)), (2, (0, 0, -1, 1)), (3, (0, 0, 1, -1))),
    2: ((0, (-1, 0, 1, 0)), (1, (0, -1, 0, 1)), (2, (1, 0, -1, 0)), (3, (0, 1, 0, -1))),
    3: ((0, (-1, 0, 0, 1)), (1, (0, -1, 1, 0)), (2, (0, 1, -1, 0)), (3, (1, 0, 0, -1))),
}


def weight(index, p):
    """Eigenvalue of the index-th diagonal generator on the profile p."""
    r, s, t, u = p
    if index == 1:
        return r + s - t - u
    if index == 2:
        return r - s + t - u
    return r - s - t + u


def act_generator(gid: GeneratorId, v: PolyVec) -> PolyVec:
    """Apply one of the six generators in the vector's own basis."""
    kind, index = gid
    four_term = (kind == "A") == (v.basis == MONOMIAL)
    out = {}
    if four_term:
        table = _FOUR_TERM[index]
        for p, c in v.coeffs.items():
            for pos, shift in table:
                k = p[pos]
                if k:
                    q = _shift(p, *shift)
                    nv = out.get(q, 0) + c * k
                    if nv:
                        out[q] = nv
                    else:
                        del out[q]
    else:
        for p, c in v.coeffs.items():
            w = weight(index, p)
            if w:
                out[p] = c * w
    return PolyVec(v.basis, out)


@lru_cache(maxsize=None)
def _expand_profile(profile):
    """Coefficients of a degree-1-substituted monomial in the opposite basis.

    Expands the product of the four linear half-sum forms raised to the profile
    powers; the overall 1/2^N is included.
    """
    poly = {Profile(0, 0, 0, 0): 1}
    unit_shifts = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    for var, power in enumerate(profile):
        signs = _SIGNS[var]
        for _ in range(power):
            nxt = {}
            for p, c in poly.items():
                for j in range(4):
                    q = _shift(p, *unit_shifts[j])
                    nv = nxt.get(q, 0) + c * signs[j]
                    if nv:
                        nxt[q] = nv
                    else:
                        del nxt[q]
            poly = nxt
    N = sum(profile)
    half = Fraction(1, 2**N)
    return {p: c * half for p, c in poly.items()}


def convert_basis(v: PolyVec, target) -> PolyVec:
    """Exact change of basis; converting twice returns the original."""
    if v.basis == target:
        return PolyVec(v.basis, dict(v.coeffs))
    out = PolyVec(target)
    for p, c in v.coeffs.items():
        out = out + c * PolyVec(target, _expand_profile(p))
    return out


def sigma(v: PolyVec) -> PolyVec:
    """The involution swapping the two bases coordinate-wise."""
    other = STARRED if v.basis == MONOMIAL else MONOMIAL
    return PolyVec(other, dict(v.coeffs))


def _var_slot(var):
    if var in _VARS:
        return _VARS.index(var), False
    if var in _STARRED_VARS:
        return _STARRED_VARS.index(var), True
    raise ValueError(f"unknown variable {var!r}")


def apply_D(var, v: PolyVec) -> PolyVec:
    """Partial derivative; lowers degree by one.

    A starred derivative acting on a monomial-tagged vector (or vice versa) is
    expanded as the half-sum combination of the four natural derivatives.
    """
    slot, starred = _var_slot(var)
    natural = (v.basis == STARRED) == starred
    if natural:
        out = {}
        down = [(-1 if i == slot else 0) for i in range(4)]
        for p, c in v.coeffs.items():
            k = p[slot]
            if k:
                q = _shift(p, *down)
                out[q] = out.get(q, 0) + c * k
        return PolyVec(v.basis, {p: c for p, c in out.items() if c})
    names = _VARS if v.basis == MONOMIAL else _STARRED_VARS
    out_vec = PolyVec(v.basis)
    for j in range(4):
        out_vec = out_vec + _SIGNS[slot][j] * apply_D(names[j], v)
    return Fraction(1, 2) * out_vec


def apply_M(var, v: PolyVec) -> PolyVec:
    """Multiplication by a variable; raises degree by one."""
    slot, starred = _var_slot(var)
    natural = (v.basis == STARRED) == starred
    if natural:
        up = [(1 if i == slot else 0) for i in range(4)]
        return PolyVec(v.basis, {_shift(p, *up): c for p, c in v.coeffs.items()})
    names = _VARS if v.basis == MONOMIAL else _STARRED_VARS
    out_vec = PolyVec(v.basis)
    for j in range(4):
        out_vec = out_vec + _SIGNS[slot][j] * apply_M(names[j], v)
    return Fraction(1, 2) * out_vec


_L_TABLE = {
    1: ((0, 1, (-1, -1, 0, 0)), (2, 3, (0, 0, -1, -1))),
    2: ((0, 2, (-1, 0, -1, 0)), (1, 3, (0, -1, 0, -1))),
    3: ((0, 3, (-1, 0, 0, -1)), (1, 2, (0, -1, -1, 0))),
}

_R_TABLE = {
    1: ((1, 1, 0, 0), (0, 0, 1, 1)),
    2: ((1, 0, 1, 0), (0, 1, 0, 1)),
    3: ((1, 0, 0, 1), (0, 1, 1, 0)),
}


def apply_L(i, v: PolyVec) -> PolyVec:
    """Lowering map: the difference of two second derivatives; degree -2."""
    (a1, a2, sh1), (b1, b2, sh2) = _L_TABLE[i]
    out = {}
    for p, c in v.coeffs.items():
        k1 = p[a1] * p[a2]
        if k1:
            q = _shift(p, *sh1)
            out[q] = out.get(q, 0) + c * k1
        k2 = p[b1] * p[b2]
        if k2:
            q = _shift(p, *sh2)
            out[q] = out.get(q, 0) - c * k2
    return PolyVec(v.basis, {p: c for p, c in out.items() if c})


def apply_R(i, v: PolyVec) -> PolyVec:
    """Raising map: multiplication by a difference of variable products; degree +2."""
    up, dn = _R_TABLE[i]
    out = {}
    for p, c in v.coeffs.items():
        q = _shift(p, *up)
        out[q] = out.get(q, 0) + c
        q = _shift(p, *dn)
        out[q] = out.get(q, 0) - c
    return PolyVec(v.basis, {p: c for p, c in out.items() if c})


def apply_Omega(v: PolyVec) -> PolyVec:
    """Degree-grading operator: multiplies each homogeneous term by its degree."""
    return PolyVec(v.basis, {p: c * p.degree for p, c in v.coeffs.items() if p.degree})


_C_TABLE = {
    1: ((0, 1, (-1, -1, 1, 1)), (2, 3, (1, 1, -1, -1))),
    2: ((0, 2, (-1, 1, -1, 1)), (1, 3, (1, -1, 1, -1))),
    3: ((0, 3, (-1, 1, 1, -1)), (1, 2, (1, -1, -1, 1))),
}


def apply_C(i, v: PolyVec) -> PolyVec:
    """Casimir-type operator, by its three-term action on basis vectors."""
    (a1, a2, sh_dn), (b1, b2, sh_up) = _C_TABLE[i]
    out = {}
    for p, c in v.coeffs.items():
        N = p.degree
        ka = p[a1] * p[a2]
        kb = p[b1] * p[b2]
        if ka:
            q = _shift(p, *sh_dn)
            out[q] = out.get(q, 0) + 2 * ka * c
        if kb:
            q = _shift(p, *sh_up)
            out[q] = out.get(q, 0) + 2 * kb * c
        diag = Fraction(N * (N + 2), 2) - 2 * ka - 2 * kb
        if diag:
            out[p] = out.get(p, 0) + diag * c
    return PolyVec(v.basis, {p: c for p, c in out.items() if c})


def apply_C_via_ladder(i, v: PolyVec) -> PolyVec:
    """Defining expression (Omega+2)^2/2 - L_i R_i - R_i L_i."""
    w = apply_Omega(v) + 2 * v
    w = apply_Omega(w) + 2 * w
    return Fraction(1, 2) * w - apply_L(i, apply_R(i, v)) - apply_R(i, apply_L(i, v))


def apply_C_via_generators(i, v: PolyVec, swapped=False) -> PolyVec:
    """Defining expression (4 X^2 + 4 Y^2 - (XY - YX)^2)/8 for the generator pair.

    For index i the pair (X, Y) is (A_j, A*_k) with (j, k) the cyclic successors
    of i, or (A*_j, A_k) when ``swapped``.
    """
    j = i % 3 + 1
    k = j % 3 + 1
    if not swapped:
        gx, gy = GeneratorId("A", j), GeneratorId("Astar", k)
    else:
        gx, gy = GeneratorId("Astar", j), GeneratorId("A", k)
    X = lambda w: act_generator(gx, w)
    Y = lambda w: act_generator(gy, w)
    comm = lambda w: X(Y(w)) - Y(X(w))
    out = 4 * X(X(v)) + 4 * Y(Y(v)) - comm(comm(v))
    return Fraction(1, 8) * out


def hermitian(v: PolyVec, w: PolyVec):
    """The form making each basis orthogonal with square norms r!s!t!u!.

    Both arguments are converted to the monomial basis; coefficients here are
    always rational, so the form reduces to a bilinear sum.
    """
    vm = convert_basis(v, MONOMIAL)
    wm = convert_basis(w, MONOMIAL)
    small, big = (vm.coeffs, wm.coeffs) if len(vm.coeffs) <= len(wm.coeffs) else (wm.coeffs, vm.coeffs)
    total = 0
    for p, c in small.items():
        d = big.get(p)
        if d:
            total += c * d * p.norm_sq
    return total


def norm_sq(v: PolyVec):
    return hermitian(v, v)


def apply_op_poly(coeffs, apply_op, v: PolyVec) -> PolyVec:
    """Evaluate a polynomial (dense coefficient list, low degree first) at an
    operator and apply it to v, by Horner's rule."""
    res = coeffs[-1] * v
    for c in reversed(coeffs[:-1]):
        res = apply_op(res) + c * v
    return res


_KERNEL_GEN_PAIRS = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def kernel_L_basis(i, N):
    """Orthogonal basis of Ker(L_i) on the degree-N slice.

    The (N+1)^2 vectors are Krawtchouk operator words in the two generators
    complementary to i, applied to x^N.  Raises if the count is off.
    """
    from . import specialfn  # deferred: specialfn builds vectors through this module

    a, b = _KERNEL_GEN_PAIRS[i]
    fam = specialfn.krawtchouk(N)
    ga = GeneratorId("A", a)
    gb = GeneratorId("A", b)
    seed = PolyVec.unit(MONOMIAL, (N, 0, 0, 0))
    basis = {}
    for j in range(N + 1):
        wj = apply_op_poly(fam.coeffs[j], lambda x: act_generator(ga, x), seed)
        for k in range(N + 1):
            basis[(j, k)] = apply_op_poly(fam.coeffs[k], lambda x: act_generator(gb, x), wj)
    if len(basis) != (N + 1) ** 2:
        raise ArithmeticError(f"kernel basis count {len(basis)} != {(N + 1) ** 2}")
    return basis


def graded_decomposition(i, N):
    """Split the degree-N slice into raised kernel summands.

    Returns [(l, {(j, k): vector})] for l = 0 .. floor(N/2).  Certifies the
    dimension count, mutual orthogonality of everything, and the Casimir
    eigenvalue (N-2l)(N-2l+2)/2 on each summand; any violation raises.
    """
    summands = []
    total = 0
    for ell in range(N // 2 + 1):
        base = kernel_L_basis(i, N - 2 * ell)
        vecs = {}
        for key, v in base.items():
            w = v
            for _ in range(ell):
                w = apply_R(i, w)
            vecs[key] = w
        summands.append((ell, vecs))
        total += len(vecs)
        lam = Fraction((N - 2 * ell) * (N - 2 * ell + 2), 2)
        for key, w in vecs.items():
            if apply_C(i, w) != lam * w:
                raise ArithmeticError(
                    f"C_{i} eigenvalue violation at N={N}, l={ell}, word={key}"
                )
    if total != binomial(N + 3, 3):
        raise ArithmeticError(f"graded dimensions sum to {total} != C({N}+3,3)")
    flat = [w for _, vecs in summands for w in vecs.values()]
    for p in range(len(flat)):
        for q in range(p + 1, len(flat)):
            if hermitian(flat[p], flat[q]) != 0:
                raise ArithmeticError(f"orthogonality failure at N={N}, i={i}, pair ({p},{q})")
    return summands


def weight_triple(p):
    return (weight(1, p), weight(2, p), weight(3, p))


def profile_from_weights(N, triple):
    """Inverse of the weight map; raises when the triple is not a weight of degree N."""
    lam, mu, nu = triple
    comps = (N + lam + mu + nu, N + lam - mu - nu, N - lam + mu - nu, N - lam - mu + nu)
    if any(c < 0 or c % 4 for c in comps):
        raise ValueError(f"{triple} is not a degree-{N} weight triple")
    return Profile(*(c // 4 for c in comps))


def in_weight_set(N, triple):
    """Membership test for the degree-N weight triples."""
    allowed = set(range(-N, N + 1, 2))
    lam, mu, nu = triple
    if not {lam, mu, nu} <= allowed:
        return False
    if (N + lam + mu + nu) % 4:
        return False
    return all(
        c >= 0
        for c in (N + lam + mu + nu, N + lam - mu - nu, N - lam + mu - nu, N - lam - mu + nu)
    )


def enumerate_weight_triples(N):
    """All weight triples of degree N, enumerated independently of profiles."""
    rng = range(-N, N + 1, 2)
    return [(a, b, c) for a in rng for b in rng for c in rng if in_weight_set(N, (a, b, c))]


def weight_decomposition(N, which):
    """Bijection from weight triples to profiles for one Cartan choice.

    ``which`` is "H" (starred basis diagonal) or "Hstar" (monomial basis
    diagonal); the coordinate formulas agree, only the interpretation differs.
    """
    if which not in ("H", "Hstar"):
        raise ValueError("which must be 'H' or 'Hstar'")
    out = {}
    for p in enumerate_profiles(N):
        trip = weight_triple(p)
        if not in_weight_set(N, trip):
            raise ArithmeticError(f"weight {trip} of {p} escapes the weight set")
        if trip in out:
            raise ArithmeticError(f"weight {trip} is hit twice")
        if profile_from_weights(N, trip) != p:
            raise ArithmeticError(f"inverse weight map fails at {p}")
        out[trip] = p
    if len(out) != len(enumerate_weight_triples(N)):
        raise ArithmeticError("weight map is not onto")
    return out


def operator_matrix(apply_fn, N, basis=MONOMIAL):
    """Dense matrix of a degree-preserving operator in lexicographic profile order."""
    profiles = enumerate_profiles(N)
    index = {p: k for k, p in enumerate(profiles)}
    cols = []
    for p in profiles:
        img = apply_fn(PolyVec.unit(basis, p))
        col = [0] * len(profiles)
        for q, c in img.items():
            col[index[q]] = c
        cols.append(col)
    return Mat([[cols[j][i] for j in range(len(profiles))] for i in range(len(profiles))])


def vector_coords(v: PolyVec, N):
    """Coordinates of a degree-N vector in lexicographic profile order."""
    profiles = enumerate_profiles(N)
    return [v.coeffs.get(p, 0) for p in profiles]


def eigenspace_dims(i, which, N):
    """Eigenvalue -> dimension for one generator on the degree-N slice.

    The operator matrix is taken in the monomial basis and each eigenspace
    dimension is the exact kernel dimension of (Op - lambda I).
    """
    kind = "A" if which == "A" else "Astar"
    gid = GeneratorId(kind, i)
    op = operator_matrix(lambda v: act_generator(gid, v), N, MONOMIAL)
    dims = {}
    eye = Mat.identity(op.nrows)
    for n in range(N + 1):
        lam = N - 2 * n
        dims[lam] = kernel_dim((op - eye.scale(lam)).rows)
    return dims


def a_word_basis(N, starred=False):
    """The basis {A_1^s A_2^t A_3^u x^N} (or its starred mirror) of the degree-N slice.

    Raises on rank deficiency.
    """
    kind = "Astar" if starred else "A"
    seed = PolyVec.unit(STARRED if starred else MONOMIAL, (N, 0, 0, 0))
    gens = [GeneratorId(kind, k) for k in (1, 2, 3)]
    words = {}
    for s in range(N + 1):
        for t in range(N + 1 - s):
            for u in range(N + 1 - s - t):
                v = seed
                for g, power in zip(gens, (s, t, u)):
                    for _ in range(power):
                        v = act_generator(g, v)
                words[(s, t, u)] = v
    rows = [vector_coords(v, N) for v in words.values()]
    if rank(rows) != binomial(N + 3, 3):
        raise ArithmeticError(f"operator words fail to span the degree-{N} slice")
    return words


def pvee_word(N, stu, starred=False):
    """Apply the six-variable transition polynomial, with the three commuting
    generators substituted in its second argument slot, to x^N (or the starred
    mirror to x*^N)."""
    from .exact import pochhammer

    s, t, u = stu
    kind = "Astar" if starred else "A"
    seed = PolyVec.unit(STARRED if starred else MONOMIAL, (N, 0, 0, 0))
    gens = [GeneratorId(kind, k) for k in (1, 2, 3)]

    def gen_images(v):
        return [act_generator(g, v) for g in gens]

    def mu_op(k, v):
        g1, g2, g3 = gen_images(v)
        if k == 1:
            w = N * v + g1 - g2 - g3
        elif k == 2:
            w = N * v - g1 + g2 - g3
        else:
            w = N * v - g1 - g2 + g3
        return Fraction(1, 4) * w

    def falling_op(k, m, v):
        # (p I - mu'_k) for p = 0 .. m-1, i.e. the rising factorial (-mu'_k)_m
        for p in range(m):
            v = p * v - mu_op(k, v)
        return v

    total = PolyVec.zero(seed.basis)
    for a in range(N + 1):
        for b in range(N + 1 - a):
            pl1 = pochhammer(-s, a + b)
            if not pl1:
                continue
            for c in range(N + 1 - a - b):
                for d in range(N + 1 - a - b - c):
                    pl2 = pochhammer(-t, c + d)
                    if not pl2:
                        continue
                    for e in range(N + 1 - a - b - c - d):
                        for f in range(N + 1 - a - b - c - d - e):
                            pl3 = pochhammer(-u, e + f)
                            if not pl3:
                                continue
                            m = a + b + c + d + e + f
                            scal = Fraction(pl1 * pl2 * pl3 * 2**m, pochhammer(-N, m))
                            scal /= (
                                factorial(a) * factorial(b) * factorial(c)
                                * factorial(d) * factorial(e) * factorial(f)
                            )
                            vec = falling_op(1, c + e, seed)
                            vec = falling_op(2, a + f, vec)
                            vec = falling_op(3, b + d, vec)
                            total = total + scal * vec
    return total
