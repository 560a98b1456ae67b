"""Triple tensors over the cube's standard module and the automorphism-fixed subspace.

Concrete vectors live in the 8^N-dimensional triple tensor space, stored
sparsely with packed 3N-bit keys.  The fixed subspace has dimension C(N+3, 3);
its elements are stored abstractly as profile-indexed coordinate vectors in
either the orbit-sum dual basis or the spectral dual basis, and the abstract
operator tables are validated against the concrete slot-wise action.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .cube import cube, triple_of_profile
from .exact import factorial
from .polyspace import Profile, enumerate_profiles

TILDE = "tilde"  # coordinates against the duals of the orbit sums
STAR_TILDE = "star_tilde"  # coordinates against the duals of the spectral sums


def pack(N, x, y, z):
    return (x << (2 * N)) | (y << N) | z


def unpack(N, key):
    mask = (1 << N) - 1
    return (key >> (2 * N)) & mask, (key >> N) & mask, key & mask


class TripleTensor:
    """Sparse exact vector in the triple tensor space."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N, coeffs=None):
        self.N = N
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis(cls, N, x, y, z):
        return cls(N, {pack(N, x, y, z): 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                del out[k]
        return TripleTensor(self.N, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if not scalar:
            return TripleTensor(self.N)
        return TripleTensor(self.N, {k: scalar * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, TripleTensor):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("TripleTensor is unhashable")

    def is_zero(self):
        return not self.coeffs

    def inner(self, other):
        small, big = (self.coeffs, other.coeffs) if len(self.coeffs) <= len(other.coeffs) else (other.coeffs, self.coeffs)
        return sum(v * big[k] for k, v in small.items() if k in big)

    def norm_sq(self):
        return sum(v * v for v in self.coeffs.values())

    def __repr__(self):
        return f"TripleTensor(N={self.N}, terms={len(self.coeffs)})"


def profile_of(N, x, y, z):
    """Coordinate agreement pattern of a vertex triple."""
    r = s = t = u = 0
    for k in range(N):
        xb, yb, zb = (x >> k) & 1, (y >> k) & 1, (z >> k) & 1
        if xb == yb == zb:
            r += 1
        elif yb == zb:
            s += 1
        elif zb == xb:
            t += 1
        else:
            u += 1
    return Profile(r, s, t, u)


@lru_cache(maxsize=None)
def _keys_by_profile(N):
    out = {p: [] for p in enumerate_profiles(N)}
    size = 1 << N
    for x in range(size):
        for y in range(size):
            for z in range(size):
                out[profile_of(N, x, y, z)].append(pack(N, x, y, z))
    return out


def b_vector(N, p) -> TripleTensor:
    """Sum of all basis triples with the given profile."""
    keys = _keys_by_profile(N)[Profile(*p)]
    return TripleTensor(N, {k: 1 for k in keys})


def b_support_size(N, p):
    r, s, t, u = p
    return Fraction(factorial(N) * 2**N, factorial(r) * factorial(s) * factorial(t) * factorial(u))


def q_vector(N, trip) -> TripleTensor:
    """Spectral triple sum for a distance triple; zero exactly off the valid set."""
    h, i, j = trip
    Ks = cube(N).idempotent_numerators()
    size = 1 << N
    scale = Fraction(1, 4**N)
    out = {}
    Kh, Ki, Kj = Ks[h], Ks[i], Ks[j]
    for a in range(size):
        ra = Kh.rows[a]
        for b in range(size):
            rb = Ki.rows[b]
            for c in range(size):
                rc = Kj.rows[c]
                total = sum(ra[x] * rb[x] * rc[x] for x in range(size))
                if total:
                    out[pack(N, a, b, c)] = total * scale
    return TripleTensor(N, out)


def bstar_vector(N, p) -> TripleTensor:
    return q_vector(N, triple_of_profile(Profile(*p)))


class FixVec:
    """Fixed-subspace vector in dual-basis coordinates.

    Tag ``tilde`` means coordinates against the duals of the orbit sums (where
    the plain operators act by profile shifts); ``star_tilde`` against the
    duals of the spectral sums (where the starred operators shift).
    """

    __slots__ = ("N", "tag", "coeffs")

    def __init__(self, N, tag, coeffs=None):
        if tag not in (TILDE, STAR_TILDE):
            raise ValueError(f"unknown tag {tag!r}")
        self.N = N
        self.tag = tag
        self.coeffs = {}
        for p, c in (coeffs or {}).items():
            if c:
                self.coeffs[Profile(*p)] = c

    @classmethod
    def unit(cls, N, tag, profile):
        return cls(N, tag, {Profile(*profile): 1})

    def __add__(self, other):
        if self.tag != other.tag:
            raise ValueError("mixing coordinate tags")
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            nv = out.get(p, 0) + c
            if nv:
                out[p] = nv
            else:
                del out[p]
        return FixVec(self.N, self.tag, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if not scalar:
            return FixVec(self.N, self.tag)
        return FixVec(self.N, self.tag, {p: scalar * c for p, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, FixVec):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.N == other.N and self.tag == other.tag and self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("FixVec is unhashable")

    def is_zero(self):
        return not self.coeffs

    def lift(self) -> TripleTensor:
        """Concrete tensor represented by these coordinates."""
        out = TripleTensor(self.N)
        base = b_vector if self.tag == TILDE else bstar_vector
        for p, c in self.coeffs.items():
            w = Fraction(p.norm_sq, factorial(self.N) * 2**self.N)
            out = out + (c * w) * base(self.N, p)
        return out

    def inner(self, other):
        """Form value via the certified norms of the underlying orthogonal sums."""
        if self.tag != other.tag:
            raise ValueError("mixed-tag inner products need the concrete lift")
        total = 0
        for p, c in self.coeffs.items():
            d = other.coeffs.get(p)
            if d:
                # ||dual basis vector||^2 = (r!s!t!u!)^2/(N! 2^N)^2 * N! 2^N / r!s!t!u!
                total += c * d * Fraction(p.norm_sq, factorial(self.N) * 2**self.N)
        return total

    def __repr__(self):
        return f"FixVec({self.tag!r}, {dict(self.coeffs)!r})"


_SHIFT_TABLE = {
    1: ((0, (-1, 1, 0, 0)), (1, (1, -1, 0, 0)), (2, (0, 0, -1, 1)), (3, (0, 0, 1, -1))),
    2: ((0, (-1, 0, 1, 0)), (1, (0, -1, 0, 1)), (2, (1, 0, -1, 0)), (3, (0, 1, 0, -1))),
    3: ((0, (-1, 0, 0, 1)), (1, (0, -1, 1, 0)), (2, (0, 1, -1, 0)), (3, (1, 0, 0, -1))),
}


def _diag_weight(k, p):
    r, s, t, u = p
    if k == 1:
        return r + s - t - u
    if k == 2:
        return r - s + t - u
    return r - s - t + u


def act_abstract(k, kind, v: FixVec) -> FixVec:
    """Stated coordinate action of the six operators on the fixed subspace."""
    shifts = (kind == "A") == (v.tag == TILDE)
    out = {}
    if shifts:
        for p, c in v.coeffs.items():
            for pos, sh in _SHIFT_TABLE[k]:
                w = p[pos]
                if w:
                    q = Profile(p[0] + sh[0], p[1] + sh[1], p[2] + sh[2], p[3] + sh[3])
                    nv = out.get(q, 0) + c * w
                    if nv:
                        out[q] = nv
                    else:
                        del out[q]
    else:
        for p, c in v.coeffs.items():
            w = _diag_weight(k, p)
            if w:
                out[p] = c * w
    return FixVec(v.N, v.tag, out)


def act_concrete(k, kind, t: TripleTensor) -> TripleTensor:
    """Slot-wise action on concrete tensors: the brute-force oracle."""
    N = t.N
    out = {}
    if kind == "A":
        shift_bits = 2 * N if k == 1 else (N if k == 2 else 0)
        for key, c in t.coeffs.items():
            for bit in range(N):
                nk = key ^ (1 << (bit + shift_bits))
                nv = out.get(nk, 0) + c
                if nv:
                    out[nk] = nv
                else:
                    del out[nk]
    else:
        pc = cube(N).pc
        for key, c in t.coeffs.items():
            x, y, z = unpack(N, key)
            if k == 1:
                d = pc[y ^ z]
            elif k == 2:
                d = pc[z ^ x]
            else:
                d = pc[x ^ y]
            w = N - 2 * d
            if w:
                out[key] = c * w
    return TripleTensor(N, out)


def permute_bits(v, perm):
    out = 0
    for i, target in enumerate(perm):
        if (v >> i) & 1:
            out |= 1 << target
    return out


def apply_symmetry(N, t: TripleTensor, perm, flip) -> TripleTensor:
    """Apply the cube symmetry (coordinate permutation then sign flips) diagonally."""
    out = {}
    for key, c in t.coeffs.items():
        x, y, z = unpack(N, key)
        x = permute_bits(x, perm) ^ flip
        y = permute_bits(y, perm) ^ flip
        z = permute_bits(z, perm) ^ flip
        out[pack(N, x, y, z)] = c
    return TripleTensor(N, out)


def symmetry_generators(N):
    """Adjacent transpositions plus one sign flip: a generating set of the full group."""
    gens = []
    for k in range(N - 1):
        perm = list(range(N))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        gens.append((tuple(perm), 0))
    if N >= 1:
        gens.append((tuple(range(N)), 1))
    return gens


def full_group(N):
    return [(perm, flip) for perm in permutations(range(N)) for flip in range(1 << N)]


def fix_membership(t: TripleTensor) -> bool:
    """Invariance under a generating set of the automorphism group."""
    return all(apply_symmetry(t.N, t, perm, flip) == t for perm, flip in symmetry_generators(t.N))
